#include <doctest.h>

#include <fstream>
#include <sstream>

#include "orbitgf/scenario.hpp"

using namespace orbitgf;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(ORBITGF_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE_BEGIN("scenario");

TEST_CASE("builtin catalogue") {
  auto names = builtin_names();
  CHECK(!names.empty());
  for (const auto& n : names) CHECK(builtin_scenario(n).name == n);
  CHECK_THROWS_AS(builtin_scenario("nope"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("no-such-file-or-builtin"), ScenarioError);
}

TEST_CASE("builtin gl3-subregular-real carries the reference fields") {
  Scenario sc = builtin_scenario("gl3-subregular-real");
  CHECK(sc.mode == ScenarioMode::ExplicitFields);
  CHECK(sc.variables == std::vector<std::string>{"a", "b", "c", "d"});
  REQUIRE(sc.fields.size() == 4);
  // spot-check v1 = c d/dc - d d/dd
  CHECK(sc.fields[0].components[2] == MultiPoly::monomial(sc.variables, {0, 0, 1, 0}, Rational(1)));
  CHECK(sc.fields[0].components[3] ==
        MultiPoly::monomial(sc.variables, {0, 0, 0, 1}, Rational(-1)));
}

TEST_CASE("builtin regular-baseline-6 is six variables and no fields") {
  Scenario sc = builtin_scenario("regular-baseline-6");
  CHECK(sc.variables.size() == 6);
  CHECK(sc.fields.empty());
}

TEST_CASE("scenario file round trip via the fixture") {
  Scenario sc = parse_scenario(fixture_path("two-vars-staircase.json"));
  CHECK(sc.name == "two-vars-staircase");
  CHECK(sc.max_order == 9);
  CHECK(sc.window == 3);
  REQUIRE(sc.fields.size() == 1);
  Report rep = run(sc);
  CHECK(rep.dims == std::vector<long long>{1, 1, 2, 2, 3, 3, 4, 4, 5, 5});
  REQUIRE(rep.gf.has_value());
  CHECK(rep.gf->den == std::vector<std::pair<int, int>>{{2, 1}});
  // increments 1,0,1,0,... put a pole of equal order at t = -1
  CHECK(rep.ddeg_error.has_value());
  CHECK(!rep.ddeg_value.has_value());
}

TEST_CASE("malformed input reports the offending key") {
  CHECK_THROWS_WITH_AS(parse_scenario_text("{not json", "test"),
                       doctest::Contains("malformed JSON"), ScenarioError);
  CHECK_THROWS_WITH_AS(parse_scenario_text(R"({"schema":"orbitgf-scenario/1"})", "test"),
                       doctest::Contains("name"), ScenarioError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_text(
          R"({"schema":"orbitgf-scenario/1","name":"x","mode":"frobnicate"})", "test"),
      doctest::Contains("mode"), ScenarioError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_text(
          R"({"schema":"orbitgf-scenario/1","name":"x","mode":"explicit-fields","variables":["x"],)"
          R"("fields":[{"components":[[{"c":"1.5","e":[0]}]]}]})",
          "test"),
      doctest::Contains("fields[0].components[0]"), ScenarioError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_text(R"({"schema":"orbitgf-scenario/9","name":"x","mode":"product"})",
                          "test"),
      doctest::Contains("schema"), ScenarioError);
}

TEST_CASE("run is deterministic byte for byte") {
  Scenario sc = builtin_scenario("gl3-subregular-real");
  sc.max_order = 6;
  sc.params_overridden = true;
  std::string a = emit_report(run(sc), "json");
  std::string b = emit_report(run(sc), "json");
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("builtin expected blocks are enforced by run") {
  for (const auto& name : builtin_names()) {
    Scenario sc = builtin_scenario(name);
    CAPTURE(name);
    CHECK_NOTHROW(run(sc));
  }
}

TEST_CASE("expected mismatch raises an internal check error") {
  Scenario sc = builtin_scenario("regular-baseline-2");
  REQUIRE(sc.expected.dims.has_value());
  (*sc.expected.dims)[3] += 1;
  CHECK_THROWS_AS(run(sc), InternalCheckError);
}

TEST_CASE("report json round-trips through parse") {
  Scenario sc = builtin_scenario("gl2-semisimple");
  Report rep = run(sc);
  std::string text = emit_report(rep, "json");
  Report back = parse_report(text);
  CHECK(emit_report(back, "json") == text);
}

TEST_CASE("csv emission") {
  Report rep;
  rep.scenario_name = "dims-only";
  rep.dims = {1, 2, 4};
  std::string csv = emit_report(rep, "csv");
  CHECK(csv == "order,dim\n0,1\n1,2\n2,4\n");
  CHECK_THROWS_AS(emit_report(rep, "xml"), ScenarioError);
}

TEST_CASE("gf encoding in reports") {
  Scenario sc = builtin_scenario("regular-baseline-6");
  Report rep = run(sc);
  std::string text = emit_report(rep, "json");
  CHECK(text.find("\"den\": [\n      [\n        1,\n        6\n      ]\n    ]") !=
        std::string::npos);
  CHECK(rep.ddim_value == 6);
  CHECK(rep.ddeg_value == Rational(1));
}

TEST_CASE("connectivity warning gating") {
  Scenario sc = builtin_scenario("regular-baseline-1");
  Report with = run(sc);
  bool found = false;
  for (const auto& w : with.warnings) found = found || w == kConnectivityWarning;
  CHECK(found);

  sc.connectivity_asserted = true;
  sc.params_overridden = true;
  Report without = run(sc);
  for (const auto& w : without.warnings) CHECK(w != kConnectivityWarning);
}

TEST_CASE("product runs agree with the realified direct computation") {
  Scenario prod = builtin_scenario("product-subregular-square");
  Report rp = run(prod);
  Scenario direct = builtin_scenario("gl3-subregular-complex");
  Report rd = run(direct);
  CHECK(rp.dims == rd.dims);
  CHECK(rp.increments == rd.increments);
}

TEST_CASE("molien-only run wires invariant dims as increments") {
  Scenario sc = builtin_scenario("molien-gl2-adjoint");
  Report rep = run(sc);
  CHECK(rep.increments == std::vector<long long>{1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6});
  CHECK(rep.dims == std::vector<long long>{1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36});
  REQUIRE(rep.gf.has_value());
  CHECK(rep.gf->den == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
}

TEST_CASE("auto-tangential scenario from a file matches the builtin") {
  Scenario from_file = parse_scenario(fixture_path("gl2-semisimple-file.json"));
  REQUIRE(from_file.action.has_value());
  REQUIRE(from_file.slice.has_value());
  CHECK(from_file.slice->dim() == 2);
  Report file_rep = run(from_file);
  Report builtin_rep = run(builtin_scenario("gl2-semisimple"));
  CHECK(file_rep.dims == builtin_rep.dims);
  CHECK(file_rep.gf == builtin_rep.gf);
  CHECK(file_rep.molien_bound_ok == builtin_rep.molien_bound_ok);
}

TEST_CASE("molien group presets in scenario files") {
  Scenario sc = parse_scenario_text(R"({
    "schema": "orbitgf-scenario/1",
    "name": "preset-demo",
    "mode": "molien-only",
    "max_order": 10,
    "molien": {"group": "gl2", "weights": "adjoint"}
  })",
                                    "inline");
  REQUIRE(sc.molien.has_value());
  CHECK(sc.molien->group.torus_rank == 2);
  CHECK(sc.molien->group.weyl_group_order == 2);
  Report rep = run(sc);
  CHECK(rep.increments == std::vector<long long>{1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6});

  Scenario prod = parse_scenario_text(R"({
    "schema": "orbitgf-scenario/1",
    "name": "preset-product",
    "mode": "molien-only",
    "max_order": 6,
    "molien": {"group": "gl1xgl2", "weights": "adjoint"}
  })",
                                      "inline");
  REQUIRE(prod.molien.has_value());
  CHECK(prod.molien->group.torus_rank == 3);
  CHECK(run(prod).increments == std::vector<long long>{1, 2, 4, 6, 9, 12, 16});

  CHECK_THROWS_WITH_AS(parse_scenario_text(R"({
    "schema": "orbitgf-scenario/1",
    "name": "x",
    "mode": "molien-only",
    "molien": {"group": "so5", "weights": "adjoint"}
  })",
                                           "inline"),
                       doctest::Contains("molien.group"), ScenarioError);
}

TEST_CASE("complex auto-tangential scenario loads from json and realifies") {
  Scenario sc = parse_scenario(fixture_path("complex-scaling.json"));
  CHECK(sc.complex);
  REQUIRE(sc.complex_scenario.has_value());
  CHECK(sc.complex_scenario->ambient_dim() == 1);

  ValidationReport v = run_validate(sc);
  CHECK(v.all_pass());

  // scaling kills no distribution at the origin: every order is constrained away
  Report rep = run(sc);
  CHECK(rep.dims == std::vector<long long>{0, 0, 0, 0, 0});
  REQUIRE(rep.gf.has_value());
  CHECK(rep.gf->is_zero());
}

TEST_CASE("auto-tangential stabilization diagnostic stays quiet on the slodowy scenario") {
  Scenario sc = builtin_scenario("gl3-subregular-slodowy");
  sc.max_order = 4;
  sc.params_overridden = true;
  Report rep = run(sc);
  for (const auto& w : rep.warnings) CHECK(w.find("not stabilized") == std::string::npos);
}

TEST_CASE("stabilization diagnostic fires when the degree bound undergenerates") {
  Scenario sc = builtin_scenario("gl3-subregular-slodowy");
  sc.max_order = 4;
  sc.degree_bound = 0;  // constant phi misses every tangential field
  sc.params_overridden = true;
  Report rep = run(sc);
  bool warned = false;
  for (const auto& w : rep.warnings) warned = warned || w.find("not stabilized") != std::string::npos;
  CHECK(warned);
  // the reported dims come from the larger bound
  CHECK(rep.dims == std::vector<long long>{1, 2, 4, 6, 9});
}

TEST_SUITE_END();
