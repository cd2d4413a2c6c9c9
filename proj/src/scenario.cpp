#include "orbitgf/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace orbitgf {

using Json = nlohmann::ordered_json;

const char* const kConnectivityWarning =
    "connectivity not asserted: the computed dimensions are an upper bound for the invariant "
    "space (canonical embedding only)";

namespace {

constexpr int kDefaultMaxDenDegree = 12;

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw ScenarioError("scenario field '" + path + "': " + message);
}

const Json& require_key(const Json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "." + key, "missing");
  return *it;
}

Rational json_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error(path, e.what());
    }
  }
  schema_error(path, "expected an integer or a \"p/q\" string");
}

GaussianRational json_gaussian(const Json& j, const std::string& path) {
  if (j.is_object()) {
    GaussianRational g{Rational(0), Rational(0)};
    if (j.contains("re")) g.re = json_rational(j.at("re"), path + ".re");
    if (j.contains("im")) g.im = json_rational(j.at("im"), path + ".im");
    return g;
  }
  return GaussianRational{json_rational(j, path), Rational(0)};
}

Exponents json_exponents(const Json& j, const std::string& path, int expected_len,
                         bool allow_negative) {
  if (!j.is_array()) schema_error(path, "expected an exponent array");
  Exponents e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& v = j[i];
    if (!v.is_number_integer()) schema_error(path, "exponents must be integers");
    int x = v.get<int>();
    if (!allow_negative && x < 0) schema_error(path, "negative exponent");
    e.push_back(x);
  }
  if (expected_len >= 0 && static_cast<int>(e.size()) != expected_len)
    schema_error(path, "expected " + std::to_string(expected_len) + " exponents, got " +
                           std::to_string(e.size()));
  return e;
}

MultiPoly json_poly(const Json& j, const std::vector<std::string>& vars,
                    const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected a term list");
  MultiPoly p(vars);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = path + "[" + std::to_string(t) + "]";
    const Json& term = j[t];
    p.add_term(json_exponents(require_key(term, tp, "e"), tp + ".e",
                              static_cast<int>(vars.size()), false),
               json_rational(require_key(term, tp, "c"), tp + ".c"));
  }
  return p;
}

ComplexPoly json_complex_poly(const Json& j, const std::vector<std::string>& vars,
                              const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected a term list");
  ComplexPoly p = ComplexPoly::zero(vars);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = path + "[" + std::to_string(t) + "]";
    const Json& term = j[t];
    Exponents e = json_exponents(require_key(term, tp, "e"), tp + ".e",
                                 static_cast<int>(vars.size()), false);
    GaussianRational c = json_gaussian(require_key(term, tp, "c"), tp + ".c");
    p.re.add_term(e, c.re);
    p.im.add_term(e, c.im);
  }
  return p;
}

PolyVectorField json_field(const Json& j, const std::vector<std::string>& vars,
                           const std::string& path) {
  const Json& comps = require_key(j, path, "components");
  if (!comps.is_array() || comps.size() != vars.size())
    schema_error(path + ".components", "expected one component per variable");
  std::vector<MultiPoly> components;
  for (std::size_t i = 0; i < comps.size(); ++i)
    components.push_back(json_poly(comps[i], vars, path + ".components[" + std::to_string(i) + "]"));
  return PolyVectorField(vars, std::move(components));
}

ComplexVectorField json_complex_field(const Json& j, const std::vector<std::string>& vars,
                                      const std::string& path) {
  const Json& comps = require_key(j, path, "components");
  if (!comps.is_array() || comps.size() != vars.size())
    schema_error(path + ".components", "expected one component per variable");
  ComplexVectorField f;
  f.variables = vars;
  for (std::size_t i = 0; i < comps.size(); ++i)
    f.components.push_back(
        json_complex_poly(comps[i], vars, path + ".components[" + std::to_string(i) + "]"));
  return f;
}

QMatrix json_matrix(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = j[r];
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!row.is_array()) schema_error(rp, "expected a row array");
    std::vector<Rational> out;
    for (std::size_t c = 0; c < row.size(); ++c)
      out.push_back(json_rational(row[c], rp + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(out));
  }
  return QMatrix::from_dense(rows);
}

std::vector<std::string> json_string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) schema_error(path, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<Exponents> json_weight_list(const Json& j, const std::string& path, int rank) {
  if (!j.is_array()) schema_error(path, "expected an array of weight vectors");
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(json_exponents(j[i], path + "[" + std::to_string(i) + "]", rank, true));
  return out;
}

RationalGF json_gf(const Json& j, const std::string& path) {
  RationalGF gf;
  const Json& num = require_key(j, path, "num");
  if (!num.is_array()) schema_error(path + ".num", "expected a coefficient array");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < num.size(); ++i)
    coeffs.push_back(json_rational(num[i], path + ".num[" + std::to_string(i) + "]"));
  gf.num = UniPoly(std::move(coeffs));
  const Json& den = require_key(j, path, "den");
  if (!den.is_array()) schema_error(path + ".den", "expected an array of [k, multiplicity]");
  for (std::size_t i = 0; i < den.size(); ++i) {
    const Json& pair = den[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      schema_error(path + ".den[" + std::to_string(i) + "]", "expected [k, multiplicity]");
    gf.den.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  std::sort(gf.den.begin(), gf.den.end());
  return gf;
}

Json gf_to_json(const RationalGF& gf) {
  Json out;
  Json num = Json::array();
  for (int i = 0; i <= gf.num.degree(); ++i) {
    Rational c = gf.num.coeff(i);
    if (c.is_integer() && c.num().fits_slong_p())
      num.push_back(c.num().get_si());
    else
      num.push_back(c.str());
  }
  if (gf.num.is_zero()) num.push_back(0);
  out["num"] = std::move(num);
  Json den = Json::array();
  for (const auto& [k, m] : gf.den) den.push_back(Json::array({k, m}));
  out["den"] = std::move(den);
  return out;
}

Json field_to_json(const PolyVectorField& f) {
  Json comps = Json::array();
  for (const auto& p : f.components) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
      Json term;
      if (c.is_integer() && c.num().fits_slong_p())
        term["c"] = c.num().get_si();
      else
        term["c"] = c.str();
      term["e"] = e;
      terms.push_back(std::move(term));
    }
    comps.push_back(std::move(terms));
  }
  Json out;
  out["components"] = std::move(comps);
  return out;
}

}  // namespace

std::string mode_name(ScenarioMode m) {
  switch (m) {
    case ScenarioMode::ExplicitFields: return "explicit-fields";
    case ScenarioMode::AutoTangential: return "auto-tangential";
    case ScenarioMode::MolienOnly: return "molien-only";
    case ScenarioMode::Product: return "product";
  }
  return "?";
}

namespace {

std::string json_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

// "gl2" -> {2}, "gl1xgl2" -> {1, 2}
std::vector<int> parse_gl_preset(const std::string& name) {
  std::vector<int> blocks;
  std::size_t pos = 0;
  while (pos < name.size()) {
    if (name.compare(pos, 2, "gl") != 0) schema_error("molien.group", "unknown preset " + name);
    pos += 2;
    std::size_t end = pos;
    while (end < name.size() && std::isdigit(static_cast<unsigned char>(name[end]))) ++end;
    if (end == pos) schema_error("molien.group", "unknown preset " + name);
    blocks.push_back(std::stoi(name.substr(pos, end - pos)));
    pos = end;
    if (pos < name.size()) {
      if (name[pos] != 'x' || pos + 1 == name.size())
        schema_error("molien.group", "unknown preset " + name);
      ++pos;
    }
  }
  if (blocks.empty()) schema_error("molien.group", "unknown preset " + name);
  return blocks;
}

Scenario parse_scenario_object(const Json& j);

}  // namespace

Scenario parse_scenario_text(const std::string& json_text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ScenarioError("malformed JSON in " + origin + ": " + e.what());
  }
  if (!j.is_object()) throw ScenarioError(origin + ": scenario must be a JSON object");
  try {
    return parse_scenario_object(j);
  } catch (const Json::exception& e) {
    throw ScenarioError("scenario schema error in " + origin + ": " + e.what());
  }
}

namespace {

Scenario parse_scenario_object(const Json& j) {
  const std::string schema = json_string(require_key(j, "scenario", "schema"), "schema");
  if (schema != "orbitgf-scenario/1")
    schema_error("schema", "unsupported schema \"" + schema + "\"");

  Scenario sc;
  sc.name = json_string(require_key(j, "scenario", "name"), "name");
  const std::string mode = json_string(require_key(j, "scenario", "mode"), "mode");
  if (mode == "explicit-fields")
    sc.mode = ScenarioMode::ExplicitFields;
  else if (mode == "auto-tangential")
    sc.mode = ScenarioMode::AutoTangential;
  else if (mode == "molien-only")
    sc.mode = ScenarioMode::MolienOnly;
  else if (mode == "product")
    sc.mode = ScenarioMode::Product;
  else
    schema_error("mode", "unknown mode \"" + mode + "\"");

  if (j.contains("complex")) {
    if (!j["complex"].is_boolean()) schema_error("complex", "expected a boolean");
    sc.complex = j["complex"].get<bool>();
  }
  if (j.contains("max_order")) sc.max_order = j["max_order"].get<int>();
  if (j.contains("degree_bound")) sc.degree_bound = j["degree_bound"].get<int>();
  if (j.contains("window")) sc.window = j["window"].get<int>();
  if (j.contains("connectivity_asserted"))
    sc.connectivity_asserted = j["connectivity_asserted"].get<bool>();
  if (sc.max_order < 0) schema_error("max_order", "must be >= 0");
  if (sc.degree_bound < 0) schema_error("degree_bound", "must be >= 0");
  if (sc.window < 0) schema_error("window", "must be >= 0");

  if (j.contains("variables")) sc.variables = json_string_list(j["variables"], "variables");

  if (sc.mode == ScenarioMode::ExplicitFields) {
    const Json& fields = require_key(j, "scenario", "fields");
    if (!fields.is_array()) schema_error("fields", "expected an array of fields");
    if (sc.variables.empty() && !fields.empty())
      schema_error("variables", "required for explicit-fields scenarios");
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const std::string fp = "fields[" + std::to_string(i) + "]";
      if (sc.complex)
        sc.complex_fields.push_back(json_complex_field(fields[i], sc.variables, fp));
      else
        sc.fields.push_back(json_field(fields[i], sc.variables, fp));
    }
    if (sc.variables.empty()) schema_error("variables", "required for explicit-fields scenarios");
  } else if (sc.mode == ScenarioMode::AutoTangential) {
    const Json& ja = require_key(j, "scenario", "action");
    const Json& js = require_key(j, "scenario", "slice");
    std::vector<std::string> avars = json_string_list(require_key(ja, "action", "variables"),
                                                      "action.variables");
    const Json& gens = require_key(ja, "action", "generators");
    if (!gens.is_array()) schema_error("action.generators", "expected an array");
    std::vector<std::string> svars = json_string_list(
        require_key(js, "slice", "slice_variables"), "slice.slice_variables");
    if (sc.complex) {
      ComplexScenario cs;
      cs.variables = avars;
      for (std::size_t i = 0; i < gens.size(); ++i)
        cs.generators.push_back(json_complex_field(gens[i], avars,
                                                   "action.generators[" + std::to_string(i) + "]"));
      const Json& base = require_key(js, "slice", "base");
      if (!base.is_array() || base.size() != avars.size())
        schema_error("slice.base", "expected one entry per ambient variable");
      for (std::size_t i = 0; i < base.size(); ++i)
        cs.base.push_back(json_gaussian(base[i], "slice.base[" + std::to_string(i) + "]"));
      const Json& basis = require_key(js, "slice", "basis");
      // complex matrices carry {re, im} dense parts or plain rational rows
      QMatrix re = json_matrix(basis.is_object() ? require_key(basis, "slice.basis", "re") : basis,
                               "slice.basis");
      QMatrix im = basis.is_object() && basis.contains("im")
                       ? json_matrix(basis["im"], "slice.basis.im")
                       : QMatrix(re.rows(), re.cols());
      cs.basis = ComplexMatrix{std::move(re), std::move(im)};
      cs.slice_variables = svars;
      complete_complex_slice(cs);
      sc.complex_scenario = std::move(cs);
      sc.variables = avars;
    } else {
      LieAction action;
      action.variables = avars;
      for (std::size_t i = 0; i < gens.size(); ++i)
        action.generators.push_back(
            json_field(gens[i], avars, "action.generators[" + std::to_string(i) + "]"));
      action.validate();
      const Json& base = require_key(js, "slice", "base");
      if (!base.is_array() || base.size() != avars.size())
        schema_error("slice.base", "expected one entry per ambient variable");
      std::vector<Rational> base_v;
      for (std::size_t i = 0; i < base.size(); ++i)
        base_v.push_back(json_rational(base[i], "slice.base[" + std::to_string(i) + "]"));
      QMatrix basis = json_matrix(require_key(js, "slice", "basis"), "slice.basis");
      if (basis.rows() != static_cast<int>(avars.size()))
        schema_error("slice.basis", "row count must equal the ambient dimension");
      sc.slice = make_slice(std::move(base_v), basis, svars);
      sc.action = std::move(action);
      sc.variables = avars;
    }
  } else if (sc.mode == ScenarioMode::Product) {
    sc.product_refs = json_string_list(require_key(j, "scenario", "product"), "product");
    if (sc.product_refs.size() != 2)
      schema_error("product", "expected exactly two scenario references");
  }

  if (j.contains("molien")) {
    const Json& jm = j["molien"];
    MolienAttachment m;
    std::vector<int> preset_blocks;
    if (jm.contains("group")) {
      // named preset: "gl2", "gl3", "gl1xgl2", ...
      preset_blocks = parse_gl_preset(json_string(jm["group"], "molien.group"));
      m.group = gl_product_group(preset_blocks);
    } else {
      m.group.torus_rank = require_key(jm, "molien", "torus_rank").get<int>();
      m.group.weyl_group_order = require_key(jm, "molien", "weyl_order").get<long long>();
      m.group.roots = json_weight_list(require_key(jm, "molien", "roots"), "molien.roots",
                                       m.group.torus_rank);
    }
    const Json& jw = require_key(jm, "molien", "weights");
    if (jw.is_string()) {
      if (jw.get<std::string>() != "adjoint")
        schema_error("molien.weights", "the only named weight set is \"adjoint\"");
      if (preset_blocks.empty())
        schema_error("molien.weights", "\"adjoint\" requires a named group preset");
      m.weights = gl_product_adjoint_weights(preset_blocks);
    } else {
      m.weights.torus_rank = m.group.torus_rank;
      m.weights.weights = json_weight_list(jw, "molien.weights", m.group.torus_rank);
    }
    try {
      m.group.validate();
    } catch (const std::invalid_argument& e) {
      schema_error("molien", e.what());
    }
    sc.molien = std::move(m);
  }
  if (sc.mode == ScenarioMode::MolienOnly && !sc.molien)
    schema_error("molien", "required for molien-only scenarios");

  if (j.contains("expected")) {
    const Json& je = j["expected"];
    if (je.contains("dims")) {
      std::vector<long long> dims;
      for (const auto& v : je["dims"]) dims.push_back(v.get<long long>());
      sc.expected.dims = std::move(dims);
    }
    if (je.contains("gf")) sc.expected.gf = json_gf(je["gf"], "expected.gf");
  }
  return sc;
}

}  // namespace

Scenario parse_scenario(const std::string& path_or_builtin) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(path_or_builtin, ec)) {
    std::ifstream in(path_or_builtin);
    if (!in) throw ScenarioError("cannot open scenario file: " + path_or_builtin);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path_or_builtin);
  }
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), path_or_builtin) != names.end())
    return builtin_scenario(path_or_builtin);
  throw ScenarioError("no such scenario file or builtin: " + path_or_builtin);
}

// ---- builtins ----

namespace {

const std::vector<std::string> kSubregularVars = {"a", "b", "c", "d"};

MultiPoly sub_poly(std::initializer_list<std::pair<Exponents, Rational>> terms) {
  MultiPoly p(kSubregularVars);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

// the four generating fields of the subregular slice module, in the slice
// coordinates (a, b, c, d)
std::vector<PolyVectorField> subregular_fields() {
  MultiPoly zero(kSubregularVars);
  PolyVectorField v1(kSubregularVars,
                     {zero, zero, sub_poly({{{0, 0, 1, 0}, Rational(1)}}),
                      sub_poly({{{0, 0, 0, 1}, Rational(-1)}})});
  PolyVectorField v2(kSubregularVars,
                     {zero, zero, sub_poly({{{1, 0, 1, 0}, Rational(-1)}}),
                      sub_poly({{{1, 0, 0, 1}, Rational(1)}})});
  PolyVectorField v3(kSubregularVars,
                     {sub_poly({{{0, 0, 0, 1}, Rational(1, 2)}}),
                      sub_poly({{{1, 0, 0, 1}, Rational(-3)}}),
                      sub_poly({{{2, 0, 0, 0}, Rational(9)}, {{0, 1, 0, 0}, Rational(-1)}}),
                      zero});
  PolyVectorField v4(kSubregularVars,
                     {sub_poly({{{0, 0, 1, 0}, Rational(-1, 2)}}),
                      sub_poly({{{1, 0, 1, 0}, Rational(3)}}), zero,
                      sub_poly({{{0, 1, 0, 0}, Rational(1)}, {{2, 0, 0, 0}, Rational(-9)}})});
  return {v1, v2, v3, v4};
}

std::vector<ComplexVectorField> subregular_fields_complex() {
  std::vector<ComplexVectorField> out;
  for (const auto& f : subregular_fields()) {
    ComplexVectorField cf;
    cf.variables = f.variables;
    for (const auto& p : f.components) cf.components.push_back(ComplexPoly{p, MultiPoly(f.variables)});
    out.push_back(std::move(cf));
  }
  return out;
}

// slice through E12 in the traceless 3x3 matrices, in the coordinates of
// make_adjoint_sl(3): (A11, A12, A13, A21, A22, A23, A31, A32)
AffineSlice subregular_slodowy_slice() {
  std::vector<Rational> base(8, Rational(0));
  base[1] = Rational(1);  // A12 = 1
  QMatrix basis(8, 4);
  basis.set(0, 0, Rational(1));  // a: A11
  basis.set(4, 0, Rational(1));  //    A22
  basis.set(3, 1, Rational(1));  // b: A21
  basis.set(5, 2, Rational(1));  // c: A23
  basis.set(6, 3, Rational(1));  // d: A31
  return make_slice(std::move(base), basis, kSubregularVars);
}

std::vector<long long> binomial_dims(int nvars, int max_order) {
  std::vector<long long> out;
  for (int n = 0; n <= max_order; ++n) {
    long long v = 1;
    for (int i = 1; i <= nvars; ++i) v = v * (n + i) / i;
    out.push_back(v);
  }
  return out;
}

MolienAttachment molien_gl_adjoint(int n) {
  return MolienAttachment{gl_product_group({n}), gl_product_adjoint_weights({n})};
}

Scenario make_subregular_real() {
  Scenario sc;
  sc.name = "gl3-subregular-real";
  sc.mode = ScenarioMode::ExplicitFields;
  sc.variables = kSubregularVars;
  sc.fields = subregular_fields();
  sc.max_order = 10;
  sc.expected.dims = {1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36};
  sc.expected.gf = RationalGF{UniPoly::one(), {{1, 1}, {2, 1}}};
  return sc;
}

Scenario make_subregular_slodowy() {
  Scenario sc;
  sc.name = "gl3-subregular-slodowy";
  sc.mode = ScenarioMode::AutoTangential;
  sc.action = make_adjoint_sl(3);
  sc.variables = sc.action->variables;
  sc.slice = subregular_slodowy_slice();
  sc.max_order = 6;
  sc.degree_bound = 2;
  sc.expected.dims = {1, 2, 4, 6, 9, 12, 16};
  return sc;
}

Scenario make_subregular_complex() {
  Scenario sc;
  sc.name = "gl3-subregular-complex";
  sc.mode = ScenarioMode::ExplicitFields;
  sc.variables = kSubregularVars;
  sc.complex = true;
  sc.complex_fields = subregular_fields_complex();
  sc.max_order = 6;
  sc.expected.dims = {1, 3, 8, 16, 30, 50, 80};
  return sc;
}

Scenario make_regular_baseline(int nvars) {
  Scenario sc;
  sc.name = "regular-baseline-" + std::to_string(nvars);
  sc.mode = ScenarioMode::ExplicitFields;
  for (int i = 1; i <= nvars; ++i) sc.variables.push_back("t" + std::to_string(i));
  sc.max_order = 8;
  sc.expected.dims = binomial_dims(nvars, sc.max_order);
  sc.expected.gf = RationalGF{UniPoly::one(), {{1, nvars}}};
  return sc;
}

Scenario make_gl2_semisimple() {
  Scenario sc;
  sc.name = "gl2-semisimple";
  sc.mode = ScenarioMode::AutoTangential;
  sc.action = make_adjoint_gl(2);
  sc.variables = sc.action->variables;
  std::vector<Rational> x0 = {Rational(1), Rational(0), Rational(0), Rational(-1)};
  sc.slice = slice_construct(*sc.action, x0);
  sc.max_order = 8;
  MolienAttachment m;
  m.group.torus_rank = 2;
  m.group.weyl_group_order = 1;
  m.weights.torus_rank = 2;
  m.weights.weights = {Exponents{0, 0}, Exponents{0, 0}};
  sc.molien = std::move(m);
  sc.expected.dims = {1, 3, 6, 10, 15, 21, 28, 36, 45};
  sc.expected.gf = RationalGF{UniPoly::one(), {{1, 2}}};
  return sc;
}

Scenario make_molien_gl2() {
  Scenario sc;
  sc.name = "molien-gl2-adjoint";
  sc.mode = ScenarioMode::MolienOnly;
  sc.molien = molien_gl_adjoint(2);
  sc.max_order = 10;
  sc.expected.dims = {1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36};
  return sc;
}

Scenario make_molien_gl3() {
  Scenario sc;
  sc.name = "molien-gl3-adjoint";
  sc.mode = ScenarioMode::MolienOnly;
  sc.molien = molien_gl_adjoint(3);
  sc.max_order = 10;
  sc.expected.dims = {1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67};
  return sc;
}

Scenario make_molien_gl3_realified() {
  Scenario sc;
  sc.name = "molien-gl3-adjoint-realified";
  sc.mode = ScenarioMode::MolienOnly;
  sc.molien = molien_gl_adjoint(3);
  sc.complex = true;
  sc.max_order = 16;
  sc.expected.gf = RationalGF{UniPoly::one(), {{1, 2}, {2, 2}, {3, 2}}};
  return sc;
}

Scenario make_molien_gl1xgl2_realified() {
  Scenario sc;
  sc.name = "molien-gl1xgl2-realified";
  sc.mode = ScenarioMode::MolienOnly;
  sc.complex = true;
  sc.max_order = 16;
  sc.molien = MolienAttachment{gl_product_group({1, 2}), gl_product_adjoint_weights({1, 2})};
  sc.expected.gf = RationalGF{UniPoly::one(), {{1, 4}, {2, 2}}};
  return sc;
}

Scenario make_product_subregular_square() {
  Scenario sc;
  sc.name = "product-subregular-square";
  sc.mode = ScenarioMode::Product;
  sc.product_refs = {"gl3-subregular-real", "gl3-subregular-real"};
  sc.max_order = 6;
  sc.expected.dims = {1, 3, 8, 16, 30, 50, 80};
  return sc;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"gl3-subregular-real",  "gl3-subregular-slodowy",
          "gl3-subregular-complex", "regular-baseline-1",
          "regular-baseline-2",   "regular-baseline-3",
          "regular-baseline-4",   "regular-baseline-5",
          "regular-baseline-6",   "gl2-semisimple",
          "molien-gl2-adjoint",   "molien-gl3-adjoint",
          "molien-gl3-adjoint-realified", "molien-gl1xgl2-realified",
          "product-subregular-square"};
}

Scenario builtin_scenario(const std::string& name) {
  if (name == "gl3-subregular-real") return make_subregular_real();
  if (name == "gl3-subregular-slodowy") return make_subregular_slodowy();
  if (name == "gl3-subregular-complex") return make_subregular_complex();
  if (name.rfind("regular-baseline-", 0) == 0) {
    int n = std::stoi(name.substr(std::string("regular-baseline-").size()));
    if (n >= 1 && n <= 6) return make_regular_baseline(n);
  }
  if (name == "gl2-semisimple") return make_gl2_semisimple();
  if (name == "molien-gl2-adjoint") return make_molien_gl2();
  if (name == "molien-gl3-adjoint") return make_molien_gl3();
  if (name == "molien-gl3-adjoint-realified") return make_molien_gl3_realified();
  if (name == "molien-gl1xgl2-realified") return make_molien_gl1xgl2_realified();
  if (name == "product-subregular-square") return make_product_subregular_square();
  throw ScenarioError("unknown builtin scenario: " + name);
}

// ---- pipeline ----

namespace {

struct KernelInputs {
  std::vector<PolyVectorField> fields;
  int num_vars = 0;
};

KernelInputs explicit_inputs(const Scenario& sc) {
  KernelInputs in;
  if (sc.complex) {
    in.num_vars = 2 * static_cast<int>(sc.variables.size());
    for (const auto& cf : sc.complex_fields) {
      auto [v, iv] = realify_field(cf);
      in.fields.push_back(std::move(v));
      in.fields.push_back(std::move(iv));
    }
  } else {
    in.num_vars = static_cast<int>(sc.variables.size());
    in.fields = sc.fields;
  }
  return in;
}

std::pair<LieAction, AffineSlice> tangential_inputs(const Scenario& sc) {
  if (sc.complex) {
    if (!sc.complex_scenario)
      throw ScenarioError("auto-tangential complex scenario is missing its action/slice data");
    return realify(*sc.complex_scenario);
  }
  if (!sc.action || !sc.slice)
    throw ScenarioError("auto-tangential scenario requires an action and a slice");
  return {*sc.action, *sc.slice};
}

void check_expected(const Scenario& sc, const Report& rep) {
  if (sc.params_overridden || sc.expected.empty()) return;
  if (sc.expected.dims) {
    const auto& want = *sc.expected.dims;
    const std::size_t len = std::min(want.size(), rep.dims.size());
    for (std::size_t i = 0; i < len; ++i)
      if (want[i] != rep.dims[i])
        throw InternalCheckError("scenario '" + sc.name + "': dimension at order " +
                                 std::to_string(i) + " is " + std::to_string(rep.dims[i]) +
                                 ", expected " + std::to_string(want[i]));
  }
  if (sc.expected.gf && rep.gf) {
    if (!(*sc.expected.gf == *rep.gf))
      throw InternalCheckError("scenario '" + sc.name + "': generating function " +
                               rep.gf->str() + " does not match expected " +
                               sc.expected.gf->str());
  }
}

void series_stage(const Scenario& sc, Report& rep) {
  rep.increments = increments(DimSeries(rep.dims));
  if (!rep.gf) {
    try {
      rep.gf = reconstruct_gf(rep.increments, kDefaultMaxDenDegree, sc.window);
    } catch (const ReconstructError& e) {
      rep.gf_error = e.what();
    }
  }
  if (rep.gf) {
    DdimResult d = ddim(*rep.gf);
    rep.ddim_value = d.value;
    rep.ddim_clamped = d.clamped;
    try {
      rep.ddeg_value = ddeg(*rep.gf);
    } catch (const DominanceError& e) {
      rep.ddeg_error = e.what();
    }
  }
}

void molien_stage(const Scenario& sc, Report& rep) {
  if (!sc.molien) return;
  DimSeries inv = sc.complex
                      ? realified_invariant_dims(sc.molien->group, sc.molien->weights, sc.max_order)
                      : invariant_dims(sc.molien->group, sc.molien->weights, sc.max_order);
  bool ok = true;
  const std::size_t len = std::min(inv.values.size(), rep.increments.size());
  for (std::size_t i = 0; i < len; ++i)
    if (rep.increments[i] > inv.values[i]) ok = false;
  rep.molien_bound_ok = ok;
}

}  // namespace

ValidationReport run_validate(const Scenario& sc) {
  if (sc.mode != ScenarioMode::AutoTangential)
    throw ScenarioError("validate requires an auto-tangential scenario");
  if (sc.complex) {
    if (!sc.complex_scenario)
      throw ScenarioError("auto-tangential complex scenario is missing its action/slice data");
    return complex_slice_validate(*sc.complex_scenario);
  }
  auto [action, slice] = tangential_inputs(sc);
  return slice_validate(action, slice);
}

std::vector<PolyVectorField> run_tangential(const Scenario& sc) {
  if (sc.mode != ScenarioMode::AutoTangential)
    throw ScenarioError("tangential generators require an auto-tangential scenario");
  auto [action, slice] = tangential_inputs(sc);
  ValidationReport v = slice_validate(action, slice);
  if (!v.all_pass()) {
    std::string detail;
    for (const auto& c : v.checks)
      if (!c.pass) detail += (detail.empty() ? "" : "; ") + c.detail;
    throw ScenarioError("scenario '" + sc.name + "': slice validation failed: " + detail);
  }
  return tangential_generators(action, slice, sc.degree_bound);
}

Report run_dims_only(const Scenario& sc) {
  Report rep;
  rep.scenario_name = sc.name;
  switch (sc.mode) {
    case ScenarioMode::ExplicitFields: {
      KernelInputs in = explicit_inputs(sc);
      rep.dims = kernel_dimensions(in.fields, in.num_vars, sc.max_order).values;
      break;
    }
    case ScenarioMode::AutoTangential: {
      auto [action, slice] = tangential_inputs(sc);
      ValidationReport v = slice_validate(action, slice);
      if (!v.all_pass()) {
        std::string detail;
        for (const auto& c : v.checks)
          if (!c.pass) detail += (detail.empty() ? "" : "; ") + c.detail;
        throw ScenarioError("scenario '" + sc.name + "': slice validation failed: " + detail);
      }
      std::vector<PolyVectorField> gens = tangential_generators(action, slice, sc.degree_bound);
      rep.dims = kernel_dimensions(gens, slice.dim(), sc.max_order).values;
      // stabilization diagnostic: the kernel must not change at the next bound
      std::vector<PolyVectorField> gens_up =
          tangential_generators(action, slice, sc.degree_bound + 1);
      std::vector<long long> dims_up =
          kernel_dimensions(gens_up, slice.dim(), sc.max_order).values;
      if (dims_up != rep.dims) {
        std::ostringstream os;
        os << "tangential generation not stabilized: kernel dimensions at degree bound "
           << sc.degree_bound + 1 << " differ from degree bound " << sc.degree_bound
           << "; reporting the degree-" << sc.degree_bound + 1
           << " values (a larger bound only adds constraints)";
        rep.warnings.push_back(os.str());
        rep.dims = std::move(dims_up);
      }
      break;
    }
    case ScenarioMode::MolienOnly: {
      if (!sc.molien) throw ScenarioError("molien-only scenario has no molien data");
      DimSeries inv =
          sc.complex ? realified_invariant_dims(sc.molien->group, sc.molien->weights, sc.max_order)
                     : invariant_dims(sc.molien->group, sc.molien->weights, sc.max_order);
      rep.dims = prefix_sums(inv.values);
      break;
    }
    case ScenarioMode::Product: {
      if (sc.product_refs.size() != 2)
        throw ScenarioError("product scenario requires exactly two references");
      Scenario a = parse_scenario(sc.product_refs[0]);
      Scenario b = parse_scenario(sc.product_refs[1]);
      a.max_order = sc.max_order;
      b.max_order = sc.max_order;
      a.params_overridden = true;
      b.params_overridden = true;
      Report ra = run(a);
      Report rb = run(b);
      rep.increments = product_gf(ra.increments, rb.increments);
      rep.dims = prefix_sums(rep.increments);
      if (ra.gf && rb.gf) rep.gf = product_gf(*ra.gf, *rb.gf);
      if (ra.gf_error) rep.gf_error = ra.gf_error;
      if (rb.gf_error) rep.gf_error = rb.gf_error;
      for (const auto& w : ra.warnings) rep.warnings.push_back(sc.product_refs[0] + ": " + w);
      for (const auto& w : rb.warnings) rep.warnings.push_back(sc.product_refs[1] + ": " + w);
      break;
    }
  }
  if (sc.mode != ScenarioMode::MolienOnly && !sc.connectivity_asserted)
    rep.warnings.push_back(kConnectivityWarning);
  return rep;
}

Report run(const Scenario& sc) {
  Report rep = run_dims_only(sc);
  series_stage(sc, rep);
  molien_stage(sc, rep);
  check_expected(sc, rep);
  return rep;
}

// ---- emission ----

namespace {

Json report_to_json(const Report& rep) {
  Json j;
  j["schema"] = "orbitgf-report/1";
  j["name"] = rep.scenario_name;
  j["dims"] = rep.dims;
  j["increments"] = rep.increments;
  if (rep.gf) {
    j["gf"] = gf_to_json(*rep.gf);
  } else if (rep.gf_error) {
    Json e;
    e["error"] = *rep.gf_error;
    j["gf"] = std::move(e);
  }
  if (rep.ddim_value) {
    j["ddim"] = *rep.ddim_value;
    j["ddim_clamped"] = rep.ddim_clamped;
  }
  if (rep.ddeg_value) {
    j["ddeg"] = rep.ddeg_value->str();
  } else if (rep.ddeg_error) {
    Json e;
    e["error"] = *rep.ddeg_error;
    j["ddeg"] = std::move(e);
  }
  if (rep.molien_bound_ok) j["molien_bound_ok"] = *rep.molien_bound_ok;
  j["warnings"] = rep.warnings;
  return j;
}

}  // namespace

std::string emit_report(const Report& rep, const std::string& format) {
  if (format == "csv") {
    std::ostringstream os;
    os << "order,dim\n";
    for (std::size_t n = 0; n < rep.dims.size(); ++n) os << n << "," << rep.dims[n] << "\n";
    return os.str();
  }
  if (format != "json") throw ScenarioError("unknown output format: " + format);
  return report_to_json(rep).dump(2) + "\n";
}

Report parse_report(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ScenarioError(std::string("malformed report JSON: ") + e.what());
  }
  Report rep;
  rep.scenario_name = j.at("name").get<std::string>();
  for (const auto& v : j.at("dims")) rep.dims.push_back(v.get<long long>());
  for (const auto& v : j.at("increments")) rep.increments.push_back(v.get<long long>());
  if (j.contains("gf")) {
    if (j["gf"].contains("error"))
      rep.gf_error = j["gf"]["error"].get<std::string>();
    else
      rep.gf = json_gf(j["gf"], "gf");
  }
  if (j.contains("ddim")) {
    rep.ddim_value = j["ddim"].get<int>();
    rep.ddim_clamped = j.value("ddim_clamped", false);
  }
  if (j.contains("ddeg")) {
    if (j["ddeg"].is_string())
      rep.ddeg_value = Rational::parse(j["ddeg"].get<std::string>());
    else if (j["ddeg"].contains("error"))
      rep.ddeg_error = j["ddeg"]["error"].get<std::string>();
  }
  if (j.contains("molien_bound_ok")) rep.molien_bound_ok = j["molien_bound_ok"].get<bool>();
  if (j.contains("warnings"))
    for (const auto& w : j["warnings"]) rep.warnings.push_back(w.get<std::string>());
  return rep;
}

std::string validation_to_json(const ValidationReport& report) {
  Json j;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

std::string fields_to_json(const std::vector<PolyVectorField>& fields) {
  Json j;
  Json arr = Json::array();
  for (const auto& f : fields) arr.push_back(field_to_json(f));
  j["generators"] = std::move(arr);
  Json pretty = Json::array();
  for (const auto& f : fields) pretty.push_back(f.str());
  j["rendered"] = std::move(pretty);
  return j.dump(2) + "\n";
}

}  // namespace orbitgf
