#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitgf/action.hpp"
#include "orbitgf/delta.hpp"
#include "orbitgf/molien.hpp"
#include "orbitgf/series.hpp"
#include "orbitgf/tangential.hpp"

namespace orbitgf {

enum class ScenarioMode { ExplicitFields, AutoTangential, MolienOnly, Product };

std::string mode_name(ScenarioMode m);

struct MolienAttachment {
  ReductiveSpec group;
  WeightCharacter weights;
};

struct ExpectedResults {
  std::optional<std::vector<long long>> dims;
  std::optional<RationalGF> gf;
  bool empty() const { return !dims && !gf; }
};

/// One fully-specified computation: a field list, an action+slice pair, a
/// Molien datum, or a product of two other scenarios.
struct Scenario {
  std::string name;
  ScenarioMode mode = ScenarioMode::ExplicitFields;
  std::vector<std::string> variables;

  std::vector<PolyVectorField> fields;             // explicit-fields, real
  std::vector<ComplexVectorField> complex_fields;  // explicit-fields, complex
  std::optional<LieAction> action;                 // auto-tangential, real
  std::optional<AffineSlice> slice;
  std::optional<ComplexScenario> complex_scenario;  // auto-tangential, complex

  bool complex = false;  // triggers realification
  int max_order = 8;
  int degree_bound = 2;
  int window = 4;
  bool connectivity_asserted = false;
  std::optional<MolienAttachment> molien;
  std::vector<std::string> product_refs;  // product mode: exactly two
  ExpectedResults expected;

  /// Set by the CLI when flags override scenario parameters; suppresses the
  /// expected-results regression check, which records results at defaults.
  bool params_overridden = false;
};

struct Report {
  std::string scenario_name;
  std::vector<long long> dims;
  std::vector<long long> increments;
  std::optional<RationalGF> gf;
  std::optional<std::string> gf_error;
  std::optional<int> ddim_value;
  bool ddim_clamped = false;
  std::optional<Rational> ddeg_value;
  std::optional<std::string> ddeg_error;
  std::optional<bool> molien_bound_ok;
  std::vector<std::string> warnings;
};

/// Input or schema problem in a scenario file or reference (CLI exit 1).
class ScenarioError : public std::runtime_error {
public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed, e.g. a builtin's recorded expected
/// results no longer match (CLI exit 3).
class InternalCheckError : public std::runtime_error {
public:
  explicit InternalCheckError(const std::string& what) : std::runtime_error(what) {}
};

std::vector<std::string> builtin_names();
Scenario builtin_scenario(const std::string& name);

/// Loads a scenario from a file path, or by builtin name when no such file
/// exists. All rationals are parsed exactly from "p/q" strings.
Scenario parse_scenario(const std::string& path_or_builtin);
Scenario parse_scenario_text(const std::string& json_text, const std::string& origin);

/// Emitted text when a scenario has not asserted the connectivity hypothesis:
/// the computed dimensions then bound the invariant space from above.
extern const char* const kConnectivityWarning;

/// Runs the mode-appropriate pipeline. Deterministic: identical scenarios
/// produce byte-identical serialized reports.
Report run(const Scenario& scenario);

/// Pieces of run() that the CLI exposes as separate subcommands.
ValidationReport run_validate(const Scenario& scenario);
std::vector<PolyVectorField> run_tangential(const Scenario& scenario);
Report run_dims_only(const Scenario& scenario);

/// format is "json" or "csv"; json round-trips, csv is the dims table.
std::string emit_report(const Report& report, const std::string& format);
Report parse_report(const std::string& json_text);

std::string validation_to_json(const ValidationReport& report);
std::string fields_to_json(const std::vector<PolyVectorField>& fields);

}  // namespace orbitgf
