#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "orbitgf/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitReconstruction = 2;
constexpr int kExitInternal = 3;

struct CommonOpts {
  std::vector<std::string> refs;  // from --scenario / --builtin, in order
  int max_order = -1;
  int degree_bound = -1;
  int window = -1;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool two_refs) {
  auto* sopt = cmd->add_option("--scenario", [&o](const std::vector<std::string>& vals) {
    for (const auto& v : vals) o.refs.push_back(v);
    return true;
  }, "Scenario JSON file");
  auto* bopt = cmd->add_option("--builtin", [&o](const std::vector<std::string>& vals) {
    for (const auto& v : vals) o.refs.push_back(v);
    return true;
  }, "Builtin scenario name");
  if (two_refs) {
    sopt->take_all();
    bopt->take_all();
  }
  cmd->add_option("--max-order", o.max_order, "Maximum transverse order N");
  cmd->add_option("--degree-bound", o.degree_bound, "Tangential generation degree bound");
  cmd->add_option("--window", o.window, "Withheld validation window for reconstruction");
  cmd->add_option("--format", o.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out_path, "Write output to this path instead of stdout");
}

orbitgf::Scenario load(const CommonOpts& o, std::size_t index) {
  orbitgf::Scenario sc = orbitgf::parse_scenario(o.refs.at(index));
  if (o.max_order >= 0) {
    sc.max_order = o.max_order;
    sc.params_overridden = true;
  }
  if (o.degree_bound >= 0) {
    sc.degree_bound = o.degree_bound;
    sc.params_overridden = true;
  }
  if (o.window >= 0) {
    sc.window = o.window;
    sc.params_overridden = true;
  }
  return sc;
}

void write_output(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) throw orbitgf::ScenarioError("cannot open output file: " + o.out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitgf: dimension series and generating functions of point-supported "
               "invariant distributions on a slice"};
  app.require_subcommand(1);

  CommonOpts validate_o, tangential_o, dims_o, gf_o, molien_o, product_o, run_o;
  CLI::App* cmd_validate = app.add_subcommand("validate", "Check the slice conditions");
  add_common(cmd_validate, validate_o, false);
  CLI::App* cmd_tangential =
      app.add_subcommand("tangential", "Print degree-truncated tangential generators");
  add_common(cmd_tangential, tangential_o, false);
  CLI::App* cmd_dims = app.add_subcommand("dims", "Compute kernel dimensions only");
  add_common(cmd_dims, dims_o, false);
  CLI::App* cmd_gf =
      app.add_subcommand("gf", "Compute dimensions and the reconstructed generating function");
  add_common(cmd_gf, gf_o, false);
  CLI::App* cmd_molien = app.add_subcommand("molien", "Compute the invariant Hilbert series");
  add_common(cmd_molien, molien_o, false);
  CLI::App* cmd_product =
      app.add_subcommand("product", "Combine two scenarios as a product (two refs)");
  add_common(cmd_product, product_o, true);
  CLI::App* cmd_run = app.add_subcommand("run", "Full pipeline with report");
  add_common(cmd_run, run_o, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_validate->parsed()) {
      if (validate_o.refs.size() != 1)
        throw orbitgf::ScenarioError("validate requires exactly one --scenario or --builtin");
      orbitgf::Scenario sc = load(validate_o, 0);
      orbitgf::ValidationReport rep = orbitgf::run_validate(sc);
      write_output(validate_o, orbitgf::validation_to_json(rep));
      return rep.all_pass() ? kExitOk : kExitInput;
    }
    if (cmd_tangential->parsed()) {
      if (tangential_o.refs.size() != 1)
        throw orbitgf::ScenarioError("tangential requires exactly one --scenario or --builtin");
      orbitgf::Scenario sc = load(tangential_o, 0);
      write_output(tangential_o, orbitgf::fields_to_json(orbitgf::run_tangential(sc)));
      return kExitOk;
    }
    if (cmd_dims->parsed()) {
      if (dims_o.refs.size() != 1)
        throw orbitgf::ScenarioError("dims requires exactly one --scenario or --builtin");
      orbitgf::Scenario sc = load(dims_o, 0);
      orbitgf::Report rep = orbitgf::run_dims_only(sc);
      write_output(dims_o, orbitgf::emit_report(rep, dims_o.format));
      return kExitOk;
    }
    if (cmd_gf->parsed() || cmd_run->parsed()) {
      CommonOpts& o = cmd_gf->parsed() ? gf_o : run_o;
      if (o.refs.size() != 1)
        throw orbitgf::ScenarioError("expected exactly one --scenario or --builtin");
      orbitgf::Scenario sc = load(o, 0);
      orbitgf::Report rep = orbitgf::run(sc);
      write_output(o, orbitgf::emit_report(rep, o.format));
      return rep.gf_error ? kExitReconstruction : kExitOk;
    }
    if (cmd_molien->parsed()) {
      if (molien_o.refs.size() != 1)
        throw orbitgf::ScenarioError("molien requires exactly one --scenario or --builtin");
      orbitgf::Scenario sc = load(molien_o, 0);
      if (!sc.molien)
        throw orbitgf::ScenarioError("scenario '" + sc.name + "' carries no molien data");
      sc.mode = orbitgf::ScenarioMode::MolienOnly;
      sc.expected = orbitgf::ExpectedResults{};
      orbitgf::Report rep = orbitgf::run(sc);
      write_output(molien_o, orbitgf::emit_report(rep, molien_o.format));
      return rep.gf_error ? kExitReconstruction : kExitOk;
    }
    if (cmd_product->parsed()) {
      if (product_o.refs.size() != 2)
        throw orbitgf::ScenarioError("product requires exactly two scenario references");
      orbitgf::Scenario sc;
      sc.name = "product(" + product_o.refs[0] + "," + product_o.refs[1] + ")";
      sc.mode = orbitgf::ScenarioMode::Product;
      sc.product_refs = product_o.refs;
      if (product_o.max_order >= 0) sc.max_order = product_o.max_order;
      if (product_o.window >= 0) sc.window = product_o.window;
      sc.params_overridden = true;
      orbitgf::Report rep = orbitgf::run(sc);
      write_output(product_o, orbitgf::emit_report(rep, product_o.format));
      return rep.gf_error ? kExitReconstruction : kExitOk;
    }
  } catch (const orbitgf::ReconstructError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitReconstruction;
  } catch (const orbitgf::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const orbitgf::InternalCheckError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const orbitgf::NonIntegerResult& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
