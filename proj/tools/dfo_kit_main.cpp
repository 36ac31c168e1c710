#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dfo/constants.hpp"
#include "dfo/experiment.hpp"
#include "dfo/verify.hpp"

namespace {

int cmd_run(const std::string& config_path, std::uint64_t seed, const std::string& out_dir) {
  const dfo::ExperimentConfig config = dfo::load_experiment_config(config_path);
  const dfo::ExperimentResult result = dfo::run_experiments(config, seed);
  for (const std::string& warning : result.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  std::filesystem::create_directories(out_dir);
  dfo::write_iterations_jsonl(out_dir + "/iterations.jsonl", result);
  dfo::write_summary_csv(out_dir + "/summary.csv", result);
  std::cout << "wrote " << result.summaries.size() << " replica(s) to " << out_dir << "\n";
  return 0;
}

int cmd_verify(const std::string& suite) {
  const auto results = suite == "all" ? dfo::verify::run_all() : dfo::verify::run_suite(suite);
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_constants(const std::string& params_path) {
  const dfo::ExperimentConfig config = dfo::load_experiment_config(params_path);
  const dfo::Problem problem = dfo::make_problem(config.problem);
  const dfo::Vector x0 = dfo::replica_start(config, problem, 0, 0);
  const double f0 = problem.eval(x0);
  const double gap =
      std::isfinite(problem.lower_bound) ? std::max(0.0, f0 - problem.lower_bound) : 1.0;
  const dfo::ConstantSet c = dfo::constants_for(config, problem, gap);
  nlohmann::ordered_json j;
  j["C1"] = c.C1;
  j["C1_bar"] = c.C1_bar;
  j["C2"] = c.C2;
  j["eps_threshold"] = c.eps_threshold;
  j["kappa_ef"] = c.kappa_ef;
  j["kappa_eg"] = c.kappa_eg;
  j["tau"] = c.tau;
  j["c1_effective"] = c.c1_effective;
  j["theoretical_K_eps"] = c.theoretical_K_eps;
  j["theoretical_N_eps"] = c.theoretical_N_eps;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dfo-kit: model-based derivative-free trust-region solvers and their "
               "verification harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  auto* run = app.add_subcommand("run", "run an experiment described by a config file");
  run->add_option("--config", config_path, "experiment config file")->required();
  run->add_option("--seed", seed, "base seed (replicas derive their streams from it)");
  run->add_option("--out", out_dir, "output directory for iterations.jsonl and summary.csv");

  std::string suite = "all";
  std::string verify_config;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suites_help = "suite name: all";
  for (const auto& s : dfo::verify::suite_names()) suites_help += " | " + s;
  verify->add_option("--suite", suite, suites_help);
  verify->add_option("--config", verify_config,
                     "optional experiment config; validated up front (the suites run their "
                     "pinned test matrices)");

  std::string params_path;
  auto* constants = app.add_subcommand("constants", "print the constants/bounds for a config");
  constants->add_option("--params", params_path, "config file with problem + hyperparameters")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(config_path, seed, out_dir);
    if (verify->parsed()) {
      if (!verify_config.empty()) dfo::load_experiment_config(verify_config);
      return cmd_verify(suite);
    }
    if (constants->parsed()) return cmd_constants(params_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
