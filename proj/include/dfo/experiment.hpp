#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dfo/constants.hpp"
#include "dfo/drivers.hpp"
#include "dfo/problem.hpp"

namespace dfo {

/// Full description of one experiment: a problem, an algorithm, its
/// hyperparameters, the noise model, and the stopping rule. Parsed from a
/// `key = value` text file (see parse_experiment_config for the schema).
struct ExperimentConfig {
  ProblemSpec problem;
  Algorithm algorithm = Algorithm::Alg2;
  TRConfig tr;
  double tau = 0.5;
  double kappa_fcd = 1.0;
  NoiseMode noise = NoiseMode::Exact;
  double eps_f = 0.0;
  double grad_tol = 1e-2;
  int replicas = 1;
  std::string x0_mode = "default";  // default | random | explicit
  Vector x0_explicit;
  double x0_scale = 1.0;
};

ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

Algorithm algorithm_from_string(const std::string& name);
const char* to_string(Algorithm algorithm);

struct ReplicaSummary {
  int replica = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int q = 0;
  double eps = 0.0;
  double eps_f = 0.0;
  std::int64_t K_eps = 0;  // iterations executed
  std::int64_t N_eps = 0;  // oracle calls consumed
  double theoretical_K_eps = 0.0;
  double theoretical_N_eps = 0.0;
  bool terminated = false;
};

struct ExperimentResult {
  std::vector<RunResult> runs;  // one per replica
  std::vector<ReplicaSummary> summaries;
  /// Non-fatal configuration notes (e.g. grad_tol at or below the
  /// noisy-regime threshold eps*, where termination is not guaranteed).
  std::vector<std::string> warnings;
};

/// Starting point for a replica: the family default, a deterministic random
/// sphere point of radius x0_scale * sqrt(n), or the explicit vector.
Vector replica_start(const ExperimentConfig& config, const Problem& problem, std::uint64_t seed,
                     int replica);

/// Derived per-replica seeds; all randomness in a replica flows from these.
std::uint64_t replica_rng_seed(std::uint64_t seed, int replica);
std::uint64_t replica_noise_seed(std::uint64_t seed, int replica);

/// Runs one replica (oracle, driver and trace fully determined by `seed` and
/// `replica`) and produces its summary row.
std::pair<RunResult, ReplicaSummary> run_replica(const ExperimentConfig& config,
                                                 const Problem& problem, std::uint64_t seed,
                                                 int replica);

/// Runs all replicas sequentially (replica order fixed for reproducibility).
ExperimentResult run_experiments(const ExperimentConfig& config, std::uint64_t seed);

/// One JSON object per iteration per replica; keys documented in the README.
void write_iterations_jsonl(const std::string& path, const ExperimentResult& result);
/// Summary CSV: replica,seed,n,q,eps,eps_f,K_eps,N_eps,theoretical_K_eps,
/// theoretical_N_eps,terminated. UTF-8, LF line endings, shortest
/// round-trip float formatting, so reruns are byte-identical.
void write_summary_csv(const std::string& path, const ExperimentResult& result);

/// Shortest round-trip decimal rendering of a double (std::to_chars).
std::string format_double(double v);

/// Constant set corresponding to a config (used for the CSV theoretical
/// columns and the B_k flags).
ConstantSet constants_for(const ExperimentConfig& config, const Problem& problem,
                          double f0_minus_fstar);

}  // namespace dfo
