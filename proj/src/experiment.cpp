#include "dfo/experiment.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dfo {

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "alg1") return Algorithm::Alg1;
  if (name == "alg2") return Algorithm::Alg2;
  if (name == "alg3") return Algorithm::Alg3;
  if (name == "alg4") return Algorithm::Alg4;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Alg1: return "alg1";
    case Algorithm::Alg2: return "alg2";
    case Algorithm::Alg3: return "alg3";
    case Algorithm::Alg4: return "alg4";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double out = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for '" + key + "': " + v);
  }
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d != std::floor(d)) throw std::invalid_argument("config: '" + key + "' must be an integer");
  return static_cast<std::int64_t>(d);
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: expected 'key = value' on line " +
                                  std::to_string(lineno));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "problem") {
      cfg.problem.family = value;
    } else if (key == "n") {
      cfg.problem.dim = static_cast<int>(to_int(key, value));
    } else if (key == "eig_min") {
      cfg.problem.eig_min = to_double(key, value);
    } else if (key == "eig_max") {
      cfg.problem.eig_max = to_double(key, value);
    } else if (key == "mu") {
      cfg.problem.mu = to_double(key, value);
    } else if (key == "algorithm") {
      cfg.algorithm = algorithm_from_string(value);
    } else if (key == "eta1") {
      cfg.tr.eta1 = to_double(key, value);
    } else if (key == "eta2") {
      cfg.tr.eta2 = to_double(key, value);
    } else if (key == "gamma") {
      cfg.tr.gamma = to_double(key, value);
    } else if (key == "delta0") {
      cfg.tr.delta0 = to_double(key, value);
    } else if (key == "lambda") {
      cfg.tr.lambda_threshold = to_double(key, value);
    } else if (key == "tau") {
      cfg.tau = to_double(key, value);
    } else if (key == "kappa_bhm") {
      cfg.tr.kappa_bhm = to_double(key, value);
    } else if (key == "kappa_fcd") {
      cfg.kappa_fcd = to_double(key, value);
    } else if (key == "delta_choice") {
      if (value == "delta") {
        cfg.tr.delta_choice = DeltaChoice::DeltaEqDelta;
      } else if (value == "delta_over_sqrt_d") {
        cfg.tr.delta_choice = DeltaChoice::DeltaEqDeltaOverSqrtD;
      } else {
        throw std::invalid_argument("config: delta_choice must be delta | delta_over_sqrt_d");
      }
    } else if (key == "delta_max") {
      cfg.tr.delta_max = to_double(key, value);
    } else if (key == "budget") {
      cfg.tr.budget = to_int(key, value);
    } else if (key == "q") {
      cfg.tr.q = static_cast<int>(to_int(key, value));
    } else if (key == "noise") {
      if (value == "exact") {
        cfg.noise = NoiseMode::Exact;
      } else if (value == "bounded") {
        cfg.noise = NoiseMode::Bounded;
      } else {
        throw std::invalid_argument("config: noise must be exact | bounded");
      }
    } else if (key == "eps_f") {
      cfg.eps_f = to_double(key, value);
    } else if (key == "grad_tol") {
      cfg.grad_tol = to_double(key, value);
    } else if (key == "replicas") {
      cfg.replicas = static_cast<int>(to_int(key, value));
    } else if (key == "x0") {
      if (value == "default" || value == "random") {
        cfg.x0_mode = value;
      } else {
        cfg.x0_mode = "explicit";
        std::istringstream xs(value);
        std::vector<double> coords;
        std::string tok;
        while (std::getline(xs, tok, ',')) coords.push_back(to_double("x0", trim(tok)));
        cfg.x0_explicit = Eigen::Map<Vector>(coords.data(), coords.size());
      }
    } else if (key == "x0_scale") {
      cfg.x0_scale = to_double(key, value);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  if (cfg.replicas < 1) throw std::invalid_argument("config: replicas must be >= 1");
  if (cfg.noise == NoiseMode::Bounded && !(cfg.eps_f > 0)) {
    throw std::invalid_argument("config: bounded noise needs eps_f > 0");
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

std::uint64_t replica_rng_seed(std::uint64_t seed, int replica) {
  return mix64(seed ^ mix64(0x1000 + static_cast<std::uint64_t>(replica)));
}

std::uint64_t replica_noise_seed(std::uint64_t seed, int replica) {
  return mix64(seed ^ mix64(0x2000 + static_cast<std::uint64_t>(replica)));
}

Vector replica_start(const ExperimentConfig& config, const Problem& problem, std::uint64_t seed,
                     int replica) {
  if (config.x0_mode == "explicit") {
    if (config.x0_explicit.size() != problem.dim) {
      throw std::invalid_argument("config: x0 length does not match n");
    }
    return config.x0_explicit;
  }
  if (config.x0_mode == "random") {
    Rng rng(replica_rng_seed(seed, replica), 1);
    Vector u(problem.dim);
    for (int i = 0; i < problem.dim; ++i) u[i] = rng.normal();
    u /= u.norm();
    return config.x0_scale * std::sqrt(static_cast<double>(problem.dim)) * u;
  }
  return config.x0_scale * default_start(problem);
}

ConstantSet constants_for(const ExperimentConfig& config, const Problem& problem,
                          double f0_minus_fstar) {
  ConstantParams p;
  p.algorithm = config.algorithm;
  p.n = problem.dim;
  p.q = config.tr.q;
  p.L = problem.lipschitz_L;
  p.eps_f = config.noise == NoiseMode::Bounded ? config.eps_f : 0.0;
  p.eta1 = config.tr.eta1;
  p.eta2 = config.tr.eta2;
  p.gamma = config.tr.gamma;
  p.tau = config.tau;
  p.kappa_bhm = config.tr.kappa_bhm;
  p.kappa_fcd = config.kappa_fcd;
  p.lambda = config.tr.lambda_threshold;
  p.delta_choice = config.tr.delta_choice;
  p.delta0 = config.tr.delta0;
  p.eps = config.grad_tol;
  p.f0_minus_fstar = f0_minus_fstar;
  return compute_constants(p);
}

std::pair<RunResult, ReplicaSummary> run_replica(const ExperimentConfig& config,
                                                 const Problem& problem, std::uint64_t seed,
                                                 int replica) {
  TRConfig tr = config.tr;
  tr.rng_seed = replica_rng_seed(seed, replica);
  Oracle oracle = config.noise == NoiseMode::Bounded
                      ? Oracle(problem, config.eps_f, replica_noise_seed(seed, replica))
                      : Oracle(problem);
  if (config.noise == NoiseMode::Bounded) {
    tr.fd_delta_floor = 2.0 * std::sqrt(config.eps_f / problem.lipschitz_L);
  }
  const Vector x0 = replica_start(config, problem, seed, replica);
  const double f0 = problem.eval(x0);
  const double fstar = problem.lower_bound;
  const double gap = std::isfinite(fstar) ? std::max(0.0, f0 - fstar) : 1.0;
  const ConstantSet constants = constants_for(config, problem, gap);

  RunOptions options;
  options.grad_tol = config.grad_tol;
  options.c1_for_b_flag = constants.c1_effective;
  RunResult run_result = run(config.algorithm, problem, oracle, x0, tr, options);

  ReplicaSummary summary;
  summary.replica = replica;
  summary.seed = seed;
  summary.n = problem.dim;
  summary.q = config.tr.q;
  summary.eps = config.grad_tol;
  summary.eps_f = config.noise == NoiseMode::Bounded ? config.eps_f : 0.0;
  summary.K_eps = static_cast<std::int64_t>(run_result.trace.size());
  summary.N_eps = run_result.total_calls;
  summary.theoretical_K_eps = constants.theoretical_K_eps;
  summary.theoretical_N_eps = constants.theoretical_N_eps;
  summary.terminated = run_result.terminated;
  return {std::move(run_result), summary};
}

ExperimentResult run_experiments(const ExperimentConfig& config, std::uint64_t seed) {
  const Problem problem = make_problem(config.problem);
  ExperimentResult result;
  if (config.noise == NoiseMode::Bounded) {
    const double eps_star = constants_for(config, problem, 1.0).eps_threshold;
    if (config.grad_tol <= eps_star) {
      result.warnings.push_back(
          "grad_tol = " + format_double(config.grad_tol) +
          " is at or below the noisy-regime threshold eps* = " + format_double(eps_star) +
          "; termination to this accuracy is not covered by the noisy guarantee");
    }
  }
  for (int r = 0; r < config.replicas; ++r) {
    auto [run_result, summary] = run_replica(config, problem, seed, r);
    result.runs.push_back(std::move(run_result));
    result.summaries.push_back(summary);
  }
  return result;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_iterations_jsonl(const std::string& path, const ExperimentResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (std::size_t r = 0; r < result.runs.size(); ++r) {
    for (const IterationRecord& rec : result.runs[r].trace) {
      nlohmann::ordered_json j;
      j["replica"] = static_cast<int>(r);
      j["k"] = rec.k;
      j["delta"] = rec.delta;
      j["model_grad_norm"] = rec.model_grad_norm;
      if (std::isfinite(rec.rho)) {
        j["rho"] = rec.rho;
      } else {
        j["rho"] = nullptr;
      }
      j["class"] = to_string(rec.cls);
      j["calls"] = rec.oracle_calls_this_iter;
      j["cum_calls"] = rec.cumulative_calls;
      j["fully_linear"] = rec.fully_linear;
      if (std::isfinite(rec.lambda_report)) {
        j["lambda"] = rec.lambda_report;
      } else {
        j["lambda"] = nullptr;
      }
      j["in_ball"] = rec.set_in_ball;
      j["true_grad_norm"] = rec.true_grad_norm;
      j["phi"] = rec.phi;
      j["aligned"] = rec.aligned;
      j["b_flag"] = rec.b_flag;
      out << j.dump() << '\n';
    }
  }
}

void write_summary_csv(const std::string& path, const ExperimentResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "replica,seed,n,q,eps,eps_f,K_eps,N_eps,theoretical_K_eps,theoretical_N_eps,"
         "terminated\n";
  for (const ReplicaSummary& s : result.summaries) {
    out << s.replica << ',' << s.seed << ',' << s.n << ',' << s.q << ',' << format_double(s.eps)
        << ',' << format_double(s.eps_f) << ',' << s.K_eps << ',' << s.N_eps << ','
        << format_double(s.theoretical_K_eps) << ',' << format_double(s.theoretical_N_eps) << ','
        << (s.terminated ? 1 : 0) << '\n';
  }
}

}  // namespace dfo
