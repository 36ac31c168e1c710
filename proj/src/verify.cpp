#include "dfo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dfo/constants.hpp"
#include "dfo/drivers.hpp"
#include "dfo/experiment.hpp"
#include "dfo/lagrange.hpp"
#include "dfo/model_builders.hpp"
#include "dfo/problem.hpp"
#include "dfo/stats.hpp"
#include "dfo/subspace.hpp"

namespace dfo::verify {
namespace {

constexpr std::uint64_t kMatrixSeed = 7001;

std::string fmt(double v) { return format_double(v); }

ExperimentConfig quadratic_config(Algorithm alg, int n, double eps, double eig_min = 1.0,
                                  double eig_max = 10.0) {
  ExperimentConfig cfg;
  cfg.problem = ProblemSpec{"quadratic", n, eig_min, eig_max, 0.5};
  cfg.algorithm = alg;
  cfg.grad_tol = eps;
  cfg.tr.budget = 20000;
  cfg.x0_mode = "random";
  return cfg;
}

ExperimentConfig rosenbrock_config(Algorithm alg) {
  ExperimentConfig cfg;
  cfg.problem = ProblemSpec{"rosenbrock", 2, 1.0, 1.0, 0.5};
  cfg.algorithm = alg;
  cfg.grad_tol = 1e-3;
  cfg.tr.delta0 = 0.5;
  cfg.tr.delta_max = 1.0;
  cfg.tr.budget = 8000;
  return cfg;
}

struct MatrixRun {
  ExperimentConfig config;
  ConstantSet constants;  // with f0_minus_fstar = 1 (C1/C2 are what matters)
  RunResult result;
  ReplicaSummary summary;
};

// The shared exact-oracle test matrix: Algorithms 1 and 2 on quadratics
// (n in {2,4,8}) and 2-d Rosenbrock, 20 seeds each.
const std::vector<MatrixRun>& exact_test_matrix() {
  static const std::vector<MatrixRun> matrix = [] {
    std::vector<MatrixRun> runs;
    for (Algorithm alg : {Algorithm::Alg1, Algorithm::Alg2}) {
      for (int n : {2, 4, 8}) {
        ExperimentConfig cfg = quadratic_config(alg, n, 1e-3);
        const Problem problem = make_problem(cfg.problem);
        const ConstantSet constants = constants_for(cfg, problem, 1.0);
        for (int r = 0; r < 20; ++r) {
          auto [result, summary] = run_replica(cfg, problem, kMatrixSeed, r);
          runs.push_back({cfg, constants, std::move(result), summary});
        }
        // Same problems started far away with a tiny initial radius: the
        // regime where Delta_k <= C1 ||grad|| actually fires.
        ExperimentConfig tiny = cfg;
        tiny.tr.delta0 = 1e-3;
        tiny.x0_scale = 10.0;
        const ConstantSet tiny_constants = constants_for(tiny, problem, 1.0);
        for (int r = 0; r < 20; ++r) {
          auto [result, summary] = run_replica(tiny, problem, kMatrixSeed + 1, r);
          runs.push_back({tiny, tiny_constants, std::move(result), summary});
        }
      }
      {
        ExperimentConfig cfg = rosenbrock_config(alg);
        const Problem problem = make_problem(cfg.problem);
        const ConstantSet constants = constants_for(cfg, problem, 1.0);
        for (int r = 0; r < 20; ++r) {
          // Canonical start plus a small deterministic jitter; large random
          // starts would leave the box the Rosenbrock L is certified on.
          Rng rng(kMatrixSeed, 0x40 + r);
          Vector x0 = default_start(problem);
          for (int i = 0; i < x0.size(); ++i) x0[i] += 0.05 * rng.normal();
          ExperimentConfig crun = cfg;
          crun.x0_mode = "explicit";
          crun.x0_explicit = x0;
          auto [result, summary] = run_replica(crun, problem, kMatrixSeed, r);
          runs.push_back({crun, constants, std::move(result), summary});
        }
      }
    }
    return runs;
  }();
  return matrix;
}

CheckResult make_result(const std::string& name, bool pass, const std::string& detail) {
  return CheckResult{name, pass, detail};
}

// Full iteration context for counterexample dumps.
std::string dump_record(const IterationRecord& rec) {
  std::ostringstream os;
  os << "{k=" << rec.k << " delta=" << fmt(rec.delta) << " ||g||=" << fmt(rec.model_grad_norm)
     << " rho=" << fmt(rec.rho) << " class=" << to_string(rec.cls)
     << " calls=" << rec.oracle_calls_this_iter << " cum=" << rec.cumulative_calls
     << " cert=" << rec.fully_linear << " lambda=" << fmt(rec.lambda_report)
     << " in_ball=" << rec.set_in_ball << " ||grad||=" << fmt(rec.true_grad_norm)
     << " phi=" << fmt(rec.phi) << " I_k=" << rec.aligned << " B_k=" << rec.b_flag << "}";
  return os.str();
}

}  // namespace

CheckResult fd_fully_linear_bound() {
  int violations_exact = 0;
  int violations_noisy = 0;
  int checks = 0;
  double worst_margin = 0.0;
  for (int n : {2, 4, 8, 16}) {
    const Problem problem = make_problem({"quadratic", n, 1.0, 10.0, 0.5});
    const double L = problem.lipschitz_L;
    Rng rng(2024, n);
    for (int c = 0; c < 50; ++c) {
      Vector x(n);
      for (int i = 0; i < n; ++i) x[i] = rng.uniform(-5.0, 5.0);
      const Vector grad = problem.grad(x);
      {
        Oracle oracle(problem);
        const double delta = 0.1;
        const Vector g = fd_gradient(oracle, x, delta);
        const double err = (g - grad).norm();
        const double bound = std::sqrt(double(n)) * L * delta / 2.0 * (1.0 + 1e-8);
        if (err > bound) ++violations_exact;
        worst_margin = std::max(worst_margin, err / bound);
        ++checks;
      }
      {
        const double eps_f = 1e-8;
        Oracle oracle(problem, eps_f, 9000 + 31 * n + c);
        const double delta = 2.0 * std::sqrt(eps_f / L);
        const Vector g = fd_gradient(oracle, x, delta);
        const double err = (g - grad).norm();
        const double bound = std::sqrt(double(n)) * L * delta;
        if (err > bound) ++violations_noisy;
        worst_margin = std::max(worst_margin, err / bound);
        ++checks;
      }
    }
  }
  const bool pass = violations_exact == 0 && violations_noisy == 0;
  std::ostringstream detail;
  detail << checks << " builds, " << violations_exact << " exact / " << violations_noisy
         << " noisy violations, worst err/bound = " << fmt(worst_margin);
  return make_result("fd-fully-linear-bound", pass, detail.str());
}

CheckResult lemma_small_delta_success() {
  int premise_hits = 0;
  int violations = 0;
  int iterations = 0;
  std::string counterexample;
  for (const MatrixRun& mr : exact_test_matrix()) {
    const double c1 = mr.constants.C1;
    for (const IterationRecord& rec : mr.result.trace) {
      ++iterations;
      if (!rec.fully_linear) continue;
      if (rec.delta <= c1 * rec.true_grad_norm) {
        ++premise_hits;
        if (rec.cls != IterClass::Success) {
          ++violations;
          if (counterexample.empty()) counterexample = dump_record(rec);
        }
      }
    }
  }
  const bool pass = violations == 0 && premise_hits > 0;
  std::ostringstream detail;
  detail << iterations << " iterations, " << premise_hits << " premise hits, " << violations
         << " violations";
  if (!counterexample.empty()) detail << "; first counterexample " << counterexample;
  return make_result("lemma-small-delta-success", pass, detail.str());
}

CheckResult successful_progress() {
  int successes = 0;
  int violations = 0;
  std::string counterexample;
  auto scan = [&](const RunResult& result, double c2, double eps_f) {
    const auto& trace = result.trace;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      if (trace[i].cls != IterClass::Success) continue;
      ++successes;
      const double phi_next = (i + 1 < trace.size()) ? trace[i + 1].phi : result.final_phi;
      const double gain = trace[i].phi - phi_next;
      const double needed = c2 * trace[i].delta * trace[i].delta - 2.0 * eps_f;
      if (gain < needed - 1e-10) {
        ++violations;
        if (counterexample.empty()) counterexample = dump_record(trace[i]);
      }
    }
  };
  for (const MatrixRun& mr : exact_test_matrix()) scan(mr.result, mr.constants.C2, 0.0);
  // Bounded-noise coverage of the same inequality.
  {
    ExperimentConfig cfg = quadratic_config(Algorithm::Alg2, 4, 0.3, 1.0, 1.0);
    cfg.noise = NoiseMode::Bounded;
    cfg.eps_f = 1e-6;
    cfg.x0_mode = "default";
    cfg.x0_scale = 2.0;
    const Problem problem = make_problem(cfg.problem);
    const ConstantSet constants = constants_for(cfg, problem, 1.0);
    for (int r = 0; r < 3; ++r) {
      auto [result, summary] = run_replica(cfg, problem, 5100, r);
      scan(result, constants.C2, cfg.eps_f);
    }
  }
  const bool pass = violations == 0 && successes > 0;
  std::ostringstream detail;
  detail << successes << " successes, " << violations << " progress violations";
  if (!counterexample.empty()) detail << "; first counterexample " << counterexample;
  return make_result("successful-progress", pass, detail.str());
}

CheckResult radius_floor() {
  int runs = 0;
  int violations = 0;
  double worst_ratio = std::numeric_limits<double>::infinity();
  std::string counterexample;
  for (const MatrixRun& mr : exact_test_matrix()) {
    if (mr.config.algorithm != Algorithm::Alg2) continue;
    ++runs;
    const double floor = mr.config.tr.gamma * mr.constants.C1 * mr.config.grad_tol;
    for (const IterationRecord& rec : mr.result.trace) {
      worst_ratio = std::min(worst_ratio, rec.delta / floor);
      if (rec.delta < floor * (1.0 - 1e-12)) {
        ++violations;
        if (counterexample.empty()) counterexample = dump_record(rec);
      }
    }
  }
  std::ostringstream detail;
  detail << runs << " runs, " << violations << " floor violations, min delta/floor = "
         << fmt(worst_ratio);
  if (!counterexample.empty()) detail << "; first counterexample " << counterexample;
  return make_result("radius-floor", violations == 0, detail.str());
}

CheckResult geometry_run_length() {
  // (a) oracle calls in maximal consecutive geometry-correcting blocks.
  int blocks = 0;
  int block_violations = 0;
  std::int64_t longest = 0;
  std::string counterexample;
  for (const MatrixRun& mr : exact_test_matrix()) {
    if (mr.config.algorithm != Algorithm::Alg2) continue;
    const int d = mr.config.problem.dim;
    std::int64_t block_calls = 0;
    bool in_block = false;
    const IterationRecord* block_head = nullptr;
    auto close_block = [&] {
      if (!in_block) return;
      ++blocks;
      longest = std::max(longest, block_calls);
      if (block_calls > 3 * d) {
        ++block_violations;
        if (counterexample.empty() && block_head != nullptr) {
          counterexample = std::to_string(block_calls) + " calls from " +
                           dump_record(*block_head);
        }
      }
      in_block = false;
      block_calls = 0;
      block_head = nullptr;
    };
    for (const IterationRecord& rec : mr.result.trace) {
      if (is_geometry(rec.cls)) {
        if (!in_block) block_head = &rec;
        in_block = true;
        block_calls += rec.oracle_calls_this_iter;
      } else {
        close_block();
      }
    }
    close_block();
  }

  // (b) the orthogonalization dynamic: <= d ReplaceBad steps from a random
  // complete in-ball set to an exactly 1-poised one.
  int dynamic_failures = 0;
  int dynamic_trials = 0;
  for (int d = 2; d <= 16; ++d) {
    for (int s = 0; s < 100; ++s) {
      Rng rng(33000 + d, s);
      const double delta = 0.7;
      Matrix Y(d, d);
      while (true) {
        for (int j = 0; j < d; ++j) {
          Vector u(d);
          for (int i = 0; i < d; ++i) u[i] = rng.normal();
          u /= u.norm();
          const double radius = delta * std::pow(rng.uniform(), 1.0 / d);
          Y.col(j) = radius * u;
        }
        try {
          if (lambda_poisedness(Y, delta).lambda > 1.0 + 1e-8) break;
        } catch (const singular_set_error&) {
        }
      }
      ++dynamic_trials;
      int steps = 0;
      while (steps < d) {
        const PoisednessReport report = lambda_poisedness(Y, delta);
        if (report.lambda <= 1.0 + 1e-8) break;
        Y.col(report.argmax_index) = report.argmax_point;
        ++steps;
      }
      if (lambda_poisedness(Y, delta).lambda > 1.0 + 1e-8) ++dynamic_failures;
    }
  }
  const bool pass = block_violations == 0 && dynamic_failures == 0 && blocks > 0;
  std::ostringstream detail;
  detail << blocks << " geometry blocks (longest " << longest << " calls), " << block_violations
         << " over 3d; orthogonalization dynamic " << dynamic_trials << " trials, "
         << dynamic_failures << " failures";
  if (!counterexample.empty()) detail << "; first counterexample " << counterexample;
  return make_result("geometry-run-length", pass, detail.str());
}

CheckResult improved_kappa_eg_bound() {
  int accepted = 0;
  int violations = 0;
  int half_form_violations = 0;
  for (int d : {2, 4, 8}) {
    const Problem quad = make_problem({"quadratic", d, 1.0, 10.0, 0.5});
    const Problem lse = make_problem({"logsumexp", d, 1.0, 1.0, 0.25});
    Rng rng(61000 + d, 0);
    int made = 0;
    int attempts = 0;
    while (made < 200 && attempts < 5000) {
      ++attempts;
      const double delta = (made % 2 == 0) ? 0.05 : 0.5;
      // Scaled near-orthogonal set, sheared a little, clipped to the ball.
      Embedding base = haar_sample(d, d, rng);
      Matrix Y = base.Q;
      for (int j = 0; j < d; ++j) Y.col(j) *= delta * rng.uniform(0.55, 1.0);
      for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) Y(i, j) += 0.08 * delta * rng.normal();
        const double norm = Y.col(j).norm();
        if (norm > delta) Y.col(j) *= delta / norm;
      }
      double lambda = 0.0;
      try {
        lambda = lambda_poisedness(Y, delta).lambda;
      } catch (const singular_set_error&) {
        continue;
      }
      if (lambda > 2.0) continue;
      ++made;
      ++accepted;

      const Problem& problem = (made % 2 == 0) ? quad : lse;
      Vector x(d);
      for (int i = 0; i < d; ++i) x[i] = rng.uniform(-2.0, 2.0);
      Vector values(d);
      for (int j = 0; j < d; ++j) values[j] = problem.eval(x + Y.col(j));
      const Model model = interp_linear_model(problem.eval(x), values, Y);
      const double err = (model.g - problem.grad(x)).norm();
      const double L = problem.lipschitz_L;
      const double bound = std::sqrt(double(d)) * L * delta *
                           std::sqrt(d * (lambda * lambda - 1.0) + 2.0);
      if (err > bound * (1.0 + 1e-10)) ++violations;
      if (err > 0.5 * bound * (1.0 + 1e-10)) ++half_form_violations;
    }
  }
  const bool pass = violations == 0 && accepted == 600;
  std::ostringstream detail;
  detail << accepted << " sets, " << violations << " statement-form violations, "
         << half_form_violations << " half-form violations (reported, non-gating)";
  return make_result("improved-kappa-eg-bound", pass, detail.str());
}

CheckResult tightness_instance() {
  int violations = 0;
  std::ostringstream detail;
  for (int n : {2, 4, 8}) {
    for (double lambda : {1.05, 1.5}) {
      const AdversarialInstance inst = adversarial_instance(n, lambda);
      const double measured = lambda_poisedness(inst.Y, 1.0).lambda;
      if (std::abs(measured - lambda) > 1e-6) ++violations;
      const double err = inst.interpolation_gradient().norm();
      const double low =
          0.5 * std::sqrt(double(n)) * std::sqrt(n * (lambda * lambda - 1.0) + 1.0);
      if (err < low - 1e-8) ++violations;
    }
  }
  const AdversarialInstance hand = adversarial_from_eps(2, 0.2);
  const double hand_err = hand.interpolation_gradient().norm();
  if (std::abs(hand.target_lambda - 1.02062) > 1e-5) ++violations;
  if (std::abs(hand_err - 0.79057) > 1e-5) ++violations;
  detail << "6 instances + hand value (Lambda = " << fmt(hand.target_lambda)
         << ", err = " << fmt(hand_err) << "), " << violations << " violations";
  return make_result("tightness-instance", violations == 0, detail.str());
}

CheckResult haar_lemma() {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = 50;
  const int samples = 10000;
  Vector v = Vector::Ones(n);
  v /= v.norm();
  int failures = 0;
  std::ostringstream detail;
  for (int q : {3, 5, 10}) {
    Rng rng(88000 + q, 0);
    std::vector<double> vals;
    vals.reserve(samples);
    int hits = 0;
    const double threshold = q / (10.0 * n);
    for (int s = 0; s < samples; ++s) {
      const Embedding e = haar_sample(n, q, rng);
      const double a = alignment(e, v);
      vals.push_back(a);
      if (a >= threshold) ++hits;
    }
    const double p_hat = static_cast<double>(hits) / samples;
    const double sigma = std::sqrt(p_hat * (1.0 - p_hat) / samples);
    const bool prob_ok = p_hat >= 0.5485 - 3.0 * sigma;
    const double d_stat = ks_statistic(vals, &incomplete_beta, q / 2.0, (n - q) / 2.0);
    const double d_crit = ks_critical(0.01, samples);
    const bool ks_ok = d_stat <= d_crit;
    if (!prob_ok || !ks_ok) ++failures;
    detail << "q=" << q << ": p=" << fmt(p_hat) << " (>= " << fmt(0.5485 - 3.0 * sigma)
           << "), KS=" << fmt(d_stat) << " (crit " << fmt(d_crit) << "); ";
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = failures == 0 && elapsed < 30.0;
  detail << "elapsed " << fmt(elapsed) << "s";
  return make_result("haar-lemma", pass, detail.str());
}

CheckResult complexity_conformance() {
  int deterministic_runs = 0;
  int deterministic_violations = 0;
  for (const MatrixRun& mr : exact_test_matrix()) {
    if (!mr.summary.terminated) continue;
    ++deterministic_runs;
    if (static_cast<double>(mr.summary.N_eps) > mr.summary.theoretical_N_eps) {
      ++deterministic_violations;
    }
  }

  int subspace_failures = 0;
  std::ostringstream detail;
  detail << deterministic_runs << " terminating alg1/alg2 runs, " << deterministic_violations
         << " over the bound; ";
  for (Algorithm alg : {Algorithm::Alg3, Algorithm::Alg4}) {
    ExperimentConfig cfg = quadratic_config(alg, 16, 1e-2);
    cfg.tr.q = 4;
    cfg.tr.budget = 400000;
    cfg.x0_mode = "default";
    cfg.replicas = 20;
    const ExperimentResult res = run_experiments(cfg, 9300 + static_cast<int>(alg));
    double mean_n = 0.0;
    double bound = 0.0;
    int terminated = 0;
    for (const ReplicaSummary& s : res.summaries) {
      mean_n += static_cast<double>(s.N_eps);
      bound = s.theoretical_N_eps;
      terminated += s.terminated ? 1 : 0;
    }
    mean_n /= res.summaries.size();
    const bool ok = terminated == 20 && mean_n <= 3.0 * bound;
    if (!ok) ++subspace_failures;
    detail << to_string(alg) << ": mean N = " << fmt(mean_n) << " vs 3x bound "
           << fmt(3.0 * bound) << " (" << terminated << "/20 terminated); ";
  }
  const bool pass = deterministic_violations == 0 && deterministic_runs > 0 &&
                    subspace_failures == 0;
  return make_result("complexity-conformance", pass, detail.str());
}

CheckResult scaling_probes() {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  // (a) Algorithm 2 on quadratics: mean N vs n on a log-log fit.
  std::vector<double> log_n, log_mean;
  for (int n : {4, 8, 16, 32}) {
    ExperimentConfig cfg = quadratic_config(Algorithm::Alg2, n, 1e-2);
    cfg.replicas = 20;
    cfg.tr.budget = 200000;
    const ExperimentResult res = run_experiments(cfg, 9400 + n);
    double mean = 0.0;
    for (const ReplicaSummary& s : res.summaries) mean += static_cast<double>(s.N_eps);
    mean /= res.summaries.size();
    log_n.push_back(std::log(double(n)));
    log_mean.push_back(std::log(mean));
    detail << "alg2 n=" << n << ": mean N = " << fmt(mean) << "; ";
  }
  auto slope_of = [](const std::vector<double>& xs, const std::vector<double>& ys) {
    const double k = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
  };
  const double slope_n = slope_of(log_n, log_mean);
  const bool slope_n_ok = slope_n >= 1.0 && slope_n <= 2.6;
  detail << "slope " << fmt(slope_n) << " (want [1, 2.6]); ";

  // (b) Algorithm 4 at n = 32: mean N vs q.
  std::vector<double> log_q, log_mean_q;
  std::vector<double> means_q;
  for (int q : {4, 8, 16}) {
    ExperimentConfig cfg = quadratic_config(Algorithm::Alg4, 32, 1e-2);
    cfg.tr.q = q;
    cfg.replicas = 20;
    cfg.tr.budget = 400000;
    cfg.x0_mode = "default";
    const ExperimentResult res = run_experiments(cfg, 9500 + q);
    double mean = 0.0;
    for (const ReplicaSummary& s : res.summaries) mean += static_cast<double>(s.N_eps);
    mean /= res.summaries.size();
    means_q.push_back(mean);
    log_q.push_back(std::log(double(q)));
    log_mean_q.push_back(std::log(mean));
    detail << "alg4 q=" << q << ": mean N = " << fmt(mean) << "; ";
  }
  const double slope_q = slope_of(log_q, log_mean_q);
  const bool increasing = means_q[0] < means_q[1] && means_q[1] < means_q[2];
  const bool slope_q_ok = slope_q <= 1.5;
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail << "q-slope " << fmt(slope_q) << " (want <= 1.5, increasing); elapsed "
         << fmt(elapsed) << "s";
  const bool pass = slope_n_ok && increasing && slope_q_ok && elapsed < 300.0;
  return make_result("scaling-probes", pass, detail.str());
}

CheckResult noisy_regime() {
  ExperimentConfig base = quadratic_config(Algorithm::Alg2, 4, 0.3, 1.0, 1.0);
  base.noise = NoiseMode::Bounded;
  base.eps_f = 1e-6;
  base.x0_mode = "default";
  base.x0_scale = 2.0;
  base.tr.budget = 100000;
  const Problem problem = make_problem(base.problem);
  const double eps_star = constants_for(base, problem, 1.0).eps_threshold;

  int run_count = 0;
  int failures = 0;
  int skipped = 0;
  for (double eps : {0.3, 0.5, 1.0}) {
    if (eps <= eps_star) {
      ++skipped;
      continue;
    }
    ExperimentConfig cfg = base;
    cfg.grad_tol = eps;
    for (int r = 0; r < 10; ++r) {
      auto [result, summary] = run_replica(cfg, problem, 9700, r);
      ++run_count;
      if (!summary.terminated || result.final_grad_norm > eps) ++failures;
    }
  }
  std::ostringstream detail;
  detail << "eps* = " << fmt(eps_star) << ", " << run_count << " runs above threshold, "
         << failures << " failures, " << skipped << " eps values excluded";
  return make_result("noisy-regime", failures == 0 && run_count > 0, detail.str());
}

std::vector<CheckResult> run_all() {
  return {fd_fully_linear_bound(), lemma_small_delta_success(), successful_progress(),
          radius_floor(),          geometry_run_length(),       improved_kappa_eg_bound(),
          tightness_instance(),    haar_lemma(),                complexity_conformance(),
          scaling_probes(),        noisy_regime()};
}

std::vector<std::string> suite_names() {
  return {"lemma-success", "progress", "radius-floor", "geometry-runs",
          "kappa-eg",      "lower-bound", "haar",      "scaling"};
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "lemma-success") return {lemma_small_delta_success()};
  if (name == "progress") return {successful_progress()};
  if (name == "radius-floor") return {radius_floor()};
  if (name == "geometry-runs") return {geometry_run_length()};
  if (name == "kappa-eg") return {fd_fully_linear_bound(), improved_kappa_eg_bound()};
  if (name == "lower-bound") return {tightness_instance()};
  if (name == "haar") return {haar_lemma()};
  if (name == "scaling") return {complexity_conformance(), scaling_probes(), noisy_regime()};
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

}  // namespace dfo::verify
