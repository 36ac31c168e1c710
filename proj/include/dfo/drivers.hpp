#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "dfo/lagrange.hpp"
#include "dfo/model_builders.hpp"
#include "dfo/problem.hpp"
#include "dfo/rng.hpp"
#include "dfo/subspace.hpp"
#include "dfo/trs.hpp"

namespace dfo {

enum class Algorithm { Alg1, Alg2, Alg3, Alg4 };

/// Sampling radius for the finite-difference model relative to the trust
/// region: delta = Delta_k trades accuracy for a smaller constant, while
/// delta = Delta_k / sqrt(d) buys kappa_eg = L at the same call count.
enum class DeltaChoice { DeltaEqDelta, DeltaEqDeltaOverSqrtD };

struct TRConfig {
  double eta1 = 0.1;
  double eta2 = 1.0;
  double gamma = 0.5;
  double delta0 = 1.0;
  /// Poisedness threshold for the geometry drivers; <= 0 selects 1 + 1/d.
  double lambda_threshold = 0.0;
  DeltaChoice delta_choice = DeltaChoice::DeltaEqDelta;
  std::int64_t budget = 100000;
  double delta_max = 0.0;  // <= 0 means uncapped
  int q = 0;               // subspace dimension (Alg3 / Alg4)
  std::uint64_t rng_seed = 0;
  double kappa_bhm = 1.0;
  /// Lower bound applied to the FD sampling radius in bounded-noise mode
  /// (the harness supplies 2 sqrt(eps_f / L); the solver cannot know L).
  double fd_delta_floor = 0.0;
  /// Optional curvature source; the returned matrix is symmetrized and
  /// spectrally clipped to kappa_bhm before use.
  std::function<Matrix(const Vector&)> hessian_hook;
};

enum class IterClass { Success, Shrink, GeomAdd, GeomFar, GeomBad };

const char* to_string(IterClass c);
bool is_geometry(IterClass c);

struct IterationRecord {
  int k = 0;
  double delta = 0.0;            // Delta_k before the update
  double model_grad_norm = 0.0;  // ||g_k||
  double rho = std::numeric_limits<double>::quiet_NaN();
  IterClass cls = IterClass::Shrink;
  std::int64_t oracle_calls_this_iter = 0;
  std::int64_t cumulative_calls = 0;
  /// Model carried a fully-linear certificate this iteration (always for the
  /// FD drivers on exact oracles; for the geometry drivers: complete set,
  /// inside the ball, measured Lambda within threshold).
  bool fully_linear = false;
  double lambda_report = std::numeric_limits<double>::quiet_NaN();
  bool set_in_ball = false;
  // Filled by run(), never visible to the solver:
  double true_grad_norm = std::numeric_limits<double>::quiet_NaN();
  double phi = std::numeric_limits<double>::quiet_NaN();
  bool aligned = true;   // I_k
  bool b_flag = false;   // B_k
};

/// Acceptance ratio with the degenerate-model sentinel: when the predicted
/// decrease is <= 1e-15 the iteration cannot be accepted and -inf is
/// returned.
double rho(double f_center, double f_trial, double m_center, double m_trial);

/// One state machine covering all four algorithms; Alg2/Alg4 add the
/// geometry set management on top of the shared ratio-test skeleton, and
/// Alg3/Alg4 build their models in a Haar-sampled subspace.
class Driver {
 public:
  Driver(Algorithm algorithm, Oracle& oracle, const Vector& x0, const TRConfig& config);

  /// Oracle cost of initialize(): center value for the geometry drivers plus
  /// the initial basis rebuild for Alg4.
  std::int64_t init_calls() const;
  /// Worst-case oracle cost of a single step().
  std::int64_t max_calls_per_iter() const;

  void initialize();
  bool initialized() const { return initialized_; }

  /// Runs one iteration. Throws std::runtime_error if the configured budget
  /// cannot cover the worst case.
  IterationRecord step();

  const Vector& x() const { return x_; }
  double delta() const { return delta_; }
  int k() const { return k_; }
  Algorithm algorithm() const { return algorithm_; }
  const TRConfig& config() const { return config_; }
  double lambda_threshold() const { return lambda_threshold_; }
  const GeometrySet& geometry() const { return geometry_; }
  /// Embedding used by the most recent step (subspace drivers only).
  const Matrix* last_embedding() const;
  int model_dim() const { return model_dim_; }

 private:
  IterationRecord step_fd();        // Alg1 / Alg3
  IterationRecord step_geometry();  // Alg2 / Alg4
  void reset_subspace_geometry();   // Alg4: fresh Q + delta-scaled basis
  Model finish_model(Model m) const;
  Vector lift(const Vector& v) const { return subspace() ? Vector(Q_ * v) : v; }
  bool subspace() const { return algorithm_ == Algorithm::Alg3 || algorithm_ == Algorithm::Alg4; }
  bool uses_geometry() const {
    return algorithm_ == Algorithm::Alg2 || algorithm_ == Algorithm::Alg4;
  }
  void grow_delta();

  Algorithm algorithm_;
  Oracle* oracle_;
  TRConfig config_;
  double lambda_threshold_ = 0.0;
  int model_dim_ = 0;
  Vector x_;
  double delta_ = 0.0;
  int k_ = 0;
  GeometrySet geometry_;
  Matrix Q_;
  Matrix last_q_used_;  // embedding the most recent trial step was lifted with
  Rng rng_;
  bool initialized_ = false;
};

struct RunOptions {
  double grad_tol = 0.0;
  /// Constant for the B_k flag (C1-hat scaled for subspace runs); NaN skips.
  double c1_for_b_flag = std::numeric_limits<double>::quiet_NaN();
};

struct RunResult {
  std::vector<IterationRecord> trace;
  Vector final_x;
  double final_phi = 0.0;
  double final_grad_norm = 0.0;
  bool terminated = false;  // reached grad_tol (vs. ran out of budget)
  std::int64_t total_calls = 0;
};

/// Drives a full optimization run. Stops at the first iterate whose true
/// gradient norm is <= grad_tol (checked with the harness's analytic
/// gradient, which the solver itself never sees) or when the next iteration
/// could exceed the oracle budget.
RunResult run(Algorithm algorithm, const Problem& problem, Oracle& oracle, const Vector& x0,
              const TRConfig& config, const RunOptions& options);

}  // namespace dfo
