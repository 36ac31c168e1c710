#pragma once

#include "dfo/drivers.hpp"
#include "dfo/model_builders.hpp"

namespace dfo {

struct ConstantParams {
  Algorithm algorithm = Algorithm::Alg1;
  int n = 2;
  int q = 0;  // subspace dimension (Alg3 / Alg4)
  double L = 1.0;
  double eps_f = 0.0;
  double eta1 = 0.1;
  double eta2 = 1.0;
  double gamma = 0.5;
  double tau = 0.5;
  double kappa_bhm = 1.0;
  double kappa_fcd = 1.0;
  double lambda = 0.0;  // <= 0 selects 1 + 1/d
  DeltaChoice delta_choice = DeltaChoice::DeltaEqDelta;
  double delta0 = 1.0;
  double eps = 1e-2;            // target stationarity
  double f0_minus_fstar = 1.0;  // phi(x0) - phi*
};

/// All constants the complexity statements are made of, computed exactly
/// from the configured hyperparameters and the model-building mode the
/// algorithm uses.
struct ConstantSet {
  double C1 = 0.0;
  double C1_bar = 0.0;  // noise-adjusted variant; equals C1 when eps_f = 0
  double C2 = 0.0;
  double eps_threshold = 0.0;  // smallest eps the noisy guarantee covers
  double kappa_ef = 0.0;
  double kappa_eg = 0.0;
  double tau = 0.0;
  /// C1 actually governing the radius dynamics: C1_bar for noisy runs,
  /// scaled by sqrt(q / 10n) for the subspace algorithms.
  double c1_effective = 0.0;
  double theoretical_K_eps = 0.0;  // iteration bound (expected for Alg3/4)
  double theoretical_N_eps = 0.0;  // oracle-call bound
};

/// The Haar alignment probability the subspace bounds are stated with.
inline constexpr double kHaarTheta = 243.0 / 443.0;

ConstantSet compute_constants(const ConstantParams& params);

}  // namespace dfo
