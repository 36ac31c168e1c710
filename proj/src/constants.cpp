#include "dfo/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace dfo {
namespace {

double c1_formula(double eta1, double eta2, double kappa_bhm, double kappa_fcd, double kappa_ef,
                  double kappa_eg, double eps_f) {
  const double worst =
      std::max({eta2, kappa_bhm, (2.0 * kappa_ef + 4.0 * eps_f) / ((1.0 - eta1) * kappa_fcd)});
  return 1.0 / (worst + kappa_eg);
}

}  // namespace

ConstantSet compute_constants(const ConstantParams& p) {
  if (!(p.eta1 > 0 && p.eta1 < 1) || !(p.eta2 > 0) || !(p.gamma > 0 && p.gamma < 1) ||
      !(p.tau > 0 && p.tau < 1) || !(p.kappa_bhm > 0) ||
      !(p.kappa_fcd > 0 && p.kappa_fcd <= 1) || !(p.L > 0) || !(p.eps > 0) || !(p.delta0 > 0) ||
      p.eps_f < 0 || p.n < 1 || p.f0_minus_fstar < 0) {
    throw std::invalid_argument("compute_constants: hyperparameters out of range");
  }
  const bool sub = p.algorithm == Algorithm::Alg3 || p.algorithm == Algorithm::Alg4;
  const int d = sub ? p.q : p.n;
  if (sub && (p.q < 3 || p.q > p.n)) {
    throw std::invalid_argument("compute_constants: need 3 <= q <= n for subspace algorithms");
  }
  const double lambda = p.lambda > 0 ? p.lambda : 1.0 + 1.0 / d;
  if (lambda <= 1.0) throw std::invalid_argument("compute_constants: Lambda must exceed 1");

  FullyLinearCert cert;
  const double any_delta = 1.0;  // kappas below do not depend on the radius
  switch (p.algorithm) {
    case Algorithm::Alg1: {
      const double ratio =
          p.delta_choice == DeltaChoice::DeltaEqDelta ? 1.0 : 1.0 / std::sqrt(double(d));
      cert = fl_constants(FlMode::FdFull, d, p.L, ratio, 0.0, any_delta, p.kappa_bhm);
      break;
    }
    case Algorithm::Alg3:
      cert = fl_constants(FlMode::FdSubspace, d, p.L, 0.0, 0.0, any_delta, p.kappa_bhm);
      break;
    case Algorithm::Alg2:
    case Algorithm::Alg4:
      // Statement-form interpolation constant; for eps_f > 0 the same kappa_eg
      // is valid once Delta >= 2 sqrt(Lambda eps_f / L), which the noise
      // threshold on eps keeps true along the run.
      cert = fl_constants(FlMode::Interpolation, d, p.L, lambda, 0.0, any_delta, p.kappa_bhm);
      break;
  }

  ConstantSet out;
  out.kappa_ef = cert.kappa_ef;
  out.kappa_eg = cert.kappa_eg;
  out.tau = p.tau;
  out.C1 = c1_formula(p.eta1, p.eta2, p.kappa_bhm, p.kappa_fcd, cert.kappa_ef, cert.kappa_eg, 0.0);
  out.C1_bar =
      c1_formula(p.eta1, p.eta2, p.kappa_bhm, p.kappa_fcd, cert.kappa_ef, cert.kappa_eg, p.eps_f);
  out.C2 = 0.5 * p.eta1 * p.eta2 * p.kappa_fcd * std::min(p.eta2 / p.kappa_bhm, 1.0);
  out.eps_threshold =
      p.eps_f > 0
          ? std::sqrt(2.0 * p.eps_f / (p.gamma * p.gamma * p.tau * out.C2 * out.C1_bar * out.C1_bar))
          : 0.0;

  const double c1_run = p.eps_f > 0 ? out.C1_bar : out.C1;
  out.c1_effective = sub ? std::sqrt(double(p.q) / (10.0 * p.n)) * c1_run : c1_run;

  // Iteration bounds: |S| <= F / (C2_eff (gamma c1 eps)^2), |U^d| <= |S| + ceil(log_g),
  // K <= 2|S| + log_g.
  const double c2_eff = p.eps_f > 0 ? (1.0 - p.tau) * out.C2 : out.C2;
  const double floor_radius = p.gamma * out.c1_effective * p.eps;
  const double s_bound = p.f0_minus_fstar / (c2_eff * floor_radius * floor_radius);
  const double log_g =
      std::max(0.0, std::log(out.c1_effective * p.eps / p.delta0) / std::log(p.gamma));
  const double tail = std::ceil(log_g);

  switch (p.algorithm) {
    case Algorithm::Alg1:
      out.theoretical_K_eps = 2.0 * s_bound + log_g;
      out.theoretical_N_eps = (p.n + 2.0) * out.theoretical_K_eps;
      break;
    case Algorithm::Alg2:
      // Iterations include the geometry-correcting ones: at most 2n of them
      // (n fill/far + n bad) per non-geometry iteration, plus one leading
      // block. Calls follow the as-stated 3n[|S| + |U^d|] form, plus init.
      out.theoretical_K_eps = (2.0 * p.n + 1.0) * (2.0 * s_bound + tail) + 2.0 * p.n;
      out.theoretical_N_eps = 3.0 * p.n * (s_bound + (s_bound + tail)) + 1.0;
      break;
    case Algorithm::Alg3: {
      const double factor = 2.0 * kHaarTheta / std::pow(2.0 * kHaarTheta - 1.0, 2);
      out.theoretical_K_eps = factor * (2.0 * s_bound + log_g);
      out.theoretical_N_eps = (p.q + 2.0) * out.theoretical_K_eps;
      break;
    }
    case Algorithm::Alg4: {
      const double factor = 2.0 * kHaarTheta / std::pow(2.0 * kHaarTheta - 1.0, 2);
      const double non_geometry = factor * (2.0 * s_bound + tail);
      out.theoretical_K_eps = (2.0 * p.q + 1.0) * non_geometry + 2.0 * p.q;
      // Each non-geometry iteration costs at most q+1 calls (trial plus the
      // basis rebuild on subspace regeneration) and each geometry block
      // between them at most 3q, plus the q+1 initialization calls.
      out.theoretical_N_eps = (4.0 * p.q + 1.0) * non_geometry + 3.0 * p.q + (p.q + 1.0);
      break;
    }
  }
  return out;
}

}  // namespace dfo
