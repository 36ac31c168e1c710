#pragma once

#include <Eigen/Dense>

namespace dfo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Quadratic surrogate m(s) = f0 + g^T s + 1/2 s^T H s. H defaults to zero;
/// callers that supply curvature are expected to clip it to kappa_bhm first.
struct Model {
  double f0 = 0.0;
  Vector g;
  Matrix H;  // empty means H == 0
  double kappa_bhm = 1.0;

  int dim() const { return static_cast<int>(g.size()); }
  bool has_hessian() const { return H.size() > 0; }
  double value(const Vector& s) const;
  Vector hessian_times(const Vector& s) const;
};

struct Step {
  Vector s;
  double predicted_decrease = 0.0;  // m(0) - m(s), certified >= 0
};

/// Clamp the spectrum of a symmetric matrix into [-bound, bound].
Matrix clip_spectral(const Matrix& H, double bound);

/// Minimizer of the model along -g inside the ball of radius delta. Certified
/// to achieve at least half of ||g|| min(||g||/||H||, delta) decrease
/// (kappa_fcd = 1); g = 0 yields the zero step. Throws on delta <= 0.
Step cauchy_point(const Model& model, double delta);

/// Trust-region step with at least the Cauchy decrease. With refine off this
/// is exactly the Cauchy point; with refine on, a truncated conjugate
/// gradient pass (capped at dim iterations, 1e-10 relative residual) improves
/// the step, stopping at the boundary or at negative curvature.
Step solve_trs(const Model& model, double delta, bool refine = true);

}  // namespace dfo
