#pragma once

#include <stdexcept>

#include "dfo/problem.hpp"
#include "dfo/trs.hpp"

namespace dfo {

/// Raised when an interpolation set is too close to singular to produce a
/// trustworthy model; callers react by running geometry correction.
class singular_set_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Condition-number threshold beyond which interpolation refuses the solve.
inline constexpr double kSingularCond = 1e8;

/// Forward finite-difference gradient along the columns of a unitary basis:
/// g = sum_i (f(x + delta u_i) - f(x)) / delta * u_i. Costs exactly n+1
/// oracle calls (center evaluated once). Identity basis when `basis` is empty.
Vector fd_gradient(Oracle& oracle, const Vector& x, double delta, const Matrix& basis = Matrix());

/// Same, reusing a center value that was already paid for (n calls).
Vector fd_gradient_with_center(Oracle& oracle, const Vector& x, double f_center, double delta,
                               const Matrix& basis = Matrix());

/// Reduced gradient of v -> f(x + Q v) by forward differences over a q-dim
/// unitary basis; q+1 oracle calls. Requires Q^T Q = I to 1e-10.
Vector fd_subspace_gradient(Oracle& oracle, const Vector& x, const Matrix& Q, double delta);
Vector fd_subspace_gradient_with_center(Oracle& oracle, const Vector& x, const Matrix& Q,
                                        double f_center, double delta);

/// Linear interpolation model on a displacement set: solves Y^T g = rhs with
/// rhs_i = f_points[i] - f_center. Throws singular_set_error when cond(Y)
/// exceeds kSingularCond.
Model interp_linear_model(double f_center, const Vector& f_points, const Matrix& Y,
                          double kappa_bhm = 1.0);

enum class FlMode { FdFull, FdSubspace, Interpolation };

/// Fully-linear certificate: gradient error <= kappa_eg * delta + additive,
/// value error <= kappa_ef * delta^2 on the ball of radius delta.
struct FullyLinearCert {
  double kappa_ef = 0.0;
  double kappa_eg = 0.0;
  double additive = 0.0;  // noise floor term (noisy interpolation only)
  double delta = 0.0;
  FlMode mode = FlMode::FdFull;

  double gradient_error_bound() const { return kappa_eg * delta + additive; }
};

/// Computes the certificate constants for a model-building mode.
///  - FdFull: lambda_or_ratio is delta/Delta, kappa_eg = sqrt(d) L ratio.
///  - FdSubspace: kappa_eg = sqrt(d) L / 2 (exact oracle, delta <= Delta).
///  - Interpolation: lambda_or_ratio is the poisedness Lambda;
///    kappa_eg = sqrt(d) L sqrt(d (Lambda^2-1) + 2), plus, when eps_f > 0,
///    the additive term sqrt(d(Lambda^2-1)+2) sqrt(d) 2 eps_f Lambda / delta.
/// kappa_ef = kappa_eg + (L + kappa_bhm)/2 throughout.
FullyLinearCert fl_constants(FlMode mode, int d, double L, double lambda_or_ratio, double eps_f,
                             double delta, double kappa_bhm);

}  // namespace dfo
