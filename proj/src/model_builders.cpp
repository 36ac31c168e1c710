#include "dfo/model_builders.hpp"

#include <cmath>

namespace dfo {
namespace {

void check_unitary(const Matrix& U, double tol, const char* who) {
  const Matrix gram = U.transpose() * U;
  const Matrix err = gram - Matrix::Identity(U.cols(), U.cols());
  if (err.cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument(std::string(who) + ": basis is not orthonormal");
  }
}

}  // namespace

Vector fd_gradient(Oracle& oracle, const Vector& x, double delta, const Matrix& basis) {
  const double fc = oracle.eval(x);
  return fd_gradient_with_center(oracle, x, fc, delta, basis);
}

Vector fd_gradient_with_center(Oracle& oracle, const Vector& x, double f_center, double delta,
                               const Matrix& basis) {
  if (delta <= 0.0) throw std::invalid_argument("fd_gradient: delta must be positive");
  const int n = static_cast<int>(x.size());
  const bool identity = basis.size() == 0;
  if (!identity) {
    if (basis.rows() != n || basis.cols() != n) {
      throw std::invalid_argument("fd_gradient: basis must be n x n");
    }
    check_unitary(basis, 1e-10, "fd_gradient");
  }
  Vector g = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    const Vector u = identity ? Vector(Vector::Unit(n, i)) : Vector(basis.col(i));
    const double fi = oracle.eval(x + delta * u);
    g += ((fi - f_center) / delta) * u;
  }
  return g;
}

Vector fd_subspace_gradient(Oracle& oracle, const Vector& x, const Matrix& Q, double delta) {
  const double fc = oracle.eval(x);
  return fd_subspace_gradient_with_center(oracle, x, Q, fc, delta);
}

Vector fd_subspace_gradient_with_center(Oracle& oracle, const Vector& x, const Matrix& Q,
                                        double f_center, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("fd_subspace_gradient: delta must be positive");
  check_unitary(Q, 1e-10, "fd_subspace_gradient");
  const int q = static_cast<int>(Q.cols());
  Vector g(q);
  for (int i = 0; i < q; ++i) {
    const double fi = oracle.eval(x + delta * Q.col(i));
    g[i] = (fi - f_center) / delta;
  }
  return g;
}

Model interp_linear_model(double f_center, const Vector& f_points, const Matrix& Y,
                          double kappa_bhm) {
  const int d = static_cast<int>(Y.rows());
  if (Y.cols() != d) throw std::invalid_argument("interp_linear_model: Y must be square");
  if (f_points.size() != d) {
    throw std::invalid_argument("interp_linear_model: need one value per displacement");
  }
  Eigen::JacobiSVD<Matrix> svd(Y.transpose(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0 || smax / smin > kSingularCond) {
    throw singular_set_error("interp_linear_model: interpolation set is near-singular");
  }
  const Vector rhs = f_points.array() - f_center;
  Model m;
  m.f0 = f_center;
  m.g = svd.solve(rhs);
  // One step of iterative refinement keeps the relative residual at
  // roundoff level even near the conditioning threshold.
  m.g += svd.solve(Vector(rhs - Y.transpose() * m.g));
  m.kappa_bhm = kappa_bhm;
  return m;
}

FullyLinearCert fl_constants(FlMode mode, int d, double L, double lambda_or_ratio, double eps_f,
                             double delta, double kappa_bhm) {
  if (d < 1 || L < 0 || delta <= 0 || kappa_bhm <= 0 || eps_f < 0) {
    throw std::invalid_argument("fl_constants: inputs out of range");
  }
  FullyLinearCert cert;
  cert.mode = mode;
  cert.delta = delta;
  const double sd = std::sqrt(static_cast<double>(d));
  switch (mode) {
    case FlMode::FdFull:
      if (lambda_or_ratio <= 0) throw std::invalid_argument("fl_constants: ratio must be > 0");
      cert.kappa_eg = sd * L * lambda_or_ratio;
      break;
    case FlMode::FdSubspace:
      cert.kappa_eg = 0.5 * sd * L;
      break;
    case FlMode::Interpolation: {
      const double lambda = lambda_or_ratio;
      if (lambda < 1.0) throw std::invalid_argument("fl_constants: Lambda must be >= 1");
      const double geom = std::sqrt(d * (lambda * lambda - 1.0) + 2.0);
      cert.kappa_eg = sd * L * geom;
      if (eps_f > 0.0) cert.additive = geom * sd * 2.0 * eps_f * lambda / delta;
      break;
    }
  }
  cert.kappa_ef = cert.kappa_eg + 0.5 * (L + kappa_bhm);
  return cert;
}

}  // namespace dfo
