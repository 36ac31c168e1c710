#include "dfo/trs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfo {

double Model::value(const Vector& s) const {
  double v = f0 + g.dot(s);
  if (has_hessian()) v += 0.5 * s.dot(H * s);
  return v;
}

Vector Model::hessian_times(const Vector& s) const {
  if (!has_hessian()) return Vector::Zero(s.size());
  return H * s;
}

Matrix clip_spectral(const Matrix& H, double bound) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (H + H.transpose()));
  Vector d = es.eigenvalues();
  for (int i = 0; i < d.size(); ++i) d[i] = std::clamp(d[i], -bound, bound);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

namespace {

double spectral_norm(const Matrix& H) {
  if (H.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Fraction-of-Cauchy-decrease certificate, checked on every emitted step.
void certify(const Model& model, double delta, const Step& step) {
  const double gnorm = model.g.norm();
  if (gnorm == 0.0) return;
  const double hnorm = spectral_norm(model.H);
  const double ray = (hnorm > 0.0) ? gnorm / hnorm : std::numeric_limits<double>::infinity();
  const double bound = 0.5 * gnorm * std::min(ray, delta);
  if (step.predicted_decrease < bound * (1.0 - 1e-9) - 1e-300) {
    throw std::logic_error("trs: step lost the Cauchy decrease certificate");
  }
  if (step.s.norm() > delta * (1.0 + 1e-12)) {
    throw std::logic_error("trs: step left the trust region");
  }
}

// Positive root of ||s + t d|| = delta.
double boundary_t(const Vector& s, const Vector& d, double delta) {
  const double a = d.squaredNorm();
  const double b = 2.0 * s.dot(d);
  const double c = s.squaredNorm() - delta * delta;
  const double disc = std::max(0.0, b * b - 4.0 * a * c);
  return (-b + std::sqrt(disc)) / (2.0 * a);
}

}  // namespace

Step cauchy_point(const Model& model, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("cauchy_point: delta must be positive");
  const double gnorm = model.g.norm();
  Step step;
  if (gnorm == 0.0) {
    step.s = Vector::Zero(model.dim());
    return step;
  }
  const Vector dir = -model.g / gnorm;
  const double curv = model.has_hessian() ? dir.dot(model.H * dir) : 0.0;
  double t = delta;
  if (curv > 0.0) t = std::min(delta, gnorm / curv);
  step.s = t * dir;
  step.predicted_decrease = t * gnorm - 0.5 * t * t * curv;
  certify(model, delta, step);
  return step;
}

Step solve_trs(const Model& model, double delta, bool refine) {
  if (delta <= 0.0) throw std::invalid_argument("solve_trs: delta must be positive");
  if (!refine || !model.has_hessian()) {
    // No curvature to exploit: CG's first step is the Cauchy point already.
    return cauchy_point(model, delta);
  }
  const int n = model.dim();
  const double gnorm = model.g.norm();
  if (gnorm == 0.0) {
    Step step;
    step.s = Vector::Zero(n);
    return step;
  }

  // Steihaug-Toint truncated CG on m(s) - f0.
  Vector s = Vector::Zero(n);
  Vector r = model.g;  // gradient of the model at s
  Vector d = -r;
  const double tol = 1e-10 * gnorm;
  for (int it = 0; it < n; ++it) {
    const Vector Hd = model.H * d;
    const double curv = d.dot(Hd);
    const double rr = r.squaredNorm();
    if (curv <= 0.0) {
      s += boundary_t(s, d, delta) * d;
      break;
    }
    const double alpha = rr / curv;
    if ((s + alpha * d).norm() >= delta) {
      s += boundary_t(s, d, delta) * d;
      break;
    }
    s += alpha * d;
    r += alpha * Hd;
    if (r.norm() <= tol) break;
    d = -r + (r.squaredNorm() / rr) * d;
  }

  Step step;
  step.s = s;
  step.predicted_decrease = model.f0 - model.value(s);
  const Step fallback = cauchy_point(model, delta);
  if (step.predicted_decrease < fallback.predicted_decrease) return fallback;
  certify(model, delta, step);
  return step;
}

}  // namespace dfo
