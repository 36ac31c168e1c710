#include "dfo/lagrange.hpp"

#include <cmath>
#include <stdexcept>

namespace dfo {

Matrix GeometrySet::matrix() const {
  Matrix m(dim, size());
  for (int i = 0; i < size(); ++i) m.col(i) = Y[i];
  return m;
}

double GeometrySet::max_norm() const {
  double v = 0.0;
  for (const auto& y : Y) v = std::max(v, y.norm());
  return v;
}

PoisednessReport lambda_poisedness(const Matrix& Y, double delta) {
  const int d = static_cast<int>(Y.rows());
  if (Y.cols() != d) throw std::invalid_argument("lambda_poisedness: set is incomplete");
  if (delta <= 0.0) throw std::invalid_argument("lambda_poisedness: delta must be positive");
  Eigen::JacobiSVD<Matrix> svd(Y, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0 || smax / smin > 1e14) {
    throw singular_set_error("lambda_poisedness: set is numerically singular");
  }
  // Y^{-T} = U diag(1/s) V^T for Y = U diag(s) V^T.
  const Matrix inv_t = svd.matrixU() * svd.singularValues().cwiseInverse().asDiagonal() *
                       svd.matrixV().transpose();
  PoisednessReport report;
  report.coeffs = inv_t;
  report.lambda = -1.0;
  for (int i = 0; i < d; ++i) {
    const double li = delta * inv_t.col(i).norm();
    // Ties (up to roundoff) break to the lowest index.
    if (li > report.lambda * (1.0 + 1e-12)) {
      report.lambda = li;
      report.argmax_index = i;
    }
  }
  const Vector c = inv_t.col(report.argmax_index);
  report.argmax_point = delta * c / c.norm();
  return report;
}

PoisednessReport lambda_poisedness(const GeometrySet& set, double delta) {
  if (!set.complete()) throw std::invalid_argument("lambda_poisedness: set is incomplete");
  return lambda_poisedness(set.matrix(), delta);
}

Vector orth_complement_direction(const Matrix& cols, int dim) {
  const int m = static_cast<int>(cols.cols());
  if (m >= dim) throw std::invalid_argument("orth_complement_direction: no complement left");
  Vector dir;
  if (m == 0) {
    dir = Vector::Unit(dim, 0);
  } else {
    Eigen::HouseholderQR<Matrix> qr(cols);
    const Matrix q = qr.householderQ();
    dir = q.col(m);
  }
  // Fix the sign so the choice is reproducible across builds.
  for (int i = 0; i < dim; ++i) {
    if (std::abs(dir[i]) > 1e-14) {
      if (dir[i] < 0) dir = -dir;
      break;
    }
  }
  return dir;
}

namespace {

bool degenerate_trial(const GeometrySet& set, double delta, const Vector& trial) {
  if (trial.size() != set.dim) return true;
  if (trial.norm() < 1e-12 * delta) return true;
  for (const auto& y : set.Y) {
    if ((trial - y).norm() <= 1e-12) return true;
  }
  return false;
}

// Columns of the set without slot `skip` (skip < 0 keeps everything).
Matrix columns_without(const GeometrySet& set, int skip) {
  const int m = set.size() - (skip >= 0 ? 1 : 0);
  Matrix cols(set.dim, m);
  int c = 0;
  for (int i = 0; i < set.size(); ++i) {
    if (i == skip) continue;
    cols.col(c++) = set.Y[i];
  }
  return cols;
}

int furthest_index(const GeometrySet& set) {
  int j = 0;
  double best = -1.0;
  for (int i = 0; i < set.size(); ++i) {
    const double ni = set.Y[i].norm();
    if (ni > best * (1.0 + 1e-12)) {
      best = ni;
      j = i;
    }
  }
  return j;
}

}  // namespace

GeometryAction geometry_action(const GeometrySet& set, double delta, double lambda_threshold,
                               const Vector& trial) {
  GeometryAction action;
  if (!set.complete()) {
    action.kind = GeometryActionKind::Add;
    if (degenerate_trial(set, delta, trial)) {
      action.point = delta * orth_complement_direction(set.matrix(), set.dim);
      action.needs_oracle = true;
    } else {
      action.point = trial;
    }
    return action;
  }

  const int far = furthest_index(set);
  // Slack keeps freshly inserted sphere points (norm Delta up to roundoff)
  // from being evicted as "far", which would undo ReplaceBad progress.
  if (set.Y[far].norm() > delta * (1.0 + 1e-12)) {
    action.kind = GeometryActionKind::ReplaceFar;
    action.index = far;
    if (degenerate_trial(set, delta, trial)) {
      action.point = delta * orth_complement_direction(columns_without(set, far), set.dim);
      action.needs_oracle = true;
    } else {
      action.point = trial;
    }
    return action;
  }

  try {
    const PoisednessReport report = lambda_poisedness(set, delta);
    if (report.lambda > lambda_threshold) {
      action.kind = GeometryActionKind::ReplaceBad;
      action.index = report.argmax_index;
      action.point = report.argmax_point;
      action.needs_oracle = true;
      return action;
    }
  } catch (const singular_set_error&) {
    // Numerically singular set: replace the most dependent column with a
    // direction completing the others, which is where s* degenerates to.
    Eigen::ColPivHouseholderQR<Matrix> qr(set.matrix());
    const int worst = qr.colsPermutation().indices()[set.dim - 1];
    action.kind = GeometryActionKind::ReplaceBad;
    action.index = worst;
    action.point = delta * orth_complement_direction(columns_without(set, worst), set.dim);
    action.needs_oracle = true;
    return action;
  }

  action.kind = GeometryActionKind::GoodGeometry;
  return action;
}

GeometrySet shift_on_success(const GeometrySet& set, const Vector& s, double f_new_center) {
  GeometrySet out;
  out.dim = set.dim;
  out.center_value = f_new_center;
  const int drop = set.size() > 0 ? furthest_index(set) : -1;
  for (int i = 0; i < set.size(); ++i) {
    if (i == drop) continue;
    const Vector shifted = set.Y[i] - s;
    if (shifted.norm() <= 1e-14 * (1.0 + s.norm())) continue;  // trial met a stored point
    out.Y.push_back(shifted);
    out.values.push_back(set.values[i]);
  }
  // The old center re-enters as displacement -s with its known value.
  out.Y.push_back(-s);
  out.values.push_back(set.center_value);
  return out;
}

}  // namespace dfo
