#pragma once

#include <vector>

#include "dfo/model_builders.hpp"
#include "dfo/trs.hpp"

namespace dfo {

/// Interpolation displacement set around the current center. The zero
/// displacement (the center itself) is never stored; its value lives in
/// center_value. values[i] always corresponds to f(center + Y[i]).
struct GeometrySet {
  int dim = 0;
  std::vector<Vector> Y;
  std::vector<double> values;
  double center_value = 0.0;

  int size() const { return static_cast<int>(Y.size()); }
  bool complete() const { return size() == dim; }
  /// Displacements as columns of a dim x size() matrix.
  Matrix matrix() const;
  double max_norm() const;
};

/// Poisedness of a complete set, via the closed form for the linear basis:
/// ell_i(s) = s^T (Y^{-T})_i, so Lambda = max_i delta ||(Y^{-T})_i||.
struct PoisednessReport {
  double lambda = 0.0;
  int argmax_index = 0;  // worst Lagrange polynomial (lowest index on ties)
  Vector argmax_point;   // s* on the delta-sphere attaining lambda
  Matrix coeffs;         // Y^{-T}; column i is the gradient of ell_i
};

/// Exact poisedness measurement. Throws std::invalid_argument on an
/// incomplete set and singular_set_error when Y is numerically singular.
PoisednessReport lambda_poisedness(const Matrix& Y, double delta);
PoisednessReport lambda_poisedness(const GeometrySet& set, double delta);

enum class GeometryActionKind { Add, ReplaceFar, ReplaceBad, GoodGeometry };

struct GeometryAction {
  GeometryActionKind kind = GeometryActionKind::GoodGeometry;
  int index = -1;  // replaced slot for ReplaceFar / ReplaceBad
  Vector point;    // displacement to insert
  /// True when `point` is not the trial step, so its oracle value is unknown.
  bool needs_oracle = false;
};

/// Decides the first applicable geometry correction on an unsuccessful
/// iteration: Add while the set is incomplete, ReplaceFar while a point lies
/// outside the ball, ReplaceBad while the measured poisedness exceeds the
/// threshold, otherwise GoodGeometry (caller shrinks the radius). A trial
/// that is (near) zero or duplicates a stored point is replaced by a
/// direction orthogonal to the remaining points, scaled to delta.
GeometryAction geometry_action(const GeometrySet& set, double delta, double lambda_threshold,
                               const Vector& trial);

/// Successful-iteration update: drop the furthest point, re-enter the old
/// center as displacement -s carrying its stored value, translate everything
/// by -s, and adopt the trial value as the new center value. No oracle calls.
GeometrySet shift_on_success(const GeometrySet& set, const Vector& s, double f_new_center);

/// Unit direction orthogonal to all columns of a d x m matrix (m < d).
Vector orth_complement_direction(const Matrix& cols, int dim);

}  // namespace dfo
