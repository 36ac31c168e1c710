#include "dfo/subspace.hpp"

#include <stdexcept>

namespace dfo {

Embedding haar_sample(int n, int q, Rng& rng) {
  if (q < 1 || q > n) throw std::invalid_argument("haar_sample: need 1 <= q <= n");
  const std::uint64_t tag = rng.provenance_tag();
  Matrix gauss(n, q);
  for (int j = 0; j < q; ++j) {
    for (int i = 0; i < n; ++i) gauss(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Matrix> qr(gauss);
  Matrix Q = qr.householderQ() * Matrix::Identity(n, q);
  const Matrix r = qr.matrixQR().topRows(q).triangularView<Eigen::Upper>();
  for (int j = 0; j < q; ++j) {
    if (r(j, j) < 0) Q.col(j) = -Q.col(j);
  }
  return Embedding{std::move(Q), tag};
}

double alignment(const Matrix& Q, const Vector& v) {
  const double vn = v.squaredNorm();
  if (vn == 0.0) throw std::invalid_argument("alignment: v must be nonzero");
  // ||Q Q^T v|| = ||Q^T v|| for orthonormal columns.
  return (Q.transpose() * v).squaredNorm() / vn;
}

double alignment(const Embedding& embedding, const Vector& v) {
  return alignment(embedding.Q, v);
}

}  // namespace dfo
