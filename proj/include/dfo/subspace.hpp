#pragma once

#include <cstdint>

#include "dfo/rng.hpp"
#include "dfo/trs.hpp"

namespace dfo {

/// An n x q matrix with orthonormal columns plus its RNG provenance.
struct Embedding {
  Matrix Q;
  std::uint64_t seed_tag = 0;
};

/// Draws Q from the Haar distribution on n x q orthonormal matrices:
/// a standard Gaussian matrix is QR-factorized and the signs are fixed so the
/// triangular factor has a positive diagonal, which makes the law exactly
/// rotation invariant. Throws when q < 1 or q > n.
Embedding haar_sample(int n, int q, Rng& rng);

/// Fraction of v's squared norm retained by projecting onto range(Q):
/// ||Q Q^T v||^2 / ||v||^2 in [0, 1]. The subspace is kappa_g-well aligned
/// with v exactly when this is >= 1 - kappa_g^2. Throws on v = 0.
double alignment(const Embedding& embedding, const Vector& v);
double alignment(const Matrix& Q, const Vector& v);

}  // namespace dfo
