#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dfo/rng.hpp"
#include "dfo/trs.hpp"

using namespace dfo;

namespace {

// Independent oracle: global trust-region minimum via eigendecomposition and
// bisection on the secular equation (generic instances; no hard-case
// handling, which random dense instances avoid almost surely).
double exact_trs_decrease(const Vector& g, const Matrix& H, double delta) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  const Vector lam = es.eigenvalues();
  const Vector gt = es.eigenvectors().transpose() * g;
  auto step_norm = [&](double mu) {
    double s2 = 0.0;
    for (int i = 0; i < lam.size(); ++i) {
      const double d = lam[i] + mu;
      s2 += (gt[i] * gt[i]) / (d * d);
    }
    return std::sqrt(s2);
  };
  const double lam_min = lam.minCoeff();
  double mu = 0.0;
  if (lam_min > 0.0 && step_norm(0.0) <= delta) {
    mu = 0.0;  // interior Newton step
  } else {
    double lo = std::max(0.0, -lam_min) + 1e-14;
    while (step_norm(lo) < delta) lo *= 0.5;  // ensure we start inside the pole
    double hi = lo;
    while (step_norm(hi) > delta) hi = hi * 2.0 + 1.0;
    for (int it = 0; it < 200; ++it) {
      mu = 0.5 * (lo + hi);
      if (step_norm(mu) > delta) {
        lo = mu;
      } else {
        hi = mu;
      }
    }
  }
  Vector s(g.size());
  for (int i = 0; i < lam.size(); ++i) s[i] = -gt[i] / (lam[i] + mu);
  const Vector step = es.eigenvectors() * s;
  return -(g.dot(step) + 0.5 * step.dot(H * step));
}

Model make_model(const Vector& g, const Matrix& H) {
  Model m;
  m.f0 = 0.0;
  m.g = g;
  m.H = H;
  return m;
}

}  // namespace

TEST_CASE("cauchy point hand values") {
  Vector g(2);
  g << 1.0, 0.0;

  SUBCASE("linear model hits the boundary") {
    Model m;
    m.f0 = 0.0;
    m.g = g;
    const Step s = cauchy_point(m, 0.5);
    CHECK(s.s[0] == doctest::Approx(-0.5));
    CHECK(s.s[1] == doctest::Approx(0.0));
    CHECK(s.predicted_decrease == doctest::Approx(0.5));
  }
  SUBCASE("interior Newton-on-ray point") {
    const Step s = cauchy_point(make_model(g, Matrix::Identity(2, 2)), 2.0);
    CHECK(s.s[0] == doctest::Approx(-1.0));
    CHECK(s.predicted_decrease == doctest::Approx(0.5));
  }
  SUBCASE("zero gradient returns zero step") {
    const Step s = cauchy_point(make_model(Vector::Zero(2), Matrix::Identity(2, 2)), 1.0);
    CHECK(s.s.norm() == 0.0);
    CHECK(s.predicted_decrease == 0.0);
  }
  SUBCASE("negative curvature rides to the boundary") {
    const Step s = solve_trs(make_model(g, -Matrix::Identity(2, 2)), 1.0);
    CHECK(s.s.norm() == doctest::Approx(1.0));
    CHECK(s.predicted_decrease >= 1.0);
  }
  CHECK_THROWS_AS(cauchy_point(make_model(g, Matrix()), 0.0), std::invalid_argument);
}

TEST_CASE("refined solve never loses ground and tracks the exact solve") {
  Vector g(2);
  g << 1.0, 1.0;
  Matrix H = Matrix::Zero(2, 2);
  H(0, 0) = 1.0;
  H(1, 1) = 100.0;
  const Step cauchy = cauchy_point(make_model(g, H), 10.0);
  const Step refined = solve_trs(make_model(g, H), 10.0, true);
  CHECK(refined.predicted_decrease >= cauchy.predicted_decrease);
  // Interior Newton point for this instance: decrease = 1/2 g^T H^{-1} g.
  CHECK(refined.predicted_decrease == doctest::Approx(0.505).epsilon(1e-9));
  CHECK(refined.predicted_decrease ==
        doctest::Approx(exact_trs_decrease(g, H, 10.0)).epsilon(1e-8));

  // With H = 0 refinement is exactly the Cauchy point.
  Model linear;
  linear.g = g;
  const Step a = solve_trs(linear, 0.7, true);
  const Step b = cauchy_point(linear, 0.7);
  CHECK((a.s - b.s).norm() == doctest::Approx(0.0));
}

TEST_CASE("fraction-of-Cauchy certificate on random instances") {
  Rng rng(505, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + static_cast<int>(rng.uniform() * 5);
    Vector g(d);
    for (int i = 0; i < d; ++i) g[i] = rng.normal();
    Matrix A(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) A(i, j) = rng.normal();
    }
    const Matrix H = clip_spectral(0.5 * (A + A.transpose()), 2.0);
    const double delta = std::exp(rng.uniform(-3.0, 2.0));

    const Model m = make_model(g, H);
    const Step cp = cauchy_point(m, delta);
    const Step tr = solve_trs(m, delta, true);
    CHECK(tr.s.norm() <= delta * (1.0 + 1e-12));
    CHECK(tr.predicted_decrease >= cp.predicted_decrease * (1.0 - 1e-12));
    // Predicted decrease agrees with direct model evaluation.
    CHECK(tr.predicted_decrease == doctest::Approx(m.f0 - m.value(tr.s)).epsilon(1e-10));
    // Never better than the exact minimizer.
    CHECK(tr.predicted_decrease <= exact_trs_decrease(g, H, delta) * (1.0 + 1e-8) + 1e-12);
    // The certificate itself (kappa_fcd = 1), against the true ||H||.
    Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
    const double hnorm = es.eigenvalues().cwiseAbs().maxCoeff();
    const double ray = hnorm > 0 ? g.norm() / hnorm : std::numeric_limits<double>::infinity();
    CHECK(tr.predicted_decrease >=
          0.5 * g.norm() * std::min(ray, delta) * (1.0 - 1e-9) - 1e-300);
  }
}

TEST_CASE("clip_spectral bounds the spectrum") {
  Rng rng(606, 0);
  Matrix A(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) A(i, j) = 3.0 * rng.normal();
  }
  const Matrix H = clip_spectral(A, 1.5);
  Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().cwiseAbs().maxCoeff() <= 1.5 * (1.0 + 1e-12));
  CHECK((H - H.transpose()).norm() <= 1e-12);
}
