#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dfo/model_builders.hpp"
#include "dfo/problem.hpp"
#include "dfo/rng.hpp"
#include "dfo/subspace.hpp"

using namespace dfo;

namespace {

Problem affine_problem(const Vector& a) {
  Problem p;
  p.name = "affine";
  p.dim = static_cast<int>(a.size());
  p.eval = [a](const Vector& x) { return a.dot(x); };
  p.grad = [a](const Vector&) { return a; };
  p.lipschitz_L = 0.0;
  return p;
}

}  // namespace

TEST_CASE("fd_gradient hand values and call accounting") {
  const Problem p = make_problem({"quadratic", 2, 1.0, 1.0, 0.5});
  Oracle oracle(p);
  const Vector g = fd_gradient(oracle, Vector::Zero(2), 0.1);
  CHECK(oracle.call_count() == 3);  // center once + n probes
  CHECK(g[0] == doctest::Approx(0.05));
  CHECK(g[1] == doctest::Approx(0.05));
  // Error formula: ||g - grad|| = 0.05 sqrt(2) <= sqrt(n) L delta / 2.
  CHECK(g.norm() == doctest::Approx(0.05 * std::sqrt(2.0)));
  CHECK(g.norm() <= std::sqrt(2.0) * 1.0 * 0.1 / 2.0 * (1.0 + 1e-12));

  CHECK_THROWS_AS(fd_gradient(oracle, Vector::Zero(2), 0.0), std::invalid_argument);
}

TEST_CASE("fd is exact on affine functions, any basis") {
  Vector a(3);
  a << 1.5, -2.0, 0.25;
  const Problem p = affine_problem(a);  // oracles keep a reference; must outlive them
  Oracle oracle(p);
  CHECK((fd_gradient(oracle, Vector::Ones(3), 0.37) - a).norm() <= 1e-12);

  Rng rng(11, 0);
  const Matrix basis = haar_sample(3, 3, rng).Q;
  CHECK((fd_gradient(oracle, Vector::Ones(3), 0.37, basis) - a).norm() <= 1e-10);
}

TEST_CASE("fd error bound on random quadratics (exact and noisy)") {
  const Problem p = make_problem({"quadratic", 8, 1.0, 10.0, 0.5});
  Rng rng(12, 0);
  for (int t = 0; t < 50; ++t) {
    Vector x(8);
    for (int i = 0; i < 8; ++i) x[i] = rng.uniform(-3.0, 3.0);
    const double delta = std::exp(rng.uniform(-4.0, 0.0));
    Oracle exact(p);
    const Vector g = fd_gradient(exact, x, delta);
    CHECK((g - p.grad(x)).norm() <=
          std::sqrt(8.0) * p.lipschitz_L * delta / 2.0 * (1.0 + 1e-9));

    const double eps_f = 1e-7;
    const double dn = std::max(delta, 2.0 * std::sqrt(eps_f / p.lipschitz_L));
    Oracle noisy(p, eps_f, 1000 + t);
    const Vector gn = fd_gradient(noisy, x, dn);
    CHECK((gn - p.grad(x)).norm() <= std::sqrt(8.0) * p.lipschitz_L * dn * (1.0 + 1e-9));
  }
}

TEST_CASE("fd_subspace_gradient hand value and reductions") {
  const Problem p = make_problem({"quadratic", 2, 1.0, 1.0, 0.5});
  SUBCASE("q = 1 slice through e2") {
    Oracle oracle(p);
    Matrix Q(2, 1);
    Q << 1.0, 0.0;
    const Vector ghat = fd_subspace_gradient(oracle, Vector::Unit(2, 1), Q, 0.1);
    CHECK(oracle.call_count() == 2);  // q + 1
    CHECK(ghat.size() == 1);
    CHECK(ghat[0] == doctest::Approx(0.05));  // phi_hat(v) = (1 + v^2)/2
  }
  SUBCASE("q = n with identity embedding equals full-space fd") {
    Oracle a(p), b(p);
    const Vector x = Vector::Ones(2);
    const Vector full = fd_gradient(a, x, 0.05);
    const Vector sub = fd_subspace_gradient(b, x, Matrix::Identity(2, 2), 0.05);
    CHECK((full - sub).norm() == 0.0);
  }
  SUBCASE("affine is exact, ghat = Q^T a") {
    Vector a(3);
    a << 2.0, 0.5, -1.0;
    const Problem affine = affine_problem(a);
    Oracle oracle(affine);
    Rng rng(13, 0);
    const Matrix Q = haar_sample(3, 2, rng).Q;
    const Vector ghat = fd_subspace_gradient(oracle, Vector::Zero(3), Q, 0.2);
    CHECK((ghat - Q.transpose() * a).norm() <= 1e-10);
  }
  SUBCASE("non-orthonormal Q rejected") {
    Oracle oracle(p);
    Matrix Q(2, 1);
    Q << 1.0, 1.0;
    CHECK_THROWS_AS(fd_subspace_gradient(oracle, Vector::Zero(2), Q, 0.1),
                    std::invalid_argument);
  }
}

TEST_CASE("subspace fd satisfies the subspace fully-linear bound") {
  const Problem p = make_problem({"quadratic", 6, 1.0, 10.0, 0.5});
  Rng rng(14, 0);
  for (int t = 0; t < 50; ++t) {
    const Matrix Q = haar_sample(6, 3, rng).Q;
    Vector x(6);
    for (int i = 0; i < 6; ++i) x[i] = rng.uniform(-2.0, 2.0);
    const double delta = 0.3;
    Oracle oracle(p);
    const Vector ghat = fd_subspace_gradient(oracle, x, Q, delta);
    const Vector reduced_grad = Q.transpose() * p.grad(x);  // grad of phi(x + Qv) at v = 0
    CHECK((ghat - reduced_grad).norm() <=
          std::sqrt(3.0) * p.lipschitz_L * delta / 2.0 * (1.0 + 1e-9));
  }
}

TEST_CASE("interp_linear_model hand values and failure modes") {
  SUBCASE("half-identity displacements on the isotropic quadratic") {
    const Matrix Y = 0.5 * Matrix::Identity(2, 2);
    Vector f_points(2);
    f_points << 0.125, 0.125;
    const Model m = interp_linear_model(0.0, f_points, Y);
    CHECK(m.g[0] == doctest::Approx(0.25));
    CHECK(m.g[1] == doctest::Approx(0.25));
  }
  SUBCASE("affine interpolation is exact on any poised set") {
    Vector a(3);
    a << 1.0, -3.0, 2.0;
    const Problem p = affine_problem(a);
    Rng rng(15, 0);
    Matrix Y(3, 3);
    for (int j = 0; j < 3; ++j) {
      for (int i = 0; i < 3; ++i) Y(i, j) = rng.normal();
    }
    Vector f_points(3);
    const Vector x0 = Vector::Ones(3);
    for (int j = 0; j < 3; ++j) f_points[j] = p.eval(x0 + Y.col(j));
    const Model m = interp_linear_model(p.eval(x0), f_points, Y);
    CHECK((m.g - a).norm() <= 1e-10);
  }
  SUBCASE("adversarial instance reproduces the closed-form error") {
    const AdversarialInstance inst = adversarial_from_eps(2, 0.2);
    Vector f_points(2);
    for (int j = 0; j < 2; ++j) f_points[j] = inst.phi(inst.Y.col(j));
    const Model m = interp_linear_model(0.0, f_points, inst.Y);
    CHECK(m.g.norm() == doctest::Approx(0.5 * std::sqrt(2.5)).epsilon(1e-10));
  }
  SUBCASE("near-singular sets raise the geometry-correction error") {
    Matrix Y(2, 2);
    Y << 1.0, 1.0, 0.0, 1e-12;
    Vector f(2);
    f << 1.0, 1.0;
    CHECK_THROWS_AS(interp_linear_model(0.0, f, Y), singular_set_error);
  }
  SUBCASE("solve residual stays at roundoff even near the conditioning limit") {
    Matrix Y(2, 2);
    Y << 1.0, 1.0, 0.0, 1e-7;  // cond ~ 2e7, inside the 1e8 threshold
    Vector f(2);
    f << 0.3, 0.3 + 2e-7;
    const Model m = interp_linear_model(0.1, f, Y);
    const Vector rhs = f.array() - 0.1;
    const double resid = (Y.transpose() * m.g - rhs).norm();
    CHECK(resid <= 1e-10 * (1.0 + rhs.norm() + Y.norm() * m.g.norm()));
  }
}

TEST_CASE("fl_constants per-mode values and the kappa_ef relation") {
  // fd_full with delta = Delta: kappa_eg = sqrt(d) L.
  const FullyLinearCert fd = fl_constants(FlMode::FdFull, 4, 1.0, 1.0, 0.0, 0.5, 1.0);
  CHECK(fd.kappa_eg == doctest::Approx(2.0));
  CHECK(fd.kappa_ef == doctest::Approx(2.0 + (1.0 + 1.0) / 2.0));

  // fd_full with delta = Delta / sqrt(d): kappa_eg = L.
  const FullyLinearCert fd2 =
      fl_constants(FlMode::FdFull, 4, 3.0, 1.0 / std::sqrt(4.0), 0.0, 0.5, 1.0);
  CHECK(fd2.kappa_eg == doctest::Approx(3.0));

  // interpolation, exact: error bound at Delta = 0.1, Lambda = 1.25, d = 4.
  const FullyLinearCert in = fl_constants(FlMode::Interpolation, 4, 1.0, 1.25, 0.0, 0.1, 1.0);
  CHECK(in.gradient_error_bound() == doctest::Approx(0.2 * std::sqrt(4.25)).epsilon(1e-12));
  CHECK(in.gradient_error_bound() == doctest::Approx(0.41231).epsilon(1e-4));

  // Lambda = 1: statement form collapses to sqrt(2 d) L.
  const FullyLinearCert one = fl_constants(FlMode::Interpolation, 3, 2.0, 1.0, 0.0, 1.0, 1.0);
  CHECK(one.kappa_eg == doctest::Approx(std::sqrt(3.0) * 2.0 * std::sqrt(2.0)));

  // Noisy interpolation carries the additive term.
  const FullyLinearCert noisy =
      fl_constants(FlMode::Interpolation, 3, 2.0, 1.5, 1e-6, 0.2, 1.0);
  const double geom = std::sqrt(3.0 * (1.5 * 1.5 - 1.0) + 2.0);
  CHECK(noisy.additive == doctest::Approx(geom * std::sqrt(3.0) * 2.0 * 1e-6 * 1.5 / 0.2));
  CHECK(noisy.kappa_ef == doctest::Approx(noisy.kappa_eg + (2.0 + 1.0) / 2.0));

  // subspace fd: kappa_eg = sqrt(q) L / 2.
  const FullyLinearCert sub = fl_constants(FlMode::FdSubspace, 9, 2.0, 0.0, 0.0, 1.0, 1.0);
  CHECK(sub.kappa_eg == doctest::Approx(3.0));

  CHECK_THROWS_AS(fl_constants(FlMode::Interpolation, 3, 1.0, 0.9, 0.0, 1.0, 1.0),
                  std::invalid_argument);
}
