#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dfo/lagrange.hpp"
#include "dfo/rng.hpp"

using namespace dfo;

namespace {

GeometrySet set_from(const Matrix& Y) {
  GeometrySet s;
  s.dim = static_cast<int>(Y.rows());
  for (int j = 0; j < Y.cols(); ++j) {
    s.Y.push_back(Y.col(j));
    s.values.push_back(0.0);
  }
  return s;
}

Matrix random_ball_set(Rng& rng, int d, double delta) {
  Matrix Y(d, d);
  for (int j = 0; j < d; ++j) {
    Vector u(d);
    for (int i = 0; i < d; ++i) u[i] = rng.normal();
    u /= u.norm();
    Y.col(j) = delta * std::pow(rng.uniform(), 1.0 / d) * u;
  }
  return Y;
}

}  // namespace

TEST_CASE("lambda_poisedness closed-form hand values") {
  SUBCASE("scaled identity is 1-poised") {
    for (double delta : {0.1, 1.0, 7.0}) {
      const PoisednessReport r = lambda_poisedness(Matrix(delta * Matrix::Identity(3, 3)), delta);
      CHECK(r.lambda == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("60 degree pair") {
    Matrix Y(2, 2);
    Y << 1.0, 0.5, 0.0, std::sqrt(3.0) / 2.0;
    const PoisednessReport r = lambda_poisedness(Y, 1.0);
    CHECK(r.lambda == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  }
  SUBCASE("30 degree pair") {
    Matrix Y(2, 2);
    Y << 1.0, std::sqrt(3.0) / 2.0, 0.0, 0.5;
    const PoisednessReport r = lambda_poisedness(Y, 1.0);
    CHECK(r.lambda == doctest::Approx(2.0).epsilon(1e-12));
    // Tie between the two Lagrange polynomials: lowest index wins.
    CHECK(r.argmax_index == 0);
    // s* attains ell_{i*}(s*) = lambda and is orthogonal to the other point.
    CHECK(r.argmax_point.dot(r.coeffs.col(0)) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(std::abs(r.argmax_point.dot(Y.col(1))) <= 1e-12);
    CHECK(r.argmax_point.norm() == doctest::Approx(1.0));
    CHECK(r.argmax_point[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.argmax_point[1] == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-12));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(lambda_poisedness(Matrix::Zero(2, 2), 1.0), singular_set_error);
    GeometrySet incomplete;
    incomplete.dim = 2;
    incomplete.Y.push_back(Vector::Unit(2, 0));
    incomplete.values.push_back(0.0);
    CHECK_THROWS_AS(lambda_poisedness(incomplete, 1.0), std::invalid_argument);
  }
}

TEST_CASE("poisedness agrees with brute-force maximization on sampled ball points") {
  Rng rng(71, 0);
  for (int d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 5; ++trial) {
      const double delta = 0.8;
      const Matrix Y = random_ball_set(rng, d, delta);
      PoisednessReport rep;
      try {
        rep = lambda_poisedness(Y, delta);
      } catch (const singular_set_error&) {
        continue;
      }
      double brute = 0.0;
      for (int s = 0; s < 10000; ++s) {
        Vector u(d);
        for (int i = 0; i < d; ++i) u[i] = rng.normal();
        u *= delta / u.norm();  // the max lives on the sphere
        for (int j = 0; j < d; ++j) brute = std::max(brute, std::abs(u.dot(rep.coeffs.col(j))));
      }
      CHECK(brute <= rep.lambda * (1.0 + 1e-12));
      CHECK(brute >= rep.lambda * 0.97);  // sampling slack
    }
  }
}

TEST_CASE("geometry_action branch order and hand values") {
  Vector trial(2);
  trial << 0.3, 0.1;

  SUBCASE("incomplete set adds the trial") {
    GeometrySet s;
    s.dim = 2;
    s.Y.push_back(Vector::Unit(2, 0) * 0.5);
    s.values.push_back(0.0);
    const GeometryAction a = geometry_action(s, 1.0, 1.5, trial);
    CHECK(a.kind == GeometryActionKind::Add);
    CHECK(a.needs_oracle == false);
    CHECK((a.point - trial).norm() == 0.0);
  }
  SUBCASE("far point replaced first") {
    Matrix Y(2, 2);
    Y << 0.6, 0.0, 0.0, 2.0;
    const GeometryAction a = geometry_action(set_from(Y), 1.0, 1.5, trial);
    CHECK(a.kind == GeometryActionKind::ReplaceFar);
    CHECK(a.index == 1);
    CHECK(a.needs_oracle == false);
  }
  SUBCASE("bad point replaced by s*") {
    Matrix Y(2, 2);
    Y << 1.0, std::sqrt(3.0) / 2.0, 0.0, 0.5;
    const GeometryAction a = geometry_action(set_from(Y), 1.0, 1.5, trial);
    CHECK(a.kind == GeometryActionKind::ReplaceBad);
    CHECK(a.index == 0);
    CHECK(a.needs_oracle == true);
    CHECK(a.point[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(a.point[1] == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-12));
  }
  SUBCASE("good geometry when nothing applies") {
    const GeometryAction a =
        geometry_action(set_from(Matrix(0.9 * Matrix::Identity(2, 2))), 1.0, 1.5, trial);
    CHECK(a.kind == GeometryActionKind::GoodGeometry);
  }
  SUBCASE("degenerate trial is substituted by an orthogonal direction") {
    GeometrySet s;
    s.dim = 2;
    s.Y.push_back(Vector::Unit(2, 0) * 0.5);
    s.values.push_back(0.0);
    const GeometryAction a = geometry_action(s, 1.0, 1.5, Vector::Zero(2));
    CHECK(a.kind == GeometryActionKind::Add);
    CHECK(a.needs_oracle == true);
    CHECK(a.point.norm() == doctest::Approx(1.0));
    CHECK(std::abs(a.point.dot(s.Y[0])) <= 1e-12);
  }
}

TEST_CASE("shift_on_success set algebra") {
  SUBCASE("single point: furthest dropped, old center kept") {
    GeometrySet s;
    s.dim = 2;
    s.Y.push_back((Vector(2) << 1.0, 0.0).finished());
    s.values.push_back(7.0);
    s.center_value = 3.0;
    Vector step(2);
    step << 0.0, 1.0;
    const GeometrySet out = shift_on_success(s, step, 5.0);
    REQUIRE(out.size() == 1);
    CHECK(out.Y[0][0] == doctest::Approx(0.0));
    CHECK(out.Y[0][1] == doctest::Approx(-1.0));
    CHECK(out.values[0] == 3.0);  // the old center's value travels with -s
    CHECK(out.center_value == 5.0);
  }
  SUBCASE("empty set: nothing to drop") {
    GeometrySet s;
    s.dim = 2;
    s.center_value = 1.0;
    Vector step(2);
    step << 0.25, -0.5;
    const GeometrySet out = shift_on_success(s, step, 0.5);
    REQUIRE(out.size() == 1);
    CHECK((out.Y[0] + step).norm() == 0.0);
    CHECK(out.values[0] == 1.0);
  }
  SUBCASE("two points: the larger dropped, the other translated") {
    GeometrySet s;
    s.dim = 2;
    Vector a(2), b(2), step(2);
    a << 2.0, 0.0;
    b << 0.5, 0.5;
    step << 0.1, 0.1;
    s.Y = {a, b};
    s.values = {10.0, 20.0};
    s.center_value = 1.0;
    const GeometrySet out = shift_on_success(s, step, 0.9);
    REQUIRE(out.size() == 2);
    CHECK((out.Y[0] - (b - step)).norm() <= 1e-15);
    CHECK(out.values[0] == 20.0);
    CHECK((out.Y[1] + step).norm() <= 1e-15);
    CHECK(out.values[1] == 1.0);
  }
}

TEST_CASE("ReplaceBad candidate is an in-sphere direction orthogonal to the rest") {
  Rng rng(72, 0);
  for (int d = 2; d <= 6; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const double delta = 1.3;
      const Matrix Y = random_ball_set(rng, d, delta);
      PoisednessReport rep;
      try {
        rep = lambda_poisedness(Y, delta);
      } catch (const singular_set_error&) {
        continue;
      }
      CHECK(rep.argmax_point.norm() == doctest::Approx(delta).epsilon(1e-10));
      for (int j = 0; j < d; ++j) {
        if (j == rep.argmax_index) continue;
        CHECK(std::abs(rep.argmax_point.dot(Y.col(j))) <= 1e-9 * delta * Y.col(j).norm());
      }
    }
  }
}

TEST_CASE("a fully orthogonal sphere set is exactly 1-poised") {
  Rng rng(74, 0);
  for (int d : {2, 5, 9}) {
    const double delta = 1.7;
    Matrix gauss(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) gauss(i, j) = rng.normal();
    }
    const Matrix Q = Eigen::HouseholderQR<Matrix>(gauss).householderQ();
    const PoisednessReport r = lambda_poisedness(Matrix(delta * Q), delta);
    CHECK(r.lambda == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("orthogonalization dynamic: at most d ReplaceBad steps to 1-poised") {
  Rng rng(73, 0);
  for (int d = 2; d <= 16; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      const double delta = 0.6;
      Matrix Y = random_ball_set(rng, d, delta);
      try {
        lambda_poisedness(Y, delta);
      } catch (const singular_set_error&) {
        continue;
      }
      int steps = 0;
      int grown = 0;
      auto members = [&](const Matrix& m) {
        // |I| = points of norm delta orthogonal to all the others
        int count = 0;
        for (int i = 0; i < d; ++i) {
          if (std::abs(m.col(i).norm() - delta) > 1e-9) continue;
          bool orth = true;
          for (int j = 0; j < d && orth; ++j) {
            if (j != i && std::abs(m.col(i).dot(m.col(j))) > 1e-9) orth = false;
          }
          if (orth) ++count;
        }
        return count;
      };
      while (steps < d) {
        const PoisednessReport rep = lambda_poisedness(Y, delta);
        if (rep.lambda <= 1.0 + 1e-8) break;
        const int before = members(Y);
        Y.col(rep.argmax_index) = rep.argmax_point;
        ++steps;
        if (members(Y) > before) ++grown;
      }
      CHECK(lambda_poisedness(Y, delta).lambda == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(grown == steps);  // every step enlarged the orthogonal core
    }
  }
}
