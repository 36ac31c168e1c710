#include "dfo/problem.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "dfo/rng.hpp"

namespace dfo {
namespace {

Problem make_quadratic(const ProblemSpec& spec) {
  const int n = spec.dim;
  if (spec.eig_min <= 0 || spec.eig_max < spec.eig_min) {
    throw std::invalid_argument("quadratic: need 0 < eig_min <= eig_max");
  }
  Vector eigs(n);
  for (int i = 0; i < n; ++i) {
    const double t = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
    eigs[i] = spec.eig_min + t * (spec.eig_max - spec.eig_min);
  }
  Problem p;
  p.name = "quadratic";
  p.dim = n;
  p.eval = [eigs](const Vector& x) { return 0.5 * x.dot(eigs.cwiseProduct(x)); };
  p.grad = [eigs](const Vector& x) -> Vector { return eigs.cwiseProduct(x); };
  p.lipschitz_L = spec.eig_max;
  p.lower_bound = 0.0;
  p.box_radius = 1e6;  // gradient is globally Lipschitz
  return p;
}

Problem make_rosenbrock(const ProblemSpec& spec) {
  const int n = spec.dim;
  if (n < 2) throw std::invalid_argument("rosenbrock: need dim >= 2");
  Problem p;
  p.name = "rosenbrock";
  p.dim = n;
  p.eval = [](const Vector& x) {
    double f = 0.0;
    for (int i = 0; i + 1 < x.size(); ++i) {
      const double a = x[i + 1] - x[i] * x[i];
      const double b = 1.0 - x[i];
      f += 100.0 * a * a + b * b;
    }
    return f;
  };
  p.grad = [](const Vector& x) -> Vector {
    Vector g = Vector::Zero(x.size());
    for (int i = 0; i + 1 < x.size(); ++i) {
      const double a = x[i + 1] - x[i] * x[i];
      g[i] += -400.0 * x[i] * a - 2.0 * (1.0 - x[i]);
      g[i + 1] += 200.0 * a;
    }
    return g;
  };
  // The Rosenbrock gradient is not globally Lipschitz; certify L on a box via
  // a Gershgorin row-sum bound of the Hessian: |H_ii| <= 202 + 400R + 1200R^2,
  // off-diagonals <= 400R each.
  const double r = 10.0;
  p.box_radius = r;
  p.lipschitz_L = 202.0 + 400.0 * r + 1200.0 * r * r + 800.0 * r;
  p.lower_bound = 0.0;
  return p;
}

Problem make_logsumexp(const ProblemSpec& spec) {
  const int n = spec.dim;
  const double mu = spec.mu;
  if (mu <= 0) throw std::invalid_argument("logsumexp: need mu > 0");
  // phi(x) = mu log sum_i (exp(x_i/mu) + exp(-x_i/mu)); minimum mu log(2n)
  // at the origin, Hessian bounded by I/mu.
  Problem p;
  p.name = "logsumexp";
  p.dim = n;
  p.eval = [mu](const Vector& x) {
    const double m = x.cwiseAbs().maxCoeff() / mu;
    double s = 0.0;
    for (int i = 0; i < x.size(); ++i) {
      s += std::exp(x[i] / mu - m) + std::exp(-x[i] / mu - m);
    }
    return mu * (m + std::log(s));
  };
  p.grad = [mu](const Vector& x) -> Vector {
    const double m = x.cwiseAbs().maxCoeff() / mu;
    double s = 0.0;
    Vector g(x.size());
    for (int i = 0; i < x.size(); ++i) {
      const double ep = std::exp(x[i] / mu - m);
      const double en = std::exp(-x[i] / mu - m);
      s += ep + en;
      g[i] = ep - en;
    }
    return g / s;
  };
  p.lipschitz_L = 1.0 / mu;
  p.lower_bound = mu * std::log(2.0 * n);
  p.box_radius = 1e6;
  return p;
}

}  // namespace

Problem make_problem(const ProblemSpec& spec) {
  if (spec.dim < 1) throw std::invalid_argument("make_problem: dim must be >= 1");
  if (spec.family == "quadratic") return make_quadratic(spec);
  if (spec.family == "rosenbrock") return make_rosenbrock(spec);
  if (spec.family == "logsumexp") return make_logsumexp(spec);
  throw std::invalid_argument("make_problem: unknown family '" + spec.family + "'");
}

Vector default_start(const Problem& problem) {
  const int n = problem.dim;
  if (problem.name == "rosenbrock") {
    Vector x = Vector::Ones(n);
    x[0] = -1.2;
    return x;
  }
  return Vector::Ones(n);
}

double Oracle::eval(const Vector& x) {
  if (!x.allFinite()) throw std::invalid_argument("Oracle::eval: non-finite input");
  ++calls_;
  const double phi = problem_->eval(x);
  if (mode_ == NoiseMode::Exact) return phi;
  // FNV-1a over the value bit pattern, folded with the noise seed.
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < x.size(); ++i) {
    std::uint64_t bits;
    const double v = x[i];
    std::memcpy(&bits, &v, sizeof(bits));
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xFFu;
      h *= 1099511628211ull;
    }
  }
  h = mix64(h ^ mix64(seed_));
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;  // [0,1)
  return phi + eps_f_ * (2.0 * u - 1.0);
}

double adversarial_lambda_sq(int n, double eps) {
  const double d = 1.0 - n * eps / (1.0 + eps);
  return 1.0 / (1.0 + eps) + eps / ((1.0 + eps) * (1.0 + eps) * d);
}

namespace {

AdversarialInstance build_from_eps(int n, double eps) {
  AdversarialInstance inst;
  inst.dim = n;
  inst.eps_star = eps;
  inst.target_lambda = std::sqrt(adversarial_lambda_sq(n, eps));
  // sqrt(A) = a I + b 11^T for A = (1+eps) I - eps 11^T
  const double a = std::sqrt(1.0 + eps);
  const double b = (std::sqrt(1.0 - (n - 1) * eps) - a) / n;
  inst.Y = a * Matrix::Identity(n, n) + b * Matrix::Ones(n, n);
  return inst;
}

}  // namespace

AdversarialInstance adversarial_instance(int n, double lambda) {
  if (n < 2) throw std::invalid_argument("adversarial_instance: need n >= 2");
  if (lambda <= 1.0) throw std::invalid_argument("adversarial_instance: need Lambda > 1");
  const double target = lambda * lambda;
  double lo = 0.0;  // lambda_sq -> 1 as eps -> 0+
  double hi = (1.0 / (n - 1)) * (1.0 - 1e-12);
  const double at_hi = adversarial_lambda_sq(n, hi);
  if (!std::isfinite(at_hi) || at_hi < target) {
    throw std::invalid_argument("adversarial_instance: Lambda not achievable for this n");
  }
  double eps = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    eps = 0.5 * (lo + hi);
    const double r = adversarial_lambda_sq(n, eps) - target;
    if (std::abs(r) <= 1e-12) break;
    if (r < 0) {
      lo = eps;
    } else {
      hi = eps;
    }
  }
  return build_from_eps(n, eps);
}

AdversarialInstance adversarial_from_eps(int n, double eps) {
  if (n < 2 || eps <= 0.0 || eps >= 1.0 / (n - 1)) {
    throw std::invalid_argument("adversarial_from_eps: eps out of range");
  }
  return build_from_eps(n, eps);
}

Vector AdversarialInstance::interpolation_gradient() const {
  Vector rhs(dim);
  for (int i = 0; i < dim; ++i) rhs[i] = phi(Y.col(i));
  return Y.transpose().fullPivLu().solve(rhs);
}

}  // namespace dfo
