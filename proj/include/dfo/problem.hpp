#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

namespace dfo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A smooth test objective. The analytic gradient and the Lipschitz constant
/// are harness-side ground truth; solvers only ever see the zeroth-order
/// oracle built on top.
struct Problem {
  std::string name;
  int dim = 0;
  std::function<double(const Vector&)> eval;
  std::function<Vector(const Vector&)> grad;
  /// Gradient Lipschitz constant, valid on the box |x_i| <= box_radius.
  double lipschitz_L = 0.0;
  double lower_bound = -std::numeric_limits<double>::infinity();
  /// Domain on which lipschitz_L is certified and samplers should stay.
  double box_radius = 10.0;
};

struct ProblemSpec {
  std::string family;  // "quadratic" | "rosenbrock" | "logsumexp"
  int dim = 2;
  double eig_min = 1.0;  // quadratic: eigenvalue range of the Hessian
  double eig_max = 1.0;
  double mu = 0.5;  // logsumexp smoothing temperature
};

/// Builds a Problem from a descriptor. Throws std::invalid_argument on an
/// unknown family or dim < 1.
Problem make_problem(const ProblemSpec& spec);

/// Canonical starting point for a family (e.g. the classic Rosenbrock start).
Vector default_start(const Problem& problem);

enum class NoiseMode { Exact, Bounded };

/// Counted zeroth-order evaluator. Bounded mode adds a deterministic
/// pseudo-random perturbation in [-eps_f, eps_f] keyed on (seed, bits of x),
/// so replays hit identical values.
class Oracle {
 public:
  explicit Oracle(const Problem& problem) : problem_(&problem) {}
  Oracle(const Problem& problem, double eps_f, std::uint64_t noise_seed)
      : problem_(&problem), mode_(NoiseMode::Bounded), eps_f_(eps_f), seed_(noise_seed) {}

  /// Evaluates f(x) and increments the call counter by exactly one.
  /// Throws std::invalid_argument on non-finite input.
  double eval(const Vector& x);

  std::int64_t call_count() const { return calls_; }
  const Problem& problem() const { return *problem_; }
  NoiseMode mode() const { return mode_; }
  double eps_f() const { return eps_f_; }

 private:
  const Problem* problem_;
  NoiseMode mode_ = NoiseMode::Exact;
  double eps_f_ = 0.0;
  std::uint64_t seed_ = 0;
  std::int64_t calls_ = 0;
};

/// The tightness construction for the interpolation error lower bound:
/// phi(u) = 1/2 u^T u interpolated on the columns of sqrt(A) with
/// A = (1+eps) I - eps 11^T, which is exactly Lambda-poised in B(0,1).
struct AdversarialInstance {
  int dim = 0;
  double target_lambda = 1.0;
  double eps_star = 0.0;
  Matrix Y;  // n x n, columns are the unit-norm interpolation displacements

  double phi(const Vector& u) const { return 0.5 * u.squaredNorm(); }
  /// Interpolation gradient of phi on Y at center 0 (closed form Y^{-T} rhs).
  Vector interpolation_gradient() const;
};

/// Scalar equation whose root in (0, 1/(n-1)) defines eps for a target
/// poisedness: 1/(1+e) + e/((1+e)^2 (1 - n e/(1+e))) = Lambda^2.
double adversarial_lambda_sq(int n, double eps);

/// Builds the instance for a target Lambda > 1; eps found by bisection to
/// 1e-12 residual. Throws std::invalid_argument if Lambda is not achievable.
AdversarialInstance adversarial_instance(int n, double lambda);

/// Same construction with eps forced directly (test hook for hand values).
AdversarialInstance adversarial_from_eps(int n, double eps);

}  // namespace dfo
