#include "dfo/drivers.hpp"

#include <cmath>
#include <stdexcept>

namespace dfo {

const char* to_string(IterClass c) {
  switch (c) {
    case IterClass::Success: return "success";
    case IterClass::Shrink: return "shrink";
    case IterClass::GeomAdd: return "geom_add";
    case IterClass::GeomFar: return "geom_far";
    case IterClass::GeomBad: return "geom_bad";
  }
  return "?";
}

bool is_geometry(IterClass c) {
  return c == IterClass::GeomAdd || c == IterClass::GeomFar || c == IterClass::GeomBad;
}

double rho(double f_center, double f_trial, double m_center, double m_trial) {
  const double predicted = m_center - m_trial;
  if (predicted <= 1e-15) return -std::numeric_limits<double>::infinity();
  return (f_center - f_trial) / predicted;
}

Driver::Driver(Algorithm algorithm, Oracle& oracle, const Vector& x0, const TRConfig& config)
    : algorithm_(algorithm), oracle_(&oracle), config_(config), x_(x0), delta_(config.delta0) {
  const int n = static_cast<int>(x0.size());
  if (n < 1 || n != oracle.problem().dim) {
    throw std::invalid_argument("Driver: x0 does not match the problem dimension");
  }
  if (!(config.eta1 > 0 && config.eta1 < 1)) throw std::invalid_argument("Driver: eta1 in (0,1)");
  if (!(config.eta2 > 0)) throw std::invalid_argument("Driver: eta2 > 0");
  if (!(config.gamma > 0 && config.gamma < 1)) {
    throw std::invalid_argument("Driver: gamma in (0,1)");
  }
  if (!(config.delta0 > 0)) throw std::invalid_argument("Driver: delta0 > 0");
  if (!(config.kappa_bhm > 0)) throw std::invalid_argument("Driver: kappa_bhm > 0");
  if (config.budget < 0) throw std::invalid_argument("Driver: budget >= 0");
  if (subspace()) {
    if (config.q < 3 || config.q > n) {
      throw std::invalid_argument("Driver: subspace drivers need 3 <= q <= n");
    }
    model_dim_ = config.q;
  } else {
    model_dim_ = n;
  }
  if (config.lambda_threshold > 0 && config.lambda_threshold <= 1.0) {
    throw std::invalid_argument("Driver: lambda threshold must exceed 1");
  }
  lambda_threshold_ =
      config.lambda_threshold > 0 ? config.lambda_threshold : 1.0 + 1.0 / model_dim_;
  geometry_.dim = model_dim_;
  rng_ = Rng(config.rng_seed, 0);
}

std::int64_t Driver::init_calls() const {
  switch (algorithm_) {
    case Algorithm::Alg1:
    case Algorithm::Alg3: return 0;
    case Algorithm::Alg2: return 1;
    case Algorithm::Alg4: return 1 + config_.q;
  }
  return 0;
}

std::int64_t Driver::max_calls_per_iter() const {
  switch (algorithm_) {
    case Algorithm::Alg1: return static_cast<std::int64_t>(x_.size()) + 2;
    case Algorithm::Alg3: return config_.q + 2;
    case Algorithm::Alg2: return 2;
    case Algorithm::Alg4: return config_.q + 1;  // trial + basis rebuild
  }
  return 0;
}

void Driver::initialize() {
  if (initialized_) return;
  if (uses_geometry()) {
    geometry_.center_value = oracle_->eval(x_);
    if (algorithm_ == Algorithm::Alg4) reset_subspace_geometry();
  }
  initialized_ = true;
}

void Driver::reset_subspace_geometry() {
  const int n = static_cast<int>(x_.size());
  Q_ = haar_sample(n, config_.q, rng_).Q;
  geometry_.Y.clear();
  geometry_.values.clear();
  for (int i = 0; i < config_.q; ++i) {
    Vector y = delta_ * Vector::Unit(config_.q, i);
    const double value = oracle_->eval(x_ + Q_ * y);
    geometry_.Y.push_back(std::move(y));
    geometry_.values.push_back(value);
  }
}

Model Driver::finish_model(Model m) const {
  m.kappa_bhm = config_.kappa_bhm;
  if (config_.hessian_hook) {
    Matrix h = config_.hessian_hook(x_);
    if (subspace()) h = Q_.transpose() * h * Q_;
    m.H = clip_spectral(h, config_.kappa_bhm);
  }
  return m;
}

void Driver::grow_delta() {
  delta_ /= config_.gamma;
  if (config_.delta_max > 0) delta_ = std::min(delta_, config_.delta_max);
}

const Matrix* Driver::last_embedding() const {
  if (!subspace() || last_q_used_.size() == 0) return nullptr;
  return &last_q_used_;
}

IterationRecord Driver::step() {
  if (!initialized_) initialize();
  if (oracle_->call_count() + max_calls_per_iter() > config_.budget) {
    throw std::runtime_error("Driver::step: oracle budget exhausted");
  }
  return uses_geometry() ? step_geometry() : step_fd();
}

IterationRecord Driver::step_fd() {
  const std::int64_t calls0 = oracle_->call_count();
  const int d = model_dim_;
  double delta_fd =
      config_.delta_choice == DeltaChoice::DeltaEqDelta ? delta_ : delta_ / std::sqrt(double(d));
  delta_fd = std::max(delta_fd, config_.fd_delta_floor);

  const double f_center = oracle_->eval(x_);
  Model model;
  model.f0 = f_center;
  if (algorithm_ == Algorithm::Alg3) {
    Q_ = haar_sample(static_cast<int>(x_.size()), config_.q, rng_).Q;
    last_q_used_ = Q_;
    model.g = fd_subspace_gradient_with_center(*oracle_, x_, Q_, f_center, delta_fd);
  } else {
    model.g = fd_gradient_with_center(*oracle_, x_, f_center, delta_fd);
  }
  model = finish_model(model);

  const Step trial = solve_trs(model, delta_);
  const Vector s_full = lift(trial.s);
  const double f_trial = oracle_->eval(x_ + s_full);
  const double ratio = rho(f_center, f_trial, model.f0, model.value(trial.s));
  const double gnorm = model.g.norm();
  const bool success = ratio >= config_.eta1 && gnorm >= config_.eta2 * delta_;

  IterationRecord rec;
  rec.k = k_;
  rec.delta = delta_;
  rec.model_grad_norm = gnorm;
  rec.rho = ratio;
  rec.cls = success ? IterClass::Success : IterClass::Shrink;
  rec.set_in_ball = true;  // vacuous for the FD drivers
  rec.fully_linear = oracle_->mode() == NoiseMode::Exact ||
                     (config_.fd_delta_floor > 0 && delta_fd >= config_.fd_delta_floor);

  if (success) {
    x_ += s_full;
    grow_delta();
  } else {
    delta_ *= config_.gamma;
  }
  rec.oracle_calls_this_iter = oracle_->call_count() - calls0;
  rec.cumulative_calls = oracle_->call_count();
  ++k_;
  return rec;
}

IterationRecord Driver::step_geometry() {
  const std::int64_t calls0 = oracle_->call_count();
  const int d = model_dim_;
  if (subspace()) last_q_used_ = Q_;

  Model model;
  model.f0 = geometry_.center_value;
  model.g = Vector::Zero(d);
  double lambda_measured = std::numeric_limits<double>::quiet_NaN();
  const bool in_ball = geometry_.max_norm() <= delta_ * (1.0 + 1e-12);
  bool have_model = false;
  if (geometry_.complete()) {
    try {
      lambda_measured = lambda_poisedness(geometry_, delta_).lambda;
      Vector values(d);
      for (int i = 0; i < d; ++i) values[i] = geometry_.values[i];
      model.g = interp_linear_model(geometry_.center_value, values, geometry_.matrix(),
                                    config_.kappa_bhm)
                    .g;
      have_model = true;
    } catch (const singular_set_error&) {
      // Geometry correction below will repair the set; run with g = 0.
    }
  }
  model = finish_model(model);

  const Step trial = solve_trs(model, delta_);
  const bool do_trial = trial.s.norm() > 0.0;
  double f_trial = geometry_.center_value;
  if (do_trial) f_trial = oracle_->eval(x_ + lift(trial.s));
  const double ratio = rho(geometry_.center_value, f_trial, model.f0, model.value(trial.s));
  const double gnorm = model.g.norm();
  const bool success = ratio >= config_.eta1 && gnorm >= config_.eta2 * delta_;

  IterationRecord rec;
  rec.k = k_;
  rec.delta = delta_;
  rec.model_grad_norm = gnorm;
  rec.rho = ratio;
  rec.set_in_ball = in_ball;
  rec.lambda_report = lambda_measured;
  rec.fully_linear = have_model && in_ball && lambda_measured <= lambda_threshold_ &&
                     oracle_->mode() == NoiseMode::Exact;

  if (success) {
    x_ += lift(trial.s);
    if (algorithm_ == Algorithm::Alg4) {
      geometry_.center_value = f_trial;  // basis rebuild below replaces the set
    } else {
      geometry_ = shift_on_success(geometry_, trial.s, f_trial);
    }
    grow_delta();
    if (algorithm_ == Algorithm::Alg4) reset_subspace_geometry();
    rec.cls = IterClass::Success;
  } else {
    const GeometryAction action = geometry_action(geometry_, delta_, lambda_threshold_, trial.s);
    switch (action.kind) {
      case GeometryActionKind::Add: {
        const double value =
            action.needs_oracle ? oracle_->eval(x_ + lift(action.point)) : f_trial;
        geometry_.Y.push_back(action.point);
        geometry_.values.push_back(value);
        rec.cls = IterClass::GeomAdd;
        break;
      }
      case GeometryActionKind::ReplaceFar: {
        const double value =
            action.needs_oracle ? oracle_->eval(x_ + lift(action.point)) : f_trial;
        geometry_.Y[action.index] = action.point;
        geometry_.values[action.index] = value;
        rec.cls = IterClass::GeomFar;
        break;
      }
      case GeometryActionKind::ReplaceBad: {
        geometry_.Y[action.index] = action.point;
        geometry_.values[action.index] = oracle_->eval(x_ + lift(action.point));
        rec.cls = IterClass::GeomBad;
        break;
      }
      case GeometryActionKind::GoodGeometry: {
        delta_ *= config_.gamma;
        if (algorithm_ == Algorithm::Alg4) reset_subspace_geometry();
        rec.cls = IterClass::Shrink;
        break;
      }
    }
  }
  rec.oracle_calls_this_iter = oracle_->call_count() - calls0;
  rec.cumulative_calls = oracle_->call_count();
  ++k_;
  return rec;
}

RunResult run(Algorithm algorithm, const Problem& problem, Oracle& oracle, const Vector& x0,
              const TRConfig& config, const RunOptions& options) {
  Driver driver(algorithm, oracle, x0, config);
  RunResult result;
  const double align_threshold =
      config.q > 0 ? static_cast<double>(config.q) / (10.0 * problem.dim) : 0.0;
  while (true) {
    const Vector grad = problem.grad(driver.x());
    const double grad_norm = grad.norm();
    if (grad_norm <= options.grad_tol) {
      result.terminated = true;
      break;
    }
    const std::int64_t need =
        (driver.initialized() ? 0 : driver.init_calls()) + driver.max_calls_per_iter();
    if (oracle.call_count() + need > config.budget) break;
    driver.initialize();
    const double phi = problem.eval(driver.x());
    IterationRecord rec = driver.step();
    rec.true_grad_norm = grad_norm;
    rec.phi = phi;
    if (const Matrix* q = driver.last_embedding()) {
      rec.aligned = alignment(*q, grad) >= align_threshold;
    }
    if (std::isfinite(options.c1_for_b_flag)) {
      rec.b_flag = rec.delta > options.c1_for_b_flag * grad_norm;
    }
    result.trace.push_back(std::move(rec));
  }
  result.final_x = driver.x();
  result.final_phi = problem.eval(driver.x());
  result.final_grad_norm = problem.grad(driver.x()).norm();
  result.total_calls = oracle.call_count();
  return result;
}

}  // namespace dfo
