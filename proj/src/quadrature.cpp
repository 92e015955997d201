#include "riesz/quadrature.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace riesz {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogExpUnderflow = -745.0;
constexpr double kDeltaFloor = 1e-300;

// 1 / (1 + e^{-x}), stable for any x.
double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// log(sech v) = log 2 - |v| - log(1 + e^{-2|v|})
double log_sech(double v) {
  double av = std::abs(v);
  return std::log(2.0) - av - std::log1p(std::exp(-2.0 * av));
}

// Kahan-compensated accumulator; keeps the roundoff floor in the error
// estimate honest even over ~1e5 node sums.
struct PanelState {
  double sum = 0.0;
  double comp = 0.0;
  double abs_sum = 0.0;

  void add(double c) {
    double y = c - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    abs_sum += std::abs(c);
  }
};

class Integrator {
 public:
  Integrator(double power, const std::function<double(double)>& g, const JacobiParams& params,
             const QuadratureOptions& opts)
      : power_(power), g_(g), params_(params), opts_(opts) {}

  IntegralResult run(double tol);

 private:
  // One tanh-sinh node of a panel: `left` selects (0, pi/2], else [pi/2, pi).
  double node_value(bool left, double u);

  double power_;
  const std::function<double(double)>& g_;
  JacobiParams params_;
  QuadratureOptions opts_;
  std::size_t evals_ = 0;
};

double Integrator::node_value(bool left, double u) {
  const double v = 0.5 * kPi * std::sinh(u);
  // distance from the singular end of the panel (0 on the left, pi on the right)
  const double delta = 0.5 * kPi * sigmoid(left ? 2.0 * v : -2.0 * v);
  if (delta < kDeltaFloor) return 0.0;
  const double phi = left ? delta : kPi - delta;

  // log of (1-cos)^a (1+cos)^b sin(phi) dphi/du - power*log(phi), all in
  // cancellation-free pieces
  const double a = params_.alpha, b = params_.beta;
  double log_one_minus_cos, log_one_plus_cos, log_sin;
  if (left) {
    double sh = std::sin(0.5 * phi), ch = std::cos(0.5 * phi);
    log_one_minus_cos = std::log(2.0) + 2.0 * std::log(sh);
    log_one_plus_cos = std::log(2.0) + 2.0 * std::log(ch);
    log_sin = std::log(2.0) + std::log(sh) + std::log(ch);
  } else {
    double sh = std::sin(0.5 * delta), ch = std::cos(0.5 * delta);
    log_one_plus_cos = std::log(2.0) + 2.0 * std::log(sh);
    log_one_minus_cos = std::log(2.0) + 2.0 * std::log(ch);
    log_sin = std::log(2.0) + std::log(sh) + std::log(ch);
  }
  const double log_dphi_du = std::log(kPi * kPi / 8.0) + std::log(std::cosh(u)) + 2.0 * log_sech(v);
  double logw = a * log_one_minus_cos + b * log_one_plus_cos + log_sin + log_dphi_du;
  if (power_ != 0.0) logw -= power_ * std::log(phi);
  if (logw < kLogExpUnderflow) return 0.0;

  ++evals_;
  const double gv = g_(phi);
  if (!std::isfinite(gv)) {
    std::ostringstream msg;
    msg << "integrand returned " << gv << " at phi=" << phi;
    fail(ErrorCode::Domain, msg.str());
  }
  return gv * std::exp(logw);
}

IntegralResult Integrator::run(double tol) {
  const double U = opts_.u_max;
  const double inv_c = 1.0 / weight_mass_c(params_);

  double h = 0.5;
  PanelState panels[2];
  // level 0: all multiples of h in [-U, U]
  for (int side = 0; side < 2; ++side) {
    bool left = (side == 0);
    long kmax = static_cast<long>(std::floor(U / h));
    for (long k = -kmax; k <= kmax; ++k) panels[side].add(node_value(left, k * h));
  }
  double value = h * (panels[0].sum + panels[1].sum) * inv_c;
  double prev = value;
  double err = std::numeric_limits<double>::infinity();

  // truncation floor: mass of the weight below the smallest reachable node
  double tail = 0.0;
  for (double q : {2.0 * params_.alpha + 2.0 - power_, 2.0 * params_.beta + 2.0}) {
    if (q < 1.0) tail += std::exp(q * std::log(kDeltaFloor));
  }

  int level = 0;
  for (level = 1; level <= opts_.max_level; ++level) {
    h *= 0.5;
    for (int side = 0; side < 2; ++side) {
      bool left = (side == 0);
      long kmax = static_cast<long>(std::floor(U / h));
      if (kmax % 2 == 0) --kmax;  // new nodes sit at odd multiples of h
      for (long k = -kmax; k <= kmax; k += 2) panels[side].add(node_value(left, k * h));
    }
    value = h * (panels[0].sum + panels[1].sum) * inv_c;
    double level_diff = std::abs(value - prev);
    double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * h *
                      (panels[0].abs_sum + panels[1].abs_sum) * inv_c;
    err = level_diff + tail + roundoff;
    if (level >= 3 && err <= tol * std::max(1.0, std::abs(value)))
      return {value, err, level, evals_};
    prev = value;
  }
  std::ostringstream msg;
  msg << "quadrature did not reach tol=" << tol << " after " << opts_.max_level
      << " levels; last value=" << value << " estimate=" << err;
  fail(ErrorCode::Numeric, msg.str());
}

}  // namespace

IntegralResult singular_integrate_power(double power, const std::function<double(double)>& g,
                                        const JacobiParams& params, double tol,
                                        const QuadratureOptions& opts) {
  if (!(tol > 0)) fail(ErrorCode::InvalidArgument, "quadrature tolerance must be positive");
  if (!(power < 2.0 * params.alpha + 2.0))
    fail(ErrorCode::Numeric, "endpoint power exceeds what the weight integrates");
  Integrator integ(power, g, params, opts);
  return integ.run(tol);
}

IntegralResult singular_integrate(const std::function<double(double)>& g,
                                  const JacobiParams& params, double tol,
                                  const QuadratureOptions& opts) {
  return singular_integrate_power(0.0, g, params, tol, opts);
}

}  // namespace riesz
