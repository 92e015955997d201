#include "riesz/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace riesz {

namespace {

constexpr double kMinQuadTol = 5e-15;  // roundoff floor for the inner integrals

void require_integrable(const Space& space, const RadialKernel& kernel) {
  if (!kernel.integrable_on(space)) {
    std::ostringstream msg;
    msg << "kernel " << kernel.spec() << " has divergent energy on " << space.spec()
        << " (s >= D = " << space.dim() << ")";
    fail(ErrorCode::Numeric, msg.str());
  }
}

}  // namespace

CoefficientEntry jacobi_coefficient(const Space& space, const RadialKernel& kernel, int n,
                                    double tol) {
  require_integrable(space, kernel);
  JacobiParams params(space.alpha(), space.beta());
  double p1 = jacobi_at_one(params, n);
  double scale = norm_constant_m(params, n) / (p1 * p1);
  auto parts = kernel_angle_parts(kernel, space);
  auto g = [&](double phi) { return parts.smooth(phi) * jacobi_eval(params, n, std::cos(phi)); };
  double inner_tol = std::max(tol / std::max(1.0, scale), kMinQuadTol);
  IntegralResult integral = singular_integrate_power(parts.power, g, params, inner_tol);
  return {n, scale * integral.value, scale * integral.error_estimate};
}

CoefficientTable coefficient_table(const Space& space, const RadialKernel& kernel, int n_max,
                                   double tol) {
  if (n_max < 0) fail(ErrorCode::InvalidArgument, "n_max must be nonnegative");
  require_integrable(space, kernel);
  CoefficientTable table{space, kernel.spec(), tol, {}};
  table.entries.resize(n_max + 1);
  parallel_for(n_max + 1, [&](std::size_t n) {
    table.entries[n] = jacobi_coefficient(space, kernel, static_cast<int>(n), tol);
  });
  return table;
}

RodriguesCoefficient coefficient_via_rodrigues(const Space& space, const RadialKernel& kernel,
                                               int n, double tol) {
  if (kernel.kind() != RadialKernel::Kind::GeodesicRiesz &&
      kernel.kind() != RadialKernel::Kind::GeodesicLog)
    fail(ErrorCode::InvalidArgument, "Rodrigues route applies to geodesic Riesz kernels");
  const double s = kernel.param();
  if (!(s > -1.0)) fail(ErrorCode::InvalidArgument, "Rodrigues route needs s > -1");
  require_integrable(space, kernel);
  if (n < 1) fail(ErrorCode::InvalidArgument, "Rodrigues route needs n >= 1");
  if (n > 10) fail(ErrorCode::Resource, "Rodrigues route limited to n <= 10 (term growth)");

  JacobiParams params(space.alpha(), space.beta());
  const double alpha = space.alpha(), beta = space.beta();
  DerivativeExpansion exp_n = derivative_expansion(s, n);

  // hat f_n = m_n / (P_n(1)^2 c_{a,b} 2^n n!) * sum_i C_i T_i with
  // T_i = int t^{c_i} (1-t^2)^{n-b_i+beta} (1-t)^{a-b} arccos(t)^{-s_i} dt.
  double log_scale = std::log(norm_constant_m(params, n)) - 2.0 * std::log(jacobi_at_one(params, n)) -
                     std::log(weight_mass_c(params)) - n * std::log(2.0) - std::lgamma(n + 1.0);
  double scale = std::exp(log_scale);

  RodriguesCoefficient out{0.0, 0.0, {}};
  out.term_integrals.resize(exp_n.terms.size());
  double value = 0.0, err = 0.0;
  std::size_t m = exp_n.terms.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& term = exp_n.terms[i];
    JacobiParams tp(n - term.b() + alpha, n - term.b() + beta);
    double mass = weight_mass_c(tp);
    int c = term.c;
    auto g = [c](double phi) {
      double t = std::cos(phi);
      return c == 0 ? 1.0 : std::pow(t, c);
    };
    double budget = std::max(tol / (scale * term.coeff * mass * m), kMinQuadTol);
    IntegralResult integral = singular_integrate_power(term.s_i(s), g, tp, budget);
    double ti = mass * integral.value;
    out.term_integrals[i] = ti;
    value += term.coeff * ti;
    err += term.coeff * mass * integral.error_estimate;
  }
  out.value = scale * value;
  out.error_estimate = scale * err;
  return out;
}

PositivityScan positivity_scan(const Space& space, const RadialKernel& kernel, int n_max,
                               double tol, double margin) {
  if (n_max < 1) fail(ErrorCode::InvalidArgument, "positivity scan needs n_max >= 1");
  PositivityScan scan{coefficient_table(space, kernel, n_max, tol), 0, 1, 0, 0, 0, false, margin};
  scan.min_value = scan.table.entries[1].value;
  scan.argmin = 1;
  for (int n = 1; n <= n_max; ++n) {
    double v = scan.table.entries[n].value;
    if (v < scan.min_value) {
      scan.min_value = v;
      scan.argmin = n;
    }
    if (v > margin)
      ++scan.positive_count;
    else if (v < -margin)
      ++scan.negative_count;
    else
      ++scan.indeterminate_count;
  }
  scan.all_positive = scan.min_value > margin;
  return scan;
}

namespace {

RadialKernel family_kernel(const std::string& family, double param) {
  if (family == "geo") return param == 0.0 ? RadialKernel::geodesic_log() : RadialKernel::geodesic_riesz(param);
  if (family == "chord") return param == 0.0 ? RadialKernel::chordal_log() : RadialKernel::chordal_riesz(param);
  if (family == "acute") return RadialKernel::acute_power(param);
  fail(ErrorCode::InvalidArgument, "unknown kernel family '" + family + "' (expected geo|chord|acute)");
}

// Extremal coefficient over n in [1, n_max]: the statistic whose sign decides
// whether sigma can be optimal. Maximization kernels watch the largest
// coefficient, minimization kernels the smallest.
double extremal_statistic(const Space& space, const std::string& family, double param, int n_max,
                          double tol) {
  RadialKernel kernel = family_kernel(family, param);
  CoefficientTable table = coefficient_table(space, kernel, n_max, tol);
  bool maximization = family == "acute";
  double ext = table.entries[1].value;
  for (int n = 2; n <= n_max; ++n) {
    double v = table.entries[n].value;
    ext = maximization ? std::max(ext, v) : std::min(ext, v);
  }
  return ext;
}

}  // namespace

TransitionReport find_transition(const Space& space, const std::string& family, double lo,
                                 double hi, int n_max, double param_tol, double coeff_tol) {
  if (!(lo < hi)) fail(ErrorCode::InvalidArgument, "bracket must satisfy lo < hi");
  TransitionReport report;
  report.space_spec = space.spec();
  report.family = family;
  report.axis = family == "acute" ? "lambda" : "s";
  report.n_max = n_max;

  double stat_lo = extremal_statistic(space, family, lo, n_max, coeff_tol);
  double stat_hi = extremal_statistic(space, family, hi, n_max, coeff_tol);
  report.stat_lo = stat_lo;
  report.stat_hi = stat_hi;
  report.history.emplace_back(lo, stat_lo);
  report.history.emplace_back(hi, stat_hi);
  if ((stat_lo > 0) == (stat_hi > 0)) {
    std::ostringstream msg;
    msg << "no sign change on [" << lo << ", " << hi << "]: extremal coefficient is " << stat_lo
        << " at " << lo << " and " << stat_hi << " at " << hi;
    fail(ErrorCode::Bracket, msg.str());
  }
  while (hi - lo > param_tol) {
    double mid = 0.5 * (lo + hi);
    double stat_mid = extremal_statistic(space, family, mid, n_max, coeff_tol);
    report.history.emplace_back(mid, stat_mid);
    if ((stat_mid > 0) == (stat_lo > 0)) {
      lo = mid;
      stat_lo = stat_mid;
    } else {
      hi = mid;
    }
  }
  report.bracket_lo = lo;
  report.bracket_hi = hi;
  report.estimate = 0.5 * (lo + hi);
  return report;
}

double cesaro_a(double delta, int k) {
  if (!(delta > -1.0)) fail(ErrorCode::InvalidArgument, "Cesaro order must satisfy delta > -1");
  if (k < 0) fail(ErrorCode::InvalidArgument, "Cesaro index must be nonnegative");
  return std::exp(std::lgamma(delta + k + 1.0) - std::lgamma(delta + 1.0) - std::lgamma(k + 1.0));
}

std::vector<double> cesaro_coefficients(const CoefficientTable& table, double delta, int n) {
  if (n > table.n_max()) fail(ErrorCode::InvalidArgument, "Cesaro degree exceeds table n_max");
  if (n < 0) fail(ErrorCode::InvalidArgument, "Cesaro degree must be nonnegative");
  std::vector<double> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    // A_{n-k}/A_n in log space
    double log_ratio = std::lgamma(delta + n - k + 1.0) - std::lgamma(n - k + 1.0) -
                       std::lgamma(delta + n + 1.0) + std::lgamma(n + 1.0);
    out[k] = std::exp(log_ratio) * table.entries[k].value;
  }
  return out;
}

double cesaro_eval(const CoefficientTable& table, double delta, int n, double t) {
  std::vector<double> coeffs = cesaro_coefficients(table, delta, n);
  JacobiParams params(table.space.alpha(), table.space.beta());
  // running three-term recurrence over k
  double sum = coeffs[0];
  if (n == 0) return sum;
  const double a = params.alpha, b = params.beta;
  double pm1 = 1.0;
  double pc = (a + 1.0) + (a + b + 2.0) * (t - 1.0) / 2.0;
  sum += coeffs[1] * pc;
  for (int k = 2; k <= n; ++k) {
    double s2 = 2.0 * k + a + b;
    double c1 = 2.0 * k * (k + a + b) * (s2 - 2.0);
    double c2 = (s2 - 1.0) * (a * a - b * b);
    double c3 = (s2 - 2.0) * (s2 - 1.0) * s2;
    double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s2;
    double pn = ((c2 + c3 * t) * pc - c4 * pm1) / c1;
    pm1 = pc;
    pc = pn;
    sum += coeffs[k] * pc;
  }
  return sum;
}

}  // namespace riesz
