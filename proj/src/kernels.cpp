#include "riesz/kernels.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace riesz {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

RadialKernel RadialKernel::geodesic_riesz(double s) {
  if (s == 0.0) fail(ErrorCode::InvalidArgument, "use the logarithmic kernel for s = 0");
  return RadialKernel(Kind::GeodesicRiesz, s);
}
RadialKernel RadialKernel::chordal_riesz(double s) {
  if (s == 0.0) fail(ErrorCode::InvalidArgument, "use the logarithmic kernel for s = 0");
  return RadialKernel(Kind::ChordalRiesz, s);
}
RadialKernel RadialKernel::acute_power(double lambda) {
  if (!(lambda > 0.0)) fail(ErrorCode::InvalidArgument, "acute-angle power needs lambda > 0");
  return RadialKernel(Kind::AcuteAnglePower, lambda);
}
RadialKernel RadialKernel::geodesic_log() { return RadialKernel(Kind::GeodesicLog, 0.0); }
RadialKernel RadialKernel::chordal_log() { return RadialKernel(Kind::ChordalLog, 0.0); }
RadialKernel RadialKernel::custom(std::function<double(double)> fn) {
  RadialKernel k(Kind::Custom, 0.0);
  k.fn_ = std::move(fn);
  return k;
}

RadialKernel RadialKernel::parse(std::string_view spec) {
  if (spec == "geolog") return geodesic_log();
  if (spec == "chordlog") return chordal_log();
  auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    std::string head(spec.substr(0, colon));
    std::string num(spec.substr(colon + 1));
    double v;
    try {
      std::size_t used = 0;
      v = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "bad parameter in kernel spec '" + std::string(spec) + "'");
    }
    if (head == "geo") return v == 0.0 ? geodesic_log() : geodesic_riesz(v);
    if (head == "chord") return v == 0.0 ? chordal_log() : chordal_riesz(v);
    if (head == "acute") return acute_power(v);
  }
  fail(ErrorCode::InvalidArgument, "unknown kernel spec '" + std::string(spec) + "'");
}

std::string RadialKernel::spec() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::GeodesicRiesz: os << "geo:" << param_; break;
    case Kind::ChordalRiesz: os << "chord:" << param_; break;
    case Kind::AcuteAnglePower: os << "acute:" << param_; break;
    case Kind::GeodesicLog: os << "geolog"; break;
    case Kind::ChordalLog: os << "chordlog"; break;
    case Kind::Custom: os << "custom"; break;
  }
  return os.str();
}

double RadialKernel::eval(double t) const {
  t = std::min(1.0, std::max(-1.0, t));
  switch (kind_) {
    case Kind::GeodesicRiesz: {
      double theta = std::acos(t);
      if (theta == 0.0) return param_ > 0 ? kInf : 0.0;
      return std::pow(theta, -param_) / param_;
    }
    case Kind::GeodesicLog: {
      double theta = std::acos(t);
      return theta == 0.0 ? kInf : -std::log(theta);
    }
    case Kind::ChordalRiesz: {
      double rho = std::sqrt(0.5 * (1.0 - t));
      if (rho == 0.0) return param_ > 0 ? kInf : 0.0;
      return std::pow(rho, -param_) / param_;
    }
    case Kind::ChordalLog: {
      double rho = std::sqrt(0.5 * (1.0 - t));
      return rho == 0.0 ? kInf : -std::log(rho);
    }
    case Kind::AcuteAnglePower:
      return std::pow(std::acos(std::abs(t)), param_);
    case Kind::Custom:
      return fn_(t);
  }
  return 0.0;
}

double RadialKernel::eval_angle(const Space& space, double phi) const {
  switch (kind_) {
    case Kind::GeodesicRiesz:
      if (phi == 0.0) return param_ > 0 ? kInf : 0.0;
      return std::pow(phi, -param_) / param_;
    case Kind::GeodesicLog:
      return phi == 0.0 ? kInf : -std::log(phi);
    case Kind::ChordalRiesz: {
      double rho = std::sin(0.5 * phi);
      if (rho == 0.0) return param_ > 0 ? kInf : 0.0;
      return std::pow(rho, -param_) / param_;
    }
    case Kind::ChordalLog: {
      double rho = std::sin(0.5 * phi);
      return rho == 0.0 ? kInf : -std::log(rho);
    }
    case Kind::AcuteAnglePower:
      if (space.projective()) return std::pow(0.5 * phi, param_);
      return std::pow(std::min(phi, kPi - phi), param_);
    case Kind::Custom:
      return fn_(std::cos(phi));
  }
  return 0.0;
}

bool RadialKernel::integrable_on(const Space& space) const {
  if (kind_ == Kind::GeodesicRiesz || kind_ == Kind::ChordalRiesz)
    return param_ < static_cast<double>(space.dim());
  return true;
}

bool RadialKernel::singular_at_one() const {
  switch (kind_) {
    case Kind::GeodesicRiesz:
    case Kind::ChordalRiesz: return param_ > 0;
    case Kind::GeodesicLog:
    case Kind::ChordalLog: return true;
    default: return false;
  }
}

AngleDecomposition kernel_angle_parts(const RadialKernel& kernel, const Space& space) {
  const double s = kernel.param();
  switch (kernel.kind()) {
    case RadialKernel::Kind::GeodesicRiesz:
      if (s > 0) return {s, [s](double) { return 1.0 / s; }};
      return {0.0, [s](double phi) { return std::pow(phi, -s) / s; }};
    case RadialKernel::Kind::GeodesicLog:
      return {0.0, [](double phi) { return -std::log(phi); }};
    case RadialKernel::Kind::ChordalRiesz:
      if (s > 0)
        // sin(phi/2)^{-s} = phi^{-s} * (sin(phi/2)/phi)^{-s}, second factor bounded
        return {s, [s](double phi) { return std::pow(std::sin(0.5 * phi) / phi, -s) / s; }};
      return {0.0, [s](double phi) { return std::pow(std::sin(0.5 * phi), -s) / s; }};
    case RadialKernel::Kind::ChordalLog:
      return {0.0, [](double phi) { return -std::log(std::sin(0.5 * phi)); }};
    case RadialKernel::Kind::AcuteAnglePower: {
      double lam = s;
      if (space.projective()) return {0.0, [lam](double phi) { return std::pow(0.5 * phi, lam); }};
      return {0.0, [lam](double phi) { return std::pow(std::min(phi, kPi - phi), lam); }};
    }
    case RadialKernel::Kind::Custom: {
      RadialKernel copy = kernel;
      return {0.0, [copy](double phi) { return copy.eval(std::cos(phi)); }};
    }
  }
  fail(ErrorCode::InvalidArgument, "unhandled kernel kind");
}

DerivativeExpansion derivative_expansion(double s, int k) {
  if (!(s > -1.0)) fail(ErrorCode::InvalidArgument, "derivative expansion needs s > -1");
  if (k < 0) fail(ErrorCode::InvalidArgument, "derivative order must be nonnegative");
  if (k > 12) fail(ErrorCode::Resource, "derivative order above 12 is rejected (3^k term growth)");

  DerivativeExpansion out{s, k, {}};
  if (k == 0) {
    out.terms.push_back({1.0, 0, 0, 0});
    return out;
  }
  // d/dt F_s = F_{s+1, 1/2, 0}; afterwards apply
  // d/dt F_{g,b,c} = g F_{g+1, b+1/2, c} + 2b F_{g, b+1, c+1} + c F_{g, b, c-1}
  std::map<std::tuple<int, int, int>, double> terms;
  terms[{1, 1, 0}] = 1.0;
  for (int step = 1; step < k; ++step) {
    std::map<std::tuple<int, int, int>, double> next;
    for (const auto& [key, coeff] : terms) {
      auto [off, tb, c] = key;
      double gamma = s + off;
      next[{off + 1, tb + 1, c}] += coeff * gamma;
      if (tb > 0) next[{off, tb + 2, c + 1}] += coeff * tb;  // 2b = tb
      if (c > 0) next[{off, tb, c - 1}] += coeff * c;
    }
    terms = std::move(next);
  }
  for (const auto& [key, coeff] : terms) {
    auto [off, tb, c] = key;
    out.terms.push_back({coeff, off, tb, c});
  }
  return out;
}

double eval_expansion(const DerivativeExpansion& exp, double t) {
  if (!(t > -1.0 && t < 1.0)) fail(ErrorCode::Domain, "expansion evaluation needs t strictly inside (-1,1)");
  const double theta = std::acos(t);
  const double one_minus_t2 = (1.0 - t) * (1.0 + t);
  double sum = 0.0;
  for (const auto& term : exp.terms) {
    double si = term.s_i(exp.s);
    double v = std::pow(theta, -si) / std::pow(one_minus_t2, term.b());
    if (term.c > 0) v *= std::pow(t, term.c);
    if (exp.order == 0) {
      // three-branch sign convention of F_{s,0,0}
      if (exp.s == 0.0)
        v = -std::log(theta);
      else if (exp.s < 0.0)
        v = -v;
    }
    sum += term.coeff * v;
  }
  return sum;
}

double eval_derivative(double s, int k, double t) {
  return eval_expansion(derivative_expansion(s, k), t);
}

double aux_h(double t) {
  t = std::min(1.0, std::max(-1.0, t));
  return std::sqrt(0.5 * (1.0 - t)) - std::acos(t) / kPi;
}

double aux_p(double alpha, double beta, double s_i, double t) {
  double d = alpha - beta;
  return std::pow(1.0 - t, d) / std::pow(std::acos(t), s_i) -
         std::pow(1.0 + t, d) / std::pow(std::acos(-t), s_i);
}

}  // namespace riesz
