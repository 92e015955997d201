#include "riesz/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "riesz/quadrature.hpp"
#include "riesz/serialize.hpp"

namespace riesz {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// acute angle between two circle directions given by plane angles
double circle_acute(double a, double b) {
  double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}
}  // namespace

DiscreteMeasure::DiscreteMeasure(Space space_, std::vector<Point> points_,
                                 std::vector<double> weights_)
    : space(space_), points(std::move(points_)), weights(std::move(weights_)) {
  if (points.size() != weights.size())
    fail(ErrorCode::InvalidArgument, "points and weights must have equal length");
  double sum = 0;
  for (double w : weights) {
    if (w < 0) fail(ErrorCode::InvalidArgument, "weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    fail(ErrorCode::InvalidArgument, "weights must sum to 1 (got " + std::to_string(sum) + ")");
  for (const auto& p : points)
    if (!(p.space() == space)) fail(ErrorCode::InvalidArgument, "point does not belong to the space");
}

DiscreteMeasure onb_measure(const Space& space) {
  int n = space.d() + 1;
  int fd = space.field_dim();
  std::vector<Point> pts;
  std::vector<double> w(n, 1.0 / n);
  for (int i = 0; i < n; ++i) {
    std::vector<double> c(space.ambient_real_dim(), 0.0);
    c[i * fd] = 1.0;  // real unit in slot i
    pts.emplace_back(space, std::move(c));
  }
  return DiscreteMeasure(space, std::move(pts), std::move(w));
}

double energy_discrete(const Space& space, const RadialKernel& kernel, const DiscreteMeasure& mu) {
  const std::size_t n = mu.points.size();
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double ww = mu.weights[i] * mu.weights[j];
      if (ww == 0.0) continue;
      double theta = (i == j) ? 0.0 : geodesic_distance(space, mu.points[i], mu.points[j]);
      double v = kernel.eval_angle(space, theta);
      if (std::isinf(v)) return kInf;
      sum += ww * v;
    }
  }
  return sum;
}

double energy_uniform(const Space& space, const RadialKernel& kernel, double tol) {
  if (!kernel.integrable_on(space)) {
    std::ostringstream msg;
    msg << "kernel " << kernel.spec() << " has divergent energy on " << space.spec();
    fail(ErrorCode::Numeric, msg.str());
  }
  if (space.family() == Family::Sphere && kernel.kind() == RadialKernel::Kind::AcuteAnglePower) {
    // theta = vartheta/2 on RP^d turns the kink at |t| into a smooth power
    Space proj(Family::RealProj, space.d());
    auto parts = kernel_angle_parts(kernel, proj);
    JacobiParams params(proj.alpha(), proj.beta());
    return singular_integrate_power(parts.power, parts.smooth, params, tol).value;
  }
  auto parts = kernel_angle_parts(kernel, space);
  JacobiParams params(space.alpha(), space.beta());
  return singular_integrate_power(parts.power, parts.smooth, params, tol).value;
}

PoleEquatorMeasure::PoleEquatorMeasure(double w_, Equator eq, std::vector<double> angles)
    : w(w_), equator(eq), circle_angles(std::move(angles)) {
  if (!(w >= 0.0 && w <= 1.0)) fail(ErrorCode::InvalidArgument, "pole weight must lie in [0,1]");
  if (eq == Equator::DiscreteOnCircle && circle_angles.empty())
    fail(ErrorCode::InvalidArgument, "discrete equator needs at least one angle");
}

double circle_energy(double lambda, PoleEquatorMeasure::Equator eq,
                     const std::vector<double>& angles) {
  switch (eq) {
    case PoleEquatorMeasure::Equator::UniformCircle:
      return std::pow(kPi / 2.0, lambda) / (lambda + 1.0);
    case PoleEquatorMeasure::Equator::OrthoPair:
      return 0.5 * std::pow(kPi / 2.0, lambda);
    case PoleEquatorMeasure::Equator::DiscreteOnCircle: {
      double sum = 0;
      std::size_t m = angles.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (i != j) sum += std::pow(circle_acute(angles[i], angles[j]), lambda);
      return sum / static_cast<double>(m * m);
    }
  }
  return 0;
}

double energy_pole_equator(double lambda, const PoleEquatorMeasure& mu) {
  double ie = circle_energy(lambda, mu.equator, mu.circle_angles);
  double w = mu.w;
  return 2.0 * w * (1.0 - w) * std::pow(kPi / 2.0, lambda) + (1.0 - w) * (1.0 - w) * ie;
}

PoleWeight optimal_pole_weight(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    fail(ErrorCode::InvalidArgument, "optimal pole weight applies for 0 < lambda < 1");
  double w = lambda / (2.0 * lambda + 1.0);
  return {w, energy_pole_equator(lambda, PoleEquatorMeasure(w))};
}

PoleWeight optimal_pole_weight_numeric(double lambda, double tol) {
  auto value = [&](double w) { return energy_pole_equator(lambda, PoleEquatorMeasure(w)); };
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.0, b = 1.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = value(c), fd = value(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = value(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = value(d);
    }
  }
  double w = 0.5 * (a + b);
  return {w, value(w)};
}

namespace {

// Uniform point in the geodesic cap of radius eps around center, sphere case:
// inverse-CDF in the radius, uniform tangent direction.
Point sphere_cap_sample(const Space& space, const Point& center, double eps, Rng& rng) {
  int dim = space.d();
  double r;
  if (dim == 1) {
    double base = std::atan2(center.coords()[1], center.coords()[0]);
    double offset = eps * (2.0 * rng.uniform() - 1.0);
    return Point(space, {std::cos(base + offset), std::sin(base + offset)});
  }
  if (dim == 2) {
    // density prop. to sin r on [0, eps]
    double u = rng.uniform();
    r = std::acos(1.0 - u * (1.0 - std::cos(eps)));
  } else {
    // numeric inversion of the sin^{dim-1} law on a fixed grid
    const int grid = 1024;
    std::vector<double> cdf(grid + 1, 0.0);
    for (int i = 1; i <= grid; ++i) {
      double rr = eps * i / grid;
      cdf[i] = cdf[i - 1] + std::pow(std::sin(rr), dim - 1);
    }
    double target = rng.uniform() * cdf[grid];
    auto it = std::lower_bound(cdf.begin(), cdf.end(), target);
    r = eps * static_cast<double>(it - cdf.begin()) / grid;
  }
  // random tangent direction at center
  std::vector<double> t(center.coords().size());
  double dot = 0, n2 = 0;
  do {
    dot = 0;
    n2 = 0;
    for (auto& v : t) v = rng.gaussian();
    for (std::size_t k = 0; k < t.size(); ++k) dot += t[k] * center.coords()[k];
    for (std::size_t k = 0; k < t.size(); ++k) t[k] -= dot * center.coords()[k];
    for (double v : t) n2 += v * v;
  } while (n2 < 1e-24);
  double inv = 1.0 / std::sqrt(n2);
  std::vector<double> out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k)
    out[k] = std::cos(r) * center.coords()[k] + std::sin(r) * inv * t[k];
  return Point(space, std::move(out));
}

Point cap_sample(const Space& space, const Point& center, double eps, Rng& rng) {
  if (!space.projective()) return sphere_cap_sample(space, center, eps, rng);
  // rejection from the ambient Gaussian; acceptance = sigma(B_eps)
  for (std::size_t tries = 0; tries < 20'000'000; ++tries) {
    Point z = Point::random(space, rng);
    if (geodesic_distance(space, z, center) < eps) return z;
  }
  fail(ErrorCode::Numeric, "cap sampling failed: zero acceptance (eps too small?)");
}

}  // namespace

McEstimate averaged_kernel_mc(const Space& space, const RadialKernel& kernel, double eps,
                              double theta0, std::size_t n_samples, Rng& rng) {
  if (!(eps > 0.0 && eps < kPi / 8.0))
    fail(ErrorCode::InvalidArgument, "cap radius must lie in (0, pi/8)");
  if (!(theta0 >= 0.0 && theta0 <= kPi))
    fail(ErrorCode::InvalidArgument, "separation angle must lie in [0, pi]");
  if (n_samples < 2) fail(ErrorCode::InvalidArgument, "need at least 2 samples");

  // anchor pair at geodesic distance theta0
  int m = space.ambient_real_dim();
  space.field();
  std::vector<double> cx(m, 0.0), cy(m, 0.0);
  int fd = space.field_dim();
  double half = space.projective() ? 0.5 * theta0 : theta0;
  cx[0] = 1.0;
  cy[0] = std::cos(half);
  cy[fd] = std::sin(half);
  Point x(space, std::move(cx)), y(space, std::move(cy));

  double sum = 0, sum2 = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    Point u = cap_sample(space, x, eps, rng);
    Point v = cap_sample(space, y, eps, rng);
    double val = kernel.eval_angle(space, geodesic_distance(space, u, v));
    sum += val;
    sum2 += val * val;
  }
  double mean = sum / n_samples;
  double var = std::max(0.0, sum2 / n_samples - mean * mean);
  return {mean, std::sqrt(var / n_samples), n_samples};
}

JensenCheck jensen_redistribution_check(int d, const std::vector<double>& weights, double s) {
  Space space(Family::RealProj, d);
  DiscreteMeasure base = onb_measure(space);
  if (weights.size() > base.points.size())
    fail(ErrorCode::Domain, "more weights than diametral atoms available");
  std::vector<Point> pts(base.points.begin(), base.points.begin() + weights.size());
  return jensen_redistribution_check(DiscreteMeasure(space, std::move(pts), weights), s);
}

JensenCheck jensen_redistribution_check(const DiscreteMeasure& mu, double s) {
  if (!(s < 0.0)) fail(ErrorCode::InvalidArgument, "redistribution check applies for s < 0");
  for (std::size_t i = 0; i < mu.points.size(); ++i)
    for (std::size_t j = i + 1; j < mu.points.size(); ++j)
      if (std::abs(geodesic_distance(mu.space, mu.points[i], mu.points[j]) - kPi) > 1e-9)
        fail(ErrorCode::Domain, "atoms must be pairwise at distance pi");
  RadialKernel kernel = RadialKernel::geodesic_riesz(s);
  JensenCheck out{energy_discrete(mu.space, kernel, mu), 0.0};
  out.energy_equalized = energy_discrete(mu.space, kernel, onb_measure(mu.space));
  return out;
}

MeasureSpec parse_measure_spec(std::string_view spec) {
  if (spec == "sigma") return {MeasureSpec::Kind::Sigma};
  if (spec == "onb") return {MeasureSpec::Kind::Onb};
  if (spec.substr(0, 5) == "file:") {
    MeasureSpec out{MeasureSpec::Kind::File};
    out.path = std::string(spec.substr(5));
    return out;
  }
  if (spec.substr(0, 13) == "pole-equator:") {
    std::string rest(spec.substr(13));
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      fail(ErrorCode::InvalidArgument, "expected pole-equator:<w>:<uniform|pair>");
    MeasureSpec out{MeasureSpec::Kind::PoleEquator};
    try {
      out.w = std::stod(rest.substr(0, colon));
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "bad pole weight in measure spec");
    }
    std::string eq = rest.substr(colon + 1);
    if (eq == "uniform")
      out.equator = PoleEquatorMeasure::Equator::UniformCircle;
    else if (eq == "pair")
      out.equator = PoleEquatorMeasure::Equator::OrthoPair;
    else
      fail(ErrorCode::InvalidArgument, "equator must be 'uniform' or 'pair'");
    return out;
  }
  fail(ErrorCode::InvalidArgument, "unknown measure spec '" + std::string(spec) + "'");
}

double energy_of_spec(const Space& space, const RadialKernel& kernel, std::string_view measure_spec,
                      double tol) {
  MeasureSpec spec = parse_measure_spec(measure_spec);
  switch (spec.kind) {
    case MeasureSpec::Kind::Sigma:
      return energy_uniform(space, kernel, tol);
    case MeasureSpec::Kind::Onb:
      return energy_discrete(space, kernel, onb_measure(space));
    case MeasureSpec::Kind::PoleEquator: {
      if (kernel.kind() != RadialKernel::Kind::AcuteAnglePower)
        fail(ErrorCode::InvalidArgument, "pole-equator energies are defined for acute:<lambda>");
      if (!(space.family() == Family::Sphere && space.d() == 2))
        fail(ErrorCode::InvalidArgument, "pole-equator measures live on S:2");
      return energy_pole_equator(kernel.param(), PoleEquatorMeasure(spec.w, spec.equator));
    }
    case MeasureSpec::Kind::File: {
      DiscreteMeasure mu = load_measure_json(spec.path);
      if (!(mu.space == space))
        fail(ErrorCode::InvalidArgument, "measure file space does not match " + space.spec());
      return energy_discrete(space, kernel, mu);
    }
  }
  fail(ErrorCode::InvalidArgument, "unhandled measure kind");
}

}  // namespace riesz
