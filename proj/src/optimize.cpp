#include "riesz/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace riesz {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDerivClamp = 1e8;

double sign_plus(double u) { return u < 0.0 ? -1.0 : 1.0; }  // subgradient branch at 0

// Kernel value and d/du at u = x.y (representer dot product). The projective
// case reads the pair through t = 2u^2 - 1.
struct PairEval {
  double value;
  double deriv;
  bool clamped;
};

PairEval pair_eval(const Space& space, const RadialKernel& kernel, double u) {
  u = std::min(1.0, std::max(-1.0, u));
  const double s = kernel.param();
  const bool proj = space.projective();
  double root = std::sqrt(std::max(1.0 - u * u, 0.0));
  PairEval out{0, 0, false};
  auto clamp = [&](double d) {
    if (std::abs(d) > kDerivClamp) {
      out.clamped = true;
      return d > 0 ? kDerivClamp : -kDerivClamp;
    }
    return std::isfinite(d) ? d : (out.clamped = true, 0.0);
  };
  switch (kernel.kind()) {
    case RadialKernel::Kind::AcuteAnglePower: {
      double theta = std::acos(std::abs(u));
      out.value = std::pow(theta, s);
      out.deriv = clamp(-s * std::pow(theta, s - 1.0) * sign_plus(u) / std::max(root, 1e-300));
      return out;
    }
    case RadialKernel::Kind::GeodesicRiesz: {
      double ang = proj ? 2.0 * std::acos(std::abs(u)) : std::acos(u);
      out.value = ang == 0.0 ? std::numeric_limits<double>::infinity()
                             : std::pow(ang, -s) / s;
      double dang_du = proj ? -2.0 * sign_plus(u) / std::max(root, 1e-300)
                            : -1.0 / std::max(root, 1e-300);
      out.deriv = clamp(-std::pow(ang, -s - 1.0) * dang_du);
      return out;
    }
    case RadialKernel::Kind::GeodesicLog: {
      double ang = proj ? 2.0 * std::acos(std::abs(u)) : std::acos(u);
      out.value = ang == 0.0 ? std::numeric_limits<double>::infinity() : -std::log(ang);
      double dang_du = proj ? -2.0 * sign_plus(u) / std::max(root, 1e-300)
                            : -1.0 / std::max(root, 1e-300);
      out.deriv = clamp(-dang_du / ang);
      return out;
    }
    case RadialKernel::Kind::ChordalRiesz: {
      // rho = sin(theta/2): sqrt((1-u)/2) on spheres, sqrt(1-u^2) on RP
      double rho2 = proj ? std::max(1.0 - u * u, 0.0) : 0.5 * (1.0 - u);
      double drho2 = proj ? -2.0 * u : -0.5;
      out.value = rho2 == 0.0 ? std::numeric_limits<double>::infinity()
                              : std::pow(rho2, -0.5 * s) / s;
      out.deriv = clamp(-0.5 * std::pow(rho2, -0.5 * s - 1.0) * drho2);
      return out;
    }
    case RadialKernel::Kind::ChordalLog: {
      double rho2 = proj ? std::max(1.0 - u * u, 0.0) : 0.5 * (1.0 - u);
      double drho2 = proj ? -2.0 * u : -0.5;
      out.value = rho2 == 0.0 ? std::numeric_limits<double>::infinity() : -0.5 * std::log(rho2);
      out.deriv = clamp(-0.5 * drho2 / rho2);
      return out;
    }
    case RadialKernel::Kind::Custom:
      fail(ErrorCode::Unsupported, "custom kernels are not differentiable here");
  }
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void normalize(std::vector<double>& v) {
  double n = std::sqrt(dot(v, v));
  for (auto& x : v) x /= n;
}

void check_space(const Space& space) {
  if (space.family() != Family::Sphere && space.family() != Family::RealProj)
    fail(ErrorCode::Unsupported,
         "configuration optimization runs on S:<d> and RP:<d> representers only");
}

}  // namespace

Direction default_direction(const RadialKernel& kernel) {
  return kernel.kind() == RadialKernel::Kind::AcuteAnglePower ? Direction::Maximize
                                                              : Direction::Minimize;
}

OptimizationConfig::OptimizationConfig(Space space_, RadialKernel kernel_, int n_points_,
                                       Direction dir)
    : space(space_), kernel(kernel_), n_points(n_points_), direction(dir) {
  check_space(space);
  if (n_points < 1) fail(ErrorCode::InvalidArgument, "need at least one point");
  bool acute = kernel.kind() == RadialKernel::Kind::AcuteAnglePower;
  if (dir == Direction::Maximize && !acute)
    fail(ErrorCode::InvalidArgument, "maximization is supported for bounded (acute) kernels only");
  if (dir == Direction::Minimize && acute)
    fail(ErrorCode::InvalidArgument, "the acute kernel is optimized by maximization");
}

double configuration_energy(const Space& space, const RadialKernel& kernel,
                            const std::vector<std::vector<double>>& points) {
  check_space(space);
  const std::size_t n = points.size();
  const double w2 = 1.0 / static_cast<double>(n * n);
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = pair_eval(space, kernel, dot(points[i], points[j])).value;
      if (std::isinf(v)) return v;
      sum += 2.0 * w2 * v;
    }
  return sum;
}

std::vector<std::vector<double>> energy_gradient(const Space& space, const RadialKernel& kernel,
                                                 const std::vector<std::vector<double>>& points,
                                                 const std::vector<double>& weights,
                                                 bool* clamped) {
  check_space(space);
  const std::size_t n = points.size();
  if (weights.size() != n) fail(ErrorCode::InvalidArgument, "weights/points size mismatch");
  std::vector<std::vector<double>> grad(n, std::vector<double>(points.empty() ? 0 : points[0].size(), 0.0));
  bool any_clamped = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      PairEval pe = pair_eval(space, kernel, dot(points[i], points[j]));
      any_clamped = any_clamped || pe.clamped;
      double c = 2.0 * weights[i] * weights[j] * pe.deriv;
      for (std::size_t k = 0; k < grad[i].size(); ++k) grad[i][k] += c * points[j][k];
    }
    // project to the tangent space at x_i
    double radial = dot(grad[i], points[i]);
    for (std::size_t k = 0; k < grad[i].size(); ++k) grad[i][k] -= radial * points[i][k];
  }
  if (clamped) *clamped = any_clamped;
  return grad;
}

namespace {

struct RestartResult {
  std::vector<std::vector<double>> points;
  double energy;
  std::vector<double> trace;
  int iterations;
  bool clamped;
};

RestartResult run_restart(const OptimizationConfig& cfg, std::uint64_t restart_seed) {
  Rng rng(restart_seed);
  const int n = cfg.n_points;
  const int dim = cfg.space.ambient_real_dim();
  const double sgn = cfg.direction == Direction::Maximize ? 1.0 : -1.0;
  std::vector<double> weights(n, 1.0 / n);

  std::vector<std::vector<double>> x(n, std::vector<double>(dim));
  for (auto& p : x) {
    double n2 = 0;
    do {
      n2 = 0;
      for (auto& v : p) {
        v = rng.gaussian();
        n2 += v * v;
      }
    } while (n2 < 1e-24);
    for (auto& v : p) v /= std::sqrt(n2);
  }

  RestartResult res;
  res.clamped = false;
  double energy = configuration_energy(cfg.space, cfg.kernel, x);
  res.trace.push_back(energy);
  int iter = 0;
  int accepted = 0;
  for (iter = 0; iter < cfg.max_iters; ++iter) {
    bool clamped = false;
    auto grad = energy_gradient(cfg.space, cfg.kernel, x, weights, &clamped);
    res.clamped = res.clamped || clamped;
    double gn2 = 0;
    for (const auto& g : grad) gn2 += dot(g, g);
    if (gn2 < 1e-24) break;

    double step = cfg.step_init;
    bool took = false;
    std::vector<std::vector<double>> trial(n, std::vector<double>(dim));
    for (int bt = 0; bt < cfg.max_backtracks; ++bt) {
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < dim; ++k) trial[i][k] = x[i][k] + sgn * step * grad[i][k];
        normalize(trial[i]);
      }
      double trial_energy = configuration_energy(cfg.space, cfg.kernel, trial);
      if (std::isfinite(trial_energy) &&
          sgn * (trial_energy - energy) >= cfg.armijo_c * step * gn2) {
        took = true;
        energy = trial_energy;
        x.swap(trial);
        break;
      }
      step *= cfg.step_shrink;
    }
    if (!took) break;
    ++accepted;

    // seeded tangent jitter moves off the nonsmooth x.y = 0 ridge
    for (int i = 0; i < n; ++i) {
      std::vector<double> noise(dim);
      for (auto& v : noise) v = rng.gaussian();
      double radial = dot(noise, x[i]);
      for (int k = 0; k < dim; ++k) x[i][k] += 1e-9 * (noise[k] - radial * x[i][k]);
      normalize(x[i]);
    }
    energy = configuration_energy(cfg.space, cfg.kernel, x);
    res.trace.push_back(energy);
  }
  res.points = std::move(x);
  res.energy = energy;
  res.iterations = accepted;
  return res;
}

}  // namespace

OptimizationRun optimize_configuration(const OptimizationConfig& cfg) {
  if (cfg.restarts < 1) fail(ErrorCode::InvalidArgument, "need at least one restart");
  std::vector<RestartResult> results(cfg.restarts);
  parallel_for(cfg.restarts, [&](std::size_t r) {
    results[r] = run_restart(cfg, Rng::derive(cfg.seed, r));
  });

  int best = -1;
  const double sgn = cfg.direction == Direction::Maximize ? 1.0 : -1.0;
  bool any_progress = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    if (results[r].iterations > 0) any_progress = true;
    if (best < 0 || sgn * (results[r].energy - results[best].energy) > 0) best = r;
  }
  if (!any_progress)
    fail(ErrorCode::Numeric, "all restarts failed the line search at the starting configuration");

  OptimizationRun run{cfg, {}, 0, 0, {}, {}, 0, false};
  run.best_points = results[best].points;
  run.best_energy = results[best].energy;
  run.best_restart = best;
  run.trace = results[best].trace;
  run.iterations_used = results[best].iterations;
  for (const auto& r : results) {
    run.restart_energies.push_back(r.energy);
    run.near_singular_flagged = run.near_singular_flagged || r.clamped;
  }
  return run;
}

ConfigurationStats configuration_stats(const std::vector<std::vector<double>>& points, int bins) {
  if (points.empty()) fail(ErrorCode::InvalidArgument, "empty configuration");
  ConfigurationStats stats;
  stats.histogram.assign(bins, 0.0);
  stats.bin_width = kPi / bins;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double ang = std::acos(std::min(1.0, std::max(-1.0, dot(points[i], points[j]))));
      int b = std::min(bins - 1, static_cast<int>(ang / stats.bin_width));
      stats.histogram[b] += 1.0;
    }

  const double cap_radius = 0.3;
  stats.max_cap_mass = 0;
  stats.best_pole = points[0];
  for (std::size_t i = 0; i < n; ++i) {
    double mass = 0;
    for (std::size_t j = 0; j < n; ++j) {
      double ang = std::acos(std::min(1.0, std::max(-1.0, dot(points[i], points[j]))));
      if (ang <= cap_radius) mass += 1.0 / n;
    }
    if (mass > stats.max_cap_mass) {
      stats.max_cap_mass = mass;
      stats.best_pole = points[i];
    }
  }
  double band = 0;
  for (std::size_t j = 0; j < n; ++j) {
    double ang = std::acos(std::min(1.0, std::max(-1.0, dot(stats.best_pole, points[j]))));
    if (std::abs(ang - kPi / 2.0) <= 0.3) band += 1.0 / n;
  }
  stats.equatorial_band_mass = band;
  return stats;
}

}  // namespace riesz
