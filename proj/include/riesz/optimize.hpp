#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riesz/kernels.hpp"
#include "riesz/spaces.hpp"

namespace riesz {

enum class Direction { Maximize, Minimize };

// Multistart projected gradient with Armijo backtracking on sphere
// representers. Projective spaces run through the even kernel on
// representers; only Sphere and RealProj are supported.
struct OptimizationConfig {
  Space space;
  RadialKernel kernel;
  int n_points;
  Direction direction;
  int restarts = 10;
  int max_iters = 500;
  double step_init = 0.5;
  double step_shrink = 0.5;
  double armijo_c = 1e-4;
  int max_backtracks = 40;
  std::uint64_t seed = 0;

  OptimizationConfig(Space space_, RadialKernel kernel_, int n_points_, Direction dir);
};

// Infers Maximize for the acute kernel, Minimize for Riesz/log variants.
Direction default_direction(const RadialKernel& kernel);

struct OptimizationRun {
  OptimizationConfig config;
  std::vector<std::vector<double>> best_points;  // flat representer coords
  double best_energy;
  int best_restart;
  std::vector<double> restart_energies;
  std::vector<double> trace;  // energy after each accepted step of the best restart
  int iterations_used;        // of the best restart
  bool near_singular_flagged; // some pair derivative hit the clamp
};

// Discrete energy of a representer configuration with equal weights 1/N,
// diagonal excluded (it is 0 for the acute kernel and +inf for Riesz ones).
double configuration_energy(const Space& space, const RadialKernel& kernel,
                            const std::vector<std::vector<double>>& points);

// Euclidean energy gradient projected to each point's tangent space.
std::vector<std::vector<double>> energy_gradient(const Space& space, const RadialKernel& kernel,
                                                 const std::vector<std::vector<double>>& points,
                                                 const std::vector<double>& weights,
                                                 bool* clamped = nullptr);

OptimizationRun optimize_configuration(const OptimizationConfig& config);

struct ConfigurationStats {
  std::vector<double> histogram;   // pairwise representer angles over [0, pi]
  double bin_width;
  double max_cap_mass;             // largest point-mass fraction within angle 0.3 of one point
  std::vector<double> best_pole;   // direction attaining it
  double equatorial_band_mass;     // fraction within 0.3 of the best pole's equator
};
ConfigurationStats configuration_stats(const std::vector<std::vector<double>>& points,
                                       int bins = 36);

}  // namespace riesz
