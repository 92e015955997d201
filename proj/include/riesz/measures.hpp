#pragma once

#include <string>
#include <vector>

#include "riesz/kernels.hpp"
#include "riesz/spaces.hpp"

namespace riesz {

// Weighted point set; weights are nonnegative and sum to one.
struct DiscreteMeasure {
  Space space;
  std::vector<Point> points;
  std::vector<double> weights;

  DiscreteMeasure(Space space, std::vector<Point> points, std::vector<double> weights);
};

// Equal weights on the d+1 standard basis points (mutually diametral on
// projective spaces, mutually orthogonal representers on spheres).
DiscreteMeasure onb_measure(const Space& space);

// I_f(mu) for an atomic measure, diagonal included. Singular kernels make any
// positively weighted atom contribute +inf; infinity is a value, not an error.
double energy_discrete(const Space& space, const RadialKernel& kernel, const DiscreteMeasure& mu);

// I_f(sigma) = integral of f dnu^{(alpha,beta)}. The acute kernel on a sphere
// is evaluated through the corresponding projective parameters with the
// half-angle map, which keeps a single quadrature path.
double energy_uniform(const Space& space, const RadialKernel& kernel, double tol = 1e-11);

// w delta_p + (1-w) nu_{p^perp} on S^2.
struct PoleEquatorMeasure {
  enum class Equator { UniformCircle, OrthoPair, DiscreteOnCircle };
  double w;
  Equator equator = Equator::UniformCircle;
  std::vector<double> circle_angles;  // for DiscreteOnCircle, equal weights

  explicit PoleEquatorMeasure(double w_, Equator eq = Equator::UniformCircle,
                              std::vector<double> angles = {});
};

// Closed-form acute-angle energy
//   I_lambda(mu) = 2 w (1-w) (pi/2)^lambda + (1-w)^2 I_lambda(nu).
double energy_pole_equator(double lambda, const PoleEquatorMeasure& mu);

// Acute-angle energy of the equatorial factor alone.
double circle_energy(double lambda, PoleEquatorMeasure::Equator eq,
                     const std::vector<double>& angles = {});

// Maximizing weight among pole-equator measures with a uniform equator:
// w* = lambda / (2 lambda + 1), plus the energy it attains.
struct PoleWeight {
  double w;
  double value;
};
PoleWeight optimal_pole_weight(double lambda);
// Golden-section maximization of w -> I_lambda over [0,1]; cross-check path.
PoleWeight optimal_pole_weight_numeric(double lambda, double tol = 1e-9);

// Monte Carlo estimate of the cap-averaged kernel
//   f^(eps)(cos theta0) = avg over B_eps(x) x B_eps(y), theta(x,y) = theta0.
struct McEstimate {
  double value;
  double std_error;
  std::size_t samples;
};
McEstimate averaged_kernel_mc(const Space& space, const RadialKernel& kernel, double eps,
                              double theta0, std::size_t n_samples, Rng& rng);

// Energy of a weighted diametral configuration vs. the equal-weight
// configuration on all d+1 atoms, for F_s with s < 0. Equalizing the weights
// over full support attains the minimum (Jensen).
struct JensenCheck {
  double energy;
  double energy_equalized;
};
JensenCheck jensen_redistribution_check(int d, const std::vector<double>& weights, double s);
JensenCheck jensen_redistribution_check(const DiscreteMeasure& mu, double s);

// Measure spec strings: sigma | onb | pole-equator:<w>:<uniform|pair> | file:<path>.
// "sigma" and "pole-equator" have no atomic form; energy dispatch handles them.
struct MeasureSpec {
  enum class Kind { Sigma, Onb, PoleEquator, File };
  Kind kind;
  double w = 0;
  PoleEquatorMeasure::Equator equator = PoleEquatorMeasure::Equator::UniformCircle;
  std::string path;
};
MeasureSpec parse_measure_spec(std::string_view spec);

// Energy of a measure given by spec string against a kernel on a space.
double energy_of_spec(const Space& space, const RadialKernel& kernel, std::string_view measure_spec,
                      double tol = 1e-11);

}  // namespace riesz
