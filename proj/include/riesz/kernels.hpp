#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "riesz/spaces.hpp"

namespace riesz {

// Radial kernel, evaluated as f(t) for t = cos(geodesic angle). Singular
// variants report +infinity at t = 1 rather than throwing, so discrete
// energies with coincident points come out as the infinite value they are.
class RadialKernel {
 public:
  enum class Kind { GeodesicRiesz, ChordalRiesz, AcuteAnglePower, GeodesicLog, ChordalLog, Custom };

  static RadialKernel geodesic_riesz(double s);
  static RadialKernel chordal_riesz(double s);
  static RadialKernel acute_power(double lambda);
  static RadialKernel geodesic_log();
  static RadialKernel chordal_log();
  static RadialKernel custom(std::function<double(double)> fn);

  // Spec-string form: geo:<s>, geolog, chord:<s>, chordlog, acute:<lambda>.
  // geo:0 and chord:0 name the logarithmic kernels.
  static RadialKernel parse(std::string_view spec);
  std::string spec() const;

  Kind kind() const { return kind_; }
  double param() const { return param_; }

  // f(t) per the variant table; +inf at singularities.
  double eval(double t) const;

  // Kernel as a function of a space's geodesic angle. Matches eval(cos phi)
  // except for the acute kernel on projective spaces, where the half-angle
  // identification theta = phi/2 applies.
  double eval_angle(const Space& space, double phi) const;

  // Riesz kernels need s < D to be integrable against nu^{(alpha,beta)}.
  bool integrable_on(const Space& space) const;

  bool singular_at_one() const;

 private:
  RadialKernel(Kind kind, double param) : kind_(kind), param_(param) {}
  Kind kind_;
  double param_;
  std::function<double(double)> fn_;
};

// Decomposition of the kernel-of-angle into phi^{-power} * smooth(phi), as
// consumed by singular_integrate_power. `smooth` stays bounded near phi = 0
// apart from logarithmic growth.
struct AngleDecomposition {
  double power = 0.0;
  std::function<double(double)> smooth;
};
AngleDecomposition kernel_angle_parts(const RadialKernel& kernel, const Space& space);

// One term C * F_{s_i, b_i, c_i} of the symbolic derivative of F_s, with
// F_{gamma,b,c}(t) = t^c (arccos t)^{-gamma} / (1-t^2)^b for gamma > 0.
// s_offset keeps s_i = s + s_offset exact; twice_b keeps the half-integer b.
struct DerivativeTerm {
  double coeff;
  int s_offset;
  int twice_b;
  int c;

  double s_i(double s) const { return s + s_offset; }
  double b() const { return twice_b / 2.0; }
};

struct DerivativeExpansion {
  double s;
  int order;
  std::vector<DerivativeTerm> terms;
};

// Symbolic k-th derivative of F_s as a merged term list. k = 0 is the single
// term F_{s,0,0} (which equals |s| F_s, or F_0 at s = 0). Orders above 12 are
// rejected to bound term growth.
DerivativeExpansion derivative_expansion(double s, int k);

// Evaluates the expansion at t strictly inside (-1, 1).
double eval_derivative(double s, int k, double t);
double eval_expansion(const DerivativeExpansion& exp, double t);

// h(t) = sqrt((1-t)/2) - arccos(t)/pi; nonnegative on [-1,1], zero at the ends.
double aux_h(double t);

// p(t) = (1-t)^{a-b} / arccos(t)^{s_i} - (1+t)^{a-b} / arccos(-t)^{s_i},
// positive on (0,1) whenever s_i >= 2(a-b).
double aux_p(double alpha, double beta, double s_i, double t);

}  // namespace riesz
