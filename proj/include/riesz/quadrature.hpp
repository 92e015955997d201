#pragma once

#include <functional>

#include "riesz/jacobi.hpp"

namespace riesz {

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels = 0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  int max_level = 11;
  double u_max = 6.5;
};

// Computes
//
//   (1 / c_{alpha,beta}) * integral_0^pi  phi^{-power} g(phi)
//                          (1-cos phi)^alpha (1+cos phi)^beta sin phi  dphi
//
// by tanh-sinh (double exponential) transforms on (0, pi/2] and [pi/2, pi),
// refining levels until the estimated error drops below tol * max(1, |I|).
//
// The phi^{-power} factor is folded into the weight in log space, so kernels
// with strong endpoint singularities (power close to 2 alpha + 2) never
// overflow in g. Splitting at pi/2 keeps each panel analytic for kernels with
// an acute-angle kink there. g must be bounded near phi = 0 apart from
// logarithmic growth; algebraic blowup belongs in `power`.
//
// Throws Numeric if max_level is exhausted before the tolerance is met (the
// message carries the last value and estimate) and Domain if g returns a
// non-finite value at a node that matters.
IntegralResult singular_integrate_power(double power, const std::function<double(double)>& g,
                                        const JacobiParams& params, double tol,
                                        const QuadratureOptions& opts = {});

// Same, with the whole integrand (minus the Jacobi weight) in g.
IntegralResult singular_integrate(const std::function<double(double)>& g,
                                  const JacobiParams& params, double tol,
                                  const QuadratureOptions& opts = {});

}  // namespace riesz
