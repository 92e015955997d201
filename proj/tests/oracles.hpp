#pragma once

// Test-side reference integrators, independent of the library's quadrature
// path. Slow and simple on purpose.

#include <cmath>
#include <functional>

#include "riesz/jacobi.hpp"

namespace oracle {

// Composite midpoint rule over (0, pi) on a mesh graded toward 0,
// phi_i = pi * (i/N)^grade. Integrates g(phi) (1-cos)^a (1+cos)^b sin(phi)
// against the probability normalization, like singular_integrate does.
inline double graded_mesh_integral(const std::function<double(double)>& g,
                                   const riesz::JacobiParams& params, std::size_t panels = 1000000,
                                   double grade = 4.0) {
  const double pi = 3.14159265358979323846;
  double sum = 0.0;
  double prev = 0.0;
  for (std::size_t i = 1; i <= panels; ++i) {
    double edge = pi * std::pow(static_cast<double>(i) / panels, grade);
    double mid = 0.5 * (prev + edge);
    double w = std::pow(2.0 * std::pow(std::sin(0.5 * mid), 2.0), params.alpha) *
               std::pow(2.0 * std::pow(std::cos(0.5 * mid), 2.0), params.beta) * std::sin(mid);
    sum += g(mid) * w * (edge - prev);
    prev = edge;
  }
  return sum / riesz::weight_mass_c(params);
}

// Plain midpoint rule on [a, b].
inline double midpoint_integral(const std::function<double(double)>& f, double a, double b,
                                std::size_t panels = 200000) {
  double h = (b - a) / panels;
  double sum = 0;
  for (std::size_t i = 0; i < panels; ++i) sum += f(a + (i + 0.5) * h);
  return sum * h;
}

}  // namespace oracle
