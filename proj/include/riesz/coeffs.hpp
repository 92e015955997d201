#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riesz/kernels.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/spaces.hpp"

namespace riesz {

struct CoefficientEntry {
  int n;
  double value;
  double error_estimate;
};

struct CoefficientTable {
  Space space;
  std::string kernel_spec;
  double tol;
  std::vector<CoefficientEntry> entries;  // n = 0..n_max, contiguous

  int n_max() const { return static_cast<int>(entries.size()) - 1; }
};

// hat f_n = (m_n / P_n(1)^2) * integral f(t) P_n(t) dnu^{(a,b)}(t), computed
// in the angle variable. Throws Numeric for kernels whose energy diverges on
// the space (Riesz s >= D).
CoefficientEntry jacobi_coefficient(const Space& space, const RadialKernel& kernel, int n,
                                    double tol = 1e-11);

CoefficientTable coefficient_table(const Space& space, const RadialKernel& kernel, int n_max,
                                   double tol = 1e-11);

// Independent route for geodesic Riesz kernels with s > -1: n integrations by
// parts against the Rodrigues form turn the coefficient into a positive
// combination of endpoint-singular integrals, one per derivative-expansion
// term. n <= 10 (term growth). Also returns the term integrals so positivity
// of each one can be inspected.
struct RodriguesCoefficient {
  double value;
  double error_estimate;
  std::vector<double> term_integrals;
};
RodriguesCoefficient coefficient_via_rodrigues(const Space& space, const RadialKernel& kernel,
                                               int n, double tol = 1e-11);

// Sign classification with a declaration margin: quadrature cannot prove a
// sign, so anything within the margin is reported indeterminate.
struct PositivityScan {
  CoefficientTable table;
  double min_value;  // over n in [1, n_max]
  int argmin;
  int positive_count;
  int negative_count;
  int indeterminate_count;
  bool all_positive;  // min_value > margin
  double margin;
};
PositivityScan positivity_scan(const Space& space, const RadialKernel& kernel, int n_max,
                               double tol = 1e-11, double margin = 1e-9);

// Bisection on a kernel-family parameter for the sign change of the extremal
// coefficient over n in [1, n_max]: max f_n for the acute (maximization)
// family, min f_n for Riesz (minimization) families.
struct TransitionReport {
  std::string space_spec;
  std::string family;  // "geo" | "chord" | "acute"
  std::string axis;    // "s" or "lambda"
  double bracket_lo, bracket_hi;    // final bracket
  double estimate;
  int n_max;
  double stat_lo, stat_hi;          // extremal coefficients at the original endpoints
  std::vector<std::pair<double, double>> history;  // (parameter, extremal coefficient)
};
TransitionReport find_transition(const Space& space, const std::string& family, double lo,
                                 double hi, int n_max = 50, double param_tol = 1e-3,
                                 double coeff_tol = 1e-11);

// Cesaro (C, delta) machinery: A_k^delta = binom(k + delta, k).
double cesaro_a(double delta, int k);

// Coefficients A^d_{n-k}/A^d_n * f_k of the mean S_n^d f, k = 0..n.
std::vector<double> cesaro_coefficients(const CoefficientTable& table, double delta, int n);

// Evaluates S_n^d f at t.
double cesaro_eval(const CoefficientTable& table, double delta, int n, double t);

}  // namespace riesz
