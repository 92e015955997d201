#pragma once

#include <vector>

#include "riesz/common.hpp"

namespace riesz {

struct JacobiParams {
  double alpha;
  double beta;

  JacobiParams(double a, double b) : alpha(a), beta(b) {
    if (!(a > -1.0) || !(b > -1.0))
      fail(ErrorCode::InvalidArgument, "Jacobi parameters must satisfy alpha, beta > -1");
  }
};

// P_n^{(alpha,beta)}(t) by the three-term recurrence, normalized so that
// P_n(1) = binom(n + alpha, n).
double jacobi_eval(const JacobiParams& p, int n, double t);

// Value at the right endpoint, binom(n + alpha, n).
double jacobi_at_one(const JacobiParams& p, int n);
// Value at the left endpoint, (-1)^n binom(n + beta, n).
double jacobi_at_minus_one(const JacobiParams& p, int n);

// m_n = (2n+a+b+1)/(a+b+1) * (a+b+1)_n (a+1)_n / (n! (b+1)_n), evaluated in a
// form that stays finite when a+b+1 = 0 (e.g. RP^1).
double norm_constant_m(const JacobiParams& p, int n);

// c_{alpha,beta} = 2^{alpha+beta+1} B(alpha+1, beta+1); the total mass of the
// raw weight (1-t)^a (1+t)^b, so nu = weight / c is a probability measure.
double weight_mass_c(const JacobiParams& p);

// Rising factorial (x)_n.
double pochhammer(double x, int n);

// Quadrature rule against the probability measure nu^{(alpha,beta)}.
// Weights are positive and sum to one; nodes are strictly increasing.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// K-node Gauss-Jacobi rule via Golub-Welsch (symmetric tridiagonal
// eigen-decomposition of the recurrence).
QuadratureRule gauss_jacobi(const JacobiParams& p, int K);

}  // namespace riesz
