#include "riesz/jacobi.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace riesz {

double pochhammer(double x, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "pochhammer order must be nonnegative");
  if (n == 0) return 1.0;
  // direct product while small; log-space (lgamma) once n*max factor grows
  if (n <= 30 && std::abs(x) <= 35.0) {
    double r = 1.0;
    for (int j = 0; j < n; ++j) r *= x + j;
    return r;
  }
  if (x > 0.0) return std::exp(std::lgamma(x + n) - std::lgamma(x));
  // fall back to the product; negative or zero arguments may flip signs
  double r = 1.0;
  for (int j = 0; j < n; ++j) r *= x + j;
  return r;
}

double jacobi_eval(const JacobiParams& p, int n, double t) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "polynomial degree must be nonnegative");
  const double a = p.alpha, b = p.beta;
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double pc = (a + 1.0) + (a + b + 2.0) * (t - 1.0) / 2.0;
  for (int k = 2; k <= n; ++k) {
    double s = 2.0 * k + a + b;
    double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    double c2 = (s - 1.0) * (a * a - b * b);
    double c3 = (s - 2.0) * (s - 1.0) * s;
    double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    double pn = ((c2 + c3 * t) * pc - c4 * pm1) / c1;
    pm1 = pc;
    pc = pn;
  }
  return pc;
}

double jacobi_at_one(const JacobiParams& p, int n) {
  return std::exp(std::lgamma(n + p.alpha + 1.0) - std::lgamma(p.alpha + 1.0) - std::lgamma(n + 1.0));
}

double jacobi_at_minus_one(const JacobiParams& p, int n) {
  double mag = std::exp(std::lgamma(n + p.beta + 1.0) - std::lgamma(p.beta + 1.0) - std::lgamma(n + 1.0));
  return (n % 2 == 0) ? mag : -mag;
}

double norm_constant_m(const JacobiParams& p, int n) {
  if (n == 0) return 1.0;
  const double a = p.alpha, b = p.beta;
  // (a+b+1)_n / (a+b+1) = (a+b+2)_{n-1}, which is safe when a+b+1 = 0
  double logr = std::lgamma(a + b + 1.0 + n) - std::lgamma(a + b + 2.0)
              + std::lgamma(a + 1.0 + n) - std::lgamma(a + 1.0)
              - std::lgamma(n + 1.0)
              - std::lgamma(b + 1.0 + n) + std::lgamma(b + 1.0);
  return (2.0 * n + a + b + 1.0) * std::exp(logr);
}

double weight_mass_c(const JacobiParams& p) {
  double logb = std::lgamma(p.alpha + 1.0) + std::lgamma(p.beta + 1.0) - std::lgamma(p.alpha + p.beta + 2.0);
  return std::exp((p.alpha + p.beta + 1.0) * std::log(2.0) + logb);
}

QuadratureRule gauss_jacobi(const JacobiParams& p, int K) {
  if (K < 1) fail(ErrorCode::InvalidArgument, "node count must be >= 1");
  const double a = p.alpha, b = p.beta;
  Eigen::VectorXd diag(K), sub(std::max(K - 1, 1));
  diag(0) = (b - a) / (a + b + 2.0);
  for (int k = 1; k < K; ++k) {
    double s = 2.0 * k + a + b;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
    double bk;
    if (k == 1)
      bk = 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
    else
      bk = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    sub(k - 1) = std::sqrt(bk);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  if (K == 1) {
    return QuadratureRule{{diag(0)}, {1.0}};
  }
  solver.computeFromTridiagonal(diag, sub.head(K - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::Numeric, "Golub-Welsch eigen-decomposition failed for K=" + std::to_string(K));
  QuadratureRule rule;
  rule.nodes.resize(K);
  rule.weights.resize(K);
  for (int i = 0; i < K; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = v0 * v0;  // mu_0 = 1 for the probability measure
  }
  return rule;
}

}  // namespace riesz
