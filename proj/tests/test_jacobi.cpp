#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "riesz/jacobi.hpp"
#include "riesz/spaces.hpp"

using namespace riesz;

namespace {
const JacobiParams kSpaceParams[] = {
    {0.0, -0.5},   // RP^2
    {0.5, -0.5},   // RP^3
    {1.0, 0.0},    // CP^2
    {3.0, 1.0},    // HP^2
    {7.0, 3.0},    // OP^2
    {0.0, 0.0},    // S^2
};
}

TEST_CASE("degree 0 and 1 normalization") {
  JacobiParams p(0.7, -0.2);
  CHECK(jacobi_eval(p, 0, 0.3) == 1.0);
  for (double t : {-1.0, -0.4, 0.0, 0.9, 1.0}) {
    double expected = (p.alpha + 1.0) + (p.alpha + p.beta + 2.0) * (t - 1.0) / 2.0;
    CHECK(jacobi_eval(p, 1, t) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("binomial endpoint identity") {
  CHECK(jacobi_eval({0.0, -0.5}, 5, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(jacobi_eval({7.0, 3.0}, 3, 1.0) == doctest::Approx(120.0).epsilon(1e-12));
  // recurrence stability at n = 100 against the closed endpoint forms
  for (const auto& p : kSpaceParams) {
    for (int n : {5, 20, 100}) {
      CHECK(jacobi_eval(p, n, 1.0) ==
            doctest::Approx(jacobi_at_one(p, n)).epsilon(1e-9));
      CHECK(jacobi_eval(p, n, -1.0) ==
            doctest::Approx(jacobi_at_minus_one(p, n)).epsilon(1e-9));
    }
  }
}

TEST_CASE("norm constant m_n") {
  CHECK(norm_constant_m({0.3, 0.9}, 0) == 1.0);
  CHECK(norm_constant_m({0.0, 0.0}, 1) == doctest::Approx(3.0).epsilon(1e-13));
  // Pochhammer oracle: m_1 = (2+a+b+1)/(a+b+1) * (a+b+1)(a+1)/(b+1)
  JacobiParams rp2(0.0, -0.5);
  double direct = (2.0 + rp2.alpha + rp2.beta + 1.0) / (rp2.alpha + rp2.beta + 1.0) *
                  ((rp2.alpha + rp2.beta + 1.0) * (rp2.alpha + 1.0)) / (1.0 * (rp2.beta + 1.0));
  CHECK(direct == doctest::Approx(5.0));
  CHECK(norm_constant_m(rp2, 1) == doctest::Approx(5.0).epsilon(1e-13));
  // quadrature oracle: m_n = P_n(1)^2 / int P_n^2 dnu
  auto rule = gauss_jacobi(rp2, 40);
  for (int n : {1, 2, 5}) {
    double norm = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double v = jacobi_eval(rp2, n, rule.nodes[i]);
      norm += rule.weights[i] * v * v;
    }
    double p1 = jacobi_at_one(rp2, n);
    CHECK(norm_constant_m(rp2, n) == doctest::Approx(p1 * p1 / norm).epsilon(1e-11));
  }
  // RP^1 has alpha+beta+1 = 0; the limit form must stay finite
  CHECK(norm_constant_m({-0.5, -0.5}, 1) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(norm_constant_m({-0.5, -0.5}, 7) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == doctest::Approx(120.0));
  CHECK(pochhammer(0.5, 2) == doctest::Approx(0.75));
  CHECK(pochhammer(2.0, 60) == doctest::Approx(std::exp(std::lgamma(62.0) - std::lgamma(2.0))).epsilon(1e-12));
}

TEST_CASE("gauss-jacobi: normalization and first moment") {
  for (const auto& p : kSpaceParams) {
    for (int K : {1, 5, 64}) {
      auto rule = gauss_jacobi(p, K);
      REQUIRE(static_cast<int>(rule.nodes.size()) == K);
      double total = 0, first = 0;
      for (int i = 0; i < K; ++i) {
        CHECK(rule.weights[i] > 0.0);
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        CHECK(rule.nodes[i] > -1.0);
        CHECK(rule.nodes[i] < 1.0);
        total += rule.weights[i];
        first += rule.weights[i] * rule.nodes[i];
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
      double moment = (p.beta - p.alpha) / (p.alpha + p.beta + 2.0);
      CHECK(first == doctest::Approx(moment).epsilon(1e-12));
    }
  }
  // spelled-out instance from the moment formula
  auto rule = gauss_jacobi({0.0, -0.5}, 16);
  double first = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) first += rule.weights[i] * rule.nodes[i];
  CHECK(first == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("gauss-jacobi: orthogonality and polynomial exactness") {
  for (const auto& p : kSpaceParams) {
    auto rule = gauss_jacobi(p, 64);
    for (int n = 0; n <= 30; ++n) {
      for (int m = 0; m < n; ++m) {
        double acc = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
          acc += rule.weights[i] * jacobi_eval(p, n, rule.nodes[i]) * jacobi_eval(p, m, rule.nodes[i]);
        CHECK(std::abs(acc) < 1e-10);
      }
    }
  }
  // closed-form norm: int P_3^2 dnu^{(0,0)} = P_3(1)^2 / m_3 = 1/7
  auto legendre = gauss_jacobi({0.0, 0.0}, 64);
  double acc = 0;
  for (std::size_t i = 0; i < legendre.nodes.size(); ++i) {
    double v = jacobi_eval({0.0, 0.0}, 3, legendre.nodes[i]);
    acc += legendre.weights[i] * v * v;
  }
  CHECK(acc == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  CHECK(norm_constant_m({0.0, 0.0}, 3) == doctest::Approx(7.0).epsilon(1e-13));
}

TEST_CASE("rejects bad parameters") {
  CHECK_THROWS_AS(JacobiParams(-1.0, 0.0), Error);
  CHECK_THROWS_AS(gauss_jacobi({0.0, 0.0}, 0), Error);
  CHECK_THROWS_AS(jacobi_eval({0.0, 0.0}, -1, 0.0), Error);
}
