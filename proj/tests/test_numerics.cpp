#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "so21/numerics.hpp"

using namespace so21;
using numerics::Complex;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_err(const Complex& got, const Complex& want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("log_gamma at classical points") {
  CHECK(std::abs(numerics::log_gamma({1.0, 0.0})) < 1e-14);
  CHECK(rel_err(numerics::log_gamma({0.5, 0.0}),
                {0.57236494292470008707, 0.0}) < 1e-14);
  CHECK(rel_err(numerics::log_gamma({5.0, 0.0}), {std::log(24.0), 0.0}) < 1e-14);
  CHECK_THROWS_AS((void)numerics::log_gamma({0.0, 0.0}), PoleError);
  CHECK_THROWS_AS((void)numerics::log_gamma({-7.0, 0.0}), PoleError);
}

TEST_CASE("log_gamma recurrence across the plane") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    Complex z(u(rng), u(rng));
    if (numerics::is_nonpositive_integer(z, 1e-3) ||
        numerics::is_nonpositive_integer(z + 1.0, 1e-3))
      continue;
    // G(z+1) = z G(z), compared through exponentials
    const Complex lhs = std::exp(numerics::log_gamma(z + 1.0));
    const Complex rhs = z * std::exp(numerics::log_gamma(z));
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("reciprocal_gamma zeros and values") {
  CHECK(numerics::reciprocal_gamma({0.0, 0.0}) == Complex(0.0, 0.0));
  CHECK(numerics::reciprocal_gamma({-3.0, 0.0}) == Complex(0.0, 0.0));
  CHECK(rel_err(numerics::reciprocal_gamma({2.0, 0.0}), {1.0, 0.0}) < 1e-14);
}

TEST_CASE("reflection identity rg(z) rg(1-z) = sin(pi z)/pi") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 100; ++i) {
    Complex z(u(rng), u(rng));
    if (std::abs(z) > 10.0) continue;
    const Complex lhs =
        numerics::reciprocal_gamma(z) * numerics::reciprocal_gamma(1.0 - z);
    const Complex rhs = std::sin(kPi * z) / kPi;
    if (std::abs(rhs) < 1e-12) continue;
    CHECK(rel_err(lhs, rhs) < 1e-11);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("pochhammer basic values") {
  CHECK(numerics::pochhammer({4.2, 1.0}, 0) == Complex(1.0, 0.0));
  CHECK(rel_err(numerics::pochhammer({3.0, 0.0}, 2), {12.0, 0.0}) < 1e-14);
  // (2)_{-1} = 1/(2-1); cross-checked against the gamma-ratio oracle
  CHECK(rel_err(numerics::pochhammer({2.0, 0.0}, -1), {1.0, 0.0}) < 1e-14);
  const Complex oracle = std::exp(numerics::log_gamma({1.0, 0.0}) -
                                  numerics::log_gamma({2.0, 0.0}));
  CHECK(rel_err(numerics::pochhammer({2.0, 0.0}, -1), oracle) < 1e-13);
  // vanishing factor in the negative direction
  CHECK_THROWS_AS((void)numerics::pochhammer({3.0, 0.0}, -5), PoleError);
  // nonpositive-integer a: product crosses zero
  CHECK(numerics::pochhammer({-3.0, 0.0}, 5) == Complex(0.0, 0.0));
  CHECK(rel_err(numerics::pochhammer({-3.0, 0.0}, 2), {6.0, 0.0}) < 1e-14);
}

TEST_CASE("pochhammer recurrence (a)_{n+1} = (a)_n (a+n)") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 40; ++i) {
    const Complex a(u(rng) + 0.21, u(rng));  // keep clear of integer lattice
    for (long n : {-50L, -20L, -3L, 0L, 3L, 20L, 50L}) {
      const Complex lhs = numerics::pochhammer(a, n + 1);
      const Complex rhs = numerics::pochhammer(a, n) * (a + double(n));
      CHECK(rel_err(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("pochhammer path seam at |n| = 64") {
  const Complex a(1.37, -0.42);
  for (long n : {63L, 64L, 65L, 66L}) {
    const Complex lhs = numerics::pochhammer(a, n + 1);
    const Complex rhs = numerics::pochhammer(a, n) * (a + double(n));
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
  for (long n : {-66L, -65L, -64L, -63L}) {
    const Complex lhs = numerics::pochhammer(a, n);
    const Complex rhs = numerics::pochhammer(a, n + 1) / (a + double(n));
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("gauss_2f1 special values") {
  CHECK(numerics::gauss_2f1({2.0, 1.0}, {0.3, 0.0}, {1.5, 0.0}, 0.0).value ==
        Complex(1.0, 0.0));
  const auto r = numerics::gauss_2f1({1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, 0.5);
  CHECK(rel_err(r.value, {2.0 * std::log(2.0), 0.0}) < 1e-12);
  CHECK(r.err_estimate >= 0.0);
  CHECK_THROWS_AS(
      (void)numerics::gauss_2f1({1.0, 0.0}, {1.0, 0.0}, {-2.0, 0.0}, 0.5),
      PoleError);
  numerics::SeriesOptions tiny;
  tiny.max_terms = 4;
  CHECK_THROWS_AS(
      (void)numerics::gauss_2f1({1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, 0.9, tiny),
      NoConvergenceError);
}

TEST_CASE("gauss_2f1 Euler transform identity") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (int i = 0; i < 25; ++i) {
    const Complex a(u(rng), u(rng)), b(u(rng), u(rng));
    const Complex c(2.0 + std::abs(u(rng)), u(rng));
    for (double x : {0.0, 0.2, 0.5, 0.75, 0.9}) {
      const Complex lhs = numerics::gauss_2f1(a, b, c, x).value;
      const Complex rhs = std::pow(Complex(1.0 - x, 0.0), c - a - b) *
                          numerics::gauss_2f1(c - a, c - b, c, x).value;
      CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("gauss_2f1 unit-argument limit matches the Gamma formula") {
  // extrapolate x -> 1 with the model F1 + A(1-x) + B(1-x)^2 + C(1-x)^d
  const auto check = [](const Complex& a, const Complex& b, const Complex& c) {
    const Complex d = c - a - b;
    REQUIRE(d.real() > 0.5);
    const double xs[4] = {1 - 4e-3, 1 - 2e-3, 1 - 1e-3, 1 - 5e-4};
    Eigen::Matrix4cd M;
    Eigen::Vector4cd rhs;
    for (int i = 0; i < 4; ++i) {
      const double e = 1.0 - xs[i];
      M(i, 0) = 1.0;
      M(i, 1) = e;
      M(i, 2) = e * e;
      M(i, 3) = std::pow(Complex(e, 0.0), d);
      rhs(i) = numerics::gauss_2f1(a, b, c, xs[i]).value;
    }
    const Complex f1 = M.fullPivLu().solve(rhs)(0);
    const Complex want = std::exp(numerics::log_gamma(c) + numerics::log_gamma(d) -
                                  numerics::log_gamma(c - a) -
                                  numerics::log_gamma(c - b));
    CHECK(rel_err(f1, want) < 1e-6);
  };
  check({0.3, 0.0}, {0.4, 0.0}, {2.0, 0.0});
  check({0.2, 0.3}, {0.1, -0.2}, {1.7, 0.0});
}

TEST_CASE("bilateral_sum of a delta sequence") {
  const auto r = numerics::bilateral_sum(
      [](long n) { return n == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0); }, -2.0);
  CHECK(r.value == Complex(1.0, 0.0));
  CHECK(r.err_estimate == 0.0);
}

TEST_CASE("bilateral_sum of the reciprocal-gamma pair sequence") {
  // 1/G(n+1) 1/G(1-n): every n except 0 is killed by one factor
  const auto term = [](long n) {
    return numerics::reciprocal_gamma({double(n) + 1.0, 0.0}) *
           numerics::reciprocal_gamma({1.0 - double(n), 0.0});
  };
  Complex direct(0.0, 0.0);
  for (long n = -10; n <= 10; ++n) direct += term(n);
  const auto r = numerics::bilateral_sum(term, -2.0);
  CHECK(rel_err(r.value, direct) < 1e-14);
  CHECK(rel_err(r.value, {1.0, 0.0}) < 1e-14);
}

TEST_CASE("bilateral_sum rejects divergent decay") {
  CHECK_THROWS_AS((void)numerics::bilateral_sum(
                      [](long n) { return Complex(1.0 / (1.0 + n * n), 0.0); }, -0.5),
                  NoConvergenceError);
}

TEST_CASE("accelerate_tail reproduces zeta(3/2)") {
  const auto t = numerics::accelerate_tail(
      [](long k) { return Complex(std::pow(double(k + 1), -1.5), 0.0); }, 1e-13,
      96);
  CHECK(t.converged);
  CHECK(std::abs(t.value.real() - 2.6123753486854883) < 1e-8);
}

TEST_CASE("circle_quadrature basics") {
  CHECK(rel_err(numerics::circle_quadrature([](double) { return Complex(1.0, 0.0); },
                                            64),
                {1.0, 0.0}) < 1e-15);
  const Complex osc = numerics::circle_quadrature(
      [](double phi) { return std::exp(Complex(0.0, phi)); }, 16);
  CHECK(std::abs(osc) <= 1e-15);
  CHECK_THROWS_AS(
      (void)numerics::circle_quadrature([](double) { return Complex(); }, 4),
      DomainError);
}

TEST_CASE("circle_quadrature error halves geometrically for the zonal kernel") {
  // principal-line integrand of the boost average
  const Complex sigma(-0.5, 1.3);
  const auto f = [&](double phi) {
    return std::exp(sigma * std::log(std::cosh(1.5) - std::sinh(1.5) * std::cos(phi)));
  };
  const Complex ref = numerics::circle_quadrature(f, 1 << 14);
  double prev = std::abs(numerics::circle_quadrature(f, 16) - ref);
  for (int n = 32; n <= 512; n *= 2) {
    const double cur = std::abs(numerics::circle_quadrature(f, n) - ref);
    if (prev < 1e-14) break;
    CHECK(cur <= 0.5 * prev + 1e-14);
    prev = cur;
  }
}

TEST_CASE("torus_quadrature_2d basics and separability") {
  CHECK(rel_err(numerics::torus_quadrature_2d(
                    [](double, double) { return Complex(1.0, 0.0); }, 32),
                {1.0, 0.0}) < 1e-15);
  const Complex osc = numerics::torus_quadrature_2d(
      [](double u, double v) { return std::exp(Complex(0.0, u - v)); }, 32);
  CHECK(std::abs(osc) <= 1e-14);

  const auto g = [](double u) { return std::exp(std::sin(u)); };
  const auto h = [](double v) { return 1.0 / (2.0 + std::cos(v)); };
  const Complex prod2d = numerics::torus_quadrature_2d(
      [&](double u, double v) { return Complex(g(u) * h(v), 0.0); }, 128);
  const Complex p1 = numerics::circle_quadrature(
      [&](double u) { return Complex(g(u), 0.0); }, 128);
  const Complex p2 = numerics::circle_quadrature(
      [&](double v) { return Complex(h(v), 0.0); }, 128);
  CHECK(std::abs(prod2d - p1 * p2) <= 1e-12);
}
