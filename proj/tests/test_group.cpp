#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "so21/group.hpp"

using namespace so21::group;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double mat_diff(const GroupElement& a, const GroupElement& b) {
  return (a.m - b.m).cwiseAbs().maxCoeff();
}

std::mt19937_64 rng(42);
double uni(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

GroupElement random_word(int len = 20, double range = 0.75) {
  GroupElement g = identity_element();
  for (int k = 0; k < len; ++k) {
    switch (int(uni(0.0, 3.0))) {
      case 0: g = multiply(g, rotation(uni(0.0, kTwoPi))); break;
      case 1: g = multiply(g, boost02(uni(-range, range))); break;
      default: g = multiply(g, boost01(uni(-range, range))); break;
    }
  }
  return g;
}
}  // namespace

TEST_CASE("rotation basics and orientation convention") {
  CHECK(mat_diff(rotation(0.0), identity_element()) == 0.0);
  // phi = pi/2 applied to the cone point with angle pi/2 moves it to pi
  const Vec3 out = act(rotation(kPi / 2.0), Vec3(1.0, 1.0, 0.0));
  CHECK(std::abs(out(0) - 1.0) < 1e-15);
  CHECK(std::abs(out(1)) < 1e-15);
  CHECK(std::abs(out(2) + 1.0) < 1e-15);
  for (int i = 0; i < 50; ++i) {
    const double a = uni(0.0, kTwoPi), b = uni(0.0, kTwoPi);
    CHECK(mat_diff(multiply(rotation(a), rotation(b)), rotation(a + b)) < 1e-14);
  }
}

TEST_CASE("boost02 convention and one-parameter property") {
  CHECK(mat_diff(boost02(0.0), identity_element()) == 0.0);
  const Vec3 out = act(boost02(0.8), Vec3(1.0, 0.0, 0.0));
  CHECK(std::abs(out(0) - std::cosh(0.8)) < 1e-15);
  CHECK(std::abs(out(1)) < 1e-15);
  CHECK(std::abs(out(2) - std::sinh(0.8)) < 1e-15);
  for (int i = 0; i < 50; ++i) {
    const double a = uni(-2.0, 2.0), b = uni(-2.0, 2.0);
    CHECK(mat_diff(multiply(boost02(a), boost02(b)), boost02(a + b)) < 1e-13);
  }
}

TEST_CASE("boost01 acts on the (p0,p1) plane") {
  CHECK(mat_diff(boost01(0.0), identity_element()) == 0.0);
  const Vec3 out = act(boost01(0.6), Vec3(1.0, 0.0, 0.0));
  CHECK(std::abs(out(0) - std::cosh(0.6)) < 1e-15);
  CHECK(std::abs(out(1) - std::sinh(0.6)) < 1e-15);
  CHECK(std::abs(out(2)) < 1e-15);
  for (int i = 0; i < 20; ++i) {
    const double a = uni(-2.0, 2.0), b = uni(-2.0, 2.0);
    CHECK(mat_diff(multiply(boost01(a), boost01(b)), boost01(a + b)) < 1e-13);
  }
}

TEST_CASE("horospherical families") {
  const Vec3 base(0.5, 0.0, 0.5);
  for (double z : {-2.0, -0.3, 0.0, 0.7, 1.9}) {
    CHECK((act(horo_z(z), base) - base).norm() < 1e-15);
    CHECK(horo_z(z).invariant_deviation() < 1e-13);
  }
  for (double b : {-1.5, 0.2, 2.5}) {
    const Vec3 out = act(horo_b(b), base);
    CHECK(std::abs(out(0) - 0.5 * (1.0 + b * b)) < 1e-14);
    CHECK(std::abs(out(1) - b) < 1e-14);
    CHECK(std::abs(out(2) - 0.5 * (1.0 - b * b)) < 1e-14);
    CHECK(horo_b(b).invariant_deviation() < 1e-13);
  }
  for (int i = 0; i < 20; ++i) {
    const double b1 = uni(-2.0, 2.0), b2 = uni(-2.0, 2.0);
    CHECK(mat_diff(multiply(horo_b(b1), horo_b(b2)), horo_b(b1 + b2)) < 1e-13);
    CHECK(mat_diff(multiply(horo_z(b1), horo_z(b2)), horo_z(b1 + b2)) < 1e-13);
  }
}

TEST_CASE("act, multiply, inverse") {
  const Vec3 v(0.3, -1.2, 0.8);
  CHECK((act(identity_element(), v) - v).norm() == 0.0);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = random_word();
    const Vec3 a(uni(-2, 2), uni(-2, 2), uni(-2, 2));
    const Vec3 b(uni(-2, 2), uni(-2, 2), uni(-2, 2));
    CHECK(std::abs(minkowski(act(g, a), act(g, b)) - minkowski(a, b)) <
          1e-12 * (1.0 + act(g, a).norm() * act(g, b).norm()));
    CHECK(mat_diff(multiply(g, inverse(g)), identity_element()) <
          1e-12 * (1.0 + g.m.squaredNorm()));
  }
  const double phi = 1.234;
  CHECK(mat_diff(inverse(rotation(phi)), rotation(-phi)) < 1e-15);
}

TEST_CASE("from_matrix validates") {
  CHECK_NOTHROW((void)GroupElement::from_matrix(random_word().m));
  Mat3 bad = Mat3::Identity();
  bad(1, 1) = 2.0;
  CHECK_THROWS_AS((void)GroupElement::from_matrix(bad), so21::DomainError);
}

TEST_CASE("cartan decomposition examples") {
  const auto id = cartan_decompose(identity_element());
  CHECK(id.phi1 == 0.0);
  CHECK(id.alpha == 0.0);
  CHECK(id.phi2 == 0.0);

  const auto b = cartan_decompose(boost02(1.3));
  CHECK(std::abs(b.alpha - 1.3) < 1e-12);
  CHECK(std::abs(std::remainder(b.phi1, kTwoPi)) < 1e-12);
  CHECK(std::abs(std::remainder(b.phi2, kTwoPi)) < 1e-12);

  const auto g = cartan_compose({0.4, 2.0, 1.1});
  const auto a = cartan_decompose(g);
  CHECK(std::abs(a.phi1 - 0.4) < 1e-12);
  CHECK(std::abs(a.alpha - 2.0) < 1e-12);
  CHECK(std::abs(a.phi2 - 1.1) < 1e-12);

  // alpha = 0 gauge: the whole rotation folds into phi1
  const auto r = cartan_decompose(multiply(rotation(1.0), rotation(2.3)));
  CHECK(std::abs(r.phi1 - 3.3) < 1e-12);
  CHECK(r.phi2 == 0.0);
}

TEST_CASE("cartan round-trip on random angle triples") {
  for (int i = 0; i < 1000; ++i) {
    const CartanAngles in{uni(0.0, kTwoPi), uni(0.0, 3.0), uni(0.0, kTwoPi)};
    const GroupElement g = cartan_compose(in);
    const CartanAngles out = cartan_decompose(g);
    CHECK(mat_diff(cartan_compose(out), g) < 1e-10);
    if (in.alpha > 1e-6) {
      CHECK(std::abs(std::remainder(out.phi1 - in.phi1, kTwoPi)) < 1e-9);
      CHECK(std::abs(out.alpha - in.alpha) < 1e-10);
      CHECK(std::abs(std::remainder(out.phi2 - in.phi2, kTwoPi)) < 1e-9);
    }
  }
}

TEST_CASE("pseudo-orthogonality drift over 20-element words") {
  for (int i = 0; i < 100; ++i)
    CHECK(random_word().invariant_deviation() < 1e-10);
}

TEST_CASE("circle_action formulas") {
  for (double phi : {0.0, 0.4, 2.0, 4.4, 6.1}) {
    const auto r = circle_action(0.0, phi);
    CHECK(std::abs(r.omega - 1.0) < 1e-15);
    CHECK(std::abs(std::remainder(r.phi_new - phi, kTwoPi)) < 1e-12);
  }
  for (double alpha : {0.3, 1.0, 2.2}) {
    const auto r = circle_action(alpha, 0.0);
    CHECK(std::abs(r.omega - std::exp(-alpha)) < 1e-13);
    CHECK(std::abs(std::remainder(r.phi_new, kTwoPi)) < 1e-9);
    CHECK(r.omega > 0.0);
  }
}

TEST_CASE("measure identity d(phi_a) = d(phi)/omega") {
  const double h = 1e-5;
  for (double alpha : {-1.2, 0.4, 1.7}) {
    for (int k = 1; k < 40; ++k) {
      const double phi = kTwoPi * k / 40.0;
      const auto c = circle_action(alpha, phi);
      const auto p = circle_action(alpha, phi + h);
      const auto m = circle_action(alpha, phi - h);
      double d = std::remainder(p.phi_new - m.phi_new, kTwoPi) / (2.0 * h);
      CHECK(std::abs(d - 1.0 / c.omega) < 1e-6);
    }
  }
}

TEST_CASE("cone action matches circle_action for boosts") {
  for (int i = 0; i < 200; ++i) {
    const double alpha = uni(-2.0, 2.0), phi = uni(0.0, kTwoPi);
    const double w0 = uni(0.2, 3.0);
    const Vec3 k = w0 * Vec3(1.0, std::sin(phi), std::cos(phi));
    // circle_action(alpha, .) describes the inverse boost on cone coordinates
    const Vec3 out = act(boost02(-alpha), k);
    CHECK(std::abs(minkowski(out, out)) < 1e-12 * (1.0 + out.squaredNorm()));
    const auto ca = circle_action(alpha, phi);
    CHECK(std::abs(out(0) - w0 * ca.omega) < 1e-12 * (1.0 + out(0)));
    const double phi_out = std::atan2(out(1), out(2));
    CHECK(std::abs(std::remainder(phi_out - ca.phi_new, kTwoPi)) < 1e-10);
  }
}

TEST_CASE("circle_action composition cocycle") {
  for (int i = 0; i < 200; ++i) {
    const double a = uni(-1.5, 1.5), b = uni(-1.5, 1.5);
    const double phi = uni(0.0, kTwoPi);
    // boost02(a) then boost02(b): apply b first on the inverse-action side
    const auto first = circle_action(b, phi);
    const auto second = circle_action(a, first.phi_new);
    const auto total = circle_action(a + b, phi);
    CHECK(std::abs(first.omega * second.omega - total.omega) <
          1e-10 * (1.0 + total.omega));
    CHECK(std::abs(std::remainder(second.phi_new - total.phi_new, kTwoPi)) < 1e-10);
  }
}
