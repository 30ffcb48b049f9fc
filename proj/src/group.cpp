#include "so21/group.hpp"

#include <cmath>

namespace so21::group {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

double wrap_angle(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double GroupElement::invariant_deviation() const {
  const Mat3 eta = metric();
  return (m.transpose() * eta * m - eta).cwiseAbs().maxCoeff();
}

GroupElement GroupElement::from_matrix(const Mat3& m, double tol) {
  GroupElement g{m};
  if (g.invariant_deviation() > tol)
    throw DomainError("GroupElement: matrix is not pseudo-orthogonal");
  if (std::abs(m.determinant() - 1.0) > tol)
    throw DomainError("GroupElement: determinant differs from 1");
  if (m(0, 0) <= 0.0)
    throw DomainError("GroupElement: not in the identity component (m00 <= 0)");
  return g;
}

GroupElement identity_element() { return GroupElement{Mat3::Identity()}; }

GroupElement rotation(double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  Mat3 m = Mat3::Identity();
  m(1, 1) = c;  m(1, 2) = s;
  m(2, 1) = -s; m(2, 2) = c;
  return GroupElement{m};
}

GroupElement boost02(double alpha) {
  const double c = std::cosh(alpha), s = std::sinh(alpha);
  Mat3 m = Mat3::Identity();
  m(0, 0) = c; m(0, 2) = s;
  m(2, 0) = s; m(2, 2) = c;
  return GroupElement{m};
}

GroupElement boost01(double beta) {
  const double c = std::cosh(beta), s = std::sinh(beta);
  Mat3 m = Mat3::Identity();
  m(0, 0) = c; m(0, 1) = s;
  m(1, 0) = s; m(1, 1) = c;
  return GroupElement{m};
}

GroupElement horo_b(double b) {
  const double h = 0.5 * b * b;
  Mat3 m;
  m << 1.0 + h,  b,   h,
       b,        1.0, b,
       -h,       -b,  1.0 - h;
  return GroupElement{m};
}

GroupElement horo_z(double z) {
  const double h = 0.5 * z * z;
  Mat3 m;
  m << 1.0 + h,  z,   -h,
       z,        1.0, -z,
       h,        z,   1.0 - h;
  return GroupElement{m};
}

GroupElement multiply(const GroupElement& g1, const GroupElement& g2) {
  return GroupElement{g1.m * g2.m};
}

GroupElement inverse(const GroupElement& g) {
  const Mat3 eta = metric();
  return GroupElement{eta * g.m.transpose() * eta};
}

Vec3 act(const GroupElement& g, const Vec3& v) { return g.m * v; }

CartanAngles cartan_decompose(const GroupElement& g) {
  const Mat3& m = g.m;
  // m00 = cosh alpha; clamp float noise just below 1.
  double c = m(0, 0);
  if (c < 1.0) {
    if (c < 1.0 - 1e-12)
      throw DomainError("cartan_decompose: m00 < 1, not in SO0(2,1)");
    c = 1.0;
  }
  const double alpha = std::acosh(c);
  const double s = std::sinh(alpha);
  CartanAngles a;
  a.alpha = alpha;
  if (s < 1e-15) {
    // Pure rotation: fold everything into phi1.
    a.phi1 = wrap_angle(std::atan2(m(1, 2), m(1, 1)));
    a.phi2 = 0.0;
    return a;
  }
  // First row: (cosh a, -sinh a sin phi2, sinh a cos phi2);
  // first column: (cosh a, sinh a sin phi1, sinh a cos phi1).
  a.phi2 = wrap_angle(std::atan2(-m(0, 1) / s, m(0, 2) / s));
  a.phi1 = wrap_angle(std::atan2(m(1, 0) / s, m(2, 0) / s));
  return a;
}

GroupElement cartan_compose(const CartanAngles& angles) {
  return multiply(rotation(angles.phi1),
                  multiply(boost02(angles.alpha), rotation(angles.phi2)));
}

CircleAction circle_action(double alpha, double phi) {
  const double ca = std::cosh(alpha), sa = std::sinh(alpha);
  const double omega = ca - sa * std::cos(phi);
  const double sin_new = std::sin(phi) / omega;
  const double cos_new = (-sa + ca * std::cos(phi)) / omega;
  return {omega, wrap_angle(std::atan2(sin_new, cos_new))};
}

}  // namespace so21::group
