#ifndef SO21_GROUP_HPP
#define SO21_GROUP_HPP

#include <Eigen/Dense>

#include "so21/errors.hpp"

namespace so21::group {

using Vec3 = Eigen::Vector3d;   // Minkowski components (p0, p1, p2)
using Mat3 = Eigen::Matrix3d;

/// Metric eta = diag(+1, -1, -1).
inline Mat3 metric() {
  Mat3 eta = Mat3::Zero();
  eta(0, 0) = 1.0;
  eta(1, 1) = -1.0;
  eta(2, 2) = -1.0;
  return eta;
}

/// Minkowski product p0 q0 - p1 q1 - p2 q2.
inline double minkowski(const Vec3& p, const Vec3& q) {
  return p(0) * q(0) - p(1) * q(1) - p(2) * q(2);
}

// Element of SO0(2,1): m^T eta m = eta, det m = 1, m00 > 0.
struct GroupElement {
  Mat3 m = Mat3::Identity();

  /// Entrywise deviation of m^T eta m from eta.
  double invariant_deviation() const;

  /// Validating constructor for externally supplied matrices.
  static GroupElement from_matrix(const Mat3& m, double tol = 1e-9);
};

GroupElement identity_element();

/// Rotation on the (p1,p2) plane; maps the cone point with angle phi0 to
/// phi0 + phi, so T(r(phi1)) f(phi) = f(phi - phi1) holds literally.
GroupElement rotation(double phi);

/// Hyperbolic rotation on the (p0,p2) plane.  Sign fixed so that the
/// inverse action on cone coordinates gives omega = cosh a - sinh a cos phi
/// (see circle_action); boost02(a) maps (1,0,0) to (cosh a, 0, sinh a).
GroupElement boost02(double alpha);

/// Hyperbolic rotation on the (p0,p1) plane: (1,0,0) -> (cosh b, sinh b, 0).
GroupElement boost01(double beta);

/// Horospherical one-parameter families B(b) and Z(z); Z fixes the cone
/// point (1/2, 0, 1/2).  The (0,1) entry of B is b (pseudo-orthogonality
/// forces it; the source prints "a" there).
GroupElement horo_b(double b);
GroupElement horo_z(double z);

GroupElement multiply(const GroupElement& g1, const GroupElement& g2);

/// Exact pseudo-orthogonal inverse eta g^T eta.
GroupElement inverse(const GroupElement& g);

Vec3 act(const GroupElement& g, const Vec3& v);

struct CartanAngles {
  double phi1 = 0.0;   // in [0, 2pi)
  double alpha = 0.0;  // >= 0
  double phi2 = 0.0;   // in [0, 2pi)
};

/// g = rotation(phi1) * boost02(alpha) * rotation(phi2).  The alpha = 0
/// case folds the whole rotation into phi1 (phi2 = 0).
CartanAngles cartan_decompose(const GroupElement& g);

GroupElement cartan_compose(const CartanAngles& angles);

struct CircleAction {
  double omega;    // > 0
  double phi_new;  // in [0, 2pi)
};

/// Boost action on the circle:
///   omega   = cosh a - sinh a cos phi
///   sin f_a = sin phi / omega
///   cos f_a = (-sinh a + cosh a cos phi) / omega
/// with phi_new resolved by atan2.
CircleAction circle_action(double alpha, double phi);

/// Wrap an angle into [0, 2pi).
double wrap_angle(double phi);

}  // namespace so21::group

#endif
