#ifndef SO21_ISO21_HPP
#define SO21_ISO21_HPP

#include <complex>
#include <utility>

#include "so21/group.hpp"

namespace so21::iso {

using group::GroupElement;
using group::Vec3;
using Complex = std::complex<double>;

// Element (a, r) of the semidirect product: translation then rotation part.
struct IsoElement {
  Vec3 a = Vec3::Zero();
  GroupElement r;
};

/// Multiplication law (a1, r1)(a2, r2) = (a1 + r1 a2, r1 r2).
IsoElement iso_multiply(const IsoElement& g1, const IsoElement& g2);

IsoElement iso_inverse(const IsoElement& g);

// Momentum with cached Minkowski norm.
struct Momentum {
  Vec3 p = Vec3::Zero();
  double msq = 0.0;

  static Momentum from(const Vec3& p) { return {p, group::minkowski(p, p)}; }
};

enum class OrbitClass { MassiveUpper, MassiveLower, Tachyonic, LightlikeUpper, Origin };

const char* orbit_name(OrbitClass c);

/// Classify p by its Minkowski norm.  tol <= 0 selects the scale-aware
/// default 1e-9 (1 + |p|^2).  The lower light cone (msq ~ 0, p0 < 0) is not
/// an orbit handled here and raises AmbiguousClassError.
OrbitClass orbit_classify(const Vec3& p, double tol = 0.0);

/// Translation character chi_p(a) = exp(i (p.a)) with the Minkowski product.
Complex character(const Momentum& p, const Vec3& a);

/// Base point of the orbit through p (the chart origin):
/// (m,0,0), (0,0,|m|) or (1/2,0,1/2) by case.
Vec3 base_point(OrbitClass c, double scale);

/// Standard element h(p) with h(p) base = p.  Case gauges:
///   massive:   R(phi) h02(alpha)
///   tachyonic: h01(beta) h02(alpha) on the coordinate patch, a rotation
///              gauge off-patch (the hyperbolic chart covers only p2 >= |m|)
///   lightlike: B(b) D(tau), with a rotation fallback on the single
///              generatrix tau = p0 + p2 = 0 the stereographic chart misses.
/// Throws OutOfOrbitError for the origin and for the lower sheet/cone.
GroupElement wigner_operator(const Momentum& p);

enum class LittleKind { Rotation, Boost01, HoroZ };

// Little-group element together with its extracted parameter.
struct LittleGroupElement {
  LittleKind kind;
  double parameter;
  GroupElement g;
};

/// Wigner rotation w = h^{-1}(p) r h(r^{-1}p).  The result must fix the
/// case's base point; StabilizerMismatchError signals a convention bug.
LittleGroupElement wigner_rotation(const Momentum& p, const GroupElement& r);

// Irreducible-representation label of the inhomogeneous group.
struct IsoIrrepLabel {
  enum class Kind { MassSpin, TachyonicSpin, Helicity, BoundaryRep };
  Kind kind;
  double mass = 0.0;   // MassSpin (> 0) and TachyonicSpin (> 0, |m| of msq < 0)
  double spin = 0.0;   // integer s / real s / helicity lambda
  Complex sigma{0.0, 0.0};  // BoundaryRep only

  static IsoIrrepLabel mass_spin(double m, long s);
  static IsoIrrepLabel tachyonic_spin(double m, double s);
  static IsoIrrepLabel helicity(double lambda);
  static IsoIrrepLabel boundary(const Complex& sigma);
};

struct InducedAction {
  Complex multiplier;  // |multiplier| = 1 for the unitary labels
  Momentum p_new;      // r^{-1} p
};

/// Induced-representation action of g = (a, r) on a sample at p:
/// multiplier exp(-i (p.a)) times the little-group character at the Wigner
/// parameter; the point moves to r^{-1} p.  The label must match the orbit
/// (and its mass scale); BoundaryRep delegates to the homogeneous-group
/// machinery and is refused here.
InducedAction induced_action(const IsoIrrepLabel& label, const IsoElement& g,
                             const Momentum& p);

/// Quasi-invariant measure density in the case's chart coordinates:
///   massive (alpha, phi):   tanh(alpha)/2
///   tachyonic (alpha, beta): sinh(alpha)/2
///   lightlike (tau, a):      tau (1-a)^2
/// defined on the alpha >= 0 (tau > 0) patch.
double measure_density(OrbitClass c, double c1, double c2);

/// Chart maps (Eq.-type: spherical / hyperbolic / stereographic) and their
/// inverses; scale is the orbit mass scale (ignored for the cone, whose tau
/// coordinate carries it).
Vec3 chart(OrbitClass c, double c1, double c2, double scale = 1.0);
std::pair<double, double> chart_inverse(OrbitClass c, const Vec3& p);

}  // namespace so21::iso

#endif
