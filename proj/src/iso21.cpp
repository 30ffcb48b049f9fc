#include "so21/iso21.hpp"

#include <cmath>
#include <string>

namespace so21::iso {

namespace {

constexpr double kPi = 3.14159265358979323846;

using group::act;
using group::boost01;
using group::boost02;
using group::horo_b;
using group::horo_z;
using group::inverse;
using group::minkowski;
using group::multiply;
using group::rotation;
using group::wrap_angle;

double auto_tol(const Vec3& p, double tol) {
  return tol > 0.0 ? tol : 1e-9 * (1.0 + p.squaredNorm());
}

double clamped_acosh(double x) { return std::acosh(std::max(1.0, x)); }

}  // namespace

IsoElement iso_multiply(const IsoElement& g1, const IsoElement& g2) {
  return {g1.a + g1.r.m * g2.a, multiply(g1.r, g2.r)};
}

IsoElement iso_inverse(const IsoElement& g) {
  const GroupElement rinv = inverse(g.r);
  return {-(rinv.m * g.a), rinv};
}

const char* orbit_name(OrbitClass c) {
  switch (c) {
    case OrbitClass::MassiveUpper: return "massive-upper";
    case OrbitClass::MassiveLower: return "massive-lower";
    case OrbitClass::Tachyonic: return "tachyonic";
    case OrbitClass::LightlikeUpper: return "lightlike-upper";
    case OrbitClass::Origin: return "origin";
  }
  return "?";
}

OrbitClass orbit_classify(const Vec3& p, double tol) {
  const double t = auto_tol(p, tol);
  if (p.norm() <= t) return OrbitClass::Origin;
  const double msq = minkowski(p, p);
  if (std::abs(msq) <= t) {
    if (p(0) > 0.0) return OrbitClass::LightlikeUpper;
    throw AmbiguousClassError("orbit_classify: lower light cone (msq ~ 0, p0 < 0)");
  }
  if (msq > 0.0)
    return p(0) > 0.0 ? OrbitClass::MassiveUpper : OrbitClass::MassiveLower;
  return OrbitClass::Tachyonic;
}

Complex character(const Momentum& p, const Vec3& a) {
  return std::exp(Complex(0.0, minkowski(p.p, a)));
}

Vec3 base_point(OrbitClass c, double scale) {
  switch (c) {
    case OrbitClass::MassiveUpper: return Vec3(scale, 0.0, 0.0);
    case OrbitClass::Tachyonic: return Vec3(0.0, 0.0, scale);
    case OrbitClass::LightlikeUpper: return Vec3(0.5, 0.0, 0.5);
    default:
      throw UnsupportedCaseError(std::string("base_point: no base point for ") +
                                 orbit_name(c));
  }
}

namespace {

struct Transporter {
  GroupElement h;
  double cond;  // product of factor norms, bounds the rounding in h
};

Transporter wigner_operator_impl(const Momentum& p) {
  const OrbitClass c = orbit_classify(p.p);
  GroupElement h;
  double cond = 1.0;
  double scale = 1.0;
  switch (c) {
    case OrbitClass::Origin:
      throw OutOfOrbitError("wigner_operator: origin has no transporter");
    case OrbitClass::MassiveLower:
      throw OutOfOrbitError("wigner_operator: lower hyperboloid sheet refused");
    case OrbitClass::MassiveUpper: {
      scale = std::sqrt(p.msq);
      const double alpha = clamped_acosh(p.p(0) / scale);
      const double phi =
          (p.p(1) != 0.0 || p.p(2) != 0.0) ? std::atan2(p.p(1), p.p(2)) : 0.0;
      h = multiply(rotation(phi), boost02(alpha));
      cond = std::cosh(alpha);
      break;
    }
    case OrbitClass::Tachyonic: {
      scale = std::sqrt(-p.msq);
      const Vec3 q = p.p / scale;
      // paper gauge on the chart interior; the rotation gauge stays well
      // conditioned everywhere else (and covers the whole orbit)
      if (q(2) > 1.01 && std::abs(q(0)) > std::abs(q(1))) {
        const double alpha = std::copysign(clamped_acosh(q(2)), q(0));
        const double beta = std::asinh(q(1) / std::sinh(alpha));
        h = multiply(boost01(beta), boost02(alpha));
        cond = std::cosh(beta) * std::cosh(alpha);
      } else {
        const double a = std::asinh(q(0));
        const double phi = std::atan2(q(1), q(2));
        h = multiply(rotation(phi), boost02(a));
        cond = std::cosh(a);
      }
      break;
    }
    case OrbitClass::LightlikeUpper: {
      const double tau = p.p(0) + p.p(2);
      const double b = tau > 0.0 ? p.p(1) / tau : 0.0;
      if (tau > 0.05 * (1.0 + p.p(0)) && std::abs(b) <= 10.0 && tau <= 20.0) {
        h = multiply(horo_b(b), boost02(std::log(tau)));
        cond = (1.0 + 0.5 * b * b + std::abs(b)) * std::max(tau, 1.0 / tau);
      } else {
        // rotation gauge through the cone point at angle phi; also covers
        // the generatrix tau = 0 the stereographic chart misses
        const double a = std::log(2.0 * p.p(0));
        const double phi = std::atan2(p.p(1), p.p(2));
        h = multiply(rotation(phi), boost02(a));
        cond = std::cosh(a);
      }
      break;
    }
  }
  const Vec3 moved = act(h, base_point(c, scale));
  if ((moved - p.p).norm() > 1e-10 * (1.0 + cond) * (1.0 + p.p.norm()))
    throw OutOfOrbitError("wigner_operator: transporter check failed");
  return {h, cond};
}

}  // namespace

GroupElement wigner_operator(const Momentum& p) {
  return wigner_operator_impl(p).h;
}

LittleGroupElement wigner_rotation(const Momentum& p, const GroupElement& r) {
  const OrbitClass c = orbit_classify(p.p);
  const Momentum p_back = Momentum::from(act(inverse(r), p.p));
  if (orbit_classify(p_back.p) != c)
    throw OutOfOrbitError("wigner_rotation: r^{-1}p left the orbit class");
  const Transporter hp = wigner_operator_impl(p);
  const Transporter hq = wigner_operator_impl(p_back);
  const GroupElement w = multiply(inverse(hp.h), multiply(r, hq.h));
  // conditioning of the triple product bounds the attainable accuracy
  const double cond = hp.cond * r.m.cwiseAbs().maxCoeff() * hq.cond;
  const double tol = 1e-10 * (1.0 + cond);

  double scale = 1.0;
  if (c == OrbitClass::MassiveUpper) scale = std::sqrt(p.msq);
  if (c == OrbitClass::Tachyonic) scale = std::sqrt(-p.msq);
  const Vec3 base = base_point(c, scale);
  if ((act(w, base) - base).norm() > tol * (1.0 + base.norm()))
    throw StabilizerMismatchError("wigner_rotation: w does not fix the base point");

  LittleGroupElement out{LittleKind::Rotation, 0.0, w};
  GroupElement expected;
  switch (c) {
    case OrbitClass::MassiveUpper:
      out.kind = LittleKind::Rotation;
      out.parameter = wrap_angle(std::atan2(w.m(1, 2), w.m(1, 1)));
      expected = rotation(out.parameter);
      break;
    case OrbitClass::Tachyonic:
      out.kind = LittleKind::Boost01;
      out.parameter = std::asinh(w.m(0, 1));
      expected = boost01(out.parameter);
      break;
    case OrbitClass::LightlikeUpper:
      out.kind = LittleKind::HoroZ;
      out.parameter = w.m(1, 0);
      expected = horo_z(out.parameter);
      break;
    default:
      throw OutOfOrbitError("wigner_rotation: unsupported orbit");
  }
  if ((w.m - expected.m).cwiseAbs().maxCoeff() >
      tol * (1.0 + expected.m.cwiseAbs().maxCoeff()))
    throw StabilizerMismatchError(
        "wigner_rotation: stabilizer element is not the expected one-parameter "
        "family");
  // return the clean one-parameter matrix rather than the noisy product
  out.g = expected;
  return out;
}

IsoIrrepLabel IsoIrrepLabel::mass_spin(double m, long s) {
  if (m <= 0.0) throw DomainError("mass_spin: mass must be positive");
  return {Kind::MassSpin, m, double(s), Complex(0.0, 0.0)};
}

IsoIrrepLabel IsoIrrepLabel::tachyonic_spin(double m, double s) {
  if (m <= 0.0) throw DomainError("tachyonic_spin: |m| must be positive");
  return {Kind::TachyonicSpin, m, s, Complex(0.0, 0.0)};
}

IsoIrrepLabel IsoIrrepLabel::helicity(double lambda) {
  return {Kind::Helicity, 0.0, lambda, Complex(0.0, 0.0)};
}

IsoIrrepLabel IsoIrrepLabel::boundary(const Complex& sigma) {
  return {Kind::BoundaryRep, 0.0, 0.0, sigma};
}

InducedAction induced_action(const IsoIrrepLabel& label, const IsoElement& g,
                             const Momentum& p) {
  const OrbitClass c = orbit_classify(p.p);
  const auto mismatch = [&](const char* want) {
    throw LabelOrbitMismatchError(std::string("induced_action: label expects ") +
                                  want + " orbit, point classifies as " +
                                  orbit_name(c));
  };
  switch (label.kind) {
    case IsoIrrepLabel::Kind::MassSpin:
      if (c != OrbitClass::MassiveUpper) mismatch("massive-upper");
      if (std::abs(std::sqrt(p.msq) - label.mass) > 1e-8 * (1.0 + label.mass))
        throw LabelOrbitMismatchError("induced_action: orbit mass differs from label");
      break;
    case IsoIrrepLabel::Kind::TachyonicSpin:
      if (c != OrbitClass::Tachyonic) mismatch("tachyonic");
      if (std::abs(std::sqrt(-p.msq) - label.mass) > 1e-8 * (1.0 + label.mass))
        throw LabelOrbitMismatchError("induced_action: orbit scale differs from label");
      break;
    case IsoIrrepLabel::Kind::Helicity:
      if (c != OrbitClass::LightlikeUpper) mismatch("lightlike-upper");
      break;
    case IsoIrrepLabel::Kind::BoundaryRep:
      throw UnsupportedCaseError(
          "induced_action: the origin representation acts on the homogeneous-"
          "group space, not by a scalar multiplier");
  }
  const LittleGroupElement w = wigner_rotation(p, g.r);
  const Complex little = std::exp(Complex(0.0, label.spin * w.parameter));
  const Complex translation = std::exp(Complex(0.0, -minkowski(p.p, g.a)));
  return {translation * little, Momentum::from(act(inverse(g.r), p.p))};
}

double measure_density(OrbitClass c, double c1, double c2) {
  switch (c) {
    case OrbitClass::MassiveUpper:
      if (c1 < 0.0) throw OutOfChartError("measure_density: alpha < 0");
      return 0.5 * std::tanh(c1);
    case OrbitClass::Tachyonic:
      if (c1 < 0.0) throw OutOfChartError("measure_density: alpha < 0");
      return 0.5 * std::sinh(c1);
    case OrbitClass::LightlikeUpper:
      if (c1 <= 0.0) throw OutOfChartError("measure_density: tau <= 0");
      return c1 * (1.0 - c2) * (1.0 - c2);
    default:
      throw UnsupportedCaseError(std::string("measure_density: no chart for ") +
                                 orbit_name(c));
  }
}

Vec3 chart(OrbitClass c, double c1, double c2, double scale) {
  switch (c) {
    case OrbitClass::MassiveUpper:
      if (scale <= 0.0) throw OutOfChartError("chart: mass scale must be positive");
      return scale * Vec3(std::cosh(c1), std::sinh(c1) * std::sin(c2),
                          std::sinh(c1) * std::cos(c2));
    case OrbitClass::Tachyonic:
      if (scale <= 0.0) throw OutOfChartError("chart: mass scale must be positive");
      return scale * Vec3(std::sinh(c1) * std::cosh(c2),
                          std::sinh(c1) * std::sinh(c2), std::cosh(c1));
    case OrbitClass::LightlikeUpper:
      if (c1 <= 0.0) throw OutOfChartError("chart: tau must be positive");
      return c1 * Vec3(0.5 * (1.0 + c2 * c2), c2, 0.5 * (1.0 - c2 * c2));
    default:
      throw UnsupportedCaseError(std::string("chart: no chart for ") +
                                 orbit_name(c));
  }
}

std::pair<double, double> chart_inverse(OrbitClass c, const Vec3& p) {
  if (orbit_classify(p) != c)
    throw OutOfChartError("chart_inverse: point is not on an orbit of this class");
  const double msq = minkowski(p, p);
  switch (c) {
    case OrbitClass::MassiveUpper: {
      const double m = std::sqrt(msq);
      const double alpha = clamped_acosh(p(0) / m);
      const double phi =
          (p(1) == 0.0 && p(2) == 0.0) ? 0.0 : wrap_angle(std::atan2(p(1), p(2)));
      return {alpha, std::sinh(alpha) > 0.0 ? phi : 0.0};
    }
    case OrbitClass::Tachyonic: {
      const double m = std::sqrt(-msq);
      const Vec3 q = p / m;
      if (q(2) < 1.0 - 1e-12)
        throw OutOfChartError("chart_inverse: point outside the hyperbolic patch");
      const double alpha = std::copysign(clamped_acosh(q(2)), q(0));
      if (std::sinh(alpha) == 0.0) return {0.0, 0.0};
      if (std::abs(q(0)) <= std::abs(q(1)))
        throw OutOfChartError("chart_inverse: point outside the hyperbolic patch");
      return {alpha, std::asinh(q(1) / std::sinh(alpha))};
    }
    case OrbitClass::LightlikeUpper: {
      const double tau = p(0) + p(2);
      if (tau <= 1e-12 * (1.0 + p(0)))
        throw OutOfChartError("chart_inverse: generatrix tau = 0 not covered");
      return {tau, p(1) / tau};
    }
    default:
      throw UnsupportedCaseError(std::string("chart_inverse: no chart for ") +
                                 orbit_name(c));
  }
}

}  // namespace so21::iso
