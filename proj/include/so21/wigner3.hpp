#ifndef SO21_WIGNER3_HPP
#define SO21_WIGNER3_HPP

#include <array>

#include "so21/group.hpp"
#include "so21/numerics.hpp"

namespace so21::wigner {

using numerics::BilateralOptions;
using numerics::Complex;
using numerics::SeriesResult;

// Kernel exponents derived from the homogeneity degrees:
//   b1 = (s1-s2-s3-1)/2 and cyclic; b1+b2+b3 = -(s1+s2+s3+3)/2.
struct BetaTriple {
  Complex b1, b2, b3;
  Complex sum() const { return b1 + b2 + b3; }
};

struct WignerQuery {
  std::array<Complex, 3> sigmas;
  std::array<long, 3> ms;
};

BetaTriple betas(const Complex& s1, const Complex& s2, const Complex& s3);

/// Invariant trilinear kernel (unit constant):
///   [1-cos(f1-f2)]^{b3}/G(b3+1/2) [1-cos(f2-f3)]^{b1}/G(b1+1/2)
///   [1-cos(f3-f1)]^{b2}/G(b2+1/2).
/// Throws SingularPointError at a coincident pair whose exponent has
/// nonpositive real part.
Complex kernel_k3(const BetaTriple& bt, double phi1, double phi2, double phi3);

/// Building block of the bilateral series: (-b)_k / Gamma(k+b+1),
/// even in k and free of poles for non-degenerate b.
Complex series_factor(const Complex& beta, long k);

/// Normalization constant multiplying the bilateral sum so that the
/// coefficient at ms = (0,0,0) equals 1:
///   G(b1+b2+1) G(b1+b3+1) G(b2+b3+1) / G(b1+b2+b3+1).
/// (The closed-form source constant is off by 2^{3/2} pi against its own
/// series; this is the anchored value.)  Throws PoleError when a numerator
/// Gamma degenerates (certain discrete-series triples).
Complex anchor_constant(const BetaTriple& bt);

/// Wigner coefficient via the bilateral series:
///   K * sum_n (-b3)_{n-m1} (-b1)_{n+m3} (-b2)_n
///           / [G(n-m1+b3+1) G(n+m3+b1+1) G(n+b2+1)].
/// Exactly 0 unless m1+m2+m3 = 0; equals 1 at ms = (0,0,0).
/// Requires Re(s1+s2+s3) < -1 (throws NoConvergenceError otherwise).
SeriesResult wigner_coefficient(const WignerQuery& q,
                                const BilateralOptions& opts = {});

/// Same coefficient through the 3H3 packaging: prefactor
///   (-1)^{m1} (-b1)_{m3} / [(1+b3)_{m1} G(b2+1) G(-m1+b3+1) G(m3+b1+1)]
/// times the bilateral 3H3 with numerator parameters
/// (-b3-m1, -b1+m3, -b2) and denominators shifted by one.  Used as an
/// internal identity check against the direct series.
SeriesResult wigner_coefficient_h3(const WignerQuery& q,
                                   const BilateralOptions& opts = {});

/// Independent quadrature oracle: the defining triple circle integral,
/// reduced to 2-D by translation invariance (the third angle integrates to
/// a Kronecker delta on m1+m2+m3), evaluated on an offset product grid with
/// the same normalization as the series.  Requires Re(bi) > -1/2.
Complex wigner_oracle(const WignerQuery& q, int n_points);

/// Residual |W(m) - sum_{|m'|<=M} W(m') t1 t2 t3| of the covariance
/// identity for the representation matrices of g.
double covariance_residual(const WignerQuery& q, const group::GroupElement& g,
                           int M);

}  // namespace so21::wigner

#endif
