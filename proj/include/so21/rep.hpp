#ifndef SO21_REP_HPP
#define SO21_REP_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "so21/group.hpp"
#include "so21/numerics.hpp"

namespace so21::rep {

using numerics::Complex;
using numerics::SeriesResult;

enum class Series { Principal, Complementary, DiscreteInteger, Generic };

// Homogeneity degree sigma with its series classification.
struct RepLabel {
  Complex sigma;
  Series series = Series::Generic;
  double rho = 0.0;  // valid for Principal: sigma = -1/2 + i rho
  long n = 0;        // valid for DiscreteInteger
};

/// Classify sigma: principal line Re = -1/2, integers, real (-1,0), else
/// generic.  Tolerance 1e-12 on realness/integrality; sigma = -1/2 counts
/// as Principal(rho = 0).
RepLabel classify(const Complex& sigma);

/// Invariant-form coefficient Phi_m = Gamma(m+sigma+1)/Gamma(m-sigma).
/// A denominator pole gives exact 0; a numerator pole (with finite
/// denominator) throws PoleError.
Complex phi_m(const Complex& sigma, long m);

/// Coefficient a_m of the expansion (1-cos psi)^lambda = sum a_m e^{im psi}:
///   a_m = 2^lambda Gamma(lambda+1/2) (-lambda)_|m| / (sqrt(pi) Gamma(|m|+lambda+1)),
/// even in m by construction.  Throws PoleError at poles of Gamma(lambda+1/2).
Complex fourier_lambda(const Complex& lambda, long m);

struct Degeneracy {
  bool fplus = false;   // m >= -sigma
  bool fminus = false;  // m <= sigma
  bool fzero = false;   // |m| <= sigma and sigma >= 0
};

/// Degeneracy-subspace membership flags for integer sigma.
Degeneracy degeneracy_membership(long sigma_int, long m);

/// Zonal spherical function (cosh a)^sigma 2F1((1-sigma)/2, -sigma/2; 1; tanh^2 a).
Complex zonal(const Complex& sigma, double alpha);

/// Associated spherical function; for m >= 0
///   ((-sigma)_m / (2^m m!)) (cosh a)^sigma (tanh a)^m
///     * 2F1((m-sigma)/2, (m-sigma+1)/2; m+1; tanh^2 a),
/// extended to m < 0 by the sign rule (-1)^|m| assoc(sigma, |m|, a).
Complex assoc(const Complex& sigma, long m, double alpha);

/// Integral forms: circle averages of (cosh a - sinh a cos phi)^sigma and
/// of the same weight times e^{i m phi}.  Independent of the closed forms.
Complex zonal_integral(const Complex& sigma, double alpha, int n_points);
Complex assoc_integral(const Complex& sigma, long m, double alpha, int n_points);

/// Matrix element t_{m_out, m_in}(g) of the representation in the canonical
/// basis, via the Cartan factors: rotations contribute exact phases, the
/// boost factor is a circle quadrature of omega^sigma e^{i m_in phi_a}.
Complex matrix_element(const Complex& sigma, long m_out, long m_in,
                       const group::GroupElement& g);

/// Block of boost matrix elements t_{m', m}(boost02(alpha)) for
/// m' in [mo_lo, mo_hi] (rows), m in [mi_lo, mi_hi] (cols).  Quadrature
/// resolution is doubled until the block is stable.
Eigen::MatrixXcd boost_block(const Complex& sigma, double alpha,
                             long mo_lo, long mo_hi, long mi_lo, long mi_hi);

/// Same block for a general element, phases included.
Eigen::MatrixXcd rep_block(const Complex& sigma, const group::GroupElement& g,
                           long mo_lo, long mo_hi, long mi_lo, long mi_hi);

// Finite Fourier coefficient vector on a declared window.
struct FourierVector {
  long m_min = 0;
  std::vector<Complex> coeffs;  // coeffs[k] is the coefficient of m_min + k

  Complex coeff(long m) const {
    const long k = m - m_min;
    if (k < 0 || k >= long(coeffs.size())) return Complex(0.0, 0.0);
    return coeffs[size_t(k)];
  }
  long m_max() const { return m_min + long(coeffs.size()) - 1; }

  static FourierVector basis(long m) { return {m, {Complex(1.0, 0.0)}}; }
};

/// Canonical invariant Hermitian form (c0 = 1):
///   2^{-sigma-1}/(sqrt(pi) Gamma(sigma+1)) sum_m Phi_m conj(f1_m) f2_m.
/// Throws PoleError when Gamma(sigma+1) or a numerator Phi pole degenerates.
Complex hermitian_form(const FourierVector& f1, const FourierVector& f2,
                       double sigma);

/// Evaluate sum_m a_m e^{im psi} = (1-cos psi)^lambda from the fourier_lambda
/// coefficients, accelerating the two one-sided tails (needed when
/// Re(-2 lambda - 1) >= -1 makes raw partial sums impractically slow).
SeriesResult fourier_reconstruct(const Complex& lambda, double psi,
                                 double tol = 1e-10);

}  // namespace so21::rep

#endif
