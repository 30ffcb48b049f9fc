#ifndef SO21_NUMERICS_HPP
#define SO21_NUMERICS_HPP

#include <complex>
#include <functional>
#include <vector>

#include "so21/errors.hpp"

namespace so21::numerics {

using Complex = std::complex<double>;

// Uniform return contract for infinite-series evaluators.
struct SeriesResult {
  Complex value{0.0, 0.0};
  long terms_used = 0;
  double err_estimate = 0.0;  // absolute-error bound estimate, >= 0
};

struct SeriesOptions {
  double tol = 1e-12;      // relative stopping tolerance
  long max_terms = 200000;
};

struct BilateralOptions {
  double tol = 1e-10;       // relative target for the accelerated tails
  int center_halfwidth = 32;
  int tail_budget = 96;     // Levin steps per tail
  // > 0 skips acceleration entirely and returns the symmetric partial sum
  // over |n| <= truncate_at with a power-law remainder estimate; this
  // deterministic protocol lets two algebraic routes be compared without
  // adaptive-stopping noise
  long truncate_at = 0;
};

/// True when z is within tol of a nonpositive integer (a Gamma pole).
bool is_nonpositive_integer(const Complex& z, double tol = 1e-12);

/// Principal-branch log Gamma.  Relative accuracy ~1e-13 for |z| <= 50.
/// Throws PoleError at nonpositive integers.
Complex log_gamma(const Complex& z);

/// 1/Gamma(z).  Entire; exactly 0 at nonpositive integers (within 1e-12).
Complex reciprocal_gamma(const Complex& z);

/// Pochhammer symbol (a)_n for any integer n.
/// (a)_0 = 1, (a)_n = a(a+1)...(a+n-1), (a)_{-k} = 1/((a-1)...(a-k)).
/// Small |n| by direct recurrence, large |n| by log-gamma ratios; the two
/// paths agree (seam test in the suite).  Throws PoleError when a
/// negative-index factor vanishes.
Complex pochhammer(const Complex& a, long n);

/// Gauss hypergeometric series 2F1(a,b;c;x) for 0 <= x < 1.
/// Stops when the term stays below tol*|sum| three times in a row;
/// err_estimate is the geometric tail bound.  Throws PoleError for
/// nonpositive-integer c and NoConvergenceError at the term cap.
SeriesResult gauss_2f1(const Complex& a, const Complex& b, const Complex& c,
                       double x, const SeriesOptions& opts = {});

/// Sum over all integers n of term(n).  decay_exponent is the caller's
/// asymptotic power |term(n)| ~ |n|^decay_exponent (must be < -1).
/// Direct center block plus Levin-u accelerated tails; err_estimate is the
/// acceleration residual plus a center-doubling cross-check.
SeriesResult bilateral_sum(const std::function<Complex(long)>& term,
                           double decay_exponent,
                           const BilateralOptions& opts = {});

/// Mean of f over [0,2pi) on a uniform n-point grid with half-step offset:
/// (1/N) sum f(2pi(k+1/2)/N).  Spectrally accurate for smooth periodic f;
/// the offset keeps endpoint-singular integrands off the grid.
Complex circle_quadrature(const std::function<Complex(double)>& f, int n_points);

/// 2-D analogue of circle_quadrature on the offset product grid.
Complex torus_quadrature_2d(const std::function<Complex(double, double)>& f,
                            int n_points);

/// Levin u-transform accumulator (van Wijngaarden-style recursive table).
/// Feed partial sums with remainder estimates omega; estimate() returns the
/// current extrapolation.
class LevinU {
 public:
  Complex next(const Complex& partial_sum, const Complex& omega, double beta = 1.0);
  int steps() const { return n_; }

 private:
  std::vector<Complex> numer_;
  std::vector<Complex> denom_;
  int n_ = 0;
};

struct TailResult {
  Complex value{0.0, 0.0};
  double err = 0.0;
  long terms = 0;
  bool converged = false;
};

/// Accelerated sum of term(0) + term(1) + ... with best-estimate tracking:
/// Levin estimates improve then degrade in floating point, so the optimum
/// (smallest successive change) is kept.  Runs of >= 8 exact zeros end the
/// tail (truncating series).  scale sets the magnitude the relative
/// tolerance refers to (pass the full sum's scale, not the tail's; 0 means
/// use the running estimate).
TailResult accelerate_tail(const std::function<Complex(long)>& term,
                           double tol, int budget, double scale = 0.0);

}  // namespace so21::numerics

#endif
