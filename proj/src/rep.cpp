#include "so21/rep.hpp"

#include <cmath>

namespace so21::rep {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kClassifyTol = 1e-12;

using group::circle_action;
using numerics::circle_quadrature;
using numerics::is_nonpositive_integer;
using numerics::log_gamma;
using numerics::pochhammer;
using numerics::reciprocal_gamma;

double factorial(long m) {
  double f = 1.0;
  for (long k = 2; k <= m; ++k) f *= double(k);
  return f;
}

}  // namespace

RepLabel classify(const Complex& sigma) {
  RepLabel label;
  label.sigma = sigma;
  if (std::abs(sigma.real() + 0.5) <= kClassifyTol) {
    label.series = Series::Principal;
    label.rho = sigma.imag();
    return label;
  }
  if (std::abs(sigma.imag()) <= kClassifyTol) {
    const double r = std::round(sigma.real());
    if (std::abs(sigma.real() - r) <= kClassifyTol) {
      label.series = Series::DiscreteInteger;
      label.n = long(r);
      return label;
    }
    if (sigma.real() > -1.0 && sigma.real() < 0.0) {
      label.series = Series::Complementary;
      return label;
    }
  }
  label.series = Series::Generic;
  return label;
}

Complex phi_m(const Complex& sigma, long m) {
  const Complex num = double(m) + sigma + 1.0;
  const Complex den = double(m) - sigma;
  if (is_nonpositive_integer(den)) return Complex(0.0, 0.0);
  if (is_nonpositive_integer(num))
    throw PoleError("phi_m: numerator Gamma pole at m = " + std::to_string(m));
  return std::exp(log_gamma(num) - log_gamma(den));
}

Complex fourier_lambda(const Complex& lambda, long m) {
  const Complex half = lambda + 0.5;
  if (is_nonpositive_integer(half))
    throw PoleError("fourier_lambda: Gamma(lambda+1/2) pole");
  const long ma = std::labs(m);
  // reciprocal_gamma keeps the expression finite when Gamma(m+lambda+1)
  // poles; (-lambda)_m then supplies the exact zeros of integer lambda.
  return std::exp(lambda * std::log(2.0) + log_gamma(half)) / std::sqrt(kPi) *
         pochhammer(-lambda, ma) * reciprocal_gamma(double(ma) + lambda + 1.0);
}

Degeneracy degeneracy_membership(long sigma_int, long m) {
  Degeneracy d;
  d.fplus = m >= -sigma_int;
  d.fminus = m <= sigma_int;
  d.fzero = sigma_int >= 0 && std::labs(m) <= sigma_int;
  return d;
}

Complex zonal(const Complex& sigma, double alpha) {
  const double t2 = std::tanh(alpha) * std::tanh(alpha);
  const Complex f =
      numerics::gauss_2f1((1.0 - sigma) / 2.0, -sigma / 2.0, Complex(1.0, 0.0), t2)
          .value;
  return std::exp(sigma * std::log(std::cosh(alpha))) * f;
}

Complex assoc(const Complex& sigma, long m, double alpha) {
  if (m < 0) {
    const Complex v = assoc(sigma, -m, alpha);
    return (m % 2 == 0) ? v : -v;
  }
  if (m == 0) return zonal(sigma, alpha);
  const double t = std::tanh(alpha);
  const Complex f = numerics::gauss_2f1((double(m) - sigma) / 2.0,
                                        (double(m) - sigma + 1.0) / 2.0,
                                        Complex(double(m) + 1.0, 0.0), t * t)
                        .value;
  return pochhammer(-sigma, m) / (std::pow(2.0, double(m)) * factorial(m)) *
         std::exp(sigma * std::log(std::cosh(alpha))) * std::pow(t, double(m)) * f;
}

Complex zonal_integral(const Complex& sigma, double alpha, int n_points) {
  const double ca = std::cosh(alpha), sa = std::sinh(alpha);
  return circle_quadrature(
      [&](double phi) {
        return std::exp(sigma * std::log(ca - sa * std::cos(phi)));
      },
      n_points);
}

Complex assoc_integral(const Complex& sigma, long m, double alpha, int n_points) {
  const double ca = std::cosh(alpha), sa = std::sinh(alpha);
  return circle_quadrature(
      [&](double phi) {
        return std::exp(sigma * std::log(ca - sa * std::cos(phi)) +
                        Complex(0.0, double(m) * phi));
      },
      n_points);
}

namespace {

// Boost block at fixed quadrature resolution.
Eigen::MatrixXcd boost_block_at(const Complex& sigma, double alpha, long mo_lo,
                                long mo_hi, long mi_lo, long mi_hi, int n) {
  const long n_out = mo_hi - mo_lo + 1;
  const long n_in = mi_hi - mi_lo + 1;
  Eigen::MatrixXcd block(n_out, n_in);
  const double h = 2.0 * kPi / n;
  std::vector<double> phi(n), omega(n), phi_a(n);
  for (int k = 0; k < n; ++k) {
    phi[k] = h * (k + 0.5);
    const auto ca = circle_action(alpha, phi[k]);
    omega[k] = ca.omega;
    phi_a[k] = ca.phi_new;
  }
  std::vector<Complex> w_sig(n);
  for (int k = 0; k < n; ++k) w_sig[k] = std::exp(sigma * std::log(omega[k]));
  for (long j = 0; j < n_in; ++j) {
    const double mi = double(mi_lo + j);
    std::vector<Complex> u(n);
    for (int k = 0; k < n; ++k)
      u[k] = w_sig[k] * std::exp(Complex(0.0, mi * phi_a[k]));
    for (long i = 0; i < n_out; ++i) {
      const double mo = double(mo_lo + i);
      Complex s(0.0, 0.0);
      for (int k = 0; k < n; ++k)
        s += u[k] * std::exp(Complex(0.0, -mo * phi[k]));
      block(i, j) = s / double(n);
    }
  }
  return block;
}

}  // namespace

Eigen::MatrixXcd boost_block(const Complex& sigma, double alpha, long mo_lo,
                             long mo_hi, long mi_lo, long mi_hi) {
  const long mmax = std::max(std::labs(mo_lo), std::labs(mo_hi)) +
                    std::max(std::labs(mi_lo), std::labs(mi_hi));
  int n = 256;
  while (n < 4 * (mmax + 8)) n *= 2;
  Eigen::MatrixXcd prev =
      boost_block_at(sigma, alpha, mo_lo, mo_hi, mi_lo, mi_hi, n);
  for (; n <= (1 << 15); n *= 2) {
    Eigen::MatrixXcd next =
        boost_block_at(sigma, alpha, mo_lo, mo_hi, mi_lo, mi_hi, 2 * n);
    const double diff = (next - prev).cwiseAbs().maxCoeff();
    prev.swap(next);
    if (diff <= 1e-13 * (1.0 + prev.cwiseAbs().maxCoeff())) break;
  }
  return prev;
}

Eigen::MatrixXcd rep_block(const Complex& sigma, const group::GroupElement& g,
                           long mo_lo, long mo_hi, long mi_lo, long mi_hi) {
  const auto angles = group::cartan_decompose(g);
  Eigen::MatrixXcd block =
      boost_block(sigma, angles.alpha, mo_lo, mo_hi, mi_lo, mi_hi);
  for (long i = 0; i <= mo_hi - mo_lo; ++i) {
    const double mo = double(mo_lo + i);
    const Complex ph1 = std::exp(Complex(0.0, -mo * angles.phi1));
    for (long j = 0; j <= mi_hi - mi_lo; ++j) {
      const double mi = double(mi_lo + j);
      block(i, j) *= ph1 * std::exp(Complex(0.0, -mi * angles.phi2));
    }
  }
  return block;
}

Complex matrix_element(const Complex& sigma, long m_out, long m_in,
                       const group::GroupElement& g) {
  return rep_block(sigma, g, m_out, m_out, m_in, m_in)(0, 0);
}

Complex hermitian_form(const FourierVector& f1, const FourierVector& f2,
                       double sigma) {
  const Complex sp1 = Complex(sigma + 1.0, 0.0);
  if (is_nonpositive_integer(sp1))
    throw PoleError("hermitian_form: Gamma(sigma+1) pole, degenerate form");
  const Complex prefactor =
      std::exp((-sigma - 1.0) * std::log(2.0) - log_gamma(sp1)) / std::sqrt(kPi);
  const long lo = std::max(f1.m_min, f2.m_min);
  const long hi = std::min(f1.m_max(), f2.m_max());
  Complex s(0.0, 0.0);
  for (long m = lo; m <= hi; ++m) {
    const Complex c1 = f1.coeff(m), c2 = f2.coeff(m);
    if (c1 == Complex(0.0, 0.0) || c2 == Complex(0.0, 0.0)) continue;
    s += phi_m(Complex(sigma, 0.0), m) * std::conj(c1) * c2;
  }
  return prefactor * s;
}

SeriesResult fourier_reconstruct(const Complex& lambda, double psi, double tol) {
  Complex total = fourier_lambda(lambda, 0);
  double err = 0.0;
  long used = 1;
  for (int sgn : {+1, -1}) {
    const auto tail = numerics::accelerate_tail(
        [&](long k) {
          const long m = k + 1;
          return fourier_lambda(lambda, m) *
                 std::exp(Complex(0.0, sgn * double(m) * psi));
        },
        tol, 320);
    if (!tail.converged)
      throw NoConvergenceError("fourier_reconstruct: tail stalled at psi = " +
                               std::to_string(psi));
    total += tail.value;
    err += tail.err;
    used += tail.terms;
  }
  return {total, used, err};
}

}  // namespace so21::rep
