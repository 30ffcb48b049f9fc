#include "so21/wigner3.hpp"

#include <cmath>
#include <unordered_map>

#include "so21/rep.hpp"

namespace so21::wigner {

namespace {

constexpr double kPi = 3.14159265358979323846;

using numerics::is_nonpositive_integer;
using numerics::log_gamma;
using numerics::pochhammer;
using numerics::reciprocal_gamma;

// x^b for x >= 0 with the 0^b limit handled explicitly.
Complex real_pow(double x, const Complex& b) {
  if (x <= 0.0) {
    if (b.real() > 0.0) return Complex(0.0, 0.0);
    if (b == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    throw SingularPointError("kernel_k3: coincident angles with Re(beta) <= 0");
  }
  return std::exp(b * std::log(x));
}

// (a)_n / (b)_n, stable for any integer n (log-space beyond |n| = 64).
Complex poch_ratio(const Complex& a, const Complex& b, long n) {
  if (std::labs(n) <= 64) return pochhammer(a, n) / pochhammer(b, n);
  if (n > 0)
    return std::exp(log_gamma(a + double(n)) - log_gamma(a) -
                    log_gamma(b + double(n)) + log_gamma(b));
  const long k = -n;
  // (a)_{-k} = (-1)^k/(1-a)_k; the sign factors cancel in the ratio.
  return std::exp(log_gamma(1.0 - b + double(k)) - log_gamma(1.0 - b) -
                  log_gamma(1.0 - a + double(k)) + log_gamma(1.0 - a));
}

double sum_sigma_re(const WignerQuery& q) {
  return q.sigmas[0].real() + q.sigmas[1].real() + q.sigmas[2].real();
}

long sum_m(const WignerQuery& q) { return q.ms[0] + q.ms[1] + q.ms[2]; }

}  // namespace

BetaTriple betas(const Complex& s1, const Complex& s2, const Complex& s3) {
  return {(s1 - s2 - s3 - 1.0) / 2.0, (s2 - s3 - s1 - 1.0) / 2.0,
          (s3 - s2 - s1 - 1.0) / 2.0};
}

Complex kernel_k3(const BetaTriple& bt, double phi1, double phi2, double phi3) {
  const Complex f12 = real_pow(1.0 - std::cos(phi1 - phi2), bt.b3) *
                      reciprocal_gamma(bt.b3 + 0.5);
  const Complex f23 = real_pow(1.0 - std::cos(phi2 - phi3), bt.b1) *
                      reciprocal_gamma(bt.b1 + 0.5);
  const Complex f31 = real_pow(1.0 - std::cos(phi3 - phi1), bt.b2) *
                      reciprocal_gamma(bt.b2 + 0.5);
  return f12 * f23 * f31;
}

Complex series_factor(const Complex& beta, long k) {
  const long ka = std::labs(k);  // even in k
  if (is_nonpositive_integer(-beta)) {
    const long b0 = long(std::llround(beta.real()));
    if (ka > b0) return Complex(0.0, 0.0);
    return pochhammer(-beta, ka) * reciprocal_gamma(double(ka) + beta + 1.0);
  }
  if (ka <= 64)
    return pochhammer(-beta, ka) * reciprocal_gamma(double(ka) + beta + 1.0);
  return std::exp(log_gamma(double(ka) - beta) - log_gamma(-beta) -
                  log_gamma(double(ka) + beta + 1.0));
}

Complex anchor_constant(const BetaTriple& bt) {
  return std::exp(log_gamma(bt.b1 + bt.b2 + 1.0) + log_gamma(bt.b1 + bt.b3 + 1.0) +
                  log_gamma(bt.b2 + bt.b3 + 1.0) - log_gamma(bt.sum() + 1.0));
}

SeriesResult wigner_coefficient(const WignerQuery& q, const BilateralOptions& opts) {
  if (sum_m(q) != 0) return {Complex(0.0, 0.0), 0, 0.0};
  const double decay = sum_sigma_re(q);
  if (decay >= -1.0)
    throw NoConvergenceError("wigner_coefficient: Re(s1+s2+s3) = " +
                             std::to_string(decay) + " fails the gate < -1");
  const BetaTriple bt = betas(q.sigmas[0], q.sigmas[1], q.sigmas[2]);
  const Complex K = anchor_constant(bt);
  const long m1 = q.ms[0], m3 = q.ms[2];
  const auto term = [&](long n) {
    return series_factor(bt.b3, n - m1) * series_factor(bt.b1, n + m3) *
           series_factor(bt.b2, n);
  };
  SeriesResult s = numerics::bilateral_sum(term, decay, opts);
  return {K * s.value, s.terms_used, std::abs(K) * s.err_estimate};
}

SeriesResult wigner_coefficient_h3(const WignerQuery& q,
                                   const BilateralOptions& opts) {
  if (sum_m(q) != 0) return {Complex(0.0, 0.0), 0, 0.0};
  const double decay = sum_sigma_re(q);
  if (decay >= -1.0)
    throw NoConvergenceError("wigner_coefficient_h3: convergence gate fails");
  const BetaTriple bt = betas(q.sigmas[0], q.sigmas[1], q.sigmas[2]);
  const Complex K = anchor_constant(bt);
  const long m1 = q.ms[0], m3 = q.ms[2];
  const std::array<Complex, 3> a = {-bt.b3 - double(m1), -bt.b1 + double(m3),
                                    -bt.b2};
  const std::array<Complex, 3> b = {bt.b3 + 1.0 - double(m1),
                                    bt.b1 + 1.0 + double(m3), bt.b2 + 1.0};
  const auto term = [&](long n) {
    return poch_ratio(a[0], b[0], n) * poch_ratio(a[1], b[1], n) *
           poch_ratio(a[2], b[2], n);
  };
  SeriesResult s = numerics::bilateral_sum(term, decay, opts);
  Complex pre = pochhammer(-bt.b1, m3) / pochhammer(1.0 + bt.b3, m1) *
                std::exp(-log_gamma(bt.b2 + 1.0) - log_gamma(-double(m1) + bt.b3 + 1.0) -
                         log_gamma(double(m3) + bt.b1 + 1.0));
  if (m1 % 2 != 0) pre = -pre;
  return {K * pre * s.value, s.terms_used, std::abs(K * pre) * s.err_estimate};
}

Complex wigner_oracle(const WignerQuery& q, int n_points) {
  const BetaTriple bt = betas(q.sigmas[0], q.sigmas[1], q.sigmas[2]);
  for (const Complex& b : {bt.b1, bt.b2, bt.b3})
    if (b.real() <= -0.5)
      throw DomainError("wigner_oracle: Re(beta) <= -1/2, kernel not integrable");
  if (sum_m(q) != 0) return Complex(0.0, 0.0);  // third-angle delta
  const Complex sig_sum = q.sigmas[0] + q.sigmas[1] + q.sigmas[2];
  const Complex c = std::exp(0.5 * (sig_sum + 3.0) * std::log(2.0) +
                             1.5 * std::log(kPi)) *
                    anchor_constant(bt);
  const Complex rg1 = reciprocal_gamma(bt.b1 + 0.5);
  const Complex rg2 = reciprocal_gamma(bt.b2 + 0.5);
  const Complex rg3 = reciprocal_gamma(bt.b3 + 0.5);
  const double m1 = double(q.ms[0]), m2 = double(q.ms[1]);
  // Quarter-step stagger of the second angle keeps the coincident pair
  // u = v off the grid; the torus mean is translation invariant.
  const double shift = 0.5 * kPi / n_points;
  const Complex mean = numerics::torus_quadrature_2d(
      [&](double u, double v0) {
        const double v = v0 + shift;
        return real_pow(1.0 - std::cos(u - v), bt.b3) * rg3 *
               real_pow(1.0 - std::cos(v), bt.b1) * rg1 *
               real_pow(1.0 - std::cos(u), bt.b2) * rg2 *
               std::exp(Complex(0.0, m1 * u + m2 * v));
      },
      n_points);
  return c * mean;
}

double covariance_residual(const WignerQuery& q, const group::GroupElement& g,
                           int M) {
  long m_abs = 0;
  for (long m : q.ms) m_abs = std::max(m_abs, std::labs(m));
  if (M < m_abs + 5)
    throw DomainError("covariance_residual: need M >= max|m_i| + 5");

  const Complex lhs = wigner_coefficient(q).value;

  std::array<Eigen::VectorXcd, 3> t;
  for (int i = 0; i < 3; ++i)
    t[i] = rep::rep_block(q.sigmas[i], g, -M, M, q.ms[i], q.ms[i]).col(0);

  std::unordered_map<long, Complex> cache;
  const auto W = [&](long a, long c) {
    const long key = (a + M) * (2 * M + 1) + (c + M);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    WignerQuery qq{q.sigmas, {a, -a - c, c}};
    const Complex v = wigner_coefficient(qq).value;
    cache.emplace(key, v);
    return v;
  };

  Complex rhs(0.0, 0.0);
  for (long a = -M; a <= M; ++a) {
    for (long b = -M; b <= M; ++b) {
      const long c = -a - b;
      if (std::labs(c) > M) continue;
      rhs += W(a, c) * t[0](a + M) * t[1](b + M) * t[2](c + M);
    }
  }
  return std::abs(lhs - rhs);
}

}  // namespace so21::wigner
