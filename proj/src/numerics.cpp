#include "so21/numerics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace so21::numerics {

namespace {

constexpr double kPoleTol = 1e-12;
constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

std::string fmt_z(const Complex& z) {
  std::ostringstream os;
  os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
  return os.str();
}

// log Gamma for Re z >= 0.5 by the Lanczos sum.
Complex log_gamma_lanczos(const Complex& z) {
  const Complex zm1 = z - 1.0;
  Complex acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (zm1 + double(i));
  const Complex t = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

bool is_nonpositive_integer(const Complex& z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

Complex log_gamma(const Complex& z) {
  if (is_nonpositive_integer(z, kPoleTol))
    throw PoleError("log_gamma: pole at nonpositive integer z = " + fmt_z(z));
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // Reflection: log G(z) = log pi - log sin(pi z) - log G(1-z).
  const Complex s = std::sin(kPi * z);
  return std::log(kPi) - std::log(s) - log_gamma_lanczos(1.0 - z);
}

Complex reciprocal_gamma(const Complex& z) {
  if (is_nonpositive_integer(z, kPoleTol)) return Complex(0.0, 0.0);
  if (z.real() >= 0.5) return std::exp(-log_gamma_lanczos(z));
  // 1/G(z) = sin(pi z) G(1-z) / pi, stable near the poles.
  const Complex s = std::sin(kPi * z);
  return s / kPi * std::exp(log_gamma_lanczos(1.0 - z));
}

Complex pochhammer(const Complex& a, long n) {
  if (n == 0) return Complex(1.0, 0.0);
  if (n > 0) {
    // Zero whenever the rising product crosses a nonpositive-integer a.
    if (is_nonpositive_integer(a, kPoleTol)) {
      const double a0 = std::round(a.real());
      if (a0 + double(n - 1) >= -0.5) return Complex(0.0, 0.0);
      // All factors negative integers: (a)_n = (-1)^n G(1-a)/G(1-a-n).
      const Complex v = std::exp(log_gamma(1.0 - a) - log_gamma(1.0 - a - double(n)));
      return (n % 2 == 0) ? v : -v;
    }
    if (n <= 64) {
      Complex p(1.0, 0.0);
      for (long k = 0; k < n; ++k) p *= a + double(k);
      return p;
    }
    return std::exp(log_gamma(a + double(n)) - log_gamma(a));
  }
  // (a)_{-k} = (-1)^k / (1-a)_k; vanishing factor a-j, j=1..k, is a pole.
  const long k = -n;
  const Complex b = 1.0 - a;
  if (std::abs(a.imag()) <= kPoleTol) {
    const double r = std::round(a.real());
    if (std::abs(a.real() - r) <= kPoleTol && r >= 1 && r <= double(k))
      throw PoleError("pochhammer: (a)_n with n = " + std::to_string(n) +
                      " has vanishing factor at a = " + fmt_z(a));
  }
  const Complex q = pochhammer(b, k);
  return (k % 2 == 0) ? 1.0 / q : -1.0 / q;
}

SeriesResult gauss_2f1(const Complex& a, const Complex& b, const Complex& c,
                       double x, const SeriesOptions& opts) {
  if (x < 0.0 || x >= 1.0)
    throw DomainError("gauss_2f1: x must lie in [0, 1), got " + std::to_string(x));
  if (is_nonpositive_integer(c, kPoleTol))
    throw PoleError("gauss_2f1: c is a nonpositive integer " + fmt_z(c));

  Complex sum(1.0, 0.0);
  Complex term(1.0, 0.0);
  int small_streak = 0;
  for (long n = 0; n < opts.max_terms; ++n) {
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * x;
    sum += term;
    if (std::abs(term) <= opts.tol * std::abs(sum)) {
      if (++small_streak >= 3) {
        const double r = x;  // asymptotic term ratio
        const double tail = std::abs(term) * r / (1.0 - r);
        return {sum, n + 2, tail};
      }
    } else {
      small_streak = 0;
    }
  }
  throw NoConvergenceError("gauss_2f1: term cap " + std::to_string(opts.max_terms) +
                           " reached at x = " + std::to_string(x));
}

Complex LevinU::next(const Complex& partial_sum, const Complex& omega, double beta) {
  const int n = n_;
  const double term = 1.0 / (beta + n);
  denom_.push_back(term / omega);
  numer_.push_back(partial_sum * denom_[n]);
  if (n > 0) {
    const double ratio = (beta + n - 1) * term;
    double f = term;
    for (int j = 1; j <= n; ++j) {
      const double w = (n - j + beta) * f;
      numer_[n - j] = numer_[n - j + 1] - w * numer_[n - j];
      denom_[n - j] = denom_[n - j + 1] - w * denom_[n - j];
      f *= ratio;
    }
  }
  ++n_;
  return numer_[0] / denom_[0];
}

TailResult accelerate_tail(const std::function<Complex(long)>& term,
                           double tol, int budget, double scale) {
  LevinU lev;
  Complex s(0.0, 0.0);
  Complex prev(0.0, 0.0);
  bool have_prev = false;
  Complex best(0.0, 0.0);
  double best_d = std::numeric_limits<double>::infinity();
  int zero_run = 0;
  long used = 0;
  for (long k = 0; k < budget; ++k) {
    const Complex a = term(k);
    ++used;
    s += a;
    if (a == Complex(0.0, 0.0)) {
      if (++zero_run >= 8) return {s, 0.0, used, true};
      continue;
    }
    zero_run = 0;
    const Complex val = lev.next(s, (1.0 + lev.steps()) * a);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) break;
    if (have_prev) {
      const double d = std::abs(val - prev);
      if (d < best_d) {
        best_d = d;
        best = val;
      }
      const double ref =
          scale > 0.0 ? std::max(scale, std::abs(val)) : 1.0 + std::abs(val);
      if (d <= tol * ref) return {val, d, used, true};
      // The transform degrades past its optimum in double precision.
      if (lev.steps() > 16 && d > 100.0 * best_d)
        return {best, best_d, used, true};
    }
    prev = val;
    have_prev = true;
  }
  if (best_d == std::numeric_limits<double>::infinity())
    return {s, std::abs(s), used, false};
  const double ref =
      scale > 0.0 ? std::max(scale, std::abs(best)) : 1.0 + std::abs(best);
  return {best, best_d, used, best_d < 1e-3 * ref};
}

namespace {

// One two-sided pass: direct center [-n0, n0] plus accelerated tails.
struct BilateralPass {
  Complex value;
  double tail_err;
  long terms;
  bool converged;
};

BilateralPass bilateral_pass(const std::function<Complex(long)>& term, long n0,
                             double tol, int budget) {
  Complex s(0.0, 0.0);
  long used = 0;
  for (long n = -n0; n <= n0; ++n) {
    s += term(n);
    ++used;
  }
  double err = 0.0;
  bool ok = true;
  const double scale = std::abs(s) + 1e-300;
  for (int sgn : {+1, -1}) {
    TailResult t = accelerate_tail(
        [&](long k) { return term(sgn * (n0 + 1 + k)); }, tol, budget, scale);
    s += t.value;
    err += t.err;
    used += t.terms;
    ok = ok && t.converged;
  }
  return {s, err, used, ok};
}

}  // namespace

SeriesResult bilateral_sum(const std::function<Complex(long)>& term,
                           double decay_exponent, const BilateralOptions& opts) {
  if (decay_exponent >= -1.0)
    throw NoConvergenceError(
        "bilateral_sum: decay exponent " + std::to_string(decay_exponent) +
        " >= -1, series diverges");
  if (opts.truncate_at > 0) {
    Complex s(0.0, 0.0);
    for (long n = -opts.truncate_at; n <= opts.truncate_at; ++n) s += term(n);
    const double edge =
        std::abs(term(opts.truncate_at)) + std::abs(term(-opts.truncate_at));
    // integral remainder of the |n|^p envelope
    const double err = edge * double(opts.truncate_at) / (-decay_exponent - 1.0);
    return {s, 2 * opts.truncate_at + 1, err};
  }
  const long n0 = opts.center_halfwidth;
  BilateralPass p1 = bilateral_pass(term, n0, opts.tol, opts.tail_budget);
  BilateralPass p2 = bilateral_pass(term, 2 * n0, opts.tol, opts.tail_budget);
  const double cross = std::abs(p1.value - p2.value);
  const double err = cross + p2.tail_err;
  const double scale = std::abs(p2.value) + 1e-300;
  if (!p2.converged && err > 1e-3 * scale)
    throw NoConvergenceError("bilateral_sum: tail acceleration stalled, residual " +
                             std::to_string(err));
  return {p2.value, p1.terms + p2.terms, err};
}

Complex circle_quadrature(const std::function<Complex(double)>& f, int n_points) {
  if (n_points < 8) throw DomainError("circle_quadrature: need n_points >= 8");
  Complex s(0.0, 0.0);
  const double h = 2.0 * kPi / n_points;
  for (int k = 0; k < n_points; ++k) s += f(h * (k + 0.5));
  return s / double(n_points);
}

Complex torus_quadrature_2d(const std::function<Complex(double, double)>& f,
                            int n_points) {
  if (n_points < 8) throw DomainError("torus_quadrature_2d: need n_points >= 8");
  Complex s(0.0, 0.0);
  const double h = 2.0 * kPi / n_points;
  for (int j = 0; j < n_points; ++j) {
    const double u = h * (j + 0.5);
    for (int k = 0; k < n_points; ++k) s += f(u, h * (k + 0.5));
  }
  return s / (double(n_points) * double(n_points));
}

}  // namespace so21::numerics
