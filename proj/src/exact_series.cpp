#include "gr4242/exact_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gr4242/errors.hpp"

namespace gr4242::series {

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::monomial(const BigRational& coeff, std::size_t degree) {
  std::vector<BigRational> c(degree + 1);
  c[degree] = coeff;
  return RationalPolynomial(std::move(c));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RationalPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q) {
  std::vector<BigRational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& p, const RationalPolynomial& q) {
  std::vector<BigRational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigRational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const BigRational& s, const RationalPolynomial& p) {
  std::vector<BigRational> c(p.coeffs_);
  for (auto& v : c) v *= s;
  return RationalPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// RationalSeries

RationalSeries::RationalSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("RationalSeries needs at least one coefficient");
}

RationalSeries RationalSeries::zero(std::size_t order) {
  return RationalSeries(std::vector<BigRational>(order + 1));
}

RationalSeries RationalSeries::derivative() const {
  if (truncation_order() == 0) throw DomainError("cannot differentiate an order-0 series");
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RationalSeries(std::move(d));
}

RationalSeries RationalSeries::truncate(std::size_t order) const {
  if (order > truncation_order()) throw DomainError("truncate cannot raise the truncation order");
  return RationalSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

RationalSeries operator+(const RationalSeries& s, const RationalSeries& t) {
  const std::size_t n = std::min(s.truncation_order(), t.truncation_order());
  std::vector<BigRational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = s.coeffs_[i] + t.coeffs_[i];
  return RationalSeries(std::move(c));
}

RationalSeries operator-(const RationalSeries& s, const RationalSeries& t) {
  const std::size_t n = std::min(s.truncation_order(), t.truncation_order());
  std::vector<BigRational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = s.coeffs_[i] - t.coeffs_[i];
  return RationalSeries(std::move(c));
}

RationalSeries operator*(const RationalSeries& s, const RationalSeries& t) {
  const std::size_t n = std::min(s.truncation_order(), t.truncation_order());
  std::vector<BigRational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (s.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += s.coeffs_[i] * t.coeffs_[j];
  }
  return RationalSeries(std::move(c));
}

RationalSeries operator*(const RationalPolynomial& p, const RationalSeries& s) {
  const std::size_t n = s.truncation_order();
  std::vector<BigRational> c(n + 1);
  const auto& pc = p.coeffs();
  for (std::size_t i = 0; i < pc.size() && i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += pc[i] * s.coeffs_[j];
  }
  return RationalSeries(std::move(c));
}

RationalSeries operator*(const BigRational& c, const RationalSeries& s) {
  std::vector<BigRational> out(s.coeffs_);
  for (auto& v : out) v *= c;
  return RationalSeries(std::move(out));
}

// ---------------------------------------------------------------------------
// Sequences

BigRational harmonic(unsigned n) {
  BigRational h(0);
  for (unsigned j = 1; j <= n; ++j) h += BigRational(1, j);
  return h;
}

BigInt central_binomial(unsigned n) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), 2UL * n, n);
  return r;
}

BigRational pochhammer(const BigRational& x, unsigned n) {
  BigRational r(1);
  for (unsigned i = 0; i < n; ++i) r *= x + i;
  return r;
}

BigRational binomial(const BigRational& x, unsigned n) {
  BigRational r(1);
  for (unsigned i = 0; i < n; ++i) {
    r *= x - i;
    r /= i + 1;
  }
  return r;
}

BigRational f_coeff(unsigned n) {
  const BigInt c = central_binomial(n);
  BigRational r(c * c);
  r *= harmonic(n);
  return (n % 2 == 0) ? r : BigRational(-r);
}

RationalSeries f_series(std::size_t order) {
  // Running H_n and C(2n,n) avoid the quadratic cost of calling f_coeff per n.
  std::vector<BigRational> c(order + 1);
  BigRational h(0);
  BigInt binom(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) {
      h += BigRational(1, static_cast<unsigned long>(n));
      binom = binom * static_cast<unsigned long>(2 * (2 * n - 1)) / static_cast<unsigned long>(n);
    }
    BigRational v(binom * binom);
    v *= h;
    c[n] = (n % 2 == 0) ? v : BigRational(-v);
  }
  return RationalSeries(std::move(c));
}

BigRational k_taylor_coeff(unsigned n) {
  BigRational a = pochhammer(BigRational(1, 2), n);
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  a /= BigRational(fact);
  return a * a / 2;
}

RationalSeries closed_form_series(std::size_t order) {
  // m = 16x/(1+16x) = sum_{k>=1} (-1)^{k-1} 16^k x^k
  std::vector<BigRational> m(order + 1);
  // (1+16x)^{-1/2} = sum_k C(2k,k) (-4)^k x^k
  std::vector<BigRational> inv_sqrt(order + 1);
  BigInt p16(1);
  BigInt m4(1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) {
      p16 *= 16;
      m4 *= -4;
      m[k] = (k % 2 == 1) ? BigRational(p16) : BigRational(-p16);
    }
    inv_sqrt[k] = BigRational(central_binomial(static_cast<unsigned>(k)) * m4);
  }
  const RationalSeries m_series(std::move(m));
  RationalSeries m_power = RationalSeries::zero(order);
  m_power[0] = 1;
  RationalSeries sum = RationalSeries::zero(order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) m_power = m_power * m_series;
    const auto un = static_cast<unsigned>(n);
    const BigRational weight = 2 * k_taylor_coeff(un) * (harmonic(2 * un) - harmonic(un));
    if (weight != 0) sum = sum + weight * m_power;
  }
  return BigRational(-2) * (RationalSeries(std::move(inv_sqrt)) * sum);
}

// ---------------------------------------------------------------------------
// Certificate and operator

const std::vector<RationalPolynomial>& fourth_order_operator() {
  static const std::vector<RationalPolynomial> ops = [] {
    using P = RationalPolynomial;
    auto poly = [](std::initializer_list<long> c) {
      std::vector<BigRational> v;
      for (long x : c) v.emplace_back(x);
      return P(std::move(v));
    };
    const P x = poly({0, 1});
    const P s16 = poly({1, 16});
    const P s32 = poly({1, 32});
    return std::vector<P>{
        poly({144}),                          // y
        BigRational(108) * s32,               // y'
        BigRational(4) * poly({1, 98, 1568}),  // y''
        BigRational(5) * (x * s32 * s16),     // y'''
        x * x * s16 * s16,                    // y''''
    };
  }();
  return ops;
}

namespace {

RationalPolynomial f_monomial(unsigned n) { return RationalPolynomial::monomial(f_coeff(n), n); }

}  // namespace

RationalPolynomial telescope_lhs_times_x2(unsigned n) {
  const auto& ops = fourth_order_operator();
  RationalPolynomial derivative = f_monomial(n);
  RationalPolynomial lhs;
  for (const auto& coeff : ops) {
    lhs = lhs + coeff * derivative;
    derivative = derivative.derivative();
  }
  return RationalPolynomial::monomial(BigRational(1), 2) * lhs;
}

RationalPolynomial certificate_times_x2(unsigned n) {
  const BigRational nn(n);
  const BigRational n1(n + 1);
  const BigRational two_n1(2 * n + 1);
  const RationalPolynomial factor(
      std::vector<BigRational>{nn * (nn - 1) * nn * nn, 4 * nn * two_n1 * two_n1 * two_n1});
  return factor * f_monomial(n) + (nn * n1 * n1 * n1) * f_monomial(n + 1);
}

bool telescope_check(unsigned n) {
  return telescope_lhs_times_x2(n) == certificate_times_x2(n) - certificate_times_x2(n + 1);
}

bool harmonic_recurrence_check(unsigned n) {
  const BigRational value = (n + 2) * harmonic(n + 2) - (2 * n + 3) * harmonic(n + 1) + (n + 1) * harmonic(n);
  return value == 0;
}

bool binomial_half_check(unsigned n) {
  const BigRational lhs = binomial(BigRational(1, 2), n);
  BigInt four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
  BigRational rhs(central_binomial(n), four_n);
  rhs.canonicalize();
  rhs /= BigRational(2 * static_cast<long>(n) - 1);
  if (n % 2 == 0) rhs = -rhs;  // (-1)^{n-1}
  return lhs == rhs;
}

BigRational stefan_a(unsigned l) {
  BigRational p = pochhammer(BigRational(1, 2), l);
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), l);
  p /= BigRational(fact);
  return p * p;
}

bool stefan_identity_check(unsigned j) {
  if (j == 0) throw DomainError("stefan_identity_check requires j >= 1");
  BigRational lhs(0);
  BigRational odd_sum(0);
  for (unsigned l = 0; l < j; ++l) {
    lhs += stefan_a(l) / BigRational(j - l);
    odd_sum += BigRational(1, 2 * l + 1);
  }
  return lhs == 4 * stefan_a(j) * odd_sum;
}

std::vector<BigRational> apply_fourth_order_operator(const RationalSeries& y) {
  if (y.truncation_order() < 4) throw DomainError("operator needs a series of order >= 4");
  const auto& ops = fourth_order_operator();
  const std::size_t out_order = y.truncation_order() - 4;
  RationalSeries derivative = y;
  RationalSeries total = RationalSeries::zero(out_order);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    total = total + ops[i] * derivative;
    if (i + 1 < ops.size()) derivative = derivative.derivative();
  }
  return total.coeffs();
}

std::vector<BigRational> ode_residual_F(std::size_t n_coeffs) {
  if (n_coeffs < 5) throw DomainError("ode_residual_F requires N >= 5");
  std::vector<BigRational> full = apply_fourth_order_operator(f_series(n_coeffs + 4));
  full.resize(n_coeffs);
  return full;
}

// ---------------------------------------------------------------------------
// Floating-point summation of F

SeriesSum sum_F(double x, double tol, double margin) {
  if (!(std::abs(x) < 1.0 / 16.0 - margin)) {
    throw DomainError("eval_F requires |x| < 1/16 - margin (series diverges at |x| = 1/16)");
  }
  if (!(tol >= 1e-14)) throw DomainError("eval_F requires tol >= 1e-14");
  if (x == 0.0) return {0.0, 0.0, 1};
  const double ratio_bound = 16.0 * (std::abs(x) + margin);
  // term_n = b_n H_n with b_n = (-1)^n C(2n,n)^2 x^n.
  double b = 1.0;
  double h = 0.0;
  double sum = 0.0;
  double term = 0.0;
  constexpr long kMaxTerms = 50'000'000;
  for (long n = 0; n < kMaxTerms; ++n) {
    sum += term;
    const double ratio_binom = 2.0 * (2.0 * n + 1.0) / (n + 1.0);
    b *= -x * ratio_binom * ratio_binom;
    h += 1.0 / (n + 1.0);
    const double next = b * h;
    if (n >= 2) {
      const double observed = std::abs(next / term);
      const double tail = std::abs(next) / (1.0 - ratio_bound);
      if (observed <= ratio_bound && tail <= tol) return {sum, tail, n + 1};
    }
    term = next;
  }
  throw ConvergenceError("eval_F: series did not reach tolerance", sum, INFINITY);
}

double eval_F(double x, double tol) { return sum_F(x, tol).value; }

}  // namespace gr4242::series
