#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

// Exact rational arithmetic for the holonomic part of the verification: the
// series F(x) = sum (-1)^n C(2n,n)^2 H_n x^n, its telescoping certificate,
// the fourth-order ODE it satisfies, and the closed-form expansion.

namespace gr4242::series {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Polynomial with rational coefficients; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs);
  static RationalPolynomial monomial(const BigRational& coeff, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  BigRational coeff(std::size_t i) const;
  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

  RationalPolynomial derivative() const;

  friend RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator-(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator*(const BigRational& s, const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial& p, const RationalPolynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Truncated power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
///
/// Binary operations truncate to the smaller order of their operands; the
/// derivative loses one order. No operation reads past the truncation order.
class RationalSeries {
 public:
  explicit RationalSeries(std::vector<BigRational> coeffs);
  static RationalSeries zero(std::size_t order);

  std::size_t truncation_order() const noexcept { return coeffs_.size() - 1; }
  const BigRational& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigRational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

  RationalSeries derivative() const;
  RationalSeries truncate(std::size_t order) const;

  friend RationalSeries operator+(const RationalSeries& s, const RationalSeries& t);
  friend RationalSeries operator-(const RationalSeries& s, const RationalSeries& t);
  friend RationalSeries operator*(const RationalSeries& s, const RationalSeries& t);
  friend RationalSeries operator*(const RationalPolynomial& p, const RationalSeries& s);
  friend RationalSeries operator*(const BigRational& c, const RationalSeries& s);

 private:
  std::vector<BigRational> coeffs_;
};

BigRational harmonic(unsigned n);
BigInt central_binomial(unsigned n);

/// Rising factorial (x)_n.
BigRational pochhammer(const BigRational& x, unsigned n);

/// Generalized binomial coefficient C(x, n) = x (x-1) ... (x-n+1) / n!.
BigRational binomial(const BigRational& x, unsigned n);

/// Coefficient of x^n in F: (-1)^n C(2n,n)^2 H_n.
BigRational f_coeff(unsigned n);

/// F truncated at order N, coefficients f_coeff(0..N).
RationalSeries f_series(std::size_t order);

/// Coefficient of x^{2n} in 𝐊(x)/π: ((1/2)_n / n!)^2 / 2.
BigRational k_taylor_coeff(unsigned n);

/// Exact expansion of the closed form
///   (1/(π sqrt(1+16x))) [ln(x/(1+16x)) 𝐊(sqrt(16x/(1+16x))) + π 𝐊(1/sqrt(1+16x))].
/// The logarithms cancel against the log expansion of 𝐊 near k = 1, leaving
///   -2 (1+16x)^{-1/2} sum_n 2 k_taylor_coeff(n) (H_{2n} - H_n) m^n,
/// m = 16x/(1+16x), which is a rational power series in x.
RationalSeries closed_form_series(std::size_t order);

// Telescoping certificate for L[f_n] = g_n - g_{n+1}, where f_n = f_coeff(n) x^n
// and L is the fourth-order operator of fourth_order_operator().

/// x^2 L[f_n] as a polynomial.
RationalPolynomial telescope_lhs_times_x2(unsigned n);

/// x^2 g_n = n ((n-1) n^2 + 4 (2n+1)^3 x) f_n + n (n+1)^3 f_{n+1}.
RationalPolynomial certificate_times_x2(unsigned n);

/// Exact check of x^2 L[f_n] == x^2 (g_n - g_{n+1}).
bool telescope_check(unsigned n);

/// (n+2) H_{n+2} - (2n+3) H_{n+1} + (n+1) H_n == 0.
bool harmonic_recurrence_check(unsigned n);

/// C(1/2, n) == (-1)^{n-1} C(2n,n) / (4^n (2n-1)), with C(1/2,n) from the
/// falling-factorial definition.
bool binomial_half_check(unsigned n);

/// a_l = ((1/2)_l)^2 / l!^2 through Pochhammer symbols.
BigRational stefan_a(unsigned l);

/// sum_{l<j} a_l/(j-l) == 4 a_j sum_{l<j} 1/(2l+1), j >= 1.
bool stefan_identity_check(unsigned j);

/// Coefficient polynomials p_4..p_0 of
///   x^2(16x+1)^2 y'''' + 5x(32x+1)(16x+1) y''' + 4(1568x^2+98x+1) y''
///   + 108(32x+1) y' + 144 y.
/// Index i multiplies the i-th derivative.
const std::vector<RationalPolynomial>& fourth_order_operator();

/// Applies the operator to y (order >= 4) and returns the first
/// y.truncation_order() - 3 coefficients of the result.
std::vector<BigRational> apply_fourth_order_operator(const RationalSeries& y);

/// First N coefficients of the operator applied to F's series; N >= 5.
std::vector<BigRational> ode_residual_F(std::size_t n_coeffs);

/// Partial sum of F with its tail bound.
struct SeriesSum {
  double value;
  double tail_bound;
  long terms;
};

inline constexpr double kSeriesMargin = 1e-4;

/// Sums F(x) for |x| < 1/16 - margin until the geometric tail bound, built on
/// the ratio bound 16(|x| + margin) once observed ratios sit below it, drops
/// under tol.
SeriesSum sum_F(double x, double tol, double margin = kSeriesMargin);
double eval_F(double x, double tol);

}  // namespace gr4242::series
