#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gr4242/errors.hpp"
#include "gr4242/exact_series.hpp"

using namespace gr4242;
using namespace gr4242::series;

namespace {

BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

RationalSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  std::vector<BigRational> c;
  for (std::size_t i = 0; i <= order; ++i) c.push_back(q(num(rng), den(rng)));
  return RationalSeries(std::move(c));
}

RationalPolynomial monomial_term(unsigned n) { return RationalPolynomial::monomial(f_coeff(n), n); }

// The cofactor exactly as printed: g_n = (n/x^2)(((n-1)n^2 + 4(2n+1)^3 x) f_n + n(n+1)^3 f_{n+1}).
RationalPolynomial printed_certificate_times_x2(unsigned n) {
  const BigRational nn(n);
  const RationalPolynomial factor(
      {(nn - 1) * nn * nn, 4 * (2 * nn + 1) * (2 * nn + 1) * (2 * nn + 1)});
  return nn * (factor * monomial_term(n) + (nn * (nn + 1) * (nn + 1) * (nn + 1)) * monomial_term(n + 1));
}

}  // namespace

TEST_CASE("harmonic numbers and binomials") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(3) == q(11, 6));
  CHECK(harmonic(10) == q(7381, 2520));
  CHECK(central_binomial(0) == 1);
  CHECK(central_binomial(3) == 20);
  CHECK(central_binomial(10) == 184756);
  CHECK(pochhammer(q(1, 2), 3) == q(15, 8));
  CHECK(pochhammer(q(3), 0) == 1);
  CHECK(binomial(q(5), 2) == 10);
  CHECK(binomial(q(1, 2), 2) == q(-1, 8));
  for (unsigned n = 1; n <= 30; ++n) CHECK(binomial_half_check(n));
}

TEST_CASE("harmonic recurrence") {
  for (unsigned n = 0; n <= 100; ++n) CHECK(harmonic_recurrence_check(n));
}

TEST_CASE("printed coefficients of F") {
  CHECK(f_coeff(0) == 0);
  CHECK(f_coeff(1) == -4);
  CHECK(f_coeff(2) == 54);
  CHECK(f_coeff(3) == q(-2200, 3));
  CHECK(f_coeff(4) == q(30625, 3));
  const RationalSeries f = f_series(40);
  CHECK(f.truncation_order() == 40);
  for (unsigned n = 0; n <= 40; ++n) CHECK(f[n] == f_coeff(n));
}

TEST_CASE("Taylor coefficients of K") {
  CHECK(k_taylor_coeff(0) == q(1, 2));
  CHECK(k_taylor_coeff(1) == q(1, 8));
  CHECK(k_taylor_coeff(2) == q(9, 128));
  CHECK(k_taylor_coeff(3) == q(25, 512));
}

TEST_CASE("polynomials stay trimmed") {
  const RationalPolynomial p({q(1), q(2), q(0), q(0)});
  CHECK(p.degree() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.coeff(7) == 0);
  const RationalPolynomial sq = p * p;
  CHECK(sq == RationalPolynomial({q(1), q(4), q(4)}));
  CHECK(sq.derivative() == RationalPolynomial({q(4), q(8)}));
  CHECK((q(0) * p).is_zero());
  CHECK(RationalPolynomial::monomial(q(3), 4).degree() == 4);
  CHECK(RationalPolynomial::monomial(q(0), 4).is_zero());
}

TEST_CASE("series product matches a naive convolution") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t ns = 3 + trial % 5, nt = 2 + trial % 7;
    const RationalSeries s = random_series(rng, ns), t = random_series(rng, nt);
    const RationalSeries st = s * t;
    const std::size_t order = std::min(ns, nt);
    REQUIRE(st.truncation_order() == order);
    for (std::size_t k = 0; k <= order; ++k) {
      BigRational expected(0);
      for (std::size_t i = 0; i <= k; ++i) expected += s[i] * t[k - i];
      CHECK(st[k] == expected);
    }
    const RationalSeries sum = s + t;
    CHECK(sum.truncation_order() == order);
    for (std::size_t k = 0; k <= order; ++k) CHECK(sum[k] == s[k] + t[k]);
  }
}

TEST_CASE("series calculus and truncation") {
  const RationalSeries s({q(1), q(1), q(1, 2), q(1, 6), q(1, 24)});
  const RationalSeries d = s.derivative();
  CHECK(d.truncation_order() == 3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(d[k] == s[k]);
  CHECK(s.truncate(2).truncation_order() == 2);
  CHECK_THROWS_AS(s[5], std::out_of_range);
  const RationalPolynomial x = RationalPolynomial::monomial(q(1), 1);
  const RationalSeries xs = x * s;
  CHECK(xs.truncation_order() == 4);
  CHECK(xs[0] == 0);
  CHECK(xs[4] == q(1, 6));
}

TEST_CASE("telescoping certificate holds for n = 0..100") {
  const auto start = std::chrono::steady_clock::now();
  for (unsigned n = 0; n <= 100; ++n) {
    CAPTURE(n);
    CHECK(telescope_check(n));
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(2));
  CHECK(telescope_lhs_times_x2(0).is_zero());
  CHECK(certificate_times_x2(0).is_zero());
  // g_1 = 108x f_1 + 8 f_2 = -432x^2 + 432x^2.
  CHECK(certificate_times_x2(1).is_zero());
  CHECK_FALSE(certificate_times_x2(2).is_zero());
}

TEST_CASE("the certificate as printed does not telescope") {
  const RationalPolynomial residual =
      telescope_lhs_times_x2(1) - (printed_certificate_times_x2(1) - printed_certificate_times_x2(2));
  CHECK_FALSE(residual.is_zero());
  // x^2 (L[f_1] - (g_1 - g_2)) = -39600 x^3, i.e. L[f_1] - (g_1 - g_2) = -39600 x.
  CHECK(residual == RationalPolynomial::monomial(q(-39600), 3));
  CHECK(printed_certificate_times_x2(1) == certificate_times_x2(1));
}

TEST_CASE("fourth-order operator annihilates F") {
  CHECK(fourth_order_operator().size() == 5);
  CHECK(fourth_order_operator()[0] == RationalPolynomial({q(144)}));
  CHECK(fourth_order_operator()[4] == RationalPolynomial({q(0), q(0), q(1), q(32), q(256)}));
  for (std::size_t n : {5u, 10u, 200u}) {
    const auto r = ode_residual_F(n);
    REQUIRE(r.size() == n);
    for (const auto& c : r) CHECK(c == 0);
  }
  CHECK_THROWS_AS(ode_residual_F(4), DomainError);
}

TEST_CASE("perturbing one coefficient breaks the ODE") {
  RationalSeries f = f_series(14);
  f[5] += 1;
  const auto r = apply_fourth_order_operator(f);
  REQUIRE(r.size() >= 10);
  bool any_nonzero = false;
  for (std::size_t i = 0; i < 10; ++i) any_nonzero = any_nonzero || r[i] != 0;
  CHECK(any_nonzero);
}

TEST_CASE("closed-form expansion reproduces F") {
  const RationalSeries closed = closed_form_series(40);
  const RationalSeries f = f_series(40);
  for (unsigned n = 0; n <= 40; ++n) CHECK(closed[n] == f[n]);
}

TEST_CASE("a_l sum identity") {
  CHECK(stefan_a(0) == 1);
  CHECK(stefan_a(1) == q(1, 4));
  for (unsigned j = 1; j <= 60; ++j) CHECK(stefan_identity_check(j));
  for (unsigned l = 0; l <= 60; ++l) {
    const BigInt c = central_binomial(l);
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 16, l);
    BigRational form(c * c, p);
    form.canonicalize();
    CHECK(stefan_a(l) == form);
  }
  CHECK_THROWS_AS(stefan_identity_check(0), DomainError);
}

TEST_CASE("summing F") {
  CHECK(eval_F(0.0, 1e-14) == 0.0);
  // mpmath, 25 digits.
  CHECK(std::abs(eval_F(0.01, 1e-14) / -0.0352439245321375291149525 - 1) <= 1e-13);
  CHECK_THROWS_AS(eval_F(0.0625, 1e-12), DomainError);
  CHECK_THROWS_AS(eval_F(-0.0625, 1e-12), DomainError);
  CHECK_THROWS_AS(eval_F(0.01, 1e-16), DomainError);
  CHECK_NOTHROW(eval_F(-0.05, 1e-12));
}

TEST_CASE("the tail bound covers a longer summation") {
  for (double x : {1.0 / 32, 1.0 / 64, -1.0 / 32}) {
    CAPTURE(x);
    const SeriesSum s = sum_F(x, 1e-10);
    double brute = 0.0;
    for (unsigned n = 0; n < 200; ++n) brute += f_coeff(n).get_d() * std::pow(x, n);
    CHECK(std::abs(s.value - brute) <= s.tail_bound + 1e-15);
    CHECK(s.tail_bound <= 1e-10);
  }
}

TEST_CASE("term ratios approach 16|x|") {
  const unsigned n = 400;
  const double ratio = std::abs(BigRational(f_coeff(n + 1) / f_coeff(n)).get_d());
  CHECK(ratio == doctest::Approx(16.0).epsilon(0.01));
}
