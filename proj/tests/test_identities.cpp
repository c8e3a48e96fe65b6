#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "gr4242/elliptic.hpp"
#include "gr4242/errors.hpp"
#include "gr4242/exact_series.hpp"
#include "gr4242/identities.hpp"
#include "gr4242/quadrature.hpp"
#include "gr4242/weierstrass.hpp"

using namespace gr4242;
using namespace gr4242::identities;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }
double quad_I(double a, double b) { return quadrature::integral_I_numeric(a, b, 1e-13).value; }
double quad_J(double c) { return quadrature::integral_J_numeric(c, 1e-13).value; }

}  // namespace

TEST_CASE("closed form of I") {
  // mpmath, 30 digits.
  CHECK(rel(I_closed(2.0, 1.0), -0.554743438050469824608) <= 1e-14);
  CHECK(rel(I_closed(2.0, 1.0), (elliptic::elliptic_k(0.5) * kLn2 - kPi / 2 * elliptic::elliptic_k(std::sqrt(0.75))) / 4) <= 1e-14);
  CHECK_THROWS_AS(I_closed(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(I_closed(1.0, 2.0), DomainError);
  CHECK_THROWS_AS(I_closed(1.0, 0.0), DomainError);
}

TEST_CASE("scaling of I under x -> 2x") {
  for (auto [a, b] : {std::pair{2.0, 1.0}, std::pair{3.0, 0.4}}) {
    const double lhs = quad_I(2 * a, 2 * b);
    const double rhs = quad_I(a, b) / 2 + kLn2 / (2 * a) * elliptic::elliptic_k(b / a);
    CHECK(rel(lhs, rhs) <= 1e-12);
    CHECK(rel(I_closed(2 * a, 2 * b), I_closed(a, b) / 2 + kLn2 / (2 * a) * elliptic::elliptic_k(b / a)) <= 1e-13);
  }
}

TEST_CASE("series route to I") {
  CHECK(rel(I_via_F(2.0, 1.0), I_closed(2.0, 1.0)) <= 1e-10);
  CHECK(rel(I_via_F(10.0, 1.0), quad_I(10.0, 1.0)) <= 1e-10);
  CHECK_THROWS_AS(I_via_F(1.4, 1.0), DomainError);
  CHECK_THROWS_AS(I_via_F(std::sqrt(2.0), 1.0), DomainError);
  CHECK_THROWS_AS(I_via_F(1.0, 2.0), DomainError);
}

TEST_CASE("routes to I agree on random admissible points") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> ua(0.5, 6.0), ur(0.02, 0.95);
  for (int i = 0; i < 40; ++i) {
    const double a = ua(rng), b = a * ur(rng);
    CAPTURE(a);
    CAPTURE(b);
    const double closed = I_closed(a, b);
    CHECK(rel(quad_I(a, b), closed) <= 1e-9);
    if (a > std::sqrt(2.0) * b * (1 + 1e-3)) CHECK(rel(I_via_F(a, b), closed) <= 1e-9);
  }
}

TEST_CASE("series route to J") {
  CHECK(std::abs(J_via_lemma31(1e-8) + kPi / 2 * kLn2) <= 1e-14);
  CHECK(std::abs(J_via_lemma31(0.5) - quad_J(0.5)) <= 1e-10);
  CHECK(std::abs(J_via_lemma31(0.6) - weierstrass::J_closed(0.6)) <= 1e-10);
  CHECK_THROWS_AS(J_via_lemma31(0.75), DomainError);
  CHECK_THROWS_AS(J_via_lemma31(0.0), DomainError);
}

TEST_CASE("four routes to J on random c") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uc(0.05, 0.7);
  for (int i = 0; i < 25; ++i) {
    const double c = uc(rng);
    CAPTURE(c);
    const double q = quad_J(c);
    CHECK(rel(weierstrass::J_closed(c), q) <= 1e-9);
    CHECK(rel(weierstrass::J_via_weierstrass(weierstrass::lattice_from_c(c)), q) <= 1e-9);
    CHECK(rel(J_via_lemma31(c), q) <= 1e-9);
  }
}

TEST_CASE("closed form of F") {
  CHECK(rel(F_closed(0.01), series::eval_F(0.01, 1e-14)) <= 1e-11);
  CHECK(rel(F_closed(0.05), series::eval_F(0.05, 1e-14)) <= 1e-10);
  // Beyond the radius of convergence, against the J route and mpmath.
  CHECK(rel(F_closed(0.25), F_via_J(0.25)) <= 1e-10);
  CHECK(rel(F_closed(0.25), -0.220378985033640940781874976821) <= 1e-13);
  CHECK_THROWS_AS(F_closed(1e-9), DomainError);
  CHECK_THROWS_AS(F_closed(-0.01), DomainError);
  CHECK_NOTHROW(F_closed(kFClosedFloor));
}

TEST_CASE("J route to F") {
  CHECK(rel(F_via_J(0.02), series::eval_F(0.02, 1e-14)) <= 1e-10);
  CHECK(rel(F_via_J(0.02), F_closed(0.02)) <= 1e-10);
  for (double x : {0.1, 0.5, 1.0, 5.0}) CHECK(rel(F_via_J(x), F_closed(x)) <= 1e-10);
  CHECK_THROWS_AS(F_via_J(0.0), DomainError);
}

TEST_CASE("J evaluated at 16x/(1+16x) instead of its square root is wrong") {
  const double x = 0.01;
  const double s = 1 + 16 * x;
  const double c = std::sqrt(16 * x / s);
  const double misprinted = -4 / (kPi * std::sqrt(s)) * (quad_J(16 * x / s) + kLn2 * elliptic::elliptic_k(c));
  CHECK(std::abs(misprinted - series::eval_F(x, 1e-14)) > 1e-3);
}

TEST_CASE("half-line entry") {
  CHECK(rel(entry_4242_1_closed(2.0, 1.0), quadrature::integral_4242_1_numeric(2.0, 1.0, 1e-13).value) <= 1e-10);
  CHECK(rel(entry_4242_1_closed(3.0, 2.0), quadrature::integral_4242_1_numeric(3.0, 2.0, 1e-13).value) <= 1e-10);
  CHECK(entry_4242_1_closed(2.0, 0.5) == 0.0);
  CHECK_THROWS_AS(entry_4242_1_closed(1.0, 1.0), DomainError);
}

TEST_CASE("log moments in closed form") {
  CHECK(rel(lemma51_closed(0), -kPi * kLn2) <= 1e-15);
  CHECK(rel(lemma51_closed(1), -kPi / 4 * (1 + 2 * kLn2)) <= 1e-15);
  CHECK(rel(lemma51_closed(5), -1.4185428722600500504) <= 1e-14);
}

TEST_CASE("symbolic substitutions") {
  CHECK(symbolic_final_step_check());
  CHECK(symbolic_weierstrass_step_check());
}
