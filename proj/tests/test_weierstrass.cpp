#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gr4242/elliptic.hpp"
#include "gr4242/errors.hpp"
#include "gr4242/quadrature.hpp"
#include "gr4242/weierstrass.hpp"

using namespace gr4242;
using namespace gr4242::weierstrass;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> c_grid() {
  std::vector<double> g;
  for (int i = 0; i < 25; ++i) g.push_back(0.05 + 0.9 * i / 24.0);
  return g;
}

}  // namespace

TEST_CASE("lattice invariants at c = 0.5") {
  const EllipticData L = lattice_from_c(0.5);
  CHECK(L.e1 == doctest::Approx(7.0 / 12).epsilon(1e-15));
  CHECK(L.e2 == doctest::Approx(-1.0 / 6).epsilon(1e-15));
  CHECK(L.e3 == doctest::Approx(-5.0 / 12).epsilon(1e-15));
  CHECK(L.g2 * L.g2 * L.g2 - 27 * L.g3 * L.g3 == doctest::Approx(9.0 / 16).epsilon(1e-14));
  CHECK(L.omega1 == doctest::Approx(elliptic::elliptic_k(0.5)).epsilon(1e-15));
  CHECK(L.omega2.real() == 0.0);
  CHECK(L.omega2.imag() == doctest::Approx(elliptic::elliptic_k(std::sqrt(0.75))).epsilon(1e-14));
  CHECK(L.nome_q > 0.0);
  CHECK(L.nome_q < 1.0);
}

TEST_CASE("g3 vanishes at c = 1/sqrt(2)") {
  CHECK(std::abs(lattice_from_c(1.0 / std::sqrt(2.0)).g3) <= 1e-15);
}

TEST_CASE("lattice invariants over the grid") {
  for (double c : c_grid()) {
    CAPTURE(c);
    const EllipticData L = lattice_from_c(c);
    CHECK(L.e1 > L.e2);
    CHECK(L.e2 > L.e3);
    CHECK(std::abs(L.e1 + L.e2 + L.e3) <= 1e-13);
    CHECK(std::abs(L.e1 - L.e3 - 1) <= 1e-13);
    CHECK(std::abs(L.e2 - L.e3 - c * c) <= 1e-13);
    const double disc = L.g2 * L.g2 * L.g2 - 27 * L.g3 * L.g3;
    const double expected = 16 * std::pow(c, 4) * std::pow(c + 1, 2) * std::pow(c - 1, 2);
    CHECK(std::abs(disc - expected) <= 1e-13 * std::max(1.0, expected));
    CHECK(legendre_residual(L) < 1e-12);
  }
}

TEST_CASE("eta1 from theta derivatives matches the second-kind route") {
  for (double c : c_grid()) {
    CAPTURE(c);
    const EllipticData L = lattice_from_c(c);
    CHECK(std::abs(L.eta1 - (elliptic::elliptic_e(c) - L.e1 * L.omega1)) <= 1e-12);
  }
}

TEST_CASE("lattice domain") {
  CHECK_THROWS_AS(lattice_from_c(0.0), DomainError);
  CHECK_THROWS_AS(lattice_from_c(1.0), DomainError);
  CHECK_THROWS_AS(lattice_from_c(-0.3), DomainError);
  CHECK_THROWS_AS(theta1(Complex{0.1, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(theta1(Complex{0.1, 0.0}, 0.0), DomainError);
}

TEST_CASE("theta1") {
  CHECK(std::abs(theta1(Complex{0.0, 0.0}, 0.3)) == 0.0);
  for (const Complex z : {Complex{0.3, 0.1}, Complex{-1.2, 0.7}, Complex{2.0, -1.5}}) {
    CHECK(std::abs(theta1(-z, 0.4) + theta1(z, 0.4)) <= 1e-15 * std::abs(theta1(z, 0.4)));
  }
  double brute = 0.0;
  for (int n = 0; n < 40; ++n) {
    brute += (n % 2 ? -2.0 : 2.0) * std::pow(0.1, (n + 0.5) * (n + 0.5)) * std::sin((2 * n + 1) * kPi / 2);
  }
  const Complex t = theta1(Complex{kPi / 2, 0.0}, 0.1);
  CHECK(t.real() > 0.0);
  CHECK(std::abs(t.imag()) <= 1e-17);
  CHECK(t.real() == doctest::Approx(brute).epsilon(1e-15));
  // Term-wise derivatives against central differences.
  const double q = 0.2, h = 1e-4;
  const double fd = (theta1(Complex{h, 0}, q).real() - theta1(Complex{-h, 0}, q).real()) / (2 * h);
  CHECK(theta1_prime0(q) == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("sigma normalization, parity and quasi-periodicity") {
  for (double c : {0.2, 0.5, 0.9}) {
    CAPTURE(c);
    const EllipticData L = lattice_from_c(c);
    const Complex z{1e-4, 0.0};
    CHECK(std::abs(sigma(z, L) / z - 1.0) <= 1e-6);
    const Complex w{0.3, -0.2};
    CHECK(std::abs(sigma(-w, L) + sigma(w, L)) <= 1e-15);
    CHECK(quasi_period_residual(L, 0.3 * L.omega1, 1) <= 1e-9);
  }
  for (double c : c_grid()) {
    CAPTURE(c);
    const EllipticData L = lattice_from_c(c);
    for (const Complex z : {Complex{0.3 * L.omega1, 0}, 0.1 * L.omega1 + 0.2 * L.omega2,
                            -0.4 * L.omega1 + 0.3 * L.omega2, 0.25 * L.omega2, 0.7 * L.omega1 - 0.45 * L.omega2}) {
      // The second period exercises η2, which only Legendre's relation supplies.
      CHECK(quasi_period_residual(L, z, 1) <= 1e-8);
      CHECK(quasi_period_residual(L, z, 2) <= 1e-8);
    }
  }
  CHECK_THROWS_AS(quasi_period_residual(lattice_from_c(0.5), Complex{0.1, 0}, 3), DomainError);
}

TEST_CASE("half-period identities") {
  CHECK(lemma42_residual(lattice_from_c(0.4)) < 1e-9);
  CHECK(lemma42_residual(lattice_from_c(0.7)) < 1e-9);
  const EllipticData L = lattice_from_c(0.55);
  CHECK(std::abs(lemma42_residual(L, 1e-12) - lemma42_residual(L, 1e-13)) <= 1e-9);
  for (double c : {0.5, 0.2}) {
    const Lemma43Residuals r = lemma43_residual(lattice_from_c(c));
    CHECK(r.square < 1e-9);
    CHECK(r.log < 1e-9);
  }
  for (double c : c_grid()) {
    CAPTURE(c);
    const EllipticData Lc = lattice_from_c(c);
    CHECK(lemma42_residual(Lc) <= 1e-8);
    CHECK(lemma43_residual(Lc).max() <= 1e-8);
    // ℘(ω1+ω2) - ℘(ω2) = e2 - e3 = c^2.
    CHECK(half_period_sum_residual(Lc) <= 1e-8);
  }
}

TEST_CASE("sigma at the imaginary half-period lies on the positive imaginary axis") {
  for (double c : c_grid()) {
    const Complex s = sigma(lattice_from_c(c).omega2, lattice_from_c(c));
    CHECK(std::abs(std::arg(s) - kPi / 2) <= 1e-12);
  }
}

TEST_CASE("J through sigma") {
  const double quad05 = quadrature::integral_J_numeric(0.5, 1e-13).value;
  CHECK(std::abs(J_via_weierstrass(lattice_from_c(0.5)) - quad05) <= 1e-9);
  CHECK(std::abs(J_via_weierstrass(lattice_from_c(0.3)) - J_closed(0.3)) <= 1e-10);
  for (double c : c_grid()) {
    CHECK(J_via_weierstrass_parts(lattice_from_c(c)).imag_residue < 1e-10);
  }
}

TEST_CASE("closed form of J") {
  CHECK(std::abs(J_closed(0.5) - quadrature::integral_J_numeric(0.5, 1e-13).value) <= 1e-10);
  CHECK(std::abs(J_closed(0.9) - quadrature::integral_J_numeric(0.9, 1e-13).value) <= 1e-9);
  CHECK(std::abs(J_closed(1e-3) + kPi / 2 * std::numbers::ln2) <= 1e-6);
  CHECK(std::abs(J_closed(1e-3) - quadrature::integral_J_numeric(1e-6, 1e-13).value) <= 1e-6);
  CHECK_THROWS_AS(J_closed(0.0), DomainError);
  CHECK_THROWS_AS(J_closed(1.0), DomainError);
}
