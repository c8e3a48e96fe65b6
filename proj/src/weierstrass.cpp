#include "gr4242/weierstrass.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gr4242/elliptic.hpp"
#include "gr4242/errors.hpp"

namespace gr4242::weierstrass {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr int kMaxThetaTerms = 100000;

void require_nome(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("theta series requires 0 < q < 1");
}

// Σ (-1)^n q^{(n+1/2)^2} (2n+1)^power, the θ1 derivative sums at 0.
double odd_power_sum(double q, int power) {
  require_nome(q);
  const double log_q = std::log(q);
  double sum = 0.0;
  for (int n = 0; n < kMaxThetaTerms; ++n) {
    const double m = n + 0.5;
    const double term = std::exp(m * m * log_q) * std::pow(2.0 * n + 1.0, power);
    sum += (n % 2 == 0) ? term : -term;
    if (term <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

Complex theta1(Complex z, double q, double tol) {
  require_nome(q);
  const double log_q = std::log(q);
  // Terms grow like exp((2n+1)|Im z|) before the Gaussian factor wins.
  const double peak = std::abs(z.imag()) / -log_q;
  Complex sum{0.0, 0.0};
  for (int n = 0; n < kMaxThetaTerms; ++n) {
    const double m = n + 0.5;
    const Complex term = std::exp(m * m * log_q) * std::sin((2.0 * n + 1.0) * z);
    sum += (n % 2 == 0) ? term : -term;
    if (m > peak && std::abs(term) <= tol * std::abs(sum)) break;
  }
  return 2.0 * sum;
}

double theta1_prime0(double q) { return 2.0 * odd_power_sum(q, 1); }

double theta1_triple_prime0(double q) { return -2.0 * odd_power_sum(q, 3); }

EllipticData lattice_from_c(double c) {
  if (!(c > 0.0 && c < 1.0)) {
    throw DomainError("lattice_from_c requires 0 < c < 1, got " + std::to_string(c));
  }
  const double c2 = c * c;
  EllipticData L{};
  L.c = c;
  L.g2 = 4.0 / 3.0 * (c2 * c2 - c2 + 1.0);
  L.g3 = 4.0 / 27.0 * (1.0 + c2) * (1.0 - 2.0 * c2) * (2.0 - c2);
  L.e1 = (2.0 - c2) / 3.0;
  L.e2 = (2.0 * c2 - 1.0) / 3.0;
  L.e3 = -(c2 + 1.0) / 3.0;
  // e1 - e3 = 1, so the half-periods are 𝐊(c) and i 𝐊(c') directly.
  L.omega1 = elliptic::elliptic_k(elliptic::Modulus(c));
  const double k_comp = elliptic::elliptic_k(elliptic::Modulus::from_complement(c));
  L.omega2 = Complex{0.0, k_comp};
  L.omega3 = L.omega1 + L.omega2;
  L.nome_q = std::exp(-kPi * k_comp / L.omega1);
  if (!(L.nome_q <= kMaxNome)) {
    throw DomainError("lattice_from_c: nome exceeds 0.9 (c too close to 1)");
  }
  L.theta1_prime0 = theta1_prime0(L.nome_q);
  L.eta1 = -kPi * kPi * theta1_triple_prime0(L.nome_q) / (12.0 * L.omega1 * L.theta1_prime0);
  L.eta2 = (L.eta1 * L.omega2 - kI * (kPi / 2.0)) / L.omega1;
  return L;
}

Complex sigma(Complex z, const EllipticData& L, double tol) {
  const double w1 = L.omega1;
  const Complex v = kPi * z / (2.0 * w1);
  return (2.0 * w1 / kPi) * std::exp(L.eta1 * z * z / (2.0 * w1)) * theta1(v, L.nome_q, tol) /
         L.theta1_prime0;
}

double legendre_residual(const EllipticData& L) {
  return std::abs(L.eta1 * L.omega2 - L.eta2 * L.omega1 - kI * (kPi / 2.0));
}

double quasi_period_residual(const EllipticData& L, Complex z, int period) {
  if (period != 1 && period != 2) throw DomainError("quasi_period_residual: period must be 1 or 2");
  const Complex omega = (period == 1) ? Complex{L.omega1, 0.0} : L.omega2;
  const Complex eta = (period == 1) ? Complex{L.eta1, 0.0} : L.eta2;
  const Complex lhs = sigma(z + 2.0 * omega, L);
  const Complex rhs = -std::exp(2.0 * eta * (z + omega)) * sigma(z, L);
  return std::abs(lhs - rhs) / std::abs(rhs);
}

double lemma42_residual(const EllipticData& L, double tol) {
  const Complex s12 = sigma(L.omega1 + L.omega2, L, tol);
  const Complex s1 = sigma(L.omega1, L, tol);
  const Complex s2 = sigma(L.omega2, L, tol);
  const Complex lhs = s12 * s12;
  const Complex rhs = std::exp(2.0 * L.eta2 * L.omega1) * s1 * s1 * s2 * s2;
  return std::abs(lhs - rhs) / std::abs(rhs);
}

double log_sigma_omega2(const EllipticData& L, double tol) {
  const Complex s = sigma(L.omega2, L, tol);
  if (!(s.imag() > 0.0) || std::abs(std::arg(s) - kPi / 2.0) > 1e-10) {
    throw ConsistencyError("sigma(omega2) is not on the positive imaginary axis");
  }
  return std::log(std::abs(s));
}

Lemma43Residuals lemma43_residual(const EllipticData& L, double tol) {
  const Complex s = sigma(L.omega2, L, tol);
  const Complex s4 = (s * s) * (s * s);
  const double square = std::abs(L.c * L.c - std::exp(2.0 * L.eta2 * L.omega2) / s4);
  const Complex expected = 0.5 * L.eta2 * L.omega2 - 0.5 * std::log(L.c);
  const double log = std::abs(log_sigma_omega2(L, tol) - expected);
  return {square, log};
}

double half_period_sum_residual(const EllipticData& L, double tol) {
  const Complex u = L.omega3;
  const Complex v = L.omega2;
  const Complex su = sigma(u, L, tol);
  const Complex sv = sigma(v, L, tol);
  const Complex diff = -sigma(u + v, L, tol) * sigma(u - v, L, tol) / (su * su * sv * sv);
  return std::abs(diff - L.c * L.c);
}

WeierstrassJ J_via_weierstrass_parts(const EllipticData& L) {
  const Complex j = L.omega1 * log_sigma_omega2(L) - 0.5 * L.eta2 * L.omega1 * L.omega2 +
                    0.25 * kPi * kI * L.omega2;
  return {j.real(), std::abs(j.imag())};
}

double J_via_weierstrass(const EllipticData& L) {
  const WeierstrassJ j = J_via_weierstrass_parts(L);
  if (j.imag_residue > 1e-10) {
    throw ConsistencyError("J_via_weierstrass: imaginary part " + std::to_string(j.imag_residue) +
                           " does not cancel");
  }
  return j.value;
}

double J_closed(double c) {
  if (!(c > 0.0 && c < 1.0)) throw DomainError("J_closed requires 0 < c < 1");
  const double k_c = elliptic::elliptic_k(elliptic::Modulus(c));
  const double k_comp = elliptic::elliptic_k(elliptic::Modulus::from_complement(c));
  return -0.25 * kPi * k_comp - 0.5 * k_c * std::log(c);
}

}  // namespace gr4242::weierstrass
