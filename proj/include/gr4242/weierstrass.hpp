#pragma once

#include <complex>

// Lattice data for the cubic 4x^3 - g2 x - g3 with roots
//   e1 = (2-c^2)/3 > e2 = (2c^2-1)/3 > e3 = -(c^2+1)/3,  e1 - e3 = 1,
// and the Weierstrass σ-function on it, evaluated through θ1 with nome
// q = exp(-π 𝐊(c')/𝐊(c)).

namespace gr4242::weierstrass {

using Complex = std::complex<double>;

struct EllipticData {
  double c;
  double g2;
  double g3;
  double e1;
  double e2;
  double e3;
  double omega1;   // 𝐊(c)
  Complex omega2;  // i 𝐊(sqrt(1-c^2))
  Complex omega3;  // ω1 + ω2, where ℘ = e2
  double eta1;     // ζ(ω1)
  Complex eta2;    // ζ(ω2), from Legendre's relation
  double nome_q;
  double theta1_prime0;  // θ1'(0, q), cached for σ
};

inline constexpr double kMaxNome = 0.9;

/// Builds the lattice for 0 < c < 1 with nome <= 0.9. η1 comes from the
/// term-wise differentiated θ1 series: η1 = -π^2 θ1'''(0) / (12 ω1 θ1'(0)).
EllipticData lattice_from_c(double c);

/// 2 Σ (-1)^n q^{(n+1/2)^2} sin((2n+1) z), stopping past the largest term
/// once |term| < tol · |partial sum|.
Complex theta1(Complex z, double q, double tol = 1e-17);
double theta1_prime0(double q);
double theta1_triple_prime0(double q);

/// σ(z) = (2ω1/π) exp(η1 z^2 / (2ω1)) θ1(π z/(2ω1)) / θ1'(0).
Complex sigma(Complex z, const EllipticData& lattice, double tol = 1e-17);

/// |η1 ω2 - η2 ω1 - πi/2|
double legendre_residual(const EllipticData& lattice);

/// Relative residual of σ(z + 2ω_j) = -exp(2η_j (z + ω_j)) σ(z), j ∈ {1, 2}.
double quasi_period_residual(const EllipticData& lattice, Complex z, int period);

/// |σ²(ω1+ω2) - exp(2η2 ω1) σ²(ω1) σ²(ω2)| / |rhs|
double lemma42_residual(const EllipticData& lattice, double tol = 1e-17);

struct Lemma43Residuals {
  double square;  // |c^2 - exp(2η2ω2)/σ^4(ω2)|
  double log;     // |log σ(ω2) - (η2ω2/2 - log(c)/2)|
  double max() const { return square > log ? square : log; }
};

/// log σ(ω2) is evaluated on the real branch, ln|σ(ω2)|; σ(ω2) itself must lie
/// on the positive imaginary axis (ConsistencyError otherwise).
Lemma43Residuals lemma43_residual(const EllipticData& lattice, double tol = 1e-17);

/// |℘(ω3) - ℘(ω2) - c^2| with the difference written through σ:
/// ℘(u) - ℘(v) = -σ(u+v)σ(u-v) / (σ²(u)σ²(v)).
double half_period_sum_residual(const EllipticData& lattice, double tol = 1e-17);

/// Real-branch logarithm of σ(ω2).
double log_sigma_omega2(const EllipticData& lattice, double tol = 1e-17);

struct WeierstrassJ {
  double value;
  double imag_residue;
};

/// 𝐉(c) = ω1 log σ(ω2) - η2ω1ω2/2 + πiω2/4 with both parts kept.
WeierstrassJ J_via_weierstrass_parts(const EllipticData& lattice);

/// As above; throws ConsistencyError if the imaginary part exceeds 1e-10.
double J_via_weierstrass(const EllipticData& lattice);

/// -(π/4) 𝐊(sqrt(1-c^2)) - (1/2) 𝐊(c) ln c for 0 < c < 1.
double J_closed(double c);

}  // namespace gr4242::weierstrass
