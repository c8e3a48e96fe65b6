#pragma once

// Closed forms and alternative computational routes for
//   I(a,b) = ∫_0^b ln x dx / sqrt((a^2-x^2)(b^2-x^2)),
//   𝐉(c)   = ∫_0^1 ln x dx / sqrt((1-x^2)(1-c^2x^2)),
//   F(x)   = Σ (-1)^n C(2n,n)^2 H_n x^n,
// each of which the verification compares pairwise.

namespace gr4242::identities {

/// (1/2a) [𝐊(b/a) ln(ab) - (π/2) 𝐊(sqrt(a^2-b^2)/a)], 0 < b < a.
double I_closed(double a, double b);

/// (1/a) ln(b/2) 𝐊(b/a) - π/(4 sqrt(a^2-b^2)) F(b^2/(16(a^2-b^2))).
/// Needs the series argument inside |x| < 1/16 - margin, i.e. a > sqrt(2) b.
double I_via_F(double a, double b);

/// -ln 2 𝐊(c) - π/(4 sqrt(1-c^2)) F(c^2/(16(1-c^2))), 0 < c < 1/sqrt(2).
double J_via_lemma31(double c);

/// (1/(π sqrt(1+16x))) [ln(x/(1+16x)) 𝐊(sqrt(16x/(1+16x))) + π 𝐊(1/sqrt(1+16x))],
/// valid for all x >= kFClosedFloor (analytic continuation past 1/16).
double F_closed(double x);
inline constexpr double kFClosedFloor = 1e-8;

/// -(4/(π sqrt(1+16x))) [𝐉(c) + ln 2 𝐊(c)], c = sqrt(16x/(1+16x)), with 𝐉 by
/// quadrature.
double F_via_J(double x, double quad_tol = 1e-13);

/// (1/2a) 𝐊(sqrt(a^2-b^2)/a) ln(ab), 0 < b < a.
double entry_4242_1_closed(double a, double b);

/// -(π / 2^{2n+1}) C(2n,n) (H_n + 2 ln 2)
double lemma51_closed(unsigned n);

/// Substitutes the closed 𝐉 into I = (ln b/a) 𝐊(c) + 𝐉(c)/a over the symbols
/// 𝐊(c) ln a, 𝐊(c) ln b, π 𝐊(c') with exact rational coefficients and
/// compares with the closed form of I.
bool symbolic_final_step_check();

/// Same for ω1 log σ(ω2) - η2 ω1 ω2/2 + πi ω2/4 with log σ(ω2) = η2ω2/2 - ln c/2
/// and ω1 = 𝐊(c), ω2 = i𝐊(c'): must reduce to -(π/4) 𝐊(c') - 𝐊(c) ln c / 2.
bool symbolic_weierstrass_step_check();

}  // namespace gr4242::identities
