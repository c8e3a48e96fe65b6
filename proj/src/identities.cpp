#include "gr4242/identities.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numbers>
#include <string>

#include "gr4242/elliptic.hpp"
#include "gr4242/errors.hpp"
#include "gr4242/exact_series.hpp"
#include "gr4242/quadrature.hpp"

namespace gr4242::identities {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kSeriesTol = 1e-14;

void require_ordered(double a, double b, const char* who) {
  if (!(b > 0.0 && b < a) || !std::isfinite(a)) {
    throw DomainError(std::string(who) + " requires 0 < b < a");
  }
}

}  // namespace

double I_closed(double a, double b) {
  require_ordered(a, b, "I_closed");
  const double r = b / a;
  const double k = elliptic::elliptic_k(elliptic::Modulus(r));
  const double k_comp = elliptic::elliptic_k(elliptic::Modulus::from_complement(r));
  return (k * std::log(a * b) - 0.5 * kPi * k_comp) / (2.0 * a);
}

double I_via_F(double a, double b) {
  require_ordered(a, b, "I_via_F");
  const double gap = (a - b) * (a + b);
  const double x = b * b / (16.0 * gap);
  if (!(x < 1.0 / 16.0 - series::kSeriesMargin)) {
    throw DomainError("I_via_F requires a > sqrt(2) b (series domain of F)");
  }
  const double k = elliptic::elliptic_k(elliptic::Modulus(b / a));
  return std::log(b / 2.0) * k / a - kPi / (4.0 * std::sqrt(gap)) * series::eval_F(x, kSeriesTol);
}

double J_via_lemma31(double c) {
  if (!(c > 0.0 && c < 1.0)) throw DomainError("J_via_lemma31 requires 0 < c < 1/sqrt(2)");
  const double comp2 = (1.0 - c) * (1.0 + c);
  const double x = c * c / (16.0 * comp2);
  if (!(x < 1.0 / 16.0 - series::kSeriesMargin)) {
    throw DomainError("J_via_lemma31 requires c < 1/sqrt(2) (series domain of F)");
  }
  const double k = elliptic::elliptic_k(elliptic::Modulus(c));
  return -kLn2 * k - kPi / (4.0 * std::sqrt(comp2)) * series::eval_F(x, kSeriesTol);
}

double F_closed(double x) {
  if (!(x >= kFClosedFloor) || !std::isfinite(x)) {
    throw DomainError("F_closed requires x >= 1e-8");
  }
  const double s = 1.0 + 16.0 * x;
  const double inv_sqrt = 1.0 / std::sqrt(s);
  const double sqrt_ratio = std::sqrt(16.0 * x / s);
  const double k_ratio = elliptic::elliptic_k(elliptic::Modulus::from_complement(inv_sqrt));
  const double k_inv = elliptic::elliptic_k(elliptic::Modulus::from_complement(sqrt_ratio));
  return (std::log(x / s) * k_ratio + kPi * k_inv) / (kPi * std::sqrt(s));
}

double F_via_J(double x, double quad_tol) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("F_via_J requires x > 0");
  const double s = 1.0 + 16.0 * x;
  const double c = std::sqrt(16.0 * x / s);
  const double k = elliptic::elliptic_k(elliptic::Modulus::from_complement(1.0 / std::sqrt(s)));
  const double j = quadrature::integral_J_numeric(c, quad_tol).value;
  return -4.0 / (kPi * std::sqrt(s)) * (j + kLn2 * k);
}

double entry_4242_1_closed(double a, double b) {
  require_ordered(a, b, "entry_4242_1_closed");
  const double k = elliptic::elliptic_k(elliptic::Modulus::from_complement(b / a));
  return k * std::log(a * b) / (2.0 * a);
}

double lemma51_closed(unsigned n) {
  // C(2n,n)/4^n by its ratio recurrence stays O(1) for all n.
  double ratio = 1.0;
  double h = 0.0;
  for (unsigned j = 1; j <= n; ++j) {
    ratio *= (2.0 * j - 1.0) / (2.0 * j);
    h += 1.0 / j;
  }
  return -0.5 * kPi * ratio * (h + 2.0 * kLn2);
}

namespace {

// Linear combination of a fixed set of transcendental symbols with exact
// rational coefficients.
template <std::size_t N>
struct Combination {
  series::BigRational coeff[N];

  friend Combination operator+(const Combination& p, const Combination& q) {
    Combination r;
    for (std::size_t i = 0; i < N; ++i) r.coeff[i] = p.coeff[i] + q.coeff[i];
    return r;
  }
  friend Combination operator*(const series::BigRational& s, const Combination& p) {
    Combination r;
    for (std::size_t i = 0; i < N; ++i) r.coeff[i] = s * p.coeff[i];
    return r;
  }
  friend bool operator==(const Combination& p, const Combination& q) {
    for (std::size_t i = 0; i < N; ++i) {
      if (p.coeff[i] != q.coeff[i]) return false;
    }
    return true;
  }
};

using Q = series::BigRational;

}  // namespace

bool symbolic_final_step_check() {
  // Symbols, all divided by a: 𝐊(c) ln a, 𝐊(c) ln b, π 𝐊(c'). ln c = ln b - ln a.
  using C3 = Combination<3>;
  const C3 k_ln_a{{Q(1), Q(0), Q(0)}};
  const C3 k_ln_b{{Q(0), Q(1), Q(0)}};
  const C3 pi_k_comp{{Q(0), Q(0), Q(1)}};
  const C3 k_ln_c = k_ln_b + Q(-1) * k_ln_a;

  const C3 j_closed = Q(-1, 4) * pi_k_comp + Q(-1, 2) * k_ln_c;
  const C3 reduction = k_ln_b + j_closed;
  const C3 closed = Q(1, 2) * (k_ln_a + k_ln_b) + Q(-1, 4) * pi_k_comp;
  return reduction == closed;
}

bool symbolic_weierstrass_step_check() {
  // Symbols: ω1 η2 ω2, ω1 ln c, π i ω2. With ω2 = i 𝐊(c') the last is -π 𝐊(c')
  // and ω1 ln c = 𝐊(c) ln c.
  using C3 = Combination<3>;
  const C3 w1_eta2_w2{{Q(1), Q(0), Q(0)}};
  const C3 w1_ln_c{{Q(0), Q(1), Q(0)}};
  const C3 pi_i_w2{{Q(0), Q(0), Q(1)}};

  const C3 w1_log_sigma = Q(1, 2) * w1_eta2_w2 + Q(-1, 2) * w1_ln_c;
  const C3 j = w1_log_sigma + Q(-1, 2) * w1_eta2_w2 + Q(1, 4) * pi_i_w2;
  // -(π/4) 𝐊(c') = (1/4) π i ω2.
  const C3 closed = Q(1, 4) * pi_i_w2 + Q(-1, 2) * w1_ln_c;
  return j == closed;
}

}  // namespace gr4242::identities
