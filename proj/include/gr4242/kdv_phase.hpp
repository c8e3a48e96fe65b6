#pragma once

// The phase θ0 of the KdV collisionless-shock region,
//   θ0 = 𝐊(α) - ∫_1^{sqrt(b/a)} dw / sqrt((w^2-1)(1-(a/b)^2 w^2))
//        - (1/(2πb)) ∫_{-a}^{a} log(2γw^2) dw / sqrt((w^2-a^2)(w^2-b^2)),
// with branch points ±a, ±b, a^2 + b^2 = 2.

namespace gr4242::kdv {

class ShockParams {
 public:
  /// 0 < a < 1 and gamma > 0; b = sqrt(2 - a^2). 𝐊(α) is passed in as is,
  /// since α is only known implicitly.
  ShockParams(double a, double gamma, double kalpha_term = 0.0);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double gamma() const noexcept { return gamma_; }
  double kalpha_term() const noexcept { return kalpha_term_; }

 private:
  double a_;
  double b_;
  double gamma_;
  double kalpha_term_;
};

/// ∫_1^{sqrt(b/a)} by Carlson's R_F.
double second_term(const ShockParams& p);
double second_term_numeric(const ShockParams& p, double tol);

/// The log-weighted term including its -1/(2πb) prefactor. By evenness, and
/// since the radicand is positive on |w| < a < b, it is
///   -(1/(πb)) [ln(2γ) 𝐊(a/b) / b + 2 I(b, a)]
/// with I the closed form of the entry with the roles of a and b swapped.
double third_term_closed(const ShockParams& p);

/// Same term by tanh-sinh on [-a, 0] and [0, a].
double third_term_numeric(const ShockParams& p, double tol);

double theta0(const ShockParams& p);
double theta0_numeric(const ShockParams& p, double tol);

}  // namespace gr4242::kdv
