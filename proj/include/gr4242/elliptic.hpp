#pragma once

// Complete elliptic integrals by the arithmetic-geometric mean and the
// incomplete first-kind integral needed for the KdV phase, by Carlson's R_F.
// Nothing here calls into the quadrature module, so these evaluators can
// serve as one side of every quadrature cross-check.

namespace gr4242::elliptic {

/// Elliptic modulus k in [0,1) together with its complement k' = sqrt(1-k^2).
///
/// Build from the complement when that is the quantity known exactly (e.g.
/// K(sqrt(1-c^2)) has k' = c); 𝐊 depends on k' through agm(1,k'), so this
/// avoids losing digits to 1-k^2 for k near 1.
class Modulus {
 public:
  explicit Modulus(double k);
  static Modulus from_complement(double kprime);

  double k() const noexcept { return k_; }
  double kprime() const noexcept { return kprime_; }

 private:
  Modulus(double k, double kprime) noexcept : k_(k), kprime_(kprime) {}
  double k_;
  double kprime_;
};

struct AgmState {
  double a;
  double b;
  int iterations;
};

/// One arithmetic-geometric step: (a,b) -> ((a+b)/2, sqrt(ab)).
AgmState agm_step(const AgmState& s);

/// Iterates to |a_n - b_n| <= 2 ulp(a_n). Throws DomainError unless a0,b0 > 0.
AgmState agm_iterate(double a0, double b0);
double agm(double a0, double b0);

// Largest k accepted by elliptic_k; beyond it K's log divergence makes
// relative-error contracts meaningless in binary64.
inline constexpr double kMaxModulus = 1.0 - 1e-8;

double elliptic_k(const Modulus& m);
double elliptic_k(double k);

double elliptic_e(const Modulus& m);
/// Accepts k = 1 (E(1) = 1), unlike Modulus.
double elliptic_e(double k);

/// 𝐊(it) for real t >= 0 via the imaginary-modulus transformation
/// (1/sqrt(1+t^2)) 𝐊(t/sqrt(1+t^2)).
double k_imaginary_modulus(double t);

/// Carlson's symmetric integral R_F(x,y,z); x,y,z >= 0 with at most one zero.
double carlson_rf(double x, double y, double z);

/// ∫_1^upper dw / sqrt((w^2-1)(1-r^2 w^2)) with r = m_ratio in (0,1) and
/// 1 < upper < 1/r. Reduced to sqrt(X-1) R_F(X(1-r^2), 1-r^2, 1-r^2 X),
/// X = upper^2.
double incomplete_first_kind(double upper, double m_ratio);

}  // namespace gr4242::elliptic
