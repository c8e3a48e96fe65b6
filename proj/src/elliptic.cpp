#include "gr4242/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gr4242/errors.hpp"

namespace gr4242::elliptic {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxAgmIterations = 64;

}  // namespace

Modulus::Modulus(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("modulus requires 0 <= k < 1, got " + std::to_string(k));
  }
  k_ = k;
  kprime_ = std::sqrt((1.0 - k) * (1.0 + k));
}

Modulus Modulus::from_complement(double kprime) {
  if (!(kprime > 0.0 && kprime <= 1.0)) {
    throw DomainError("complementary modulus requires 0 < k' <= 1, got " + std::to_string(kprime));
  }
  return Modulus(std::sqrt((1.0 - kprime) * (1.0 + kprime)), kprime);
}

AgmState agm_step(const AgmState& s) {
  return {0.5 * (s.a + s.b), std::sqrt(s.a * s.b), s.iterations + 1};
}

AgmState agm_iterate(double a0, double b0) {
  if (!(a0 > 0.0 && b0 > 0.0) || !std::isfinite(a0) || !std::isfinite(b0)) {
    throw DomainError("agm requires positive finite arguments");
  }
  AgmState s{a0, b0, 0};
  while (std::abs(s.a - s.b) > 2.0 * kEps * s.a && s.iterations < kMaxAgmIterations) {
    s = agm_step(s);
  }
  return s;
}

double agm(double a0, double b0) {
  const AgmState s = agm_iterate(a0, b0);
  return 0.5 * (s.a + s.b);
}

double elliptic_k(const Modulus& m) {
  if (m.k() > kMaxModulus) {
    throw DomainError("elliptic_k: k too close to 1 (K diverges at k = 1)");
  }
  return std::numbers::pi / (2.0 * agm(1.0, m.kprime()));
}

double elliptic_k(double k) { return elliptic_k(Modulus(k)); }

// E = K (1 - sum_{n>=0} 2^{n-1} c_n^2), c_0 = k, c_{n+1} = (a_n - b_n)/2.
double elliptic_e(const Modulus& m) {
  const double k = m.k();
  double a = 1.0;
  double b = m.kprime();
  double weight = 0.5;
  double sum = weight * k * k;
  for (int i = 0; i < kMaxAgmIterations && std::abs(a - b) > 2.0 * kEps * a; ++i) {
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    weight *= 2.0;
    sum += weight * c * c;
  }
  const double big_k = std::numbers::pi / (a + b);
  return big_k * (1.0 - sum);
}

double elliptic_e(double k) {
  if (k == 1.0) return 1.0;
  return elliptic_e(Modulus(k));
}

double k_imaginary_modulus(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("k_imaginary_modulus requires finite t >= 0");
  }
  // The complement 1/sqrt(1+t^2) is exact here, so K is finite for every t.
  const double kprime = 1.0 / std::hypot(1.0, t);
  return kprime * std::numbers::pi / (2.0 * agm(1.0, kprime));
}

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0) {
    throw DomainError("carlson_rf requires non-negative arguments");
  }
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1) {
    throw DomainError("carlson_rf: at most one argument may be zero");
  }
  constexpr double errtol = 1e-3;
  double mu = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;
  for (int i = 0; i < 100; ++i) {
    mu = (x + y + z) / 3.0;
    dx = 1.0 - x / mu;
    dy = 1.0 - y / mu;
    dz = 1.0 - z / mu;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < errtol) break;
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    const double sz = std::sqrt(z);
    const double lambda = sx * (sy + sz) + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
  }
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
}

double incomplete_first_kind(double upper, double m_ratio) {
  if (!(m_ratio > 0.0 && m_ratio < 1.0)) {
    throw DomainError("incomplete_first_kind requires 0 < a/b < 1");
  }
  if (!(upper > 1.0 && upper < 1.0 / m_ratio)) {
    throw DomainError("incomplete_first_kind requires 1 < upper < b/a");
  }
  const double r = m_ratio;
  const double x = upper * upper;
  const double x_minus_1 = (upper - 1.0) * (upper + 1.0);
  const double one_minus_r2 = (1.0 - r) * (1.0 + r);
  const double one_minus_r2x = (1.0 - r * upper) * (1.0 + r * upper);
  return std::sqrt(x_minus_1) * carlson_rf(x * one_minus_r2, one_minus_r2, one_minus_r2x);
}

}  // namespace gr4242::elliptic
