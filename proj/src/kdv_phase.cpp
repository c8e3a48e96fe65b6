#include "gr4242/kdv_phase.hpp"

#include <cmath>
#include <numbers>

#include "gr4242/elliptic.hpp"
#include "gr4242/errors.hpp"
#include "gr4242/identities.hpp"
#include "gr4242/quadrature.hpp"

namespace gr4242::kdv {

using quadrature::Point;

ShockParams::ShockParams(double a, double gamma, double kalpha_term)
    : a_(a), b_(std::sqrt(2.0 - a * a)), gamma_(gamma), kalpha_term_(kalpha_term) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("ShockParams requires 0 < a < 1");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("ShockParams requires gamma > 0");
  if (!std::isfinite(kalpha_term)) throw DomainError("ShockParams: kalpha_term must be finite");
}

double second_term(const ShockParams& p) {
  return elliptic::incomplete_first_kind(std::sqrt(p.b() / p.a()), p.a() / p.b());
}

double second_term_numeric(const ShockParams& p, double tol) {
  const double r = p.a() / p.b();
  const double upper = std::sqrt(p.b() / p.a());
  auto f = [r](const Point& pt) {
    // w^2 - 1 from the distance to w = 1, which the abscissa cannot resolve.
    const double w2m1 = pt.from_lo * (2.0 + pt.from_lo);
    return 1.0 / std::sqrt(w2m1 * (1.0 - r * r * pt.x * pt.x));
  };
  return quadrature::tanh_sinh(f, 1.0, upper, tol).value;
}

double third_term_closed(const ShockParams& p) {
  const double a = p.a();
  const double b = p.b();
  const double k = elliptic::elliptic_k(elliptic::Modulus(a / b));
  return -(std::log(2.0 * p.gamma()) * k / b + 2.0 * identities::I_closed(b, a)) /
         (std::numbers::pi * b);
}

double third_term_numeric(const ShockParams& p, double tol) {
  const double a = p.a();
  const double b = p.b();
  const double log_2gamma = std::log(2.0 * p.gamma());
  // On [0, a]: w = from_lo, a - w = from_hi. The mirror half uses the same
  // integrand with the roles of the two distances exchanged.
  auto half = [=](double w, double a_minus_w) {
    const double radicand = a_minus_w * (a + w) * (b - w) * (b + w);
    return (log_2gamma + 2.0 * std::log(w)) / std::sqrt(radicand);
  };
  const auto right = quadrature::tanh_sinh(
      [&](const Point& pt) { return half(pt.from_lo, pt.from_hi); }, 0.0, a, tol);
  const auto left = quadrature::tanh_sinh(
      [&](const Point& pt) { return half(pt.from_hi, pt.from_lo); }, -a, 0.0, tol);
  return -quadrature::combine(left, right).value / (2.0 * std::numbers::pi * b);
}

double theta0(const ShockParams& p) {
  return p.kalpha_term() - second_term(p) - third_term_closed(p);
}

double theta0_numeric(const ShockParams& p, double tol) {
  return p.kalpha_term() - second_term_numeric(p, tol) - third_term_numeric(p, tol);
}

}  // namespace gr4242::kdv
