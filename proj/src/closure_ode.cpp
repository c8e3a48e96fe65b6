#include "gr4242/closure_ode.hpp"

#include <algorithm>
#include <cmath>

#include "gr4242/elliptic.hpp"
#include "gr4242/errors.hpp"

namespace gr4242::series {

double OdeResidual::relative() const {
  return scale > 0.0 ? std::abs(residual) / scale : std::abs(residual);
}

double k_composite(KComposite which, double x) {
  if (!(x > 0.0)) throw DomainError("K-composite requires x > 0");
  const double s = 1.0 + 16.0 * x;
  const double inv_sqrt = 1.0 / std::sqrt(s);
  const double sqrt_ratio = std::sqrt(16.0 * x / s);
  // The two moduli are complementary; pass each as the other's complement.
  const auto m = (which == KComposite::kSqrt16x) ? elliptic::Modulus::from_complement(inv_sqrt)
                                                 : elliptic::Modulus::from_complement(sqrt_ratio);
  return elliptic::elliptic_k(m);
}

double log_composite(double x) {
  if (!(x > 0.0)) throw DomainError("log composite requires x > 0");
  const double s = 1.0 + 16.0 * x;
  return std::log(x / s) / std::sqrt(s);
}

namespace {

struct Stencil {
  double d1, d2, d3, d4;
};

Stencil stencil(const std::function<double(double)>& y, double x, double h, bool wide) {
  const double fm2 = y(x - 2 * h);
  const double fm1 = y(x - h);
  const double f0 = y(x);
  const double f1 = y(x + h);
  const double f2 = y(x + 2 * h);
  Stencil s{};
  s.d1 = (-f2 + 8 * f1 - 8 * fm1 + fm2) / (12 * h);
  s.d2 = (-f2 + 16 * f1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h);
  if (wide) {
    const double fm3 = y(x - 3 * h);
    const double f3 = y(x + 3 * h);
    s.d3 = (-f3 + 8 * f2 - 13 * f1 + 13 * fm1 - 8 * fm2 + fm3) / (8 * h * h * h);
    s.d4 = (-f3 + 12 * f2 - 39 * f1 + 56 * f0 - 39 * fm1 + 12 * fm2 - fm3) / (6 * h * h * h * h);
  }
  return s;
}

// All stencils here are O(h^4), so one Richardson step is (16 D(h/2) - D(h)) / 15.
double richardson(double coarse, double fine) { return (16.0 * fine - coarse) / 15.0; }

void require_step(double x, double h, double ratio) {
  if (!(x > 0.0)) throw DomainError("closure ODE check requires x > 0");
  if (!(h > 0.0) || x < ratio * h) throw DomainError("closure ODE check: step too large for x");
}

}  // namespace

Derivatives derivatives_order2(const std::function<double(double)>& y, double x, double h) {
  const Stencil coarse = stencil(y, x, h, false);
  const Stencil fine = stencil(y, x, 0.5 * h, false);
  return {{y(x), richardson(coarse.d1, fine.d1), richardson(coarse.d2, fine.d2), 0.0, 0.0}};
}

Derivatives derivatives_order4(const std::function<double(double)>& y, double x, double h) {
  const Stencil coarse = stencil(y, x, h, true);
  const Stencil fine = stencil(y, x, 0.5 * h, true);
  return {{y(x), richardson(coarse.d1, fine.d1), richardson(coarse.d2, fine.d2),
           richardson(coarse.d3, fine.d3), richardson(coarse.d4, fine.d4)}};
}

double default_step(double x) { return x / 50.0; }

double default_step_modulus(double k) { return std::min(k, 1.0 - k) / 50.0; }

double default_step_fourth_order(double x) { return std::min(x / 6.0, 0.03 * (x + 1.0 / 16.0)); }

namespace {

double second_order_scale(const Derivatives& d, double x) {
  return std::max({std::abs(d.d[0]), std::abs(x * d.d[1]), std::abs(x * x * d.d[2])});
}

}  // namespace

OdeResidual closure_ode_check_K_branch(KComposite which, double x, double h) {
  require_step(x, h, 10.0);
  const Derivatives d = derivatives_order2([which](double t) { return k_composite(which, t); }, x, h);
  const double s = 16.0 * x + 1.0;
  const double r = x * s * s * d.d[2] + s * s * d.d[1] - 4.0 * d.d[0];
  return {r, second_order_scale(d, x)};
}

OdeResidual closure_ode_check_log_branch(double x, double h) {
  require_step(x, h, 10.0);
  const Derivatives d = derivatives_order2(log_composite, x, h);
  const double s = 16.0 * x + 1.0;
  const double r = x * s * s * d.d[2] + (48.0 * x + 1.0) * s * d.d[1] + 8.0 * (24.0 * x + 1.0) * d.d[0];
  return {r, second_order_scale(d, x)};
}

OdeResidual standard_k_ode_residual(double k, double h) {
  if (!(h > 0.0) || k - 2.0 * h < 0.0 || k + 2.0 * h >= 1.0) {
    throw DomainError("standard_k_ode_residual: stencil leaves [0,1)");
  }
  const Derivatives d = derivatives_order2([](double t) { return elliptic::elliptic_k(t); }, k, h);
  const double r = k * (k * k - 1.0) * d.d[2] + (3.0 * k * k - 1.0) * d.d[1] + k * d.d[0];
  return {r, second_order_scale(d, k)};
}

OdeResidual fourth_order_residual(const std::function<double(double)>& y, double x, double h) {
  require_step(x, h, 4.0);
  const Derivatives d = derivatives_order4(y, x, h);
  const double s16 = 16.0 * x + 1.0;
  const double s32 = 32.0 * x + 1.0;
  const double terms[5] = {
      144.0 * d.d[0],
      108.0 * s32 * d.d[1],
      4.0 * (1568.0 * x * x + 98.0 * x + 1.0) * d.d[2],
      5.0 * x * s32 * s16 * d.d[3],
      x * x * s16 * s16 * d.d[4],
  };
  double r = 0.0;
  double scale = 0.0;
  for (double t : terms) {
    r += t;
    scale = std::max(scale, std::abs(t));
  }
  return {r, scale};
}

}  // namespace gr4242::series
