#pragma once

#include <concepts>
#include <functional>

// Double-exponential (tanh-sinh) quadrature on a finite interval, used as the
// independent numerical oracle for every integral of the verification.

namespace gr4242::quadrature {

/// An evaluation point together with its distances to both endpoints.
///
/// Near an endpoint the abscissa itself cannot resolve the distance
/// (1 - 1e-30 rounds to 1), so integrands with endpoint singularities should
/// build their singular factors from from_lo / from_hi instead of x.
struct Point {
  double x;
  double from_lo;
  double from_hi;
};

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int levels = 0;
  long evaluations = 0;
  bool converged = false;
};

struct TanhSinhOptions {
  int max_levels = 12;
  int min_levels = 3;
};

using PointIntegrand = std::function<double(const Point&)>;

/// Integrates f over (lo, hi). Endpoints are never evaluated exactly.
///
/// Convergence is declared once |S_k - S_{k-1}| <= tol at two consecutive
/// levels; otherwise ConvergenceError is thrown with the best estimate.
/// Requires lo < hi and tol >= 1e-14.
QuadratureResult tanh_sinh(const PointIntegrand& f, double lo, double hi, double tol,
                           const TanhSinhOptions& options = {});

template <class F>
  requires std::invocable<F&, double> && (!std::invocable<F&, const Point&>)
QuadratureResult tanh_sinh(F f, double lo, double hi, double tol,
                           const TanhSinhOptions& options = {}) {
  return tanh_sinh(PointIntegrand([&f](const Point& p) { return static_cast<double>(f(p.x)); }),
                   lo, hi, tol, options);
}

/// Sums two sub-interval results.
QuadratureResult combine(const QuadratureResult& left, const QuadratureResult& right);

/// I(a,b) = ∫_0^b ln x dx / sqrt((a^2-x^2)(b^2-x^2)), 0 < b < a. Split at b/2.
QuadratureResult integral_I_numeric(double a, double b, double tol);

/// 𝐉(c) = ∫_0^1 ln x dx / sqrt((1-x^2)(1-c^2 x^2)), 0 <= c < 1.
QuadratureResult integral_J_numeric(double c, double tol);

/// ∫_0^∞ ln x dx / sqrt((a^2+x^2)(b^2+x^2)) for a, b > 0, folded onto (0,1)
/// with x -> 1/x on the upper half-line.
QuadratureResult integral_4242_1_numeric(double a, double b, double tol);

/// ∫_0^1 y^{2n} ln(1-y^2) / sqrt(1-y^2) dy.
QuadratureResult lemma51_integral_numeric(unsigned n, double tol);

}  // namespace gr4242::quadrature
