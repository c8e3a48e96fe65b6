#pragma once

#include <functional>

// Finite-difference checks of the second-order ODEs satisfied by the
// 𝐊-composites and the logarithmic factor of the closed form for F, and of the
// fourth-order ODE applied to any numerically given function. These functions
// have log singularities at x = 0, so they are not power series there.

namespace gr4242::series {

struct OdeResidual {
  double residual;
  double scale;
  double relative() const;
};

inline constexpr double kClosureTolerance = 1e-6;

enum class KComposite {
  kSqrt16x,  // 𝐊(sqrt(16x/(1+16x)))
  kInvSqrt,  // 𝐊(1/sqrt(1+16x))
};

double k_composite(KComposite which, double x);

/// ln(x/(1+16x)) / sqrt(1+16x)
double log_composite(double x);

/// Function value and derivatives up to order 4 (unused slots zero).
struct Derivatives {
  double d[5];
};

/// 5-point central stencils for y', y'' at steps h and h/2, one Richardson step.
Derivatives derivatives_order2(const std::function<double(double)>& y, double x, double h);

/// As above plus 7-point O(h^4) stencils for y''' and y''''.
Derivatives derivatives_order4(const std::function<double(double)>& y, double x, double h);

double default_step(double x);
double default_step_fourth_order(double x);
/// min(k, 1-k)/50: the K ODE is singular at both k = 0 and k = 1.
double default_step_modulus(double k);

/// x(16x+1)^2 y'' + (16x+1)^2 y' - 4y on the chosen composite.
/// Scale is max(|y|, |x y'|, |x^2 y''|). Requires x > 0 and x >= 10h.
OdeResidual closure_ode_check_K_branch(KComposite which, double x, double h);

/// x(16x+1)^2 y'' + (48x+1)(16x+1) y' + 8(24x+1) y on log_composite.
OdeResidual closure_ode_check_log_branch(double x, double h);

/// k(k^2-1) K'' + (3k^2-1) K' + k K at modulus k.
OdeResidual standard_k_ode_residual(double k, double h);

/// The fourth-order operator applied to y at x; scale is the largest term
/// magnitude. Requires x > 0 and x >= 4h.
OdeResidual fourth_order_residual(const std::function<double(double)>& y, double x, double h);

}  // namespace gr4242::series
