#pragma once

#include <utility>
#include <vector>

#include "gr4242/report.hpp"

// The check battery. Each family returns its CheckResults; a route that throws
// becomes a failing check carrying the error text instead of aborting the run.

namespace gr4242::verification {

using report::CheckResult;
using report::VerificationReport;

struct Tolerances {
  double cross_route = 1e-9;   // anything involving quadrature or series sums
  double closed = 1e-12;       // closed form against closed form
  double quadrature = 1e-13;   // absolute tanh-sinh tolerance
};

/// 𝐊 and 𝐄 by AGM against quadrature, and Legendre's relation among them.
std::vector<CheckResult> elliptic_checks(double k, const Tolerances& tol);

std::vector<CheckResult> entry_checks(double a, double b, const Tolerances& tol);
std::vector<CheckResult> half_line_checks(double a, double b, const Tolerances& tol);

/// Pairwise 𝐉 routes at c. The series route is included when 0 < c < 1/sqrt(2)
/// and with_series is set; `wide` selects the check names for the extended grid.
std::vector<CheckResult> j_checks(double c, const Tolerances& tol, bool with_series, bool wide);

std::vector<CheckResult> lattice_checks(double c, const Tolerances& tol);

/// eval_F, F_closed and F_via_J at x; the series route only inside its domain.
std::vector<CheckResult> f_checks(double x, const Tolerances& tol);

std::vector<CheckResult> log_moment_checks(unsigned n, const Tolerances& tol);
std::vector<CheckResult> limit_checks(const Tolerances& tol);
std::vector<CheckResult> closure_checks(double x);
std::vector<CheckResult> standard_k_ode_checks(double k);
std::vector<CheckResult> theta0_checks(double a, double gamma, const Tolerances& tol);

struct ExactSizes {
  unsigned telescope_max_n = 100;
  unsigned ode_terms = 200;
  unsigned harmonic_max_n = 100;
  unsigned stefan_max_j = 60;
  unsigned binomial_half_max_n = 30;
  unsigned closed_form_order = 30;
};

std::vector<CheckResult> telescope_checks(unsigned max_n);
std::vector<CheckResult> ode_checks(unsigned terms);
std::vector<CheckResult> harmonic_checks(unsigned max_n);
std::vector<CheckResult> stefan_checks(unsigned max_j, unsigned binomial_half_max_n);
/// Printed coefficients, the closed-form expansion and the symbolic steps.
std::vector<CheckResult> coefficient_checks(unsigned closed_form_order);

/// Evenly spaced points lo, ..., hi (count >= 2), or {lo} for count 1.
std::vector<double> linspace(double lo, double hi, unsigned count);

struct GridSpec {
  std::vector<double> modulus_k;
  std::vector<double> a_values;
  std::vector<double> b_values;
  std::vector<std::pair<double, double>> half_line_points;
  std::vector<double> j_four_route_c;
  std::vector<double> j_wide_c;
  std::vector<double> lattice_c;
  std::vector<double> f_x;
  std::vector<unsigned> log_moment_n;
  std::vector<double> closure_x;
  std::vector<double> standard_k;
  std::vector<double> kdv_a;
  bool limits = false;
  bool exact = false;
  ExactSizes exact_sizes;
  Tolerances tol;

  /// The full default battery.
  static GridSpec defaults();
};

/// Runs every family over the grids in spec, sorted by (name, inputs), with a config echo.
VerificationReport run_verification(const GridSpec& spec);

}  // namespace gr4242::verification
