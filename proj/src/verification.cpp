#include "gr4242/verification.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <functional>
#include <numbers>
#include <string>

#include "gr4242/closure_ode.hpp"
#include "gr4242/elliptic.hpp"
#include "gr4242/errors.hpp"
#include "gr4242/exact_series.hpp"
#include "gr4242/identities.hpp"
#include "gr4242/kdv_phase.hpp"
#include "gr4242/quadrature.hpp"
#include "gr4242/weierstrass.hpp"

namespace gr4242::verification {

namespace {

using report::Inputs;
using series::BigRational;

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// A computed value or the reason it could not be computed.
struct Route {
  double value = 0.0;
  std::string error;
  bool ok() const { return error.empty(); }
};

Route attempt(const std::function<double()>& fn) {
  try {
    return {fn(), {}};
  } catch (const ConvergenceError& e) {
    return {e.best_estimate(), std::string("no convergence: ") + e.what()};
  } catch (const std::exception& e) {
    return {0.0, e.what()};
  }
}

CheckResult compare(const std::string& name, const Inputs& inputs, const Route& lhs, const Route& rhs,
                    double tol) {
  if (!lhs.ok()) return report::failed(name, inputs, tol, lhs.error);
  if (!rhs.ok()) return report::failed(name, inputs, tol, rhs.error);
  return report::compare(name, inputs, lhs.value, rhs.value, tol);
}

CheckResult residual(const std::string& name, const Inputs& inputs, const Route& r, double tol) {
  if (!r.ok()) return report::failed(name, inputs, tol, r.error);
  return report::residual(name, inputs, r.value, tol);
}

bool in_series_domain(double x) { return std::abs(x) < 1.0 / 16.0 - series::kSeriesMargin; }

}  // namespace

std::vector<CheckResult> elliptic_checks(double k, const Tolerances& tol) {
  const Inputs in{{"k", k}};
  const Route k_agm = attempt([=] { return elliptic::elliptic_k(k); });
  const Route k_quad = attempt([=] {
    return quadrature::tanh_sinh(
               [k](const quadrature::Point& p) {
                 return 1.0 / std::sqrt(p.from_hi * (1.0 + p.x) * (1.0 - k * k * p.x * p.x));
               },
               0.0, 1.0, tol.quadrature)
        .value;
  });
  const Route e_agm = attempt([=] { return elliptic::elliptic_e(k); });
  const Route e_quad = attempt([=] {
    return quadrature::tanh_sinh(
               [k](double t) {
                 const double s = std::sin(t);
                 return std::sqrt(1.0 - k * k * s * s);
               },
               0.0, 0.5 * kPi, tol.quadrature)
        .value;
  });
  const Route legendre = attempt([=] {
    const elliptic::Modulus m(k);
    const auto mc = elliptic::Modulus::from_complement(k);
    const double kk = elliptic::elliptic_k(m), kc = elliptic::elliptic_k(mc);
    return elliptic::elliptic_e(m) * kc + elliptic::elliptic_e(mc) * kk - kk * kc;
  });
  return {compare("K.agm_vs_quadrature", in, k_agm, k_quad, 1e-12),
          compare("E.agm_vs_quadrature", in, e_agm, e_quad, 1e-12),
          compare("K.legendre_relation", in, legendre, Route{0.5 * kPi, {}}, tol.closed)};
}

std::vector<CheckResult> entry_checks(double a, double b, const Tolerances& tol) {
  const Inputs in{{"a", a}, {"b", b}};
  const Route closed = attempt([=] { return identities::I_closed(a, b); });
  const Route quad = attempt([=] { return quadrature::integral_I_numeric(a, b, tol.quadrature).value; });
  std::vector<CheckResult> out;
  out.push_back(compare("I.closed_vs_quadrature", in, closed, quad, tol.cross_route));

  // I = (ln b / a) 𝐊(b/a) + 𝐉(b/a) / a, every piece by its own quadrature.
  const Route reduction = attempt([=] {
    const double k = quadrature::tanh_sinh(
                         [c = b / a](const quadrature::Point& p) {
                           return 1.0 / std::sqrt(p.from_hi * (1.0 + p.x) * (1.0 - c * c * p.x * p.x));
                         },
                         0.0, 1.0, tol.quadrature)
                         .value;
    return std::log(b) / a * k + quadrature::integral_J_numeric(b / a, tol.quadrature).value / a;
  });
  out.push_back(compare("I.J_reduction_vs_quadrature", in, reduction, quad, tol.cross_route));

  // x -> 2x: I(2a, 2b) = I(a,b)/2 + ln 2 𝐊(b/a) / (2a).
  const Route scaled = attempt([=] { return quadrature::integral_I_numeric(2 * a, 2 * b, tol.quadrature).value; });
  const Route scaled_rhs = attempt([=] {
    return 0.5 * quadrature::integral_I_numeric(a, b, tol.quadrature).value +
           kLn2 * elliptic::elliptic_k(b / a) / (2.0 * a);
  });
  out.push_back(compare("I.scaling", in, scaled, scaled_rhs, tol.cross_route));

  if (b > 0.0 && b < a && in_series_domain(b * b / (16.0 * (a - b) * (a + b)))) {
    const Route via_f = attempt([=] { return identities::I_via_F(a, b); });
    out.push_back(compare("I.series_route_vs_closed", in, via_f, closed, tol.cross_route));
    out.push_back(compare("I.series_route_vs_quadrature", in, via_f, quad, tol.cross_route));
  }
  return out;
}

std::vector<CheckResult> half_line_checks(double a, double b, const Tolerances& tol) {
  const Inputs in{{"a", a}, {"b", b}};
  const Route closed = attempt([=] { return identities::entry_4242_1_closed(a, b); });
  const Route quad =
      attempt([=] { return quadrature::integral_4242_1_numeric(a, b, tol.quadrature).value; });
  // x -> 3x: value(3a, 3b) = [value(a,b) + ln 3 𝐊(sqrt(a^2-b^2)/a) / a] / 3.
  const Route scaled =
      attempt([=] { return quadrature::integral_4242_1_numeric(3 * a, 3 * b, tol.quadrature).value; });
  const Route scaled_rhs = attempt([=] {
    const double k = elliptic::elliptic_k(elliptic::Modulus::from_complement(b / a));
    return (quadrature::integral_4242_1_numeric(a, b, tol.quadrature).value + std::log(3.0) * k / a) / 3.0;
  });
  return {compare("half_line.closed_vs_quadrature", in, closed, quad, 1e-10),
          compare("half_line.scaling", in, scaled, scaled_rhs, tol.cross_route)};
}

std::vector<CheckResult> j_checks(double c, const Tolerances& tol, bool with_series, bool wide) {
  const Inputs in{{"c", c}};
  const std::string prefix = wide ? "J_wide." : "J.";
  const Route quad = attempt([=] { return quadrature::integral_J_numeric(c, tol.quadrature).value; });
  const Route closed = attempt([=] { return weierstrass::J_closed(c); });
  weierstrass::WeierstrassJ parts{};
  const Route sigma = attempt([&] {
    parts = weierstrass::J_via_weierstrass_parts(weierstrass::lattice_from_c(c));
    return parts.value;
  });

  std::vector<CheckResult> out;
  out.push_back(compare(prefix + "closed_vs_quadrature", in, closed, quad, tol.cross_route));
  out.push_back(compare(prefix + "sigma_route_vs_quadrature", in, sigma, quad, tol.cross_route));
  out.push_back(compare(prefix + "sigma_route_vs_closed", in, sigma, closed, tol.cross_route));
  out.push_back(residual(prefix + "sigma_route_imaginary_part", in,
                         sigma.ok() ? Route{parts.imag_residue, {}} : sigma, 1e-10));
  if (with_series && c < std::numbers::sqrt2 / 2.0) {
    const Route series = attempt([=] { return identities::J_via_lemma31(c); });
    out.push_back(compare(prefix + "series_route_vs_quadrature", in, series, quad, tol.cross_route));
    out.push_back(compare(prefix + "series_route_vs_closed", in, series, closed, tol.cross_route));
    out.push_back(compare(prefix + "series_route_vs_sigma_route", in, series, sigma, tol.cross_route));
  }
  return out;
}

std::vector<CheckResult> lattice_checks(double c, const Tolerances& tol) {
  using weierstrass::Complex;
  const Inputs in{{"c", c}};
  weierstrass::EllipticData L{};
  const Route built = attempt([&] {
    L = weierstrass::lattice_from_c(c);
    return 0.0;
  });
  const char* names[] = {"lattice.root_relations",      "lattice.discriminant",
                         "lattice.eta1_vs_second_kind", "sigma.legendre",
                         "sigma.normalization",         "sigma.quasi_period_1",
                         "sigma.quasi_period_2",        "sigma.half_period_product",
                         "sigma.half_period_square",    "sigma.log_half_period",
                         "sigma.p_difference"};
  if (!built.ok()) {
    std::vector<CheckResult> out;
    for (const char* n : names) out.push_back(report::failed(n, in, tol.closed, built.error));
    return out;
  }

  std::vector<CheckResult> out;
  const double c2 = c * c;
  const Route roots = attempt([&] {
    if (!(L.e1 > L.e2 && L.e2 > L.e3)) return 1.0;
    return std::max({std::abs(L.e1 + L.e2 + L.e3), std::abs(L.e1 - L.e3 - 1.0),
                     std::abs(L.e2 - L.e3 - c2),
                     std::abs(L.g2 + 4.0 * (L.e1 * L.e2 + L.e1 * L.e3 + L.e2 * L.e3)),
                     std::abs(L.g3 - 4.0 * L.e1 * L.e2 * L.e3)});
  });
  out.push_back(residual(names[0], in, roots, 1e-13));
  const double disc = L.g2 * L.g2 * L.g2 - 27.0 * L.g3 * L.g3;
  const double disc_expected = 16.0 * c2 * c2 * (c + 1.0) * (c + 1.0) * (c - 1.0) * (c - 1.0);
  out.push_back(report::compare(names[1], in, disc, disc_expected, 1e-13));
  // With e1 - e3 = 1: η1 = 𝐄(c) - e1 𝐊(c).
  const double eta1_e = elliptic::elliptic_e(elliptic::Modulus(c)) - L.e1 * L.omega1;
  out.push_back(report::compare(names[2], in, L.eta1, eta1_e, tol.closed));
  out.push_back(report::residual(names[3], in, weierstrass::legendre_residual(L), 1e-12));

  const Route norm = attempt([&] {
    const Complex z{1e-4, 0.0};
    return std::abs(weierstrass::sigma(z, L) / z - 1.0);
  });
  out.push_back(residual(names[4], in, norm, 1e-6));

  const Complex w2 = L.omega2;
  const Complex samples[] = {0.3 * L.omega1, 0.1 * L.omega1 + 0.2 * w2, -0.4 * L.omega1 + 0.3 * w2,
                             0.25 * w2, 0.7 * L.omega1 - 0.45 * w2};
  for (int period = 1; period <= 2; ++period) {
    const Route worst = attempt([&] {
      double m = 0.0;
      for (const Complex& z : samples) m = std::max(m, weierstrass::quasi_period_residual(L, z, period));
      return m;
    });
    out.push_back(residual(names[4 + period], in, worst, 1e-8));
  }
  out.push_back(residual(names[7], in, attempt([&] { return weierstrass::lemma42_residual(L); }), 1e-8));
  weierstrass::Lemma43Residuals r43{};
  const Route l43 = attempt([&] {
    r43 = weierstrass::lemma43_residual(L);
    return r43.max();
  });
  out.push_back(residual(names[8], in, l43.ok() ? Route{r43.square, {}} : l43, 1e-8));
  out.push_back(residual(names[9], in, l43.ok() ? Route{r43.log, {}} : l43, 1e-8));
  out.push_back(
      residual(names[10], in, attempt([&] { return weierstrass::half_period_sum_residual(L); }), 1e-8));
  return out;
}

std::vector<CheckResult> f_checks(double x, const Tolerances& tol) {
  const Inputs in{{"x", x}};
  constexpr double kFTol = 1e-10;
  const Route closed = attempt([=] { return identities::F_closed(x); });
  const Route via_j = attempt([=] { return identities::F_via_J(x, tol.quadrature); });
  std::vector<CheckResult> out;
  out.push_back(compare("F.quadrature_route_vs_closed", in, via_j, closed, kFTol));
  if (in_series_domain(x)) {
    const Route series = attempt([=] { return series::eval_F(x, 1e-14); });
    out.push_back(compare("F.series_vs_closed", in, series, closed, kFTol));
    out.push_back(compare("F.series_vs_quadrature_route", in, series, via_j, kFTol));
  }
  return out;
}

std::vector<CheckResult> log_moment_checks(unsigned n, const Tolerances& tol) {
  const Inputs in{{"n", static_cast<double>(n)}};
  const Route quad =
      attempt([=] { return quadrature::lemma51_integral_numeric(n, tol.quadrature).value; });
  const Route closed = attempt([=] { return identities::lemma51_closed(n); });
  return {compare("log_moment.closed_vs_quadrature", in, closed, quad, 1e-10)};
}

std::vector<CheckResult> limit_checks(const Tolerances& tol) {
  constexpr double kSmallC = 1e-3;
  const Route target{-0.5 * kPi * kLn2, {}};
  const Inputs in{{"c", kSmallC}};
  std::vector<CheckResult> out;
  out.push_back(compare("limit.J_quadrature_small_c", in,
                        attempt([&] { return quadrature::integral_J_numeric(kSmallC, tol.quadrature).value; }),
                        target, 1e-6));
  out.push_back(compare("limit.J_closed_small_c", in, attempt([] { return weierstrass::J_closed(kSmallC); }),
                        target, 1e-6));
  out.push_back(compare("limit.J_sigma_route_small_c", in, attempt([] {
                          return weierstrass::J_via_weierstrass(weierstrass::lattice_from_c(kSmallC));
                        }),
                        target, 1e-6));
  out.push_back(compare("limit.J_series_route_small_c", in,
                        attempt([] { return identities::J_via_lemma31(kSmallC); }), target, 1e-6));
  // J_closed itself cannot go below c ~ 1e-4 (its K(c') hits the modulus
  // guard), so the deeper limit is taken from quadrature alone.
  constexpr double kTinyC = 1e-6;
  out.push_back(compare("limit.J_closed_small_c_vs_quadrature_tiny_c", {{"c", kSmallC}, {"c_tiny", kTinyC}},
                        attempt([] { return weierstrass::J_closed(kSmallC); }),
                        attempt([&] { return quadrature::integral_J_numeric(kTinyC, tol.quadrature).value; }),
                        1e-6));
  out.push_back(compare("limit.J_quadrature_tiny_c", {{"c", kTinyC}},
                        attempt([&] { return quadrature::integral_J_numeric(kTinyC, tol.quadrature).value; }),
                        target, tol.cross_route));
  out.push_back(residual("limit.F_at_zero", {{"x", 0.0}}, attempt([] { return series::eval_F(0.0, 1e-14); }),
                         0.0));
  return out;
}

std::vector<CheckResult> closure_checks(double x) {
  const Inputs in{{"x", x}};
  const double tol = series::kClosureTolerance;
  auto rel = [](const series::OdeResidual& r) { return r.relative(); };
  const double h = series::default_step(x);
  return {
      residual("closure.K_ratio_branch", in, attempt([&] {
                 return rel(series::closure_ode_check_K_branch(series::KComposite::kSqrt16x, x, h));
               }),
               tol),
      residual("closure.K_inverse_branch", in, attempt([&] {
                 return rel(series::closure_ode_check_K_branch(series::KComposite::kInvSqrt, x, h));
               }),
               tol),
      residual("closure.log_branch", in, attempt([&] { return rel(series::closure_ode_check_log_branch(x, h)); }),
               tol),
      residual("closure.closed_form_fourth_order", in, attempt([&] {
                 return rel(series::fourth_order_residual(identities::F_closed, x,
                                                          series::default_step_fourth_order(x)));
               }),
               tol),
  };
}

std::vector<CheckResult> standard_k_ode_checks(double k) {
  return {residual("closure.standard_K_ode", {{"k", k}}, attempt([&] {
                     return series::standard_k_ode_residual(k, series::default_step_modulus(k)).relative();
                   }),
                   series::kClosureTolerance)};
}

std::vector<CheckResult> theta0_checks(double a, double gamma, const Tolerances& tol) {
  const Inputs in{{"a", a}, {"gamma", gamma}};
  std::vector<CheckResult> out;
  const Route closed = attempt([=] { return kdv::third_term_closed(kdv::ShockParams(a, gamma)); });
  const Route quad = attempt([=] { return kdv::third_term_numeric(kdv::ShockParams(a, gamma), tol.quadrature); });
  out.push_back(compare("theta0.third_term_closed_vs_quadrature", in, closed, quad, tol.cross_route));
  const Route carlson = attempt([=] { return kdv::second_term(kdv::ShockParams(a, gamma)); });
  const Route carlson_quad =
      attempt([=] { return kdv::second_term_numeric(kdv::ShockParams(a, gamma), tol.quadrature); });
  out.push_back(compare("theta0.second_term_carlson_vs_quadrature", in, carlson, carlson_quad, 1e-10));
  return out;
}

namespace {

template <class Pred>
long count_failures(unsigned lo, unsigned hi, Pred pred) {
  long failures = 0;
  for (unsigned n = lo; n <= hi; ++n) {
    if (!pred(n)) ++failures;
  }
  return failures;
}

std::string range_message(const char* what, unsigned lo, unsigned hi) {
  return std::string(what) + "for n = " + std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

std::vector<CheckResult> telescope_checks(unsigned max_n) {
  const long bad = count_failures(0, max_n, series::telescope_check);
  return {report::exact("exact.telescoping_certificate", {{"max_n", static_cast<double>(max_n)}}, bad,
                        std::to_string(bad) + " mismatches " + range_message("", 0, max_n))};
}

std::vector<CheckResult> ode_checks(unsigned terms) {
  const Inputs in{{"terms", static_cast<double>(terms)}};
  if (terms < 5) return {report::failed("exact.fourth_order_ode", in, 0.0, "ode check needs terms >= 5")};
  const auto coeffs = series::ode_residual_F(terms);
  const long nonzero = std::count_if(coeffs.begin(), coeffs.end(), [](const BigRational& q) { return q != 0; });
  std::string message = nonzero == 0 ? std::to_string(terms) + " residual coefficients exactly zero"
                                     : std::to_string(nonzero) + " of " + std::to_string(terms) +
                                           " residual coefficients nonzero";
  return {report::exact("exact.fourth_order_ode", in, nonzero, std::move(message))};
}

std::vector<CheckResult> harmonic_checks(unsigned max_n) {
  const long bad = count_failures(0, max_n, series::harmonic_recurrence_check);
  return {report::exact("exact.harmonic_recurrence", {{"max_n", static_cast<double>(max_n)}}, bad,
                        std::to_string(bad) + " mismatches " + range_message("", 0, max_n))};
}

std::vector<CheckResult> stefan_checks(unsigned max_j, unsigned binomial_half_max_n) {
  std::vector<CheckResult> out;
  const long bad = max_j >= 1 ? count_failures(1, max_j, series::stefan_identity_check) : 0;
  out.push_back(report::exact("exact.a_sum_identity", {{"max_j", static_cast<double>(max_j)}}, bad,
                              std::to_string(bad) + " mismatches for j = 1.." + std::to_string(max_j)));
  // a_l = C(2l,l)^2 / 16^l
  const long bad_a = count_failures(0, max_j, [](unsigned l) {
    const series::BigInt cb = series::central_binomial(l);
    series::BigInt pow16;
    mpz_ui_pow_ui(pow16.get_mpz_t(), 16, l);
    BigRational form(cb * cb, pow16);
    form.canonicalize();
    return series::stefan_a(l) == form;
  });
  out.push_back(report::exact("exact.a_central_binomial_form", {{"max_j", static_cast<double>(max_j)}}, bad_a,
                              std::to_string(bad_a) + " mismatches for l = 0.." + std::to_string(max_j)));
  const long bad_b = binomial_half_max_n >= 1 ? count_failures(1, binomial_half_max_n, series::binomial_half_check) : 0;
  out.push_back(report::exact("exact.binomial_half", {{"max_n", static_cast<double>(binomial_half_max_n)}}, bad_b,
                              std::to_string(bad_b) + " mismatches " + range_message("", 1, binomial_half_max_n)));
  return out;
}

std::vector<CheckResult> coefficient_checks(unsigned closed_form_order) {
  std::vector<CheckResult> out;
  const BigRational printed_f[] = {BigRational(-4), BigRational(54), BigRational(-2200, 3),
                                   BigRational(30625, 3)};
  long bad_f = 0;
  for (unsigned n = 1; n <= 4; ++n) bad_f += series::f_coeff(n) != printed_f[n - 1];
  out.push_back(report::exact("exact.printed_series_coefficients", {}, bad_f, "f_1..f_4 = -4, 54, -2200/3, 30625/3"));

  const BigRational printed_k[] = {BigRational(1, 2), BigRational(1, 8), BigRational(9, 128)};
  long bad_k = 0;
  for (unsigned n = 0; n < 3; ++n) bad_k += series::k_taylor_coeff(n) != printed_k[n];
  out.push_back(report::exact("exact.K_taylor_coefficients", {}, bad_k, "1/2, 1/8, 9/128"));

  const auto closed = series::closed_form_series(closed_form_order);
  const auto f = series::f_series(closed_form_order);
  long bad_c = 0;
  for (std::size_t i = 0; i <= closed_form_order; ++i) bad_c += closed[i] != f[i];
  out.push_back(report::exact("exact.closed_form_expansion", {{"order", static_cast<double>(closed_form_order)}},
                              bad_c, std::to_string(bad_c) + " coefficients differ from F"));

  out.push_back(report::exact("exact.symbolic_final_step", {}, identities::symbolic_final_step_check() ? 0 : 1));
  out.push_back(report::exact("exact.symbolic_sigma_step", {}, identities::symbolic_weierstrass_step_check() ? 0 : 1));
  return out;
}

std::vector<double> linspace(double lo, double hi, unsigned count) {
  std::vector<double> out;
  if (count == 0) return out;
  if (count == 1) return {lo};
  for (unsigned i = 0; i < count; ++i) {
    out.push_back(i + 1 == count ? hi : lo + (hi - lo) * i / (count - 1));
  }
  return out;
}

GridSpec GridSpec::defaults() {
  GridSpec g;
  g.modulus_k = {0.1, 0.3, 0.5, 0.7, 0.9, 0.99};
  g.a_values = {1.5, 2.0, 2.5, 3.0, 3.5};
  g.b_values = {0.2, 0.4, 0.6, 0.8, 1.0};
  g.half_line_points = {{2.0, 1.0}, {3.0, 2.0}, {2.0, 0.5}, {1.5, 0.3}, {4.0, 1.5}};
  g.j_four_route_c = linspace(0.05, 0.7, 25);
  g.j_wide_c = linspace(0.05, 0.95, 25);
  g.lattice_c = g.j_wide_c;
  g.f_x = {0.001, 0.005, 0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.1, 0.25, 0.5, 1.0};
  for (unsigned n = 0; n <= 10; ++n) g.log_moment_n.push_back(n);
  g.closure_x = linspace(0.01, 0.5, 10);
  g.standard_k = {0.1, 0.3, 0.5, 0.7, 0.9};
  g.kdv_a = {0.3, 0.5, 0.8, 0.9, 0.95};
  g.limits = true;
  g.exact = true;
  return g;
}

namespace {

std::string join(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += (out.empty() ? "" : ",") + report::format_number(x);
  return out;
}

}  // namespace

VerificationReport run_verification(const GridSpec& g) {
  VerificationReport rep;
  rep.config = {
      {"tol.cross_route", report::format_number(g.tol.cross_route)},
      {"tol.closed", report::format_number(g.tol.closed)},
      {"tol.quadrature", report::format_number(g.tol.quadrature)},
      {"a_values", join(g.a_values)},
      {"b_values", join(g.b_values)},
      {"j_four_route_points", std::to_string(g.j_four_route_c.size())},
      {"j_wide_points", std::to_string(g.j_wide_c.size())},
      {"lattice_points", std::to_string(g.lattice_c.size())},
      {"f_x", join(g.f_x)},
      {"closure_points", std::to_string(g.closure_x.size())},
      {"kdv_a", join(g.kdv_a)},
      {"limits", g.limits ? "true" : "false"},
      {"exact", g.exact ? "true" : "false"},
  };
  for (double k : g.modulus_k) rep.append(elliptic_checks(k, g.tol));
  for (double a : g.a_values) {
    for (double b : g.b_values) rep.append(entry_checks(a, b, g.tol));
  }
  for (const auto& [a, b] : g.half_line_points) rep.append(half_line_checks(a, b, g.tol));
  for (double c : g.j_four_route_c) rep.append(j_checks(c, g.tol, true, false));
  for (double c : g.j_wide_c) rep.append(j_checks(c, g.tol, false, true));
  for (double c : g.lattice_c) rep.append(lattice_checks(c, g.tol));
  for (double x : g.f_x) rep.append(f_checks(x, g.tol));
  for (unsigned n : g.log_moment_n) rep.append(log_moment_checks(n, g.tol));
  for (double x : g.closure_x) rep.append(closure_checks(x));
  for (double k : g.standard_k) rep.append(standard_k_ode_checks(k));
  for (double a : g.kdv_a) {
    // 2γa^2 = 1 puts the zero of log(2γw^2) at the endpoint; γ = 2/a^2 puts it at a/2.
    for (double gamma : {0.5, 1.0 / (2.0 * a * a), 2.0 / (a * a)}) rep.append(theta0_checks(a, gamma, g.tol));
  }
  if (g.limits) rep.append(limit_checks(g.tol));
  if (g.exact) {
    const ExactSizes& s = g.exact_sizes;
    rep.append(coefficient_checks(s.closed_form_order));
    rep.append(telescope_checks(s.telescope_max_n));
    rep.append(ode_checks(s.ode_terms));
    rep.append(harmonic_checks(s.harmonic_max_n));
    rep.append(stefan_checks(s.stefan_max_j, s.binomial_half_max_n));
  }
  rep.sort();
  return rep;
}

}  // namespace gr4242::verification
