#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "gr4242/elliptic.hpp"
#include "gr4242/exact_series.hpp"
#include "gr4242/identities.hpp"
#include "gr4242/kdv_phase.hpp"
#include "gr4242/report.hpp"
#include "gr4242/verification.hpp"

namespace gr4242::cli {

namespace {

namespace v = verification;
using report::VerificationReport;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

std::string num(double x) { return report::format_number(x); }

// Config value for a quantity that may be undefined at the given input.
std::string value_or_error(const std::function<double()>& fn) {
  try {
    return num(fn());
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
}

struct Common {
  double tol = 1e-9;
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--tol", common.tol, "Cross-route tolerance")->capture_default_str();
  sub->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--out", common.out_path, "Write the report to this file instead of stdout");
}

report::Format parse_format(const std::string& s) {
  if (s == "json") return report::Format::kJson;
  if (s == "csv") return report::Format::kCsv;
  return report::Format::kText;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify the log-weighted elliptic integral entry and every route to it", "gr4242"};
  app.require_subcommand(1, 1);
  Common common;

  double a = 0.0, b = 0.0, c = 0.0, x = 0.0, k = 0.0, gamma = 0.5, kalpha = 0.0;
  unsigned terms = 200, max_n = 100, max_j = 60, binomial_max_n = 30, c_points = 25;
  std::vector<double> a_values = v::GridSpec::defaults().a_values;
  std::vector<double> b_values = v::GridSpec::defaults().b_values;

  auto* verify_entry = app.add_subcommand("verify-entry", "Closed form, quadrature and series routes for I(a,b)");
  verify_entry->add_option("--a", a)->required();
  verify_entry->add_option("--b", b)->required();

  auto* verify_half_line = app.add_subcommand("verify-4242-1", "Half-line companion entry, closed form vs quadrature");
  verify_half_line->add_option("--a", a)->required();
  verify_half_line->add_option("--b", b)->required();

  auto* verify_grid = app.add_subcommand("verify-grid", "I(a,b) over an (a,b) grid and J routes over c grids");
  verify_grid->add_option("--a-values", a_values)->capture_default_str();
  verify_grid->add_option("--b-values", b_values)->capture_default_str();
  verify_grid->add_option("--c-points", c_points, "Points per c grid")->capture_default_str();

  auto* eval_f = app.add_subcommand("eval-f", "F(x) by series, closed form and the J route");
  eval_f->add_option("--x", x)->required();

  auto* eval_k = app.add_subcommand("eval-k", "K(k) and E(k) by AGM, checked against quadrature");
  eval_k->add_option("--k", k)->required();

  auto* j_compare = app.add_subcommand("j-compare", "All routes to J(c), pairwise");
  j_compare->add_option("--c", c)->required();

  auto* weier = app.add_subcommand("weierstrass", "Lattice data and sigma identities at c");
  weier->add_option("--c", c)->required();

  auto* ode = app.add_subcommand("ode-check", "Fourth-order ODE applied to the exact series of F");
  ode->add_option("--terms", terms)->capture_default_str();

  auto* telescope = app.add_subcommand("telescope-check", "Telescoping certificate and harmonic recurrence");
  telescope->add_option("--max-n", max_n)->capture_default_str();

  auto* stefan = app.add_subcommand("stefan-check", "Exact a_l sum identity and binomial forms");
  stefan->add_option("--max-j", max_j)->capture_default_str();
  stefan->add_option("--binomial-max-n", binomial_max_n)->capture_default_str();

  auto* theta = app.add_subcommand("theta0", "KdV shock phase, closed form vs quadrature");
  theta->add_option("--a", a, "Inner branch point, 0 < a < 1")->required();
  theta->add_option("--gamma", gamma)->capture_default_str();
  theta->add_option("--kalpha", kalpha, "Value of K(alpha), taken as given")->capture_default_str();

  auto* report_all = app.add_subcommand("report-all", "The full default battery");

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) add_common(sub, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitPass;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  VerificationReport rep;
  try {
    require(common.tol > 0.0 && std::isfinite(common.tol), "--tol must be positive");
    v::Tolerances tol;
    tol.cross_route = common.tol;

    const CLI::App* chosen = app.get_subcommands().front();
    std::vector<std::pair<std::string, std::string>> config{{"command", chosen->get_name()},
                                                            {"tol", num(common.tol)}};

    if (*verify_entry) {
      require(b > 0.0 && b < a && std::isfinite(a), "verify-entry requires 0 < b < a");
      rep.append(v::entry_checks(a, b, tol));
      config.insert(config.end(), {{"a", num(a)}, {"b", num(b)},
                                   {"I_closed", value_or_error([&] { return identities::I_closed(a, b); })}});
    } else if (*verify_half_line) {
      require(b > 0.0 && b < a && std::isfinite(a), "verify-4242-1 requires 0 < b < a");
      rep.append(v::half_line_checks(a, b, tol));
      config.insert(config.end(),
                    {{"a", num(a)}, {"b", num(b)},
                     {"closed", value_or_error([&] { return identities::entry_4242_1_closed(a, b); })}});
    } else if (*verify_grid) {
      v::GridSpec g;
      g.tol = tol;
      g.a_values = a_values;
      g.b_values = b_values;
      g.j_four_route_c = v::linspace(0.05, 0.7, c_points);
      g.j_wide_c = v::linspace(0.05, 0.95, c_points);
      rep = v::run_verification(g);
      config.insert(config.end(), rep.config.begin(), rep.config.end());
    } else if (*eval_f) {
      require(x >= 0.0 && std::isfinite(x), "eval-f requires x >= 0");
      if (x == 0.0) {
        for (auto& r : v::limit_checks(tol)) {
          if (r.name == "limit.F_at_zero") rep.add(std::move(r));
        }
      } else {
        rep.append(v::f_checks(x, tol));
      }
      config.insert(config.end(),
                    {{"x", num(x)},
                     {"series", value_or_error([&] { return series::eval_F(x, 1e-14); })},
                     {"closed", value_or_error([&] { return identities::F_closed(x); })},
                     {"quadrature_route", value_or_error([&] { return identities::F_via_J(x); })}});
    } else if (*eval_k) {
      require(k >= 0.0 && k <= elliptic::kMaxModulus, "eval-k requires 0 <= k <= 1 - 1e-8");
      rep.append(v::elliptic_checks(k, tol));
      config.insert(config.end(), {{"k", num(k)},
                                   {"K", value_or_error([&] { return elliptic::elliptic_k(k); })},
                                   {"E", value_or_error([&] { return elliptic::elliptic_e(k); })}});
    } else if (*j_compare) {
      require(c > 0.0 && c < 1.0, "j-compare requires 0 < c < 1");
      rep.append(v::j_checks(c, tol, true, false));
      config.emplace_back("c", num(c));
    } else if (*weier) {
      require(c > 0.0 && c < 1.0, "weierstrass requires 0 < c < 1");
      rep.append(v::lattice_checks(c, tol));
      config.emplace_back("c", num(c));
    } else if (*ode) {
      require(terms >= 5, "ode-check requires --terms >= 5");
      rep.append(v::ode_checks(terms));
      config.emplace_back("terms", std::to_string(terms));
    } else if (*telescope) {
      rep.append(v::telescope_checks(max_n));
      rep.append(v::harmonic_checks(max_n));
      config.emplace_back("max_n", std::to_string(max_n));
    } else if (*stefan) {
      require(max_j >= 1, "stefan-check requires --max-j >= 1");
      rep.append(v::stefan_checks(max_j, binomial_max_n));
      config.insert(config.end(),
                    {{"max_j", std::to_string(max_j)}, {"binomial_max_n", std::to_string(binomial_max_n)}});
    } else if (*theta) {
      require(a > 0.0 && a < 1.0, "theta0 requires 0 < a < 1");
      require(gamma > 0.0 && std::isfinite(gamma), "theta0 requires gamma > 0");
      require(std::isfinite(kalpha), "theta0 requires a finite --kalpha");
      rep.append(v::theta0_checks(a, gamma, tol));
      const kdv::ShockParams p(a, gamma, kalpha);
      config.insert(config.end(), {{"a", num(a)},
                                   {"b", num(p.b())},
                                   {"gamma", num(gamma)},
                                   {"kalpha", num(kalpha)},
                                   {"theta0", value_or_error([&] { return kdv::theta0(p); })}});
    } else if (*report_all) {
      v::GridSpec g = v::GridSpec::defaults();
      g.tol = tol;
      rep = v::run_verification(g);
      config.insert(config.end(), rep.config.begin(), rep.config.end());
    }
    rep.sort();
    rep.config = std::move(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const report::Format format = parse_format(common.format);
  if (common.out_path.empty()) {
    report::write(out, rep, format);
  } else {
    std::ofstream file(common.out_path);
    if (!file) {
      err << "error: cannot open " << common.out_path << " for writing\n";
      return kExitUsage;
    }
    report::write(file, rep, format);
  }
  return rep.all_pass() ? kExitPass : kExitFail;
}

}  // namespace gr4242::cli
