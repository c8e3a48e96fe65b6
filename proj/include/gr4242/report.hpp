#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gr4242::report {

using Inputs = std::vector<std::pair<std::string, double>>;

struct CheckResult {
  std::string name;
  Inputs inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string message;  // domain errors, non-convergence
};

/// Numeric comparison; passes iff abs_err <= tol or rel_err <= tol.
CheckResult compare(std::string name, Inputs inputs, double lhs, double rhs, double tol);

/// A residual that must not exceed tol (lhs = residual, rhs = 0).
CheckResult residual(std::string name, Inputs inputs, double value, double tol);

/// Exact family check: lhs counts mismatches, passes only at zero.
CheckResult exact(std::string name, Inputs inputs, long failures, std::string message = {});

/// A check that could not be evaluated.
CheckResult failed(std::string name, Inputs inputs, double tol, std::string message);

struct VerificationReport {
  std::vector<CheckResult> checks;
  long n_pass = 0;
  long n_fail = 0;
  std::vector<std::pair<std::string, std::string>> config;

  void add(CheckResult check);
  void append(std::vector<CheckResult> more);
  bool all_pass() const noexcept { return n_fail == 0; }
  /// Stable order by (name, inputs).
  void sort();
};

enum class Format { kJson, kCsv, kText };

/// 17 significant digits (%.17g), enough to round-trip binary64.
std::string format_number(double v);

void write_json(std::ostream& os, const VerificationReport& report);
void write_csv(std::ostream& os, const VerificationReport& report);
void write_text(std::ostream& os, const VerificationReport& report);
void write(std::ostream& os, const VerificationReport& report, Format format);

}  // namespace gr4242::report
