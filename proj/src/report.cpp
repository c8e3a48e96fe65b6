#include "gr4242/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <tuple>

namespace gr4242::report {

CheckResult compare(std::string name, Inputs inputs, double lhs, double rhs, double tol) {
  CheckResult r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.abs_err = std::abs(lhs - rhs);
  if (rhs != 0.0) {
    r.rel_err = r.abs_err / std::abs(rhs);
  } else {
    r.rel_err = (r.abs_err == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
  }
  // NaN on either side fails both comparisons.
  r.pass = r.abs_err <= tol || r.rel_err <= tol;
  return r;
}

CheckResult residual(std::string name, Inputs inputs, double value, double tol) {
  CheckResult r = compare(std::move(name), std::move(inputs), value, 0.0, tol);
  r.rel_err = r.abs_err;
  r.pass = r.abs_err <= tol;
  return r;
}

CheckResult exact(std::string name, Inputs inputs, long failures, std::string message) {
  CheckResult r = residual(std::move(name), std::move(inputs), static_cast<double>(failures), 0.0);
  r.message = std::move(message);
  return r;
}

CheckResult failed(std::string name, Inputs inputs, double tol, std::string message) {
  CheckResult r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.lhs = r.rhs = r.abs_err = r.rel_err = std::numeric_limits<double>::quiet_NaN();
  r.tol = tol;
  r.pass = false;
  r.message = std::move(message);
  return r;
}

void VerificationReport::add(CheckResult check) {
  (check.pass ? n_pass : n_fail) += 1;
  checks.push_back(std::move(check));
}

void VerificationReport::append(std::vector<CheckResult> more) {
  for (auto& c : more) add(std::move(c));
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& x, const CheckResult& y) {
    return std::tie(x.name, x.inputs) < std::tie(y.name, y.inputs);
  });
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (ch < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += static_cast<char>(ch);
        }
    }
  }
  return out + "\"";
}

std::string joined_inputs(const Inputs& inputs) {
  std::string out;
  for (const auto& [key, value] : inputs) {
    if (!out.empty()) out += ';';
    out += key + "=" + format_number(value);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void write_json(std::ostream& os, const VerificationReport& report) {
  os << "{\n  \"config\": {";
  for (std::size_t i = 0; i < report.config.size(); ++i) {
    os << (i ? ", " : "") << json_string(report.config[i].first) << ": "
       << json_string(report.config[i].second);
  }
  os << "},\n  \"checks\": [";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckResult& c = report.checks[i];
    os << (i ? "," : "") << "\n    {\"check\": " << json_string(c.name) << ", \"inputs\": {";
    for (std::size_t j = 0; j < c.inputs.size(); ++j) {
      os << (j ? ", " : "") << json_string(c.inputs[j].first) << ": "
         << json_number(c.inputs[j].second);
    }
    os << "}, \"lhs\": " << json_number(c.lhs) << ", \"rhs\": " << json_number(c.rhs)
       << ", \"abs_err\": " << json_number(c.abs_err) << ", \"rel_err\": " << json_number(c.rel_err)
       << ", \"tol\": " << json_number(c.tol) << ", \"pass\": " << (c.pass ? "true" : "false");
    if (!c.message.empty()) os << ", \"message\": " << json_string(c.message);
    os << "}";
  }
  os << (report.checks.empty() ? "" : "\n  ") << "],\n  \"n_pass\": " << report.n_pass
     << ",\n  \"n_fail\": " << report.n_fail << ",\n  \"pass\": " << (report.all_pass() ? "true" : "false")
     << "\n}\n";
}

void write_csv(std::ostream& os, const VerificationReport& report) {
  os << "check,inputs,lhs,rhs,abs_err,rel_err,tol,pass,message\n";
  for (const CheckResult& c : report.checks) {
    os << csv_field(c.name) << ',' << csv_field(joined_inputs(c.inputs)) << ','
       << format_number(c.lhs) << ',' << format_number(c.rhs) << ',' << format_number(c.abs_err)
       << ',' << format_number(c.rel_err) << ',' << format_number(c.tol) << ','
       << (c.pass ? "true" : "false") << ',' << csv_field(c.message) << '\n';
  }
}

void write_text(std::ostream& os, const VerificationReport& report) {
  for (const CheckResult& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.inputs.empty()) os << " [" << joined_inputs(c.inputs) << "]";
    os << " lhs=" << format_number(c.lhs) << " rhs=" << format_number(c.rhs)
       << " abs_err=" << format_number(c.abs_err) << " rel_err=" << format_number(c.rel_err)
       << " tol=" << format_number(c.tol);
    if (!c.message.empty()) os << " (" << c.message << ")";
    os << '\n';
  }
  os << report.checks.size() << " checks: " << report.n_pass << " passed, " << report.n_fail
     << " failed\n";
}

void write(std::ostream& os, const VerificationReport& report, Format format) {
  switch (format) {
    case Format::kJson: write_json(os, report); break;
    case Format::kCsv: write_csv(os, report); break;
    case Format::kText: write_text(os, report); break;
  }
}

}  // namespace gr4242::report
