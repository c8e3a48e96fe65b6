#include "gr4242/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "gr4242/errors.hpp"

namespace gr4242::quadrature {

namespace {

constexpr int kMaxSupportedLevels = 16;
constexpr double kTMax = 4.5;
constexpr double kMinTol = 1e-14;

// A node of the transformed rule at t >= 0. The abscissa on (-1,1) is
// s = tanh(pi/2 sinh t); comp = 1 - s is stored directly.
struct Node {
  double weight;
  double comp;
};

class NodeTables {
 public:
  const std::vector<Node>& level(int k) {
    std::call_once(flags_[k], [this, k] { build(k); });
    return tables_[k];
  }

 private:
  void build(int k) {
    const double h = std::ldexp(1.0, -k);
    std::vector<Node>& out = tables_[k];
    // Level 0 holds t = 0,1,2,...; deeper levels add the odd multiples of h.
    const long step = (k == 0) ? 1 : 2;
    const long first = (k == 0) ? 0 : 1;
    for (long j = first;; j += step) {
      const double t = static_cast<double>(j) * h;
      if (t > kTMax) break;
      const double u = 0.5 * std::numbers::pi * std::sinh(t);
      const double cu = std::cosh(u);
      const double weight = 0.5 * std::numbers::pi * std::cosh(t) / (cu * cu);
      const double comp = 2.0 / (std::exp(2.0 * u) + 1.0);
      out.push_back({weight, comp});
    }
  }

  std::array<std::once_flag, kMaxSupportedLevels + 1> flags_;
  std::array<std::vector<Node>, kMaxSupportedLevels + 1> tables_;
};

NodeTables& tables() {
  static NodeTables instance;
  return instance;
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double checked(double v) {
  if (!std::isfinite(v)) {
    throw ConvergenceError("tanh_sinh: integrand returned a non-finite value", v, INFINITY);
  }
  return v;
}

}  // namespace

QuadratureResult tanh_sinh(const PointIntegrand& f, double lo, double hi, double tol,
                           const TanhSinhOptions& options) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("tanh_sinh requires finite lo < hi");
  }
  if (!(tol >= kMinTol)) {
    throw DomainError("tanh_sinh requires tol >= 1e-14");
  }
  if (options.max_levels < 1 || options.max_levels > kMaxSupportedLevels) {
    throw DomainError("tanh_sinh: max_levels out of range");
  }
  const double half = 0.5 * (hi - lo);

  auto near_hi = [&](double comp) {
    const double from_hi = half * comp;
    double x = hi - from_hi;
    if (x >= hi) x = std::nextafter(hi, lo);
    return Point{x, half * (2.0 - comp), from_hi};
  };
  auto near_lo = [&](double comp) {
    const double from_lo = half * comp;
    double x = lo + from_lo;
    if (x <= lo) x = std::nextafter(lo, hi);
    return Point{x, from_lo, half * (2.0 - comp)};
  };

  QuadratureResult result;
  KahanSum total;
  double previous = 0.0;
  int small_diffs = 0;
  for (int k = 0; k <= options.max_levels; ++k) {
    KahanSum level_sum;
    for (const Node& node : tables().level(k)) {
      if (node.comp == 1.0) {
        level_sum.add(node.weight * checked(f(Point{lo + half, half, half})));
        ++result.evaluations;
        continue;
      }
      const double fr = checked(f(near_hi(node.comp)));
      const double fl = checked(f(near_lo(node.comp)));
      level_sum.add(node.weight * (fr + fl));
      result.evaluations += 2;
    }
    total.add(level_sum.sum);
    const double estimate = half * std::ldexp(total.sum, -k);
    result.value = estimate;
    result.levels = k;
    if (k > 0) {
      result.err_estimate = std::abs(estimate - previous);
      small_diffs = (result.err_estimate <= tol) ? small_diffs + 1 : 0;
      if (k >= options.min_levels && small_diffs >= 2) {
        result.converged = true;
        return result;
      }
    }
    previous = estimate;
  }
  throw ConvergenceError("tanh_sinh did not converge within " + std::to_string(options.max_levels) +
                             " levels (err estimate " + std::to_string(result.err_estimate) + ")",
                         result.value, result.err_estimate);
}

QuadratureResult combine(const QuadratureResult& left, const QuadratureResult& right) {
  return {left.value + right.value, left.err_estimate + right.err_estimate,
          std::max(left.levels, right.levels), left.evaluations + right.evaluations,
          left.converged && right.converged};
}

QuadratureResult integral_I_numeric(double a, double b, double tol) {
  if (!(b > 0.0 && b < a) || !std::isfinite(a)) {
    throw DomainError("integral_I_numeric requires 0 < b < a");
  }
  const double split = 0.5 * b;
  const double a_minus_b = a - b;
  // On [0, b/2] the dominant singularity is ln x at 0.
  auto lower = [a, b](const Point& p) {
    const double x = p.from_lo;
    return std::log(x) / std::sqrt((a - x) * (a + x) * (b - x) * (b + x));
  };
  // On [b/2, b] it is (b - x)^{-1/2}; build b - x and a - x from from_hi.
  auto upper = [a, b, a_minus_b](const Point& p) {
    const double d = p.from_hi;
    const double x = p.x;
    return std::log(x) / std::sqrt((a_minus_b + d) * (a + x) * d * (b + x));
  };
  return combine(tanh_sinh(PointIntegrand(lower), 0.0, split, 0.5 * tol),
                 tanh_sinh(PointIntegrand(upper), split, b, 0.5 * tol));
}

QuadratureResult integral_J_numeric(double c, double tol) {
  if (!(c >= 0.0 && c < 1.0)) {
    throw DomainError("integral_J_numeric requires 0 <= c < 1");
  }
  const double c2 = c * c;
  auto integrand = [c2](const Point& p) {
    const double x = p.x;
    const double log_x = (p.from_hi < 0.5) ? std::log1p(-p.from_hi) : std::log(p.from_lo);
    return log_x / std::sqrt(p.from_hi * (1.0 + x) * (1.0 - c2 * x * x));
  };
  return tanh_sinh(PointIntegrand(integrand), 0.0, 1.0, tol);
}

QuadratureResult integral_4242_1_numeric(double a, double b, double tol) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integral_4242_1_numeric requires a > 0 and b > 0");
  }
  const double a2 = a * a;
  const double b2 = b * b;
  auto integrand = [a2, b2](const Point& p) {
    const double x = p.x;
    const double x2 = x * x;
    const double log_x = (p.from_hi < 0.5) ? std::log1p(-p.from_hi) : std::log(p.from_lo);
    const double direct = 1.0 / std::sqrt((a2 + x2) * (b2 + x2));
    const double folded = 1.0 / std::sqrt((1.0 + a2 * x2) * (1.0 + b2 * x2));
    return log_x * (direct - folded);
  };
  return tanh_sinh(PointIntegrand(integrand), 0.0, 1.0, tol);
}

QuadratureResult lemma51_integral_numeric(unsigned n, double tol) {
  const int power = 2 * static_cast<int>(n);
  auto integrand = [power](const Point& p) {
    const double y = p.x;
    const double one_minus_y2 = p.from_hi * (1.0 + y);
    const double log_term = (y < 0.5) ? std::log1p(-y * y) : std::log(one_minus_y2);
    return std::pow(y, power) * log_term / std::sqrt(one_minus_y2);
  };
  return tanh_sinh(PointIntegrand(integrand), 0.0, 1.0, tol);
}

}  // namespace gr4242::quadrature
