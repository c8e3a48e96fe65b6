#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gr4242/closure_ode.hpp"
#include "gr4242/errors.hpp"
#include "gr4242/identities.hpp"

using namespace gr4242;
using namespace gr4242::series;

TEST_CASE("finite differences on a known function") {
  const Derivatives d = derivatives_order4([](double t) { return std::sin(t); }, 0.7, 0.02);
  CHECK(d.d[0] == doctest::Approx(std::sin(0.7)).epsilon(1e-15));
  CHECK(std::abs(d.d[1] - std::cos(0.7)) <= 1e-10);
  CHECK(std::abs(d.d[2] + std::sin(0.7)) <= 1e-9);
  CHECK(std::abs(d.d[3] + std::cos(0.7)) <= 1e-7);
  CHECK(std::abs(d.d[4] - std::sin(0.7)) <= 1e-5);
}

TEST_CASE("both K-composites satisfy the second-order closure ODE") {
  for (KComposite which : {KComposite::kSqrt16x, KComposite::kInvSqrt}) {
    for (double x : {0.01, 0.02, 0.1, 0.25, 0.5}) {
      CAPTURE(x);
      const OdeResidual r = closure_ode_check_K_branch(which, x, default_step(x));
      CHECK(r.scale > 0.0);
      CHECK(r.relative() <= kClosureTolerance);
    }
  }
}

TEST_CASE("the logarithmic factor satisfies its ODE") {
  for (double x : {0.01, 0.05, 0.25, 0.5}) {
    CAPTURE(x);
    CHECK(closure_ode_check_log_branch(x, default_step(x)).relative() <= kClosureTolerance);
  }
}

TEST_CASE("swapping the two operators is detected") {
  // The log factor does not satisfy the K operator, nor vice versa.
  const double x = 0.05, h = default_step(x);
  const Derivatives d = derivatives_order2(log_composite, x, h);
  const double s = 16 * x + 1;
  const double wrong = x * s * s * d.d[2] + s * s * d.d[1] - 4 * d.d[0];
  CHECK(std::abs(wrong) / std::max({std::abs(d.d[0]), std::abs(x * d.d[1]), std::abs(x * x * d.d[2])}) > 1e-2);
}

TEST_CASE("standard K differential equation") {
  for (double k : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    CAPTURE(k);
    CHECK(standard_k_ode_residual(k, default_step_modulus(k)).relative() <= kClosureTolerance);
  }
  CHECK_THROWS_AS(standard_k_ode_residual(0.99, 0.01), DomainError);
}

TEST_CASE("closed form of F satisfies the fourth-order ODE") {
  for (double x : {0.01, 0.03, 0.1, 0.25, 0.5}) {
    CAPTURE(x);
    const OdeResidual r = fourth_order_residual(identities::F_closed, x, default_step_fourth_order(x));
    CHECK(r.relative() <= kClosureTolerance);
  }
  // exp is not a solution.
  const double x = 0.1;
  CHECK(fourth_order_residual([](double t) { return std::exp(t); }, x, default_step_fourth_order(x)).relative() > 1e-2);
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(closure_ode_check_K_branch(KComposite::kSqrt16x, 0.0, 1e-3), DomainError);
  CHECK_THROWS_AS(closure_ode_check_K_branch(KComposite::kSqrt16x, 0.01, 0.01), DomainError);
  CHECK_THROWS_AS(closure_ode_check_log_branch(-0.1, 1e-3), DomainError);
  CHECK_THROWS_AS(fourth_order_residual(identities::F_closed, 0.01, 0.01), DomainError);
  CHECK_THROWS_AS(k_composite(KComposite::kInvSqrt, 0.0), DomainError);
  CHECK_THROWS_AS(log_composite(0.0), DomainError);
}
