#pragma once

#include <stdexcept>
#include <string>

namespace gr4242 {

// Argument outside the mathematical (or numerically supported) domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative evaluation did not reach its tolerance. Carries the best
// estimate available when the iteration stopped.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double err_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), err_estimate_(err_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double err_estimate() const noexcept { return err_estimate_; }

 private:
  double best_estimate_;
  double err_estimate_;
};

// Two quantities that must agree by construction did not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gr4242
