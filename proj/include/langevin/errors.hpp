#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace langevin {

// A requested operation cannot be performed with the given object
// (missing Hessian oracle, non-quadratic target, missing M2, ...).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// The closed-form tuning recipe produced parameters that violate the
// preconditions of the corresponding error bound.
class InfeasiblePlanError : public std::runtime_error {
 public:
  InfeasiblePlanError(const std::string& constraint, const std::string& detail)
      : std::runtime_error("infeasible plan: violated " + constraint + " (" + detail + ")"),
        constraint_(constraint) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

// Numerical failure: quadrature did not converge, factorization failed, ...
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// A sampler produced a non-finite state.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& what, std::int64_t step,
                  std::vector<double> last_finite_state = {})
      : NumericError(what), step_(step), last_finite_state_(std::move(last_finite_state)) {}
  std::int64_t step() const { return step_; }
  const std::vector<double>& last_finite_state() const { return last_finite_state_; }

 private:
  std::int64_t step_;
  std::vector<double> last_finite_state_;
};

// Requested (algorithm, metric) pair has no tabulated complexity formula.
class UnsupportedCombinationError : public std::invalid_argument {
 public:
  explicit UnsupportedCombinationError(const std::string& what) : std::invalid_argument(what) {}
};

// Input exceeds a hard size cap.
class CapacityError : public std::invalid_argument {
 public:
  explicit CapacityError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace langevin
