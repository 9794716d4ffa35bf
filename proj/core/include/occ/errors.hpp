#pragma once

#include <stdexcept>
#include <string>

namespace occ {

// Configuration / input validation failure. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The average-power budget cannot be met (the constraint floors alone exceed
// the budget, so the dual bracket never changes sign). CLI exit code 3.
class InfeasibleBudgetError : public std::runtime_error {
 public:
  explicit InfeasibleBudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (quadrature non-convergence, overflow, ...). CLI exit code 4.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kValidation = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kNumeric = 4;
}  // namespace exit_code

}  // namespace occ
