#pragma once

#include <stdexcept>
#include <string>

namespace secrecy {

// Malformed probability objects, bad dimensions, out-of-range parameters.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// API misuse (overlapping axis sets, unknown axis names, ...).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration or codebook size beyond the configured exact-computation budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature non-convergence, closed-form domain violations.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace secrecy
