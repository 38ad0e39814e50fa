#pragma once

#include <stdexcept>
#include <string>

namespace mcpipe {

// Bad input: geometry constraints, config values, schedule bounds. Exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver failure: divergence, non-convergence, NaN fields. Exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mcpipe
