#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slorbits {

/// Raised when a matrix fails the det = 1 (mod n) membership test.
/// Carries the offending determinant so callers can report it.
class NotInSlError : public std::domain_error {
 public:
  NotInSlError(std::int64_t det, int m, std::int64_t n)
      : std::domain_error("not in SL(" + std::to_string(m) + ", Z_" +
                          std::to_string(n) + "): det = " + std::to_string(det)),
        det_(det) {}

  std::int64_t det() const { return det_; }

 private:
  std::int64_t det_;
};

/// Raised instead of starting an enumeration whose candidate count exceeds
/// the configured budget. Never a silent truncation.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::int64_t budget)
      : std::runtime_error(what), budget_(budget) {}

  std::int64_t budget() const { return budget_; }

 private:
  std::int64_t budget_;
};

}  // namespace slorbits
