#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leaftype {

// Malformed input or a violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource ceiling (vertex budget) was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string const& what, std::size_t budget)
      : std::runtime_error(what + " (budget " + std::to_string(budget) + ")"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

// Broken internal invariant; never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace leaftype
