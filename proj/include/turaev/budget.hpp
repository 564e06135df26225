#pragma once

#include <stdexcept>

namespace turaev {

/// Raised when a computation would exceed its configured size or node limit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace turaev
