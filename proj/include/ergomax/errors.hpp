#pragma once

#include <stdexcept>
#include <string>

namespace ergomax {

// Raised when a configured enumeration or size cap would be exceeded.
// The CLI maps this to exit code 3.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on inputs outside an operation's domain (nonpositive exponents,
// zero signals where a ratio is requested, arity mismatches, ...).
// The CLI maps this to exit code 2.
using domain_error = std::domain_error;

}  // namespace ergomax
