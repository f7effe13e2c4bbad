#pragma once

#include <string>
#include <vector>

#include "ergomax/rational.hpp"

namespace ergomax {

// Named constants the computed values are checked against. Decimal strings
// are 30-digit truncations; the surd comparisons below are exact.
struct ReferenceEntry {
  std::string name;
  std::string decimal;
};

const std::vector<ReferenceEntry>& reference_table();

// sign of x - (1 + sqrt(2)), exact: x < 1 + sqrt(2) iff x < 1 or (x-1)^2 < 2.
int cmp_one_plus_sqrt2(const Rational& x);

// sign of x - (11 + sqrt(61))/12, exact via 12x - 11 against sqrt(61).
int cmp_melas(const Rational& x);

// Parses one of the decimal strings above into the rational it denotes.
Rational reference_value(const std::string& name);

}  // namespace ergomax
