#include "ergomax/references.hpp"

namespace ergomax {

namespace {

int cmp_surd(const Rational& t, long radicand) {
  // sign of t - sqrt(radicand) for t possibly negative
  if (t < 0) return -1;
  Rational d = t * t - radicand;
  return sgn(d);
}

}  // namespace

const std::vector<ReferenceEntry>& reference_table() {
  static const std::vector<ReferenceEntry> table = {
      {"c_3/2", "4"},
      {"c_2", "2.414213562373095048801688724209"},
      {"c_3", "1.677650698804059954962643867932"},
      {"c_5", "1.329917398480480295107817022058"},
      {"one_plus_sqrt2", "2.414213562373095048801688724209"},
      {"melas", "1.567520806325554532844143561313"},
  };
  return table;
}

int cmp_one_plus_sqrt2(const Rational& x) { return cmp_surd(x - 1, 2); }

int cmp_melas(const Rational& x) { return cmp_surd(12 * x - 11, 61); }

Rational reference_value(const std::string& name) {
  for (const auto& e : reference_table())
    if (e.name == name) return parse_rational(e.decimal);
  throw domain_error("unknown reference constant: " + name);
}

}  // namespace ergomax
