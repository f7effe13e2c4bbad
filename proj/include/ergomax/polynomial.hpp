#pragma once

#include <map>
#include <vector>

#include "ergomax/rational.hpp"

namespace ergomax {

// k-variate polynomial with integer coefficients, stored sparsely as
// exponent vector -> coefficient. Integer coefficients make P(Z^k) <= Z
// automatic.
class Polynomial {
 public:
  explicit Polynomial(int k = 1) : k_(k) {
    if (k < 1) throw domain_error("polynomial arity must be >= 1");
  }

  int arity() const { return k_; }
  const std::map<std::vector<unsigned>, Integer>& terms() const { return terms_; }

  void add_term(const std::vector<unsigned>& exps, const Integer& coeff) {
    if (static_cast<int>(exps.size()) != k_) throw domain_error("exponent vector arity mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(exps, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer eval(const std::vector<long long>& n) const {
    if (static_cast<int>(n.size()) != k_) throw domain_error("evaluation arity mismatch");
    Integer out(0);
    for (const auto& [exps, coeff] : terms_) {
      Integer term = coeff;
      for (int i = 0; i < k_; ++i) {
        Integer base = zint(n[static_cast<size_t>(i)]);
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), exps[static_cast<size_t>(i)]);
        term *= p;
      }
      out += term;
    }
    return out;
  }

  // Univariate helpers used all over the demos.
  static Polynomial variable(int k = 1, int index = 0) {
    Polynomial p(k);
    std::vector<unsigned> e(static_cast<size_t>(k), 0);
    e[static_cast<size_t>(index)] = 1;
    p.add_term(e, Integer(1));
    return p;
  }
  static Polynomial monomial_power(unsigned deg, int k = 1, int index = 0) {
    Polynomial p(k);
    std::vector<unsigned> e(static_cast<size_t>(k), 0);
    e[static_cast<size_t>(index)] = deg;
    p.add_term(e, Integer(1));
    return p;
  }

  bool operator==(const Polynomial& o) const { return k_ == o.k_ && terms_ == o.terms_; }

 private:
  int k_;
  std::map<std::vector<unsigned>, Integer> terms_;
};

// d x m array of k-variate integer polynomials: entry (i, j) drives the
// exponent of the i-th transformation inside the j-th factor of the average.
struct PolynomialFamily {
  int d = 1;
  int m = 1;
  int k = 1;
  std::vector<std::vector<Polynomial>> polys;  // [d][m]

  PolynomialFamily(int d_, int m_, int k_) : d(d_), m(m_), k(k_) {
    if (d < 1 || m < 1 || k < 1) throw domain_error("polynomial family shape must be positive");
    polys.assign(static_cast<size_t>(d),
                 std::vector<Polynomial>(static_cast<size_t>(m), Polynomial(k)));
  }

  const Polynomial& at(int i, int j) const {
    return polys[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  Polynomial& at(int i, int j) { return polys[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

  // d=m=k=1, P(n) = n.
  static PolynomialFamily linear1();
  // d=m=k=1, P(n) = n^deg.
  static PolynomialFamily power1(unsigned deg);
};

}  // namespace ergomax
