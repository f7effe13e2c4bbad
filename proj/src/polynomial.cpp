#include "ergomax/polynomial.hpp"

namespace ergomax {

PolynomialFamily PolynomialFamily::linear1() {
  PolynomialFamily fam(1, 1, 1);
  fam.at(0, 0) = Polynomial::variable(1, 0);
  return fam;
}

PolynomialFamily PolynomialFamily::power1(unsigned deg) {
  PolynomialFamily fam(1, 1, 1);
  fam.at(0, 0) = Polynomial::monomial_power(deg, 1, 0);
  return fam;
}

}  // namespace ergomax
