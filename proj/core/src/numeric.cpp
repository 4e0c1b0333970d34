#include "polyb/numeric.hpp"

namespace polyb {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer require_integer(const Rational& value, const std::string& what) {
  if (value.get_den() != 1) {
    throw IntegralityError(what + " is not an integer: " + value.get_str());
  }
  return value.get_num();
}

}  // namespace polyb
