#pragma once

// Exact number types shared by every module. Integers and rationals are
// GMP-backed; rationals are always kept in canonical (reduced) form.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace polyb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an argument lies outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a request exceeds a configured resource cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a value that must be an integer is not.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer factorial(unsigned n);

/// Returns the numerator of `value`, throwing IntegralityError otherwise.
Integer require_integer(const Rational& value, const std::string& what);

inline int sign_power(unsigned exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace polyb
