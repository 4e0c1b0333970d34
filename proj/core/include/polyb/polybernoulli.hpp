#pragma once

#include "polyb/numeric.hpp"

namespace polyb {

/// B_m^{(index)}(x): m! times the coefficient of t^m in
/// e^{-x t} Li_index(1 - e^{-t}) / (1 - e^{-t}).
///
/// Supported for index <= 1. Negative x is accepted; the result is then an
/// arbitrary rational.
Rational poly_bernoulli(unsigned m, long index, long x);

/// A poly-Bernoulli value tagged with its parameters. For index <= 0 and
/// x >= 0 the constructor checks that the value is an integer.
struct PolyBernoulliValue {
  PolyBernoulliValue(unsigned m, long index, long x);

  unsigned m;
  long index;
  long x;
  Rational value;
};

/// Same as poly_bernoulli but returns an Integer, throwing IntegralityError
/// if the value has a nontrivial denominator.
Integer poly_bernoulli_integer(unsigned m, long index, long x);

/// Classical Bernoulli number B_m = B_m^{(1)}(1), memoized.
/// With this generating function B_1 = -1/2.
Rational bernoulli(unsigned m);

/// Genocchi number G_n = 2 (2^{n+2} - 1) |B_{n+2}|. Zero for odd n.
Integer genocchi(unsigned n);

}  // namespace polyb
