#include "polyb/symmetrized.hpp"

#include <algorithm>
#include <string>

#include "polyb/polybernoulli.hpp"
#include "polyb/stirling.hpp"

namespace polyb {

Integer symmetrized_pb_spb(unsigned m, unsigned l, unsigned k) {
  Rational total = 0;
  for (unsigned j = 0; j <= k; ++j) {
    const long index = -static_cast<long>(l + j);
    total += Rational(stirling1_unsigned(k, j)) * poly_bernoulli(m, index, static_cast<long>(k));
  }
  total.canonicalize();
  return require_integer(total, "symmetrized B_" + std::to_string(m) + "^(-" + std::to_string(l) +
                                    ")(" + std::to_string(k) + ")");
}

Integer symmetrized_pb_ef(unsigned m, unsigned l, unsigned k) {
  Integer total = 0;
  for (unsigned j = 0; j <= std::min(m, l); ++j) {
    total += factorial(j) * factorial(k + j) * stirling2(m + 1, j + 1) * stirling2(l + 1, j + 1);
  }
  return total;
}

Integer symmetrized_pb(unsigned m, unsigned l, unsigned k, SymmetrizedRoute route) {
  return route == SymmetrizedRoute::definition ? symmetrized_pb_spb(m, l, k)
                                               : symmetrized_pb_ef(m, l, k);
}

Integer diagonal_sum_a136127(unsigned n) {
  Integer total = 0;
  for (unsigned l = 0; l <= n; ++l) {
    total += poly_bernoulli_integer(n - l, -static_cast<long>(l) - 1, 1);
  }
  return total;
}

}  // namespace polyb
