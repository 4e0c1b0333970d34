#pragma once

#include "polyb/numeric.hpp"

namespace polyb {

enum class SymmetrizedRoute {
  definition,      // Stirling-first-kind weighted poly-Bernoulli values
  explicit_sum,    // closed Stirling-second-kind sum, pure integers
};

/// sum_{j=0}^{k} [k over j] B_m^{(-l-j)}(k).
Integer symmetrized_pb_spb(unsigned m, unsigned l, unsigned k);

/// sum_{j=0}^{min(m,l)} j! (k+j)! {m+1 over j+1} {l+1 over j+1}.
Integer symmetrized_pb_ef(unsigned m, unsigned l, unsigned k);

/// Symmetrized poly-Bernoulli number; the explicit sum is the default route.
Integer symmetrized_pb(unsigned m, unsigned l, unsigned k,
                       SymmetrizedRoute route = SymmetrizedRoute::explicit_sum);

/// sum_{l=0}^{n} B_{n-l}^{(-l-1)}(1), the anti-diagonal sums of the k = 1 table.
Integer diagonal_sum_a136127(unsigned n);

}  // namespace polyb
