#pragma once

// The alternating anti-diagonal identity for symmetrized poly-Bernoulli
// numbers, its k = 0 and k = 1 specializations, and the auxiliary numbers
// a_{n,j} used to establish it, each computed by independent routes.

#include <utility>
#include <vector>

#include "polyb/numeric.hpp"
#include "polyb/report.hpp"
#include "polyb/symmetrized.hpp"
#include "polyb/tables.hpp"

namespace polyb {

/// a_{n,j} = sum_{l=j}^{n-j} (-1)^l {n-l+1 over j+1} {l+1 over j+1}; 0 when 2j > n.
Integer a_by_definition(unsigned n, unsigned j);

/// a_{n,j} from a_{n+2,j} = (j+1)^2 a_{n,j} - a_{n,j-1}, a_{n,0} = 1 and
/// a_{2j,j} = (-1)^j for even n; 0 for odd n or 2j > n.
Integer a_by_recurrence(unsigned n, unsigned j);

/// Coefficient of x^n in (-1)^j x^{2j} / prod_{i=1}^{j+1} (1 - i^2 x^2).
Integer a_by_series(unsigned n, unsigned j);

/// Table of a_{n,j} for even n <= n_max, built by the recurrence.
class AnjTable {
 public:
  explicit AnjTable(unsigned n_max);

  unsigned n_max() const { return n_max_; }
  /// Any (n, j) with n <= n_max; zero outside the support.
  const Integer& at(unsigned n, unsigned j) const;

 private:
  unsigned n_max_;
  std::vector<std::vector<Integer>> rows_;  // rows_[n / 2][j], j = 0..n/2
};

/// sum_{l=0}^{n} (-1)^l symmetrized(n-l, l, k).
Integer theorem_lhs(unsigned n, unsigned k,
                    SymmetrizedRoute route = SymmetrizedRoute::explicit_sum);

/// k! (-1)^{n/2} G_n(1, 1, k); zero for odd n.
Integer theorem_rhs(unsigned n, unsigned k);

/// sum_{l=0}^{n} (-1)^l B_{n-l}^{(-l)}(0).
Integer alternating_sum_at_zero(unsigned n);

/// sum_{l=0}^{n} (-1)^l B_{n-l}^{(-l-1)}(1).
Integer alternating_sum_at_one(unsigned n);

/// k! + sum_{j=0}^{n/2} j!(k+j)! [k(j+1) a_{n,j} + (j+1)(k+j+1) a_{n+2,j+1}].
/// Vanishes for every even n.
Integer cancellation_sum(unsigned n, unsigned k);

struct VerifyOptions {
  unsigned n_max = 12;
  unsigned k_max = 6;
  unsigned m_max = 10;
  /// Largest pistol size enumerated when comparing polynomial routes.
  unsigned enumeration_cap = 12;
  SymmetrizedRoute theorem_route = SymmetrizedRoute::explicit_sum;
  /// Golden fixtures compared against regenerated tables.
  std::vector<std::pair<ReferenceTable, IntegerTable>> table_fixtures = default_table_fixtures();

  static std::vector<std::pair<ReferenceTable, IntegerTable>> default_table_fixtures();
};

struct VerifyLimits {
  unsigned n_max = 40;
  unsigned k_max = 20;
  unsigned m_max = 30;
  unsigned enumeration_cap = 14;
};

/// Runs every identity family over the requested ranges. Mismatches are
/// report cells; only out-of-range requests throw (ResourceError).
VerificationReport verify_identities(const VerifyOptions& options, const VerifyLimits& limits = {});

}  // namespace polyb
