#pragma once

#include <shared_mutex>
#include <vector>

#include "polyb/numeric.hpp"

namespace polyb {

/// Memoized Stirling triangles of both kinds.
///
/// Rows are appended on demand and never modified afterwards. Lookups of
/// already-built rows take a shared lock, so a cache that has been
/// `reserve`d up front can be read from many threads without contention.
class StirlingCache {
 public:
  /// Stirling number of the second kind {n over k}; 0 when k > n.
  Integer second_kind(unsigned n, unsigned k);

  /// Unsigned Stirling number of the first kind [n over k]; 0 when k > n.
  Integer first_kind_unsigned(unsigned n, unsigned k);

  /// Builds both triangles through row `n`.
  void reserve(unsigned n);

  unsigned rows() const;

 private:
  void grow_locked(unsigned n);

  mutable std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> second_;
  std::vector<std::vector<Integer>> first_;
};

/// Process-wide cache used by the free functions below.
StirlingCache& stirling_cache();

Integer stirling2(unsigned n, unsigned k);
Integer stirling1_unsigned(unsigned n, unsigned k);

}  // namespace polyb
