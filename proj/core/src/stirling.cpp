#include "polyb/stirling.hpp"

#include <mutex>

namespace polyb {

Integer StirlingCache::second_kind(unsigned n, unsigned k) {
  if (k > n) return 0;
  {
    std::shared_lock lock(mutex_);
    if (n < second_.size()) return second_[n][k];
  }
  std::unique_lock lock(mutex_);
  grow_locked(n);
  return second_[n][k];
}

Integer StirlingCache::first_kind_unsigned(unsigned n, unsigned k) {
  if (k > n) return 0;
  {
    std::shared_lock lock(mutex_);
    if (n < first_.size()) return first_[n][k];
  }
  std::unique_lock lock(mutex_);
  grow_locked(n);
  return first_[n][k];
}

void StirlingCache::reserve(unsigned n) {
  std::unique_lock lock(mutex_);
  grow_locked(n);
}

unsigned StirlingCache::rows() const {
  std::shared_lock lock(mutex_);
  return static_cast<unsigned>(second_.size());
}

void StirlingCache::grow_locked(unsigned n) {
  if (second_.empty()) {
    second_.push_back({Integer(1)});
    first_.push_back({Integer(1)});
  }
  for (unsigned row = static_cast<unsigned>(second_.size()); row <= n; ++row) {
    const auto& prev2 = second_[row - 1];
    const auto& prev1 = first_[row - 1];
    std::vector<Integer> next2(row + 1), next1(row + 1);
    // Column 0 stays 0 for row >= 1.
    for (unsigned k = 1; k <= row; ++k) {
      const Integer above2 = (k < row) ? prev2[k] : Integer(0);
      const Integer above1 = (k < row) ? prev1[k] : Integer(0);
      next2[k] = prev2[k - 1] + k * above2;
      next1[k] = prev1[k - 1] + (row - 1) * above1;
    }
    second_.push_back(std::move(next2));
    first_.push_back(std::move(next1));
  }
}

StirlingCache& stirling_cache() {
  static StirlingCache cache;
  return cache;
}

Integer stirling2(unsigned n, unsigned k) { return stirling_cache().second_kind(n, k); }

Integer stirling1_unsigned(unsigned n, unsigned k) {
  return stirling_cache().first_kind_unsigned(n, k);
}

}  // namespace polyb
