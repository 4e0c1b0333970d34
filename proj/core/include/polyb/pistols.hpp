#pragma once

// Surjective pistols: maps p on {1..n} onto {2, 4, ..., n} with p(x) >= x,
// for even n, together with the Dumont-Foata statistics.

#include <functional>
#include <span>
#include <vector>

#include "polyb/multipoly.hpp"
#include "polyb/numeric.hpp"

namespace polyb {

inline constexpr unsigned kDefaultPistolCap = 14;

class Pistol {
 public:
  /// targets[i] is p(i + 1). Throws DomainError unless the sequence is a
  /// surjective pistol of even size.
  explicit Pistol(std::vector<unsigned> targets);

  unsigned size() const { return static_cast<unsigned>(targets_.size()); }
  /// p(x) for 1-based x.
  unsigned operator()(unsigned x) const { return targets_.at(x - 1); }
  std::span<const unsigned> targets() const { return targets_; }

  friend auto operator<=>(const Pistol&, const Pistol&) = default;

 private:
  std::vector<unsigned> targets_;
};

bool is_pistol(std::span<const unsigned> targets);

struct PistolStats {
  unsigned bulging = 0;
  unsigned fixed = 0;
  unsigned maximal = 0;

  friend auto operator<=>(const PistolStats&, const PistolStats&) = default;
};

PistolStats pistol_stats(std::span<const unsigned> targets);
inline PistolStats pistol_stats(const Pistol& p) { return pistol_stats(p.targets()); }

/// Calls `visit` once per pistol of size n, in lexicographic order of the
/// target sequence. The span is only valid during the call.
/// Throws DomainError for odd or zero n and ResourceError when n > cap.
void for_each_pistol(unsigned n, const std::function<void(std::span<const unsigned>)>& visit,
                     unsigned cap = kDefaultPistolCap);

std::vector<Pistol> enumerate_pistols(unsigned n, unsigned cap = kDefaultPistolCap);

Integer count_pistols(unsigned n, unsigned cap = kDefaultPistolCap);

/// sum over pistols of x^b y^f z^m; n = 0 gives 1.
MultiPoly dumont_foata_by_enumeration(unsigned n, unsigned cap = kDefaultPistolCap);

}  // namespace polyb
