#include "polyb/pistols.hpp"

#include <map>
#include <string>

namespace polyb {

namespace {

void check_size(unsigned n, unsigned cap) {
  if (n == 0 || n % 2 == 1) {
    throw DomainError("pistol size must be a positive even integer, got " + std::to_string(n));
  }
  if (n > cap) {
    throw ResourceError("pistol size " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap));
  }
}

class PistolSearch {
 public:
  PistolSearch(unsigned n, const std::function<void(std::span<const unsigned>)>& visit)
      : n_(n), visit_(visit), targets_(n), hits_(n + 1, 0) {}

  void run() { place(1); }

 private:
  void place(unsigned x) {
    if (x > n_) {
      visit_(targets_);
      return;
    }
    const unsigned lowest = (x % 2 == 0) ? x : x + 1;
    for (unsigned v = lowest; v <= n_; v += 2) {
      // Only positions <= v can reach v, so an even position must leave its
      // own value covered. This prune never cuts a completable prefix.
      if (x % 2 == 0 && v != x && hits_[x] == 0) continue;
      targets_[x - 1] = v;
      ++hits_[v];
      place(x + 1);
      --hits_[v];
    }
  }

  unsigned n_;
  const std::function<void(std::span<const unsigned>)>& visit_;
  std::vector<unsigned> targets_;
  std::vector<unsigned> hits_;
};

}  // namespace

bool is_pistol(std::span<const unsigned> targets) {
  const auto n = targets.size();
  if (n == 0 || n % 2 == 1) return false;
  std::vector<bool> hit(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned v = targets[i];
    if (v % 2 == 1 || v == 0 || v > n || v < i + 1) return false;
    hit[v] = true;
  }
  for (std::size_t v = 2; v <= n; v += 2) {
    if (!hit[v]) return false;
  }
  return true;
}

Pistol::Pistol(std::vector<unsigned> targets) : targets_(std::move(targets)) {
  if (!is_pistol(targets_)) throw DomainError("sequence is not a surjective pistol");
}

PistolStats pistol_stats(std::span<const unsigned> targets) {
  PistolStats stats;
  const unsigned n = static_cast<unsigned>(targets.size());
  unsigned running_max = 0;
  for (unsigned x = 1; x <= n; ++x) {
    const unsigned v = targets[x - 1];
    if (v > running_max) {
      ++stats.bulging;
      running_max = v;
    }
    if (v == x) ++stats.fixed;
    if (x < n && v == n) ++stats.maximal;
  }
  return stats;
}

void for_each_pistol(unsigned n, const std::function<void(std::span<const unsigned>)>& visit,
                     unsigned cap) {
  check_size(n, cap);
  PistolSearch(n, visit).run();
}

std::vector<Pistol> enumerate_pistols(unsigned n, unsigned cap) {
  std::vector<Pistol> out;
  for_each_pistol(
      n, [&](std::span<const unsigned> t) { out.emplace_back(std::vector<unsigned>(t.begin(), t.end())); },
      cap);
  return out;
}

Integer count_pistols(unsigned n, unsigned cap) {
  unsigned long count = 0;
  for_each_pistol(n, [&](std::span<const unsigned>) { ++count; }, cap);
  return Integer(count);
}

MultiPoly dumont_foata_by_enumeration(unsigned n, unsigned cap) {
  if (n == 0) return MultiPoly::constant(1);
  check_size(n, cap);
  // Tally in machine integers first; the number of distinct triples is tiny.
  std::map<Exponent, unsigned long> tally;
  for_each_pistol(
      n,
      [&](std::span<const unsigned> t) {
        const auto s = pistol_stats(t);
        ++tally[{s.bulging, s.fixed, s.maximal}];
      },
      cap);
  MultiPoly out;
  for (const auto& [e, c] : tally) out.add_term(e, Integer(c));
  return out;
}

}  // namespace polyb
