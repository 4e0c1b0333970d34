#include "polyb/polybernoulli.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "polyb/series.hpp"

namespace polyb {

namespace {

// li_over_u is the expensive factor and does not depend on x; keep one
// series per index at the largest order seen so far.
class LiSeriesCache {
 public:
  Rational coefficient(long index, unsigned i, unsigned order) {
    std::lock_guard lock(mutex_);
    auto it = series_.find(index);
    if (it == series_.end() || it->second.order() < order) {
      // Grow geometrically so sweeps over m do not rebuild every step.
      unsigned target = order;
      if (it != series_.end()) target = std::max(order, 2 * it->second.order());
      it = series_.insert_or_assign(index, li_over_u(index, target)).first;
    }
    return it->second[i];
  }

 private:
  std::mutex mutex_;
  std::map<long, TruncatedSeries> series_;
};

LiSeriesCache& li_cache() {
  static LiSeriesCache cache;
  return cache;
}

}  // namespace

Rational poly_bernoulli(unsigned m, long index, long x) {
  if (index > 1) {
    throw DomainError("poly_bernoulli supports index <= 1, got " + std::to_string(index));
  }
  // m! [t^m] e^{-xt} L(t) = sum_i C(m, i) (-x)^i * (m-i)! [t^{m-i}] L(t)
  Rational total = 0;
  Integer power = 1;  // (-x)^i
  Integer binom = 1;  // C(m, i)
  for (unsigned i = 0; i <= m; ++i) {
    const unsigned rest = m - i;
    total += Rational(binom * power * factorial(rest)) * li_cache().coefficient(index, rest, m);
    power *= -x;
    binom *= (m - i);
    binom /= (i + 1);
  }
  total.canonicalize();
  return total;
}

PolyBernoulliValue::PolyBernoulliValue(unsigned m_, long index_, long x_)
    : m(m_), index(index_), x(x_), value(poly_bernoulli(m_, index_, x_)) {
  if (index <= 0 && x >= 0 && value.get_den() != 1) {
    throw IntegralityError("B_" + std::to_string(m) + "^(" + std::to_string(index) + ")(" +
                           std::to_string(x) + ") = " + value.get_str() +
                           " is expected to be an integer");
  }
}

Integer poly_bernoulli_integer(unsigned m, long index, long x) {
  return require_integer(poly_bernoulli(m, index, x),
                         "B_" + std::to_string(m) + "^(" + std::to_string(index) + ")(" +
                             std::to_string(x) + ")");
}

Rational bernoulli(unsigned m) {
  static std::mutex mutex;
  static std::vector<Rational> memo;
  std::lock_guard lock(mutex);
  if (m >= memo.size()) {
    const auto target = std::max<std::size_t>(m + 1, 2 * memo.size());
    for (std::size_t i = memo.size(); i < target; ++i) {
      memo.push_back(poly_bernoulli(static_cast<unsigned>(i), 1, 1));
    }
  }
  return memo[m];
}

Integer genocchi(unsigned n) {
  Rational b = abs(bernoulli(n + 2));
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, n + 2);
  scale = 2 * (scale - 1);
  return require_integer(Rational(scale) * b, "G_" + std::to_string(n));
}

}  // namespace polyb
