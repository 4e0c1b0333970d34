#include "polyb/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace polyb {

TruncatedSeries::TruncatedSeries(unsigned order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("TruncatedSeries needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, unsigned order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
  if (order > this->order()) throw DomainError("cannot raise the order of a truncated series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  r += b;
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  r -= b;
  return r;
}

TruncatedSeries operator*(const Rational& scalar, TruncatedSeries a) {
  a *= scalar;
  return a;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned order = std::min(a.order(), b.order());
  TruncatedSeries r(order);
  for (unsigned i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= order; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}

TruncatedSeries exp_series(long c, unsigned order) {
  TruncatedSeries s(order);
  Rational term = 1;
  for (unsigned m = 0; m <= order; ++m) {
    s[m] = term;
    term *= c;
    term /= (m + 1);
  }
  return s;
}

namespace {

// Powers u^0 .. u^order of u = 1 - e^{-t}, shared across indices.
class UPowerCache {
 public:
  std::vector<TruncatedSeries> powers(unsigned order) {
    std::lock_guard lock(mutex_);
    if (order_ < order || powers_.empty()) rebuild(order);
    std::vector<TruncatedSeries> out;
    out.reserve(order + 1);
    for (unsigned p = 0; p <= order; ++p) out.push_back(powers_[p].truncated(order));
    return out;
  }

 private:
  void rebuild(unsigned order) {
    TruncatedSeries u = TruncatedSeries::constant(1, order) - exp_series(-1, order);
    powers_.clear();
    powers_.push_back(TruncatedSeries::constant(1, order));
    for (unsigned p = 1; p <= order; ++p) powers_.push_back(powers_.back() * u);
    order_ = order;
  }

  std::mutex mutex_;
  unsigned order_ = 0;
  std::vector<TruncatedSeries> powers_;
};

UPowerCache& upower_cache() {
  static UPowerCache cache;
  return cache;
}

Rational polylog_weight(long index, unsigned m) {
  // 1 / m^index
  if (index >= 0) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), m, static_cast<unsigned long>(index));
    return Rational(Integer(1), den);
  }
  Integer num;
  mpz_ui_pow_ui(num.get_mpz_t(), m, static_cast<unsigned long>(-index));
  return Rational(num);
}

}  // namespace

TruncatedSeries li_over_u(long index, unsigned order) {
  if (index > 1) {
    throw DomainError("li_over_u supports index <= 1, got " + std::to_string(index));
  }
  const auto powers = upower_cache().powers(order);
  TruncatedSeries result(order);
  // u^{m-1} has zero coefficients below t^{m-1}; terms with m-1 > order vanish.
  for (unsigned m = 1; m <= order + 1; ++m) {
    const Rational weight = polylog_weight(index, m);
    const auto& power = powers[m - 1];
    for (unsigned i = m - 1; i <= order; ++i) result[i] += weight * power[i];
  }
  return result;
}

}  // namespace polyb
