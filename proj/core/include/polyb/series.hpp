#pragma once

// Truncated formal power series in t over exact rationals.

#include <span>
#include <vector>

#include "polyb/numeric.hpp"

namespace polyb {

class TruncatedSeries {
 public:
  /// Zero series of the given order (coefficients of t^0..t^order).
  explicit TruncatedSeries(unsigned order);

  /// Series from explicit coefficients; order is size - 1. Must be non-empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  const Rational& operator[](unsigned m) const { return coeffs_.at(m); }
  Rational& operator[](unsigned m) { return coeffs_.at(m); }

  /// Drops coefficients above `order`; `order` must not exceed the current one.
  TruncatedSeries truncated(unsigned order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Binary operations yield the smaller of the two orders.
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& scalar, TruncatedSeries a);

/// Truncated Cauchy product.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// e^{c t} to order N: coefficients c^m / m!.
TruncatedSeries exp_series(long c, unsigned order);

/// Li_index(u) / u with u = 1 - e^{-t}, to order N.
///
/// Evaluated as sum_{m=1}^{N+1} u^{m-1} / m^index, which is exact at order N
/// because u has no constant term. Supported for index <= 1; larger indices
/// throw DomainError.
TruncatedSeries li_over_u(long index, unsigned order);

}  // namespace polyb
