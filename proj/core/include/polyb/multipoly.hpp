#pragma once

// Sparse integer polynomials in x, y, z and dense univariate integer
// polynomials in z.

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "polyb/numeric.hpp"

namespace polyb {

struct Exponent {
  unsigned x = 0;
  unsigned y = 0;
  unsigned z = 0;

  unsigned total() const { return x + y + z; }
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Integer polynomial in three variables. Zero coefficients are never
/// stored, so equal polynomials have identical term maps.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  MultiPoly() = default;

  static MultiPoly constant(const Integer& c);
  static MultiPoly monomial(const Integer& c, Exponent e);
  static MultiPoly x();
  static MultiPoly y();
  static MultiPoly z();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(Exponent e) const;

  /// Adds c * (monomial e), dropping the term if it cancels.
  void add_term(Exponent e, const Integer& c);

  /// Largest total degree; 0 for constants and the zero polynomial.
  unsigned total_degree() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  Terms terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b);

/// Substitutes z -> z + 1.
MultiPoly mp_shift_z(const MultiPoly& a);

Integer mp_eval(const MultiPoly& a, const Integer& x, const Integer& y, const Integer& z);

/// Reorders variables: result(v0, v1, v2) = a(v[perm[0]], v[perm[1]], v[perm[2]]),
/// i.e. the exponent of output variable perm[i] is the input exponent of variable i.
MultiPoly mp_permute(const MultiPoly& a, const std::array<int, 3>& perm);

/// Exact quotient by x^ex y^ey z^ez; throws DomainError if some term is not divisible.
MultiPoly mp_divide_monomial(const MultiPoly& a, Exponent e);
bool mp_divisible_by_monomial(const MultiPoly& a, Exponent e);

/// "coeff e_x e_y e_z" per line, terms in ascending exponent order.
std::string to_term_lines(const MultiPoly& a);

/// Parses the term-line form produced by to_term_lines.
MultiPoly parse_term_lines(const std::string& text);

/// Human-readable form such as "x^2*y^2*z + x^2*y*z^2".
std::string to_display_string(const MultiPoly& a);

/// Dense univariate integer polynomial in z, coefficient of z^i at index i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coeffs);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Integer eval(const Integer& z) const;
  /// Substitutes z -> z + 1.
  UniPoly shifted() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Specializes x = y = 1, keeping z.
UniPoly specialize_xy_one(const MultiPoly& a);

std::string to_display_string(const UniPoly& p);

}  // namespace polyb
