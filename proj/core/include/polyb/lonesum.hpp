#pragma once

// Brute-force counting of 0/1 lonesum matrices: matrices with no 2x2
// submatrix equal to [[1,0],[0,1]] or [[0,1],[1,0]].

#include <vector>

#include "polyb/numeric.hpp"

namespace polyb {

inline constexpr unsigned kDefaultLonesumCap = 24;

class BinaryMatrix {
 public:
  BinaryMatrix(unsigned rows, unsigned cols);
  /// Row-major bits; throws DomainError if the length does not match.
  BinaryMatrix(unsigned rows, unsigned cols, std::vector<bool> bits);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  bool at(unsigned r, unsigned c) const { return bits_[r * cols_ + c]; }
  void set(unsigned r, unsigned c, bool v) { bits_[r * cols_ + c] = v; }

 private:
  unsigned rows_;
  unsigned cols_;
  std::vector<bool> bits_;
};

/// Checks every pair of rows against every pair of columns.
bool is_lonesum(const BinaryMatrix& mat);

/// Number of lonesum matrices of size m x l, by exhaustive enumeration.
/// An empty dimension counts the single empty matrix. Throws ResourceError
/// when m * l exceeds `cap`.
Integer count_lonesum(unsigned m, unsigned l, unsigned cap = kDefaultLonesumCap);

}  // namespace polyb
