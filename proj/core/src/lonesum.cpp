#include "polyb/lonesum.hpp"

#include <cstdint>
#include <string>

namespace polyb {

BinaryMatrix::BinaryMatrix(unsigned rows, unsigned cols)
    : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, false) {}

BinaryMatrix::BinaryMatrix(unsigned rows, unsigned cols, std::vector<bool> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(rows) * cols) {
    throw DomainError("bit count does not match matrix dimensions");
  }
}

bool is_lonesum(const BinaryMatrix& mat) {
  for (unsigned r1 = 0; r1 < mat.rows(); ++r1) {
    for (unsigned r2 = r1 + 1; r2 < mat.rows(); ++r2) {
      for (unsigned c1 = 0; c1 < mat.cols(); ++c1) {
        for (unsigned c2 = c1 + 1; c2 < mat.cols(); ++c2) {
          const bool a = mat.at(r1, c1), b = mat.at(r1, c2);
          const bool c = mat.at(r2, c1), d = mat.at(r2, c2);
          if (a == d && b == c && a != b) return false;
        }
      }
    }
  }
  return true;
}

namespace {

// A forbidden 2x2 pattern exists between two rows exactly when each row has
// a 1 in some column where the other has a 0.
bool rows_compatible(std::uint32_t a, std::uint32_t b) {
  return (a & ~b) == 0 || (b & ~a) == 0;
}

}  // namespace

Integer count_lonesum(unsigned m, unsigned l, unsigned cap) {
  if (m == 0 || l == 0) return 1;
  if (static_cast<unsigned long>(m) * l > cap) {
    throw ResourceError("lonesum brute force limited to m*l <= " + std::to_string(cap) + ", got " +
                        std::to_string(m) + "x" + std::to_string(l));
  }
  if (m * l > 31) throw ResourceError("lonesum brute force needs m*l <= 31");
  const std::uint32_t row_mask = (std::uint32_t{1} << l) - 1;
  const std::uint64_t total = std::uint64_t{1} << (m * l);
  std::vector<std::uint32_t> rows(m);
  unsigned long count = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool ok = true;
    for (unsigned r = 0; r < m && ok; ++r) {
      rows[r] = static_cast<std::uint32_t>(bits >> (r * l)) & row_mask;
      for (unsigned s = 0; s < r; ++s) {
        if (!rows_compatible(rows[r], rows[s])) {
          ok = false;
          break;
        }
      }
    }
    count += ok ? 1 : 0;
  }
  return Integer(count);
}

}  // namespace polyb
