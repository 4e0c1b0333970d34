#include "polyb/dfpoly.hpp"

#include <mutex>
#include <vector>

namespace polyb {

namespace {

// Append-only tables indexed by n, built bottom-up.
template <typename Poly, typename Step>
class RecurrenceTable {
 public:
  RecurrenceTable(Poly first, Poly second, Step step)
      : table_{std::move(first), std::move(second)}, step_(step) {}

  Poly at(unsigned n) {
    std::lock_guard lock(mutex_);
    while (table_.size() <= n) table_.push_back(step_(table_[table_.size() - 2]));
    return table_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<Poly> table_;
  Step step_;
};

MultiPoly f_step(const MultiPoly& prev) {
  static const MultiPoly factor = (MultiPoly::x() + MultiPoly::z()) * (MultiPoly::y() + MultiPoly::z());
  static const MultiPoly z_squared = MultiPoly::monomial(1, {0, 0, 2});
  return factor * mp_shift_z(prev) - z_squared * prev;
}

UniPoly gandhi_step(const UniPoly& prev) {
  static const UniPoly z_z1({0, 1, 1});
  static const UniPoly z_sq({0, 0, 1});
  return z_z1 * prev.shifted() - z_sq * prev;
}

}  // namespace

MultiPoly f_polynomial(unsigned n) {
  if (n == 0) throw DomainError("f_polynomial requires n >= 1");
  // Stored at index n - 1 so that the two seeds are F_1 and F_2.
  static RecurrenceTable table(MultiPoly(), MultiPoly::constant(1), &f_step);
  return table.at(n - 1);
}

MultiPoly dumont_foata_poly(unsigned n) {
  if (n == 0) return MultiPoly::constant(1);
  if (n % 2 == 1) return MultiPoly();
  return MultiPoly::monomial(1, {1, 1, 1}) * f_polynomial(n);
}

UniPoly gandhi_poly(unsigned n) {
  static RecurrenceTable table(UniPoly({1}), UniPoly(), &gandhi_step);
  return table.at(n);
}

}  // namespace polyb
