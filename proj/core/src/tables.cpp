#include "polyb/tables.hpp"

#include <array>

#include "polyb/polybernoulli.hpp"
#include "polyb/symmetrized.hpp"

namespace polyb {

namespace {

IntegerTable from_rows(std::initializer_list<std::array<long, 5>> rows) {
  IntegerTable out;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (long v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::string_view table_name(ReferenceTable table) {
  switch (table) {
    case ReferenceTable::one_left: return "1-left";
    case ReferenceTable::one_right: return "1-right";
    case ReferenceTable::two_left: return "2-left";
    case ReferenceTable::two_right: return "2-right";
  }
  return "?";
}

std::optional<ReferenceTable> parse_table_name(std::string_view name) {
  for (auto t : {ReferenceTable::one_left, ReferenceTable::one_right, ReferenceTable::two_left,
                 ReferenceTable::two_right}) {
    if (table_name(t) == name) return t;
  }
  return std::nullopt;
}

Integer table_entry(ReferenceTable table, unsigned l, unsigned m) {
  const long index = -static_cast<long>(l);
  switch (table) {
    case ReferenceTable::one_left: return poly_bernoulli_integer(m, index, 0);
    case ReferenceTable::one_right: return poly_bernoulli_integer(m, index, 1);
    case ReferenceTable::two_left: return poly_bernoulli_integer(m, index, 2);
    case ReferenceTable::two_right: return symmetrized_pb(m, l, 2);
  }
  return 0;
}

IntegerTable generate_table(ReferenceTable table, unsigned size) {
  IntegerTable out(size, std::vector<Integer>(size));
  for (unsigned l = 0; l < size; ++l) {
    for (unsigned m = 0; m < size; ++m) out[l][m] = table_entry(table, l, m);
  }
  return out;
}

const IntegerTable& printed_table(ReferenceTable table) {
  static const IntegerTable one_left = from_rows({
      {1, 1, 1, 1, 1},
      {1, 2, 4, 8, 16},
      {1, 4, 14, 46, 146},
      {1, 8, 46, 230, 1066},
      {1, 16, 146, 1066, 6902},
  });
  static const IntegerTable one_right = from_rows({
      {1, 0, 0, 0, 0},
      {1, 1, 1, 1, 1},
      {1, 3, 7, 15, 31},
      {1, 7, 31, 115, 391},
      {1, 15, 115, 675, 3451},
  });
  static const IntegerTable two_left = from_rows({
      {1, -1, 1, -1, 1},
      {1, 0, 0, 0, 0},
      {1, 2, 2, 2, 2},
      {1, 6, 18, 42, 90},
      {1, 14, 86, 374, 1382},
  });
  static const IntegerTable two_right = from_rows({
      {2, 2, 2, 2, 2},
      {2, 8, 20, 44, 92},
      {2, 20, 104, 416, 1472},
      {2, 44, 416, 2744, 15032},
      {2, 92, 1472, 15032, 120632},
  });
  switch (table) {
    case ReferenceTable::one_left: return one_left;
    case ReferenceTable::one_right: return one_right;
    case ReferenceTable::two_left: return two_left;
    case ReferenceTable::two_right: return two_right;
  }
  return one_left;
}

}  // namespace polyb
