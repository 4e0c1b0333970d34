#pragma once

// The four 5x5 reference tables of poly-Bernoulli values: B at x = 0, 1, 2
// and the symmetrized numbers at k = 2. Rows are indexed by l, columns by m.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyb/numeric.hpp"

namespace polyb {

enum class ReferenceTable { one_left, one_right, two_left, two_right };

using IntegerTable = std::vector<std::vector<Integer>>;

std::string_view table_name(ReferenceTable table);
std::optional<ReferenceTable> parse_table_name(std::string_view name);

/// Entry (row l, column m) of the named table, computed from the library.
Integer table_entry(ReferenceTable table, unsigned l, unsigned m);

/// size x size block, rows l = 0..size-1, columns m = 0..size-1.
IntegerTable generate_table(ReferenceTable table, unsigned size);

/// The printed 5x5 values, used as golden fixtures.
const IntegerTable& printed_table(ReferenceTable table);

}  // namespace polyb
