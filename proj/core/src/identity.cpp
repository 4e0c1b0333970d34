#include "polyb/identity.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "polyb/dfpoly.hpp"
#include "polyb/pistols.hpp"
#include "polyb/polybernoulli.hpp"
#include "polyb/series.hpp"
#include "polyb/stirling.hpp"

namespace polyb {

namespace {

const Integer kZero = 0;

std::string params(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ',';
    out += k;
    out += '=';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

Integer a_by_definition(unsigned n, unsigned j) {
  if (2 * j > n) return 0;
  Integer total = 0;
  for (unsigned l = j; l <= n - j; ++l) {
    Integer term = stirling2(n - l + 1, j + 1) * stirling2(l + 1, j + 1);
    if (l % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

AnjTable::AnjTable(unsigned n_max) : n_max_(n_max) {
  rows_.push_back({Integer(1)});
  for (unsigned n = 2; n <= n_max; n += 2) {
    const auto& prev = rows_.back();
    const unsigned half = n / 2;
    std::vector<Integer> row(half + 1);
    row[0] = 1;
    row[half] = sign_power(half);
    for (unsigned j = 1; j < half; ++j) {
      row[j] = (j + 1) * (j + 1) * prev[j] - prev[j - 1];
    }
    rows_.push_back(std::move(row));
  }
}

const Integer& AnjTable::at(unsigned n, unsigned j) const {
  if (n > n_max_) throw DomainError("AnjTable index n beyond table size");
  if (n % 2 == 1 || 2 * j > n) return kZero;
  return rows_[n / 2][j];
}

Integer a_by_recurrence(unsigned n, unsigned j) {
  static std::mutex mutex;
  static AnjTable table(0);
  std::lock_guard lock(mutex);
  if (table.n_max() < n) table = AnjTable(std::max(n, 2 * table.n_max()));
  return table.at(n, j);
}

Integer a_by_series(unsigned n, unsigned j) {
  if (2 * j > n) return 0;
  TruncatedSeries product = TruncatedSeries::constant(0, n);
  product[2 * j] = sign_power(j);
  for (unsigned i = 1; i <= j + 1; ++i) {
    // 1 / (1 - i^2 x^2) = sum_t i^{2t} x^{2t}
    TruncatedSeries geometric(n);
    Integer ratio = i * i;
    Integer power = 1;
    for (unsigned t = 0; 2 * t <= n; ++t) {
      geometric[2 * t] = power;
      power *= ratio;
    }
    product = product * geometric;
  }
  return require_integer(product[n], "a_{n,j} series coefficient");
}

Integer theorem_lhs(unsigned n, unsigned k, SymmetrizedRoute route) {
  Integer total = 0;
  for (unsigned l = 0; l <= n; ++l) {
    Integer value = symmetrized_pb(n - l, l, k, route);
    if (l % 2 == 0) total += value;
    else total -= value;
  }
  return total;
}

Integer theorem_rhs(unsigned n, unsigned k) {
  if (n % 2 == 1) return 0;
  return factorial(k) * sign_power(n / 2) * gandhi_poly(n).eval(k);
}

Integer alternating_sum_at_zero(unsigned n) {
  Integer total = 0;
  for (unsigned l = 0; l <= n; ++l) {
    Integer value = poly_bernoulli_integer(n - l, -static_cast<long>(l), 0);
    if (l % 2 == 0) total += value;
    else total -= value;
  }
  return total;
}

Integer alternating_sum_at_one(unsigned n) {
  Integer total = 0;
  for (unsigned l = 0; l <= n; ++l) {
    Integer value = poly_bernoulli_integer(n - l, -static_cast<long>(l) - 1, 1);
    if (l % 2 == 0) total += value;
    else total -= value;
  }
  return total;
}

Integer cancellation_sum(unsigned n, unsigned k) {
  Integer total = factorial(k);
  for (unsigned j = 0; j <= n / 2; ++j) {
    Integer bracket = Integer(k) * (j + 1) * a_by_recurrence(n, j) +
                      Integer(j + 1) * (k + j + 1) * a_by_recurrence(n + 2, j + 1);
    total += factorial(j) * factorial(k + j) * bracket;
  }
  return total;
}

std::vector<std::pair<ReferenceTable, IntegerTable>> VerifyOptions::default_table_fixtures() {
  std::vector<std::pair<ReferenceTable, IntegerTable>> out;
  for (auto t : {ReferenceTable::one_left, ReferenceTable::one_right, ReferenceTable::two_left,
                 ReferenceTable::two_right}) {
    out.emplace_back(t, printed_table(t));
  }
  return out;
}

namespace {

void check_limits(const VerifyOptions& o, const VerifyLimits& lim) {
  auto over = [](const char* name, unsigned v, unsigned cap) {
    if (v > cap) {
      throw ResourceError(std::string(name) + " = " + std::to_string(v) + " exceeds cap " +
                          std::to_string(cap));
    }
  };
  over("n-max", o.n_max, lim.n_max);
  over("k-max", o.k_max, lim.k_max);
  over("m-max", o.m_max, lim.m_max);
  over("enumeration cap", o.enumeration_cap, lim.enumeration_cap);
}

void verify_tables(const VerifyOptions& o, VerificationReport& r) {
  for (const auto& [table, fixture] : o.table_fixtures) {
    const auto generated = generate_table(table, static_cast<unsigned>(fixture.size()));
    for (unsigned l = 0; l < fixture.size(); ++l) {
      for (unsigned m = 0; m < fixture[l].size() && m < generated.size(); ++m) {
        r.add("table " + std::string(table_name(table)), params({{"l", l}, {"m", m}}),
              to_string(generated[l][m]), to_string(fixture[l][m]));
      }
    }
  }
}

void verify_theorem(const VerifyOptions& o, VerificationReport& r) {
  for (unsigned n = 0; n <= o.n_max; ++n) {
    for (unsigned k = 0; k <= o.k_max; ++k) {
      r.add("theorem", params({{"n", n}, {"k", k}}), to_string(theorem_lhs(n, k, o.theorem_route)),
            to_string(theorem_rhs(n, k)));
    }
  }
}

void verify_specializations(const VerifyOptions& o, VerificationReport& r) {
  for (unsigned n = 0; n <= o.n_max; ++n) {
    r.add("k=0 specialization", params({{"n", n}}), to_string(alternating_sum_at_zero(n)),
          n == 0 ? "1" : "0");
    const Integer expected = (n % 2 == 1) ? Integer(0) : Integer(sign_power(n / 2) * genocchi(n));
    r.add("k=1 specialization", params({{"n", n}}), to_string(alternating_sum_at_one(n)),
          to_string(expected));
  }
}

void verify_symmetrized(const VerifyOptions& o, VerificationReport& r) {
  for (unsigned k = 0; k <= o.k_max; ++k) {
    for (unsigned m = 0; m <= o.m_max; ++m) {
      for (unsigned l = 0; l <= o.m_max; ++l) {
        const Integer ef = symmetrized_pb_ef(m, l, k);
        r.add("symmetrized routes", params({{"m", m}, {"l", l}, {"k", k}}), to_string(ef),
              to_string(symmetrized_pb_spb(m, l, k)));
        if (m < l) {
          r.add("symmetrized symmetry", params({{"m", m}, {"l", l}, {"k", k}}), to_string(ef),
                to_string(symmetrized_pb_ef(l, m, k)));
        }
      }
    }
    for (unsigned m = 0; m <= o.m_max && k <= 1; ++m) {
      for (unsigned l = 0; l <= o.m_max; ++l) {
        const long index = -static_cast<long>(l) - static_cast<long>(k);
        r.add("symmetrized k=" + std::to_string(k) + " reduction",
              params({{"m", m}, {"l", l}}), to_string(symmetrized_pb_ef(m, l, k)),
              to_string(poly_bernoulli_integer(m, index, k)));
      }
    }
  }
}

void verify_anj(const VerifyOptions& o, VerificationReport& r) {
  const unsigned top = o.n_max + 4;
  for (unsigned n = 0; n <= top; ++n) {
    for (unsigned j = 0; j <= n / 2 + 1; ++j) {
      const Integer def = a_by_definition(n, j);
      const Integer rec = a_by_recurrence(n, j);
      const Integer ser = a_by_series(n, j);
      const auto p = params({{"n", n}, {"j", j}});
      r.add("a_nj definition=recurrence", p, to_string(def), to_string(rec));
      r.add("a_nj definition=series", p, to_string(def), to_string(ser));
    }
  }
  for (unsigned n = 0; n <= o.n_max; n += 2) {
    for (unsigned k = 0; k <= o.k_max; ++k) {
      r.add("cancellation sum", params({{"n", n}, {"k", k}}), to_string(cancellation_sum(n, k)),
            "0");
    }
  }
}

void verify_dumont_foata(const VerifyOptions& o, VerificationReport& r) {
  const unsigned top = std::min(o.n_max, o.enumeration_cap);
  for (unsigned n = 0; n <= top; n += 2) {
    const MultiPoly by_enum = dumont_foata_by_enumeration(n, o.enumeration_cap);
    const MultiPoly by_rec = dumont_foata_poly(n);
    const auto p = params({{"n", n}});
    r.add("dumont-foata enumeration=recurrence", p, to_display_string(by_enum),
          to_display_string(by_rec), by_enum == by_rec);
    const UniPoly gandhi = gandhi_poly(n);
    const UniPoly specialized = specialize_xy_one(by_rec);
    r.add("dumont-foata recurrence=gandhi", p, to_display_string(specialized),
          to_display_string(gandhi), specialized == gandhi);
    if (n >= 2) {
      r.add("pistol count=genocchi", p, to_string(mp_eval(by_enum, 1, 1, 1)),
            to_string(genocchi(n)));
    }
  }
}

}  // namespace

VerificationReport verify_identities(const VerifyOptions& o, const VerifyLimits& limits) {
  check_limits(o, limits);
  VerificationReport r;
  r.scope = "n<=" + std::to_string(o.n_max) + " k<=" + std::to_string(o.k_max) +
            " m,l<=" + std::to_string(o.m_max) + " enumeration n<=" +
            std::to_string(std::min(o.n_max, o.enumeration_cap)) + " theorem route=" +
            (o.theorem_route == SymmetrizedRoute::definition ? "spb" : "ef");
  verify_tables(o, r);
  verify_theorem(o, r);
  verify_specializations(o, r);
  verify_symmetrized(o, r);
  verify_anj(o, r);
  verify_dumont_foata(o, r);
  return r;
}

}  // namespace polyb
