#pragma once

#include <optional>
#include <string>
#include <vector>

namespace polyb {

/// One checked equality. Values are exact decimal strings.
struct ReportCell {
  std::string family;
  std::string parameters;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// Result of a verification sweep. Failures are recorded, never thrown.
struct VerificationReport {
  std::string scope;
  std::vector<ReportCell> cells;

  void add(std::string family, std::string parameters, std::string lhs, std::string rhs);
  void add(std::string family, std::string parameters, std::string lhs, std::string rhs, bool pass);
  void append(const VerificationReport& other);

  bool all_pass() const;
  std::size_t failures() const;
  std::optional<ReportCell> first_failure() const;
  std::vector<std::string> families() const;
};

/// Fixed key order: scope, all_pass, cells[{family, parameters, lhs, rhs, pass}].
std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
/// Per-family summary plus one line per failing cell.
std::string to_human(const VerificationReport& report);

}  // namespace polyb
