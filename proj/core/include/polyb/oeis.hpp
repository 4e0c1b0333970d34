#pragma once

// OEIS b-file handling: parse, serialize, load from disk or fetch over HTTP,
// and compare against the k = 1 anti-diagonal sums.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyb/numeric.hpp"
#include "polyb/report.hpp"

namespace polyb {

struct BFileEntry {
  long index = 0;
  Integer value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFile {
  std::string sequence_id;
  std::vector<BFileEntry> entries;  // strictly increasing indices

  friend bool operator==(const BFile&, const BFile&) = default;
};

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws DomainError unless `id` is "A" followed by digits.
void validate_sequence_id(std::string_view id);

/// Lines are "index value"; blank lines and lines starting with '#' are skipped.
BFile parse_bfile(std::string_view text, std::string sequence_id);
std::string serialize_bfile(const BFile& bfile);

enum class BFileSource { network, local_fixture };

struct FetchOptions {
  std::string base_url;  // empty: OEIS_BASE_URL or the public host
  std::filesystem::path fixture;
  int timeout_seconds = 20;
};

std::string default_oeis_base_url();

/// `<base>/<id>/b<digits>.txt`
std::string bfile_url(std::string_view base_url, std::string_view sequence_id);

/// Local fixtures never touch the network. Errors: NetworkError,
/// FixtureError (missing file), BFileParseError, DomainError (bad id).
BFile fetch_bfile(std::string_view sequence_id, BFileSource source, const FetchOptions& options);

enum class ComparisonStatus { ok, alignment_failed, insufficient_terms };

struct OeisComparison {
  ComparisonStatus status = ComparisonStatus::ok;
  /// b-file index matched to the first diagonal sum (n = 0).
  long aligned_index = 0;
  VerificationReport report;
  std::string message;

  bool passed() const { return status == ComparisonStatus::ok && report.all_pass(); }
};

/// Aligns by locating the first three diagonal sums as consecutive b-file
/// entries, then compares terms n = 0..n_max.
OeisComparison compare_diagonal_sums(unsigned n_max, const BFile& bfile);

}  // namespace polyb
