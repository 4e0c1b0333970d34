#include "polyb/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "httplib.h"
#include "polyb/symmetrized.hpp"

namespace polyb {

BFileParseError::BFileParseError(int line, const std::string& what)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}

void validate_sequence_id(std::string_view id) {
  static const std::regex pattern("A[0-9]+");
  if (!std::regex_match(id.begin(), id.end(), pattern)) {
    throw DomainError("invalid OEIS sequence id: '" + std::string(id) + "'");
  }
}

BFile parse_bfile(std::string_view text, std::string sequence_id) {
  static const std::regex line_pattern(R"(^\s*(-?\d+)\s+(-?\d+)\s*$)");
  BFile out{std::move(sequence_id), {}};
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::smatch match;
    if (!std::regex_match(line, match, line_pattern)) {
      throw BFileParseError(line_no, "malformed entry '" + line + "'");
    }
    BFileEntry entry;
    try {
      entry.index = std::stol(match[1].str());
    } catch (const std::out_of_range&) {
      throw BFileParseError(line_no, "index out of range");
    }
    entry.value.set_str(match[2].str(), 10);
    if (!out.entries.empty() && entry.index <= out.entries.back().index) {
      throw BFileParseError(line_no, "indices must be strictly increasing");
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::string serialize_bfile(const BFile& bfile) {
  std::ostringstream out;
  out << "# " << bfile.sequence_id << '\n';
  for (const auto& e : bfile.entries) out << e.index << ' ' << e.value.get_str() << '\n';
  return out.str();
}

std::string default_oeis_base_url() {
  if (const char* env = std::getenv("OEIS_BASE_URL"); env != nullptr && *env != '\0') return env;
  return "https://oeis.org";
}

std::string bfile_url(std::string_view base_url, std::string_view sequence_id) {
  std::string base(base_url);
  while (!base.empty() && base.back() == '/') base.pop_back();
  return base + "/" + std::string(sequence_id) + "/b" + std::string(sequence_id.substr(1)) + ".txt";
}

namespace {

BFile fetch_from_network(std::string_view sequence_id, const FetchOptions& options) {
  const std::string base = options.base_url.empty() ? default_oeis_base_url() : options.base_url;
  const std::string url = bfile_url(base, sequence_id);
  // Split scheme://host[:port] from the path.
  static const std::regex url_pattern(R"(^(https?://[^/]+)(/.*)$)");
  std::smatch match;
  if (!std::regex_match(url, match, url_pattern)) throw NetworkError("unsupported URL: " + url);
  httplib::Client client(match[1].str());
  client.set_connection_timeout(options.timeout_seconds);
  client.set_read_timeout(options.timeout_seconds);
  client.set_follow_location(true);
  auto response = client.Get(match[2].str());
  if (!response) {
    throw NetworkError("GET " + url + " failed: " + httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw NetworkError("GET " + url + " returned HTTP " + std::to_string(response->status));
  }
  return parse_bfile(response->body, std::string(sequence_id));
}

BFile load_fixture(std::string_view sequence_id, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("b-file fixture not found: " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_bfile(text.str(), std::string(sequence_id));
}

}  // namespace

BFile fetch_bfile(std::string_view sequence_id, BFileSource source, const FetchOptions& options) {
  validate_sequence_id(sequence_id);
  if (source == BFileSource::local_fixture) return load_fixture(sequence_id, options.fixture);
  return fetch_from_network(sequence_id, options);
}

OeisComparison compare_diagonal_sums(unsigned n_max, const BFile& bfile) {
  OeisComparison out;
  out.report.scope = bfile.sequence_id + " diagonal sums n<=" + std::to_string(n_max);

  constexpr unsigned kAnchor = 3;
  std::vector<Integer> computed;
  for (unsigned n = 0; n <= std::max(n_max, kAnchor - 1); ++n) {
    computed.push_back(diagonal_sum_a136127(n));
  }

  const auto& entries = bfile.entries;
  std::size_t start = entries.size();
  for (std::size_t i = 0; i + kAnchor <= entries.size(); ++i) {
    bool match = true;
    for (unsigned d = 0; d < kAnchor && match; ++d) {
      match = entries[i + d].value == computed[d] &&
              entries[i + d].index == entries[i].index + static_cast<long>(d);
    }
    if (match) {
      start = i;
      break;
    }
  }
  if (start == entries.size()) {
    out.status = ComparisonStatus::alignment_failed;
    out.message = "no consecutive window of " + bfile.sequence_id + " matches the leading terms " +
                  computed[0].get_str() + ", " + computed[1].get_str() + ", " +
                  computed[2].get_str();
    return out;
  }
  out.aligned_index = entries[start].index;

  for (unsigned n = 0; n <= n_max; ++n) {
    const std::size_t pos = start + n;
    if (pos >= entries.size() || entries[pos].index != out.aligned_index + static_cast<long>(n)) {
      out.status = ComparisonStatus::insufficient_terms;
      out.message = bfile.sequence_id + " has no term for n = " + std::to_string(n) +
                    " (b-file index " + std::to_string(out.aligned_index + n) + ")";
      return out;
    }
    out.report.add("diagonal sum", "n=" + std::to_string(n) + ",index=" +
                                       std::to_string(entries[pos].index),
                   computed[n].get_str(), entries[pos].value.get_str());
  }
  out.message = out.report.all_pass() ? "all aligned terms match" : "aligned terms differ";
  return out;
}

}  // namespace polyb
