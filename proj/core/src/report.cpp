#include "polyb/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace polyb {

void VerificationReport::add(std::string family, std::string parameters, std::string lhs,
                             std::string rhs) {
  const bool pass = lhs == rhs;
  add(std::move(family), std::move(parameters), std::move(lhs), std::move(rhs), pass);
}

void VerificationReport::add(std::string family, std::string parameters, std::string lhs,
                             std::string rhs, bool pass) {
  cells.push_back({std::move(family), std::move(parameters), std::move(lhs), std::move(rhs), pass});
}

void VerificationReport::append(const VerificationReport& other) {
  cells.insert(cells.end(), other.cells.begin(), other.cells.end());
}

bool VerificationReport::all_pass() const {
  return std::all_of(cells.begin(), cells.end(), [](const ReportCell& c) { return c.pass; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const ReportCell& c) { return !c.pass; }));
}

std::optional<ReportCell> VerificationReport::first_failure() const {
  auto it = std::find_if(cells.begin(), cells.end(), [](const ReportCell& c) { return !c.pass; });
  if (it == cells.end()) return std::nullopt;
  return *it;
}

std::vector<std::string> VerificationReport::families() const {
  std::vector<std::string> out;
  for (const auto& c : cells) {
    if (std::find(out.begin(), out.end(), c.family) == out.end()) out.push_back(c.family);
  }
  return out;
}

std::string to_json(const VerificationReport& report) {
  // ordered_json keeps insertion order, which keeps output byte-stable.
  nlohmann::ordered_json doc;
  doc["scope"] = report.scope;
  doc["all_pass"] = report.all_pass();
  auto cells = nlohmann::ordered_json::array();
  for (const auto& c : report.cells) {
    nlohmann::ordered_json cell;
    cell["family"] = c.family;
    cell["parameters"] = c.parameters;
    cell["lhs"] = c.lhs;
    cell["rhs"] = c.rhs;
    cell["pass"] = c.pass;
    cells.push_back(std::move(cell));
  }
  doc["cells"] = std::move(cells);
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "family,parameters,lhs,rhs,pass\n";
  for (const auto& c : report.cells) {
    out << csv_field(c.family) << ',' << csv_field(c.parameters) << ',' << csv_field(c.lhs) << ','
        << csv_field(c.rhs) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_human(const VerificationReport& report) {
  std::ostringstream out;
  out << "scope: " << report.scope << '\n';
  for (const auto& family : report.families()) {
    std::size_t total = 0, passed = 0;
    for (const auto& c : report.cells) {
      if (c.family != family) continue;
      ++total;
      passed += c.pass ? 1 : 0;
    }
    out << "  " << (passed == total ? "PASS" : "FAIL") << "  " << family << "  " << passed << '/'
        << total << '\n';
  }
  for (const auto& c : report.cells) {
    if (c.pass) continue;
    out << "  mismatch " << c.family << " [" << c.parameters << "]: " << c.lhs << " != " << c.rhs
        << '\n';
  }
  out << (report.all_pass() ? "all checks passed" : "verification FAILED") << '\n';
  return out.str();
}

}  // namespace polyb
