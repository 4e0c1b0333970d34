#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyb/dfpoly.hpp"
#include "polyb/identity.hpp"
#include "polyb/lonesum.hpp"
#include "polyb/oeis.hpp"
#include "polyb/pistols.hpp"
#include "polyb/polybernoulli.hpp"
#include "polyb/symmetrized.hpp"
#include "polyb/tables.hpp"

#ifndef POLYB_DEFAULT_FIXTURE_DIR
#define POLYB_DEFAULT_FIXTURE_DIR "data"
#endif

namespace polyb::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { human, csv, json };

const std::map<std::string, Format> kFormats{
    {"human", Format::human}, {"csv", Format::csv}, {"json", Format::json}};

struct Options {
  Format format = Format::human;

  // pb / spb / lonesum
  unsigned m = 0;
  long index = 0;
  unsigned l = 0;
  long x = 0;
  unsigned k = 0;
  std::string route = "ef";

  // table
  std::string table;
  unsigned size = 5;

  // pistols / df / gandhi / genocchi
  unsigned n = 0;
  bool dump = false;
  unsigned cap = kDefaultPistolCap;
  bool pretty = false;

  // verify
  VerifyOptions verify;
  std::string verify_route = "ef";

  // oeis-check
  bool offline = false;
  unsigned oeis_n_max = 10;
  std::string fixture;
  std::string base_url;
  std::string save_path;
};

void emit_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

int cmd_pb(const Options& o, std::ostream& out) {
  const Rational value = poly_bernoulli(o.m, o.index, o.x);
  switch (o.format) {
    case Format::human:
      out << value.get_str() << '\n';
      break;
    case Format::csv:
      out << "m,index,x,value\n" << o.m << ',' << o.index << ',' << o.x << ',' << value.get_str()
          << '\n';
      break;
    case Format::json:
      emit_json(out, {{"m", o.m}, {"index", o.index}, {"x", o.x}, {"value", value.get_str()}});
      break;
  }
  return kSuccess;
}

int cmd_spb(const Options& o, std::ostream& out) {
  const auto route = o.route == "spb" ? SymmetrizedRoute::definition : SymmetrizedRoute::explicit_sum;
  const Integer value = symmetrized_pb(o.m, o.l, o.k, route);
  switch (o.format) {
    case Format::human:
      out << value.get_str() << '\n';
      break;
    case Format::csv:
      out << "m,l,k,route,value\n"
          << o.m << ',' << o.l << ',' << o.k << ',' << o.route << ',' << value.get_str() << '\n';
      break;
    case Format::json:
      emit_json(out, {{"m", o.m}, {"l", o.l}, {"k", o.k}, {"route", o.route},
                      {"value", value.get_str()}});
      break;
  }
  return kSuccess;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto which = parse_table_name(o.table);
  if (!which) throw DomainError("unknown table '" + o.table + "'");
  const auto table = generate_table(*which, o.size);
  switch (o.format) {
    case Format::human: {
      std::size_t width = 3;
      for (const auto& row : table) {
        for (const auto& v : row) width = std::max(width, v.get_str().size());
      }
      const auto w = static_cast<int>(width + 1);
      out << std::setw(4) << "l\\m";
      for (unsigned m = 0; m < o.size; ++m) out << std::setw(w) << m;
      out << '\n';
      for (unsigned l = 0; l < o.size; ++l) {
        out << std::setw(4) << l;
        for (const auto& v : table[l]) out << std::setw(w) << v.get_str();
        out << '\n';
      }
      break;
    }
    case Format::csv:
      out << "l";
      for (unsigned m = 0; m < o.size; ++m) out << ',' << m;
      out << '\n';
      for (unsigned l = 0; l < o.size; ++l) {
        out << l;
        for (const auto& v : table[l]) out << ',' << v.get_str();
        out << '\n';
      }
      break;
    case Format::json: {
      auto rows = ordered_json::array();
      for (const auto& row : table) {
        auto r = ordered_json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(std::move(r));
      }
      emit_json(out, {{"table", o.table}, {"size", o.size}, {"rows", std::move(rows)}});
      break;
    }
  }
  return kSuccess;
}

std::string join_targets(std::span<const unsigned> targets) {
  std::string s;
  for (unsigned v : targets) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

int cmd_pistols(const Options& o, std::ostream& out) {
  if (!o.dump) {
    const Integer count = count_pistols(o.n, o.cap);
    switch (o.format) {
      case Format::human: out << count.get_str() << '\n'; break;
      case Format::csv: out << "n,count\n" << o.n << ',' << count.get_str() << '\n'; break;
      case Format::json: emit_json(out, {{"n", o.n}, {"count", count.get_str()}}); break;
    }
    return kSuccess;
  }
  unsigned long count = 0;
  auto list = ordered_json::array();
  if (o.format == Format::csv) out << "targets,b,f,m\n";
  for_each_pistol(
      o.n,
      [&](std::span<const unsigned> t) {
        ++count;
        const auto s = pistol_stats(t);
        switch (o.format) {
          case Format::human:
            out << join_targets(t) << "\tb=" << s.bulging << " f=" << s.fixed << " m=" << s.maximal
                << '\n';
            break;
          case Format::csv:
            out << join_targets(t) << ',' << s.bulging << ',' << s.fixed << ',' << s.maximal << '\n';
            break;
          case Format::json:
            list.push_back({{"targets", std::vector<unsigned>(t.begin(), t.end())},
                            {"b", s.bulging},
                            {"f", s.fixed},
                            {"m", s.maximal}});
            break;
        }
      },
      o.cap);
  if (o.format == Format::human) out << "# count " << count << '\n';
  if (o.format == Format::json) {
    emit_json(out, {{"n", o.n}, {"count", std::to_string(count)}, {"pistols", std::move(list)}});
  }
  return kSuccess;
}

int cmd_df(const Options& o, std::ostream& out) {
  MultiPoly poly;
  if (o.route == "enum") {
    if (o.n % 2 == 1) throw DomainError("enumeration route needs an even n");
    poly = dumont_foata_by_enumeration(o.n, o.cap);
  } else {
    poly = dumont_foata_poly(o.n);
  }
  switch (o.format) {
    case Format::human:
      out << (o.pretty ? to_display_string(poly) + "\n" : to_term_lines(poly));
      break;
    case Format::csv:
      out << "coeff,ex,ey,ez\n";
      for (const auto& [e, c] : poly.terms()) {
        out << c.get_str() << ',' << e.x << ',' << e.y << ',' << e.z << '\n';
      }
      break;
    case Format::json: {
      auto terms = ordered_json::array();
      for (const auto& [e, c] : poly.terms()) {
        terms.push_back({{"coeff", c.get_str()}, {"ex", e.x}, {"ey", e.y}, {"ez", e.z}});
      }
      emit_json(out, {{"n", o.n}, {"route", o.route}, {"terms", std::move(terms)}});
      break;
    }
  }
  return kSuccess;
}

int cmd_gandhi(const Options& o, std::ostream& out) {
  const UniPoly p = gandhi_poly(o.n);
  switch (o.format) {
    case Format::human:
      out << to_display_string(p) << '\n';
      break;
    case Format::csv:
      out << "power,coefficient\n";
      for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        out << i << ',' << p.coeffs()[i].get_str() << '\n';
      }
      break;
    case Format::json: {
      auto coeffs = ordered_json::array();
      for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
      emit_json(out, {{"n", o.n}, {"coefficients", std::move(coeffs)}});
      break;
    }
  }
  return kSuccess;
}

int cmd_genocchi(const Options& o, std::ostream& out) {
  const Integer g = genocchi(o.n);
  switch (o.format) {
    case Format::human: out << g.get_str() << '\n'; break;
    case Format::csv: out << "n,value\n" << o.n << ',' << g.get_str() << '\n'; break;
    case Format::json: emit_json(out, {{"n", o.n}, {"value", g.get_str()}}); break;
  }
  return kSuccess;
}

void emit_report(const VerificationReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::human: out << to_human(report); break;
    case Format::csv: out << to_csv(report); break;
    case Format::json: out << to_json(report); break;
  }
}

int cmd_verify(Options o, std::ostream& out) {
  o.verify.theorem_route =
      o.verify_route == "spb" ? SymmetrizedRoute::definition : SymmetrizedRoute::explicit_sum;
  const auto report = verify_identities(o.verify);
  emit_report(report, o.format, out);
  return report.all_pass() ? kSuccess : kMismatch;
}

int cmd_lonesum(const Options& o, std::ostream& out) {
  const Integer count = count_lonesum(o.m, o.l);
  const Integer pb = poly_bernoulli_integer(o.m, -static_cast<long>(o.l), 0);
  const bool match = count == pb;
  switch (o.format) {
    case Format::human:
      out << count.get_str() << '\n'
          << "B_" << o.m << "^(-" << o.l << ")(0) = " << pb.get_str() << (match ? " (match)" : " (MISMATCH)")
          << '\n';
      break;
    case Format::csv:
      out << "m,l,lonesum,poly_bernoulli,match\n"
          << o.m << ',' << o.l << ',' << count.get_str() << ',' << pb.get_str() << ','
          << (match ? "true" : "false") << '\n';
      break;
    case Format::json:
      emit_json(out, {{"m", o.m}, {"l", o.l}, {"lonesum", count.get_str()},
                      {"poly_bernoulli", pb.get_str()}, {"match", match}});
      break;
  }
  return match ? kSuccess : kMismatch;
}

int cmd_oeis(const Options& o, std::ostream& out, std::ostream& err) {
  FetchOptions fetch;
  fetch.base_url = o.base_url;
  fetch.fixture = o.fixture.empty()
                      ? std::filesystem::path(POLYB_DEFAULT_FIXTURE_DIR) / "A136127.txt"
                      : std::filesystem::path(o.fixture);
  const auto source = o.offline ? BFileSource::local_fixture : BFileSource::network;
  const BFile bfile = fetch_bfile("A136127", source, fetch);
  if (!o.save_path.empty()) {
    std::ofstream save(o.save_path);
    if (!save) throw FixtureError("cannot write " + o.save_path);
    save << serialize_bfile(bfile);
  }
  const auto result = compare_diagonal_sums(o.oeis_n_max, bfile);
  if (result.status != ComparisonStatus::ok) {
    err << "oeis-check: " << result.message << '\n';
    return kMismatch;
  }
  emit_report(result.report, o.format, out);
  if (o.format == Format::human) out << "aligned at b-file index " << result.aligned_index << '\n';
  return result.passed() ? kSuccess : kMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact poly-Bernoulli, Genocchi and Dumont-Foata computations", "pbtool"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* pb = app.add_subcommand("pb", "Poly-Bernoulli value B_m^(index)(x)");
  pb->add_option("m", o.m)->required();
  pb->add_option("index", o.index, "Index (<= 1); pass negatives after --")->required();
  pb->add_option("x", o.x)->required();

  auto* spb = app.add_subcommand("spb", "Symmetrized poly-Bernoulli number");
  spb->add_option("m", o.m)->required();
  spb->add_option("l", o.l)->required();
  spb->add_option("k", o.k)->required();
  spb->add_option("--route", o.route)->check(CLI::IsMember({"spb", "ef"}));

  auto* table = app.add_subcommand("table", "Regenerate a reference table");
  table->add_option("name", o.table)->required()->check(
      CLI::IsMember({"1-left", "1-right", "2-left", "2-right"}));
  table->add_option("--size", o.size)->check(CLI::Range(1u, 64u));

  auto* pistols = app.add_subcommand("pistols", "Count or list surjective pistols");
  pistols->add_option("n", o.n)->required();
  pistols->add_flag("--dump", o.dump, "List every pistol with (b, f, m)");
  pistols->add_option("--cap", o.cap, "Enumeration cap");

  auto* df = app.add_subcommand("df", "Dumont-Foata polynomial as term lines");
  df->add_option("n", o.n)->required();
  df->add_option("--route", o.route)->check(CLI::IsMember({"enum", "rec"}))->default_val("rec");
  df->add_option("--cap", o.cap, "Enumeration cap");
  df->add_flag("--pretty", o.pretty, "Print monomials instead of term lines");

  auto* gandhi = app.add_subcommand("gandhi", "Gandhi polynomial G_n(z)");
  gandhi->add_option("n", o.n)->required()->check(CLI::Range(0u, 400u));

  auto* geno = app.add_subcommand("genocchi", "Genocchi number G_n");
  geno->add_option("n", o.n)->required()->check(CLI::Range(0u, 2000u));

  auto* verify = app.add_subcommand("verify", "Run the identity sweep");
  verify->add_option("--n-max", o.verify.n_max);
  verify->add_option("--k-max", o.verify.k_max);
  verify->add_option("--m-max", o.verify.m_max);
  verify->add_option("--enum-cap", o.verify.enumeration_cap);
  verify->add_option("--route", o.verify_route, "Route for the theorem left side")
      ->check(CLI::IsMember({"spb", "ef"}));

  auto* lonesum = app.add_subcommand("lonesum", "Brute-force lonesum count");
  lonesum->add_option("m", o.m)->required();
  lonesum->add_option("l", o.l)->required();

  auto* oeis = app.add_subcommand("oeis-check", "Compare diagonal sums with A136127");
  oeis->add_flag("--offline", o.offline, "Use the bundled b-file instead of fetching");
  oeis->add_option("--n-max", o.oeis_n_max);
  oeis->add_option("--fixture", o.fixture, "b-file used with --offline");
  oeis->add_option("--base-url", o.base_url, "Overrides OEIS_BASE_URL");
  oeis->add_option("--save", o.save_path, "Write the fetched b-file here");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "pbtool: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*pb) return cmd_pb(o, out);
    if (*spb) return cmd_spb(o, out);
    if (*table) return cmd_table(o, out);
    if (*pistols) return cmd_pistols(o, out);
    if (*df) return cmd_df(o, out);
    if (*gandhi) return cmd_gandhi(o, out);
    if (*geno) return cmd_genocchi(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*lonesum) return cmd_lonesum(o, out);
    if (*oeis) return cmd_oeis(o, out, err);
  } catch (const ResourceError& e) {
    err << "pbtool: " << e.what() << '\n';
    return kResource;
  } catch (const NetworkError& e) {
    err << "pbtool: network error: " << e.what() << '\n';
    return kNetwork;
  } catch (const BFileParseError& e) {
    err << "pbtool: " << e.what() << '\n';
    return kMismatch;
  } catch (const FixtureError& e) {
    err << "pbtool: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "pbtool: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace polyb::cli
