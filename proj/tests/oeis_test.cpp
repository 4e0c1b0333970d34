#include "polyb/oeis.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "httplib.h"
#include "polyb/symmetrized.hpp"

using polyb::BFile;
using polyb::BFileSource;
using polyb::ComparisonStatus;
using polyb::Integer;

namespace {

// Synthetic b-file whose terms come from the library itself, shifted to
// start at `first_index` and optionally preceded by unrelated terms. It only
// exercises parsing and alignment, not the published sequence.
BFile synthetic_bfile(long first_index, unsigned terms, unsigned junk_prefix = 0) {
  BFile b{"A136127", {}};
  long index = first_index - static_cast<long>(junk_prefix);
  for (unsigned i = 0; i < junk_prefix; ++i) b.entries.push_back({index++, Integer(7 + i)});
  for (unsigned n = 0; n < terms; ++n) b.entries.push_back({index++, polyb::diagonal_sum_a136127(n)});
  return b;
}

class LocalServer {
 public:
  explicit LocalServer(std::string body) : body_(std::move(body)) {
    server_.Get(R"(/(mirror/)?A136127/b136127\.txt)",
                [this](const httplib::Request&, httplib::Response& res) {
                  res.set_content(body_, "text/plain");
                });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }
  std::string base() const { return "http://127.0.0.1:" + std::to_string(port_); }

 private:
  std::string body_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace

TEST(BFileParse, CommentsAndBigValues) {
  const auto b = polyb::parse_bfile(
      "# A test\n#another\n\n0 1\n1 -2\n  2   123456789012345678901234567890  \r\n", "A000001");
  ASSERT_EQ(b.entries.size(), 3u);
  EXPECT_EQ(b.entries[1].value, -2);
  EXPECT_EQ(b.entries[2].value, Integer("123456789012345678901234567890"));
  EXPECT_EQ(b.sequence_id, "A000001");
}

TEST(BFileParse, MalformedLineNamesLineNumber) {
  try {
    polyb::parse_bfile("# header\n1 2\n3 4 5x\n", "A136127");
    FAIL() << "expected a parse error";
  } catch (const polyb::BFileParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(BFileParse, IndicesMustIncrease) {
  EXPECT_THROW(polyb::parse_bfile("1 2\n1 3\n", "A1"), polyb::BFileParseError);
}

TEST(BFileParse, SerializeRoundTrip) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> step(1, 4);
  std::uniform_int_distribution<int> digits(1, 40);
  for (int trial = 0; trial < 30; ++trial) {
    BFile b{"A136127", {}};
    long index = -3;
    for (int i = 0; i < 25; ++i) {
      std::string num = (rng() % 3 == 0) ? "-" : "";
      num += std::to_string(1 + rng() % 9);
      for (int d = digits(rng); d > 0; --d) num += std::to_string(rng() % 10);
      b.entries.push_back({index, Integer(num)});
      index += step(rng);
    }
    EXPECT_EQ(polyb::parse_bfile(polyb::serialize_bfile(b), "A136127"), b);
  }
}

TEST(BFileFetch, RejectsBadIds) {
  EXPECT_THROW(polyb::validate_sequence_id("B123"), polyb::DomainError);
  EXPECT_THROW(polyb::validate_sequence_id("A12x"), polyb::DomainError);
  EXPECT_NO_THROW(polyb::validate_sequence_id("A136127"));
  EXPECT_THROW(polyb::fetch_bfile("136127", BFileSource::local_fixture, {}), polyb::DomainError);
}

TEST(BFileFetch, UrlTemplate) {
  EXPECT_EQ(polyb::bfile_url("https://oeis.org", "A136127"), "https://oeis.org/A136127/b136127.txt");
  EXPECT_EQ(polyb::bfile_url("http://h/x/", "A5"), "http://h/x/A5/b5.txt");
}

TEST(BFileFetch, BaseUrlFromEnvironment) {
  ::setenv("OEIS_BASE_URL", "http://mirror.invalid", 1);
  EXPECT_EQ(polyb::default_oeis_base_url(), "http://mirror.invalid");
  ::unsetenv("OEIS_BASE_URL");
  EXPECT_EQ(polyb::default_oeis_base_url(), "https://oeis.org");
}

TEST(BFileFetch, LocalFixture) {
  const auto path = std::filesystem::temp_directory_path() / "polyb_fixture_test.txt";
  {
    std::ofstream out(path);
    out << polyb::serialize_bfile(synthetic_bfile(0, 12));
  }
  polyb::FetchOptions options;
  options.fixture = path;
  options.base_url = "http://127.0.0.1:1";  // never contacted offline
  const auto b = polyb::fetch_bfile("A136127", BFileSource::local_fixture, options);
  EXPECT_EQ(b.entries.size(), 12u);
  std::filesystem::remove(path);
  EXPECT_THROW(polyb::fetch_bfile("A136127", BFileSource::local_fixture, options),
               polyb::FixtureError);
}

TEST(BFileFetch, UnreachableHostIsNetworkError) {
  polyb::FetchOptions options;
  options.base_url = "http://127.0.0.1:1";
  options.timeout_seconds = 2;
  EXPECT_THROW(polyb::fetch_bfile("A136127", BFileSource::network, options), polyb::NetworkError);
}

TEST(BFileFetch, HttpFetchFromLocalServer) {
  const auto expected = synthetic_bfile(1, 8);
  LocalServer server(polyb::serialize_bfile(expected));
  polyb::FetchOptions options;
  options.base_url = server.base();
  EXPECT_EQ(polyb::fetch_bfile("A136127", BFileSource::network, options), expected);
  options.base_url = server.base() + "/mirror/";
  EXPECT_EQ(polyb::fetch_bfile("A136127", BFileSource::network, options), expected);
  options.base_url = server.base() + "/missing";
  EXPECT_THROW(polyb::fetch_bfile("A136127", BFileSource::network, options), polyb::NetworkError);
}

TEST(DiagonalComparison, AlignsShiftedOffset) {
  const auto result = polyb::compare_diagonal_sums(10, synthetic_bfile(3, 15, 4));
  EXPECT_EQ(result.status, ComparisonStatus::ok);
  EXPECT_EQ(result.aligned_index, 3);
  EXPECT_TRUE(result.passed());
  EXPECT_EQ(result.report.cells.size(), 11u);
}

TEST(DiagonalComparison, SingleTerm) {
  const auto result = polyb::compare_diagonal_sums(0, synthetic_bfile(0, 3));
  EXPECT_TRUE(result.passed());
  EXPECT_EQ(result.report.cells.size(), 1u);
}

TEST(DiagonalComparison, AlignmentFailureIsDistinct) {
  BFile b{"A136127", {{0, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 5}}};
  const auto result = polyb::compare_diagonal_sums(3, b);
  EXPECT_EQ(result.status, ComparisonStatus::alignment_failed);
  EXPECT_FALSE(result.passed());
  EXPECT_TRUE(result.report.cells.empty());
}

TEST(DiagonalComparison, InsufficientTerms) {
  const auto result = polyb::compare_diagonal_sums(10, synthetic_bfile(0, 6));
  EXPECT_EQ(result.status, ComparisonStatus::insufficient_terms);
  EXPECT_NE(result.message.find("n = 6"), std::string::npos);
}

TEST(DiagonalComparison, ValueMismatchIsReported) {
  auto b = synthetic_bfile(0, 11);
  b.entries[7].value += 1;
  const auto result = polyb::compare_diagonal_sums(10, b);
  EXPECT_EQ(result.status, ComparisonStatus::ok);
  EXPECT_FALSE(result.passed());
  EXPECT_EQ(result.report.first_failure()->parameters, "n=7,index=7");
}
