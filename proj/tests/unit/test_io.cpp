#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include "molsim/foundation/errors.hpp"
#include "molsim/io/text.hpp"
#include "support/property.hpp"

using namespace molsim;
using namespace molsim::io;
using Gen = molsim::testing::Gen;

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-2.5e-12), "-2.5e-12");
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  const auto failure = molsim::testing::for_all(71, 20000, [](Gen& g, int) -> std::string {
    const double v = (g.coin() ? -1.0 : 1.0) * g.log_uniform(1e-300, 1e300);
    const auto back = parse_double(format_double(v));
    if (!back || *back != v) return "round trip failed for " + format_double(v);
    return {};
  });
  EXPECT_TRUE(failure.empty()) << failure;
}

TEST(ParseDouble, Strictness) {
  EXPECT_EQ(parse_double("2.5"), 2.5);
  EXPECT_EQ(parse_double("-1e3"), -1000.0);
  for (const char* bad : {"", " 1", "1 ", "1,5", "abc", "1e", "--1", "0x10"}) {
    EXPECT_FALSE(parse_double(bad).has_value()) << bad;
  }
  EXPECT_EQ(parse_unsigned("42"), 42ull);
  EXPECT_FALSE(parse_unsigned("-1").has_value());
  EXPECT_FALSE(parse_unsigned("4.2").has_value());
  EXPECT_FALSE(parse_unsigned("").has_value());
}

TEST(Csv, QuotingAndLines) {
  std::istringstream in("a,b\r\n\"x,1\",\"he said \"\"hi\"\"\"\n\n\"multi\nline\",z\nlast,\n");
  const auto rows = read_csv(in);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].line, 1u);
  EXPECT_EQ(rows[1].fields, (std::vector<std::string>{"x,1", "he said \"hi\""}));
  EXPECT_EQ(rows[2].line, 4u);
  EXPECT_EQ(rows[2].fields[0], "multi\nline");
  EXPECT_EQ(rows[3].line, 6u);
  EXPECT_EQ(rows[3].fields, (std::vector<std::string>{"last", ""}));
}

TEST(Csv, Errors) {
  std::istringstream unterminated("a,\"b\n");
  EXPECT_THROW(read_csv(unterminated), ParseError);
  std::istringstream stray("a,\"b\"c\n");
  EXPECT_THROW(read_csv(stray), ParseError);
}

TEST(Csv, FieldQuotingRoundTrips) {
  for (const std::string s : {"plain", "a,b", "q\"uote", "line\nbreak", ""}) {
    std::istringstream in(csv_field(s) + "\n");
    const auto rows = read_csv(in);
    if (s.empty()) {
      EXPECT_TRUE(rows.empty() || rows[0].fields == std::vector<std::string>{""});
      continue;
    }
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].fields[0], s);
  }
  EXPECT_EQ(csv_field("plain"), "plain");
}

TEST(Csv, Table) {
  EXPECT_EQ(csv_table({"x", "y"}, {{1.0, 2.0}, {0.5, -1.0}}), "x,y\n1,0.5\n2,-1\n");
  EXPECT_THROW(csv_table({"x", "y"}, {{1.0}, {1.0, 2.0}}), InvalidArgument);
}

TEST(Files, AtomicWriteCreatesDirectoriesAndReplaces) {
  const auto dir = std::filesystem::temp_directory_path() / "molsim_io_test";
  std::filesystem::remove_all(dir);
  const auto path = dir / "nested" / "out.txt";
  write_file_atomic(path, "first");
  EXPECT_EQ(read_file(path), "first");
  write_file_atomic(path, "second\n");
  EXPECT_EQ(read_file(path), "second\n");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir / "nested")) ++entries;
  EXPECT_EQ(entries, 1u);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(read_file(path), Error);
}
