#include <gtest/gtest.h>

#include "generators.hpp"

#include "jmetrics/csv.hpp"

namespace {

using namespace jmetrics;

TEST(Csv, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(csv::escape("plain"), "plain");
  EXPECT_EQ(csv::escape(""), "");
  EXPECT_EQ(csv::escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv::escape("two\nlines"), "\"two\nlines\"");
  EXPECT_EQ(csv::escape("cr\r"), "\"cr\r\"");
}

TEST(Csv, AppendRowEndsWithLf) {
  std::string out;
  csv::append_row(out, {"a", "b,c", ""});
  EXPECT_EQ(out, "a,\"b,c\",\n");
}

TEST(Csv, ParsesQuotedFieldsAndLineNumbers) {
  const auto rows = csv::parse("h1,h2\r\n\"x\ny\",2\n\"\"\"q\"\"\",\n");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].line, 2u);
  EXPECT_EQ(rows[1].fields, (std::vector<std::string>{"x\ny", "2"}));
  EXPECT_EQ(rows[2].line, 4u);
  EXPECT_EQ(rows[2].fields, (std::vector<std::string>{"\"q\"", ""}));
}

TEST(Csv, SyntaxErrors) {
  EXPECT_THROW(csv::parse("a,\"unterminated\n"), csv::SyntaxError);
  EXPECT_THROW(csv::parse("a,\"x\"y\n"), csv::SyntaxError);
  try {
    csv::parse("ok\nfine\nbad\"field\n");
    FAIL();
  } catch (const csv::SyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Csv, RoundTripsRandomRecords) {
  jmtest::Rng rng(5);
  std::uniform_int_distribution<int> pick(0, 9), count(1, 6);
  const std::vector<std::string> pieces{"a", ",", "\"", "\n", "\r\n", " ", "caf\xc3\xa9", "", "1.5", "x\"y"};
  for (int i = 0; i < 500; ++i) {
    std::vector<std::vector<std::string>> records;
    std::string text;
    for (int r = count(rng); r > 0; --r) {
      std::vector<std::string> fields;
      for (int f = count(rng); f > 0; --f) fields.push_back(pieces[pick(rng)] + pieces[pick(rng)]);
      // A lone empty field would serialize as a blank line.
      if (fields.size() == 1 && fields[0].empty()) fields[0] = "e";
      csv::append_row(text, fields);
      records.push_back(fields);
    }
    const auto parsed = csv::parse(text);
    ASSERT_EQ(parsed.size(), records.size()) << text;
    for (std::size_t r = 0; r < records.size(); ++r) ASSERT_EQ(parsed[r].fields, records[r]) << text;
  }
}

}  // namespace
