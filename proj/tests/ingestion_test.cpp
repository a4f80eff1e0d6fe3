#include "dtn/ingestion.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"

namespace dtn {
namespace {

using testing::contact;
using testing::id;

ParseResult parse_common(const std::string& text) {
  std::istringstream in(text);
  return parse_common_format(in);
}

ParseResult parse_one(const std::string& text) {
  std::istringstream in(text);
  return parse_one_report(in);
}

std::string to_common(const ContactTrace& trace) {
  std::ostringstream out;
  write_common_format(trace, out);
  return out.str();
}

std::string to_one(const ContactTrace& trace) {
  std::ostringstream out;
  write_one_report(trace, out);
  return out.str();
}

std::vector<ContactEvent> events_of(const ContactTrace& t) { return {t.events().begin(), t.events().end()}; }

TEST(CommonFormatTest, ParsesTableTwoRows) {
  const auto result = testing::load_fixture("table2.dat");
  EXPECT_TRUE(read_trace_file(testing::fixture("table2.dat"), TraceFormat::Common).warnings.empty());
  ASSERT_EQ(result.events().size(), 4u);
  EXPECT_EQ(result.events()[0], contact(1, 3, 51293, 51293));
  EXPECT_EQ(result.events()[3], contact(1, 3, 79649, 79649));
  EXPECT_EQ(result.node_count(), 2u);
}

TEST(CommonFormatTest, DerivedColumnsMatchTableTwo) {
  const auto rows = common_format_rows(testing::load_fixture("table2.dat"));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (CommonFormatRow{id(1), id(3), 51293, 51293, 1, 0}));
  EXPECT_EQ(rows[1], (CommonFormatRow{id(1), id(3), 60603, 60603, 2, 9310}));
  EXPECT_EQ(rows[2], (CommonFormatRow{id(1), id(3), 62363, 62363, 3, 1760}));
  EXPECT_EQ(rows[3], (CommonFormatRow{id(1), id(3), 79649, 79649, 4, 17286}));
}

TEST(CommonFormatTest, ClippingKeepsRowsInsidePeriod) {
  const auto clipped = clip_to_period(testing::load_fixture("table2.dat"), AnalysisPeriod(60000, 86400));
  ASSERT_EQ(clipped.events().size(), 3u);
  EXPECT_EQ(clipped.events()[0].start, 60603);
  EXPECT_EQ(clipped.span_min(), 60000);
  EXPECT_EQ(clipped.span_max(), 86400);
}

TEST(CommonFormatTest, HeaderAndCommentsAreSkipped) {
  const auto r = parse_common("# comment\nsrc dst up down n gap\n\n1 2 0 5 1 0\n");
  EXPECT_EQ(r.trace.events().size(), 1u);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(CommonFormatTest, MismatchedDerivedColumnsWarn) {
  const auto r = parse_common("1 2 0 5 1 0\n1 2 10 12 7 3\n");
  EXPECT_EQ(r.trace.events().size(), 2u);
  ASSERT_EQ(r.warnings.size(), 2u);
  EXPECT_EQ(r.warnings[0].line, 2u);
}

TEST(CommonFormatTest, MalformedRowsReportLineNumbers) {
  try {
    parse_common("1 2 0 5 1 0\n1 2 x 5 1 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse_common("1 2 0 5 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(parse_common(""), ParseError);
  EXPECT_THROW(parse_common("# only comments\n"), ParseError);
}

TEST(CommonFormatTest, WriteIsIdempotentAfterNormalization) {
  const auto trace = testing::load_fixture("figure8.dat");
  const auto first = to_common(trace);
  const auto again = to_common(parse_common(first).trace);
  EXPECT_EQ(first, again);
}

TEST(CommonFormatTest, RandomRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto rt = testing::random_trace(rng, {});
    if (rt.trace.empty()) continue;
    const auto parsed = parse_common(to_common(rt.trace));
    EXPECT_TRUE(parsed.warnings.empty());
    EXPECT_EQ(events_of(parsed.trace), events_of(rt.trace));
  }
}

TEST(OneReportTest, FigureSevenPairing) {
  const auto r = read_trace_file(testing::fixture("figure7.txt"), TraceFormat::OneReport);
  const std::vector<ContactEvent> expected_closed = {
      contact(9, 22, 0.1, 83.6),    contact(14, 39, 0.1, 75.9),   contact(16, 21, 0.1, 22.2),
      contact(0, 36, 0.1, 56.4),    contact(38, 57, 0.1, 216.3),  contact(10, 27, 0.1, 202.5),
      contact(13, 60, 31.8, 93.3),  contact(24, 50, 139.2, 234.1)};
  const std::vector<ContactEvent> expected_open = {
      contact(16, 21, 80.5, 234.1), contact(17, 54, 159.3, 234.1), contact(35, 62, 192.5, 234.1),
      contact(16, 29, 214, 234.1),  contact(23, 58, 227.2, 234.1), contact(17, 45, 233.3, 234.1)};
  auto expected = expected_closed;
  expected.insert(expected.end(), expected_open.begin(), expected_open.end());
  const ContactTrace want(expected);
  EXPECT_EQ(events_of(r.trace), events_of(want));
  EXPECT_EQ(r.warnings.size(), expected_open.size());
}

TEST(OneReportTest, PrefixedIdsAndOtherRecords) {
  const auto r = parse_one("0.5 CONN n1 n2 up\n1.0 MSG n1 n2 foo\n2.5 CONN n2 n1 down\n");
  ASSERT_EQ(r.trace.events().size(), 1u);
  EXPECT_EQ(r.trace.events()[0], contact(1, 2, 0.5, 2.5));
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings[0].line, 2u);
}

TEST(OneReportTest, DownWithoutUpFails) {
  try {
    parse_one("1 CONN 1 2 up\n2 CONN 1 2 down\n3 CONN 1 2 down\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_one("1 CONN 1 2 sideways\n"), ParseError);
  EXPECT_THROW(parse_one("x CONN 1 2 up\n"), ParseError);
}

TEST(OneReportTest, FigureSevenRoundTrip) {
  const auto trace = read_trace_file(testing::fixture("figure7.txt"), TraceFormat::OneReport).trace;
  const auto again = parse_one(to_one(trace));
  EXPECT_TRUE(again.warnings.empty());
  EXPECT_EQ(events_of(again.trace), events_of(trace));
}

TEST(OneReportTest, RandomRoundTripOfMergedTraces) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto trace = merge_overlapping_contacts(testing::random_trace(rng, {}).trace);
    if (trace.empty()) continue;
    const auto parsed = parse_one(to_one(trace));
    EXPECT_EQ(events_of(parsed.trace), events_of(trace));
  }
}

TEST(ConversionTest, OneToCommonKeepsDurations) {
  const auto trace = read_trace_file(testing::fixture("figure7.txt"), TraceFormat::OneReport).trace;
  const auto common = parse_common(to_common(trace)).trace;
  EXPECT_EQ(events_of(common), events_of(trace));
  const auto pair = common.contacts_between(id(9), id(22));
  ASSERT_EQ(pair.size(), 1u);
  EXPECT_EQ(pair[0].start, 0.1);
  EXPECT_EQ(pair[0].end, 83.6);
}

TEST(MergeTest, UnitesOverlappingAndTouchingContacts) {
  ContactTrace trace({contact(1, 2, 0, 10), contact(2, 1, 5, 20), contact(1, 2, 20, 25), contact(1, 2, 30, 31),
                      contact(1, 3, 0, 100)});
  const auto merged = merge_overlapping_contacts(trace);
  const std::vector<ContactEvent> expected = {contact(1, 2, 0, 25), contact(1, 3, 0, 100), contact(1, 2, 30, 31)};
  EXPECT_EQ(events_of(merged), events_of(ContactTrace(expected)));
}

TEST(FormatNameTest, AcceptsAliases) {
  EXPECT_EQ(parse_format_name("common"), TraceFormat::Common);
  EXPECT_EQ(parse_format_name("DAT"), TraceFormat::Common);
  EXPECT_EQ(parse_format_name("one"), TraceFormat::OneReport);
  EXPECT_THROW(parse_format_name("csv"), std::invalid_argument);
}

TEST(FormatSecondsTest, ShortestRoundTrip) {
  EXPECT_EQ(format_seconds(83.6), "83.6");
  EXPECT_EQ(format_seconds(300), "300");
  EXPECT_EQ(format_seconds(0.1 + 0.2), "0.30000000000000004");
}

}  // namespace
}  // namespace dtn
