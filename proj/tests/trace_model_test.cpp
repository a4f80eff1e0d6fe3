#include "dtn/trace_model.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "test_support.hpp"

namespace dtn {
namespace {

using testing::contact;
using testing::id;

TEST(ContactTraceTest, CanonicalizesAndSortsEvents) {
  ContactTrace trace({contact(5, 2, 30, 40), contact(1, 3, 10, 20), contact(3, 1, 10, 15)});
  ASSERT_EQ(trace.events().size(), 3u);
  EXPECT_EQ(trace.events()[0], contact(1, 3, 10, 15));
  EXPECT_EQ(trace.events()[1], contact(1, 3, 10, 20));
  EXPECT_EQ(trace.events()[2], contact(2, 5, 30, 40));
  EXPECT_EQ(trace.node_count(), 4u);
  EXPECT_EQ(trace.span_min(), 10);
  EXPECT_EQ(trace.span_max(), 40);
}

TEST(ContactTraceTest, ExtraNodesAndExplicitSpan) {
  ContactTrace trace({contact(1, 2, 5, 6)}, {id(9), id(1)}, std::make_pair(0.0, 100.0));
  EXPECT_EQ(trace.node_count(), 3u);
  EXPECT_EQ(trace.label(2), id(9));
  EXPECT_EQ(trace.index_of(id(2)), 1u);
  EXPECT_FALSE(trace.index_of(id(4)).has_value());
  EXPECT_EQ(trace.span_min(), 0);
  EXPECT_EQ(trace.span_max(), 100);
}

TEST(ContactTraceTest, EmptyTrace) {
  ContactTrace trace;
  EXPECT_TRUE(trace.empty());
  EXPECT_EQ(trace.node_count(), 0u);
  EXPECT_TRUE(validate_trace(trace).empty());
}

TEST(ContactTraceTest, ContactsBetweenIgnoresOrder) {
  ContactTrace trace({contact(1, 2, 0, 1), contact(2, 1, 5, 6), contact(1, 3, 2, 3)});
  const auto between = trace.contacts_between(id(2), id(1));
  ASSERT_EQ(between.size(), 2u);
  EXPECT_EQ(between[0].start, 0);
  EXPECT_EQ(between[1].start, 5);
}

TEST(ContactEventTest, InstantaneousContactHasZeroDuration) {
  EXPECT_EQ(contact(1, 2, 7, 7).duration(), 0);
  EXPECT_EQ(contact(1, 2, 7, 9.5).duration(), 2.5);
}

TEST(ValidateTraceTest, ReportsEachBrokenRule) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  ContactTrace trace({contact(1, 1, 0, 1), contact(1, 2, 5, 3), contact(2, 3, nan, 1), contact(3, 4, 0, 50)},
                     {}, std::make_pair(0.0, 10.0));
  const auto violations = validate_trace(trace);
  auto has = [&](Violation::Rule r) {
    for (const auto& v : violations) {
      if (v.rule == r) return true;
    }
    return false;
  };
  EXPECT_TRUE(has(Violation::Rule::SelfContact));
  EXPECT_TRUE(has(Violation::Rule::ReversedInterval));
  EXPECT_TRUE(has(Violation::Rule::NonFiniteTime));
  EXPECT_TRUE(has(Violation::Rule::OutsideSpan));
  EXPECT_EQ(rule_name(Violation::Rule::SelfContact), "self-contact");
}

TEST(ValidateTraceTest, ValidTraceHasNoViolations) {
  EXPECT_TRUE(validate_trace(testing::figure6_trace()).empty());
}

TEST(AnalysisPeriodTest, RequiresIncreasingBounds) {
  EXPECT_THROW(AnalysisPeriod(10, 10), std::invalid_argument);
  EXPECT_THROW(AnalysisPeriod(10, 5), std::invalid_argument);
  EXPECT_THROW(AnalysisPeriod(0, std::numeric_limits<double>::infinity()), std::invalid_argument);
  AnalysisPeriod p(60000, 86400);
  EXPECT_EQ(p.length(), 26400);
}

TEST(HorizonTest, CapsAtNodeCountMinusOne) {
  EXPECT_TRUE(Horizon::unlimited().is_unlimited());
  EXPECT_EQ(Horizon::unlimited().cap(6), 5u);
  EXPECT_EQ(Horizon::of(2).cap(6), 2u);
  EXPECT_EQ(Horizon::of(10).cap(6), 5u);
  EXPECT_THROW(Horizon::of(0), std::invalid_argument);
}

TEST(WindowConfigTest, RejectsNonPositiveWidth) {
  EXPECT_THROW(WindowConfig::make(0), std::invalid_argument);
  EXPECT_THROW(WindowConfig::make(-5), std::invalid_argument);
  EXPECT_EQ(WindowConfig::make(300).width, 300);
}

}  // namespace
}  // namespace dtn
