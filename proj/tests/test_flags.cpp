#include <gtest/gtest.h>

#include "common.hpp"

using namespace sympdiag;

namespace {

bool has_issue(const FlagReport& r, FlagIssue::Kind kind, std::size_t k) {
  for (const auto& i : r.issues)
    if (i.kind == kind && i.k == k) return true;
  return false;
}

}  // namespace

TEST(Flags, CorpusFlagReports) {
  auto x3 = testutil::load("X3");
  auto f1 = validate_flag(x3.algebra, x3.flag("F1"));
  EXPECT_TRUE(f1.structural());
  EXPECT_FALSE(f1.composition_series());
  EXPECT_TRUE(has_issue(f1, FlagIssue::Kind::NotIdealInNext, 2));
  EXPECT_TRUE(has_issue(f1, FlagIssue::Kind::NotSubalgebra, 3));
  EXPECT_TRUE(has_issue(f1, FlagIssue::Kind::NotIdealInNext, 3));
  EXPECT_EQ(f1.issues.size(), 3u);

  EXPECT_TRUE(validate_flag(x3.algebra, x3.flag("F2")).composition_series());

  auto f3 = validate_flag(x3.algebra, x3.flag("F3"));
  EXPECT_TRUE(f3.structural());
  EXPECT_EQ(f3.issues.size(), 1u);
  EXPECT_TRUE(has_issue(f3, FlagIssue::Kind::NotIdealInNext, 4));

  auto printed = validate_flag(x3.algebra, x3.flag("F3_printed"));
  EXPECT_FALSE(printed.structural());
  EXPECT_TRUE(has_issue(printed, FlagIssue::Kind::Dimension, 1));
  EXPECT_TRUE(has_issue(printed, FlagIssue::Kind::NotNested, 1));

  auto x2 = testutil::load("X2");
  auto p2 = validate_flag(x2.algebra, x2.flag("F_printed"));
  EXPECT_TRUE(has_issue(p2, FlagIssue::Kind::NotIdealInNext, 1));
  EXPECT_TRUE(validate_flag(x2.algebra, x2.flag("F")).composition_series());
}

TEST(Flags, NormalFlagOfE1) {
  auto g = testutil::load("E1").algebra;
  auto cert = find_normal_flag(g);
  ASSERT_EQ(cert.verdict, SolvabilityVerdict::CompletelySolvable);
  const auto& f = *cert.witness;
  EXPECT_EQ(f[1], testutil::span(g, {"c"}));
  EXPECT_EQ(f[2], testutil::span(g, {"c", "b"}));
  EXPECT_EQ(f[3], testutil::span(g, {"c", "b", "a"}));
  EXPECT_EQ(f[4], testutil::span(g, {"c", "b", "a", "v"}));
  auto rep = validate_flag(g, f);
  EXPECT_TRUE(rep.composition_series());
  EXPECT_TRUE(rep.all_normal());
}

TEST(Flags, CertificatesForCorpusAndCounterexamples) {
  for (const auto& name : testutil::corpus_names()) {
    auto g = testutil::load(name).algebra;
    auto cert = complete_solvability_certificate(g);
    EXPECT_EQ(cert.verdict, SolvabilityVerdict::CompletelySolvable) << name;
    EXPECT_TRUE(validate_flag(g, *cert.witness).all_normal()) << name;
  }
  // e(2): [t,x] = y, [t,y] = -x has eigenvalues +-i on span(x,y)
  auto e2 = LieAlgebra::from_upper({"t", "x", "y"}, {{{0, 1}, Vector{0, 0, 1}}, {{0, 2}, Vector{0, -1, 0}}});
  auto c = complete_solvability_certificate(e2);
  EXPECT_EQ(c.verdict, SolvabilityVerdict::UndecidedIrrationalSpectrum);
  EXPECT_FALSE(c.witness.has_value());

  auto sl2 = LieAlgebra::from_upper({"e", "f", "h"}, {{{2, 0}, Vector{2, 0, 0}}, {{2, 1}, Vector{0, -2, 0}}, {{0, 1}, Vector{0, 0, 1}}});
  EXPECT_EQ(complete_solvability_certificate(sl2).verdict, SolvabilityVerdict::NotSolvable);
}

TEST(Flags, CompletionThroughSubnormalAndNonSubnormal) {
  auto g = testutil::load("D1").algebra;
  auto through = complete_flag_through(g, {testutil::span(g, {"x", "c"})});
  ASSERT_TRUE(through.complete);
  EXPECT_TRUE(validate_flag(g, through.flag).composition_series());
  EXPECT_EQ(through.flag[2], testutil::span(g, {"x", "c"}));

  auto stuck = complete_flag_through(g, {testutil::span(g, {"t", "x"})});
  EXPECT_FALSE(stuck.complete);

  try {
    complete_flag_through(g, {testutil::span(g, {"x", "c"}), testutil::span(g, {"x", "y"})});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ChainNotNested);
  }
}

TEST(Flags, FlagFromMembersPrependsZero) {
  auto doc = testutil::load("E1");
  Flag f = doc.flag("F");
  EXPECT_EQ(f.length(), 5u);
  EXPECT_TRUE(f[0].is_zero());
  EXPECT_TRUE(f[5].is_full());
}
