#include <gtest/gtest.h>

#include "knotrep/alexander.hpp"
#include "knotrep/errors.hpp"
#include "knotrep/fixtures.hpp"
#include "knotrep/knot_input.hpp"

using namespace knotrep;

TEST(ParseBraid, SignedIntegersWithStrandCount) {
  EXPECT_EQ(parse_braid("1 1 1 @2"), (BraidWord{2, {1, 1, 1}}));
  EXPECT_EQ(parse_braid("1 -2 1 -2 @3"), (BraidWord{3, {1, -2, 1, -2}}));
}

TEST(ParseBraid, ArtinLettersAndSeparators) {
  EXPECT_EQ(parse_braid("s1 s1 s1"), (BraidWord{2, {1, 1, 1}}));
  EXPECT_EQ(parse_braid("s1 s2^-1 s1 S2"), (BraidWord{3, {1, -2, 1, -2}}));
  EXPECT_EQ(parse_braid("[1, 1, 1]"), (BraidWord{2, {1, 1, 1}}));
}

TEST(ParseBraid, StrandCountDefaultsToLargestGeneratorPlusOne) {
  EXPECT_EQ(parse_braid("1 -2 1 -2").strands, 3);
}

TEST(ParseBraid, RejectsLinksAndBadTokens) {
  EXPECT_THROW(parse_braid("1 @3"), NotAKnot);
  EXPECT_THROW(parse_braid("1 1 @2"), NotAKnot);
  EXPECT_THROW(parse_braid("1 x 1"), SyntaxError);
  EXPECT_THROW(parse_braid("0 1"), SyntaxError);
  EXPECT_THROW(parse_braid("3 @3"), SyntaxError);
}

TEST(BraidToWirtinger, Trefoil) {
  const auto w = braid_to_wirtinger(parse_braid("1 1 1 @2"));
  EXPECT_EQ(w.generator_count, 3);
  EXPECT_EQ(w.relators.size(), 3u);
  EXPECT_EQ(w.writhe, 3);
  EXPECT_EQ(w.meridian, 1);
  EXPECT_EQ(validate(w), "");
  for (const auto& r : w.relators) {
    // x_k x_j^e x_i^-1 x_j^-e
    ASSERT_EQ(r.size(), 4u);
    EXPECT_EQ(r[1], -r[3]);
    EXPECT_LT(r[2], 0);
    EXPECT_GT(r[0], 0);
  }
}

TEST(BraidToWirtinger, UnknotOnOneStrand) {
  const auto w = braid_to_wirtinger(parse_braid("@1"));
  EXPECT_EQ(w.generator_count, 1);
  EXPECT_TRUE(w.relators.empty());
  EXPECT_TRUE(w.longitude.empty());
}

TEST(BraidToWirtinger, FigureEight) {
  const auto w = braid_to_wirtinger(parse_braid("1 -2 1 -2 @3"));
  EXPECT_EQ(w.generator_count, 4);
  EXPECT_EQ(w.relators.size(), 4u);
  EXPECT_EQ(w.writhe, 0);
}

TEST(BraidToWirtinger, InvariantsOnEveryFixture) {
  for (const auto& f : fixtures()) {
    const auto w = braid_to_wirtinger(f.braid);
    EXPECT_EQ(validate(w), "") << f.name;
    EXPECT_EQ(exponent_sum(w.longitude), 0) << f.name;
    EXPECT_EQ(static_cast<int>(w.relators.size()), w.relators.empty() ? 0 : w.generator_count) << f.name;
    for (const auto& r : w.relators) EXPECT_EQ(exponent_sum(r), 0) << f.name;
  }
}

TEST(ParsePd, TrefoilMatchesBraidRoute) {
  const auto w = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)");
  EXPECT_EQ(w.generator_count, 3);
  EXPECT_EQ(w.relators.size(), 3u);
  EXPECT_EQ(validate(w), "");
  const auto from_pd = alexander_polynomial(alexander_module(w));
  const auto from_braid = alexander_polynomial(alexander_module(braid_to_wirtinger(parse_braid("1 1 1 @2"))));
  EXPECT_EQ(from_pd, from_braid);
}

TEST(ParsePd, FigureEightMatchesBraidRoute) {
  const auto w = parse_pd("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]");
  EXPECT_EQ(alexander_polynomial(alexander_module(w)), LaurentPoly::from_coeffs({1, -3, 1}));
}

TEST(ParsePd, Errors) {
  EXPECT_THROW(parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,7)"), InconsistentDiagram);
  // Two disjoint one-crossing curls: a two-component diagram.
  EXPECT_THROW(parse_pd("X(1,1,2,2),X(3,3,4,4)"), NotAKnot);
  EXPECT_THROW(parse_pd("X(1,2,3)"), SyntaxError);
  EXPECT_THROW(parse_pd("Y(1,2,3,4)"), SyntaxError);
}

TEST(Fixtures, TableContents) {
  const auto names = fixture_names();
  for (const char* expected : {"unknot", "trefoil", "figure-eight", "5_2", "6_1", "t2_7"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
  }
  EXPECT_EQ(fixture("trefoil").braid, (BraidWord{2, {1, 1, 1}}));
  EXPECT_THROW(fixture("no-such-knot"), InputError);
}

TEST(Fixtures, ParseFormat) {
  const auto f = parse_fixture("x", "# Some knot\n\n1 1 1 @2\n");
  EXPECT_EQ(f.description, "Some knot");
  EXPECT_THROW(parse_fixture("x", "# only a comment\n"), SyntaxError);
  EXPECT_THROW(parse_fixture("x", "1 1 1\n1 1 1\n"), SyntaxError);
}
