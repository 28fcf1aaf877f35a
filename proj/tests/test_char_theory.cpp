#include <gtest/gtest.h>

#include <thread>

#include "knotrep/arith.hpp"
#include "knotrep/characters.hpp"
#include "knotrep/counting.hpp"
#include "knotrep/errors.hpp"
#include "knotrep/fixtures.hpp"
#include "oracles.hpp"

using namespace knotrep;

namespace {

AlexanderModulePresentation module_of(const std::string& name) {
  return alexander_module(braid_to_wirtinger(fixture(name).braid));
}

// Conjugacy class counts for n = 2..6, -1 meaning positive-dimensional.
// Frozen from (1/n) sum_{k|n} mu(k) |H_1(L_{n/k})| with orders from the
// numeric oracle, and (|Delta(-1)| - 1)/2 at n = 2.
const std::map<std::string, std::vector<long>> kCounts = {
    {"unknot", {0, 0, 0, 0, 0}},      {"unknot-4crossing", {0, 0, 0, 0, 0}},
    {"trefoil", {1, 1, 0, 0, -1}},    {"figure-eight", {2, 5, 10, 24, 50}},
    {"5_2", {3, 8, 14, 24, 24}},      {"6_1", {4, 16, 54, 192, 652}},
    {"t2_7", {3, 0, 0, 0, 0}},        {"granny", {4, 5, 0, 0, -1}},
};

// Synthetic module Z/2 + Z with trivial t-action.
AlexanderModulePresentation synthetic_z2_plus_z() {
  AlexanderModulePresentation a;
  a.relations = LaurentMatrix(3, 2);
  a.relations(0, 0) = LaurentPoly(2);
  a.relations(1, 0) = LaurentPoly::from_coeffs({-1, 1});
  a.relations(2, 1) = LaurentPoly::from_coeffs({-1, 1});
  a.generator_labels = {1, 2};
  return a;
}

}  // namespace

TEST(Characters, EnumerationSizes) {
  const auto unknot = homology_Ln(module_of("unknot"), 3);
  EXPECT_EQ(enumerate_characters(unknot).size(), 1u);
  EXPECT_EQ(enumerate_characters(homology_Ln(module_of("trefoil"), 2)).size(), 3u);
  const auto four = enumerate_characters(homology_Ln(module_of("trefoil"), 3));
  ASSERT_EQ(four.size(), 4u);
  // Lexicographic order.
  for (std::size_t i = 1; i < four.size(); ++i) EXPECT_LT(four[i - 1].exponents, four[i].exponents);
}

TEST(Characters, StreamIsRestartableAndFlagsPartial) {
  const auto c = homology_Ln(module_of("trefoil"), 6);
  CharacterStream s(c);
  EXPECT_TRUE(s.partial());
  int first = 0, second = 0;
  while (s.next()) ++first;
  s.reset();
  while (s.next()) ++second;
  EXPECT_EQ(first, 1);
  EXPECT_EQ(first, second);
  EXPECT_FALSE(CharacterStream(homology_Ln(module_of("trefoil"), 2)).partial());
}

TEST(Characters, TActionTrefoil) {
  const auto c = homology_Ln(module_of("trefoil"), 2);
  const CharacterGroup g(c);
  EXPECT_EQ(g.t_act(g.trivial()), g.trivial());
  Character one = g.trivial();
  one.exponents = {1};
  Character two = g.trivial();
  two.exponents = {2};
  EXPECT_EQ(g.t_act(one), two);
  EXPECT_EQ(g.t_act(two), one);
  EXPECT_EQ(t_act(one, c), two);
}

TEST(Characters, TToTheNIsIdentity) {
  for (const auto& f : fixtures()) {
    const auto a = module_of(f.name);
    for (int n = 1; n <= 5; ++n) {
      const auto c = homology_Ln(a, n);
      if (!c.group.finite()) continue;
      const CharacterGroup g(c);
      for (const auto& chi : enumerate_characters(c)) EXPECT_EQ(g.t_act(chi, n), chi) << f.name;
    }
  }
}

TEST(Characters, Orders) {
  const auto c2 = homology_Ln(module_of("trefoil"), 2);
  const CharacterGroup g2(c2);
  EXPECT_EQ(g2.order(g2.trivial()), 1);
  for (const auto& chi : enumerate_characters(c2))
    if (!(chi == g2.trivial())) EXPECT_EQ(character_order(chi, c2), 2);
  const auto c4 = homology_Ln(module_of("trefoil"), 4);
  const CharacterGroup g4(c4);
  for (const auto& chi : enumerate_characters(c4)) EXPECT_LE(g4.order(chi), 2);
}

TEST(Characters, ValuesAreRootsOfUnity) {
  const auto c = homology_Ln(module_of("figure-eight"), 3);
  const CharacterGroup g(c);
  EXPECT_EQ(g.exponent_modulus(), 4);
  for (const auto& chi : enumerate_characters(c))
    for (const auto& h : c.generator_images) {
      const mpq_class v = g.value(chi, h);
      EXPECT_GE(v, 0);
      EXPECT_LT(v, 1);
      EXPECT_EQ(4 % v.get_den(), 0);
    }
}

TEST(CountDirect, ReferenceExamples) {
  DivisorTower tre(module_of("trefoil"));
  EXPECT_EQ(count_direct(2, tre).classes, 1);
  DivisorTower fig(module_of("figure-eight"));
  EXPECT_EQ(count_direct(2, fig).classes, 2);
  EXPECT_EQ(count_direct(3, fig).classes, 5);
  EXPECT_EQ(count_direct(3, fig).order_n_characters, 15);
}

TEST(CountMobius, ReferenceExamples) {
  DivisorTower tre(module_of("trefoil"));
  EXPECT_EQ(count_mobius(2, tre), 1);
  EXPECT_EQ(count_mobius(4, tre), 0);
  EXPECT_EQ(count_mobius(5, tre), 0);
  EXPECT_THROW(count_mobius(6, tre), InfiniteHomology);
  EXPECT_EQ(count_mobius(4, {{1, 1}, {2, 3}, {4, 3}}), 0);
  EXPECT_THROW(count_mobius(2, {{1, 1}, {2, 4}}), DivisibilityViolation);
}

TEST(Counting, AllFixturesMatchFrozenTable) {
  for (const auto& [name, counts] : kCounts) {
    DivisorTower tower(module_of(name));
    for (int n = 2; n <= 6; ++n) {
      const long expected = counts[static_cast<std::size_t>(n - 2)];
      const CountReport r = count_report(n, tower);
      EXPECT_TRUE(r.agree) << name << " n=" << n;
      if (expected < 0) {
        EXPECT_EQ(r.verdict, Verdict::PositiveDimensional) << name << " n=" << n;
        continue;
      }
      ASSERT_TRUE(r.direct.has_value()) << name << " n=" << n;
      EXPECT_EQ(r.direct->get_si(), expected) << name << " n=" << n;
      EXPECT_EQ(r.mobius->get_si(), expected) << name << " n=" << n;
      EXPECT_EQ(r.verdict, expected ? Verdict::Finite : Verdict::Empty) << name << " n=" << n;
    }
  }
}

TEST(Counting, TwoFoldFormula) {
  for (const auto& f : fixtures()) {
    const auto a = module_of(f.name);
    DivisorTower tower(a);
    EXPECT_EQ(count_direct(2, tower).classes->get_si(), oracle::two_fold_count(alexander_polynomial(a))) << f.name;
  }
}

TEST(Counting, BruteForceOracleOnSmallCases) {
  const std::vector<std::pair<std::string, int>> cases = {
      {"trefoil", 2}, {"trefoil", 3}, {"trefoil", 4}, {"trefoil", 5}, {"figure-eight", 2},
      {"figure-eight", 3}, {"granny", 2}, {"granny", 3}, {"t2_7", 3}};
  for (const auto& [name, n] : cases) {
    const auto a = module_of(name);
    DivisorTower tower(a);
    const auto c = tower.get(n);
    const long long e = c->group.torsion.empty() ? 1 : c->group.torsion.back().get_si();
    const auto brute = oracle::brute_force_characters(a.relations, n, e);
    ASSERT_GT(brute.total, 0) << name << " n=" << n << " search space too large";
    EXPECT_EQ(brute.total, c->group.order()->get_si()) << name;
    EXPECT_EQ(mpz_class(static_cast<long>(brute.order_n_orbits)), *count_direct(n, tower).classes) << name << " n=" << n;
    // Characters of each order agree as well.
    const CharacterGroup g(*c);
    std::map<int, long long> by_order;
    for (const auto& chi : enumerate_characters(*c)) ++by_order[g.order(chi)];
    EXPECT_EQ(by_order, brute.by_order) << name << " n=" << n;
  }
}

TEST(InfiniteCase, Verdicts) {
  DivisorTower tre(module_of("trefoil"));
  EXPECT_EQ(infinite_case(6, tre), Verdict::PositiveDimensional);
  EXPECT_EQ(infinite_case(12, tre), Verdict::Empty);
  DivisorTower synthetic(synthetic_z2_plus_z());
  const auto c = synthetic.get(2);
  EXPECT_EQ(c->group.free_rank, 1);
  EXPECT_EQ(c->group.torsion, std::vector<mpz_class>{2});
  EXPECT_EQ(infinite_case(2, synthetic), Verdict::Empty);
  EXPECT_THROW(infinite_case(2, tre), std::invalid_argument);
}

TEST(ExistenceReport, Trefoil) {
  const auto a = module_of("trefoil");
  DivisorTower tower(a);
  const auto r = existence_report(alexander_polynomial(a), invariant_factors_Q(a), tower, 6);
  EXPECT_EQ(r.m, 6);
  EXPECT_EQ(r.lambda1_divides_tm_minus_1, true);
  EXPECT_TRUE(r.all_roots_cyclotomic);
  ASSERT_EQ(r.verdicts.size(), 5u);
  const std::vector<Verdict> expected = {Verdict::Finite, Verdict::Finite, Verdict::Empty, Verdict::Empty,
                                         Verdict::PositiveDimensional};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(r.verdicts[i].verdict, expected[i]) << i;
  EXPECT_EQ(r.verdicts[0].count, 1);
  EXPECT_EQ(r.verdicts[1].count, 1);
  EXPECT_EQ(r.verdicts[4].betti, 2);
}

TEST(ExistenceReport, UnknotAndFigureEight) {
  const auto u = module_of("unknot");
  DivisorTower ut(u);
  const auto ur = existence_report(alexander_polynomial(u), invariant_factors_Q(u), ut, 8);
  EXPECT_FALSE(ur.m.has_value());
  for (const auto& v : ur.verdicts) EXPECT_EQ(v.verdict, Verdict::Empty);

  const auto f = module_of("figure-eight");
  DivisorTower ft(f);
  const auto fr = existence_report(alexander_polynomial(f), invariant_factors_Q(f), ft, 4);
  EXPECT_FALSE(fr.m.has_value());
  EXPECT_FALSE(fr.lambda1_divides_tm_minus_1.has_value());
  ASSERT_EQ(fr.verdicts.size(), 3u);
  EXPECT_EQ(fr.verdicts[0].count, 2);
  EXPECT_EQ(fr.verdicts[1].count, 5);
  EXPECT_EQ(fr.verdicts[2].count, 10);
  for (const auto& v : fr.verdicts) EXPECT_EQ(v.verdict, Verdict::Finite);
}

TEST(DivisorTower, ConcurrentAccessReturnsOneValue) {
  DivisorTower tower(module_of("figure-eight"));
  std::vector<std::thread> threads;
  std::vector<std::shared_ptr<const CoverHomology>> seen(8);
  for (std::size_t i = 0; i < seen.size(); ++i) threads.emplace_back([&, i] { seen[i] = tower.get(4); });
  for (auto& t : threads) t.join();
  for (const auto& s : seen) EXPECT_EQ(s, tower.get(4));
}
