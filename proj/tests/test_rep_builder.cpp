#include <gtest/gtest.h>

#include <random>

#include "knotrep/arith.hpp"
#include "knotrep/counting.hpp"
#include "knotrep/errors.hpp"
#include "knotrep/faithful_rep.hpp"
#include "knotrep/fixtures.hpp"
#include "knotrep/metabelian_rep.hpp"
#include "oracles.hpp"

using namespace knotrep;

namespace {

struct Knot {
  WirtingerPresentation w;
  AlexanderModulePresentation a;
};

Knot knot(const std::string& name) {
  Knot k;
  k.w = braid_to_wirtinger(fixture(name).braid);
  k.a = alexander_module(k.w);
  return k;
}

std::vector<Character> order_n(const CoverHomology& c) {
  const CharacterGroup g(c);
  std::vector<Character> out;
  for (const auto& chi : enumerate_characters(c))
    if (g.order(chi) == c.n) out.push_back(chi);
  return out;
}

MonomialMatrix random_monomial(std::mt19937& rng, int dim, std::int64_t n) {
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::int64_t> exps(static_cast<std::size_t>(dim));
  for (auto& e : exps) e = std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng);
  return {perm, exps, n};
}

}  // namespace

TEST(Monomial, Products) {
  const auto t = MonomialMatrix::companion(2, 6, 12);  // corner -1
  EXPECT_EQ(t * MonomialMatrix::identity(2, 12), t);
  const auto t2 = t * t;
  EXPECT_EQ(t2.perm(), (std::vector<int>{0, 1}));
  EXPECT_EQ(t2.exps(), (std::vector<std::int64_t>{6, 6}));
  EXPECT_TRUE(t2.is_scalar(6));
  EXPECT_TRUE(t.power(4).is_identity());
  EXPECT_THROW(t * MonomialMatrix::identity(3, 12), DimensionMismatch);
  EXPECT_THROW(t * MonomialMatrix::identity(2, 6), DimensionMismatch);
}

TEST(Monomial, AgreesWithDenseArithmetic) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 5;
    const auto a = random_monomial(rng, dim, 12), b = random_monomial(rng, dim, 12), c = random_monomial(rng, dim, 12);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_LT((oracle::dense(a * b) - oracle::dense(a) * oracle::dense(b)).cwiseAbs().maxCoeff(), 1e-12);
    const std::complex<double> det = oracle::dense(a).determinant();
    const std::complex<double> expect = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(a.det_exponent()) / 12);
    EXPECT_LT(std::abs(det - expect), 1e-9);
  }
}

TEST(SlRep, TrefoilDegreeTwo) {
  const auto k = knot("trefoil");
  const auto c = homology_Ln(k.a, 2);
  const auto chars = order_n(c);
  ASSERT_EQ(chars.size(), 2u);
  const auto r = build_sl_rep(k.w, c, chars[0]);
  const auto& mu = r.images[0];
  // [[0, -1], [1, 0]]
  EXPECT_EQ(mu.perm(), (std::vector<int>{1, 0}));
  EXPECT_EQ(mu.exps()[0], 0);
  EXPECT_EQ(mu.exps()[1], r.root_order / 2);
  EXPECT_TRUE(mu.trace_exponents().empty());
  EXPECT_TRUE(mu.power(2).is_scalar(r.root_order / 2));
  EXPECT_TRUE(mu.power(4).is_identity());
  const auto v = verify_rep(r, k.w);
  EXPECT_TRUE(v.all_pass());
  EXPECT_EQ(v.meridian_order, 4);
}

TEST(SlRep, TrefoilDegreeThree) {
  const auto k = knot("trefoil");
  const auto c = homology_Ln(k.a, 3);
  for (const auto& chi : order_n(c)) {
    const auto r = build_sl_rep(k.w, c, chi);
    EXPECT_EQ(r.images[0].dim(), 3);
    const auto v = verify_rep(r, k.w);
    EXPECT_TRUE(v.all_pass());
    for (auto d : v.determinant_exponents) EXPECT_EQ(d, 0);
    EXPECT_EQ(v.meridian_order, 3);
  }
}

TEST(SlRep, RejectsWrongOrder) {
  const auto u = knot("unknot");
  const auto c = homology_Ln(u.a, 2);
  EXPECT_THROW(build_sl_rep(u.w, c, CharacterGroup(c).trivial()), OrderMismatch);
  const auto k = knot("trefoil");
  const auto c4 = homology_Ln(k.a, 4);
  for (const auto& chi : enumerate_characters(c4)) EXPECT_THROW(build_sl_rep(k.w, c4, chi), OrderMismatch);
}

TEST(SlRep, DenseOracleConfirmsRelatorsAndLongitude) {
  for (const char* name : {"trefoil", "figure-eight", "5_2", "granny"}) {
    const auto k = knot(name);
    for (int n = 2; n <= 3; ++n) {
      const auto c = homology_Ln(k.a, n);
      for (const auto& chi : order_n(c)) {
        const auto r = build_sl_rep(k.w, c, chi);
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
        for (const auto& rel : k.w.relators) EXPECT_LT((oracle::dense_word(r, rel) - id).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_LT((oracle::dense_word(r, k.w.longitude) - id).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_LT(std::abs(oracle::dense(r.images[0]).trace()), 1e-12);
      }
    }
  }
}

TEST(GlRep, DeterminantsAndSlCoincidence) {
  const auto k = knot("trefoil");
  const auto c = homology_Ln(k.a, 2);
  const auto chi = order_n(c).front();
  const auto gl = build_gl_rep(k.w, c, chi, 0);
  const auto v = verify_rep(gl, k.w);
  EXPECT_TRUE(v.all_pass());
  EXPECT_EQ(gl.images[0].det_exponent(), gl.root_order / 2);  // det = -1
  const auto sl = build_sl_rep(k.w, c, chi);
  const auto same = build_gl_rep(k.w, c, chi, mpq_class(1, 2));
  EXPECT_EQ(same.images, sl.images);
  EXPECT_EQ(same.root_order, sl.root_order);

  // det alpha(w) = (-1)^{(n+1) e(w)} z^{e(w)} on random words.
  const auto c3 = homology_Ln(k.a, 3);
  const auto gl3 = build_gl_rep(k.w, c3, order_n(c3).front(), mpq_class(1, 5));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> gen(1, k.w.generator_count), len(0, 8), sign(0, 1);
  const std::int64_t big = gl3.root_order;
  for (int trial = 0; trial < 100; ++trial) {
    Word word;
    for (int i = len(rng); i > 0; --i) word.push_back(sign(rng) ? gen(rng) : -gen(rng));
    const long e = exponent_sum(word);
    const std::int64_t expected = mod_floor(e * (4 * (big / 2) + big / 5), big);
    EXPECT_EQ(evaluate_word(gl3, word).det_exponent(), expected);
  }
}

TEST(GlRep, AbelianDegreeOne) {
  const auto k = knot("figure-eight");
  const auto c = homology_Ln(k.a, 1);
  const auto r = build_gl_rep(k.w, c, CharacterGroup(c).trivial(), mpq_class(1, 3));
  for (const auto& img : r.images) {
    EXPECT_EQ(img.dim(), 1);
    EXPECT_EQ(img.exps()[0], r.root_order / 3);
  }
  EXPECT_TRUE(verify_rep(r, k.w).relators_ok);
}

TEST(VerifyRep, TamperedRepFails) {
  const auto k = knot("figure-eight");
  const auto c = homology_Ln(k.a, 2);
  auto r = build_sl_rep(k.w, c, order_n(c).front());
  auto exps = r.images[1].exps();
  exps[0] += 1;
  r.images[1] = MonomialMatrix(r.images[1].perm(), exps, r.root_order);
  const auto v = verify_rep(r, k.w);
  EXPECT_FALSE(v.relators_ok);
  EXPECT_FALSE(v.failing_relators.empty());
  EXPECT_FALSE(v.all_pass());
}

TEST(ConjugacyClassId, OrbitsAndCounts) {
  const auto tre = knot("trefoil");
  const auto c2 = homology_Ln(tre.a, 2);
  const auto chars = order_n(c2);
  EXPECT_EQ(conjugacy_class_id(build_sl_rep(tre.w, c2, chars[0])),
            conjugacy_class_id(build_sl_rep(tre.w, c2, chars[1])));

  const auto fig = knot("figure-eight");
  const auto f2 = homology_Ln(fig.a, 2);
  std::set<std::vector<std::int64_t>> ids;
  const CharacterGroup g(f2);
  for (const auto& chi : order_n(f2)) {
    const auto r = build_sl_rep(fig.w, f2, chi);
    ids.insert(conjugacy_class_id(r));
    EXPECT_EQ(conjugacy_class_id(build_sl_rep(fig.w, f2, g.t_act(chi))), conjugacy_class_id(r));
  }
  EXPECT_EQ(ids.size(), 2u);
}

TEST(TraceFingerprint, SeparatesExactlyTheClasses) {
  for (const char* name : {"trefoil", "figure-eight", "5_2"}) {
    const auto k = knot(name);
    for (int n = 2; n <= 3; ++n) {
      const auto c = homology_Ln(k.a, n);
      std::vector<MetabelianRep> reps;
      std::int64_t common = 1;
      for (const auto& chi : order_n(c)) {
        reps.push_back(build_sl_rep(k.w, c, chi));
        common = lcm64(common, reps.back().root_order);
      }
      std::vector<std::vector<CyclotomicInteger>> prints;
      for (const auto& r : reps) prints.push_back(trace_fingerprint(r, 3, common));
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
          EXPECT_EQ(prints[i] == prints[j], reps[i].class_id == reps[j].class_id) << name << " n=" << n;
    }
  }
}

TEST(TraceFingerprint, MeridianTraceIsZero) {
  const auto k = knot("trefoil");
  const auto c = homology_Ln(k.a, 2);
  const auto r = build_sl_rep(k.w, c, order_n(c).front());
  const auto fp = trace_fingerprint(r, 1);
  ASSERT_EQ(fp.size(), static_cast<std::size_t>(2 * k.w.generator_count));
  for (auto v : fp[0]) EXPECT_EQ(v, 0);
}

TEST(FaithfulRep, TrefoilAndFigureEight) {
  for (const char* name : {"trefoil", "figure-eight"}) {
    const auto k = knot(name);
    const auto r = build_faithful_reducible(k.w, k.a);
    EXPECT_EQ(r.blocks.size(), 2u) << name;
    for (const auto& b : r.blocks) EXPECT_EQ(b.size, 1) << name;
    EXPECT_EQ(r.dim, 4) << name;
    EXPECT_LT(r.max_relator_residual, 1e-9) << name;
    EXPECT_LT(r.longitude_residual, 1e-9) << name;
  }
  const auto tre = build_faithful_reducible(knot("trefoil").w, knot("trefoil").a);
  for (const auto& b : tre.blocks) EXPECT_NEAR(std::abs(b.root), 1.0, 1e-12);
  const auto fig = build_faithful_reducible(knot("figure-eight").w, knot("figure-eight").a);
  double lo = std::min(fig.blocks[0].root.real(), fig.blocks[1].root.real());
  EXPECT_NEAR(lo, (3 - std::sqrt(5.0)) / 2, 1e-12);
}

TEST(FaithfulRep, UnknotIsAbelian) {
  const auto k = knot("unknot");
  const auto r = build_faithful_reducible(k.w, k.a);
  EXPECT_EQ(r.dim, 1);
  EXPECT_TRUE(r.blocks.empty());
  EXPECT_NEAR(std::abs(r.images[0](0, 0) - r.x), 0.0, 1e-15);
}

TEST(FaithfulRep, RepeatedRootsGetOneBlockPerElementaryDivisor) {
  const auto k = knot("granny");
  const auto r = build_faithful_reducible(k.w, k.a);
  EXPECT_EQ(r.blocks.size(), 4u);
  EXPECT_EQ(r.dim, 8);
  EXPECT_LT(r.max_relator_residual, 1e-9);
}
