#include <gtest/gtest.h>

#include "entinv/atlas.hpp"
#include "entinv/errors.hpp"
#include "entinv/explorer.hpp"
#include "entinv/report_io.hpp"
#include "entinv/state_text.hpp"

using namespace entinv;

namespace {

const std::vector<Rational> kBinary = {Rational(0), Rational(1)};

SearchReport enumerate(std::vector<std::size_t> dims, unsigned workers = 1, std::size_t max_terms = 0) {
  const Shape s(std::move(dims));
  EnumerationOptions opt;
  opt.workers = workers;
  opt.max_terms = max_terms;
  return enumerate_signatures(s, kBinary, canonical_generating_set(s.arity()), opt);
}

}  // namespace

TEST(Enumerate, SmallShapes) {
  const auto r22 = enumerate({2, 2});
  ASSERT_EQ(r22.signatures.size(), 3u);
  EXPECT_EQ(r22.total_states_examined, 16u);
  EXPECT_EQ(enumerate({2, 2, 2}).signatures.size(), 7u);
  EXPECT_EQ(enumerate({2, 2, 3}).signatures.size(), 9u);
}

TEST(Enumerate, RepresentativesAreMinimalAndConsistent) {
  const auto r = enumerate({2, 2, 2});
  std::uint64_t hits = 0;
  SignatureEngine engine(r.shape, canonical_generating_set(3));
  for (const auto& h : r.signatures) {
    EXPECT_EQ(engine(h.representative), h.signature);
    hits += h.hits;
  }
  EXPECT_EQ(hits, 256u);
  // Fully separable class: one term, earliest in the odometer is [1,1,1].
  const auto* c1 = r.find(Signature{{1, 1, 1, 4}});
  ASSERT_NE(c1, nullptr);
  EXPECT_EQ(render_state(c1->representative), "[1,1,1]");
  EXPECT_EQ(render_state(r.find(Signature{{2, 2, 2, 8}})->representative), "0");
}

TEST(Enumerate, IndependentOfWorkerCount) {
  const auto one = enumerate({2, 2, 3}, 1);
  const auto many = enumerate({2, 2, 3}, 5);
  EXPECT_EQ(report_json(one), report_json(many));
  const auto r1 = enumerate({2, 2, 4}, 1, 3);
  const auto r3 = enumerate({2, 2, 4}, 3, 3);
  EXPECT_EQ(report_json(r1), report_json(r3));
}

TEST(Enumerate, TermLimitAgreesWithFullSearch) {
  // Every (2,2,3) class has a {0,1} representative with at most 6 terms.
  const auto full = enumerate({2, 2, 3});
  const auto limited = enumerate({2, 2, 3}, 1, 6);
  ASSERT_EQ(full.signatures.size(), limited.signatures.size());
  for (std::size_t i = 0; i < full.signatures.size(); ++i) {
    EXPECT_EQ(full.signatures[i].signature, limited.signatures[i].signature);
    EXPECT_EQ(full.signatures[i].representative, limited.signatures[i].representative);
  }
  EXPECT_LT(limited.total_states_examined, full.total_states_examined);
}

TEST(Enumerate, Guards) {
  const Shape four({2, 2, 2, 2});
  const std::vector<Rational> six = {Rational(0), Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)};
  EXPECT_THROW(enumerate_signatures(four, six, canonical_generating_set(4)), SearchSpaceTooLarge);
  const Shape s({2, 2});
  EXPECT_THROW(enumerate_signatures(s, {}, canonical_generating_set(2)), InvalidArgument);
  EnumerationOptions opt;
  opt.max_terms = 1;
  EXPECT_THROW(enumerate_signatures(s, {Rational(1), Rational(2)}, canonical_generating_set(2), opt), InvalidArgument);
  // Fractions are cleared before ranking.
  EXPECT_EQ(enumerate_signatures(s, {Rational(0), Rational::parse("1/2")}, canonical_generating_set(2))
                .signatures.size(),
            3u);
}

TEST(MonteCarlo, GenericThreeQubitStatesAreGhz) {
  const Shape s({2, 2, 2});
  const auto r = monte_carlo_search(s, 200, 7, CoeffSpec::generic(), canonical_generating_set(3), {});
  const auto* ghz = r.find(Signature{{0, 0, 0, 0}});
  ASSERT_NE(ghz, nullptr);
  EXPECT_GE(ghz->hits, 195u);
  EXPECT_EQ(r.seed, std::optional<std::uint64_t>(7));
}

TEST(MonteCarlo, GenericFourQubitStatesStayInTheAtlas) {
  const Atlas atlas = builtin_atlas(Shape({2, 2, 2, 2}));
  std::set<Signature> known;
  for (const auto& rec : atlas.records) known.insert(rec.signature);
  EXPECT_TRUE(monte_carlo_search(atlas.shape, 100, 1, CoeffSpec::generic(), atlas.generating_set, known)
                  .signatures.empty());
  // With nothing known, almost every generic draw lands in the generic class C82.
  const auto r = monte_carlo_search(atlas.shape, 100, 1, CoeffSpec::generic(), atlas.generating_set, {});
  const auto* c82 = r.find(atlas.find_label("C82")->signature);
  ASSERT_NE(c82, nullptr);
  EXPECT_GE(c82->hits, 95u);
}

TEST(MonteCarlo, DeterministicAndWorkerIndependent) {
  const Shape s({2, 2, 3});
  const auto spec = CoeffSpec::set({Rational(0), Rational(0), Rational(1)});
  const auto a = monte_carlo_search(s, 300, 42, spec, canonical_generating_set(3), {}, 1);
  const auto b = monte_carlo_search(s, 300, 42, spec, canonical_generating_set(3), {}, 4);
  EXPECT_EQ(report_json(a), report_json(b));
  EXPECT_THROW(monte_carlo_search(s, 0, 1, spec, canonical_generating_set(3), {}), InvalidArgument);
}

TEST(ClassCount, TableValues) {
  EXPECT_EQ(class_count(Shape({2, 2, 2})), 7u);
  EXPECT_EQ(class_count(Shape({2, 3, 7})), 26u);
  EXPECT_EQ(class_count(Shape({7, 3, 2})), 26u);
  EXPECT_EQ(class_count(Shape({2, 2, 2, 2})), 83u);
  EXPECT_EQ(class_count(Shape({3, 5})), 4u);
  EXPECT_EQ(class_count(Shape({2, 4, 8})), 61u);
  EXPECT_EQ(class_count(Shape({3, 3, 5})), 75u);
  EXPECT_THROW(class_count(Shape({2, 2, 2, 3})), Unsupported);
}

TEST(ClassCount, MTableAgreesWithAtlases) {
  // 1 + sum |M_k| reproduces the parametric atlas sizes.
  for (std::size_t d = 2; d <= 7; ++d) {
    EXPECT_EQ(class_count(Shape({2, 2, d})), builtin_atlas(Shape({2, 2, d})).records.size());
    EXPECT_EQ(class_count(Shape({2, 3, d})), builtin_atlas(Shape({2, 3, d})).records.size());
  }
}

TEST(MSet, SmallEntries) {
  EXPECT_EQ(m_set({2, 2, 2}, {1, 1, 1}).values, std::vector<int>{2});
  EXPECT_EQ(m_set({2, 2, 2}, {2, 2, 2}).values, (std::vector<int>{4, 5}));
  EXPECT_EQ(m_set({2, 2, 3}, {2, 2, 3}).values, (std::vector<int>{5, 6}));
  EXPECT_EQ(m_set({5, 5, 5}, {1, 2, 2}).values, std::vector<int>{5});
}

TEST(MSet, SymmetricUnderPermutation) {
  const auto a = m_set({2, 3, 3}, {2, 3, 3}).values;
  EXPECT_EQ(m_set({3, 2, 3}, {3, 2, 3}).values, a);
  EXPECT_EQ(m_set({3, 3, 2}, {3, 3, 2}).values, a);
}

TEST(MSet, Errors) {
  EXPECT_THROW(m_set({2, 2, 2}, {1, 1, 2}), Unsupported);
  EXPECT_THROW(m_set({2, 2, 2}, {3, 1, 1}), InvalidArgument);
  EXPECT_THROW(m_set({2, 2, 2}, {0, 1, 1}), InvalidArgument);
}
