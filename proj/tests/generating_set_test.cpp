#include "entinv/generating_set.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "entinv/errors.hpp"

using namespace entinv;

TEST(ProperSubsets, Counts) {
  EXPECT_EQ(proper_subsets(2), (std::vector<Subset>{1, 2}));
  EXPECT_EQ(proper_subsets(3).size(), 6u);
  EXPECT_EQ(proper_subsets(4).size(), 14u);
  EXPECT_EQ(subset_to_string(0b101), "{1,3}");
}

TEST(SubsetFamily, CanonicalForm) {
  const SubsetFamily q(3, {0b110, 0b011, 0b101});
  EXPECT_EQ(q.members(), (std::vector<Subset>{0b011, 0b101, 0b110}));
  EXPECT_EQ(q.to_string(), "{{1,2},{1,3},{2,3}}");
  EXPECT_EQ(q.union_set(), 0b111u);
  EXPECT_THROW(SubsetFamily(3, {0}), BadSubset);
  EXPECT_THROW(SubsetFamily(3, {7}), BadSubset);
  EXPECT_THROW(SubsetFamily(3, {1, 1}), BadSubset);
}

TEST(CanonicalGeneratingSet, Sizes) {
  EXPECT_EQ(canonical_generating_set(2).size(), 1u);
  const GeneratingSet r3 = canonical_generating_set(3);
  ASSERT_EQ(r3.size(), 4u);
  EXPECT_EQ(r3.families[3].to_string(), "{{1,2},{1,3},{2,3}}");
  const GeneratingSet r4 = canonical_generating_set(4);
  ASSERT_EQ(r4.size(), 19u);
  EXPECT_EQ(r4.labels.back(), "Q19");
  EXPECT_EQ(r4.families[8].to_string(), "{{1,2},{1,3,4},{2,3,4}}");
  EXPECT_THROW(canonical_generating_set(5), UnsupportedArity);
}

TEST(CanonicalGeneratingSet, ClosedUnderPermutations) {
  for (int n : {3, 4}) {
    const GeneratingSet r = canonical_generating_set(n);
    for (const auto& sigma : shape_symmetries(Shape(std::vector<std::size_t>(n, 2)))) {
      auto perm = r.induced_permutation(sigma);
      std::sort(perm.begin(), perm.end());
      for (std::size_t k = 0; k < perm.size(); ++k) EXPECT_EQ(perm[k], k);
    }
  }
}

TEST(ReduceGeneratingSet, SmallArities) {
  const GeneratingSet r2 = reduce_generating_set(2);
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_EQ(r2.families[0], SubsetFamily(2, {1}));

  const GeneratingSet r3 = reduce_generating_set(3);
  EXPECT_EQ(r3.size(), 4u);
  const GeneratingSet c3 = canonical_generating_set(3);
  for (const auto& q : c3.families) EXPECT_NE(r3.find(q), GeneratingSet::npos) << q.to_string();

  const GeneratingSet r4 = reduce_generating_set(4);
  EXPECT_EQ(r4.size(), 19u);
  const GeneratingSet c4 = canonical_generating_set(4);
  for (const auto& q : c4.families) EXPECT_NE(r4.find(q), GeneratingSet::npos) << q.to_string();
  EXPECT_TRUE(std::is_sorted(r4.families.begin(), r4.families.end()));
}

TEST(ReduceGeneratingSet, AntichainSeedGivesSameFixpoint) {
  for (int n : {2, 3, 4}) {
    const GeneratingSet a = reduce_generating_set(n);
    const GeneratingSet b = reduce_generating_set_from(n, proper_subset_antichains(n));
    EXPECT_EQ(a.families, b.families);
  }
}

TEST(ReduceGeneratingSet, FiveSubsystems) {
  const GeneratingSet r5 = reduce_generating_set(5);
  EXPECT_GT(r5.size(), 19u);
  for (const auto& q : r5.families) {
    for (Subset a : q.members())
      for (Subset b : q.members()) EXPECT_NE(a & b, 0u);
  }
}

TEST(ShapeSymmetries, DimensionStabilizer) {
  EXPECT_EQ(shape_symmetries(Shape({2, 2, 2})).size(), 6u);
  EXPECT_EQ(shape_symmetries(Shape({2, 2, 3})).size(), 2u);
  EXPECT_EQ(shape_symmetries(Shape({2, 3, 4})).size(), 1u);
  EXPECT_EQ(shape_symmetries(Shape({2, 2, 2, 2})).size(), 24u);
}
