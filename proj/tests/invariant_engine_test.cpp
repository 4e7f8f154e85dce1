#include "entinv/invariant_engine.hpp"

#include <gtest/gtest.h>

#include <random>

#include "entinv/errors.hpp"
#include "test_util.hpp"

using namespace entinv;
using entinv::testing::st;

namespace {

SubsetFamily fam(int n, std::initializer_list<const char*> members) {
  std::vector<Subset> m;
  for (const char* d : members) {
    Subset s = 0;
    for (const char* p = d; *p; ++p) s |= subset_bit(*p - '0');
    m.push_back(s);
  }
  return SubsetFamily(n, m);
}

std::vector<int> v(std::initializer_list<int> xs) { return xs; }

}  // namespace

TEST(FamilyNullity, Examples) {
  const SubsetFamily q4 = fam(3, {"12", "13", "23"});
  EXPECT_EQ(family_nullity(st("[1,1,1]+[2,2,2]", {2, 2, 2}), q4), 0u);
  EXPECT_EQ(family_nullity(State(Shape({2, 2, 2})), fam(3, {"1"})), 8u);
  EXPECT_EQ(family_nullity(st("[1,1,1]+[1,2,2]+[2,1,2]", {2, 2, 2}), q4), 1u);
  EXPECT_THROW(family_nullity(st("[1,1,1]", {2, 2, 2}), SubsetFamily(3, {})), EmptyFamily);
  EXPECT_THROW(family_nullity_reference(st("[1,1,1]", {2, 2, 2}), SubsetFamily(3, {})), EmptyFamily);
}

TEST(MValue, Examples) {
  EXPECT_EQ(m_value(st("[1,1,1]", {2, 2, 2}), fam(3, {"1"})), 1u);
  EXPECT_EQ(m_value(st("[1,1,1,1]+[2,2,2,2]", {2, 2, 2, 2}), fam(4, {"123", "124", "134", "234"})), 6u);
  EXPECT_EQ(m_value(State(Shape({2, 2, 2})), fam(3, {"1"})), 2u);
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(st("[1,1,1]+[2,2,2]", {2, 2, 2}), canonical_generating_set(3)).values, v({0, 0, 0, 0}));
  EXPECT_EQ(signature(State(Shape({2, 2, 2, 2})), canonical_generating_set(4)).values,
            v({2, 2, 2, 2, 8, 8, 8, 8, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16}));
  EXPECT_EQ(signature(st("[1,1,1,1]", {2, 2, 2, 2}), canonical_generating_set(4)).values,
            v({1, 1, 1, 1, 4, 4, 4, 4, 10, 10, 10, 10, 10, 10, 8, 8, 8, 8, 11}));
  EXPECT_THROW(signature(st("[1,1,1]", {2, 2, 2}), canonical_generating_set(4)), ArityMismatch);
  EXPECT_EQ(Signature{v({0, 1, 5})}.to_string(), "0,1,5");
}

TEST(Signature, LargeCoefficientsUseWideArithmetic) {
  // Entries near 2^62 overflow the int64 route and must fall back transparently.
  const Shape shape({2, 2, 2});
  const std::string big = "4611686018427387903";
  const State v = parse_state(big + "*[1,1,1]+" + big + "*[2,2,2]+[1,2,2]+3*[2,1,1]", shape);
  const GeneratingSet r = canonical_generating_set(3);
  const Signature fast = signature(v, r);
  for (std::size_t k = 0; k < r.size(); ++k) {
    const std::size_t n = family_nullity_reference(v, r.families[k]);
    EXPECT_EQ(family_nullity(v, r.families[k]), n);
  }
  EXPECT_EQ(fast, signature(v.scaled(Rational(BigInt(1), BigInt(7))), r));
}

// The fast route (column-space bases, singleton shortcut, integer echelon) is
// checked against the literal stacked extended flattenings over Q.
TEST(FamilyNullity, AgreesWithReferenceRoute) {
  std::mt19937_64 rng(23);
  for (const auto& dims : {std::vector<std::size_t>{2, 2, 2}, {2, 3, 3}, {2, 2, 2, 2}, {3, 2, 2}}) {
    const Shape shape(dims);
    const auto subsets = proper_subsets(shape.arity());
    for (int t = 0; t < 25; ++t) {
      const State s = t % 5 == 0 ? random_state(shape, CoeffSpec::range(-4, 4, 3), rng())
                                 : entinv::testing::random_sparse_state(shape, rng);
      for (int f = 0; f < 6; ++f) {
        std::vector<Subset> m;
        for (Subset j : subsets) {
          if (rng() % 3 == 0) m.push_back(j);
        }
        if (m.empty()) m.push_back(subsets[rng() % subsets.size()]);
        const SubsetFamily q(shape.arity(), m);
        EXPECT_EQ(family_nullity(s, q), family_nullity_reference(s, q)) << render_state(s) << " " << q.to_string();
      }
    }
  }
}

TEST(SignatureProperties, LocalInvarianceRescalingAndBounds) {
  std::mt19937_64 rng(31);
  for (const auto& dims : {std::vector<std::size_t>{2, 2, 2}, {2, 2, 2, 2}}) {
    const Shape shape(dims);
    const GeneratingSet r = canonical_generating_set(shape.arity());
    SignatureEngine engine(shape, r);
    for (int t = 0; t < 20; ++t) {
      const State s = entinv::testing::random_sparse_state(shape, rng);
      const Signature sig = engine(s);
      for (int g = 0; g < 3; ++g) EXPECT_EQ(engine(apply_local(s, random_local_transform(shape, rng()))), sig);
      EXPECT_EQ(engine(s.scaled(Rational(BigInt(-3), BigInt(5)))), sig);
      for (std::size_t k = 0; k < r.size(); ++k) {
        EXPECT_GE(sig[k], 0);
        EXPECT_LE(static_cast<std::size_t>(sig[k]), shape.total_dim());
        if (r.families[k].size() == 1 && !s.is_zero()) {
          EXPECT_LT(static_cast<std::size_t>(sig[k]), shape.dim_of(r.families[k].members()[0]));
        }
      }
    }
  }
}

TEST(SignatureProperties, PermutationEquivariance) {
  std::mt19937_64 rng(37);
  for (const auto& dims : {std::vector<std::size_t>{2, 2, 2}, {2, 2, 2, 2}, {2, 2, 3}}) {
    const Shape shape(dims);
    const GeneratingSet r = canonical_generating_set(shape.arity());
    for (int t = 0; t < 10; ++t) {
      const State s = entinv::testing::random_sparse_state(shape, rng);
      const Signature sig = signature(s, r);
      for (const auto& sigma : shape_symmetries(shape)) {
        EXPECT_EQ(signature(permute_subsystems(s, sigma), r), sig.permuted(r.induced_permutation(sigma)));
      }
    }
  }
}
