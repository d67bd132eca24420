#include <gtest/gtest.h>

#include "lexcone/generators.hpp"
#include "lexcone/lexvec.hpp"
#include "lexcone/sampling.hpp"
#include "test_support.hpp"

namespace lexcone {
namespace {

using testing::antichain;
using testing::chain;
using testing::q;
using testing::vec;
using testing::wedge_poset;

TEST(Arithmetic, Examples) {
  const Poset p = antichain({"a", "b"});
  const LexVector ea = LexVector::basis(p, "a");
  EXPECT_EQ(ea + ea, vec(p, {{"a", "2"}}));
  EXPECT_TRUE(scale(Rational(0), vec(p, {{"a", "3"}, {"b", "-1"}})).is_zero());
  EXPECT_TRUE((ea + Rational(-1) * ea).is_zero());
  EXPECT_EQ((ea + Rational(-1) * ea).support_size(), 0u);
}

TEST(Arithmetic, PosetMismatch) {
  const LexVector f = LexVector::basis(chain({"a", "b"}), "a");
  const LexVector g = LexVector::basis(antichain({"a", "b"}), "a");
  EXPECT_THROW(f + g, PosetMismatch);
  EXPECT_THROW(leq(f, g), PosetMismatch);
  EXPECT_THROW(pairing(f, g), PosetMismatch);
  // Structurally equal posets built separately are the same poset.
  EXPECT_NO_THROW(f + LexVector::basis(chain({"a", "b"}), "b"));
}

TEST(IsPositive, Examples) {
  EXPECT_TRUE(vec(chain({"a", "b"}), {{"a", "1"}, {"b", "-5"}}).is_positive());
  EXPECT_FALSE(vec(antichain({"a", "b"}), {{"a", "1"}, {"b", "-1"}}).is_positive());
  EXPECT_TRUE(LexVector(wedge_poset()).is_positive());
  EXPECT_FALSE(vec(wedge_poset(), {{"s", "1"}, {"t", "-1"}, {"m", "-1"}}).is_positive());
}

TEST(IsPositive, NeedsAStrictlyLowerPositive) {
  const Poset p = chain({"a", "b", "c"});
  EXPECT_TRUE(vec(p, {{"a", "1/1000"}, {"b", "-9"}, {"c", "-9"}}).is_positive());
  EXPECT_FALSE(vec(p, {{"b", "1"}, {"a", "-1"}}).is_positive());
  EXPECT_TRUE(vec(p, {{"b", "1"}, {"c", "-7"}}).is_positive());
}

TEST(Leq, Examples) {
  const Poset c = chain({"a", "b"});
  const LexVector f = vec(c, {{"a", "1"}, {"b", "-5"}});
  EXPECT_TRUE(leq(f, f));
  EXPECT_TRUE(leq(LexVector(c), f));

  const Poset w = wedge_poset();
  const LexVector g = vec(w, {{"s", "1"}, {"t", "-1"}, {"m", "-1"}});
  EXPECT_FALSE(leq(g, LexVector(w)));
  EXPECT_FALSE(leq(LexVector(w), g));
}

TEST(Pairing, Examples) {
  const Poset p = antichain({"a", "b"});
  EXPECT_EQ(pairing(LexVector::basis(p, "a"), LexVector::basis(p, "a")), 1);
  EXPECT_EQ(pairing(LexVector::basis(p, "a"), LexVector::basis(p, "b")), 0);
  EXPECT_EQ(pairing(vec(p, {{"a", "2"}, {"b", "-3"}}), vec(p, {{"a", "1"}, {"b", "1"}})), -1);
}

TEST(DualGenerators, Examples) {
  const Poset w = wedge_poset();
  EXPECT_EQ(dual_generators(w), (std::vector<LexVector>{LexVector::basis(w, "s"), LexVector::basis(w, "t")}));
  const Poset c = chain({"a", "b", "c"});
  EXPECT_EQ(dual_generators(c), std::vector<LexVector>{LexVector::basis(c, "a")});
  const Poset a = antichain({"a", "b", "c"});
  EXPECT_EQ(dual_generators(a).size(), 3u);
}

TEST(DualViolationWitness, Examples) {
  const Poset c2 = chain({"a", "b"});
  auto w = dual_violation_witness(c2, "b", vec(c2, {{"a", "1"}, {"b", "1"}}));
  EXPECT_EQ(w.f, vec(c2, {{"a", "1"}, {"b", "-2"}}));
  EXPECT_EQ(w.n, 2);
  EXPECT_EQ(w.pairing, -1);

  w = dual_violation_witness(c2, "b", LexVector::basis(c2, "b"));
  EXPECT_EQ(w.f, vec(c2, {{"a", "1"}, {"b", "-1"}}));
  EXPECT_EQ(w.n, 1);
  EXPECT_EQ(w.pairing, -1);

  const Poset c3 = chain({"a", "b", "c"});
  w = dual_violation_witness(c3, "c", LexVector::basis(c3, "c"));
  EXPECT_EQ(w.t, "a");
  EXPECT_EQ(w.f, vec(c3, {{"a", "1"}, {"c", "-1"}}));
  EXPECT_EQ(w.pairing, -1);
}

TEST(DualViolationWitness, LeastMultiplier) {
  const Poset c2 = chain({"a", "b"});
  // ratio 5/2, so n = 3
  auto w = dual_violation_witness(c2, "b", vec(c2, {{"a", "5"}, {"b", "2"}}));
  EXPECT_EQ(w.n, 3);
  EXPECT_EQ(w.pairing, -1);
  // Ratio exactly 3: n must be 4, not 3.
  w = dual_violation_witness(c2, "b", vec(c2, {{"a", "3"}, {"b", "1"}}));
  EXPECT_EQ(w.n, 4);
}

TEST(DualViolationWitness, Errors) {
  const Poset c2 = chain({"a", "b"});
  EXPECT_THROW(dual_violation_witness(c2, "a", LexVector::basis(c2, "a")), NotApplicable);
  EXPECT_THROW(dual_violation_witness(c2, "b", LexVector::basis(c2, "a")), NotApplicable);
  EXPECT_THROW(dual_violation_witness(c2, "b", vec(c2, {{"a", "-1"}, {"b", "1"}})), NotApplicable);
}

// Property tests on random posets.
class LexVectorProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(LexVectorProperties, ConeAxioms) {
  Rng rng(GetParam());
  const Poset p = sampling::random_poset(rng, 1, 8);
  const LexVector f = random_positive(p, rng, 4), g = random_positive(p, rng, 4);
  ASSERT_TRUE(f.is_positive());
  ASSERT_TRUE(g.is_positive());
  EXPECT_TRUE((f + g).is_positive());
  EXPECT_TRUE((rng.positive_rational(9, 4) * f).is_positive());
  for (int k = 0; k < 20; ++k) {
    const LexVector h = sampling::random_vector(rng, p);
    if (h.is_positive() && (-h).is_positive()) {
      EXPECT_TRUE(h.is_zero());
    }
  }
}

TEST_P(LexVectorProperties, PositivityPersistsUnderLinearExtension) {
  Rng rng(GetParam());
  const Poset p = sampling::random_poset(rng, 1, 8);
  const Poset line = Poset::chain(p.linear_extension());
  for (int k = 0; k < 20; ++k) {
    const LexVector h = sampling::random_vector(rng, p);
    LexVector on_line(line);
    for (const auto& [i, value] : h.entries()) on_line.set(p.label(i), value);
    if (h.is_positive()) {
      EXPECT_TRUE(on_line.is_positive());
    }
  }
}

TEST_P(LexVectorProperties, DirectSumIsCoordinatewise) {
  Rng rng(GetParam());
  const Poset left = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  const Poset right = sampling::random_poset(rng, 1, 4);
  std::vector<std::string> renamed;
  Poset::Relation covers;
  for (const auto& l : right.labels()) renamed.push_back("r" + l);
  for (const auto& [x, y] : right.covers()) covers.emplace_back("r" + x, "r" + y);
  const Poset r = Poset::from_covers(renamed, covers);
  const Poset u = disjoint_union(left, r);
  for (int k = 0; k < 30; ++k) {
    const LexVector h = sampling::random_vector(rng, u);
    const auto in_left = [&](std::size_t i) { return left.contains(u.label(i)); };
    const LexVector hl = h.restricted(in_left);
    const LexVector hr = h.restricted([&](std::size_t i) { return !in_left(i); });
    EXPECT_EQ(h.is_positive(), hl.is_positive() && hr.is_positive());
  }
}

TEST_P(LexVectorProperties, DualCone) {
  Rng rng(GetParam());
  const Poset p = sampling::random_poset(rng, 1, 8);
  const LexVector f = random_positive(p, rng, 5);
  for (const auto& g : dual_generators(p)) {
    EXPECT_TRUE(in_dual_cone(g));
    EXPECT_GE(pairing(f, g), 0);
  }
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p.is_minimal(s)) continue;
    LexVector g = LexVector::basis(p, s);
    for (auto m : p.minimal_indices()) g.set(m, rng.positive_rational(7, 2));
    EXPECT_FALSE(in_dual_cone(g));
    const auto w = dual_violation_witness(p, p.label(s), g);
    EXPECT_TRUE(w.f.is_positive());
    EXPECT_LT(pairing(w.f, g), 0);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LexVectorProperties, ::testing::Range<std::uint64_t>(0, 60));

}  // namespace
}  // namespace lexcone
