#include <gtest/gtest.h>

#include <random>

#include "hslin/hs_subgroup.hpp"
#include "oracles.hpp"

using namespace hslin;

namespace {

std::vector<Element> elems(const Subgroup& h) { return {h.elements().begin(), h.elements().end()}; }

void expect_hs_properties(const FiniteGroup& g, const std::vector<Element>& s, const HsResult& hs) {
  const Subgroup& h = hs.subgroup;
  EXPECT_TRUE(commutator_subgroup(g).is_subset_of(h));
  EXPECT_TRUE(is_normal(g, h));
  const Element rinv = g.inv(hs.coset_rep);
  for (Element a : s) EXPECT_TRUE(h.contains(g.op(rinv, a)));
  EXPECT_EQ(hs.ratio_num, normalize_set(g, s).size());
  EXPECT_EQ(hs.ratio_den, h.order());
}

}  // namespace

TEST(HS, PaperExample) {
  const FiniteGroup g = make_group("Z4xZ4");
  const std::vector<Element> s{1, 4};  // (0,1), (1,0)
  const HsResult hs = compute_HS(g, s);
  EXPECT_EQ(elems(hs.subgroup), (std::vector<Element>{0, 7, 10, 13}));
  std::vector<std::string> labels;
  for (Element a : hs.subgroup.elements()) labels.push_back(g.label(a));
  EXPECT_EQ(labels, (std::vector<std::string>{"(0,0)", "(1,3)", "(2,2)", "(3,1)"}));
  EXPECT_EQ(hs.ratio_num, 2u);
  EXPECT_EQ(hs.ratio_den, 4u);
  EXPECT_EQ(hs.coset_rep, 1u);
  EXPECT_TRUE(hs.generated_by_SinvS);
}

TEST(HS, BoundaryCases) {
  const FiniteGroup s3 = symmetric(3);
  const std::vector<Element> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(compute_HS(s3, all).subgroup.order(), 6u);
  const std::vector<Element> single{5};
  const HsResult one = compute_HS(s3, single);
  EXPECT_EQ(one.subgroup, commutator_subgroup(s3));
  EXPECT_FALSE(one.generated_by_SinvS);

  const FiniteGroup z6 = cyclic(6);
  const std::vector<Element> zero{0};
  EXPECT_EQ(compute_HS(z6, zero).subgroup.order(), 1u);
  EXPECT_TRUE(compute_HS(z6, zero).generated_by_SinvS);
}

TEST(HS, TranspositionPairDoesNotGenerate) {
  const FiniteGroup s3 = symmetric(3);
  const std::vector<Element> s{0, 1};  // e and a transposition
  const HsResult hs = compute_HS(s3, s);
  EXPECT_EQ(hs.subgroup.order(), 6u);
  EXPECT_FALSE(hs.generated_by_SinvS);
}

TEST(HS, DuplicatesAndOrder) {
  const FiniteGroup g = make_group("Z4xZ4");
  const std::vector<Element> messy{4, 1, 4};
  const HsResult hs = compute_HS(g, messy);
  EXPECT_EQ(elems(hs.subgroup), (std::vector<Element>{0, 7, 10, 13}));
  EXPECT_EQ(hs.ratio_num, 2u);
}

TEST(HS, Errors) {
  const FiniteGroup g = cyclic(4);
  try {
    compute_HS(g, std::vector<Element>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyS);
  }
  try {
    compute_HS(g, std::vector<Element>{7});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidElementId);
  }
}

TEST(HS, SubgroupCounts) {
  // Known subgroup lattices.
  EXPECT_EQ(all_subgroups(symmetric(3)).size(), 6u);
  EXPECT_EQ(all_subgroups(dihedral(4)).size(), 10u);
  EXPECT_EQ(all_subgroups(quaternion()).size(), 6u);
  EXPECT_EQ(all_subgroups(make_group("Z2xZ2")).size(), 5u);
  EXPECT_EQ(all_subgroups(make_group("Z4xZ4")).size(), 15u);
  EXPECT_EQ(all_subgroups(cyclic(12)).size(), 6u);
  EXPECT_THROW(all_subgroups(symmetric(5)), Error);
}

TEST(HS, EveryOrderEightSubsetMatchesOracle) {
  for (const char* name : {"Z2", "Z3", "Z4", "Z6", "Z8", "Z2xZ2", "Z2xZ4", "S3", "D4", "Q8"}) {
    const FiniteGroup g = make_group(name);
    const auto subgroups = all_subgroups(g);
    for (std::uint32_t mask = 1; mask < (1u << g.order()); ++mask) {
      std::vector<Element> s;
      for (Element a = 0; a < g.order(); ++a)
        if (mask >> a & 1u) s.push_back(a);
      const HsResult fast = compute_HS(g, s);
      const HsResult slow = brute_force_HS(g, s, subgroups);
      ASSERT_EQ(fast.subgroup, slow.subgroup) << name << " mask " << mask;
      expect_hs_properties(g, s, fast);
    }
  }
}

TEST(HS, RandomSubsetsOfLargerGroups) {
  std::mt19937_64 rng(5);
  for (const char* name : {"Z4xZ4", "D6", "Z2xS3", "Z2xD4", "S4"}) {
    const FiniteGroup g = make_group(name);
    const auto subgroups = all_subgroups(g);
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<Element> s;
      const std::size_t size = 1 + rng() % 4;
      for (std::size_t i = 0; i < size; ++i) s.push_back(static_cast<Element>(rng() % g.order()));
      const HsResult fast = compute_HS(g, s);
      ASSERT_EQ(fast.subgroup, brute_force_HS(g, s, subgroups).subgroup) << name;
      expect_hs_properties(g, s, fast);
    }
  }
}
