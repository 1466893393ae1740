#include <gtest/gtest.h>

#include <sstream>

#include "hslin/characters.hpp"
#include "hslin/repcheck.hpp"

using namespace hslin;

namespace {

bool contains(const std::vector<Character>& set, const Character& chi) {
  return std::find(set.begin(), set.end(), chi) != set.end();
}

std::vector<Element> subset(std::uint32_t mask, std::size_t n) {
  std::vector<Element> s;
  for (Element a = 0; a < n; ++a)
    if (mask >> a & 1u) s.push_back(a);
  return s;
}

}  // namespace

TEST(Characters, CyclicOfOrderTwo) {
  const auto chars = enumerate_1dim_characters(cyclic(2));
  ASSERT_EQ(chars.size(), 2u);
  EXPECT_TRUE(chars[0].is_trivial());
  EXPECT_NEAR(chars[1].value(0).real(), 1.0, 1e-15);
  EXPECT_NEAR(chars[1].value(1).real(), -1.0, 1e-15);
}

TEST(Characters, Counts) {
  EXPECT_EQ(enumerate_1dim_characters(symmetric(3)).size(), 2u);
  EXPECT_EQ(enumerate_1dim_characters(dihedral(4)).size(), 4u);
  EXPECT_EQ(enumerate_1dim_characters(quaternion()).size(), 4u);
  EXPECT_EQ(enumerate_1dim_characters(make_group("Z4xZ4")).size(), 16u);
  EXPECT_EQ(enumerate_1dim_characters(symmetric(4)).size(), 2u);
}

TEST(Characters, HomomorphismsClosedUnderProductAndConjugate) {
  for (const char* name : {"S3", "D4", "Q8", "Z4xZ4", "Z2xS3", "Z6"}) {
    const FiniteGroup g = make_group(name);
    const auto chars = enumerate_1dim_characters(g);
    const Subgroup comm = commutator_subgroup(g);
    for (const auto& chi : chars) {
      EXPECT_TRUE(chi.constant_on(comm));
      for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
          ASSERT_EQ((chi.phase[a] + chi.phase[b]) % chi.modulus, chi.phase[g.op(a, b)]) << name;
      EXPECT_TRUE(contains(chars, conjugate(chi))) << name;
      for (const auto& psi : chars) EXPECT_TRUE(contains(chars, multiply(chi, psi)));
    }
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = i + 1; j < chars.size(); ++j) EXPECT_FALSE(chars[i] == chars[j]);
  }
}

TEST(Characters, AbelianIndexedByElement) {
  const FiniteGroup g = make_group("Z2xZ6");
  const auto chars = enumerate_1dim_characters(g);
  EXPECT_TRUE(chars[g.identity()].is_trivial());
  for (std::size_t c = 1; c < chars.size(); ++c) EXPECT_FALSE(chars[c].is_trivial());
}

TEST(Catalog, ValueTokens) {
  EXPECT_EQ(parse_catalog_value("0"), std::complex<double>(0, 0));
  EXPECT_EQ(parse_catalog_value("-1"), std::complex<double>(-1, 0));
  EXPECT_EQ(parse_catalog_value("1^1/4"), std::complex<double>(0, 1));
  EXPECT_EQ(parse_catalog_value("2^3/4"), std::complex<double>(0, -2));
  EXPECT_NEAR(std::abs(parse_catalog_value("1^1/3") - std::polar(1.0, 2 * M_PI / 3)), 0.0, 1e-15);
  EXPECT_EQ(parse_catalog_value("(1/2,-3/4)"), std::complex<double>(0.5, -0.75));
  EXPECT_THROW(parse_catalog_value("x"), Error);
  EXPECT_THROW(parse_catalog_value("1/0"), Error);
  EXPECT_THROW(parse_catalog_value("(1,2"), Error);
}

TEST(Catalog, ParseErrors) {
  auto code = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_irrep_catalog(in);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("ok");
  };
  EXPECT_NE(code("group Z2\nirrep 1\n0 = 1\n1 = -1\n").find("missing 'end'"), std::string::npos);
  EXPECT_NE(code("group Z2\nirrep 1\n0 = 1 1\nend\n").find("line 3"), std::string::npos);
  EXPECT_NE(code("group Z2\nirrep 1\n1 = 1\nend\n").find("line 3"), std::string::npos);
  EXPECT_NE(code("irrep 1\n").find("line 1"), std::string::npos);
  EXPECT_EQ(code("group Z2\nirrep 1\n0 = 1\n1 = -1\nend\n"), "ok");
}

TEST(Catalog, BuiltinEntriesAreValid) {
  const auto& catalog = builtin_irrep_catalog();
  ASSERT_EQ(catalog.size(), 3u);
  const std::map<std::string, std::vector<std::size_t>> dims{
      {"S3", {1, 1, 2}}, {"D4", {1, 1, 1, 1, 2}}, {"Q8", {1, 1, 1, 1, 2}}};
  for (const auto& entry : catalog) {
    const FiniteGroup g = make_group(entry.group);
    std::vector<std::size_t> d;
    for (const auto& rho : entry.irreps) d.push_back(rho.dim);
    EXPECT_EQ(d, dims.at(entry.group));
    const CatalogValidation v = validate_catalog_entry(entry, g);
    EXPECT_TRUE(v.ok()) << entry.group;
    EXPECT_EQ(v.dimension_square_sum, g.order());
    EXPECT_LE(v.homomorphism_error, kIdentityTolerance);
    EXPECT_LE(v.orthogonality_error, kIdentityTolerance);
  }
  EXPECT_NE(find_catalog_entry("Q8"), nullptr);
  EXPECT_EQ(find_catalog_entry("A5"), nullptr);
}

TEST(Catalog, ValidationCatchesBrokenEntries) {
  IrrepCatalogEntry entry = *find_catalog_entry("S3");
  const FiniteGroup g = symmetric(3);
  entry.irreps[2].images[1](0, 1) = 2.0;
  EXPECT_FALSE(validate_catalog_entry(entry, g).ok());
  IrrepCatalogEntry missing = *find_catalog_entry("S3");
  missing.irreps.pop_back();
  EXPECT_EQ(validate_catalog_entry(missing, g).dimension_square_sum, 2u);
  EXPECT_FALSE(validate_catalog_entry(missing, g).ok());
}

TEST(EpsilonGap, PaperPair) {
  const FiniteGroup g = make_group("Z4xZ4");
  const std::vector<Element> s{1, 4};
  const GapReport r = check_epsilon_gap(g, s, compute_HS(g, s));
  EXPECT_EQ(r.constant_count, 4u);
  EXPECT_EQ(r.expected_constant_count, 4u);
  EXPECT_EQ(std::count_if(r.items.begin(), r.items.end(), [](const GapItem& i) { return i.relevant; }), 12);
  EXPECT_FALSE(r.vacuous);
  EXPECT_GE(r.gap, kGapMargin);
  EXPECT_TRUE(r.holds);
  EXPECT_GT(r.formula_gap, 0.0);
}

TEST(EpsilonGap, SingletonIdentityIsVacuous) {
  const FiniteGroup g = make_group("Z2xZ4");
  const std::vector<Element> s{0};
  const GapReport r = check_epsilon_gap(g, s, compute_HS(g, s));
  EXPECT_EQ(r.constant_count, 8u);
  EXPECT_TRUE(r.vacuous);
  EXPECT_TRUE(r.holds);
}

TEST(EpsilonGap, WholeGroupHasFullGap) {
  const FiniteGroup g = make_group("Z6");
  const std::vector<Element> s{0, 1, 2, 3, 4, 5};
  const GapReport r = check_epsilon_gap(g, s, compute_HS(g, s));
  EXPECT_NEAR(r.gap, 1.0, 1e-12);
  EXPECT_EQ(r.constant_count, 1u);
}

TEST(EpsilonGap, EverySubsetOfCatalogGroups) {
  for (const char* name : {"S3", "D4", "Q8", "Z2xZ4", "Z6"}) {
    const FiniteGroup g = make_group(name);
    for (std::uint32_t mask = 1; mask < (1u << g.order()); ++mask) {
      const auto s = subset(mask, g.order());
      const GapReport r = check_epsilon_gap(g, s, compute_HS(g, s));
      ASSERT_TRUE(r.holds) << name << " mask " << mask;
    }
  }
}

TEST(OperatorNorm, WholeGroupAveragesToZero) {
  const FiniteGroup g = quaternion();
  const std::vector<Element> s{0, 1, 2, 3, 4, 5, 6, 7};
  const GapReport r = check_operator_norm_gap(*find_catalog_entry("Q8"), g, s, compute_HS(g, s));
  EXPECT_TRUE(r.hypothesis_met);
  EXPECT_NEAR(r.gap, 1.0, 1e-12);
  EXPECT_TRUE(r.holds);
}

TEST(OperatorNorm, SingleElementIsUnitary) {
  const FiniteGroup g = dihedral(4);
  const std::vector<Element> s{4};
  const GapReport r = check_operator_norm_gap(*find_catalog_entry("D4"), g, s, compute_HS(g, s));
  EXPECT_FALSE(r.hypothesis_met);
  EXPECT_NEAR(r.gap, 0.0, 1e-12);
  EXPECT_TRUE(r.holds);  // reported, not asserted
}

TEST(OperatorNorm, IdentityAndTranspositionInS3) {
  // S^-1 S = {e, (01)} generates a subgroup of order 2 while H_S = S3, and
  // (01) fixes a vector of the 2-dim irrep, so the norm is exactly 1.
  const FiniteGroup g = symmetric(3);
  const std::vector<Element> s{0, 2};
  const HsResult hs = compute_HS(g, s);
  EXPECT_FALSE(hs.generated_by_SinvS);
  const GapReport r = check_operator_norm_gap(*find_catalog_entry("S3"), g, s, hs);
  EXPECT_FALSE(r.hypothesis_met);
  EXPECT_NEAR(r.gap, 0.0, 1e-12);
}

TEST(OperatorNorm, GapWheneverHypothesisHolds) {
  for (const auto& entry : builtin_irrep_catalog()) {
    const FiniteGroup g = make_group(entry.group);
    std::size_t checked = 0;
    for (std::uint32_t mask = 1; mask < (1u << g.order()); ++mask) {
      const auto s = subset(mask, g.order());
      const HsResult hs = compute_HS(g, s);
      const GapReport r = check_operator_norm_gap(entry, g, s, hs);
      ASSERT_TRUE(r.holds) << entry.group << " mask " << mask;
      if (r.hypothesis_met) {
        ++checked;
        EXPECT_GE(r.gap, kGapMargin);
      }
    }
    EXPECT_GT(checked, 0u);
  }
}
