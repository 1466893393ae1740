#include <gtest/gtest.h>

#include <random>

#include "hslin/dictatorship.hpp"
#include "hslin/fourier.hpp"
#include "hslin/hs_subgroup.hpp"

using namespace hslin;

namespace {

std::shared_ptr<const FiniteGroup> shared(const std::string& name) {
  return std::make_shared<const FiniteGroup>(make_group(name));
}

TestConfig paper_config(Strategy strategy, std::size_t n, std::size_t samples) {
  TestConfig cfg;
  cfg.group = shared("Z4xZ4");
  cfg.satisfying = {1, 4};
  cfg.n = n;
  cfg.samples = samples;
  cfg.seed = 2024;
  cfg.strategy = std::move(strategy);
  return cfg;
}

}  // namespace

TEST(Wilson, KnownValues) {
  const Interval all = wilson_interval(100, 100);
  EXPECT_NEAR(all.low, 0.963, 1e-3);
  EXPECT_DOUBLE_EQ(all.high, 1.0);
  const Interval half = wilson_interval(50, 100);
  EXPECT_NEAR(half.low, 0.4038, 1e-4);
  EXPECT_NEAR(half.high, 0.5962, 1e-4);
  const Interval none = wilson_interval(0, 0);
  EXPECT_EQ(none.low, 0.0);
  EXPECT_EQ(none.high, 1.0);
}

TEST(Dictatorship, DictatorsAlwaysPass) {
  for (const char* name : {"Z4xZ4", "S3", "Q8", "D4"}) {
    for (std::size_t j = 0; j < 3; ++j) {
      TestConfig cfg;
      cfg.group = shared(name);
      cfg.satisfying = {1, 2, 5};
      cfg.n = 3;
      cfg.samples = 2000;
      cfg.seed = j;
      cfg.strategy = Strategy::make_dictator(j);
      const TestEstimate e = run_test(cfg);
      EXPECT_EQ(e.passes, e.samples) << name;
    }
  }
}

TEST(Dictatorship, ExhaustiveDictatorAcceptanceIsOne) {
  for (const char* name : {"S3", "Q8", "Z2xZ4"}) {
    TestConfig cfg;
    cfg.group = shared(name);
    cfg.satisfying = {0, 3};
    cfg.n = 2;
    cfg.strategy = Strategy::make_dictator(1);
    EXPECT_EQ(exact_acceptance(cfg), Rational(1)) << name;
  }
}

TEST(Dictatorship, ConstantFunctionAcceptance) {
  // f = e everywhere: accepted iff e in S.
  auto g = shared("S3");
  TestConfig cfg;
  cfg.group = g;
  cfg.n = 2;
  cfg.strategy = Strategy::from_table(constant_function(*g, 2, g->identity()));
  cfg.satisfying = {0, 4};
  EXPECT_EQ(exact_acceptance(cfg), Rational(1));
  cfg.satisfying = {1, 4};
  EXPECT_EQ(exact_acceptance(cfg), Rational(0));
}

TEST(Dictatorship, QuotientLiftAndUniformRates) {
  // [g]_Q has order 4 in Z4xZ4 / H_S, so n = 5 keeps sum_i [s_i] in the coset of S.
  const TestEstimate lift = run_test(paper_config(Strategy::quotient_lift(), 5, 100000));
  EXPECT_NEAR(lift.estimate, 0.5, 0.02);
  EXPECT_LE(lift.ci.low, lift.estimate);
  EXPECT_GE(lift.ci.high, lift.estimate);
  const TestEstimate uniform = run_test(paper_config(Strategy::uniform_random(), 3, 100000));
  EXPECT_NEAR(uniform.estimate, 2.0 / 16.0, 0.02);
}

TEST(Dictatorship, QuotientLiftExactAcceptance) {
  // n = 2: the product lands in the coset 2[g], which misses S entirely.
  EXPECT_EQ(exact_acceptance(paper_config(Strategy::quotient_lift(), 2, 0)), Rational(0));
  // n = 1: one fixed draw of the lifts; 1/2 only on average over draws.
  const Rational one = exact_acceptance(paper_config(Strategy::quotient_lift(), 1, 0));
  EXPECT_NEAR(boost::rational_cast<double>(one), 0.5, 0.05);
}

TEST(Dictatorship, StrategyIsAFunction) {
  const TestConfig cfg = paper_config(Strategy::quotient_lift(), 3, 0);
  const StrategyFunction f = make_strategy_function(cfg);
  const StrategyFunction again = make_strategy_function(cfg);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::vector<Element> x{static_cast<Element>(rng() % 16), static_cast<Element>(rng() % 16),
                                 static_cast<Element>(rng() % 16)};
    EXPECT_EQ(f(x), f(x));
    EXPECT_EQ(f(x), again(x));
  }
}

TEST(Dictatorship, RunIsDeterministicForSeed) {
  const TestConfig cfg = paper_config(Strategy::uniform_random(), 2, 5000);
  EXPECT_EQ(run_test(cfg).passes, run_test(cfg).passes);
}

TEST(Dictatorship, NoiseLowersDictatorAcceptance) {
  TestConfig cfg = paper_config(Strategy::make_dictator(0), 2, 20000);
  cfg.noise = 0.2;
  const TestEstimate e = run_test(cfg);
  // Passes when coordinate 0 is not resampled, or by luck 2/16 when it is.
  EXPECT_NEAR(e.estimate, 0.8 + 0.2 * 2.0 / 16.0, 0.02);
}

TEST(Dictatorship, ConfigValidation) {
  TestConfig cfg = paper_config(Strategy::make_dictator(3), 3, 10);
  EXPECT_THROW(run_test(cfg), Error);
  cfg.strategy = Strategy::make_dictator(0);
  cfg.n = 0;
  EXPECT_THROW(run_test(cfg), Error);
  cfg.n = 2;
  cfg.strategy = Strategy::from_table(FunctionTable{2, std::vector<Element>(5, 0)});
  EXPECT_THROW(run_test(cfg), Error);
  EXPECT_EQ(parse_strategy("quotient_lift"), StrategyKind::QuotientLift);
  EXPECT_THROW(parse_strategy("majority"), Error);
}

TEST(Folding, IdentityHoldsEverywhere) {
  auto g = shared("S3");
  std::mt19937_64 rng(3);
  std::vector<Element> reps(36);
  for (auto& r : reps) r = static_cast<Element>(rng() % 6);
  const FoldedFunction f(g, 3, reps);
  const FunctionTable t = f.table();
  for (std::size_t idx = 0; idx < t.values.size(); ++idx) {
    const auto x = decode_point(6, 3, idx);
    for (Element c = 0; c < 6; ++c) {
      std::vector<Element> cx(3);
      for (std::size_t i = 0; i < 3; ++i) cx[i] = g->op(c, x[i]);
      EXPECT_EQ(f(cx), g->op(c, f(x)));
    }
  }
}

TEST(Folding, FoldingAFoldedTableIsIdentity) {
  auto g = shared("Q8");
  const FunctionTable dictator = dictator_function(*g, 2, 1);
  const FoldedFunction folded = FoldedFunction::fold(g, dictator);
  EXPECT_EQ(folded.table().values, dictator.values);
}

TEST(Fourier, ConstantAndCharacter) {
  const FiniteGroup g = make_group("Z4xZ4");
  const FunctionTable one = constant_function(g, 2, 0);
  const FourierTable t(g, one, 5);
  EXPECT_NEAR(std::abs(t.coefficients()[0] - 1.0), 0.0, 1e-12);
  for (Eigen::Index a = 1; a < t.coefficients().size(); ++a) EXPECT_NEAR(std::abs(t.coefficients()[a]), 0.0, 1e-12);

  // chi_5 o (x -> x_0) is itself the character (5, trivial) of G^2.
  const FourierTable d(g, dictator_function(g, 2, 0), 5);
  EXPECT_NEAR(std::abs(d.coefficients()[5] - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(d.parseval_sum(), 1.0, 1e-9);
}

TEST(Fourier, DictatorOverZ2Squared) {
  const FiniteGroup g = make_group("Z2xZ2");
  // The sign character that is nontrivial on the first factor only.
  const auto chars = enumerate_1dim_characters(g);
  std::size_t sign = 0;
  for (std::size_t c = 0; c < chars.size(); ++c)
    if (chars[c].phase[2] != 0 && chars[c].phase[1] == 0) sign = c;
  ASSERT_NE(sign, 0u);
  const FourierTable t(g, dictator_function(g, 2, 0), sign);
  for (Eigen::Index a = 0; a < t.coefficients().size(); ++a)
    EXPECT_NEAR(std::abs(t.coefficients()[a]), static_cast<std::size_t>(a) == sign ? 1.0 : 0.0, 1e-12);
}

TEST(Fourier, ParsevalAndInversion) {
  std::mt19937_64 rng(9);
  for (const char* name : {"Z3", "Z4xZ4", "Z2xZ2xZ2", "Z6"}) {
    const FiniteGroup g = make_group(name);
    const std::size_t n = g.order() > 8 ? 2 : 3;
    FunctionTable f{n, std::vector<Element>(table_size(g.order(), n))};
    for (auto& v : f.values) v = static_cast<Element>(rng() % g.order());
    for (std::size_t chi = 0; chi < g.order(); ++chi) {
      const FourierTable t(g, f, chi);
      EXPECT_NEAR(t.parseval_sum(), 1.0, 1e-9) << name;
      EXPECT_LE((t.inverse() - t.values()).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(Fourier, Errors) {
  const FiniteGroup s3 = symmetric(3);
  const FunctionTable f = constant_function(s3, 1, 0);
  try {
    FourierTable(s3, f, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonAbelianGroup);
  }
  try {
    table_size(16, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(Influence, DictatorCoordinate) {
  const FiniteGroup g = make_group("Z4xZ4");
  const HsResult hs = compute_HS(g, std::vector<Element>{1, 4});
  const auto chars = enumerate_1dim_characters(g);
  const FunctionTable f = dictator_function(g, 2, 1);
  for (std::size_t chi = 0; chi < 16; ++chi) {
    const Influence on = modified_influence(g, f, chi, 1, 1, hs.subgroup);
    const Influence off = modified_influence(g, f, chi, 0, 2, hs.subgroup);
    EXPECT_NEAR(on.modified, chars[chi].constant_on(hs.subgroup) ? 0.0 : 1.0, 1e-12);
    EXPECT_NEAR(on.plain, chars[chi].is_trivial() ? 0.0 : 1.0, 1e-12);
    EXPECT_NEAR(off.modified, 0.0, 1e-12);
  }
}

TEST(Influence, SumFunctionWithHsConstantCharacter) {
  const FiniteGroup g = make_group("Z4xZ4");
  const HsResult hs = compute_HS(g, std::vector<Element>{1, 4});
  const auto chars = enumerate_1dim_characters(g);
  const FunctionTable f = product_function(g, 2);
  std::size_t tested = 0;
  for (std::size_t chi = 0; chi < 16; ++chi) {
    if (!chars[chi].constant_on(hs.subgroup)) continue;
    ++tested;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t d = 0; d <= 2; ++d) EXPECT_NEAR(modified_influence(g, f, chi, i, d, hs.subgroup).modified, 0.0, 1e-12);
  }
  EXPECT_EQ(tested, 4u);
}

TEST(Influence, ConstantFunctionHasNone) {
  const FiniteGroup g = make_group("Z6");
  const FunctionTable f = constant_function(g, 3, 2);
  const Subgroup h(g, {0, 3});
  for (std::size_t chi = 0; chi < 6; ++chi) {
    const Influence inf = modified_influence(g, f, chi, 1, 3, h);
    EXPECT_NEAR(inf.modified, 0.0, 1e-12);
    EXPECT_NEAR(inf.plain, 0.0, 1e-12);
  }
}

TEST(Influence, WholeGroupRecoversPlainInfluence) {
  std::mt19937_64 rng(12);
  const FiniteGroup g = make_group("Z2xZ4");
  const Subgroup whole = Subgroup::whole(g);
  const Subgroup h(g, {0, 2, 4, 6});
  FunctionTable f{2, std::vector<Element>(64)};
  for (auto& v : f.values) v = static_cast<Element>(rng() % 8);
  for (std::size_t chi = 0; chi < 8; ++chi) {
    const FourierTable t(g, f, chi);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t d = 0; d <= 2; ++d) {
        const Influence inf = modified_influence(t, i, d, whole);
        EXPECT_EQ(inf.modified, inf.plain);
        // alpha_i not constant on H implies alpha_i nontrivial; only the full
        // sums are comparable since |alpha|_S <= |alpha| admits more terms.
        EXPECT_LE(modified_influence(t, i, 2, h).modified, modified_influence(t, i, 2, whole).plain + 1e-12);
      }
    for (std::size_t a = 0; a < 64; ++a) EXPECT_LE(t.degree_relative(a, h), t.degree(a));
  }
}
