#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "hslin/fourier.hpp"
#include "hslin/group.hpp"
#include "hslin/instance.hpp"

namespace hslin {

enum class StrategyKind { Dictator, QuotientLift, UniformRandom, Table };

std::string_view strategy_name(StrategyKind kind);
/// dictator|quotient-lift|uniform-random|table (underscores also accepted).
StrategyKind parse_strategy(std::string_view text);

struct Strategy {
  StrategyKind kind = StrategyKind::Dictator;
  std::size_t dictator = 0;
  FunctionTable table;  // Table only

  static Strategy make_dictator(std::size_t j) { return {StrategyKind::Dictator, j, {}}; }
  static Strategy quotient_lift() { return {StrategyKind::QuotientLift, 0, {}}; }
  static Strategy uniform_random() { return {StrategyKind::UniformRandom, 0, {}}; }
  static Strategy from_table(FunctionTable t) { return {StrategyKind::Table, 0, std::move(t)}; }
};

struct TestConfig {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<Element> satisfying;
  std::size_t n = 1;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  Strategy strategy;
  /// Per-coordinate probability of resampling (x_i, y_i, z_i) uniformly.
  /// Off by default; the generalized test has no noise step.
  double noise = 0.0;
};

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

inline constexpr double kWilsonZ95 = 1.959963984540054;

Interval wilson_interval(std::size_t passes, std::size_t samples, double z = kWilsonZ95);

struct TestEstimate {
  std::size_t passes = 0;
  std::size_t samples = 0;
  double estimate = 0.0;
  Interval ci;
};

/// f: G^n -> G as used by the simulator. Randomized strategies derive their
/// value from a hash of (seed, x), so the same input always gets the same
/// answer and no memo table is shared between trials.
using StrategyFunction = std::function<Element(std::span<const Element>)>;

/// quotient-lift: rep(sum_i [x_i]_Q) * h(x) with h(x) uniform in H_S.
/// uniform-random: an independent uniform element per input.
StrategyFunction make_strategy_function(const TestConfig& cfg);

/// Throws ParameterError on n = 0, dictator index >= n, bad S or a table
/// of the wrong size.
void validate(const TestConfig& cfg);

/// Draw x, y in G^n and s in S^n, set z_i = y_i^-1 x_i^-1 s_i and accept iff
/// f(x) f(y) f(z) lies in S.
TestEstimate run_test(const TestConfig& cfg);

/// Exact acceptance probability of the noiseless test over every x, y in
/// G^n and s in S^n. TooLarge when |G|^(2n) |S|^n exceeds 10^8.
Rational exact_acceptance(const TestConfig& cfg);

/// f with f(c x) = c f(x), stored on the orbit representatives x_1 = e and
/// expanded as f(x) = x_1 * rep(x_1^-1 x).
class FoldedFunction {
 public:
  /// rep_values is indexed like a point of G^(n-1): the values at
  /// (e, y_1, ..., y_{n-1}).
  FoldedFunction(std::shared_ptr<const FiniteGroup> group, std::size_t n, std::vector<Element> rep_values);

  /// Folds an arbitrary table by reading it on the representatives.
  static FoldedFunction fold(std::shared_ptr<const FiniteGroup> group, const FunctionTable& f);

  std::size_t arity() const { return n_; }
  Element operator()(std::span<const Element> x) const;
  FunctionTable table() const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::size_t n_;
  std::vector<Element> reps_;
};

}  // namespace hslin
