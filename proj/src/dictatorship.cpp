#include "hslin/dictatorship.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hslin/hs_subgroup.hpp"
#include "hslin/quotient.hpp"

namespace hslin {

std::string_view strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Dictator: return "dictator";
    case StrategyKind::QuotientLift: return "quotient-lift";
    case StrategyKind::UniformRandom: return "uniform-random";
    case StrategyKind::Table: return "table";
  }
  return "?";
}

StrategyKind parse_strategy(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '_', '-');
  for (auto k : {StrategyKind::Dictator, StrategyKind::QuotientLift, StrategyKind::UniformRandom, StrategyKind::Table})
    if (s == strategy_name(k)) return k;
  throw Error(Errc::ParameterError, "unknown strategy '" + std::string(text) + "'");
}

Interval wilson_interval(std::size_t passes, std::size_t samples, double z) {
  if (samples == 0) return {0.0, 1.0};
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(passes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_point(std::uint64_t seed, std::span<const Element> x) {
  std::uint64_t h = splitmix(seed);
  for (Element a : x) h = splitmix(h ^ a);
  return h;
}

constexpr std::uint64_t kStrategyStream = 0x5eed'f00d'cafe'0001ULL;

}  // namespace

void validate(const TestConfig& cfg) {
  if (!cfg.group) throw Error(Errc::ParameterError, "no group");
  if (cfg.n < 1) throw Error(Errc::ParameterError, "n must be at least 1");
  if (!(cfg.noise >= 0.0 && cfg.noise <= 1.0)) throw Error(Errc::ParameterError, "noise must lie in [0, 1]");
  normalize_set(*cfg.group, cfg.satisfying);
  const auto& st = cfg.strategy;
  if (st.kind == StrategyKind::Dictator && st.dictator >= cfg.n)
    throw Error(Errc::ParameterError, "dictator index must be < n");
  if (st.kind == StrategyKind::Table) {
    if (st.table.arity != cfg.n || st.table.values.size() != table_size(cfg.group->order(), cfg.n))
      throw Error(Errc::ParameterError, "function table does not match n");
    for (Element v : st.table.values)
      if (!cfg.group->contains(v)) throw Error(Errc::InvalidElementId, "table value " + std::to_string(v));
  }
}

StrategyFunction make_strategy_function(const TestConfig& cfg) {
  validate(cfg);
  auto group = cfg.group;
  const std::uint64_t seed = splitmix(cfg.seed ^ kStrategyStream);
  switch (cfg.strategy.kind) {
    case StrategyKind::Dictator:
      return [j = cfg.strategy.dictator](std::span<const Element> x) { return x[j]; };
    case StrategyKind::Table:
      return [group, table = cfg.strategy.table](std::span<const Element> x) {
        return table.values[encode_point(group->order(), x)];
      };
    case StrategyKind::UniformRandom:
      return [group, seed](std::span<const Element> x) {
        return static_cast<Element>(hash_point(seed, x) % group->order());
      };
    case StrategyKind::QuotientLift: {
      const HsResult hs = compute_HS(*group, cfg.satisfying);
      auto q = std::make_shared<const QuotientGroup>(quotient(*group, hs.subgroup));
      return [group, q, seed](std::span<const Element> x) {
        const FiniteGroup& qg = q->group();
        Element acc = qg.identity();
        for (Element a : x) acc = qg.op(acc, q->project(a));
        const auto& h = q->normal_subgroup().elements();
        return group->op(q->coset_rep(acc), h[hash_point(seed, x) % h.size()]);
      };
    }
  }
  throw Error(Errc::ParameterError, "unknown strategy");
}

TestEstimate run_test(const TestConfig& cfg) {
  const StrategyFunction f = make_strategy_function(cfg);
  const FiniteGroup& g = *cfg.group;
  const std::vector<Element> s = normalize_set(g, cfg.satisfying);
  auto in_s = [&](Element a) { return std::binary_search(s.begin(), s.end(), a); };

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<Element> any(0, static_cast<Element>(g.order() - 1));
  std::uniform_int_distribution<std::size_t> any_s(0, s.size() - 1);
  std::bernoulli_distribution resample(cfg.noise);

  std::vector<Element> x(cfg.n), y(cfg.n), z(cfg.n);
  TestEstimate out;
  out.samples = cfg.samples;
  for (std::size_t t = 0; t < cfg.samples; ++t) {
    for (std::size_t i = 0; i < cfg.n; ++i) {
      x[i] = any(rng);
      y[i] = any(rng);
      const Element si = s[any_s(rng)];
      z[i] = g.op(g.op(g.inv(y[i]), g.inv(x[i])), si);
      if (cfg.noise > 0.0 && resample(rng)) {
        x[i] = any(rng);
        y[i] = any(rng);
        z[i] = any(rng);
      }
    }
    if (in_s(g.op(g.op(f(x), f(y)), f(z)))) ++out.passes;
  }
  out.estimate = cfg.samples ? static_cast<double>(out.passes) / static_cast<double>(cfg.samples) : 0.0;
  out.ci = wilson_interval(out.passes, cfg.samples);
  return out;
}

Rational exact_acceptance(const TestConfig& cfg) {
  const StrategyFunction f = make_strategy_function(cfg);
  const FiniteGroup& g = *cfg.group;
  const std::vector<Element> s = normalize_set(g, cfg.satisfying);
  auto in_s = [&](Element a) { return std::binary_search(s.begin(), s.end(), a); };

  double work = 1.0;
  for (std::size_t i = 0; i < cfg.n; ++i) work *= static_cast<double>(g.order() * g.order() * s.size());
  if (work > 1e8) throw Error(Errc::TooLarge, "exhaustive test enumeration too large");

  const std::size_t points = table_size(g.order(), cfg.n);
  std::size_t choices = 1;
  for (std::size_t i = 0; i < cfg.n; ++i) choices *= s.size();

  std::vector<Element> fx(points);
  for (std::size_t idx = 0; idx < points; ++idx) fx[idx] = f(decode_point(g.order(), cfg.n, idx));

  std::vector<Element> z(cfg.n);
  std::int64_t accepted = 0;
  for (std::size_t xi = 0; xi < points; ++xi) {
    const auto x = decode_point(g.order(), cfg.n, xi);
    for (std::size_t yi = 0; yi < points; ++yi) {
      const auto y = decode_point(g.order(), cfg.n, yi);
      const Element fxy = g.op(fx[xi], fx[yi]);
      for (std::size_t si = 0; si < choices; ++si) {
        std::size_t rest = si;
        for (std::size_t i = 0; i < cfg.n; ++i, rest /= s.size())
          z[i] = g.op(g.op(g.inv(y[i]), g.inv(x[i])), s[rest % s.size()]);
        if (in_s(g.op(fxy, fx[encode_point(g.order(), z)]))) ++accepted;
      }
    }
  }
  return Rational(accepted, static_cast<std::int64_t>(points * points * choices));
}

// ---------------------------------------------------------------------------

FoldedFunction::FoldedFunction(std::shared_ptr<const FiniteGroup> group, std::size_t n,
                               std::vector<Element> rep_values)
    : group_(std::move(group)), n_(n), reps_(std::move(rep_values)) {
  if (!group_) throw Error(Errc::ParameterError, "no group");
  if (n_ < 1) throw Error(Errc::ParameterError, "n must be at least 1");
  if (reps_.size() != table_size(group_->order(), n_ - 1))
    throw Error(Errc::LengthMismatch, "representative table has the wrong size");
  for (Element v : reps_)
    if (!group_->contains(v)) throw Error(Errc::InvalidElementId, std::to_string(v));
}

FoldedFunction FoldedFunction::fold(std::shared_ptr<const FiniteGroup> group, const FunctionTable& f) {
  if (!group || f.arity < 1) throw Error(Errc::ParameterError, "need a group and n >= 1");
  const std::size_t q = group->order();
  const std::size_t reps = table_size(q, f.arity - 1);
  std::vector<Element> values(reps);
  std::vector<Element> point(f.arity);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto y = decode_point(q, f.arity - 1, r);
    point[0] = group->identity();
    std::copy(y.begin(), y.end(), point.begin() + 1);
    values[r] = f.values.at(encode_point(q, point));
  }
  return FoldedFunction(std::move(group), f.arity, std::move(values));
}

Element FoldedFunction::operator()(std::span<const Element> x) const {
  if (x.size() != n_) throw Error(Errc::LengthMismatch, "point has the wrong arity");
  const FiniteGroup& g = *group_;
  const Element c = x[0];
  const Element cinv = g.inv(c);
  std::vector<Element> rest(n_ - 1);
  for (std::size_t i = 1; i < n_; ++i) rest[i - 1] = g.op(cinv, x[i]);
  return g.op(c, reps_[encode_point(g.order(), rest)]);
}

FunctionTable FoldedFunction::table() const {
  const std::size_t q = group_->order();
  FunctionTable f{n_, std::vector<Element>(table_size(q, n_))};
  for (std::size_t idx = 0; idx < f.values.size(); ++idx) f.values[idx] = (*this)(decode_point(q, n_, idx));
  return f;
}

}  // namespace hslin
