#include "hslin/approx.hpp"

#include <algorithm>
#include <random>

namespace hslin {

namespace {

constexpr std::uint64_t kBruteForceLimit = 10'000'000;
constexpr std::uint64_t kRoundingStream = 0x9e37'79b9'7f4a'7c15ULL;

SolveReport make_report(const Instance& inst, Assignment assignment, Rational guarantee, SolveMode mode) {
  SolveReport r;
  r.satisfied = count_satisfied(inst, assignment);
  r.total = inst.constraints.size();
  r.vacuous = inst.constraints.empty();
  r.value = evaluate(inst, assignment);
  r.guarantee = guarantee;
  r.assignment = std::move(assignment);
  r.mode = mode;
  return r;
}

Rational size_ratio(std::size_t num, std::size_t den) {
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

std::string_view mode_name(SolveMode mode) {
  switch (mode) {
    case SolveMode::Derandomized: return "derandomized";
    case SolveMode::Randomized: return "randomized";
    case SolveMode::BaselineRandom: return "baseline-random";
    case SolveMode::BruteForce: return "brute-force";
  }
  return "unknown";
}

SolveMode parse_mode(std::string_view text) {
  if (text == "derand" || text == "derandomized") return SolveMode::Derandomized;
  if (text == "rand" || text == "randomized") return SolveMode::Randomized;
  if (text == "baseline" || text == "baseline-random") return SolveMode::BaselineRandom;
  if (text == "brute" || text == "brute-force") return SolveMode::BruteForce;
  throw Error(Errc::ParameterError, "unknown mode '" + std::string(text) + "'");
}

AbelianSystem project_instance(const Instance& inst, const HsResult& hs, const QuotientGroup& q) {
  if (!q.is_abelian()) throw Error(Errc::NonAbelianGroup, "quotient G/H_S must be abelian");
  const auto& dec = *q.abelian();
  const auto m = static_cast<Eigen::Index>(inst.constraints.size());
  const auto factors = static_cast<Eigen::Index>(dec.rank());

  AbelianSystem sys;
  sys.num_vars = inst.num_vars;
  sys.invariants = dec.invariants();
  sys.coefficients = IntMatrix::Zero(m, static_cast<Eigen::Index>(inst.num_vars));
  sys.rhs = IntMatrix::Zero(m, factors);

  const IntVector target = q.iso_to_vec(q.project(hs.coset_rep));
  for (Eigen::Index e = 0; e < m; ++e) {
    IntVector rhs = target;
    for (const auto& lit : inst.constraints[e]) {
      sys.coefficients(e, static_cast<Eigen::Index>(lit.var)) += 1;
      rhs -= q.iso_to_vec(q.project(lit.shift));
    }
    sys.rhs.row(e) = dec.reduce(rhs).transpose();
  }
  return sys;
}

std::vector<Element> solution_cosets(const QuotientGroup& q, const AbelianSolution& sol) {
  std::vector<Element> cosets(static_cast<std::size_t>(sol.assignment.rows()));
  for (Eigen::Index i = 0; i < sol.assignment.rows(); ++i)
    cosets[i] = q.iso_from_vec(sol.assignment.row(i).transpose());
  return cosets;
}

Assignment round_solution(const Instance& inst, const HsResult& hs, const QuotientGroup& q,
                          const AbelianSolution& sol, std::uint64_t seed) {
  const auto cosets = solution_cosets(q, sol);
  const auto h = hs.subgroup.elements();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, h.size() - 1);
  Assignment out(inst.num_vars);
  for (std::size_t i = 0; i < inst.num_vars; ++i) out[i] = inst.g().op(q.coset_rep(cosets[i]), h[pick(rng)]);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Element> CosetDomains::domain(std::size_t var) const {
  std::vector<Element> out;
  out.reserve(subgroup->order());
  for (Element h : subgroup->elements()) out.push_back(group->op(reps[var], h));
  std::sort(out.begin(), out.end());
  return out;
}

Rational satisfaction_probability(const Instance& inst, const Constraint& c, const CosetDomains& domains,
                                  std::span<const std::optional<Element>> fixed) {
  const FiniteGroup& g = inst.g();
  std::vector<std::size_t> free_vars;
  std::vector<std::size_t> occurrences;
  for (const auto& lit : c) {
    if (fixed[lit.var]) continue;
    auto it = std::find(free_vars.begin(), free_vars.end(), lit.var);
    if (it == free_vars.end()) {
      free_vars.push_back(lit.var);
      occurrences.push_back(1);
    } else {
      ++occurrences[static_cast<std::size_t>(it - free_vars.begin())];
    }
  }

  auto value_with = [&](auto&& value_of) {
    Element acc = g.identity();
    for (const auto& lit : c) acc = g.op(acc, g.op(lit.shift, value_of(lit.var)));
    return acc;
  };

  if (free_vars.empty()) return inst.in_s(value_with([&](std::size_t v) { return *fixed[v]; })) ? 1 : 0;

  const Subgroup& h = *domains.subgroup;
  if (std::find(occurrences.begin(), occurrences.end(), 1u) != occurrences.end()) {
    // The product is uniform on the coset P = p*H of any representative value p.
    const Element p = value_with([&](std::size_t v) { return fixed[v] ? *fixed[v] : domains.reps[v]; });
    const Element p_inv = g.inv(p);
    const auto hits = std::count_if(inst.satisfying.begin(), inst.satisfying.end(),
                                    [&](Element s) { return h.contains(g.op(p_inv, s)); });
    return size_ratio(static_cast<std::size_t>(hits), h.order());
  }

  // Every free variable repeats: enumerate their joint values.
  std::vector<std::vector<Element>> doms;
  for (std::size_t v : free_vars) doms.push_back(domains.domain(v));
  std::vector<std::size_t> idx(free_vars.size(), 0);
  std::vector<Element> value(inst.num_vars, 0);
  std::uint64_t hits = 0, total = 0;
  while (true) {
    for (std::size_t j = 0; j < free_vars.size(); ++j) value[free_vars[j]] = doms[j][idx[j]];
    const Element prod = value_with([&](std::size_t v) { return fixed[v] ? *fixed[v] : value[v]; });
    hits += inst.in_s(prod) ? 1 : 0;
    ++total;
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == doms[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return Rational(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(total));
}

Rational conditional_expectation(const Instance& inst, const CosetDomains& domains,
                                 std::span<const std::optional<Element>> fixed) {
  Rational sum(0);
  for (const auto& c : inst.constraints) sum += satisfaction_probability(inst, c, domains, fixed);
  return sum;
}

Assignment derandomize_domains(const Instance& inst, const CosetDomains& domains, DerandomizeTrace* trace) {
  std::vector<std::vector<std::size_t>> touching(inst.num_vars);
  for (std::size_t ci = 0; ci < inst.constraints.size(); ++ci) {
    for (const auto& lit : inst.constraints[ci]) {
      auto& list = touching[lit.var];
      if (list.empty() || list.back() != ci) list.push_back(ci);
    }
  }

  std::vector<std::optional<Element>> fixed(inst.num_vars);
  if (trace) trace->expectations = {conditional_expectation(inst, domains, fixed)};

  for (std::size_t v = 0; v < inst.num_vars; ++v) {
    // Only constraints containing v change with its value.
    std::optional<Rational> best_score;
    Element best = 0;
    for (Element cand : domains.domain(v)) {
      fixed[v] = cand;
      Rational score(0);
      for (std::size_t ci : touching[v]) score += satisfaction_probability(inst, inst.constraints[ci], domains, fixed);
      if (!best_score || score > *best_score) {
        best_score = score;
        best = cand;
      }
    }
    fixed[v] = best;
    if (trace) trace->expectations.push_back(conditional_expectation(inst, domains, fixed));
  }

  Assignment out(inst.num_vars);
  for (std::size_t v = 0; v < inst.num_vars; ++v) out[v] = *fixed[v];
  return out;
}

Assignment derandomize(const Instance& inst, const HsResult& hs, const QuotientGroup& q,
                       const AbelianSolution& sol, DerandomizeTrace* trace) {
  const auto cosets = solution_cosets(q, sol);
  CosetDomains domains{&inst.g(), &hs.subgroup, {}};
  domains.reps.reserve(cosets.size());
  for (Element c : cosets) domains.reps.push_back(q.coset_rep(c));
  return derandomize_domains(inst, domains, trace);
}

SolveReport baseline_random(const Instance& inst, std::uint64_t seed, bool derand) {
  validate(inst);
  const FiniteGroup& g = inst.g();
  const Rational guarantee = size_ratio(inst.satisfying.size(), g.order());
  Assignment assignment;
  if (derand) {
    const Subgroup whole = Subgroup::whole(g);
    CosetDomains domains{&g, &whole, std::vector<Element>(inst.num_vars, g.identity())};
    assignment = derandomize_domains(inst, domains);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> any(0, static_cast<Element>(g.order() - 1));
    assignment.resize(inst.num_vars);
    for (auto& x : assignment) x = any(rng);
  }
  return make_report(inst, std::move(assignment), guarantee, SolveMode::BaselineRandom);
}

SolveReport brute_force(const Instance& inst) {
  validate(inst);
  const FiniteGroup& g = inst.g();
  const std::size_t n = inst.num_vars, q = g.order();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    space *= q;
    if (space > kBruteForceLimit) throw Error(Errc::TooLarge, "|G|^n exceeds 10^7");
  }

  // Each constraint is scored once its highest-index variable is set.
  std::vector<std::vector<std::size_t>> closing(n);
  std::vector<std::size_t> open_after(n + 1, 0);  // constraints not yet scorable after setting var v
  for (std::size_t ci = 0; ci < inst.constraints.size(); ++ci) {
    std::size_t last = 0;
    for (const auto& lit : inst.constraints[ci]) last = std::max(last, lit.var);
    closing[last].push_back(ci);
  }
  {
    std::size_t remaining = inst.constraints.size();
    for (std::size_t v = 0; v < n; ++v) {
      remaining -= closing[v].size();
      open_after[v] = remaining;
    }
  }

  Assignment current(n, 0), best_assignment(n, 0);
  std::int64_t best = -1;
  const auto total = static_cast<std::int64_t>(inst.constraints.size());

  auto dfs = [&](auto&& self, std::size_t v, std::int64_t sat) -> void {
    if (best == total) return;
    if (v == n) {
      if (sat > best) {
        best = sat;
        best_assignment = current;
      }
      return;
    }
    for (Element a = 0; a < q; ++a) {
      current[v] = a;
      std::int64_t s = sat;
      for (std::size_t ci : closing[v]) s += satisfied(inst, inst.constraints[ci], current) ? 1 : 0;
      if (s + static_cast<std::int64_t>(open_after[v]) > best) self(self, v + 1, s);
      if (best == total) return;
    }
  };
  if (n == 0) {
    best_assignment.clear();
  } else {
    dfs(dfs, 0, 0);
  }

  const HsResult hs = compute_HS(g, inst.satisfying);
  return make_report(inst, std::move(best_assignment), size_ratio(hs.ratio_num, hs.ratio_den),
                     SolveMode::BruteForce);
}

SolveReport solve_pipeline(const Instance& inst, std::uint64_t seed, SolveMode mode) {
  validate(inst);
  if (mode == SolveMode::BruteForce) return brute_force(inst);
  if (mode == SolveMode::BaselineRandom) return baseline_random(inst, seed, true);

  const FiniteGroup& g = inst.g();
  const HsResult hs = compute_HS(g, inst.satisfying);
  const QuotientGroup q = quotient(g, hs.subgroup);
  const AbelianSystem sys = project_instance(inst, hs, q);
  const auto sol = solve(sys, seed);
  if (!sol) {
    SolveReport r = baseline_random(inst, seed, true);
    r.quotient_unsat = true;
    return r;
  }
  Assignment assignment = mode == SolveMode::Derandomized ? derandomize(inst, hs, q, *sol)
                                                          : round_solution(inst, hs, q, *sol, seed ^ kRoundingStream);
  return make_report(inst, std::move(assignment), size_ratio(hs.ratio_num, hs.ratio_den), mode);
}

}  // namespace hslin
