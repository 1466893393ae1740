#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hslin/abelian_solver.hpp"
#include "hslin/hs_subgroup.hpp"
#include "hslin/instance.hpp"
#include "hslin/quotient.hpp"

namespace hslin {

enum class SolveMode { Derandomized, Randomized, BaselineRandom, BruteForce };

std::string_view mode_name(SolveMode mode);
/// Accepts the report names and the CLI spellings derand|rand|baseline|brute.
SolveMode parse_mode(std::string_view text);

struct SolveReport {
  Rational value{0};
  Rational guarantee{0};
  Assignment assignment;
  SolveMode mode = SolveMode::Derandomized;
  /// The projected system had no solution; the assignment comes from the
  /// derandomized uniform baseline and the guarantee is |S|/|G|.
  bool quotient_unsat = false;
  /// No constraints; value reported as 1/1.
  bool vacuous = false;
  std::size_t satisfied = 0;
  std::size_t total = 0;
};

/// One equation per constraint over Q = G/H_S:
///   sum_j y_{i_j} = [g]_Q - sum_j [a_j]_Q
/// in the invariant coordinates of Q. Repeated variables accumulate.
AbelianSystem project_instance(const Instance& inst, const HsResult& hs, const QuotientGroup& q);

/// Coset index of each variable in a solution of the projected system.
std::vector<Element> solution_cosets(const QuotientGroup& q, const AbelianSolution& sol);

/// x_i = rep(coset_i) * h_i with h_i uniform in H_S.
Assignment round_solution(const Instance& inst, const HsResult& hs, const QuotientGroup& q,
                          const AbelianSolution& sol, std::uint64_t seed);

/// Each variable ranges uniformly over the coset reps[i] * H, independently.
struct CosetDomains {
  const FiniteGroup* group;
  const Subgroup* subgroup;
  std::vector<Element> reps;

  std::vector<Element> domain(std::size_t var) const;
};

/// Probability that `c` holds when the unset variables of `fixed` are drawn
/// from their cosets. Closed form |S cap P| / |H| whenever some unset
/// variable occurs exactly once (P is the coset the product must land in);
/// exhaustive over the unset variables otherwise.
Rational satisfaction_probability(const Instance& inst, const Constraint& c, const CosetDomains& domains,
                                  std::span<const std::optional<Element>> fixed);

/// Expected number of satisfied constraints given a partial assignment.
Rational conditional_expectation(const Instance& inst, const CosetDomains& domains,
                                 std::span<const std::optional<Element>> fixed);

/// Expected satisfied-count before any variable is fixed, then after each
/// variable in index order.
struct DerandomizeTrace {
  std::vector<Rational> expectations;
};

/// Method of conditional expectations over the coset domains: variables
/// fixed in index order to the element maximizing the conditional
/// expectation, ties to the smallest ID.
Assignment derandomize_domains(const Instance& inst, const CosetDomains& domains,
                               DerandomizeTrace* trace = nullptr);

Assignment derandomize(const Instance& inst, const HsResult& hs, const QuotientGroup& q,
                       const AbelianSolution& sol, DerandomizeTrace* trace = nullptr);

/// H_S -> quotient -> projected system -> solve -> round or derandomize.
/// Falls back to the derandomized baseline when the projected system is
/// unsatisfiable.
SolveReport solve_pipeline(const Instance& inst, std::uint64_t seed, SolveMode mode);

/// Exact optimum by depth-first enumeration with a counting bound. Ties go
/// to the lexicographically smallest assignment. Throws TooLarge when
/// |G|^n > 10^7.
SolveReport brute_force(const Instance& inst);

/// Uniformly random assignment, or its derandomization (value >= |S|/|G|).
SolveReport baseline_random(const Instance& inst, std::uint64_t seed, bool derandomize);

}  // namespace hslin
