#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the code under test beyond group lookups.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "hslin/abelian_solver.hpp"
#include "hslin/group.hpp"
#include "hslin/instance.hpp"

namespace oracle {

using hslin::Element;
using Int = boost::multiprecision::cpp_int;

/// Determinant by fraction-free Bareiss elimination.
inline Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? Int(1) : sign * m[n - 1][n - 1];
}

template <typename Matrix>
std::vector<std::vector<Int>> to_rows(const Matrix& a) {
  std::vector<std::vector<Int>> out(a.rows(), std::vector<Int>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out[i][j] = Int(a(i, j));
  return out;
}

/// Every assignment of the system, checked equation by equation. Returns
/// whether one exists; `limit` caps the number of candidates.
inline bool exhaustive_solvable(const hslin::AbelianSystem& sys) {
  std::size_t q = 1;
  for (auto d : sys.invariants) q *= static_cast<std::size_t>(d);
  std::vector<std::size_t> x(sys.num_vars, 0);
  auto component = [&](std::size_t code, std::size_t f) {
    for (std::size_t i = 0; i < f; ++i) code /= static_cast<std::size_t>(sys.invariants[i]);
    return static_cast<std::int64_t>(code % static_cast<std::size_t>(sys.invariants[f]));
  };
  while (true) {
    bool ok = true;
    for (Eigen::Index e = 0; ok && e < sys.coefficients.rows(); ++e)
      for (std::size_t f = 0; ok && f < sys.invariants.size(); ++f) {
        std::int64_t acc = 0;
        for (std::size_t v = 0; v < sys.num_vars; ++v)
          acc += sys.coefficients(e, static_cast<Eigen::Index>(v)) * component(x[v], f);
        const std::int64_t d = sys.invariants[f];
        ok = ((acc - sys.rhs(e, static_cast<Eigen::Index>(f))) % d + d) % d == 0;
      }
    if (ok) return true;
    std::size_t v = 0;
    while (v < sys.num_vars && ++x[v] == q) x[v++] = 0;
    if (v == sys.num_vars) return false;
  }
}

/// Optimum of an instance by plain enumeration of all |G|^n assignments.
inline std::size_t exhaustive_optimum(const hslin::Instance& inst) {
  const std::size_t q = inst.g().order();
  std::vector<Element> x(inst.num_vars, 0);
  std::size_t best = 0;
  while (true) {
    std::size_t sat = 0;
    for (const auto& c : inst.constraints) {
      Element acc = inst.g().identity();
      for (const auto& lit : c) acc = inst.g().op(acc, inst.g().op(lit.shift, x[lit.var]));
      if (std::find(inst.satisfying.begin(), inst.satisfying.end(), acc) != inst.satisfying.end()) ++sat;
    }
    best = std::max(best, sat);
    std::size_t v = 0;
    while (v < inst.num_vars && ++x[v] == q) x[v++] = 0;
    if (v == inst.num_vars) return best;
  }
}

/// Closure of a set under the group operation by naive fixpoint iteration.
inline std::vector<Element> closure(const hslin::FiniteGroup& g, std::vector<Element> gens) {
  std::set<Element> cur(gens.begin(), gens.end());
  cur.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> snapshot(cur.begin(), cur.end());
    for (Element a : snapshot)
      for (Element b : snapshot)
        if (cur.insert(g.op(a, b)).second) grew = true;
  }
  return {cur.begin(), cur.end()};
}

}  // namespace oracle
