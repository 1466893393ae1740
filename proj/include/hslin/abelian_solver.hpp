#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "hslin/smith.hpp"

namespace hslin {

using IntMatrix = DenseMatrix<std::int64_t>;

/// A x = b over Q = Z_{d_1} x ... x Z_{d_m}. Coefficients are integer
/// multiplicities shared by every cyclic factor; column i of `rhs` holds the
/// Z_{d_i} components of the right-hand sides.
struct AbelianSystem {
  std::size_t num_vars = 0;
  std::vector<std::int64_t> invariants;
  IntMatrix coefficients;  // equations x num_vars
  IntMatrix rhs;           // equations x invariants.size()
};

struct AbelianSolution {
  /// Row i is the value of variable i as a tuple over Z_{d_1} x ... x Z_{d_m}.
  IntMatrix assignment;
  /// Per cyclic factor: number of diagonal parameters with more than one
  /// admissible value.
  std::vector<std::size_t> free_dims;
};

/// Throws MalformedSystem on inconsistent shapes, negative coefficients,
/// non-positive moduli or unreduced right-hand sides.
void validate(const AbelianSystem& system);

/// Solves every factor through one Smith normal form U A V = D over Z:
/// D t = U b (mod d) is decided entry by entry and x = V t (mod d). Free
/// parameters are drawn from a generator seeded with `seed`. Returns
/// nullopt when some factor has no solution.
std::optional<AbelianSolution> solve(const AbelianSystem& system, std::uint64_t seed);

bool verify(const AbelianSystem& system, const IntMatrix& assignment);

}  // namespace hslin
