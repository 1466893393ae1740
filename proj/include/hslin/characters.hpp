#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hslin/group.hpp"
#include "hslin/quotient.hpp"

namespace hslin {

/// A one-dimensional character g -> exp(2 pi i phase(g) / modulus), with
/// phases kept exactly so comparisons never depend on rounding.
struct Character {
  /// Coordinates of the character in the dual of G/[G,G].
  IntVector label;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> phase;  // per element of G, in [0, modulus)

  std::complex<double> value(Element g) const;
  bool is_trivial() const;
  /// chi(h) = 1 for every h in H, i.e. chi is constant on every coset of H.
  bool constant_on(const Subgroup& h) const;

  friend bool operator==(const Character& a, const Character& b);
};

/// All |G/[G,G]| one-dimensional characters, lifted from the dual of the
/// abelianization. For abelian G, character c is indexed by element c:
/// its label is the invariant coordinate vector of c, and character
/// identity() is the trivial one.
std::vector<Character> enumerate_1dim_characters(const FiniteGroup& g);

/// Pointwise product and conjugate, for closure checks.
Character multiply(const Character& a, const Character& b);
Character conjugate(const Character& a);

}  // namespace hslin
