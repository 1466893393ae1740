#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hslin/group.hpp"

namespace hslin {

/// The smallest normal subgroup H_S containing [G,G] with S inside a single
/// coset g*H_S, and the approximation ratio |S| / |H_S| it yields.
struct HsResult {
  Subgroup subgroup;
  Element coset_rep;
  std::size_t ratio_num;  // |S|
  std::size_t ratio_den;  // |H_S|
  /// True iff S^-1 S alone generates H_S.
  bool generated_by_SinvS;
};

/// Sorted, duplicate-free copy of S; throws EmptyS or InvalidElementId.
std::vector<Element> normalize_set(const FiniteGroup& g, std::span<const Element> s);

/// H_S = <[G,G] u { s0^-1 s : s in S }> with s0 = min(S).
HsResult compute_HS(const FiniteGroup& g, std::span<const Element> s);

/// Every subgroup of G, found by closing {e} under repeatedly adjoining one
/// element and deduplicating. Throws GroupTooLarge above order 24.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// Exhaustive oracle: among all subgroups that contain every commutator, are
/// normal, and place S inside one coset, the one of minimum order (ties broken
/// by the lexicographically smallest element list).
HsResult brute_force_HS(const FiniteGroup& g, std::span<const Element> s);
/// Same, against a precomputed subgroup list of `g`.
HsResult brute_force_HS(const FiniteGroup& g, std::span<const Element> s,
                        std::span<const Subgroup> subgroups);

}  // namespace hslin
