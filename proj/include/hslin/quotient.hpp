#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hslin/group.hpp"

namespace hslin {

using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Explicit isomorphism of a finite abelian group with Z_{d_1} x ... x Z_{d_m},
/// d_1 | d_2 | ... | d_m, every d_i > 1 (m = 0 for the trivial group).
class AbelianDecomposition {
 public:
  AbelianDecomposition(std::vector<std::int64_t> invariants, std::vector<IntVector> coordinates);

  const std::vector<std::int64_t>& invariants() const { return invariants_; }
  std::size_t rank() const { return invariants_.size(); }

  const IntVector& to_vec(Element a) const { return coordinates_.at(a); }
  /// Inverse of to_vec; components are reduced mod d_i first.
  Element from_vec(const IntVector& v) const;

  /// Componentwise sum mod d_i.
  IntVector add(const IntVector& a, const IntVector& b) const;
  IntVector reduce(IntVector v) const;

 private:
  std::size_t index_of(const IntVector& reduced) const;

  std::vector<std::int64_t> invariants_;
  std::vector<IntVector> coordinates_;
  std::vector<Element> by_index_;
};

/// Invariant-factor decomposition of an abelian group: a greedy generating
/// set, the triangular relation matrix of each generator's relative order,
/// and its Smith normal form. Throws NonAbelianGroup.
AbelianDecomposition decompose_abelian(const FiniteGroup& g);

/// G/H for a normal subgroup H. Cosets are indexed in increasing order of
/// their representative, the minimum element ID of the coset.
class QuotientGroup {
 public:
  const FiniteGroup& parent() const { return *parent_; }
  const Subgroup& normal_subgroup() const { return normal_; }
  const FiniteGroup& group() const { return group_; }
  std::size_t order() const { return group_.order(); }

  std::span<const Element> coset_reps() const { return reps_; }
  Element coset_rep(Element coset) const { return reps_.at(coset); }
  Element project(Element g) const { return projection_.at(g); }
  /// All elements of the coset with the given index, ascending.
  std::vector<Element> coset(Element coset) const;

  bool is_abelian() const { return abelian_.has_value(); }
  /// Present iff the quotient is abelian.
  const std::optional<AbelianDecomposition>& abelian() const { return abelian_; }
  IntVector iso_to_vec(Element coset) const;
  Element iso_from_vec(const IntVector& v) const;

 private:
  friend QuotientGroup quotient(const FiniteGroup& g, const Subgroup& h);
  QuotientGroup(const FiniteGroup& parent, Subgroup normal, std::vector<Element> reps,
                std::vector<Element> projection, FiniteGroup group);

  const FiniteGroup* parent_;
  Subgroup normal_;
  std::vector<Element> reps_;
  std::vector<Element> projection_;
  FiniteGroup group_;
  std::optional<AbelianDecomposition> abelian_;
};

/// Throws NotNormal when H is not normal in G.
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& h);

}  // namespace hslin
