#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hslin/error.hpp"

namespace hslin {

/// Elements are referred to by their row/column index in the Cayley table.
using Element = std::uint32_t;

inline constexpr std::size_t kMaxGroupOrder = 256;

using OpTable = Eigen::Matrix<Element, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// A finite group given by its dense operation table. Immutable once built;
/// the constructor validates closure, identity, inverses and associativity
/// (exhaustively up to order 64, by sampling above).
class FiniteGroup {
 public:
  FiniteGroup(OpTable table, std::string name, std::vector<std::string> labels = {});

  std::size_t order() const { return inverse_.size(); }
  Element op(Element a, Element b) const { return table_(a, b); }
  Element inv(Element a) const { return inverse_[a]; }
  Element identity() const { return identity_; }
  bool contains(Element a) const { return a < order(); }

  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const { return op(op(inv(a), inv(b)), op(a, b)); }

  /// Left-to-right product of a sequence; identity for an empty sequence.
  Element product(std::span<const Element> factors) const;

  const std::string& name() const { return name_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(Element a) const;
  const OpTable& table() const { return table_; }
  bool is_abelian() const;

 private:
  OpTable table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
};

FiniteGroup cyclic(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Dihedral group of order 2n. Element r^a s^b has ID b*n + a.
FiniteGroup dihedral(std::size_t n);
/// Symmetric group on n <= 5 points; elements are permutations in
/// lexicographic order of their one-line notation, op(p, q) = p o q.
FiniteGroup symmetric(std::size_t n);
/// Quaternion group, IDs 0..7 = 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion();

/// Cayley-table text: `order n`, optional `labels l0 l1 ...`, then n rows.
FiniteGroup read_cayley_table(std::istream& in, std::string name = "table");
void write_cayley_table(std::ostream& out, const FiniteGroup& g);

/// Builds a group from a descriptor such as "Z4", "D4", "S3", "Q8",
/// "Z4xZ4" (left-associated direct product) or "file:path/to/table".
FiniteGroup make_group(std::string_view descriptor);

/// A subset of a parent group closed under the operation. Holds a
/// non-owning reference to the parent, which must outlive it.
class Subgroup {
 public:
  /// Validates membership and closure; throws InvalidElementId or
  /// ParameterError otherwise.
  Subgroup(const FiniteGroup& parent, std::vector<Element> elements);

  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const { return *parent_; }
  std::span<const Element> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element a) const { return a < member_.size() && member_[a]; }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  struct Trusted {};
  Subgroup(Trusted, const FiniteGroup& parent, std::vector<Element> elements);

  friend Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);

  const FiniteGroup* parent_;
  std::vector<Element> elements_;
  std::vector<bool> member_;
};

/// Smallest subgroup containing `gens`.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);

/// [G,G], generated by all a^-1 b^-1 a b.
Subgroup commutator_subgroup(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

}  // namespace hslin
