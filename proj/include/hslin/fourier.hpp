#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hslin/characters.hpp"
#include "hslin/group.hpp"

namespace hslin {

inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 16;

/// Dense f: G^n -> G. Point x sits at index sum_i x_i |G|^i.
struct FunctionTable {
  std::size_t arity = 0;
  std::vector<Element> values;
};

/// |G|^n, or TooLarge when it exceeds kMaxTableSize.
std::size_t table_size(std::size_t order, std::size_t n);
std::size_t encode_point(std::size_t order, std::span<const Element> x);
std::vector<Element> decode_point(std::size_t order, std::size_t n, std::size_t index);

FunctionTable constant_function(const FiniteGroup& g, std::size_t n, Element value);
FunctionTable dictator_function(const FiniteGroup& g, std::size_t n, std::size_t coord);
/// x_1 * x_2 * ... * x_n.
FunctionTable product_function(const FiniteGroup& g, std::size_t n);

/// Fourier analysis of F = chi o f over the abelian group G^n. Characters of
/// G^n are tuples alpha of characters of G, indexed like points: alpha_i is
/// the element ID that labels the character (see enumerate_1dim_characters).
class FourierTable {
 public:
  /// Throws NonAbelianGroup or TooLarge.
  FourierTable(const FiniteGroup& g, const FunctionTable& f, std::size_t chi);

  std::size_t arity() const { return arity_; }
  std::size_t order() const { return order_; }
  const Eigen::VectorXcd& values() const { return values_; }            // F(x)
  const Eigen::VectorXcd& coefficients() const { return coefficients_; }  // F^(alpha)

  /// Reconstructs F from the coefficients.
  Eigen::VectorXcd inverse() const;
  double parseval_sum() const { return coefficients_.squaredNorm(); }

  /// |alpha|: coordinates with a nontrivial character.
  std::size_t degree(std::size_t alpha) const;
  /// |alpha|_S: coordinates whose character is not constant on H.
  std::size_t degree_relative(std::size_t alpha, const Subgroup& h) const;

 private:
  std::size_t order_;
  std::size_t arity_;
  std::vector<Character> characters_;
  Eigen::VectorXcd values_;
  Eigen::VectorXcd coefficients_;
};

/// Applies, along every coordinate, the |G| x |G| matrix m to a tensor
/// stored with the point indexing above.
Eigen::VectorXcd apply_per_coordinate(const Eigen::MatrixXcd& m, std::size_t n, Eigen::VectorXcd data);

struct Influence {
  double modified = 0.0;
  double plain = 0.0;
};

/// Over alpha with |alpha|_S <= d:
///   modified = sum |F^(alpha)|^2 with alpha_i not constant on H,
/// and over alpha with |alpha| <= d:
///   plain    = sum |F^(alpha)|^2 with alpha_i nontrivial.
/// The two agree when H = G.
Influence modified_influence(const FiniteGroup& g, const FunctionTable& f, std::size_t chi, std::size_t coord,
                             std::size_t d, const Subgroup& h);
Influence modified_influence(const FourierTable& t, std::size_t coord, std::size_t d, const Subgroup& h);

}  // namespace hslin
