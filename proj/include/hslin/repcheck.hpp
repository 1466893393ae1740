#pragma once

#include <complex>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hslin/characters.hpp"
#include "hslin/group.hpp"
#include "hslin/hs_subgroup.hpp"

namespace hslin {

/// Tolerance on algebraic identities and the margin demanded of gaps.
inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kGapMargin = 1e-6;

struct Irrep {
  std::size_t dim = 0;
  std::vector<Eigen::MatrixXcd> images;  // indexed by element ID
};

struct IrrepCatalogEntry {
  std::string group;
  std::vector<Irrep> irreps;
};

using IrrepCatalog = std::vector<IrrepCatalogEntry>;

/// One catalog entry token: 0, c, c^k/N (c times exp(2 pi i k/N)) or
/// (re,im), where c, re and im are integers or fractions p/q.
std::complex<double> parse_catalog_value(std::string_view token);

/// Throws SyntaxError with the offending line number.
IrrepCatalog parse_irrep_catalog(std::istream& in);
/// The catalog in data/irreps.catalog, embedded at build time.
const IrrepCatalog& builtin_irrep_catalog();
/// nullptr when the catalog has no entry under that name.
const IrrepCatalogEntry* find_catalog_entry(std::string_view group);

struct CatalogValidation {
  double homomorphism_error = 0.0;  // max |rho(ab) - rho(a) rho(b)|
  double unitarity_error = 0.0;     // max |rho(g) rho(g)^* - I|
  double orthogonality_error = 0.0; // max |<chi_rho, chi_sigma> - delta|
  double vanishing_sum_error = 0.0; // max |sum_g rho(g)| over nontrivial rho
  std::size_t dimension_square_sum = 0;
  std::size_t group_order = 0;

  bool ok(double tol = kIdentityTolerance) const;
};

/// Checks every irrep of the entry against the group's table. Throws
/// LengthMismatch when an irrep does not have one image per element.
CatalogValidation validate_catalog_entry(const IrrepCatalogEntry& entry, const FiniteGroup& g);

struct GapItem {
  std::string label;
  /// |E_{s in S} chi(s^-1)| for characters, or the spectral norm of
  /// E_{s in S} rho(s^-1) for irreps.
  double value = 0.0;
  /// Counted in the maximum: not constant on H_S, or dimension >= 2.
  bool relevant = false;
};

struct GapReport {
  enum class Kind { Epsilon, OperatorNorm };
  Kind kind = Kind::Epsilon;
  std::string group;
  std::vector<Element> satisfying;
  std::size_t hs_order = 0;
  std::vector<GapItem> items;

  /// No relevant item; the gap claim holds vacuously.
  bool vacuous = true;
  /// 1 - max over relevant items; 1 when vacuous.
  double gap = 1.0;
  /// Epsilon: characters constant on H_S, and |G|/|H_S|.
  std::size_t constant_count = 0;
  std::size_t expected_constant_count = 0;
  /// Operator norm: S^-1 S generates H_S. When false the gap is reported
  /// but not asserted.
  bool hypothesis_met = true;
  /// 1 - |(|G|-1)/|G| + exp(2 pi i/|G|)/|G||, for comparison only.
  double formula_gap = 0.0;

  /// The asserted claim: counts agree (epsilon) and gap >= kGapMargin
  /// unless vacuous or the hypothesis is not met.
  bool holds = true;
};

std::string_view gap_kind_name(GapReport::Kind kind);

GapReport check_epsilon_gap(const FiniteGroup& g, std::span<const Element> s, const HsResult& hs);
GapReport check_operator_norm_gap(const IrrepCatalogEntry& entry, const FiniteGroup& g,
                                  std::span<const Element> s, const HsResult& hs);

}  // namespace hslin
