#include "hslin/repcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/SVD>
#include <boost/rational.hpp>

namespace hslin {

namespace detail {
extern const std::string_view kBuiltinCatalog;
}

namespace {

double parse_fraction(std::string_view text) {
  const std::string s(text);
  try {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return static_cast<double>(v);
    }
    const long long p = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(s);
    const std::string den = s.substr(slash + 1);
    const long long q = std::stoll(den, &used);
    if (used != den.size() || q == 0) throw std::invalid_argument(s);
    const boost::rational<long long> r(p, q);
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  } catch (const std::logic_error&) {
    throw Error(Errc::SyntaxError, "bad number '" + s + "'");
  }
}

}  // namespace

std::complex<double> parse_catalog_value(std::string_view token) {
  if (token.empty()) throw Error(Errc::SyntaxError, "empty entry");
  if (token.front() == '(') {
    const auto comma = token.find(',');
    if (token.back() != ')' || comma == std::string_view::npos)
      throw Error(Errc::SyntaxError, "bad entry '" + std::string(token) + "'");
    return {parse_fraction(token.substr(1, comma - 1)),
            parse_fraction(token.substr(comma + 1, token.size() - comma - 2))};
  }
  const auto caret = token.find('^');
  if (caret == std::string_view::npos) return {parse_fraction(token), 0.0};
  const double c = parse_fraction(token.substr(0, caret));
  const double turns = parse_fraction(token.substr(caret + 1));
  // Exact values at quarter turns keep 0 and +-1 free of rounding noise.
  const double quarter = turns * 4.0;
  if (quarter == std::floor(quarter)) {
    static constexpr std::complex<double> kQuarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return c * kQuarter[static_cast<int>(((static_cast<long long>(quarter) % 4) + 4) % 4)];
  }
  return std::polar(c, 2.0 * std::numbers::pi * turns);
}

IrrepCatalog parse_irrep_catalog(std::istream& in) {
  IrrepCatalog out;
  IrrepCatalogEntry* entry = nullptr;
  Irrep* irrep = nullptr;
  std::size_t number = 0;
  auto fail = [&](const std::string& what) -> void {
    throw Error(Errc::SyntaxError, "line " + std::to_string(number) + ": " + what);
  };

  for (std::string line; std::getline(in, line);) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;

    if (head == "group") {
      if (entry) fail("missing 'end'");
      out.emplace_back();
      entry = &out.back();
      irrep = nullptr;
      if (!(ls >> entry->group)) fail("missing group name");
    } else if (head == "end") {
      if (!entry) fail("'end' outside a group");
      entry = nullptr;
      irrep = nullptr;
    } else if (head == "irrep") {
      if (!entry) fail("'irrep' outside a group");
      entry->irreps.emplace_back();
      irrep = &entry->irreps.back();
      long long dim = 0;
      if (!(ls >> dim) || dim < 1) fail("bad dimension");
      irrep->dim = static_cast<std::size_t>(dim);
    } else {
      if (!irrep) fail("matrix line outside an irrep");
      std::size_t id = 0;
      try {
        std::size_t used = 0;
        id = std::stoul(head, &used);
        if (used != head.size()) throw std::invalid_argument(head);
      } catch (const std::logic_error&) {
        fail("bad element id '" + head + "'");
      }
      std::string eq;
      if (!(ls >> eq) || eq != "=") fail("expected '='");
      if (id != irrep->images.size()) fail("element ids must run 0, 1, 2, ...");
      const auto d = static_cast<Eigen::Index>(irrep->dim);
      Eigen::MatrixXcd m(d, d);
      for (Eigen::Index i = 0; i < d * d; ++i) {
        std::string tok;
        if (!(ls >> tok)) fail("expected " + std::to_string(d * d) + " entries");
        try {
          m(i / d, i % d) = parse_catalog_value(tok);
        } catch (const Error& e) {
          fail(e.what());
        }
      }
      std::string extra;
      if (ls >> extra) fail("too many entries");
      irrep->images.push_back(std::move(m));
    }
  }
  if (entry) fail("missing 'end'");
  return out;
}

const IrrepCatalog& builtin_irrep_catalog() {
  static const IrrepCatalog catalog = [] {
    std::istringstream in{std::string(detail::kBuiltinCatalog)};
    return parse_irrep_catalog(in);
  }();
  return catalog;
}

const IrrepCatalogEntry* find_catalog_entry(std::string_view group) {
  for (const auto& e : builtin_irrep_catalog())
    if (e.group == group) return &e;
  return nullptr;
}

bool CatalogValidation::ok(double tol) const {
  return homomorphism_error <= tol && unitarity_error <= tol && orthogonality_error <= tol &&
         vanishing_sum_error <= tol && dimension_square_sum == group_order;
}

CatalogValidation validate_catalog_entry(const IrrepCatalogEntry& entry, const FiniteGroup& g) {
  const std::size_t n = g.order();
  CatalogValidation v;
  v.group_order = n;
  std::vector<std::vector<std::complex<double>>> chars;
  for (const auto& rho : entry.irreps) {
    if (rho.images.size() != n) throw Error(Errc::LengthMismatch, "irrep needs one matrix per element");
    const auto d = static_cast<Eigen::Index>(rho.dim);
    for (const auto& m : rho.images)
      if (m.rows() != d || m.cols() != d) throw Error(Errc::LengthMismatch, "matrix has the wrong size");
    v.dimension_square_sum += rho.dim * rho.dim;

    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    std::vector<std::complex<double>> chi(n);
    bool trivial = true;
    for (Element a = 0; a < n; ++a) {
      const auto& ra = rho.images[a];
      sum += ra;
      chi[a] = ra.trace();
      trivial = trivial && (ra - Eigen::MatrixXcd::Identity(d, d)).norm() <= kIdentityTolerance;
      v.unitarity_error =
          std::max(v.unitarity_error, (ra * ra.adjoint() - Eigen::MatrixXcd::Identity(d, d)).norm());
      for (Element b = 0; b < n; ++b)
        v.homomorphism_error =
            std::max(v.homomorphism_error, (rho.images[g.op(a, b)] - ra * rho.images[b]).norm());
    }
    if (!trivial) v.vanishing_sum_error = std::max(v.vanishing_sum_error, sum.norm());
    chars.push_back(std::move(chi));
  }
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j) {
      std::complex<double> inner = 0;
      for (Element a = 0; a < n; ++a) inner += chars[i][a] * std::conj(chars[j][a]);
      inner /= static_cast<double>(n);
      v.orthogonality_error = std::max(v.orthogonality_error, std::abs(inner - (i == j ? 1.0 : 0.0)));
    }
  return v;
}

std::string_view gap_kind_name(GapReport::Kind kind) {
  return kind == GapReport::Kind::Epsilon ? "epsilon" : "operator-norm";
}

namespace {

GapReport start_report(GapReport::Kind kind, const FiniteGroup& g, std::span<const Element> s,
                       const HsResult& hs) {
  GapReport r;
  r.kind = kind;
  r.group = g.name();
  r.satisfying = normalize_set(g, s);
  r.hs_order = hs.subgroup.order();
  const double n = static_cast<double>(g.order());
  r.formula_gap = 1.0 - std::abs((n - 1) / n + std::polar(1.0, 2.0 * std::numbers::pi / n) / n);
  return r;
}

void finish_gap(GapReport& r) {
  double worst = 0.0;
  for (const auto& item : r.items)
    if (item.relevant) {
      r.vacuous = false;
      worst = std::max(worst, item.value);
    }
  r.gap = r.vacuous ? 1.0 : 1.0 - worst;
}

std::string format_label(const IntVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

GapReport check_epsilon_gap(const FiniteGroup& g, std::span<const Element> s, const HsResult& hs) {
  GapReport r = start_report(GapReport::Kind::Epsilon, g, s, hs);
  for (const auto& chi : enumerate_1dim_characters(g)) {
    std::complex<double> mean = 0;
    for (Element a : r.satisfying) mean += chi.value(g.inv(a));
    mean /= static_cast<double>(r.satisfying.size());
    const bool constant = chi.constant_on(hs.subgroup);
    if (constant) ++r.constant_count;
    r.items.push_back({format_label(chi.label), std::abs(mean), !constant});
  }
  r.expected_constant_count = g.order() / hs.subgroup.order();
  finish_gap(r);
  r.holds = r.constant_count == r.expected_constant_count && (r.vacuous || r.gap >= kGapMargin);
  return r;
}

GapReport check_operator_norm_gap(const IrrepCatalogEntry& entry, const FiniteGroup& g,
                                  std::span<const Element> s, const HsResult& hs) {
  GapReport r = start_report(GapReport::Kind::OperatorNorm, g, s, hs);
  r.hypothesis_met = hs.generated_by_SinvS;
  for (std::size_t idx = 0; idx < entry.irreps.size(); ++idx) {
    const Irrep& rho = entry.irreps[idx];
    if (rho.images.size() != g.order()) throw Error(Errc::LengthMismatch, "irrep needs one matrix per element");
    const auto d = static_cast<Eigen::Index>(rho.dim);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (Element a : r.satisfying) m += rho.images[g.inv(a)];
    m /= static_cast<double>(r.satisfying.size());
    const double norm = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
    r.items.push_back({"irrep" + std::to_string(idx) + "/dim" + std::to_string(rho.dim), norm, rho.dim >= 2});
  }
  finish_gap(r);
  r.holds = !r.hypothesis_met || r.vacuous || r.gap >= kGapMargin;
  return r;
}

}  // namespace hslin
