#include "hslin/quotient.hpp"

#include <algorithm>
#include <limits>

#include "hslin/smith.hpp"

namespace hslin {

AbelianDecomposition::AbelianDecomposition(std::vector<std::int64_t> invariants,
                                           std::vector<IntVector> coordinates)
    : invariants_(std::move(invariants)), coordinates_(std::move(coordinates)) {
  std::size_t size = 1;
  for (auto d : invariants_) size *= static_cast<std::size_t>(d);
  if (size != coordinates_.size())
    throw Error(Errc::ParameterError, "invariant product does not match group order");
  by_index_.assign(size, std::numeric_limits<Element>::max());
  for (std::size_t a = 0; a < coordinates_.size(); ++a) {
    const std::size_t idx = index_of(reduce(coordinates_[a]));
    if (by_index_[idx] != std::numeric_limits<Element>::max())
      throw Error(Errc::ParameterError, "coordinate map is not injective");
    by_index_[idx] = static_cast<Element>(a);
  }
}

IntVector AbelianDecomposition::reduce(IntVector v) const {
  if (static_cast<std::size_t>(v.size()) != invariants_.size())
    throw Error(Errc::LengthMismatch, "vector length does not match rank");
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = mod_floor<std::int64_t>(v[i], invariants_[i]);
  return v;
}

IntVector AbelianDecomposition::add(const IntVector& a, const IntVector& b) const { return reduce(a + b); }

std::size_t AbelianDecomposition::index_of(const IntVector& reduced) const {
  std::size_t idx = 0, radix = 1;
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    idx += static_cast<std::size_t>(reduced[static_cast<Eigen::Index>(i)]) * radix;
    radix *= static_cast<std::size_t>(invariants_[i]);
  }
  return idx;
}

Element AbelianDecomposition::from_vec(const IntVector& v) const { return by_index_[index_of(reduce(v))]; }

AbelianDecomposition decompose_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(Errc::NonAbelianGroup, g.name() + " is not abelian");
  const std::size_t n = g.order();

  // Greedy generators with discrete logs: each newly covered element is
  // recorded as an exponent vector over the generators chosen so far.
  std::vector<Element> gens;
  std::vector<std::vector<std::int64_t>> relations;  // row j: t_j e_j - dlog(g_j^t_j)
  std::vector<std::vector<std::int64_t>> dlog(n);
  std::vector<bool> covered(n, false);
  std::vector<Element> members{g.identity()};
  covered[g.identity()] = true;

  for (Element cand = 0; cand < n; ++cand) {
    if (covered[cand]) continue;
    const std::size_t j = gens.size();
    gens.push_back(cand);
    for (auto& v : dlog) v.resize(j + 1, 0);

    std::int64_t t = 1;
    Element power = cand;
    while (!covered[power]) {
      power = g.op(power, cand);
      ++t;
    }
    std::vector<std::int64_t> rel(j + 1, 0);
    for (std::size_t i = 0; i < j; ++i) rel[i] = -dlog[power][i];
    rel[j] = t;
    relations.push_back(std::move(rel));

    const std::vector<Element> old = members;
    Element step = cand;
    for (std::int64_t c = 1; c < t; ++c, step = g.op(step, cand)) {
      for (Element x : old) {
        const Element y = g.op(x, step);
        covered[y] = true;
        members.push_back(y);
        dlog[y] = dlog[x];
        dlog[y][j] = c;
      }
    }
  }

  const auto r = static_cast<Eigen::Index>(gens.size());
  if (r == 0) return AbelianDecomposition({}, {IntVector(0)});

  BigMatrix rel(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index k = 0; k < r; ++k)
      rel(i, k) = k < static_cast<Eigen::Index>(relations[i].size()) ? relations[i][k] : 0;
  auto snf = smith_normal_form(rel);

  std::vector<std::int64_t> invariants;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto d = static_cast<std::int64_t>(snf.D(i, i));
    if (d > 1) {
      invariants.push_back(d);
      kept.push_back(i);
    }
  }

  // Exponent row vector e maps to (e V)_i mod d_i.
  std::vector<IntVector> coords(n, IntVector(static_cast<Eigen::Index>(kept.size())));
  for (Element a = 0; a < n; ++a) {
    for (std::size_t q = 0; q < kept.size(); ++q) {
      BigInt acc = 0;
      for (Eigen::Index k = 0; k < r; ++k)
        if (dlog[a][k] != 0) acc += BigInt(dlog[a][k]) * snf.V(k, kept[q]);
      coords[a][static_cast<Eigen::Index>(q)] = static_cast<std::int64_t>(mod_floor(acc, BigInt(invariants[q])));
    }
  }
  return AbelianDecomposition(std::move(invariants), std::move(coords));
}

// ---------------------------------------------------------------------------

QuotientGroup::QuotientGroup(const FiniteGroup& parent, Subgroup normal, std::vector<Element> reps,
                             std::vector<Element> projection, FiniteGroup group)
    : parent_(&parent),
      normal_(std::move(normal)),
      reps_(std::move(reps)),
      projection_(std::move(projection)),
      group_(std::move(group)) {
  if (group_.is_abelian()) abelian_ = decompose_abelian(group_);
}

std::vector<Element> QuotientGroup::coset(Element c) const {
  std::vector<Element> out;
  const Element rep = reps_.at(c);
  for (Element h : normal_.elements()) out.push_back(parent_->op(rep, h));
  std::sort(out.begin(), out.end());
  return out;
}

IntVector QuotientGroup::iso_to_vec(Element c) const {
  if (!abelian_) throw Error(Errc::NonAbelianGroup, "quotient is not abelian");
  return abelian_->to_vec(c);
}

Element QuotientGroup::iso_from_vec(const IntVector& v) const {
  if (!abelian_) throw Error(Errc::NonAbelianGroup, "quotient is not abelian");
  return abelian_->from_vec(v);
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent().order() != g.order())
    throw Error(Errc::ParameterError, "subgroup belongs to a different group");
  if (!is_normal(g, h)) throw Error(Errc::NotNormal, "subgroup is not normal in " + g.name());

  const std::size_t n = g.order();
  constexpr Element kUnset = std::numeric_limits<Element>::max();
  std::vector<Element> rep_of(n, kUnset);
  std::vector<Element> reps;
  // Scanning in increasing ID order makes the first element seen in each
  // coset its minimum.
  for (Element a = 0; a < n; ++a) {
    if (rep_of[a] != kUnset) continue;
    reps.push_back(a);
    for (Element x : h.elements()) rep_of[g.op(a, x)] = a;
  }
  std::vector<Element> projection(n);
  for (Element a = 0; a < n; ++a)
    projection[a] = static_cast<Element>(std::lower_bound(reps.begin(), reps.end(), rep_of[a]) - reps.begin());

  const std::size_t q = reps.size();
  OpTable table(q, q);
  std::vector<std::string> labels(q);
  for (std::size_t i = 0; i < q; ++i) {
    labels[i] = "[" + g.label(reps[i]) + "]";
    for (std::size_t j = 0; j < q; ++j) table(i, j) = projection[g.op(reps[i], reps[j])];
  }
  FiniteGroup qg(std::move(table), g.name() + "/H" + std::to_string(h.order()), std::move(labels));
  return QuotientGroup(g, h, std::move(reps), std::move(projection), std::move(qg));
}

}  // namespace hslin
