#include "hslin/group.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace hslin {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 64;
constexpr std::size_t kAssociativitySamples = 200000;

Element find_identity(const OpTable& t) {
  const auto n = static_cast<Element>(t.rows());
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = t(e, a) == a && t(a, e) == a;
    if (ok) return e;
  }
  throw Error(Errc::MissingIdentity, "no two-sided identity in table");
}

bool associative_at(const OpTable& t, Element a, Element b, Element c) {
  return t(t(a, b), c) == t(a, t(b, c));
}

}  // namespace

FiniteGroup::FiniteGroup(OpTable table, std::string name, std::vector<std::string> labels)
    : table_(std::move(table)), name_(std::move(name)), labels_(std::move(labels)) {
  const auto n = static_cast<std::size_t>(table_.rows());
  if (n == 0 || static_cast<std::size_t>(table_.cols()) != n)
    throw Error(Errc::MalformedTable, "table must be square and non-empty");
  if (n > kMaxGroupOrder)
    throw Error(Errc::GroupTooLarge, "order " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxGroupOrder));
  if (!labels_.empty() && labels_.size() != n)
    throw Error(Errc::MalformedTable, "label count does not match order");
  for (Eigen::Index i = 0; i < table_.size(); ++i)
    if (table_.data()[i] >= n)
      throw Error(Errc::MalformedTable, "entry " + std::to_string(table_.data()[i]) +
                                            " outside [0, " + std::to_string(n) + ")");

  identity_ = find_identity(table_);

  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      if (table_(a, b) == identity_ && table_(b, a) == identity_) {
        inverse_[a] = b;
        found = true;
      }
    }
    if (!found) throw Error(Errc::MissingInverse, "element " + std::to_string(a) + " has no inverse");
  }

  const auto e = static_cast<Element>(n);
  if (n <= kExhaustiveAssociativityLimit) {
    for (Element a = 0; a < e; ++a)
      for (Element b = 0; b < e; ++b)
        for (Element c = 0; c < e; ++c)
          if (!associative_at(table_, a, b, c))
            throw Error(Errc::NonAssociativeTable, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                       "," + std::to_string(c) + ")");
  } else {
    std::mt19937_64 rng(0x5eed'a55c'0000'0001ULL ^ n);
    std::uniform_int_distribution<Element> pick(0, e - 1);
    for (std::size_t s = 0; s < kAssociativitySamples; ++s) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (!associative_at(table_, a, b, c))
        throw Error(Errc::NonAssociativeTable, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                   "," + std::to_string(c) + ")");
    }
  }
}

Element FiniteGroup::product(std::span<const Element> factors) const {
  Element acc = identity_;
  for (Element f : factors) acc = op(acc, f);
  return acc;
}

std::string FiniteGroup::label(Element a) const {
  return labels_.empty() ? std::to_string(a) : labels_.at(a);
}

bool FiniteGroup::is_abelian() const { return table_ == table_.transpose(); }

// ---------------------------------------------------------------------------

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Element> elements)
    : Subgroup(Trusted{}, parent, std::move(elements)) {
  for (Element a : elements_)
    if (!parent.contains(a))
      throw Error(Errc::InvalidElementId, std::to_string(a) + " is not an element of " + parent.name());
  if (elements_.empty() || !contains(parent.identity()))
    throw Error(Errc::ParameterError, "subgroup must contain the identity");
  for (Element a : elements_)
    for (Element b : elements_)
      if (!contains(parent.op(a, b))) throw Error(Errc::ParameterError, "element set is not closed");
}

Subgroup::Subgroup(Trusted, const FiniteGroup& parent, std::vector<Element> elements)
    : parent_(&parent), elements_(std::move(elements)), member_(parent.order(), false) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Element a : elements_)
    if (a < member_.size()) member_[a] = true;
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return Subgroup(Trusted{}, parent, {parent.identity()}); }

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Element> all(parent.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return Subgroup(Trusted{}, parent, std::move(all));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Element a) { return other.contains(a); });
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  for (Element a : gens)
    if (!g.contains(a))
      throw Error(Errc::InvalidElementId, std::to_string(a) + " is not an element of " + g.name());

  // In a finite group closure under right multiplication by the generators
  // already yields inverses.
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> members{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Element s : gens) {
      const Element next = g.op(members[head], s);
      if (!seen[next]) {
        seen[next] = true;
        members.push_back(next);
      }
    }
  }
  return Subgroup(Subgroup::Trusted{}, g, std::move(members));
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> commutators;
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  return generated_subgroup(g, commutators);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  const auto n = static_cast<Element>(g.order());
  for (Element x = 0; x < n; ++x)
    for (Element a : h.elements())
      if (!h.contains(g.op(g.op(x, a), g.inv(x)))) return false;
  return true;
}

}  // namespace hslin
