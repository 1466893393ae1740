#include "hslin/hs_subgroup.hpp"

#include <algorithm>
#include <set>

namespace hslin {

namespace {

constexpr std::size_t kBruteForceOrderLimit = 24;

std::vector<Element> quotient_set(const FiniteGroup& g, std::span<const Element> s) {
  std::vector<Element> out;
  for (Element a : s)
    for (Element b : s) out.push_back(g.op(g.inv(a), b));
  return out;
}

}  // namespace

std::vector<Element> normalize_set(const FiniteGroup& g, std::span<const Element> s) {
  if (s.empty()) throw Error(Errc::EmptyS, "S must be non-empty");
  std::vector<Element> out(s.begin(), s.end());
  for (Element a : out)
    if (!g.contains(a)) throw Error(Errc::InvalidElementId, std::to_string(a) + " is not in " + g.name());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HsResult compute_HS(const FiniteGroup& g, std::span<const Element> s_in) {
  const std::vector<Element> s = normalize_set(g, s_in);
  const Element s0 = s.front();

  const Subgroup derived = commutator_subgroup(g);
  std::vector<Element> gens(derived.elements().begin(), derived.elements().end());
  for (Element a : s) gens.push_back(g.op(g.inv(s0), a));
  Subgroup hs = generated_subgroup(g, gens);

  const bool by_sinvs = generated_subgroup(g, quotient_set(g, s)) == hs;
  const std::size_t den = hs.order();
  return HsResult{std::move(hs), s0, s.size(), den, by_sinvs};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  if (g.order() > kBruteForceOrderLimit)
    throw Error(Errc::GroupTooLarge, "subgroup enumeration limited to order " +
                                         std::to_string(kBruteForceOrderLimit));
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  seen.insert({g.identity()});
  const auto n = static_cast<Element>(g.order());
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Element x = 0; x < n; ++x) {
      if (found[head].contains(x)) continue;
      std::vector<Element> gens(found[head].elements().begin(), found[head].elements().end());
      gens.push_back(x);
      Subgroup next = generated_subgroup(g, gens);
      // Lagrange: anything produced must divide |G|.
      if (n % next.order() != 0) throw Error(Errc::MalformedTable, "subgroup order does not divide |G|");
      std::vector<Element> key(next.elements().begin(), next.elements().end());
      if (seen.insert(std::move(key)).second) found.push_back(std::move(next));
    }
  }
  return found;
}

HsResult brute_force_HS(const FiniteGroup& g, std::span<const Element> s) {
  const auto subgroups = all_subgroups(g);
  return brute_force_HS(g, s, subgroups);
}

HsResult brute_force_HS(const FiniteGroup& g, std::span<const Element> s_in,
                        std::span<const Subgroup> subgroups) {
  if (g.order() > kBruteForceOrderLimit) throw Error(Errc::GroupTooLarge, g.name());
  const std::vector<Element> s = normalize_set(g, s_in);
  const auto n = static_cast<Element>(g.order());

  const Subgroup* best = nullptr;
  for (const Subgroup& h : subgroups) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b) ok = h.contains(g.commutator(a, b));
    // S inside one coset: s0^-1 s in H for all s.
    for (std::size_t i = 1; i < s.size() && ok; ++i) ok = h.contains(g.op(g.inv(s[0]), s[i]));
    if (!ok || !is_normal(g, h)) continue;
    if (!best || h.order() < best->order() ||
        (h.order() == best->order() &&
         std::lexicographical_compare(h.elements().begin(), h.elements().end(), best->elements().begin(),
                                      best->elements().end())))
      best = &h;
  }
  if (!best) throw Error(Errc::ParameterError, "subgroup list does not contain G");

  const bool by_sinvs = generated_subgroup(g, quotient_set(g, s)) == *best;
  return HsResult{*best, s.front(), s.size(), best->order(), by_sinvs};
}

}  // namespace hslin
