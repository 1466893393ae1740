#include "hslin/characters.hpp"

#include <numbers>

#include <boost/integer/common_factor.hpp>

#include "hslin/smith.hpp"

namespace hslin {

std::complex<double> Character::value(Element g) const {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase.at(g)) / static_cast<double>(modulus);
  return std::polar(1.0, angle);
}

bool Character::is_trivial() const {
  for (auto p : phase)
    if (p != 0) return false;
  return true;
}

bool Character::constant_on(const Subgroup& h) const {
  for (Element a : h.elements())
    if (phase.at(a) != 0) return false;
  return true;
}

bool operator==(const Character& a, const Character& b) {
  if (a.phase.size() != b.phase.size()) return false;
  // Compare exp(2 pi i p/ma) with exp(2 pi i q/mb) exactly.
  for (std::size_t i = 0; i < a.phase.size(); ++i)
    if (a.phase[i] * b.modulus != b.phase[i] * a.modulus) return false;
  return true;
}

std::vector<Character> enumerate_1dim_characters(const FiniteGroup& g) {
  const QuotientGroup ab = quotient(g, commutator_subgroup(g));
  const AbelianDecomposition& dec = *ab.abelian();
  const auto& inv = dec.invariants();
  const std::int64_t modulus = inv.empty() ? 1 : inv.back();

  std::vector<Character> out;
  out.reserve(ab.order());
  for (Element c = 0; c < ab.order(); ++c) {
    Character chi;
    chi.label = dec.to_vec(c);
    chi.modulus = modulus;
    chi.phase.resize(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      const IntVector& v = dec.to_vec(ab.project(x));
      std::int64_t p = 0;
      for (std::size_t i = 0; i < inv.size(); ++i)
        p += chi.label[static_cast<Eigen::Index>(i)] * v[static_cast<Eigen::Index>(i)] * (modulus / inv[i]);
      chi.phase[x] = mod_floor<std::int64_t>(p, modulus);
    }
    out.push_back(std::move(chi));
  }
  return out;
}

namespace {

Character combine(const Character& a, const Character& b, std::int64_t sign_b) {
  Character out;
  out.modulus = boost::integer::lcm(a.modulus, b.modulus);
  out.label = a.label.size() == b.label.size() ? IntVector(a.label + sign_b * b.label) : a.label;
  out.phase.resize(a.phase.size());
  for (std::size_t i = 0; i < a.phase.size(); ++i)
    out.phase[i] = mod_floor<std::int64_t>(
        a.phase[i] * (out.modulus / a.modulus) + sign_b * b.phase[i] * (out.modulus / b.modulus), out.modulus);
  return out;
}

}  // namespace

Character multiply(const Character& a, const Character& b) { return combine(a, b, 1); }

Character conjugate(const Character& a) {
  Character zero;
  zero.modulus = a.modulus;
  zero.label = IntVector::Zero(a.label.size());
  zero.phase.assign(a.phase.size(), 0);
  return combine(zero, a, -1);
}

}  // namespace hslin
