#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hslin/group.hpp"

namespace hslin {

using Rational = boost::rational<std::int64_t>;

/// The literal shift * x_var.
struct Literal {
  Element shift = 0;
  std::size_t var = 0;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Satisfied iff (a_1 x_{i_1}) (a_2 x_{i_2}) ... (a_k x_{i_k}) lies in S,
/// the product taken left to right.
using Constraint = std::vector<Literal>;

using Assignment = std::vector<Element>;

/// A Max-Ek-LIN_S(G) instance.
struct Instance {
  std::shared_ptr<const FiniteGroup> group;
  /// Descriptor the group was built from; written back by serialize().
  std::string group_spec;
  std::vector<Element> satisfying;  // S, sorted and duplicate-free
  std::size_t arity = 0;
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;

  const FiniteGroup& g() const { return *group; }
  bool in_s(Element a) const;
};

/// Throws ParameterError / ElementOutOfRange when the invariants fail.
void validate(const Instance& inst);

Element constraint_value(const Instance& inst, const Constraint& c, std::span<const Element> values);
bool satisfied(const Instance& inst, const Constraint& c, std::span<const Element> values);
std::size_t count_satisfied(const Instance& inst, std::span<const Element> values);

/// Fraction of satisfied constraints. An instance without constraints has
/// value 1 (vacuously). Throws LengthMismatch.
Rational evaluate(const Instance& inst, std::span<const Element> values);

struct PlantedInstance {
  Instance instance;
  Assignment planted;
};

/// m constraints over k distinct variables each, every one satisfied by a
/// uniformly random planted assignment.
PlantedInstance generate_planted(std::shared_ptr<const FiniteGroup> group, std::string group_spec,
                                 std::span<const Element> s, std::size_t k, std::size_t n, std::size_t m,
                                 std::uint64_t seed);

/// As generate_planted, but each constraint independently with probability
/// `noise` has all of its shifts resampled uniformly.
PlantedInstance generate_noisy(std::shared_ptr<const FiniteGroup> group, std::string group_spec,
                               std::span<const Element> s, std::size_t k, std::size_t n, std::size_t m,
                               double noise, std::uint64_t seed);

/// Text format:
///   group <builtin-name | file:path>
///   S <id> <id> ...
///   k <int> n <int> m <int>
///   a1 i1 a2 i2 ... ak ik        (m lines)
/// '#' starts a comment. Errors carry the 1-based line number.
Instance parse_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
std::string serialize(const Instance& inst);

}  // namespace hslin
