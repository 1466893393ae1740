#include "hslin/instance.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>

#include "hslin/hs_subgroup.hpp"

namespace hslin {

bool Instance::in_s(Element a) const { return std::binary_search(satisfying.begin(), satisfying.end(), a); }

void validate(const Instance& inst) {
  if (!inst.group) throw Error(Errc::ParameterError, "instance has no group");
  if (inst.arity < 2) throw Error(Errc::ParameterError, "arity must be at least 2");
  if (inst.satisfying.empty()) throw Error(Errc::EmptyS, "S must be non-empty");
  if (!std::is_sorted(inst.satisfying.begin(), inst.satisfying.end()) ||
      std::adjacent_find(inst.satisfying.begin(), inst.satisfying.end()) != inst.satisfying.end())
    throw Error(Errc::ParameterError, "S must be sorted and duplicate-free");
  for (Element a : inst.satisfying)
    if (!inst.g().contains(a)) throw Error(Errc::ElementOutOfRange, "S element " + std::to_string(a));
  for (std::size_t c = 0; c < inst.constraints.size(); ++c) {
    const auto& con = inst.constraints[c];
    if (con.size() != inst.arity)
      throw Error(Errc::ParameterError, "constraint " + std::to_string(c) + " does not have k literals");
    for (const auto& lit : con) {
      if (!inst.g().contains(lit.shift))
        throw Error(Errc::ElementOutOfRange, "shift " + std::to_string(lit.shift) + " in constraint " +
                                                 std::to_string(c));
      if (lit.var >= inst.num_vars)
        throw Error(Errc::ParameterError, "variable " + std::to_string(lit.var) + " in constraint " +
                                              std::to_string(c));
    }
  }
}

Element constraint_value(const Instance& inst, const Constraint& c, std::span<const Element> values) {
  const FiniteGroup& g = inst.g();
  Element acc = g.identity();
  for (const auto& lit : c) acc = g.op(acc, g.op(lit.shift, values[lit.var]));
  return acc;
}

bool satisfied(const Instance& inst, const Constraint& c, std::span<const Element> values) {
  return inst.in_s(constraint_value(inst, c, values));
}

std::size_t count_satisfied(const Instance& inst, std::span<const Element> values) {
  if (values.size() != inst.num_vars)
    throw Error(Errc::LengthMismatch, "assignment has " + std::to_string(values.size()) + " values, expected " +
                                          std::to_string(inst.num_vars));
  return static_cast<std::size_t>(std::count_if(inst.constraints.begin(), inst.constraints.end(),
                                                [&](const Constraint& c) { return satisfied(inst, c, values); }));
}

Rational evaluate(const Instance& inst, std::span<const Element> values) {
  const std::size_t sat = count_satisfied(inst, values);
  if (inst.constraints.empty()) return Rational(1);
  return Rational(static_cast<std::int64_t>(sat), static_cast<std::int64_t>(inst.constraints.size()));
}

namespace {

void check_generator_params(std::size_t k, std::size_t n, std::size_t m) {
  if (k < 2) throw Error(Errc::ParameterError, "k must be at least 2");
  if (n < k) throw Error(Errc::ParameterError, "need n >= k for distinct variables");
  if (m < 1) throw Error(Errc::ParameterError, "need m >= 1");
}

}  // namespace

PlantedInstance generate_noisy(std::shared_ptr<const FiniteGroup> group, std::string group_spec,
                               std::span<const Element> s_in, std::size_t k, std::size_t n, std::size_t m,
                               double noise, std::uint64_t seed) {
  if (!group) throw Error(Errc::ParameterError, "null group");
  if (!(noise >= 0.0 && noise <= 1.0)) throw Error(Errc::ParameterError, "noise must lie in [0, 1]");
  const FiniteGroup& g = *group;
  check_generator_params(k, n, m);
  std::vector<Element> s = normalize_set(g, s_in);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> any_element(0, static_cast<Element>(g.order() - 1));
  std::uniform_int_distribution<std::size_t> any_target(0, s.size() - 1);
  std::bernoulli_distribution corrupt(noise);

  PlantedInstance out;
  out.planted.resize(n);
  for (auto& x : out.planted) x = any_element(rng);

  Instance& inst = out.instance;
  inst.group = std::move(group);
  inst.group_spec = std::move(group_spec);
  inst.satisfying = std::move(s);
  inst.arity = k;
  inst.num_vars = n;
  inst.constraints.reserve(m);

  std::vector<std::size_t> vars(n);
  for (std::size_t c = 0; c < m; ++c) {
    std::iota(vars.begin(), vars.end(), 0);
    // partial Fisher-Yates: the first k entries are distinct and uniform
    for (std::size_t j = 0; j < k; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, n - 1);
      std::swap(vars[j], vars[pick(rng)]);
    }
    Constraint con(k);
    Element partial = g.identity();
    for (std::size_t j = 0; j + 1 < k; ++j) {
      con[j] = Literal{any_element(rng), vars[j]};
      partial = g.op(partial, g.op(con[j].shift, out.planted[vars[j]]));
    }
    const Element target = inst.satisfying[any_target(rng)];
    const std::size_t last = vars[k - 1];
    con[k - 1] = Literal{g.op(g.op(g.inv(partial), target), g.inv(out.planted[last])), last};

    if (noise > 0.0 && corrupt(rng))
      for (auto& lit : con) lit.shift = any_element(rng);
    inst.constraints.push_back(std::move(con));
  }
  return out;
}

PlantedInstance generate_planted(std::shared_ptr<const FiniteGroup> group, std::string group_spec,
                                 std::span<const Element> s, std::size_t k, std::size_t n, std::size_t m,
                                 std::uint64_t seed) {
  return generate_noisy(std::move(group), std::move(group_spec), s, k, n, m, 0.0, seed);
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

long long read_int(std::istringstream& in, std::size_t line, const char* what) {
  std::string token;
  if (!(in >> token)) syntax_error(line, std::string("missing ") + what);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::logic_error&) {
    syntax_error(line, std::string("bad ") + what + " '" + token + "'");
  }
}

Instance parse_impl(std::istream& in, const std::filesystem::path* base_dir) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(number, line);
  }

  auto header = [&](std::size_t idx, const char* keyword) -> std::istringstream {
    const std::size_t at = idx < lines.size() ? lines[idx].first : number + 1;
    if (idx >= lines.size()) syntax_error(at, std::string("missing '") + keyword + "' line");
    std::istringstream ls(lines[idx].second);
    std::string kw;
    ls >> kw;
    if (kw != keyword) syntax_error(at, std::string("expected '") + keyword + "', found '" + kw + "'");
    return ls;
  };

  Instance inst;
  {
    auto ls = header(0, "group");
    if (!(ls >> inst.group_spec)) syntax_error(lines[0].first, "missing group name");
    std::string descriptor = inst.group_spec;
    if (base_dir && descriptor.starts_with("file:")) {
      std::filesystem::path p = descriptor.substr(5);
      if (p.is_relative() && !std::filesystem::exists(p)) descriptor = "file:" + (*base_dir / p).string();
    }
    inst.group = std::make_shared<const FiniteGroup>(make_group(descriptor));
  }
  const FiniteGroup& g = *inst.group;
  {
    auto ls = header(1, "S");
    const std::size_t at = lines[1].first;
    for (std::string tok; ls >> tok;) {
      std::istringstream one(tok);
      const long long v = read_int(one, at, "S element");
      if (v < 0 || static_cast<std::size_t>(v) >= g.order())
        throw Error(Errc::ElementOutOfRange, "line " + std::to_string(at) + ": S element " + tok);
      inst.satisfying.push_back(static_cast<Element>(v));
    }
    if (inst.satisfying.empty()) syntax_error(at, "S is empty");
    std::sort(inst.satisfying.begin(), inst.satisfying.end());
    inst.satisfying.erase(std::unique(inst.satisfying.begin(), inst.satisfying.end()), inst.satisfying.end());
  }
  std::size_t m = 0;
  {
    auto ls = header(2, "k");
    const std::size_t at = lines[2].first;
    const long long k = read_int(ls, at, "k");
    std::string kw;
    if (!(ls >> kw) || kw != "n") syntax_error(at, "expected 'n'");
    const long long n = read_int(ls, at, "n");
    if (!(ls >> kw) || kw != "m") syntax_error(at, "expected 'm'");
    const long long mm = read_int(ls, at, "m");
    if (k < 2 || n < 0 || mm < 0) syntax_error(at, "need k >= 2, n >= 0, m >= 0");
    inst.arity = static_cast<std::size_t>(k);
    inst.num_vars = static_cast<std::size_t>(n);
    m = static_cast<std::size_t>(mm);
  }
  if (lines.size() - 3 != m)
    syntax_error(lines.size() > 3 + m ? lines[3 + m].first : number + 1,
                 "expected " + std::to_string(m) + " constraint lines, found " + std::to_string(lines.size() - 3));

  for (std::size_t c = 0; c < m; ++c) {
    const auto& [at, text] = lines[3 + c];
    std::istringstream ls(text);
    Constraint con;
    for (std::size_t j = 0; j < inst.arity; ++j) {
      const long long a = read_int(ls, at, "shift");
      const long long i = read_int(ls, at, "variable index");
      if (a < 0 || static_cast<std::size_t>(a) >= g.order())
        throw Error(Errc::ElementOutOfRange, "line " + std::to_string(at) + ": shift " + std::to_string(a));
      if (i < 0 || static_cast<std::size_t>(i) >= inst.num_vars)
        syntax_error(at, "variable index " + std::to_string(i) + " out of range");
      con.push_back(Literal{static_cast<Element>(a), static_cast<std::size_t>(i)});
    }
    std::string extra;
    if (ls >> extra) syntax_error(at, "more than k literals");
    inst.constraints.push_back(std::move(con));
  }
  return inst;
}

}  // namespace

Instance parse_instance(std::istream& in) { return parse_impl(in, nullptr); }

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParameterError, "cannot open instance file '" + path + "'");
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  return parse_impl(in, &dir);
}

std::string serialize(const Instance& inst) {
  std::ostringstream out;
  out << "group " << inst.group_spec << '\n';
  out << 'S';
  for (Element a : inst.satisfying) out << ' ' << a;
  out << '\n';
  out << "k " << inst.arity << " n " << inst.num_vars << " m " << inst.constraints.size() << '\n';
  for (const auto& con : inst.constraints) {
    for (std::size_t j = 0; j < con.size(); ++j) out << (j ? " " : "") << con[j].shift << ' ' << con[j].var;
    out << '\n';
  }
  return out.str();
}

}  // namespace hslin
