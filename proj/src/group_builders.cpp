#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hslin/group.hpp"

namespace hslin {

namespace {

std::string strip_parens(const std::string& s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

std::size_t parse_size(std::string_view text, std::string_view context) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw Error(Errc::UnknownGroup, "bad number in '" + std::string(context) + "'");
  return value;
}

FiniteGroup group_from_token(std::string_view token) {
  if (token.empty()) throw Error(Errc::UnknownGroup, "empty group name");
  const char kind = token.front();
  const std::string_view rest = token.substr(1);
  if (token == "Q8") return quaternion();
  switch (kind) {
    case 'Z':
    case 'C': return cyclic(parse_size(rest, token));
    case 'D': return dihedral(parse_size(rest, token));
    case 'S': return symmetric(parse_size(rest, token));
    default: throw Error(Errc::UnknownGroup, "unknown group '" + std::string(token) + "'");
  }
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::ParameterError, "cyclic group order must be positive");
  if (n > kMaxGroupOrder) throw Error(Errc::GroupTooLarge, "Z" + std::to_string(n));
  OpTable t(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t(a, b) = static_cast<Element>((a + b) % n);
  return FiniteGroup(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxGroupOrder) throw Error(Errc::GroupTooLarge, a.name() + "x" + b.name());
  OpTable t(n, n);
  std::vector<std::string> labels(n);
  const bool flatten_left = a.name().find('x') != std::string::npos;
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
    std::string left = a.label(xa);
    if (flatten_left) left = strip_parens(left);
    labels[x] = "(" + left + "," + b.label(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      t(x, y) = static_cast<Element>(a.op(xa, ya) * nb + b.op(xb, yb));
    }
  }
  return FiniteGroup(std::move(t), a.name() + "x" + b.name(), std::move(labels));
}

FiniteGroup dihedral(std::size_t n) {
  if (n == 0) throw Error(Errc::ParameterError, "dihedral parameter must be positive");
  if (2 * n > kMaxGroupOrder) throw Error(Errc::GroupTooLarge, "D" + std::to_string(n));
  const std::size_t order = 2 * n;
  OpTable t(order, order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t xr = x % n, xs = x / n;
    std::string rot = xr == 0 ? "" : (xr == 1 ? "r" : "r" + std::to_string(xr));
    std::string lab = rot + (xs ? "s" : "");
    labels[x] = lab.empty() ? "e" : lab;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t yr = y % n, ys = y / n;
      // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b + d)
      const std::size_t r = xs ? (xr + n - yr) % n : (xr + yr) % n;
      const std::size_t s = (xs + ys) % 2;
      t(x, y) = static_cast<Element>(s * n + r);
    }
  }
  return FiniteGroup(std::move(t), "D" + std::to_string(n), std::move(labels));
}

FiniteGroup symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw Error(Errc::ParameterError, "symmetric groups supported for 1 <= n <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);

  const std::size_t order = perms.size();
  OpTable t(order, order);
  std::vector<std::string> labels(order);
  std::vector<std::size_t> composed(n);
  for (std::size_t a = 0; a < order; ++a) {
    std::string lab = "[";
    for (std::size_t i = 0; i < n; ++i) lab += (i ? "," : "") + std::to_string(perms[a][i]);
    labels[a] = lab + "]";
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
      t(a, b) = index.at(composed);
    }
  }
  return FiniteGroup(std::move(t), "S" + std::to_string(n), std::move(labels));
}

FiniteGroup quaternion() {
  // Units 1, i, j, k as 0..3; unit_mul[u][v] = (sign flip, unit).
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  static const std::array<std::string, 8> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  OpTable t(8, 8);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const auto [flip, unit] = unit_mul[x / 2][y / 2];
      const int sign = (x % 2) ^ (y % 2) ^ flip;
      t(x, y) = static_cast<Element>(2 * unit + sign);
    }
  }
  return FiniteGroup(std::move(t), "Q8", {labels.begin(), labels.end()});
}

FiniteGroup read_cayley_table(std::istream& in, std::string name) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(Errc::MalformedTable, "empty Cayley table");

  std::istringstream header(lines[0]);
  std::string keyword;
  long long n = 0;
  if (!(header >> keyword >> n) || keyword != "order" || n <= 0)
    throw Error(Errc::MalformedTable, "line 1 must be 'order <n>'");
  if (static_cast<std::size_t>(n) > kMaxGroupOrder)
    throw Error(Errc::GroupTooLarge, "order " + std::to_string(n));

  std::size_t row_start = 1;
  std::vector<std::string> labels;
  if (lines.size() > 1) {
    std::istringstream ls(lines[1]);
    std::string kw;
    ls >> kw;
    if (kw == "labels") {
      for (std::string l; ls >> l;) labels.push_back(l);
      if (labels.size() != static_cast<std::size_t>(n))
        throw Error(Errc::MalformedTable, "expected " + std::to_string(n) + " labels");
      row_start = 2;
    }
  }
  if (lines.size() - row_start != static_cast<std::size_t>(n))
    throw Error(Errc::MalformedTable, "expected " + std::to_string(n) + " table rows");

  OpTable t(n, n);
  for (long long r = 0; r < n; ++r) {
    std::istringstream row(lines[row_start + r]);
    for (long long c = 0; c < n; ++c) {
      long long v = 0;
      if (!(row >> v)) throw Error(Errc::MalformedTable, "row " + std::to_string(r) + " too short");
      if (v < 0 || v >= n)
        throw Error(Errc::MalformedTable, "entry " + std::to_string(v) + " out of range in row " +
                                              std::to_string(r));
      t(r, c) = static_cast<Element>(v);
    }
    std::string extra;
    if (row >> extra) throw Error(Errc::MalformedTable, "row " + std::to_string(r) + " too long");
  }
  return FiniteGroup(std::move(t), std::move(name), std::move(labels));
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  const auto n = static_cast<Element>(g.order());
  out << "order " << n << '\n';
  if (g.has_labels()) {
    out << "labels";
    for (Element a = 0; a < n; ++a) out << ' ' << g.label(a);
    out << '\n';
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out << (b ? " " : "") << g.op(a, b);
    out << '\n';
  }
}

FiniteGroup make_group(std::string_view descriptor) {
  constexpr std::string_view kFilePrefix = "file:";
  if (descriptor.starts_with(kFilePrefix)) {
    const std::string path(descriptor.substr(kFilePrefix.size()));
    std::ifstream in(path);
    if (!in) throw Error(Errc::UnknownGroup, "cannot open Cayley table '" + path + "'");
    return read_cayley_table(in, std::string(descriptor));
  }

  std::vector<std::string_view> factors;
  std::size_t start = 0;
  while (true) {
    const auto pos = descriptor.find('x', start);
    factors.push_back(descriptor.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  FiniteGroup result = group_from_token(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) result = direct_product(result, group_from_token(factors[i]));
  return result;
}

}  // namespace hslin
