#include "hslin/fourier.hpp"

namespace hslin {

std::size_t table_size(std::size_t order, std::size_t n) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= order;
    if (size > kMaxTableSize)
      throw Error(Errc::TooLarge, "|G|^n exceeds " + std::to_string(kMaxTableSize));
  }
  return size;
}

std::size_t encode_point(std::size_t order, std::span<const Element> x) {
  std::size_t idx = 0;
  for (std::size_t i = x.size(); i-- > 0;) idx = idx * order + x[i];
  return idx;
}

std::vector<Element> decode_point(std::size_t order, std::size_t n, std::size_t index) {
  std::vector<Element> x(n);
  for (std::size_t i = 0; i < n; ++i, index /= order) x[i] = static_cast<Element>(index % order);
  return x;
}

namespace {

template <class Fn>
FunctionTable tabulate(const FiniteGroup& g, std::size_t n, Fn fn) {
  FunctionTable f{n, std::vector<Element>(table_size(g.order(), n))};
  for (std::size_t idx = 0; idx < f.values.size(); ++idx) f.values[idx] = fn(decode_point(g.order(), n, idx));
  return f;
}

}  // namespace

FunctionTable constant_function(const FiniteGroup& g, std::size_t n, Element value) {
  if (!g.contains(value)) throw Error(Errc::InvalidElementId, std::to_string(value));
  return tabulate(g, n, [&](const std::vector<Element>&) { return value; });
}

FunctionTable dictator_function(const FiniteGroup& g, std::size_t n, std::size_t coord) {
  if (coord >= n) throw Error(Errc::ParameterError, "dictator index out of range");
  return tabulate(g, n, [&](const std::vector<Element>& x) { return x[coord]; });
}

FunctionTable product_function(const FiniteGroup& g, std::size_t n) {
  return tabulate(g, n, [&](const std::vector<Element>& x) { return g.product(x); });
}

Eigen::VectorXcd apply_per_coordinate(const Eigen::MatrixXcd& m, std::size_t n, Eigen::VectorXcd data) {
  const auto q = m.cols();
  Eigen::VectorXcd slice(q), out(q);
  Eigen::Index stride = 1;
  for (std::size_t i = 0; i < n; ++i, stride *= q) {
    const Eigen::Index block = stride * q;
    for (Eigen::Index base = 0; base < data.size(); base += block) {
      for (Eigen::Index inner = 0; inner < stride; ++inner) {
        for (Eigen::Index a = 0; a < q; ++a) slice[a] = data[base + inner + a * stride];
        out.noalias() = m * slice;
        for (Eigen::Index a = 0; a < q; ++a) data[base + inner + a * stride] = out[a];
      }
    }
  }
  return data;
}

FourierTable::FourierTable(const FiniteGroup& g, const FunctionTable& f, std::size_t chi)
    : order_(g.order()), arity_(f.arity) {
  if (!g.is_abelian()) throw Error(Errc::NonAbelianGroup, g.name() + " is not abelian");
  const std::size_t size = table_size(order_, arity_);
  if (f.values.size() != size) throw Error(Errc::LengthMismatch, "function table has the wrong size");
  if (chi >= order_) throw Error(Errc::InvalidElementId, "character " + std::to_string(chi));

  characters_ = enumerate_1dim_characters(g);
  const Character& outer = characters_[chi];
  values_.resize(static_cast<Eigen::Index>(size));
  for (std::size_t idx = 0; idx < size; ++idx) values_[static_cast<Eigen::Index>(idx)] = outer.value(f.values[idx]);

  // F^(alpha) = E_x F(x) conj(alpha(x)); alpha(x) factors over coordinates.
  const auto q = static_cast<Eigen::Index>(order_);
  Eigen::MatrixXcd forward(q, q);
  for (Eigen::Index a = 0; a < q; ++a)
    for (Eigen::Index x = 0; x < q; ++x)
      forward(a, x) = std::conj(characters_[static_cast<std::size_t>(a)].value(static_cast<Element>(x))) /
                      static_cast<double>(q);
  coefficients_ = apply_per_coordinate(forward, arity_, values_);
}

Eigen::VectorXcd FourierTable::inverse() const {
  const auto q = static_cast<Eigen::Index>(order_);
  Eigen::MatrixXcd back(q, q);
  for (Eigen::Index x = 0; x < q; ++x)
    for (Eigen::Index a = 0; a < q; ++a)
      back(x, a) = characters_[static_cast<std::size_t>(a)].value(static_cast<Element>(x));
  return apply_per_coordinate(back, arity_, coefficients_);
}

std::size_t FourierTable::degree(std::size_t alpha) const {
  std::size_t d = 0;
  for (Element a : decode_point(order_, arity_, alpha))
    if (!characters_[a].is_trivial()) ++d;
  return d;
}

std::size_t FourierTable::degree_relative(std::size_t alpha, const Subgroup& h) const {
  std::size_t d = 0;
  for (Element a : decode_point(order_, arity_, alpha))
    if (!characters_[a].constant_on(h)) ++d;
  return d;
}

Influence modified_influence(const FourierTable& t, std::size_t coord, std::size_t d, const Subgroup& h) {
  if (coord >= t.arity()) throw Error(Errc::ParameterError, "coordinate out of range");
  if (h.parent().order() != t.order()) throw Error(Errc::ParameterError, "subgroup of a different group");
  const auto& characters_of = [&](std::size_t alpha) { return decode_point(t.order(), t.arity(), alpha); };
  const auto chars = enumerate_1dim_characters(h.parent());

  Influence out;
  for (Eigen::Index alpha = 0; alpha < t.coefficients().size(); ++alpha) {
    const double weight = std::norm(t.coefficients()[alpha]);
    if (weight == 0.0) continue;
    const auto a = static_cast<std::size_t>(alpha);
    const Element ai = characters_of(a)[coord];
    if (!chars[ai].constant_on(h) && t.degree_relative(a, h) <= d) out.modified += weight;
    if (!chars[ai].is_trivial() && t.degree(a) <= d) out.plain += weight;
  }
  return out;
}

Influence modified_influence(const FiniteGroup& g, const FunctionTable& f, std::size_t chi, std::size_t coord,
                             std::size_t d, const Subgroup& h) {
  return modified_influence(FourierTable(g, f, chi), coord, d, h);
}

}  // namespace hslin
