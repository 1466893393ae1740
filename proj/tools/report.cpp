#include "report.hpp"

#include <sstream>

namespace hslin::cli {

std::string rational_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json labels_json(const FiniteGroup& g) {
  json out = json::object();
  for (Element a = 0; a < g.order(); ++a) out[std::to_string(a)] = g.label(a);
  return out;
}

json hs_json(const FiniteGroup& g, std::span<const Element> s, const HsResult& hs, const QuotientGroup& q) {
  const Rational ratio(static_cast<std::int64_t>(hs.ratio_num), static_cast<std::int64_t>(hs.ratio_den));
  json out;
  out["group"] = g.name();
  out["group_order"] = g.order();
  out["S"] = normalize_set(g, s);
  out["hs"] = hs.subgroup.elements();
  out["hs_order"] = hs.subgroup.order();
  out["coset_rep"] = hs.coset_rep;
  out["ratio"] = rational_string(ratio);
  out["generated_by_SinvS"] = hs.generated_by_SinvS;
  out["quotient_order"] = q.order();
  out["quotient_invariants"] = q.abelian() ? q.abelian()->invariants() : std::vector<std::int64_t>{};
  return out;
}

json solve_json(const SolveReport& r) {
  json out;
  out["mode"] = std::string(mode_name(r.mode));
  out["value"] = rational_string(r.value);
  out["guarantee"] = rational_string(r.guarantee);
  out["satisfied"] = r.satisfied;
  out["total"] = r.total;
  out["quotient_unsat"] = r.quotient_unsat;
  out["vacuous"] = r.vacuous;
  out["assignment"] = r.assignment;
  return out;
}

json estimate_json(const TestEstimate& e, StrategyKind strategy) {
  json out;
  out["strategy"] = std::string(strategy_name(strategy));
  out["estimate"] = e.estimate;
  out["ci_low"] = e.ci.low;
  out["ci_high"] = e.ci.high;
  out["passes"] = e.passes;
  out["samples"] = e.samples;
  return out;
}

json gap_json(const GapReport& r) {
  json out;
  out["kind"] = std::string(gap_kind_name(r.kind));
  out["group"] = r.group;
  out["S"] = r.satisfying;
  out["hs_order"] = r.hs_order;
  json items = json::array();
  for (const auto& it : r.items) items.push_back({{"label", it.label}, {"value", it.value}, {"relevant", it.relevant}});
  out["items"] = items;
  out["vacuous"] = r.vacuous;
  out["gap"] = r.gap;
  if (r.kind == GapReport::Kind::Epsilon) {
    out["constant_count"] = r.constant_count;
    out["expected_constant_count"] = r.expected_constant_count;
    out["formula_gap"] = r.formula_gap;
  } else {
    out["hypothesis_met"] = r.hypothesis_met;
  }
  out["holds"] = r.holds;
  return out;
}

json validation_json(const CatalogValidation& v) {
  return {{"homomorphism_error", v.homomorphism_error},
          {"unitarity_error", v.unitarity_error},
          {"orthogonality_error", v.orthogonality_error},
          {"vanishing_sum_error", v.vanishing_sum_error},
          {"dimension_square_sum", v.dimension_square_sum},
          {"group_order", v.group_order},
          {"ok", v.ok()}};
}

std::string hs_text(const FiniteGroup& g, const HsResult& hs, const QuotientGroup& q) {
  std::ostringstream out;
  out << "H_S = {";
  bool first = true;
  for (Element a : hs.subgroup.elements()) {
    out << (first ? "" : ", ") << a;
    if (g.has_labels()) out << ' ' << g.label(a);
    first = false;
  }
  out << "}\n";
  out << "order " << hs.subgroup.order() << "\n";
  out << "ratio " << rational_string(Rational(static_cast<std::int64_t>(hs.ratio_num),
                                               static_cast<std::int64_t>(hs.ratio_den)))
      << "\n";
  out << "coset rep " << hs.coset_rep << "\n";
  out << "generated by S^-1 S: " << (hs.generated_by_SinvS ? "yes" : "no") << "\n";
  out << "quotient order " << q.order();
  if (q.abelian()) {
    out << ", invariants";
    for (auto d : q.abelian()->invariants()) out << ' ' << d;
  }
  out << "\n";
  return out.str();
}

std::string solve_text(const SolveReport& r) {
  std::ostringstream out;
  out << "mode " << mode_name(r.mode) << "\n";
  out << "value " << rational_string(r.value) << " (" << r.satisfied << " of " << r.total << ")\n";
  out << "guarantee " << rational_string(r.guarantee) << "\n";
  if (r.quotient_unsat) out << "projected system unsatisfiable; used the uniform baseline\n";
  out << "assignment";
  for (Element a : r.assignment) out << ' ' << a;
  out << "\n";
  return out.str();
}

}  // namespace hslin::cli
