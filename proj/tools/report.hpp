#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hslin/approx.hpp"
#include "hslin/dictatorship.hpp"
#include "hslin/hs_subgroup.hpp"
#include "hslin/quotient.hpp"
#include "hslin/repcheck.hpp"

namespace hslin::cli {

using nlohmann::json;

std::string rational_string(const Rational& r);

json labels_json(const FiniteGroup& g);
json hs_json(const FiniteGroup& g, std::span<const Element> s, const HsResult& hs, const QuotientGroup& q);
json solve_json(const SolveReport& r);
json estimate_json(const TestEstimate& e, StrategyKind strategy);
json gap_json(const GapReport& r);
json validation_json(const CatalogValidation& v);

std::string hs_text(const FiniteGroup& g, const HsResult& hs, const QuotientGroup& q);
std::string solve_text(const SolveReport& r);

}  // namespace hslin::cli
