#pragma once

#include <json.hpp>

#include "vlab/budget.hpp"
#include "vlab/dominion.hpp"
#include "vlab/perm_group.hpp"
#include "vlab/power_series.hpp"

namespace vlab {

using Json = nlohmann::ordered_json;

/// Version of every JSON report emitted here.
inline constexpr int report_schema = 1;

Json to_json(Budget const &b);
/// {degree, order, generators}; generators in cycle notation.
Json to_json(PermutationGroup const &g);
Json to_json(Certificate const &c);
/// {outcome, certificate, derivation, notes, budgets}.
Json to_json(EpiVerdict const &v);
Json to_json(DominionBounds const &b);
Json to_json(EscapeResult const &e);
Json to_json(PipelineResult const &p);
Json to_json(QofSimpleReport const &q);
Json to_json(LawFailureWitness const &w);

/// Wraps a body as {"schema": 1, "command": ..., <body fields>}.
Json make_report(std::string const &command, Json body);

} // namespace vlab
