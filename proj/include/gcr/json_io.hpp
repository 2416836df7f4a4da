#pragma once

#include <json.hpp>

#include "gcr/constructions.hpp"
#include "gcr/engine.hpp"
#include "gcr/equilibrium.hpp"
#include "gcr/threat.hpp"
#include "gcr/zerosum.hpp"

namespace gcr {

using ordered_json = nlohmann::ordered_json;

// States serialize as {"positions":[...],"mover":k} or "terminal"; infinite
// capture times serialize as the string "infinity". Tables are keyed by the
// compact "v1,...,vN,mover" form in enumeration order, so identical inputs
// produce byte-identical documents.

ordered_json state_to_json(const State& s);
State state_from_json(const ordered_json& j, int tokens);

ordered_json history_to_json(const GameSpec& spec, const History& h);

ordered_json zero_sum_solution_to_json(const GameSpec& spec, const ZeroSumSolution& sol, bool placements);

ordered_json policy_to_json(const PolicyTable& policy);
std::shared_ptr<PolicyTable> policy_from_json(const GameSpec& spec, const ordered_json& j);

ordered_json value_table_to_json(const ValueTable& values);

ordered_json certify_report_to_json(const GameSpec& spec, const StateSpace& space, const CertifyReport& report);

ordered_json threat_report_to_json(const ThreatReport& report);

ordered_json capture_outcome_to_json(const GameSpec& spec, const CaptureOutcome& outcome);

/// Scheme descriptor: "two" | "chain" | "cyclic" | a generalized-scheme JSON
/// object {"targets":[[...]...], "pursuers":[[...]...], "penalty_dominates":bool}.
PayoffScheme scheme_from_string(const std::string& text, int tokens);

} // namespace gcr
