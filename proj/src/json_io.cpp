#include "gcr/json_io.hpp"

namespace gcr {

ordered_json state_to_json(const State& s) {
    if (s.is_terminal()) return "terminal";
    ordered_json j;
    j["positions"] = s.positions;
    j["mover"] = s.mover;
    return j;
}

State state_from_json(const ordered_json& j, int tokens) {
    if (j.is_string()) {
        if (j.get<std::string>() == "terminal") return State::terminal();
        return State::from_key(j.get<std::string>(), tokens);
    }
    if (!j.is_object() || !j.contains("positions") || !j.contains("mover"))
        fail(ErrorCode::parse, "state JSON must be \"terminal\" or {positions, mover}");
    State s;
    s.positions = j.at("positions").get<std::vector<int>>();
    s.mover = j.at("mover").get<int>();
    return s;
}

ordered_json history_to_json(const GameSpec& spec, const History& h) {
    ordered_json j;
    j["states"] = ordered_json::array();
    for (const auto& s : h.states) j["states"].push_back(state_to_json(s));
    j["actions"] = ordered_json::array();
    for (size_t i = 0; i < h.actions.size(); ++i) {
        if (h.actions[i] == k_null_action)
            j["actions"].push_back("null");
        else
            j["actions"].push_back(h.actions[i]);
    }
    if (h.capture_time)
        j["capture_time"] = *h.capture_time;
    else
        j["capture_time"] = "infinity";
    j["truncated"] = h.truncated;
    j["payoffs"] = discounted_payoff(spec, h);
    return j;
}

ordered_json zero_sum_solution_to_json(const GameSpec& spec, const ZeroSumSolution& sol, bool placements) {
    ordered_json values = ordered_json::object();
    ordered_json times = ordered_json::object();
    ordered_json policy = ordered_json::object();
    const StateSpace& space = *sol.space;
    for (uint32_t i = 0; i < space.size(); ++i) {
        const std::string key = space.state_of(i).key();
        values[key] = sol.value[i];
        if (sol.capture_time[i] == k_infinite_time)
            times[key] = "infinity";
        else
            times[key] = sol.capture_time[i];
        if (!space.capture(i)) policy[key] = sol.policy->action[i];
    }
    ordered_json j;
    j["gamma"] = spec.gamma();
    j["value"] = std::move(values);
    j["capture_time"] = std::move(times);
    j["policy"] = std::move(policy);
    if (placements && spec.tokens() == 2) {
        OptimalCaptureTime oct = optimal_capture_time(spec, sol.value, true);
        ordered_json p;
        p["value"] = oct.value;
        if (oct.finite)
            p["optimal_capture_time"] = oct.time;
        else
            p["optimal_capture_time"] = "infinity";
        p["cop_placement"] = oct.cop_placement;
        p["robber_placement"] = oct.robber_placement;
        j["placement"] = std::move(p);
    }
    return j;
}

ordered_json policy_to_json(const PolicyTable& policy) {
    ordered_json actions = ordered_json::object();
    const StateSpace& space = *policy.space;
    for (uint32_t i = 0; i < space.size(); ++i) {
        if (space.capture(i)) continue;
        actions[space.state_of(i).key()] = policy.action[i];
    }
    ordered_json j;
    j["kind"] = "positional";
    j["actions"] = std::move(actions);
    return j;
}

std::shared_ptr<PolicyTable> policy_from_json(const GameSpec& spec, const ordered_json& j) {
    const ordered_json* actions = &j;
    if (j.is_object() && j.contains("actions")) actions = &j.at("actions");
    if (!actions->is_object()) fail(ErrorCode::parse, "profile JSON must map state keys to actions");
    auto space = std::make_shared<const StateSpace>(spec);
    std::vector<int> table(space->size(), k_null_action);
    std::vector<bool> present(space->size(), false);
    for (auto it = actions->begin(); it != actions->end(); ++it) {
        const State s = State::from_key(it.key(), spec.tokens());
        const uint32_t idx = space->index_of(s);
        table[idx] = it.value().get<int>();
        present[idx] = true;
    }
    for (uint32_t i = 0; i < space->size(); ++i)
        if (!space->capture(i) && !present[i])
            fail(ErrorCode::parse, "profile is not total: missing action for state " + space->state_of(i).key());
    return std::make_shared<PolicyTable>(PolicyTable{space, std::move(table)});
}

ordered_json value_table_to_json(const ValueTable& values) {
    ordered_json j = ordered_json::object();
    const StateSpace& space = *values.space;
    for (uint32_t i = 0; i < space.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (int p = 1; p <= values.players; ++p) row.push_back(values.at(i, p));
        j[space.state_of(i).key()] = std::move(row);
    }
    return j;
}

ordered_json certify_report_to_json(const GameSpec& spec, const StateSpace& space, const CertifyReport& report) {
    (void)spec;
    ordered_json j;
    j["pass"] = report.pass;
    j["max_consistency_residual"] = report.max_consistency_residual;
    j["max_gain"] = report.max_gain;
    ordered_json devs = ordered_json::array();
    for (const auto& d : report.deviations) {
        ordered_json e;
        e["state"] = space.state_of(d.state).key();
        e["token"] = d.token;
        e["player"] = d.player;
        e["prescribed"] = d.prescribed;
        e["better"] = d.better;
        e["gain"] = d.gain;
        devs.push_back(std::move(e));
    }
    j["deviations"] = std::move(devs);
    ordered_json bad = ordered_json::array();
    for (uint32_t s : report.inconsistent_states) bad.push_back(space.state_of(s).key());
    j["inconsistent_states"] = std::move(bad);
    return j;
}

ordered_json threat_report_to_json(const ThreatReport& report) {
    ordered_json j;
    j["s0"] = state_to_json(report.s0);
    j["pass"] = report.pass;
    ordered_json players = ordered_json::array();
    for (const auto& c : report.players) {
        ordered_json e;
        e["player"] = c.player;
        e["on_path"] = c.on_path;
        e["best_deviation"] = c.best_deviation;
        e["pass"] = c.pass;
        players.push_back(std::move(e));
    }
    j["players"] = std::move(players);
    return j;
}

ordered_json capture_outcome_to_json(const GameSpec& spec, const CaptureOutcome& outcome) {
    ordered_json j;
    j["K"] = outcome.K;
    j["capturer_set"] = outcome.capturer_set;
    j["payoffs"] = outcome.payoffs;
    j["trace"] = history_to_json(spec, outcome.history);
    return j;
}

PayoffScheme scheme_from_string(const std::string& text, int tokens) {
    if (text == "two") return PayoffScheme::two_player();
    if (text == "chain") return PayoffScheme::chain();
    if (text == "cyclic") {
        if (tokens != 3) fail(ErrorCode::invalid_argument, "cyclic scheme needs exactly three tokens");
        return PayoffScheme::cyclic();
    }
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(ErrorCode::parse, std::string("scheme is neither a known name nor JSON: ") + e.what());
    }
    GeneralizedScheme g;
    g.targets = j.at("targets").get<std::vector<std::vector<int>>>();
    g.pursuers = j.at("pursuers").get<std::vector<std::vector<int>>>();
    g.penalty_dominates = j.value("penalty_dominates", true);
    return PayoffScheme::generalized(std::move(g));
}

} // namespace gcr
