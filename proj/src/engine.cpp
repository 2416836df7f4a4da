#include "gcr/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace gcr {

StrategyPtr stay_strategy(int token) {
    return std::make_shared<FunctionStrategy>(token, "stay(token " + std::to_string(token) + ")",
                                              [token](const State& s) { return s.pos(token); });
}

StrategyPtr chase_strategy(const GameSpec& spec, int token, int target_token) {
    const Graph* g = &spec.graph();
    return std::make_shared<FunctionStrategy>(
        token, "chase(token " + std::to_string(token) + " -> " + std::to_string(target_token) + ")",
        [g, token, target_token](const State& s) { return g->step_toward(s.pos(token), s.pos(target_token)); });
}

Profile profile_from_policy(const GameSpec& spec, std::shared_ptr<const PolicyTable> table) {
    Profile profile;
    profile.reserve(static_cast<size_t>(spec.tokens()));
    for (int t = 1; t <= spec.tokens(); ++t) profile.push_back(std::make_shared<TableStrategy>(t, table));
    return profile;
}

namespace {

std::string config_key(const State& s, const std::vector<int>& modes) {
    std::string key = s.key();
    for (int m : modes) {
        key.push_back('/');
        key += std::to_string(m);
    }
    return key;
}

} // namespace

History simulate(const GameSpec& spec, const Profile& profile, const State& s0) {
    if (s0.is_terminal()) fail(ErrorCode::invalid_argument, "simulate: s0 must be nonterminal");
    spec.check_state(s0);
    if (static_cast<int>(profile.size()) != spec.tokens())
        fail(ErrorCode::invalid_argument, "profile must supply one strategy per token");
    for (int t = 1; t <= spec.tokens(); ++t)
        if (!profile[static_cast<size_t>(t) - 1] || profile[static_cast<size_t>(t) - 1]->token() != t)
            fail(ErrorCode::invalid_argument, "profile slot " + std::to_string(t) + " does not play token " +
                                                  std::to_string(t));

    std::vector<int> modes(static_cast<size_t>(spec.tokens()));
    for (int t = 1; t <= spec.tokens(); ++t) modes[static_cast<size_t>(t) - 1] = profile[static_cast<size_t>(t) - 1]->initial_mode();

    History h;
    h.states.push_back(s0);
    std::unordered_set<std::string> seen;
    seen.insert(config_key(s0, modes));

    // Finite strategies must repeat a (state, modes) configuration within
    // |S| * |mode space| steps; the cap catches automata that violate the
    // finite-mode contract instead of looping forever.
    const uint64_t step_limit = spec.state_cap();
    uint64_t steps = 0;

    State s = s0;
    while (true) {
        if (++steps > step_limit)
            fail(ErrorCode::precondition,
                 "play-out exceeded " + std::to_string(step_limit) +
                     " steps without repeating a configuration; a strategy's mode space looks unbounded");
        if (s.is_terminal()) break;
        if (is_capture(spec, s)) {
            if (!h.capture_time) h.capture_time = static_cast<int>(h.states.size()) - 1;
            h.actions.push_back(k_null_action);
            s = State::terminal();
            h.states.push_back(s);
            continue;
        }
        const int mover = s.mover;
        const auto& strat = *profile[static_cast<size_t>(mover) - 1];
        const int a = strat.act(modes[static_cast<size_t>(mover) - 1], s);
        const int from = s.pos(mover);
        if (a != from && !(spec.graph().valid_vertex(a) && spec.graph().has_edge(from, a)))
            fail(ErrorCode::illegal_action, "strategy " + strat.name() + " returned illegal action " +
                                                std::to_string(a) + " for token " + std::to_string(mover) +
                                                " at state " + s.key());
        for (int t = 1; t <= spec.tokens(); ++t)
            modes[static_cast<size_t>(t) - 1] = profile[static_cast<size_t>(t) - 1]->update(modes[static_cast<size_t>(t) - 1], s, a);
        s = transition(spec, s, a);
        h.actions.push_back(a);
        h.states.push_back(s);
        if (!s.is_terminal() && !is_capture(spec, s)) {
            if (!seen.insert(config_key(s, modes)).second) {
                // Joint configuration repeated: pure strategies now loop forever
                // and no further turn payoff can occur, so T_C = infinity exactly.
                h.truncated = true;
                break;
            }
        }
    }
    return h;
}

std::vector<double> discounted_payoff(const GameSpec& spec, const History& h) {
    if (h.states.empty()) fail(ErrorCode::invalid_argument, "empty history");
    if (h.actions.size() + 1 != h.states.size())
        fail(ErrorCode::invalid_argument, "inconsistent history: " + std::to_string(h.states.size()) + " states vs " +
                                              std::to_string(h.actions.size()) + " actions");
    for (size_t i = 0; i < h.actions.size(); ++i)
        if (!(transition(spec, h.states[i], h.actions[i]) == h.states[i + 1]))
            fail(ErrorCode::invalid_argument, "inconsistent history: step " + std::to_string(i) +
                                                  " does not replay under the transition function");
    std::vector<double> tokens(static_cast<size_t>(spec.tokens()), 0.0);
    for (size_t t = 0; t < h.states.size(); ++t) {
        const State& s = h.states[t];
        if (s.is_terminal()) break;
        if (!is_capture(spec, s)) continue;
        const auto q = turn_payoffs(spec, s);
        const double w = std::pow(spec.gamma(), static_cast<double>(t));
        for (size_t i = 0; i < tokens.size(); ++i) tokens[i] += w * q[i];
    }
    return aggregate_to_players(spec, tokens);
}

std::string history_to_dot(const GameSpec& spec, const History& h) {
    (void)spec;
    std::ostringstream out;
    out << "digraph trace {\n  rankdir=LR;\n";
    for (size_t i = 0; i < h.states.size(); ++i) {
        out << "  n" << i << " [label=\"" << h.states[i].key() << "\"";
        if (!h.states[i].is_terminal() && is_capture(spec, h.states[i])) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (size_t i = 0; i + 1 < h.states.size(); ++i) {
        out << "  n" << i << " -> n" << (i + 1) << " [label=\"";
        if (h.actions[i] == k_null_action)
            out << "null";
        else
            out << "t" << h.states[i].mover << ":" << h.actions[i];
        out << "\"];\n";
    }
    if (h.truncated) out << "  cycle [shape=plaintext, label=\"configuration repeats: infinite play\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace gcr
