#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcr/strategy.hpp"

namespace gcr {

/// Recorded play-out. `states[i+1] == transition(states[i], actions[i])`.
/// `capture_time` is the index of the first capture state; nullopt means the
/// play is provably infinite (a joint state/mode configuration repeated, and
/// deterministic strategies then loop forever).
struct History {
    std::vector<State> states;
    std::vector<int> actions;
    std::optional<int> capture_time;
    bool truncated = false; // true when cut at a configuration repeat

    bool infinite() const { return !capture_time.has_value(); }
};

/// Plays a strategy profile from s0 until the terminal state or until the
/// joint (state, modes) configuration repeats. Throws on illegal actions,
/// naming the offending token and state.
History simulate(const GameSpec& spec, const Profile& profile, const State& s0);

/// Discounted total payoff per player, Q^n = sum_t gamma^t q^n(s_t).
/// Exact: turn payoffs vanish off capture states, so each token's payoff is
/// 0 or +-gamma^{T_C}. Validates that the history replays under transition().
std::vector<double> discounted_payoff(const GameSpec& spec, const History& h);

std::string history_to_dot(const GameSpec& spec, const History& h);

} // namespace gcr
