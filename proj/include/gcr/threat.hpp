#pragma once

#include <memory>
#include <vector>

#include "gcr/equilibrium.hpp"
#include "gcr/zerosum.hpp"

namespace gcr {

/// Non-positional trigger profile built from the N auxiliary-game solutions.
/// Token n cooperates with its own aux-optimal strategy until some other
/// token m first deviates from m's aux-optimal strategy; from then on n
/// punishes with its part of the aux-game-m adversary optimum, forever.
struct ThreatProfile {
    std::shared_ptr<const StateSpace> space;
    /// aux_policy[m-1]: total policy of the auxiliary game where token m is
    /// the maximizer; restricted to token t's mover states it is phi_m^t.
    std::vector<std::shared_ptr<const PolicyTable>> aux_policy;
    Profile strategies; // one threat automaton per token

    /// Cooperative-play profile (phi_1^1, ..., phi_N^N) without the triggers.
    Profile base_profile() const;
};

/// Solves the N auxiliary games exactly and assembles the threat automata.
/// Requires the chain payoff scheme with one token per player.
ThreatProfile build_threat_profile(const GameSpec& spec);

struct ThreatPlayerCheck {
    int player = 0;
    double on_path = 0.0;        // Q^n(s0, threat profile)
    double best_deviation = 0.0; // exact best response against the others
    bool pass = false;
};

struct ThreatReport {
    State s0;
    std::vector<ThreatPlayerCheck> players;
    bool pass = false;
};

/// Verifies the equilibrium inequality Q^n(s0, pi) >= Q^n(s0, any deviation)
/// for every player by exact best response on the product of game states and
/// threat-automaton modes.
ThreatReport verify_threat_ne(const GameSpec& spec, const ThreatProfile& profile, const State& s0,
                              double tol = 1e-9);

} // namespace gcr
