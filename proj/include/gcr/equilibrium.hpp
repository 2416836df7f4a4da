#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gcr/strategy.hpp"

namespace gcr {

/// Per-state, per-player discounted values. Terminal row is implicitly zero.
struct ValueTable {
    std::shared_ptr<const StateSpace> space;
    int players = 0;
    std::vector<double> u; // u[state * players + (p-1)]

    double at(uint32_t state, int player) const {
        return u[static_cast<size_t>(state) * static_cast<size_t>(players) + static_cast<size_t>(player) - 1];
    }
    double at(const State& s, int player) const {
        return s.is_terminal() ? 0.0 : at(space->index_of(s), player);
    }
};

/// Exact policy evaluation of a total positional profile: each state's play
/// is a single trajectory that either reaches a capture state (payoff
/// gamma^k * q) or enters a loop (payoff exactly 0 for everyone).
ValueTable evaluate_profile(const GameSpec& spec, const PolicyTable& policy);

struct Deviation {
    uint32_t state = 0;
    int token = 0;        // mover whose prescribed action is not optimal
    int player = 0;
    int prescribed = 0;
    int better = 0;       // improving action
    double gain = 0.0;    // value improvement for the deviating player
};

struct CertifyReport {
    bool pass = false;
    double max_consistency_residual = 0.0; // worst Bellman-consistency violation
    double max_gain = 0.0;                 // best one-shot improvement found
    std::vector<Deviation> deviations;
    std::vector<uint32_t> inconsistent_states;
};

/// One-shot deviation certification of a positional profile against a value
/// table: (a) u must satisfy u^m(s) = q^m(s) + gamma u^m(T(s, sigma(s))) at
/// every state, (b) the mover's prescribed action must attain the maximum of
/// its own continuation at every state, both within tol. For positional
/// profiles in a discounted game this certifies a Nash equilibrium from every
/// initial state. Failures are reported, never thrown.
CertifyReport certify_ne(const GameSpec& spec, const PolicyTable& policy, const ValueTable& values, double tol);

struct NEResult {
    std::shared_ptr<PolicyTable> policy;
    ValueTable values; // exact policy evaluation of `policy`
    int iters = 0;
    double residual = 0.0;
    bool damped = false;
};

/// Computes a positional equilibrium profile by synchronous fixed-point
/// sweeps of the coupled system (mover maximizes its own continuation, all
/// values propagate along the chosen action), with lowest-vertex
/// tie-breaking. Convergence is certified a posteriori by certify_ne on the
/// exactly re-evaluated values; failure to converge or certify throws.
NEResult solve_positional_ne(const GameSpec& spec, double tol = 1e-9, int max_iters = 100000);

struct BestResponseResult {
    double value = 0.0;                  // best achievable payoff for the player from s0
    std::vector<StrategyPtr> strategies; // one per controlled token, valid against these opponents
    size_t product_nodes = 0;
};

/// Exact best response of `player` against fixed opponent strategies from s0.
/// The joint process on (state, opponent modes) is a deterministic discounted
/// decision process; it is solved exactly on the reachable product graph
/// (payoffs are 0 or +-gamma^k, so graph search replaces numeric iteration).
/// Throws when the reachable product exceeds the state cap.
BestResponseResult best_response(const GameSpec& spec, const Profile& opponents, int player, const State& s0);

} // namespace gcr
