#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gcr/strategy.hpp"

namespace gcr {

inline constexpr int64_t k_infinite_time = -1;

/// Solution of a two-player zero-sum game: player 1 (MAX) value per state,
/// the matching capture time (value = sign * gamma^time; infinite iff the
/// value is zero), and a greedy-consistent positional policy for both sides.
struct ZeroSumSolution {
    std::shared_ptr<const StateSpace> space;
    std::vector<double> value;        // size: nonterminal states; terminal is 0
    std::vector<int64_t> capture_time; // k_infinite_time when value == 0
    std::shared_ptr<PolicyTable> policy; // mover's action everywhere (both sides)

    double value_at(const State& s) const { return s.is_terminal() ? 0.0 : value[space->index_of(s)]; }
    int64_t time_at(const State& s) const { return s.is_terminal() ? k_infinite_time : capture_time[space->index_of(s)]; }
    /// Positional strategies reading the shared policy.
    Profile profile() const;
};

/// Exact retrograde analysis. Capture states seed the recursion with their
/// MAX turn payoff in {+1, 0, -1}; values +-gamma^k are then resolved outward
/// level by level (MAX grabs the earliest +1 / latest forced -1, MIN the
/// mirror). States never resolved have value exactly 0.
ZeroSumSolution solve_exact(const GameSpec& spec);

/// Shapley value iteration from v = 0 with synchronous sweeps, stopping when
/// the sup-norm change drops below tol*(1-gamma)/(2*gamma), which bounds the
/// distance to the exact value by tol. Throws after max_iters sweeps.
ZeroSumSolution solve_vi(const GameSpec& spec, double tol = 1e-9, int max_iters = 1000000);

/// Zero-sum reduction of Gamma_N: token n keeps its own turn payoff and plays
/// MAX; one adversary controls every other token and receives the negation.
GameSpec build_aux_game(const GameSpec& spec, int n);

/// Recovers T from a value of the form +-gamma^T (k_infinite_time for 0).
/// Throws when the value is not a gamma power within tol, which signals an
/// unconverged input rather than a representation quirk.
int64_t capture_time_of_value(double value, double gamma, double tol = 1e-9);

struct OptimalCaptureTime {
    int64_t time = k_infinite_time; // turns; k_infinite_time when the robber escapes
    bool finite = false;
    double value = 0.0; // max_{x1} min_{x2} u1((x1,x2,1))
    int cop_placement = 0;
    int robber_placement = 0;
};

/// Optimal capture time of the placement game: max over cop placements of min
/// over robber placements of the solved value, cop moving first. Placements
/// use lowest-vertex tie-breaking.
OptimalCaptureTime optimal_capture_time(const GameSpec& spec, const std::vector<double>& values,
                                        bool placement = true);

/// Eq-style cop-win decision: c(G) = 1 iff the optimal placement value is
/// positive, i.e. the cop captures from its best placement whatever the
/// robber picks.
bool copwin_check(const Graph& g, double gamma);

} // namespace gcr
