#pragma once

#include <memory>
#include <vector>

#include "gcr/engine.hpp"
#include "gcr/equilibrium.hpp"
#include "gcr/zerosum.hpp"

namespace gcr {

/// Which player, if any, achieved a rewarded capture in a play-out.
struct CaptureOutcome {
    int K = 0;                      // 0 = no capture; otherwise the smallest rewarded player
    std::vector<int> capturer_set;  // every player with positive payoff
    std::vector<double> payoffs;    // per player
    History history;
};

CaptureOutcome capture_function(const GameSpec& spec, const State& s0, const Profile& profile);

/// Positional three-player profile with a shared policy table.
struct ConstructedProfile {
    std::shared_ptr<PolicyTable> policy;
    Profile strategies;
};

/// Path strategies: case split on which token is the median of the other two
/// (P1 chases P2 throughout; the median case steers P2/P3 between fleeing,
/// chasing and staying). Capturing from every start on a path.
ConstructedProfile path_profile(const GameSpec& spec, const State& s0);

/// Tree strategies: walk toward the current median, hand the median to the
/// right token using the distance-based case table, then play the path
/// strategies once collinear. Positional; capturing from every start.
ConstructedProfile tree_profile(const GameSpec& spec);

/// Trigger automata of the endpoints-and-middle configuration: everyone
/// stays put; the first token to move is chased down. On-path play never
/// captures, and no unilateral deviation profits.
Profile trigger_profile(const GameSpec& spec, const State& s0);

struct NoncapturingNE {
    State s0;            // (x1, x2, x1, 1)
    Profile strategies;  // stay / extended optimal evasion / stay
    int x1 = 0;
    int x2 = 0;
};

/// The robber-escapes construction on non-cop-win graphs: P1 and P3 camp on
/// one vertex, P2 plays the extended two-player optimal evasion, and nobody
/// can profitably deviate. Requires copwin_check(g) == false.
NoncapturingNE noncapturing_ne_construction(const Graph& g, double gamma);

struct Fig1Fixture {
    GameSpec spec;
    State s0;
    Profile scripted; // P1 camps, P2 waits at the far vertex, P3 hides behind P1
};

/// 12-vertex evasion fixture: a 10-path with a two-vertex spur at vertex 3.
/// The scripted play cycles forever; swapping P3's script for the plain
/// two-player evasion gets P3 captured.
Fig1Fixture fig1_fixture(double gamma);

Graph fig1_graph();

/// Extends the two-player optimal pursuit/evasion tables to a three-player
/// profile: P1 pursues P2, P2 pursues P3, P3 evades P2, each ignoring the
/// third token. Not an equilibrium in general.
ConstructedProfile extended_two_player_profile(const GameSpec& spec);

/// Extended two-player evasion for a single token: `token` runs the optimal
/// robber strategy against `pursuer_token`, ignoring everyone else.
StrategyPtr extended_evasion_strategy(const GameSpec& spec, int token, int pursuer_token,
                                      const ZeroSumSolution& two_player_solution);

} // namespace gcr
