#include "gcr/constructions.hpp"

#include <algorithm>

#include "decision.hpp"

namespace gcr {

CaptureOutcome capture_function(const GameSpec& spec, const State& s0, const Profile& profile) {
    CaptureOutcome out;
    out.history = simulate(spec, profile, s0);
    out.payoffs = discounted_payoff(spec, out.history);
    for (int p = 1; p <= spec.players(); ++p)
        if (out.payoffs[static_cast<size_t>(p) - 1] > 0) out.capturer_set.push_back(p);
    out.K = out.capturer_set.empty() ? 0 : out.capturer_set.front();
    return out;
}

namespace {

void require_gamma3_chain(const GameSpec& spec, const char* who) {
    if (spec.tokens() != 3 || spec.scheme().kind != SchemeKind::chain || spec.players() != 3)
        fail(ErrorCode::precondition, std::string(who) + " needs the three-player chain game");
}

/// Fleeing step on a tree: any neighbor strictly increasing the distance to
/// `avoid` (they all sit at distance+1), preferring the smallest distance to
/// `shield` (0 disables), then the lowest vertex. Stays put when cornered.
int step_away_shielded(const Graph& g, int from, int avoid, int shield) {
    const int d0 = g.distance(from, avoid);
    int best = from;
    int best_shield = 0;
    for (int w : g.neighbors(from)) {
        if (g.distance(w, avoid) <= d0) continue;
        const int sh = shield ? g.distance(w, shield) : 0;
        if (best == from || sh < best_shield) {
            best = w;
            best_shield = sh;
        }
    }
    return best;
}

/// Path-strategy move at a collinear state (the median is one of the three
/// positions). Tie priority x1, x2, x3 when two tokens share the median.
int collinear_move(const Graph& g, const State& s, int m) {
    const int x1 = s.pos(1), x2 = s.pos(2), x3 = s.pos(3);
    if (m == x1) {
        switch (s.mover) {
            case 1: return g.step_toward(x1, x2);
            case 2: return step_away_shielded(g, x2, x1, 0);
            default: return x3; // P3 stays
        }
    }
    if (m == x2) {
        switch (s.mover) {
            case 1: return g.step_toward(x1, x2);
            case 2: return g.step_toward(x2, x3);
            default: return step_away_shielded(g, x3, x2, 0);
        }
    }
    switch (s.mover) { // m == x3
        case 1: return g.step_toward(x1, x2);
        case 2: return step_away_shielded(g, x2, x1, 0);
        default: return step_away_shielded(g, x3, x2, x1); // flee P2, hug P1
    }
}

/// Immediate profitable captures take priority over every case rule: P1
/// grabs an adjacent P2 outright, and P2 grabs an adjacent P3 unless P3 is
/// covered by P1 (stepping there would be a simultaneous capture of P2).
int snap_capture(const Graph& g, const State& s) {
    if (s.mover == 1 && g.distance(s.pos(1), s.pos(2)) == 1) return s.pos(2);
    if (s.mover == 2 && g.distance(s.pos(2), s.pos(3)) == 1 && s.pos(3) != s.pos(1)) return s.pos(3);
    return 0;
}

/// The full tree-strategy move (collinear states use the path strategies,
/// non-collinear states walk toward / schedule around the current median).
int tree_move(const GameSpec& spec, const State& s) {
    const Graph& g = spec.graph();
    const int x1 = s.pos(1), x2 = s.pos(2), x3 = s.pos(3);
    if (int grab = snap_capture(g, s)) return grab;
    const int m = g.median(x1, x2, x3);
    if (m == x1 || m == x2 || m == x3) return collinear_move(g, s, m);

    const int d1 = g.distance(x1, m), d2 = g.distance(x2, m), d3 = g.distance(x3, m);
    int go1 = x1, go2 = x2, go3 = x3; // default: stay
    if (d1 == 1) {
        go1 = m; // P1 claims the median and blocks P2's subtree
    } else if (d2 == 1) {
        if (d1 == 2) {
            go1 = g.step_toward(x1, m); // P1 is close enough to take the median instead
        } else {
            go1 = g.step_toward(x1, m);
            go2 = m; // P1 too far: P2 claims the median and hunts P3
        }
    } else if (d3 == 1) {
        if (d2 == 2 && d1 <= 3) {
            go1 = g.step_toward(x1, m); // P3 waits while P1 comes in to block
        } else if (d2 == 2) {
            go1 = g.step_toward(x1, m);
            go2 = g.step_toward(x2, m); // P1 at distance >= 4: P2 wins the race
        } else {
            go1 = g.step_toward(x1, m);
            go3 = m; // P2 at distance >= 3: P3 takes the median himself
        }
    } else {
        go1 = g.step_toward(x1, m);
        go2 = g.step_toward(x2, m);
        go3 = g.step_toward(x3, m);
    }
    switch (s.mover) {
        case 1: return go1;
        case 2: return go2;
        default: return go3;
    }
}

/// Materializes the rule-based moves into a policy table, then repairs P2's
/// rows: the case table occasionally prescribes fleeing at states where P2
/// provably wins the race to P3 whatever P1 and P3 do about it. Those hunts
/// are found by solving P2's exact decision process against the fixed P1/P3
/// rules, and P2 takes them. Where no winning hunt exists the case table
/// stands, and caught-P2 states stay losing for P2 under every deviation.
ConstructedProfile materialize(const GameSpec& spec) {
    auto space = std::make_shared<const StateSpace>(spec);
    const uint32_t n = static_cast<uint32_t>(space->size());
    std::vector<int> actions(n, k_null_action);
    for (uint32_t i = 0; i < n; ++i) {
        if (space->capture(i)) continue;
        actions[i] = tree_move(spec, space->state_of(i));
    }

    detail::DecisionGraph dg;
    dg.succ.resize(n);
    dg.controlled.assign(n, 0);
    dg.capture.assign(n, 0);
    dg.sign.assign(n, 0);
    std::vector<std::vector<int>> p2_actions(n);
    for (uint32_t i = 0; i < n; ++i) {
        if (space->capture(i)) {
            dg.capture[i] = 1;
            const double q2 = space->player_payoffs(i)[1];
            dg.sign[i] = q2 > 0 ? 1 : (q2 < 0 ? -1 : 0);
            continue;
        }
        if (space->mover(i) == 2) {
            dg.controlled[i] = 1;
            for (int a : space->mover_actions(i)) {
                dg.succ[i].push_back(space->transition_index(i, a));
                p2_actions[i].push_back(a);
            }
        } else {
            dg.succ[i].push_back(space->transition_index(i, actions[i]));
        }
    }
    detail::DecisionSolution sol = detail::solve_decision(dg);
    for (uint32_t i = 0; i < n; ++i)
        if (dg.controlled[i] && !space->capture(i) && sol.t_plus[i] >= 0)
            actions[i] = p2_actions[i][static_cast<size_t>(sol.choice[i])];

    ConstructedProfile out;
    out.policy = std::make_shared<PolicyTable>(PolicyTable{space, std::move(actions)});
    out.strategies = profile_from_policy(spec, out.policy);
    return out;
}

} // namespace

ConstructedProfile path_profile(const GameSpec& spec, const State& s0) {
    require_gamma3_chain(spec, "path_profile");
    if (!spec.graph().is_path()) fail(ErrorCode::precondition, "path_profile requires a path graph");
    spec.check_state(s0);
    // On a path the three tokens are always collinear, so the rules reduce to
    // the median-case path strategies (snap captures and hunt repair included).
    return materialize(spec);
}

ConstructedProfile tree_profile(const GameSpec& spec) {
    require_gamma3_chain(spec, "tree_profile");
    if (!spec.graph().is_tree()) fail(ErrorCode::precondition, "tree_profile requires a tree");
    return materialize(spec);
}

namespace {

/// Trigger automaton: stays put until its watched token first moves, then
/// chases a designated token for the rest of the game.
class TriggerStrategy final : public Strategy {
public:
    struct Reaction {
        int watched;  // token whose first move fires this reaction
        int chase;    // token to pursue afterwards
    };

    TriggerStrategy(int token, std::shared_ptr<const Graph> g, std::vector<Reaction> reactions)
        : Strategy(token), graph_(std::move(g)), reactions_(std::move(reactions)) {}

    // mode 0: waiting; mode i >= 1: reactions_[i-1] fired
    int act(int mode, const State& s) const override {
        if (mode == 0) return s.pos(token());
        const int target = reactions_[static_cast<size_t>(mode) - 1].chase;
        return graph_->step_toward(s.pos(token()), s.pos(target));
    }

    int update(int mode, const State& s, int action) const override {
        if (mode != 0 || s.is_terminal()) return mode;
        const int mover = s.mover;
        if (mover == token() || action == s.pos(mover)) return mode; // staying is not a move
        for (size_t i = 0; i < reactions_.size(); ++i)
            if (reactions_[i].watched == mover) return static_cast<int>(i) + 1;
        return mode;
    }

    std::string name() const override { return "trigger(token " + std::to_string(token()) + ")"; }

private:
    std::shared_ptr<const Graph> graph_;
    std::vector<Reaction> reactions_;
};

} // namespace

Profile trigger_profile(const GameSpec& spec, const State& s0) {
    require_gamma3_chain(spec, "trigger_profile");
    const Graph& g = spec.graph();
    if (!g.is_path()) fail(ErrorCode::precondition, "trigger_profile requires a path graph");
    spec.check_state(s0);
    const int x1 = s0.pos(1), x2 = s0.pos(2), x3 = s0.pos(3);
    const bool endpoints = g.neighbors(x1).size() == 1 && g.neighbors(x2).size() == 1 && x1 != x2;
    if (!endpoints || g.distance(x1, x3) != g.distance(x3, x2))
        fail(ErrorCode::precondition,
             "trigger_profile needs P1 and P2 on the two endpoints and P3 at the middle, got " + s0.key());

    auto graph = std::make_shared<const Graph>(g);
    Profile out;
    out.push_back(std::make_shared<TriggerStrategy>(1, graph, std::vector<TriggerStrategy::Reaction>{{2, 2}}));
    out.push_back(std::make_shared<TriggerStrategy>(2, graph, std::vector<TriggerStrategy::Reaction>{{3, 3}}));
    out.push_back(std::make_shared<TriggerStrategy>(
        3, graph, std::vector<TriggerStrategy::Reaction>{{1, 2}, {2, 1}})); // P1 moved: go to P2; P2 moved: go to P1
    return out;
}

StrategyPtr extended_evasion_strategy(const GameSpec& spec, int token, int pursuer_token,
                                      const ZeroSumSolution& two_player_solution) {
    if (token < 1 || token > spec.tokens() || pursuer_token < 1 || pursuer_token > spec.tokens())
        fail(ErrorCode::invalid_argument, "extended evasion: token out of range");
    auto sol_policy = two_player_solution.policy;
    return std::make_shared<FunctionStrategy>(
        token, "extended-evasion(token " + std::to_string(token) + ")",
        [sol_policy, token, pursuer_token](const State& s) {
            return sol_policy->at(State{{s.pos(pursuer_token), s.pos(token)}, 2});
        });
}

NoncapturingNE noncapturing_ne_construction(const Graph& g, double gamma) {
    if (copwin_check(g, gamma))
        fail(ErrorCode::precondition, "graph is cop-win: the noncapturing construction needs c(G) > 1");
    GameSpec two = GameSpec::two_player_game(g, gamma);
    ZeroSumSolution sol = solve_exact(two);

    NoncapturingNE out;
    out.x1 = 1; // lowest vertex; every placement admits an escaping robber reply
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (sol.value_at(State{{out.x1, v}, 1}) == 0.0) {
            out.x2 = v;
            break;
        }
    }
    if (out.x2 == 0) fail(ErrorCode::internal, "no escaping robber placement on a non-cop-win graph");

    GameSpec spec = GameSpec::chain_game(g, 3, gamma);
    out.s0 = State{{out.x1, out.x2, out.x1}, 1};
    out.strategies = {stay_strategy(1), extended_evasion_strategy(spec, 2, 1, sol), stay_strategy(3)};
    return out;
}

Graph fig1_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 10; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(3, 11);
    edges.emplace_back(11, 12);
    return Graph(12, edges);
}

Fig1Fixture fig1_fixture(double gamma) {
    Graph g = fig1_graph();
    GameSpec spec = GameSpec::chain_game(g, 3, gamma);
    const Graph* gp = &spec.graph();

    // P2 waits at the spur tip and only runs once P1 closes in; P3 slips onto
    // P1's vertex and stays there, shielded from P2.
    auto sigma2 = std::make_shared<FunctionStrategy>(2, "fig1-wait-then-flee", [gp](const State& s) {
        if (gp->distance(s.pos(1), s.pos(2)) >= 2) return s.pos(2);
        return step_away_shielded(*gp, s.pos(2), s.pos(1), 0);
    });
    auto sigma3 = std::make_shared<FunctionStrategy>(
        3, "fig1-hide-behind-p1", [gp](const State& s) { return gp->step_toward(s.pos(3), s.pos(1)); });

    return Fig1Fixture{spec, State{{1, 12, 2}, 3}, Profile{stay_strategy(1), sigma2, sigma3}};
}

ConstructedProfile extended_two_player_profile(const GameSpec& spec) {
    require_gamma3_chain(spec, "extended_two_player_profile");
    ZeroSumSolution sol = solve_exact(GameSpec::two_player_game(spec.graph(), spec.gamma()));
    auto two_policy = sol.policy;

    auto space = std::make_shared<const StateSpace>(spec);
    std::vector<int> actions(space->size(), k_null_action);
    for (uint32_t i = 0; i < space->size(); ++i) {
        if (space->capture(i)) continue;
        const State s = space->state_of(i);
        switch (s.mover) {
            case 1: // pursue P2 with the optimal cop strategy
                actions[i] = two_policy->at(State{{s.pos(1), s.pos(2)}, 1});
                break;
            case 2: // pursue P3 with the optimal cop strategy
                actions[i] = two_policy->at(State{{s.pos(2), s.pos(3)}, 1});
                break;
            default: // evade P2 with the optimal robber strategy
                actions[i] = two_policy->at(State{{s.pos(2), s.pos(3)}, 2});
                break;
        }
    }
    ConstructedProfile out;
    out.policy = std::make_shared<PolicyTable>(PolicyTable{space, std::move(actions)});
    out.strategies = profile_from_policy(spec, out.policy);
    return out;
}

} // namespace gcr
