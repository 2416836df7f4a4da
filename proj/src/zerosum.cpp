#include "gcr/zerosum.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace gcr {

namespace {

void check_zero_sum(const GameSpec& spec) {
    if (spec.players() != 2) fail(ErrorCode::precondition, "zero-sum solver needs exactly two players");
    if (spec.aggregation() == Aggregation::zero_sum_of) return;
    if (spec.scheme().kind == SchemeKind::two_player) return;
    // Chain with two tokens is the classic cop/robber game and is zero-sum.
    if (spec.scheme().kind == SchemeKind::chain && spec.tokens() == 2) return;
    fail(ErrorCode::precondition, "game is not a zero-sum two-player reduction");
}

bool max_moves(const StateSpace& space, uint32_t s) {
    return space.spec().controller(space.mover(s)) == 1;
}

} // namespace

Profile ZeroSumSolution::profile() const { return profile_from_policy(space->spec(), policy); }

GameSpec build_aux_game(const GameSpec& spec, int n) {
    if (n < 1 || n > spec.tokens())
        fail(ErrorCode::invalid_argument, "aux game player index " + std::to_string(n) + " out of range");
    std::vector<int> controllers(static_cast<size_t>(spec.tokens()), 2);
    controllers[static_cast<size_t>(n) - 1] = 1;
    if (spec.tokens() == 2 && spec.players() == 2 && n == 1 && spec.aggregation() == Aggregation::per_token)
        return spec; // Gamma_2 is already its own zero-sum reduction
    return GameSpec(spec.graph(), spec.tokens(), spec.gamma(), spec.scheme(), std::move(controllers), 2,
                    Aggregation::zero_sum_of, n);
}

// ---------------------------------------------------------------------------
// Exact retrograde analysis.
//
// Values live in {+gamma^k} U {0} U {-gamma^k}. Working outward from the
// capture states in levels k = 0, 1, 2, ...:
//   * a MAX-mover state becomes +gamma^k as soon as one successor resolved
//     +gamma^(k-1)  (earliest profitable capture);
//   * a MIN-mover state becomes +gamma^k only when every successor resolved
//     positive and the slowest one is gamma^(k-1)  (forced, maximally delayed);
//   * the negative side mirrors both rules.
// Everything never resolved can be held at value 0 forever by the side that
// prefers it, so those states get exactly 0 and an infinite capture time.
// ---------------------------------------------------------------------------
ZeroSumSolution solve_exact(const GameSpec& spec) {
    check_zero_sum(spec);
    auto space = std::make_shared<StateSpace>(spec);
    const uint32_t n = static_cast<uint32_t>(space->size());

    enum class Res : uint8_t { pending, positive, negative, zero_capture };
    std::vector<Res> res(n, Res::pending);
    std::vector<int64_t> level(n, k_infinite_time);
    std::vector<int> policy(n, k_null_action);

    // Successor bookkeeping for the "all successors resolved" rules.
    std::vector<std::vector<uint32_t>> preds(n);
    std::vector<uint32_t> succ_total(n, 0), succ_pos(n, 0), succ_neg(n, 0);
    std::vector<int64_t> max_pos_level(n, -1), max_neg_level(n, -1);

    std::deque<uint32_t> frontier; // states resolved at the current level
    std::vector<uint32_t> next_frontier;

    for (uint32_t s = 0; s < n; ++s) {
        if (space->capture(s)) {
            const double q = space->player_payoffs(s)[0];
            if (q > 0) {
                res[s] = Res::positive;
                level[s] = 0;
                frontier.push_back(s);
            } else if (q < 0) {
                res[s] = Res::negative;
                level[s] = 0;
                frontier.push_back(s);
            } else {
                res[s] = Res::zero_capture; // ends the game at value 0
            }
            continue;
        }
        for (int a : space->mover_actions(s)) {
            const uint32_t next = space->transition_index(s, a);
            preds[next].push_back(s);
            ++succ_total[s];
        }
    }

    auto note_successor = [&](uint32_t s, Res r, int64_t lv, std::vector<uint32_t>& out) {
        // s is a pending non-capture state and one of its successors just
        // resolved (r, lv). Apply the four resolution rules.
        const bool mx = max_moves(*space, s);
        if (r == Res::positive) {
            ++succ_pos[s];
            max_pos_level[s] = std::max(max_pos_level[s], lv);
            if (mx) {
                res[s] = Res::positive;
                level[s] = lv + 1;
                out.push_back(s);
            } else if (succ_pos[s] == succ_total[s]) {
                res[s] = Res::positive;
                level[s] = max_pos_level[s] + 1;
                out.push_back(s);
            }
        } else { // negative
            ++succ_neg[s];
            max_neg_level[s] = std::max(max_neg_level[s], lv);
            if (!mx) {
                res[s] = Res::negative;
                level[s] = lv + 1;
                out.push_back(s);
            } else if (succ_neg[s] == succ_total[s]) {
                res[s] = Res::negative;
                level[s] = max_neg_level[s] + 1;
                out.push_back(s);
            }
        }
    };

    while (!frontier.empty()) {
        next_frontier.clear();
        for (uint32_t resolved : frontier) {
            for (uint32_t p : preds[resolved]) {
                if (res[p] != Res::pending) continue;
                note_successor(p, res[resolved], level[resolved], next_frontier);
            }
        }
        frontier.assign(next_frontier.begin(), next_frontier.end());
    }

    ZeroSumSolution sol;
    sol.space = space;
    sol.value.assign(n, 0.0);
    sol.capture_time.assign(n, k_infinite_time);
    for (uint32_t s = 0; s < n; ++s) {
        switch (res[s]) {
            case Res::positive:
                sol.value[s] = std::pow(spec.gamma(), static_cast<double>(level[s]));
                sol.capture_time[s] = level[s];
                break;
            case Res::negative:
                sol.value[s] = -std::pow(spec.gamma(), static_cast<double>(level[s]));
                sol.capture_time[s] = level[s];
                break;
            default:
                break; // value 0, infinite time
        }
    }

    // Greedy policy, lowest-numbered vertex first. The comparison works on the
    // exact (resolution, level) pairs rather than floating-point values.
    auto better_for = [&](bool maximize, Res r1, int64_t l1, Res r2, int64_t l2) {
        // returns true when (r1,l1) is strictly better than (r2,l2)
        auto rank = [](Res r) { return r == Res::positive ? 2 : (r == Res::negative ? 0 : 1); };
        int a = rank(r1), b = rank(r2);
        if (!maximize) std::swap(a, b);
        if (a != b) return a > b;
        if (r1 == Res::positive && r2 == Res::positive) return maximize ? l1 < l2 : l1 > l2;
        if (r1 == Res::negative && r2 == Res::negative) return maximize ? l1 > l2 : l1 < l2;
        return false;
    };
    for (uint32_t s = 0; s < n; ++s) {
        if (space->capture(s)) continue;
        const bool mx = max_moves(*space, s);
        bool have = false;
        Res best_r = Res::pending;
        int64_t best_l = 0;
        for (int a : space->mover_actions(s)) {
            const uint32_t next = space->transition_index(s, a);
            Res r = next == space->terminal_index() ? Res::zero_capture : res[next];
            if (r == Res::pending || r == Res::zero_capture) r = Res::zero_capture; // value 0
            const int64_t l = (r == Res::zero_capture) ? 0 : level[next];
            if (!have || better_for(mx, r, l, best_r, best_l)) {
                have = true;
                best_r = r;
                best_l = l;
                policy[s] = a;
            }
        }
    }
    sol.policy = std::make_shared<PolicyTable>(PolicyTable{space, std::move(policy)});
    return sol;
}

ZeroSumSolution solve_vi(const GameSpec& spec, double tol, int max_iters) {
    check_zero_sum(spec);
    if (!(tol > 0)) fail(ErrorCode::invalid_argument, "tol must be positive");
    auto space = std::make_shared<StateSpace>(spec);
    const uint32_t n = static_cast<uint32_t>(space->size());
    const double gamma = spec.gamma();
    const double stop = tol * (1.0 - gamma) / (2.0 * gamma);

    std::vector<double> v(n, 0.0), w(n, 0.0);
    int iter = 0;
    while (true) {
        double change = 0.0;
        for (uint32_t s = 0; s < n; ++s) {
            double nv;
            if (space->capture(s)) {
                nv = space->player_payoffs(s)[0];
            } else {
                const bool mx = max_moves(*space, s);
                double best = mx ? -2.0 : 2.0;
                for (int a : space->mover_actions(s)) {
                    const uint32_t next = space->transition_index(s, a);
                    const double cand = next == space->terminal_index() ? 0.0 : v[next];
                    if (mx ? cand > best : cand < best) best = cand;
                }
                nv = gamma * best;
            }
            w[s] = nv;
            change = std::max(change, std::fabs(nv - v[s]));
        }
        v.swap(w);
        ++iter;
        if (change < stop) break;
        if (iter >= max_iters)
            fail(ErrorCode::no_convergence, "value iteration did not converge in " + std::to_string(max_iters) +
                                                " sweeps (last change " + std::to_string(change) + ")");
    }

    ZeroSumSolution sol;
    sol.space = space;
    sol.value = std::move(v);
    sol.capture_time.assign(n, k_infinite_time);
    for (uint32_t s = 0; s < n; ++s)
        sol.capture_time[s] = capture_time_of_value(sol.value[s], gamma, std::max(tol, 1e-7));

    std::vector<int> policy(n, k_null_action);
    for (uint32_t s = 0; s < n; ++s) {
        if (space->capture(s)) continue;
        const bool mx = max_moves(*space, s);
        double best = mx ? -2.0 : 2.0;
        for (int a : space->mover_actions(s)) {
            const uint32_t next = space->transition_index(s, a);
            const double cand = next == space->terminal_index() ? 0.0 : sol.value[next];
            // Strict improvement beyond tol keeps the lowest vertex on ties.
            if (mx ? cand > best + tol : cand < best - tol) {
                best = cand;
                policy[s] = a;
            }
        }
    }
    sol.policy = std::make_shared<PolicyTable>(PolicyTable{space, std::move(policy)});
    return sol;
}

int64_t capture_time_of_value(double value, double gamma, double tol) {
    const double mag = std::fabs(value);
    if (mag < tol) return k_infinite_time;
    const double t = std::log(mag) / std::log(gamma);
    const int64_t rounded = static_cast<int64_t>(std::llround(t));
    if (rounded < 0 || std::fabs(std::pow(gamma, static_cast<double>(rounded)) - mag) > std::max(tol, 1e-9) * 10)
        fail(ErrorCode::precondition, "value " + std::to_string(value) +
                                          " is not a gamma power within tolerance; input looks unconverged");
    return rounded;
}

OptimalCaptureTime optimal_capture_time(const GameSpec& spec, const std::vector<double>& values, bool placement) {
    if (spec.tokens() != 2) fail(ErrorCode::precondition, "optimal capture time is defined for the 2-token game");
    StateSpace space(spec);
    if (values.size() != space.size()) fail(ErrorCode::invalid_argument, "value table size mismatch");
    OptimalCaptureTime out;
    double best = -2.0;
    const int V = spec.graph().vertex_count();
    for (int x1 = 1; x1 <= V; ++x1) {
        double worst = 2.0;
        int worst_x2 = 0;
        for (int x2 = 1; x2 <= V; ++x2) {
            const double u = values[space.index_of(State{{x1, x2}, 1})];
            if (u < worst) {
                worst = u;
                worst_x2 = x2;
            }
        }
        if (worst > best) {
            best = worst;
            out.cop_placement = x1;
            out.robber_placement = worst_x2;
        }
    }
    out.value = best;
    const int64_t t = capture_time_of_value(best, spec.gamma());
    out.finite = t != k_infinite_time;
    out.time = t;
    if (!placement) {
        out.cop_placement = 0;
        out.robber_placement = 0;
    }
    return out;
}

bool copwin_check(const Graph& g, double gamma) {
    GameSpec spec = GameSpec::two_player_game(g, gamma);
    ZeroSumSolution sol = solve_exact(spec);
    return optimal_capture_time(spec, sol.value, false).finite;
}

} // namespace gcr
