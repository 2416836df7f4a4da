#include "gcr/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>

#include "decision.hpp"

namespace gcr {

namespace {

constexpr uint32_t k_npos = UINT32_MAX;

} // namespace

ValueTable evaluate_profile(const GameSpec& spec, const PolicyTable& policy) {
    // The policy may have been computed under a different payoff view of the
    // same board (an auxiliary reduction, say); evaluation always uses the
    // payoffs of the game given here.
    auto space_ptr = std::make_shared<const StateSpace>(spec);
    const StateSpace& space = *space_ptr;
    const uint32_t n = static_cast<uint32_t>(space.size());
    if (policy.action.size() != n) fail(ErrorCode::invalid_argument, "policy table size mismatch");

    // For each state: the capture state its trajectory reaches (k_npos if the
    // play loops forever) and the number of turns to get there.
    std::vector<uint32_t> cap(n, k_npos);
    std::vector<int32_t> steps(n, 0);
    std::vector<uint8_t> color(n, 0); // 0 new, 1 on stack, 2 done
    std::vector<uint32_t> stack;

    for (uint32_t start = 0; start < n; ++start) {
        if (color[start] == 2) continue;
        stack.clear();
        uint32_t s = start;
        uint32_t hit_cap = k_npos;
        int32_t hit_steps = 0;
        while (true) {
            if (space.capture(s)) {
                hit_cap = s;
                hit_steps = 0;
                break;
            }
            if (color[s] == 2) {
                hit_cap = cap[s];
                hit_steps = steps[s];
                break;
            }
            if (color[s] == 1) {
                // trajectory closed a loop: everything still on the stack from
                // the first occurrence of s onward never reaches a capture
                hit_cap = k_npos;
                hit_steps = 0;
                break;
            }
            color[s] = 1;
            stack.push_back(s);
            const int a = policy.action[s];
            if (a == k_null_action)
                fail(ErrorCode::invalid_argument, "policy is not total: null action at non-capture state " +
                                                      space.state_of(s).key());
            s = space.transition_index(s, a);
        }
        while (!stack.empty()) {
            const uint32_t v = stack.back();
            stack.pop_back();
            color[v] = 2;
            if (hit_cap == k_npos) {
                cap[v] = k_npos;
            } else {
                ++hit_steps;
                cap[v] = hit_cap;
                steps[v] = hit_steps;
            }
        }
        if (color[start] != 2) { // start itself was a capture state
            color[start] = 2;
            cap[start] = hit_cap;
            steps[start] = hit_steps;
        }
    }

    ValueTable table;
    table.space = space_ptr;
    table.players = spec.players();
    table.u.assign(static_cast<size_t>(n) * static_cast<size_t>(spec.players()), 0.0);
    for (uint32_t s = 0; s < n; ++s) {
        if (cap[s] == k_npos) continue;
        const auto& q = space.player_payoffs(cap[s]);
        const double w = std::pow(spec.gamma(), static_cast<double>(steps[s]));
        for (int p = 1; p <= spec.players(); ++p)
            table.u[static_cast<size_t>(s) * static_cast<size_t>(spec.players()) + static_cast<size_t>(p) - 1] =
                w * q[static_cast<size_t>(p) - 1];
    }
    return table;
}

CertifyReport certify_ne(const GameSpec& spec, const PolicyTable& policy, const ValueTable& values, double tol) {
    const StateSpace space(spec); // payoffs of the certified game, not of the policy's origin
    const uint32_t n = static_cast<uint32_t>(space.size());
    if (policy.action.size() != n || values.u.size() != static_cast<size_t>(n) * static_cast<size_t>(spec.players()))
        fail(ErrorCode::invalid_argument, "certify_ne: table sizes do not match the state space");
    const int P = spec.players();
    const double gamma = spec.gamma();

    CertifyReport report;
    for (uint32_t s = 0; s < n; ++s) {
        const auto& q = space.player_payoffs(s);
        if (space.capture(s)) {
            // One step to terminal: u(s) must equal the turn payoff exactly.
            for (int p = 1; p <= P; ++p) {
                const double r = std::fabs(values.at(s, p) - q[static_cast<size_t>(p) - 1]);
                if (r > report.max_consistency_residual) report.max_consistency_residual = r;
                if (r > tol) {
                    report.inconsistent_states.push_back(s);
                    break;
                }
            }
            continue;
        }
        const int a_hat = policy.action[s];
        bool legal = false;
        for (int a : space.mover_actions(s)) legal |= a == a_hat;
        if (!legal)
            fail(ErrorCode::invalid_argument, "profile prescribes illegal action " + std::to_string(a_hat) +
                                                  " at state " + space.state_of(s).key());
        const uint32_t next = space.transition_index(s, a_hat);
        bool consistent = true;
        for (int p = 1; p <= P; ++p) {
            const double expect = q[static_cast<size_t>(p) - 1] +
                                  gamma * (next == space.terminal_index() ? 0.0 : values.at(next, p));
            const double r = std::fabs(values.at(s, p) - expect);
            if (r > report.max_consistency_residual) report.max_consistency_residual = r;
            if (r > tol) consistent = false;
        }
        if (!consistent) report.inconsistent_states.push_back(s);

        const int mover = space.mover(s);
        const int player = spec.controller(mover);
        const double chosen = gamma * (next == space.terminal_index() ? 0.0 : values.at(next, player));
        double best = chosen;
        int best_action = a_hat;
        for (int a : space.mover_actions(s)) {
            const uint32_t alt = space.transition_index(s, a);
            const double v = gamma * (alt == space.terminal_index() ? 0.0 : values.at(alt, player));
            if (v > best) {
                best = v;
                best_action = a;
            }
        }
        const double gain = best - chosen;
        if (gain > report.max_gain) report.max_gain = gain;
        if (gain > tol)
            report.deviations.push_back(Deviation{s, mover, player, a_hat, best_action, gain});
    }
    report.pass = report.deviations.empty() && report.inconsistent_states.empty();
    return report;
}

namespace {

std::shared_ptr<PolicyTable> greedy_policy(const StateSpace& space, const std::vector<double>& u, int players,
                                           std::shared_ptr<const StateSpace> space_ptr) {
    const uint32_t n = static_cast<uint32_t>(space.size());
    const GameSpec& spec = space.spec();
    std::vector<int> policy(n, k_null_action);
    for (uint32_t s = 0; s < n; ++s) {
        if (space.capture(s)) continue;
        const int player = spec.controller(space.mover(s));
        double best = 0.0;
        bool have = false;
        for (int a : space.mover_actions(s)) {
            const uint32_t next = space.transition_index(s, a);
            const double v = next == space.terminal_index()
                                 ? 0.0
                                 : u[static_cast<size_t>(next) * static_cast<size_t>(players) +
                                     static_cast<size_t>(player) - 1];
            if (!have || v > best) {
                have = true;
                best = v;
                policy[s] = a;
            }
        }
    }
    return std::make_shared<PolicyTable>(PolicyTable{std::move(space_ptr), std::move(policy)});
}

} // namespace

NEResult solve_positional_ne(const GameSpec& spec, double tol, int max_iters) {
    if (!(tol > 0)) fail(ErrorCode::invalid_argument, "tol must be positive");
    auto space_ptr = std::make_shared<StateSpace>(spec);
    const StateSpace& space = *space_ptr;
    const uint32_t n = static_cast<uint32_t>(space.size());
    const int P = spec.players();
    const double gamma = spec.gamma();
    const double stop = tol * (1.0 - gamma) / (2.0 * gamma);

    std::vector<double> u(static_cast<size_t>(n) * static_cast<size_t>(P), 0.0);
    std::vector<double> w(u.size(), 0.0);

    auto sweep = [&](bool damp) {
        double change = 0.0;
        for (uint32_t s = 0; s < n; ++s) {
            const auto& q = space.player_payoffs(s);
            const size_t row = static_cast<size_t>(s) * static_cast<size_t>(P);
            if (space.capture(s)) {
                for (int p = 0; p < P; ++p) w[row + static_cast<size_t>(p)] = q[static_cast<size_t>(p)];
            } else {
                const int player = spec.controller(space.mover(s));
                uint32_t best_next = 0;
                double best = 0.0;
                bool have = false;
                for (int a : space.mover_actions(s)) {
                    const uint32_t next = space.transition_index(s, a);
                    const double v = u[static_cast<size_t>(next) * static_cast<size_t>(P) +
                                       static_cast<size_t>(player) - 1];
                    if (!have || v > best) {
                        have = true;
                        best = v;
                        best_next = next;
                    }
                }
                const size_t next_row = static_cast<size_t>(best_next) * static_cast<size_t>(P);
                for (int p = 0; p < P; ++p)
                    w[row + static_cast<size_t>(p)] = q[static_cast<size_t>(p)] + gamma * u[next_row + static_cast<size_t>(p)];
            }
            for (int p = 0; p < P; ++p) {
                double nv = w[row + static_cast<size_t>(p)];
                if (damp) nv = 0.5 * (nv + u[row + static_cast<size_t>(p)]);
                w[row + static_cast<size_t>(p)] = nv;
                change = std::max(change, std::fabs(nv - u[row + static_cast<size_t>(p)]));
            }
        }
        u.swap(w);
        return change;
    };

    NEResult result;
    int iter = 0;
    bool damped = false;
    double residual = 0.0;
    int since_improvement = 0;
    double best_residual = 2.0;
    while (true) {
        residual = sweep(damped);
        ++iter;
        if (residual < stop) break;
        if (residual < best_residual * 0.999) {
            best_residual = residual;
            since_improvement = 0;
        } else if (++since_improvement > 500 && !damped) {
            damped = true; // oscillation: average consecutive iterates, fixed points unchanged
            since_improvement = 0;
        }
        if (iter >= max_iters)
            fail(ErrorCode::no_convergence, "equilibrium sweeps did not converge in " + std::to_string(max_iters) +
                                                " iterations (residual " + std::to_string(residual) + ")");
    }

    result.policy = greedy_policy(space, u, P, space_ptr);
    result.values = evaluate_profile(spec, *result.policy);
    result.iters = iter;
    result.residual = residual;
    result.damped = damped;

    CertifyReport cert = certify_ne(spec, *result.policy, result.values, tol);
    if (!cert.pass)
        fail(ErrorCode::no_convergence,
             "sweeps converged numerically but the extracted profile failed certification (" +
                 std::to_string(cert.deviations.size()) + " profitable deviations, max gain " +
                 std::to_string(cert.max_gain) + ")");
    return result;
}

// ---------------------------------------------------------------------------
// Best response on the product of game states and opponent automaton modes.
// ---------------------------------------------------------------------------

namespace {

struct ProductGraph {
    // parallel arrays per node
    std::vector<uint32_t> state;               // game state index
    std::vector<std::vector<int>> modes;       // opponent modes (all tokens; own tokens pinned to 0)
    std::vector<std::vector<uint32_t>> succ;   // successor node ids
    std::vector<std::vector<int>> succ_action; // action taken for each successor (deviator nodes)
    std::vector<uint8_t> deviator;             // 1 when one of the player's tokens moves
    std::vector<int8_t> qsign;                 // capture nodes: sign of the player's payoff
    std::vector<uint8_t> capture;
};

/// Wraps the product policy as a strategy: the mode is the current product
/// node, advanced by following recorded edges. Only valid against the same
/// opponents starting from the solved root.
class ProductStrategy final : public Strategy {
public:
    ProductStrategy(int token, uint32_t root, std::shared_ptr<const StateSpace> space,
                    std::shared_ptr<std::unordered_map<uint64_t, int>> policy,
                    std::shared_ptr<std::unordered_map<uint64_t, uint32_t>> edges)
        : Strategy(token), root_(root), space_(std::move(space)), policy_(std::move(policy)),
          edges_(std::move(edges)) {}

    int initial_mode() const override { return static_cast<int>(root_); }
    int act(int mode, const State& s) const override {
        auto it = policy_->find(static_cast<uint64_t>(mode));
        if (it == policy_->end())
            fail(ErrorCode::precondition, "best-response strategy consulted off its product graph at " + s.key());
        return it->second;
    }
    int update(int mode, const State& s, int action) const override {
        if (s.is_terminal()) return mode;
        auto it = edges_->find((static_cast<uint64_t>(static_cast<uint32_t>(mode)) << 32) |
                               static_cast<uint32_t>(action));
        if (it == edges_->end())
            fail(ErrorCode::precondition, "best-response strategy observed an off-graph move at " + s.key());
        return static_cast<int>(it->second);
    }
    std::string name() const override { return "best-response(token " + std::to_string(token()) + ")"; }

private:
    uint32_t root_;
    std::shared_ptr<const StateSpace> space_;
    std::shared_ptr<std::unordered_map<uint64_t, int>> policy_;
    std::shared_ptr<std::unordered_map<uint64_t, uint32_t>> edges_;
};

} // namespace

BestResponseResult best_response(const GameSpec& spec, const Profile& opponents, int player, const State& s0) {
    if (player < 1 || player > spec.players())
        fail(ErrorCode::invalid_argument, "player " + std::to_string(player) + " out of range");
    spec.check_state(s0);
    if (s0.is_terminal()) fail(ErrorCode::invalid_argument, "best_response: s0 must be nonterminal");
    if (static_cast<int>(opponents.size()) != spec.tokens())
        fail(ErrorCode::invalid_argument, "opponents profile must be indexed by token (own slots may be null)");
    for (int t = 1; t <= spec.tokens(); ++t) {
        if (spec.controller(t) == player) continue;
        const auto& s = opponents[static_cast<size_t>(t) - 1];
        if (!s || s->token() != t)
            fail(ErrorCode::invalid_argument, "missing opponent strategy for token " + std::to_string(t));
    }

    auto space_ptr = std::make_shared<StateSpace>(spec);
    const StateSpace& space = *space_ptr;

    ProductGraph g;
    std::unordered_map<std::string, uint32_t> ids;
    auto node_key = [&](uint32_t st, const std::vector<int>& modes) {
        std::string key = std::to_string(st);
        for (int m : modes) {
            key.push_back('/');
            key += std::to_string(m);
        }
        return key;
    };
    auto intern = [&](uint32_t st, std::vector<int> modes) -> uint32_t {
        auto key = node_key(st, modes);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        const uint32_t id = static_cast<uint32_t>(g.state.size());
        if (id >= spec.state_cap())
            fail(ErrorCode::state_cap, "best-response product space exceeds the state cap");
        ids.emplace(std::move(key), id);
        g.state.push_back(st);
        g.modes.push_back(std::move(modes));
        g.succ.emplace_back();
        g.succ_action.emplace_back();
        g.deviator.push_back(0);
        g.qsign.push_back(0);
        g.capture.push_back(0);
        return id;
    };

    std::vector<int> modes0(static_cast<size_t>(spec.tokens()), 0);
    for (int t = 1; t <= spec.tokens(); ++t)
        if (spec.controller(t) != player) modes0[static_cast<size_t>(t) - 1] = opponents[static_cast<size_t>(t) - 1]->initial_mode();
    const uint32_t root = intern(space.index_of(s0), modes0);

    std::deque<uint32_t> work{root};
    std::vector<uint8_t> expanded(1, 0);
    while (!work.empty()) {
        const uint32_t id = work.front();
        work.pop_front();
        if (expanded.size() < g.state.size()) expanded.resize(g.state.size(), 0);
        if (expanded[id]) continue;
        expanded[id] = 1;
        const uint32_t st = g.state[id];
        if (space.capture(st)) {
            g.capture[id] = 1;
            const double q = space.player_payoffs(st)[static_cast<size_t>(player) - 1];
            g.qsign[id] = q > 0 ? 1 : (q < 0 ? -1 : 0);
            continue; // transitions to terminal; no successors worth tracking
        }
        const int mover = space.mover(st);
        const State s = space.state_of(st);
        const bool dev = spec.controller(mover) == player;
        g.deviator[id] = dev ? 1 : 0;
        std::vector<int> actions;
        if (dev) {
            actions = space.mover_actions(st);
        } else {
            const auto& strat = *opponents[static_cast<size_t>(mover) - 1];
            const int a = strat.act(g.modes[id][static_cast<size_t>(mover) - 1], s);
            const int from = s.pos(mover);
            if (a != from && !(spec.graph().valid_vertex(a) && spec.graph().has_edge(from, a)))
                fail(ErrorCode::illegal_action, "opponent strategy " + strat.name() + " returned illegal action " +
                                                    std::to_string(a) + " at " + s.key());
            actions = {a};
        }
        for (int a : actions) {
            std::vector<int> next_modes = g.modes[id];
            for (int t = 1; t <= spec.tokens(); ++t)
                if (spec.controller(t) != player)
                    next_modes[static_cast<size_t>(t) - 1] =
                        opponents[static_cast<size_t>(t) - 1]->update(next_modes[static_cast<size_t>(t) - 1], s, a);
            const uint32_t next_id = intern(space.transition_index(st, a), std::move(next_modes));
            g.succ[id].push_back(next_id);
            g.succ_action[id].push_back(a);
            if (expanded.size() < g.state.size()) expanded.resize(g.state.size(), 0);
            if (!expanded[next_id]) work.push_back(next_id);
        }
    }

    const uint32_t nodes = static_cast<uint32_t>(g.state.size());
    detail::DecisionGraph dg;
    dg.succ = g.succ;
    dg.controlled.assign(nodes, 0);
    dg.capture.assign(nodes, 0);
    dg.sign.assign(nodes, 0);
    for (uint32_t v = 0; v < nodes; ++v) {
        dg.controlled[v] = g.deviator[v];
        dg.capture[v] = g.capture[v];
        dg.sign[v] = g.qsign[v];
    }
    detail::DecisionSolution sol = detail::solve_decision(dg);

    // Deviator policy on product nodes plus the followed-edges table for the
    // returned automaton's mode updates.
    auto policy_table = std::make_shared<std::unordered_map<uint64_t, int>>();
    auto edge_table = std::make_shared<std::unordered_map<uint64_t, uint32_t>>(); // (node<<32 | action) -> next
    for (uint32_t v = 0; v < nodes; ++v) {
        for (size_t i = 0; i < g.succ[v].size(); ++i)
            (*edge_table)[(static_cast<uint64_t>(v) << 32) | static_cast<uint32_t>(g.succ_action[v][i])] =
                g.succ[v][i];
        if (!g.deviator[v] || g.capture[v]) continue;
        (*policy_table)[v] = g.succ_action[v][static_cast<size_t>(sol.choice[v])];
    }

    BestResponseResult out;
    out.value = sol.value(root, spec.gamma());
    out.product_nodes = nodes;
    for (int t = 1; t <= spec.tokens(); ++t)
        if (spec.controller(t) == player)
            out.strategies.push_back(std::make_shared<ProductStrategy>(t, root, space_ptr, policy_table, edge_table));
    return out;
}

} // namespace gcr
