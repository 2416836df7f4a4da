#include "decision.hpp"

#include <algorithm>
#include <cmath>

namespace gcr::detail {

double DecisionSolution::value(uint32_t node, double gamma) const {
    if (t_plus[node] >= 0) return std::pow(gamma, static_cast<double>(t_plus[node]));
    if (safe[node]) return 0.0;
    return -std::pow(gamma, static_cast<double>(t_minus[node]));
}

DecisionSolution solve_decision(const DecisionGraph& g) {
    const uint32_t n = g.size();
    std::vector<std::vector<uint32_t>> preds(n);
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t s : g.succ[v]) preds[s].push_back(v);

    DecisionSolution out;
    out.t_plus.assign(n, -1);
    out.safe.assign(n, 0);
    out.t_minus.assign(n, -1);
    out.choice.assign(n, -1);

    // Phase 1: earliest reachable rewarded capture. Uncontrolled nodes have a
    // single successor, so a plain reversed BFS covers both node kinds.
    std::deque<uint32_t> queue;
    for (uint32_t v = 0; v < n; ++v)
        if (g.capture[v] && g.sign[v] > 0) {
            out.t_plus[v] = 0;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        const uint32_t v = queue.front();
        queue.pop_front();
        for (uint32_t p : preds[v])
            if (out.t_plus[p] < 0) {
                out.t_plus[p] = out.t_plus[v] + 1;
                queue.push_back(p);
            }
    }

    // Phase 2: greatest fixed point of "can keep avoiding negative captures".
    // Zero captures are safe sinks; nodes that already reach a reward are out
    // of scope (their whole forward cone is valued positive).
    std::vector<uint32_t> safe_count(n, 0);
    std::deque<uint32_t> removal;
    auto is_neg_capture = [&](uint32_t v) { return g.capture[v] && g.sign[v] < 0; };
    for (uint32_t v = 0; v < n; ++v) {
        if (out.t_plus[v] >= 0) continue;
        if (g.capture[v]) {
            if (g.sign[v] == 0) out.safe[v] = 1;
            continue;
        }
        out.safe[v] = 1;
        uint32_t c = 0;
        for (uint32_t s : g.succ[v])
            if (out.t_plus[s] < 0 && !is_neg_capture(s)) ++c;
        safe_count[v] = c;
        if (c == 0) {
            out.safe[v] = 0;
            removal.push_back(v);
        }
    }
    while (!removal.empty()) {
        const uint32_t v = removal.front();
        removal.pop_front();
        for (uint32_t p : preds[v]) {
            if (!out.safe[p] || g.capture[p] || out.t_plus[p] >= 0) continue;
            if (--safe_count[p] == 0) {
                out.safe[p] = 0;
                removal.push_back(p);
            }
        }
    }

    // Phase 3: forced losses are delayed as long as possible. The forced
    // region is acyclic: a reachable cycle would be an avoidance strategy.
    auto forced = [&](uint32_t v) { return out.t_plus[v] < 0 && !out.safe[v]; };
    std::vector<std::pair<uint32_t, size_t>> dfs;
    std::vector<int8_t> mark(n, 0); // 1: on stack, 2: done
    for (uint32_t start = 0; start < n; ++start) {
        if (!forced(start) || mark[start] == 2) continue;
        dfs.emplace_back(start, 0);
        while (!dfs.empty()) {
            const uint32_t v = dfs.back().first;
            size_t& i = dfs.back().second;
            if (g.capture[v]) {
                out.t_minus[v] = 0;
                mark[v] = 2;
                dfs.pop_back();
                continue;
            }
            mark[v] = 1;
            if (i < g.succ[v].size()) {
                const uint32_t s = g.succ[v][i++];
                if (!forced(s)) fail(ErrorCode::internal, "forced-loss node has a non-forced successor");
                if (mark[s] == 1) fail(ErrorCode::internal, "cycle inside the forced-loss region");
                if (mark[s] == 0) dfs.emplace_back(s, 0);
                continue;
            }
            int64_t best = -1;
            for (uint32_t s : g.succ[v]) best = std::max(best, out.t_minus[s]);
            out.t_minus[v] = best + 1;
            mark[v] = 2;
            dfs.pop_back();
        }
    }

    // Value-realizing choices at controlled nodes, first-listed successor
    // winning ties (callers order successors by ascending action).
    for (uint32_t v = 0; v < n; ++v) {
        if (!g.controlled[v] || g.capture[v]) continue;
        int32_t pick = -1;
        if (out.t_plus[v] >= 0) {
            for (size_t i = 0; i < g.succ[v].size() && pick < 0; ++i)
                if (out.t_plus[g.succ[v][i]] == out.t_plus[v] - 1) pick = static_cast<int32_t>(i);
        } else if (out.safe[v]) {
            for (size_t i = 0; i < g.succ[v].size() && pick < 0; ++i) {
                const uint32_t s = g.succ[v][i];
                if (out.t_plus[s] < 0 && (out.safe[s] || (g.capture[s] && g.sign[s] == 0)))
                    pick = static_cast<int32_t>(i);
            }
        } else {
            int64_t best = -1;
            for (uint32_t s : g.succ[v]) best = std::max(best, out.t_minus[s]);
            for (size_t i = 0; i < g.succ[v].size() && pick < 0; ++i)
                if (out.t_minus[g.succ[v][i]] == best) pick = static_cast<int32_t>(i);
        }
        if (pick < 0) fail(ErrorCode::internal, "no value-consistent choice at a controlled node");
        out.choice[v] = pick;
    }
    return out;
}

} // namespace gcr::detail
