#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "gcr/error.hpp"

namespace gcr::detail {

/// Deterministic discounted decision process: one controller maximizes
/// gamma^t * sign over trajectories that end at the first capture node (sign
/// in {-1,0,+1}) or run forever (payoff 0). Capture nodes are sinks.
struct DecisionGraph {
    std::vector<std::vector<uint32_t>> succ; // empty for capture nodes
    std::vector<uint8_t> controlled;         // 1: the controller picks the successor
    std::vector<uint8_t> capture;
    std::vector<int8_t> sign; // meaningful at capture nodes

    uint32_t size() const { return static_cast<uint32_t>(succ.size()); }
};

/// Values are exact: gamma^t_plus when a rewarded capture is reachable,
/// 0 when every negative capture is avoidable forever, -gamma^t_minus when
/// the loss is forced (delayed as long as possible).
struct DecisionSolution {
    std::vector<int64_t> t_plus;  // -1: no rewarded capture reachable
    std::vector<uint8_t> safe;    // value exactly 0
    std::vector<int64_t> t_minus; // forced-loss delay, when !safe && t_plus < 0
    std::vector<int32_t> choice;  // controlled nodes: successor index realizing the value

    double value(uint32_t node, double gamma) const;
};

DecisionSolution solve_decision(const DecisionGraph& g);

} // namespace gcr::detail
