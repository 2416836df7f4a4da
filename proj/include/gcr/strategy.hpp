#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gcr/game.hpp"

namespace gcr {

/// Deterministic strategy of one token: a finite automaton over integer modes.
/// `act` is consulted only at nonterminal non-capture states where the token
/// moves; `update` observes every executed (state, action) pair, own moves
/// included. Positional strategies are the single-mode special case.
///
/// Implementations must be pure: act/update may not carry hidden mutable
/// state, so strategies are safe to share across concurrent simulations.
class Strategy {
public:
    explicit Strategy(int token) : token_(token) {}
    virtual ~Strategy() = default;

    int token() const { return token_; }
    virtual int initial_mode() const { return 0; }
    virtual int act(int mode, const State& s) const = 0;
    virtual int update(int mode, const State& s, int action) const { (void)mode, (void)s, (void)action; return mode; }
    virtual bool positional() const { return false; }
    virtual std::string name() const { return "strategy"; }

private:
    int token_;
};

using StrategyPtr = std::shared_ptr<const Strategy>;
/// One strategy per token, index t-1.
using Profile = std::vector<StrategyPtr>;

/// Total positional policy stored densely: mover's action per state index.
/// Entries at capture states hold the null action.
struct PolicyTable {
    std::shared_ptr<const StateSpace> space;
    std::vector<int> action; // size space->size()

    int at(const State& s) const { return action[space->index_of(s)]; }
};

/// Positional strategy reading one token's moves out of a shared PolicyTable.
class TableStrategy final : public Strategy {
public:
    TableStrategy(int token, std::shared_ptr<const PolicyTable> table)
        : Strategy(token), table_(std::move(table)) {}

    int act(int, const State& s) const override { return table_->at(s); }
    bool positional() const override { return true; }
    std::string name() const override { return "positional(token " + std::to_string(token()) + ")"; }

private:
    std::shared_ptr<const PolicyTable> table_;
};

/// Positional strategy computed on the fly from the current state.
class FunctionStrategy final : public Strategy {
public:
    using Fn = std::function<int(const State&)>;
    FunctionStrategy(int token, std::string name, Fn fn)
        : Strategy(token), name_(std::move(name)), fn_(std::move(fn)) {}

    int act(int, const State& s) const override { return fn_(s); }
    bool positional() const override { return true; }
    std::string name() const override { return name_; }

private:
    std::string name_;
    Fn fn_;
};

/// Token always keeps its current vertex.
StrategyPtr stay_strategy(int token);

/// Greedy shortest-path pursuit of another token's current vertex.
StrategyPtr chase_strategy(const GameSpec& spec, int token, int target_token);

/// Builds the per-token strategy profile reading a single shared policy table.
Profile profile_from_policy(const GameSpec& spec, std::shared_ptr<const PolicyTable> table);

} // namespace gcr
