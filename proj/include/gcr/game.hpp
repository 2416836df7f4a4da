#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcr/graph.hpp"

namespace gcr {

/// The null move played at capture states and at the terminal state.
inline constexpr int k_null_action = 0;

/// Game position: token positions plus the token that moves next.
/// An empty position vector denotes the distinguished terminal state.
struct State {
    std::vector<int> positions; // positions[t-1] = vertex of token t
    int mover = 0;              // 1..N; 0 for terminal

    static State terminal() { return State{}; }
    bool is_terminal() const { return positions.empty(); }
    int pos(int token) const { return positions[static_cast<size_t>(token) - 1]; }

    bool operator==(const State& o) const = default;

    /// "v1,v2,...,vN,mover" (the CLI --s0 format), or "terminal".
    std::string key() const;
    static State from_key(std::string_view key, int tokens);
};

enum class SchemeKind { two_player, chain, generalized };

/// Capture relations of the generalized family: token n is rewarded on
/// co-location with a member of targets[n], penalized on co-location with a
/// member of pursuers[n]. Vectors are indexed by token-1.
struct GeneralizedScheme {
    std::vector<std::vector<int>> targets;
    std::vector<std::vector<int>> pursuers;
    bool penalty_dominates = true; // simultaneous capture+captured resolves to -1
};

struct PayoffScheme {
    SchemeKind kind = SchemeKind::chain;
    GeneralizedScheme gen; // used when kind == generalized

    static PayoffScheme two_player() { return {SchemeKind::two_player, {}}; }
    static PayoffScheme chain() { return {SchemeKind::chain, {}}; }
    static PayoffScheme generalized(GeneralizedScheme g) { return {SchemeKind::generalized, std::move(g)}; }
    /// P1 chases P2 chases P3 chases P1 (tokens == 3).
    static PayoffScheme cyclic();
};

/// How token payoffs aggregate into player payoffs.
enum class Aggregation {
    per_token,    // player's payoff = sum over the tokens it controls
    zero_sum_of,  // player 1 receives token zero_sum_token's payoff, player 2 its negation
};

uint64_t default_state_cap(); // 5e6, overridable via GCR_STATE_CAP

/// Immutable description of a game: graph, token count, discount, payoff
/// scheme and the token -> player controller map. All game operations are
/// pure functions of a GameSpec and a State.
class GameSpec {
public:
    GameSpec(Graph graph, int tokens, double gamma, PayoffScheme scheme, std::vector<int> controllers,
             int players, Aggregation agg = Aggregation::per_token, int zero_sum_token = 0);

    /// Gamma_N: chain scheme, token t controlled by player t.
    static GameSpec chain_game(Graph graph, int tokens, double gamma);
    /// Gamma_2 with the classic cop (player/token 1) and robber (2).
    static GameSpec two_player_game(Graph graph, double gamma);
    static GameSpec generalized_game(Graph graph, double gamma, GeneralizedScheme scheme);
    static GameSpec cyclic_game(Graph graph, double gamma);

    const Graph& graph() const { return *graph_; }
    int tokens() const { return tokens_; }
    double gamma() const { return gamma_; }
    const PayoffScheme& scheme() const { return scheme_; }
    int players() const { return players_; }
    int controller(int token) const { return controllers_[static_cast<size_t>(token) - 1]; }
    const std::vector<int>& controllers() const { return controllers_; }
    Aggregation aggregation() const { return agg_; }
    int zero_sum_token() const { return zero_sum_token_; }
    bool zero_sum() const { return agg_ == Aggregation::zero_sum_of; }
    uint64_t state_cap() const { return state_cap_; }

    void check_state(const State& s) const;

private:
    std::shared_ptr<const Graph> graph_;
    int tokens_;
    double gamma_;
    PayoffScheme scheme_;
    std::vector<int> controllers_;
    int players_;
    Aggregation agg_;
    int zero_sum_token_;
    uint64_t state_cap_;
};

/// Token indices n with s in the capture set S~n. Chain scheme: x^n = x^{n+1};
/// generalized: token n co-located with one of its targets.
std::vector<int> capture_memberships(const GameSpec& spec, const State& s);

bool is_capture(const GameSpec& spec, const State& s);

/// Legal moves of `token` at `s`: the mover's closed neighborhood at ordinary
/// states, {stay} for everyone else, {null} at capture states and terminal.
std::vector<int> action_set(const GameSpec& spec, const State& s, int token);

/// Applies the mover's action. Capture states and the terminal state transit
/// to terminal under the null move. Throws on illegal actions.
State transition(const GameSpec& spec, const State& s, int action);

/// Per-token turn payoffs q^n(s).
std::vector<double> turn_payoffs(const GameSpec& spec, const State& s);

/// Token payoffs aggregated to players (index p-1).
std::vector<double> player_turn_payoffs(const GameSpec& spec, const State& s);
std::vector<double> aggregate_to_players(const GameSpec& spec, const std::vector<double>& token_values);

/// Dense enumeration of the state set: indices 0..size-1 are the nonterminal
/// states in lexicographic (positions, mover) order, index size is terminal.
/// Construction fails when |V|^N * N exceeds the configured state cap.
class StateSpace {
public:
    explicit StateSpace(const GameSpec& spec);

    uint64_t size() const { return size_; } // nonterminal count
    uint32_t terminal_index() const { return static_cast<uint32_t>(size_); }

    uint32_t index_of(const State& s) const;
    State state_of(uint32_t index) const;

    /// index_of(transition(...)) without materializing State.
    uint32_t transition_index(uint32_t index, int action) const;

    bool capture(uint32_t index) const { return capture_[index]; }
    int mover(uint32_t index) const { return static_cast<int>(index % static_cast<uint32_t>(tokens_)) + 1; }
    /// Vertex of `token` at the given nonterminal state.
    int position(uint32_t index, int token) const;
    /// Mover's legal vertex moves at a non-capture state, ascending.
    const std::vector<int>& mover_actions(uint32_t index) const;
    const std::vector<double>& token_payoffs(uint32_t index) const { return q_tokens_[index]; }
    const std::vector<double>& player_payoffs(uint32_t index) const { return q_players_[index]; }

    const GameSpec& spec() const { return spec_; }

private:
    GameSpec spec_;
    int tokens_;
    int vertices_;
    uint64_t size_;
    std::vector<uint64_t> scale_; // scale_[t-1]: position weight of token t inside the code
    std::vector<std::vector<int>> closed_nbhd_;
    std::vector<bool> capture_;
    std::vector<std::vector<double>> q_tokens_;
    std::vector<std::vector<double>> q_players_;
};

} // namespace gcr
