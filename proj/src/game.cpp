#include "gcr/game.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace gcr {

std::string State::key() const {
    if (is_terminal()) return "terminal";
    std::ostringstream out;
    for (int v : positions) out << v << ',';
    out << mover;
    return out.str();
}

State State::from_key(std::string_view key, int tokens) {
    if (key == "terminal") return State::terminal();
    std::vector<int> nums;
    size_t start = 0;
    while (start <= key.size()) {
        size_t comma = key.find(',', start);
        std::string_view field = key.substr(start, comma == std::string_view::npos ? comma : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size())
            fail(ErrorCode::parse, "bad state '" + std::string(key) + "': expected \"v1,...,vN,mover\"");
        nums.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(nums.size()) != tokens + 1)
        fail(ErrorCode::parse, "bad state '" + std::string(key) + "': expected " + std::to_string(tokens) +
                                   " positions plus the mover");
    State s;
    s.mover = nums.back();
    nums.pop_back();
    s.positions = std::move(nums);
    return s;
}

PayoffScheme PayoffScheme::cyclic() {
    GeneralizedScheme g;
    g.targets = {{2}, {3}, {1}};
    g.pursuers = {{3}, {1}, {2}};
    return generalized(std::move(g));
}

uint64_t default_state_cap() {
    if (const char* env = std::getenv("GCR_STATE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 5000000ull;
}

GameSpec::GameSpec(Graph graph, int tokens, double gamma, PayoffScheme scheme, std::vector<int> controllers,
                   int players, Aggregation agg, int zero_sum_token)
    : graph_(std::make_shared<const Graph>(std::move(graph))),
      tokens_(tokens),
      gamma_(gamma),
      scheme_(std::move(scheme)),
      controllers_(std::move(controllers)),
      players_(players),
      agg_(agg),
      zero_sum_token_(zero_sum_token),
      state_cap_(default_state_cap()) {
    if (tokens_ < 2) fail(ErrorCode::invalid_argument, "token count must be >= 2, got " + std::to_string(tokens_));
    if (!(gamma_ > 0.0 && gamma_ < 1.0))
        fail(ErrorCode::invalid_argument, "gamma must lie strictly inside (0,1), got " + std::to_string(gamma_));
    if (players_ < 1) fail(ErrorCode::invalid_argument, "player count must be >= 1");
    if (static_cast<int>(controllers_.size()) != tokens_)
        fail(ErrorCode::invalid_argument, "controller map must assign every token");
    std::vector<bool> has_token(static_cast<size_t>(players_) + 1, false);
    for (int p : controllers_) {
        if (p < 1 || p > players_) fail(ErrorCode::invalid_argument, "controller refers to unknown player");
        has_token[static_cast<size_t>(p)] = true;
    }
    for (int p = 1; p <= players_; ++p)
        if (!has_token[static_cast<size_t>(p)])
            fail(ErrorCode::invalid_argument, "player " + std::to_string(p) + " controls no token");
    switch (scheme_.kind) {
        case SchemeKind::two_player:
            if (tokens_ != 2) fail(ErrorCode::invalid_argument, "two-player scheme requires exactly 2 tokens");
            break;
        case SchemeKind::chain:
            break;
        case SchemeKind::generalized: {
            const auto& g = scheme_.gen;
            if (static_cast<int>(g.targets.size()) != tokens_ || static_cast<int>(g.pursuers.size()) != tokens_)
                fail(ErrorCode::invalid_argument, "generalized scheme must list targets and pursuers per token");
            for (int n = 1; n <= tokens_; ++n) {
                for (int m : g.targets[static_cast<size_t>(n) - 1]) {
                    if (m < 1 || m > tokens_) fail(ErrorCode::invalid_argument, "target token out of range");
                    if (m == n) fail(ErrorCode::invalid_argument, "token cannot target itself");
                }
                for (int m : g.pursuers[static_cast<size_t>(n) - 1]) {
                    if (m < 1 || m > tokens_) fail(ErrorCode::invalid_argument, "pursuer token out of range");
                    if (m == n) fail(ErrorCode::invalid_argument, "token cannot pursue itself");
                }
            }
            break;
        }
    }
    if (agg_ == Aggregation::zero_sum_of) {
        if (players_ != 2) fail(ErrorCode::invalid_argument, "zero-sum aggregation requires exactly 2 players");
        if (zero_sum_token_ < 1 || zero_sum_token_ > tokens_)
            fail(ErrorCode::invalid_argument, "zero-sum reference token out of range");
    }
}

GameSpec GameSpec::chain_game(Graph graph, int tokens, double gamma) {
    std::vector<int> controllers(static_cast<size_t>(tokens));
    for (int t = 1; t <= tokens; ++t) controllers[static_cast<size_t>(t) - 1] = t;
    return GameSpec(std::move(graph), tokens, gamma, PayoffScheme::chain(), std::move(controllers), tokens);
}

GameSpec GameSpec::two_player_game(Graph graph, double gamma) {
    return GameSpec(std::move(graph), 2, gamma, PayoffScheme::two_player(), {1, 2}, 2);
}

GameSpec GameSpec::generalized_game(Graph graph, double gamma, GeneralizedScheme scheme) {
    int tokens = static_cast<int>(scheme.targets.size());
    std::vector<int> controllers(static_cast<size_t>(tokens));
    for (int t = 1; t <= tokens; ++t) controllers[static_cast<size_t>(t) - 1] = t;
    return GameSpec(std::move(graph), tokens, gamma, PayoffScheme::generalized(std::move(scheme)),
                    std::move(controllers), tokens);
}

GameSpec GameSpec::cyclic_game(Graph graph, double gamma) {
    return GameSpec(std::move(graph), 3, gamma, PayoffScheme::cyclic(), {1, 2, 3}, 3);
}

void GameSpec::check_state(const State& s) const {
    if (s.is_terminal()) return;
    if (static_cast<int>(s.positions.size()) != tokens_)
        fail(ErrorCode::invalid_argument, "state has " + std::to_string(s.positions.size()) + " positions, expected " +
                                              std::to_string(tokens_));
    for (int v : s.positions) graph_->check_vertex(v);
    if (s.mover < 1 || s.mover > tokens_)
        fail(ErrorCode::invalid_argument, "state mover " + std::to_string(s.mover) + " out of range");
}

std::vector<int> capture_memberships(const GameSpec& spec, const State& s) {
    if (s.is_terminal()) fail(ErrorCode::invalid_argument, "capture_memberships: state is terminal");
    spec.check_state(s);
    std::vector<int> out;
    if (spec.scheme().kind == SchemeKind::generalized) {
        const auto& g = spec.scheme().gen;
        for (int n = 1; n <= spec.tokens(); ++n)
            for (int m : g.targets[static_cast<size_t>(n) - 1])
                if (s.pos(n) == s.pos(m)) {
                    out.push_back(n);
                    break;
                }
    } else {
        for (int n = 1; n < spec.tokens(); ++n)
            if (s.pos(n) == s.pos(n + 1)) out.push_back(n);
    }
    return out;
}

bool is_capture(const GameSpec& spec, const State& s) {
    if (s.is_terminal()) return false;
    if (spec.scheme().kind == SchemeKind::generalized) {
        // Any co-location of a token with one of its targets or pursuers ends the game.
        const auto& g = spec.scheme().gen;
        for (int n = 1; n <= spec.tokens(); ++n) {
            for (int m : g.targets[static_cast<size_t>(n) - 1])
                if (s.pos(n) == s.pos(m)) return true;
            for (int m : g.pursuers[static_cast<size_t>(n) - 1])
                if (s.pos(n) == s.pos(m)) return true;
        }
        return false;
    }
    for (int n = 1; n < spec.tokens(); ++n)
        if (s.pos(n) == s.pos(n + 1)) return true;
    return false;
}

std::vector<int> action_set(const GameSpec& spec, const State& s, int token) {
    if (token < 1 || token > spec.tokens())
        fail(ErrorCode::invalid_argument, "invalid token " + std::to_string(token));
    if (s.is_terminal() || is_capture(spec, s)) return {k_null_action};
    spec.check_state(s);
    if (s.mover == token) return spec.graph().closed_neighborhood(s.pos(token));
    return {s.pos(token)}; // non-movers stay
}

State transition(const GameSpec& spec, const State& s, int action) {
    if (s.is_terminal() || is_capture(spec, s)) {
        if (action != k_null_action)
            fail(ErrorCode::illegal_action, "only the null move is legal at capture/terminal states");
        return State::terminal();
    }
    spec.check_state(s);
    const int mover = s.mover;
    const int from = s.pos(mover);
    if (action != from && !spec.graph().has_edge(from, action))
        fail(ErrorCode::illegal_action, "illegal action " + std::to_string(action) + " for token " +
                                            std::to_string(mover) + " at state " + s.key());
    State next = s;
    next.positions[static_cast<size_t>(mover) - 1] = action;
    next.mover = (mover % spec.tokens()) + 1;
    return next;
}

std::vector<double> turn_payoffs(const GameSpec& spec, const State& s) {
    std::vector<double> q(static_cast<size_t>(spec.tokens()), 0.0);
    if (s.is_terminal()) return q;
    spec.check_state(s);
    switch (spec.scheme().kind) {
        case SchemeKind::two_player:
        case SchemeKind::chain: {
            // q^n = +1 on S~n \ S~(n-1), -1 on S~(n-1) \ S~(n-2), with S~0 = S~(-1) = empty.
            auto in_cap = [&](int n) { return n >= 1 && n < spec.tokens() && s.pos(n) == s.pos(n + 1); };
            for (int n = 1; n <= spec.tokens(); ++n) {
                if (in_cap(n) && !in_cap(n - 1))
                    q[static_cast<size_t>(n) - 1] = 1.0;
                else if (in_cap(n - 1) && !in_cap(n - 2))
                    q[static_cast<size_t>(n) - 1] = -1.0;
            }
            break;
        }
        case SchemeKind::generalized: {
            const auto& g = spec.scheme().gen;
            for (int n = 1; n <= spec.tokens(); ++n) {
                bool capturing = false, captured = false;
                for (int m : g.targets[static_cast<size_t>(n) - 1]) capturing |= s.pos(n) == s.pos(m);
                for (int m : g.pursuers[static_cast<size_t>(n) - 1]) captured |= s.pos(n) == s.pos(m);
                double v = 0.0;
                if (capturing && captured)
                    v = g.penalty_dominates ? -1.0 : 1.0;
                else if (capturing)
                    v = 1.0;
                else if (captured)
                    v = -1.0;
                q[static_cast<size_t>(n) - 1] = v;
            }
            break;
        }
    }
    return q;
}

std::vector<double> aggregate_to_players(const GameSpec& spec, const std::vector<double>& token_values) {
    std::vector<double> out(static_cast<size_t>(spec.players()), 0.0);
    if (spec.aggregation() == Aggregation::zero_sum_of) {
        double v = token_values[static_cast<size_t>(spec.zero_sum_token()) - 1];
        out[0] = v;
        out[1] = -v;
        return out;
    }
    for (int t = 1; t <= spec.tokens(); ++t)
        out[static_cast<size_t>(spec.controller(t)) - 1] += token_values[static_cast<size_t>(t) - 1];
    return out;
}

std::vector<double> player_turn_payoffs(const GameSpec& spec, const State& s) {
    return aggregate_to_players(spec, turn_payoffs(spec, s));
}

StateSpace::StateSpace(const GameSpec& spec)
    : spec_(spec), tokens_(spec.tokens()), vertices_(spec.graph().vertex_count()) {
    uint64_t count = static_cast<uint64_t>(tokens_);
    for (int t = 0; t < tokens_; ++t) {
        count *= static_cast<uint64_t>(vertices_);
        if (count > spec.state_cap())
            fail(ErrorCode::state_cap, "state count " + std::to_string(count) + "+ exceeds the safety cap " +
                                           std::to_string(spec.state_cap()) +
                                           " (set GCR_STATE_CAP to override)");
    }
    size_ = count;
    scale_.assign(static_cast<size_t>(tokens_), 1);
    for (int t = tokens_ - 2; t >= 0; --t)
        scale_[static_cast<size_t>(t)] = scale_[static_cast<size_t>(t) + 1] * static_cast<uint64_t>(vertices_);
    closed_nbhd_.resize(static_cast<size_t>(vertices_) + 1);
    for (int v = 1; v <= vertices_; ++v) closed_nbhd_[static_cast<size_t>(v)] = spec_.graph().closed_neighborhood(v);
    capture_.resize(size_);
    q_tokens_.resize(size_);
    q_players_.resize(size_);
    for (uint64_t i = 0; i < size_; ++i) {
        State s = state_of(static_cast<uint32_t>(i));
        capture_[i] = is_capture(spec_, s);
        q_tokens_[i] = turn_payoffs(spec_, s);
        q_players_[i] = aggregate_to_players(spec_, q_tokens_[i]);
    }
}

uint32_t StateSpace::index_of(const State& s) const {
    if (s.is_terminal()) return terminal_index();
    spec_.check_state(s);
    uint64_t idx = 0;
    for (int t = 0; t < tokens_; ++t) idx = idx * static_cast<uint64_t>(vertices_) + static_cast<uint64_t>(s.positions[static_cast<size_t>(t)] - 1);
    idx = idx * static_cast<uint64_t>(tokens_) + static_cast<uint64_t>(s.mover - 1);
    return static_cast<uint32_t>(idx);
}

State StateSpace::state_of(uint32_t index) const {
    if (index == terminal_index()) return State::terminal();
    if (index > size_) fail(ErrorCode::invalid_argument, "state index out of range");
    State s;
    uint64_t idx = index;
    s.mover = static_cast<int>(idx % static_cast<uint64_t>(tokens_)) + 1;
    idx /= static_cast<uint64_t>(tokens_);
    s.positions.assign(static_cast<size_t>(tokens_), 0);
    for (int t = tokens_ - 1; t >= 0; --t) {
        s.positions[static_cast<size_t>(t)] = static_cast<int>(idx % static_cast<uint64_t>(vertices_)) + 1;
        idx /= static_cast<uint64_t>(vertices_);
    }
    return s;
}

int StateSpace::position(uint32_t index, int token) const {
    const uint64_t pos_code = index / static_cast<uint64_t>(tokens_);
    return static_cast<int>((pos_code / scale_[static_cast<size_t>(token) - 1]) % static_cast<uint64_t>(vertices_)) + 1;
}

uint32_t StateSpace::transition_index(uint32_t index, int action) const {
    if (index == terminal_index() || capture_[index]) {
        if (action != k_null_action)
            fail(ErrorCode::illegal_action, "only the null move is legal at capture/terminal states");
        return terminal_index();
    }
    // Replace the mover's coordinate and advance the mover cyclically.
    const uint64_t mover_part = index % static_cast<uint64_t>(tokens_);
    uint64_t pos_code = index / static_cast<uint64_t>(tokens_);
    const uint64_t scale = scale_[mover_part];
    const uint64_t old_digit = (pos_code / scale) % static_cast<uint64_t>(vertices_);
    const int64_t delta = static_cast<int64_t>(action - 1) - static_cast<int64_t>(old_digit);
    pos_code = static_cast<uint64_t>(static_cast<int64_t>(pos_code) + delta * static_cast<int64_t>(scale));
    const uint64_t next_mover = (mover_part + 1) % static_cast<uint64_t>(tokens_);
    return static_cast<uint32_t>(pos_code * static_cast<uint64_t>(tokens_) + next_mover);
}

const std::vector<int>& StateSpace::mover_actions(uint32_t index) const {
    return closed_nbhd_[static_cast<size_t>(position(index, mover(index)))];
}

} // namespace gcr
