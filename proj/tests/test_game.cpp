#include <doctest.h>

#include "fixtures.hpp"
#include "gcr/game.hpp"

using namespace gcr;

namespace {
GameSpec gamma3_p3() { return GameSpec::chain_game(Graph::path(3), 3, 0.9); }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(GameSpec::chain_game(Graph::path(3), 1, 0.9), Error);  // tokens < 2
    CHECK_THROWS_AS(GameSpec::chain_game(Graph::path(3), 2, 0.0), Error);  // gamma at the boundary
    CHECK_THROWS_AS(GameSpec::chain_game(Graph::path(3), 2, 1.0), Error);
    CHECK_THROWS_AS(GameSpec(Graph::path(3), 2, 0.9, PayoffScheme::two_player(), {1, 1}, 2), Error); // player 2 idle
    GeneralizedScheme bad;
    bad.targets = {{1}, {}, {}};
    bad.pursuers = {{}, {}, {}};
    CHECK_THROWS_AS(GameSpec::generalized_game(Graph::path(3), 0.9, bad), Error); // self-target
}

TEST_CASE("action sets") {
    GameSpec spec = gamma3_p3();
    State s{{2, 3, 1}, 1};
    CHECK(action_set(spec, s, 1) == std::vector<int>{1, 2, 3});
    CHECK(action_set(spec, s, 2) == std::vector<int>{3});
    State cap{{3, 3, 1}, 2};
    CHECK(action_set(spec, cap, 1) == std::vector<int>{k_null_action});
    CHECK(action_set(spec, cap, 2) == std::vector<int>{k_null_action});
    CHECK(action_set(spec, State::terminal(), 3) == std::vector<int>{k_null_action});
    CHECK_THROWS_AS(action_set(spec, s, 4), Error);

    // the mover can always stay
    for (const State& st : fixtures::all_states(spec))
        if (!is_capture(spec, st)) {
            auto acts = action_set(spec, st, st.mover);
            CHECK(std::find(acts.begin(), acts.end(), st.pos(st.mover)) != acts.end());
        }
}

TEST_CASE("transitions") {
    GameSpec spec = gamma3_p3();
    State s{{2, 3, 1}, 1};
    State next = transition(spec, s, 3);
    CHECK(next == State{{3, 3, 1}, 2});
    CHECK(is_capture(spec, next));
    CHECK(transition(spec, next, k_null_action) == State::terminal());
    CHECK(transition(spec, State::terminal(), k_null_action) == State::terminal());
    CHECK_THROWS_AS(transition(spec, s, 5), Error);       // not adjacent on the 3-path
    CHECK_THROWS_AS(transition(spec, next, 2), Error);    // capture states only accept null

    // only the mover's coordinate changes
    for (const State& st : fixtures::all_states(spec)) {
        if (is_capture(spec, st)) continue;
        for (int a : action_set(spec, st, st.mover)) {
            State nx = transition(spec, st, a);
            for (int t = 1; t <= 3; ++t)
                if (t != st.mover) CHECK(nx.pos(t) == st.pos(t));
            CHECK(nx.mover == (st.mover % 3) + 1);
        }
    }
}

TEST_CASE("capture memberships") {
    GameSpec spec = gamma3_p3();
    CHECK(capture_memberships(spec, State{{2, 2, 1}, 1}) == std::vector<int>{1});
    CHECK(capture_memberships(spec, State{{3, 3, 3}, 2}) == std::vector<int>{1, 2});
    CHECK(capture_memberships(spec, State{{1, 2, 1}, 1}).empty());

    GameSpec cyclic = GameSpec::cyclic_game(Graph::star(3), 0.9);
    CHECK(capture_memberships(cyclic, State{{2, 2, 4}, 1}) == std::vector<int>{1});
    CHECK(capture_memberships(cyclic, State{{2, 4, 4}, 1}) == std::vector<int>{2});
    CHECK(capture_memberships(cyclic, State{{4, 3, 4}, 1}) == std::vector<int>{3}); // P3 on P1

    // co-location of tokens 1 and 2 under the cyclic relation on a longer path
    GameSpec cyclic9 = GameSpec::cyclic_game(Graph::path(9), 0.9);
    CHECK(capture_memberships(cyclic9, State{{7, 7, 9}, 1}) == std::vector<int>{1});

    GameSpec big = GameSpec::chain_game(Graph::path(5), 3, 0.9);
    CHECK(capture_memberships(big, State{{5, 5, 2}, 1}) == std::vector<int>{1});
    CHECK(capture_memberships(big, State{{4, 4, 4}, 1}) == std::vector<int>{1, 2});
}

TEST_CASE("chain turn payoffs reproduce the three-player table") {
    GameSpec spec = gamma3_p3();
    auto q = [&](State s) { return turn_payoffs(spec, s); };
    CHECK(q(State{{2, 2, 3}, 1}) == std::vector<double>{1, -1, 0});   // x,x,y
    CHECK(q(State{{1, 3, 3}, 1}) == std::vector<double>{0, 1, -1});   // x,y,y
    CHECK(q(State{{2, 2, 2}, 1}) == std::vector<double>{1, -1, 0});   // x,x,x: S~2 \ S~1 empty
    CHECK(q(State{{1, 2, 3}, 1}) == std::vector<double>{0, 0, 0});
    CHECK(q(State::terminal()) == std::vector<double>(3, 0.0));

    // exhaustive: payoffs nonzero only on capture states, and the mover
    // dimension never matters
    for (const State& s : fixtures::all_states(spec)) {
        auto v = q(s);
        bool nonzero = false;
        for (double x : v) nonzero |= x != 0.0;
        CHECK(nonzero == is_capture(spec, s));
    }
}

TEST_CASE("chain payoffs for four and five tokens") {
    // chained simultaneous captures resolve by set difference: a token that
    // captures while being captured is only penalized
    GameSpec g5 = GameSpec::chain_game(Graph::path(6), 5, 0.9);
    auto q = [&](std::vector<int> pos) { return turn_payoffs(g5, State{std::move(pos), 1}); };
    CHECK(q({2, 2, 2, 4, 6}) == std::vector<double>{1, -1, 0, 0, 0});   // three in a pile
    CHECK(q({2, 2, 4, 4, 6}) == std::vector<double>{1, -1, 1, -1, 0}); // two disjoint captures
    CHECK(q({2, 2, 2, 2, 6}) == std::vector<double>{1, -1, 0, 0, 0});  // four in a pile
    CHECK(q({6, 2, 2, 2, 2}) == std::vector<double>{0, 1, -1, 0, 0});
    CHECK(q({1, 3, 3, 5, 5}) == std::vector<double>{0, 1, -1, 1, -1});

    GameSpec g4 = GameSpec::chain_game(Graph::path(6), 4, 0.9);
    CHECK(turn_payoffs(g4, State{{5, 5, 2, 3}, 1}) == std::vector<double>{1, -1, 0, 0});
    CHECK(turn_payoffs(g4, State{{1, 3, 4, 4}, 2}) == std::vector<double>{0, 0, 1, -1});
}

TEST_CASE("two-player payoffs are zero-sum") {
    GameSpec spec = GameSpec::two_player_game(Graph::path(3), 0.9);
    for (const State& s : fixtures::all_states(spec)) {
        auto v = turn_payoffs(spec, s);
        CHECK(v[0] + v[1] == 0.0);
        if (s.pos(1) == s.pos(2)) CHECK(v[0] == 1.0);
    }
}

TEST_CASE("generalized payoffs with simultaneous capture") {
    // two tokens chasing each other: co-location makes both capturer and captured
    GeneralizedScheme g;
    g.targets = {{2}, {1}};
    g.pursuers = {{2}, {1}};
    GameSpec spec = GameSpec::generalized_game(Graph::path(2), 0.9, g);
    auto v = turn_payoffs(spec, State{{1, 1}, 1});
    CHECK(v == std::vector<double>{-1, -1}); // penalty dominates by default

    g.penalty_dominates = false;
    GameSpec spec2 = GameSpec::generalized_game(Graph::path(2), 0.9, g);
    CHECK(turn_payoffs(spec2, State{{1, 1}, 1}) == std::vector<double>{1, 1});
}

TEST_CASE("state enumeration") {
    GameSpec p2 = GameSpec::chain_game(Graph::path(2), 2, 0.9);
    CHECK(StateSpace(p2).size() == 8); // 2^2 * 2

    GameSpec p3 = gamma3_p3();
    StateSpace space(p3);
    CHECK(space.size() == 81); // 3^3 * 3

    GameSpec p6 = GameSpec::chain_game(Graph::path(6), 4, 0.9);
    CHECK(StateSpace(p6).size() == 5184); // 6^4 * 4

    // round trip + index transitions agree with State transitions
    for (uint32_t i = 0; i < space.size(); ++i) {
        const State s = space.state_of(i);
        CHECK(space.index_of(s) == i);
        if (space.capture(i)) continue;
        for (int a : space.mover_actions(i))
            CHECK(space.transition_index(i, a) == space.index_of(transition(p3, s, a)));
    }

    // enumeration order is lexicographic by positions, then mover
    CHECK(space.state_of(0) == State{{1, 1, 1}, 1});
    CHECK(space.state_of(1) == State{{1, 1, 1}, 2});
    CHECK(space.state_of(3) == State{{1, 1, 2}, 1});
}

TEST_CASE("state key round trip") {
    State s{{1, 3, 2}, 3};
    CHECK(s.key() == "1,3,2,3");
    CHECK(State::from_key("1,3,2,3", 3) == s);
    CHECK(State::from_key("terminal", 3).is_terminal());
    CHECK_THROWS_AS(State::from_key("1,2", 3), Error);
    CHECK_THROWS_AS(State::from_key("a,b,c,1", 3), Error);
}
