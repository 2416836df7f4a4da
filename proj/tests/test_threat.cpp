#include <doctest.h>

#include "fixtures.hpp"
#include "gcr/engine.hpp"
#include "gcr/threat.hpp"

using namespace gcr;

TEST_CASE("on-path play equals the base profile play") {
    GameSpec spec = GameSpec::chain_game(Graph::path(3), 3, 0.9);
    ThreatProfile threat = build_threat_profile(spec);
    Profile base = threat.base_profile();
    for (const State& s0 : fixtures::all_states(spec)) {
        History with_triggers = simulate(spec, threat.strategies, s0);
        History cooperative = simulate(spec, base, s0);
        CHECK(with_triggers.states == cooperative.states);
        CHECK(with_triggers.capture_time == cooperative.capture_time);

        // nobody deviates, so no automaton ever leaves cooperative mode
        for (int t = 1; t <= 3; ++t) {
            const auto& automaton = *threat.strategies[static_cast<size_t>(t) - 1];
            int mode = automaton.initial_mode();
            for (size_t i = 0; i + 1 < with_triggers.states.size(); ++i) {
                if (with_triggers.states[i].is_terminal()) break;
                mode = automaton.update(mode, with_triggers.states[i], with_triggers.actions[i]);
                CHECK(mode == 0);
            }
        }
    }
}

TEST_CASE("deviation switches the others to punishment") {
    GameSpec spec = GameSpec::chain_game(Graph::path(4), 3, 0.9);
    ThreatProfile threat = build_threat_profile(spec);
    const State s0{{1, 3, 4}, 2};
    const State s{{1, 3, 4}, 2};
    // pick an action for token 2 different from its cooperative table
    const int coop = threat.aux_policy[1]->at(s);
    int deviant = -1;
    for (int a : action_set(spec, s, 2))
        if (a != coop) deviant = a;
    REQUIRE(deviant > 0);
    // after observing the deviation, every other automaton punishes token 2
    for (int t : {1, 3}) {
        const auto& strat = *threat.strategies[static_cast<size_t>(t) - 1];
        const int mode = strat.update(strat.initial_mode(), s, deviant);
        CHECK(mode == 2);
        // punish modes are absorbing
        CHECK(strat.update(mode, State{{2, 3, 4}, 1}, 2) == 2);
    }
    // the cooperative action does not trigger
    const auto& s1 = *threat.strategies[0];
    CHECK(s1.update(s1.initial_mode(), s, coop) == 0);
    (void)s0;
}

TEST_CASE("modes change at most once along any play") {
    GameSpec spec = GameSpec::chain_game(Graph::path(3), 3, 0.9);
    ThreatProfile threat = build_threat_profile(spec);
    // play token 2 as an always-deviating intruder, tokens 1 and 3 as threats
    Profile probe = threat.strategies;
    probe[1] = std::make_shared<FunctionStrategy>(2, "wander", [&spec](const State& s) {
        auto acts = spec.graph().closed_neighborhood(s.pos(2));
        return acts.back(); // highest neighbor: frequently off the cooperative table
    });
    for (const State& s0 : fixtures::all_states(spec)) {
        History h = simulate(spec, probe, s0);
        // re-run the mode evolution of token 1's automaton and count switches
        const auto& automaton = *threat.strategies[0];
        int mode = automaton.initial_mode();
        int switches = 0;
        for (size_t i = 0; i + 1 < h.states.size(); ++i) {
            const int next = automaton.update(mode, h.states[i], h.actions[i]);
            if (next != mode) ++switches;
            mode = next;
        }
        CHECK(switches <= 1);
    }
}

TEST_CASE("threat equilibrium verifies on the 4-path") {
    GameSpec spec = GameSpec::chain_game(Graph::path(4), 3, 0.9);
    ThreatProfile threat = build_threat_profile(spec);
    ThreatReport report = verify_threat_ne(spec, threat, State{{1, 2, 4}, 1});
    CHECK(report.pass);
    for (const auto& c : report.players) CHECK(c.best_deviation <= c.on_path + 1e-9);
}

TEST_CASE("best response replays to its promised value against automata") {
    // mode tracking across the product graph: simulating the returned
    // strategy against the threat automata realizes the computed value
    GameSpec spec = GameSpec::chain_game(Graph::path(4), 3, 0.9);
    ThreatProfile threat = build_threat_profile(spec);
    for (const State& s0 : {State{{1, 2, 4}, 1}, State{{2, 4, 1}, 3}, State{{4, 1, 3}, 2}}) {
        for (int n = 1; n <= 3; ++n) {
            Profile opponents(3);
            for (int t = 1; t <= 3; ++t)
                if (t != n) opponents[static_cast<size_t>(t) - 1] = threat.strategies[static_cast<size_t>(t) - 1];
            BestResponseResult br = best_response(spec, opponents, n, s0);
            Profile joint = opponents;
            joint[static_cast<size_t>(n) - 1] = br.strategies[0];
            auto q = discounted_payoff(spec, simulate(spec, joint, s0));
            CHECK(q[static_cast<size_t>(n) - 1] == doctest::Approx(br.value).epsilon(1e-12));
        }
    }
}

TEST_CASE("threat profile needs the chain scheme") {
    GameSpec cyclic = GameSpec::cyclic_game(Graph::star(3), 0.9);
    CHECK_THROWS_AS(build_threat_profile(cyclic), Error);
}
