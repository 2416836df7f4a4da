#include "gcr/presets.hpp"

#include <cstdlib>

namespace gcr {

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig5", "fig6-star", "p2", "p3", "p4", "p5", "p6", "p7", "p8",
            "c3",   "c4",   "c5",   "c6",        "c7", "c8", "star3"};
}

Preset make_preset(const std::string& name, double gamma) {
    if (name == "fig1") {
        Fig1Fixture f = fig1_fixture(gamma);
        return Preset{name, f.spec, f.s0, f.scripted,
                      "10-path with a spur at vertex 3; P3 evades forever by hiding behind P1"};
    }
    if (name == "fig2") {
        GameSpec spec = GameSpec::chain_game(Graph::path(5), 3, gamma);
        State s0{{1, 5, 3}, 1};
        Profile scripted = trigger_profile(spec, s0);
        return Preset{name, spec, s0, scripted, "endpoints-and-middle trigger profile on the 5-path"};
    }
    if (name == "fig5") {
        GameSpec spec = GameSpec::chain_game(Graph::path(6), 4, gamma);
        return Preset{name, spec, State{{1, 3, 4, 5}, 4}, {},
                      "four tokens on the 6-path; the P2 auxiliary game values this state at zero"};
    }
    if (name == "fig6-star") {
        GameSpec spec = GameSpec::cyclic_game(Graph::star(3), gamma);
        return Preset{name, spec, State{{2, 3, 4}, 1}, {},
                      "cyclic pursuit on the 3-star; only noncapturing equilibria from here"};
    }
    if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'c')) {
        const int n = std::atoi(name.c_str() + 1);
        if (n >= (name[0] == 'c' ? 3 : 2) && n <= 8) {
            Graph g = name[0] == 'p' ? Graph::path(n) : Graph::cycle(n);
            GameSpec spec = GameSpec::two_player_game(std::move(g), gamma);
            return Preset{name, spec, State{{1, n}, 1}, {}, "two-player pursuit fixture"};
        }
    }
    if (name == "star3") {
        GameSpec spec = GameSpec::two_player_game(Graph::star(3), gamma);
        return Preset{name, spec, State{{1, 2}, 1}, {}, "two-player pursuit on the 3-star"};
    }
    fail(ErrorCode::not_found, "unknown preset '" + name + "'");
}

} // namespace gcr
