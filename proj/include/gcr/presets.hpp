#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcr/constructions.hpp"

namespace gcr {

/// Named desk fixtures: graph, game, starting state and (where the fixture is
/// about specific behavior) scripted strategies.
struct Preset {
    std::string name;
    GameSpec spec;
    State s0;
    Profile scripted; // empty when the preset is a solve target only
    std::string note;
};

/// Known names: "fig1", "fig2", "fig5", "fig6-star", "p2".."p8", "c3".."c8",
/// "star3". Throws not_found for anything else.
Preset make_preset(const std::string& name, double gamma);

std::vector<std::string> preset_names();

} // namespace gcr
