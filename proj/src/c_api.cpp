#include "gcr/gcr.h"

#include <cstring>
#include <optional>

#include "gcr/json_io.hpp"
#include "gcr/presets.hpp"

using namespace gcr;

struct gcr_graph {
    Graph graph;
};

struct gcr_game {
    GameSpec spec;
    std::optional<State> preset_s0;
    Profile preset_profile;
};

namespace {

thread_local std::string g_last_error;

gcr_status status_of(const Error& e) {
    switch (e.code()) {
        case ErrorCode::invalid_argument: return GCR_ERROR_INVALID_ARGUMENT;
        case ErrorCode::parse: return GCR_ERROR_PARSE;
        case ErrorCode::precondition: return GCR_ERROR_PRECONDITION;
        case ErrorCode::state_cap: return GCR_ERROR_STATE_CAP;
        case ErrorCode::no_convergence: return GCR_ERROR_NO_CONVERGENCE;
        case ErrorCode::illegal_action: return GCR_ERROR_ILLEGAL_ACTION;
        case ErrorCode::not_found: return GCR_ERROR_NOT_FOUND;
        case ErrorCode::internal: return GCR_ERROR_INTERNAL;
    }
    return GCR_ERROR_INTERNAL;
}

template <typename Fn>
gcr_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return GCR_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GCR_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

char* dup_json(const ordered_json& j) { return dup_string(j.dump(2) + "\n"); }

void require(bool cond, const char* what) {
    if (!cond) fail(ErrorCode::invalid_argument, what);
}

struct SolveOptions {
    std::string method = "exact";
    double tol = 1e-9;
    int max_iters = 1000000;
    bool placement = true;
};

SolveOptions parse_options(const char* options_json) {
    SolveOptions opts;
    if (!options_json || !*options_json) return opts;
    ordered_json j = ordered_json::parse(options_json);
    opts.method = j.value("method", opts.method);
    opts.tol = j.value("tol", opts.tol);
    opts.max_iters = j.value("max_iters", opts.max_iters);
    opts.placement = j.value("placement", opts.placement);
    if (opts.method != "exact" && opts.method != "vi")
        fail(ErrorCode::invalid_argument, "method must be \"exact\" or \"vi\"");
    return opts;
}

Profile profile_for_simulation(const gcr_game* game, const char* profile_json) {
    if (profile_json && *profile_json) {
        auto policy = policy_from_json(game->spec, ordered_json::parse(profile_json));
        return profile_from_policy(game->spec, policy);
    }
    if (!game->preset_profile.empty()) return game->preset_profile;
    fail(ErrorCode::invalid_argument, "no profile given and the game carries no scripted preset profile");
}

State parse_s0(const gcr_game* game, const char* s0) {
    require(s0 && *s0, "s0 is required");
    State s = State::from_key(s0, game->spec.tokens());
    game->spec.check_state(s);
    return s;
}

State start_state(const gcr_game* game, const char* s0) {
    if (s0 && *s0) return parse_s0(game, s0);
    if (game->preset_s0) return *game->preset_s0;
    fail(ErrorCode::invalid_argument, "s0 is required (the game carries no preset start)");
}

} // namespace

extern "C" {

const char* gcr_status_name(gcr_status status) {
    switch (status) {
        case GCR_OK: return "ok";
        case GCR_ERROR_INVALID_ARGUMENT: return "invalid_argument";
        case GCR_ERROR_PARSE: return "parse_error";
        case GCR_ERROR_PRECONDITION: return "precondition_failed";
        case GCR_ERROR_STATE_CAP: return "state_cap_exceeded";
        case GCR_ERROR_NO_CONVERGENCE: return "no_convergence";
        case GCR_ERROR_ILLEGAL_ACTION: return "illegal_action";
        case GCR_ERROR_NOT_FOUND: return "not_found";
        case GCR_ERROR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* gcr_last_error(void) { return g_last_error.c_str(); }

void gcr_free_string(char* str) { std::free(str); }

gcr_status gcr_graph_parse(const char* text, gcr_graph** out) {
    return guarded([&] {
        require(text && out, "text and out must be non-null");
        *out = new gcr_graph{Graph::parse(text)};
    });
}

gcr_status gcr_graph_path(int vertices, gcr_graph** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-null");
        *out = new gcr_graph{Graph::path(vertices)};
    });
}

gcr_status gcr_graph_cycle(int vertices, gcr_graph** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-null");
        *out = new gcr_graph{Graph::cycle(vertices)};
    });
}

gcr_status gcr_graph_star(int leaves, gcr_graph** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-null");
        *out = new gcr_graph{Graph::star(leaves)};
    });
}

gcr_status gcr_preset_graph(const char* name, gcr_graph** out) {
    return guarded([&] {
        require(name && out, "name and out must be non-null");
        *out = new gcr_graph{make_preset(name, 0.5).spec.graph()};
    });
}

void gcr_graph_free(gcr_graph* g) { delete g; }

int gcr_graph_vertices(const gcr_graph* g) { return g ? g->graph.vertex_count() : 0; }

int gcr_graph_edges(const gcr_graph* g) { return g ? g->graph.edge_count() : 0; }

gcr_status gcr_graph_distance(const gcr_graph* g, int u, int v, int* out) {
    return guarded([&] {
        require(g && out, "graph and out must be non-null");
        *out = g->graph.distance(u, v);
    });
}

gcr_status gcr_graph_median(const gcr_graph* g, int x, int y, int z, int* out) {
    return guarded([&] {
        require(g && out, "graph and out must be non-null");
        *out = g->graph.median(x, y, z);
    });
}

gcr_status gcr_graph_classify(const gcr_graph* g, int* is_tree, int* is_path) {
    return guarded([&] {
        require(g && is_tree && is_path, "graph and outputs must be non-null");
        *is_tree = g->graph.is_tree() ? 1 : 0;
        *is_path = g->graph.is_path() ? 1 : 0;
    });
}

gcr_status gcr_graph_dot(const gcr_graph* g, char** out) {
    return guarded([&] {
        require(g && out, "graph and out must be non-null");
        *out = dup_string(g->graph.to_dot());
    });
}

gcr_status gcr_game_create(const gcr_graph* g, int tokens, double gamma, const char* scheme, gcr_game** out) {
    return guarded([&] {
        require(g && out, "graph and out must be non-null");
        const std::string scheme_text = scheme && *scheme ? scheme : "chain";
        PayoffScheme ps = scheme_from_string(scheme_text, tokens);
        GameSpec spec = ps.kind == SchemeKind::two_player ? GameSpec::two_player_game(g->graph, gamma)
                        : ps.kind == SchemeKind::chain    ? GameSpec::chain_game(g->graph, tokens, gamma)
                                                          : GameSpec::generalized_game(g->graph, gamma, ps.gen);
        require(spec.tokens() == tokens, "tokens does not match the scheme");
        *out = new gcr_game{std::move(spec), std::nullopt, {}};
    });
}

void gcr_game_free(gcr_game* game) { delete game; }

gcr_status gcr_game_state_count(const gcr_game* game, unsigned long long* out) {
    return guarded([&] {
        require(game && out, "game and out must be non-null");
        StateSpace space(game->spec);
        *out = space.size();
    });
}

gcr_status gcr_preset(const char* name, double gamma, gcr_game** out_game, char** info_json) {
    return guarded([&] {
        require(name && out_game, "name and out_game must be non-null");
        Preset preset = make_preset(name, gamma);
        auto* game = new gcr_game{std::move(preset.spec), preset.s0, std::move(preset.scripted)};
        *out_game = game;
        if (info_json) {
            ordered_json info;
            info["name"] = preset.name;
            info["s0"] = preset.s0.key();
            info["note"] = preset.note;
            info["has_script"] = !game->preset_profile.empty();
            *info_json = dup_json(info);
        }
    });
}

gcr_status gcr_copwin(const gcr_graph* g, double gamma, int* out) {
    return guarded([&] {
        require(g && out, "graph and out must be non-null");
        *out = copwin_check(g->graph, gamma) ? 1 : 0;
    });
}

gcr_status gcr_solve_two(const gcr_game* game, const char* options_json, char** out_json) {
    return guarded([&] {
        require(game && out_json, "game and out must be non-null");
        SolveOptions opts = parse_options(options_json);
        ZeroSumSolution sol = opts.method == "exact" ? solve_exact(game->spec)
                                                     : solve_vi(game->spec, opts.tol, opts.max_iters);
        *out_json = dup_json(zero_sum_solution_to_json(game->spec, sol, opts.placement));
    });
}

gcr_status gcr_solve_aux(const gcr_game* game, int player, const char* options_json, char** out_json) {
    return guarded([&] {
        require(game && out_json, "game and out must be non-null");
        SolveOptions opts = parse_options(options_json);
        GameSpec aux = build_aux_game(game->spec, player);
        ZeroSumSolution sol = opts.method == "exact" ? solve_exact(aux) : solve_vi(aux, opts.tol, opts.max_iters);
        *out_json = dup_json(zero_sum_solution_to_json(aux, sol, false));
    });
}

gcr_status gcr_solve_ne(const gcr_game* game, const char* options_json, char** out_json) {
    return guarded([&] {
        require(game && out_json, "game and out must be non-null");
        SolveOptions opts = parse_options(options_json);
        NEResult ne = solve_positional_ne(game->spec, opts.tol, opts.max_iters);
        ordered_json j;
        j["profile"] = policy_to_json(*ne.policy);
        j["values"] = value_table_to_json(ne.values);
        j["iters"] = ne.iters;
        j["residual"] = ne.residual;
        j["damped"] = ne.damped;
        j["certified"] = true;
        *out_json = dup_json(j);
    });
}

gcr_status gcr_certify(const gcr_game* game, const char* profile_json, double tol, char** out_json) {
    return guarded([&] {
        require(game && profile_json && out_json, "game, profile and out must be non-null");
        auto policy = policy_from_json(game->spec, ordered_json::parse(profile_json));
        ValueTable values = evaluate_profile(game->spec, *policy);
        CertifyReport report = certify_ne(game->spec, *policy, values, tol > 0 ? tol : 1e-9);
        *out_json = dup_json(certify_report_to_json(game->spec, *policy->space, report));
    });
}

gcr_status gcr_simulate(const gcr_game* game, const char* profile_json, const char* s0, char** out_json) {
    return guarded([&] {
        require(game && out_json, "game and out must be non-null");
        Profile profile = profile_for_simulation(game, profile_json);
        State start = start_state(game, s0);
        History h = simulate(game->spec, profile, start);
        *out_json = dup_json(history_to_json(game->spec, h));
    });
}

gcr_status gcr_simulate_dot(const gcr_game* game, const char* profile_json, const char* s0, char** out_dot) {
    return guarded([&] {
        require(game && out_dot, "game and out must be non-null");
        Profile profile = profile_for_simulation(game, profile_json);
        State start = start_state(game, s0);
        History h = simulate(game->spec, profile, start);
        *out_dot = dup_string(history_to_dot(game->spec, h));
    });
}

gcr_status gcr_threat_verify(const gcr_game* game, const char* s0, double tol, char** out_json) {
    return guarded([&] {
        require(game && out_json, "game and out must be non-null");
        State start = start_state(game, s0);
        ThreatProfile profile = build_threat_profile(game->spec);
        ThreatReport report = verify_threat_ne(game->spec, profile, start, tol > 0 ? tol : 1e-9);
        *out_json = dup_json(threat_report_to_json(report));
    });
}

gcr_status gcr_construct(const gcr_game* game, const char* kind, const char* s0, char** out_json) {
    return guarded([&] {
        require(game && kind && out_json, "game, kind and out must be non-null");
        const std::string what = kind;
        ordered_json j;
        j["kind"] = what;
        if (what == "path" || what == "tree") {
            State start = what == "path" ? start_state(game, s0)
                                         : ((s0 && *s0) || game->preset_s0 ? start_state(game, s0) : State::terminal());
            ConstructedProfile built = what == "path"
                                           ? path_profile(game->spec, start)
                                           : tree_profile(game->spec);
            j["profile"] = policy_to_json(*built.policy);
            if (!start.is_terminal()) {
                CaptureOutcome outcome = capture_function(game->spec, start, built.strategies);
                j["outcome"] = capture_outcome_to_json(game->spec, outcome);
            }
        } else if (what == "trigger") {
            State start = start_state(game, s0);
            Profile built = trigger_profile(game->spec, start);
            CaptureOutcome outcome = capture_function(game->spec, start, built);
            j["outcome"] = capture_outcome_to_json(game->spec, outcome);
        } else if (what == "noncap") {
            NoncapturingNE built = noncapturing_ne_construction(game->spec.graph(), game->spec.gamma());
            GameSpec spec3 = GameSpec::chain_game(game->spec.graph(), 3, game->spec.gamma());
            j["s0"] = built.s0.key();
            j["x1"] = built.x1;
            j["x2"] = built.x2;
            CaptureOutcome outcome = capture_function(spec3, built.s0, built.strategies);
            j["outcome"] = capture_outcome_to_json(spec3, outcome);
            ordered_json checks = ordered_json::array();
            for (int n = 1; n <= 3; ++n) {
                Profile opponents(3);
                for (int t = 1; t <= 3; ++t)
                    if (t != n) opponents[static_cast<size_t>(t) - 1] = built.strategies[static_cast<size_t>(t) - 1];
                BestResponseResult br = best_response(spec3, opponents, n, built.s0);
                ordered_json e;
                e["player"] = n;
                e["best_response"] = br.value;
                checks.push_back(std::move(e));
            }
            j["best_responses"] = std::move(checks);
        } else {
            fail(ErrorCode::invalid_argument, "kind must be path|tree|trigger|noncap");
        }
        *out_json = dup_json(j);
    });
}

} // extern "C"
