// Command-line front end for the GCR solver. Talks to the shared library
// exclusively through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "gcr/gcr.h"

namespace {

using nlohmann::ordered_json;

// exit codes: 0 ok, 2 validation/input, 3 solver non-convergence, 4 file I/O, 5 other
int exit_code_for(gcr_status status) {
    switch (status) {
        case GCR_OK: return 0;
        case GCR_ERROR_NO_CONVERGENCE: return 3;
        case GCR_ERROR_INVALID_ARGUMENT:
        case GCR_ERROR_PARSE:
        case GCR_ERROR_PRECONDITION:
        case GCR_ERROR_STATE_CAP:
        case GCR_ERROR_ILLEGAL_ACTION:
        case GCR_ERROR_NOT_FOUND: return 2;
        default: return 5;
    }
}

[[noreturn]] void die(gcr_status status, const std::string& message) {
    ordered_json err;
    err["error"]["status"] = gcr_status_name(status);
    err["error"]["message"] = message;
    std::cerr << err.dump(2) << "\n";
    std::exit(exit_code_for(status));
}

[[noreturn]] void die_io(const std::string& message) {
    ordered_json err;
    err["error"]["status"] = "io_error";
    err["error"]["message"] = message;
    std::cerr << err.dump(2) << "\n";
    std::exit(4);
}

void check(gcr_status status) {
    if (status != GCR_OK) die(status, gcr_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die_io("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const char* text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) die_io("cannot write '" + out_path + "'");
    out << text;
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { gcr_free_string(ptr); }
};

struct OwnedGraph {
    gcr_graph* ptr = nullptr;
    ~OwnedGraph() { gcr_graph_free(ptr); }
};

struct OwnedGame {
    gcr_game* ptr = nullptr;
    ~OwnedGame() { gcr_game_free(ptr); }
};

// Shared option bundle; each subcommand wires in the flags it uses.
struct Args {
    std::string graph_file;
    std::string preset;
    std::string scheme = "chain";
    std::string s0;
    std::string out;
    std::string dot;
    std::string profile_file;
    std::string method = "exact";
    double gamma = 0.0;
    double tol = 1e-9;
    int max_iters = 1000000;
    int players = 0; // no silent default: required whenever --graph builds a game
    int aux_player = 0;
};

void load_graph(const Args& a, OwnedGraph& graph) {
    if (!a.preset.empty()) {
        check(gcr_preset_graph(a.preset.c_str(), &graph.ptr));
        return;
    }
    if (a.graph_file.empty()) die(GCR_ERROR_INVALID_ARGUMENT, "either --graph or --preset is required");
    check(gcr_graph_parse(read_file(a.graph_file).c_str(), &graph.ptr));
}

void load_game(const Args& a, OwnedGame& game, bool two_player = false) {
    if (!a.preset.empty()) {
        check(gcr_preset(a.preset.c_str(), a.gamma, &game.ptr, nullptr));
        return;
    }
    OwnedGraph graph;
    load_graph(a, graph);
    if (!two_player && a.players == 0)
        die(GCR_ERROR_INVALID_ARGUMENT, "--players is required with --graph (there is no default token count)");
    const int tokens = two_player ? 2 : a.players;
    const std::string scheme = two_player ? "two" : a.scheme;
    check(gcr_game_create(graph.ptr, tokens, a.gamma, scheme.c_str(), &game.ptr));
}

std::string solver_options(const Args& a) {
    ordered_json j;
    j["method"] = a.method;
    j["tol"] = a.tol;
    j["max_iters"] = a.max_iters;
    return j.dump();
}

void add_gamma(CLI::App* cmd, Args& a) {
    cmd->add_option("--gamma", a.gamma, "discount factor in (0,1)")->required();
}

void add_graph_source(CLI::App* cmd, Args& a) {
    cmd->add_option("--graph", a.graph_file, "edge-list file");
    cmd->add_option("--preset", a.preset, "named preset (fig1, fig2, fig5, fig6-star, p2..p8, c3..c8, star3)");
}

void add_out(CLI::App* cmd, Args& a) { cmd->add_option("--out", a.out, "output file (default: stdout)"); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Cops and Robbers: values, equilibria and scripted pursuits on graphs"};
    app.require_subcommand(1);
    Args a;

    auto* classify = app.add_subcommand("classify", "tree/path classification of a graph");
    add_graph_source(classify, a);
    classify->add_option("--dot", a.dot, "also write the graph as DOT to this file");
    add_out(classify, a);

    auto* copwin = app.add_subcommand("copwin", "decide whether one cop suffices on the graph");
    add_graph_source(copwin, a);
    add_gamma(copwin, a);
    add_out(copwin, a);

    auto* solve2 = app.add_subcommand("solve2", "solve the two-player pursuit game exactly or by value iteration");
    add_graph_source(solve2, a);
    add_gamma(solve2, a);
    solve2->add_option("--method", a.method, "exact|vi")->check(CLI::IsMember({"exact", "vi"}));
    solve2->add_option("--tol", a.tol, "value-iteration tolerance");
    solve2->add_option("--max-iters", a.max_iters, "value-iteration sweep limit");
    add_out(solve2, a);

    auto* solve_aux = app.add_subcommand("solve-aux", "solve the auxiliary zero-sum game of one player");
    add_graph_source(solve_aux, a);
    add_gamma(solve_aux, a);
    solve_aux->add_option("--player", a.aux_player, "token that plays MAX")->required();
    solve_aux->add_option("--players", a.players, "token count (required with --graph)");
    solve_aux->add_option("--scheme", a.scheme, "two|chain|cyclic|<json>");
    solve_aux->add_option("--method", a.method, "exact|vi")->check(CLI::IsMember({"exact", "vi"}));
    solve_aux->add_option("--tol", a.tol, "value-iteration tolerance");
    solve_aux->add_option("--max-iters", a.max_iters, "value-iteration sweep limit");
    add_out(solve_aux, a);

    auto* solve_ne = app.add_subcommand("solve-ne", "positional Nash equilibrium by certified fixed-point sweeps");
    add_graph_source(solve_ne, a);
    add_gamma(solve_ne, a);
    solve_ne->add_option("--players", a.players, "token count (required with --graph)");
    solve_ne->add_option("--scheme", a.scheme, "two|chain|cyclic|<json>");
    solve_ne->add_option("--tol", a.tol, "certification tolerance");
    solve_ne->add_option("--max-iters", a.max_iters, "sweep limit");
    add_out(solve_ne, a);

    auto* certify = app.add_subcommand("certify", "one-shot-deviation check of a positional profile");
    add_graph_source(certify, a);
    add_gamma(certify, a);
    certify->add_option("--players", a.players, "token count (required with --graph)");
    certify->add_option("--scheme", a.scheme, "two|chain|cyclic|<json>");
    certify->add_option("--profile", a.profile_file, "profile JSON file")->required();
    certify->add_option("--tol", a.tol, "tolerance");
    add_out(certify, a);

    auto* simulate = app.add_subcommand("simulate", "play a profile out and record the trace");
    add_graph_source(simulate, a);
    add_gamma(simulate, a);
    simulate->add_option("--players", a.players, "token count (required with --graph)");
    simulate->add_option("--scheme", a.scheme, "two|chain|cyclic|<json>");
    simulate->add_option("--profile", a.profile_file, "profile JSON file (presets carry their own script)");
    simulate->add_option("--s0", a.s0, "start state \"v1,...,vN,mover\" (presets carry a default)");
    simulate->add_option("--dot", a.dot, "also write the trace as DOT to this file");
    add_out(simulate, a);

    auto* threat = app.add_subcommand("threat-ne", "build the threat profile and verify it from s0");
    add_graph_source(threat, a);
    add_gamma(threat, a);
    threat->add_option("--players", a.players, "token count (required with --graph)");
    threat->add_option("--s0", a.s0, "start state (presets carry a default)");
    threat->add_option("--tol", a.tol, "tolerance");
    bool verify_flag = true;
    threat->add_flag("--verify", verify_flag, "verify by exact best response (always on)");
    add_out(threat, a);

    std::string construct_kind;
    auto* construct = app.add_subcommand("construct", "build a scripted profile (path, tree, trigger, noncap)");
    construct->add_option("kind", construct_kind, "path|tree|trigger|noncap")
        ->required()
        ->check(CLI::IsMember({"path", "tree", "trigger", "noncap"}));
    add_graph_source(construct, a);
    add_gamma(construct, a);
    construct->add_option("--s0", a.s0, "start state for path/trigger/tree simulation");
    add_out(construct, a);

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) {
        OwnedGraph graph;
        load_graph(a, graph);
        int is_tree = 0, is_path = 0;
        check(gcr_graph_classify(graph.ptr, &is_tree, &is_path));
        ordered_json j;
        j["vertices"] = gcr_graph_vertices(graph.ptr);
        j["edges"] = gcr_graph_edges(graph.ptr);
        j["is_tree"] = is_tree != 0;
        j["is_path"] = is_path != 0;
        write_output(a.out, (j.dump(2) + "\n").c_str());
        if (!a.dot.empty()) {
            OwnedString dot;
            check(gcr_graph_dot(graph.ptr, &dot.ptr));
            write_output(a.dot, dot.ptr);
        }
    } else if (copwin->parsed()) {
        OwnedGraph graph;
        load_graph(a, graph);
        int win = 0;
        check(gcr_copwin(graph.ptr, a.gamma, &win));
        ordered_json j;
        j["copwin"] = win != 0;
        write_output(a.out, (j.dump(2) + "\n").c_str());
    } else if (solve2->parsed()) {
        OwnedGame game;
        load_game(a, game, /*two_player=*/true);
        OwnedString result;
        check(gcr_solve_two(game.ptr, solver_options(a).c_str(), &result.ptr));
        write_output(a.out, result.ptr);
    } else if (solve_aux->parsed()) {
        OwnedGame game;
        load_game(a, game);
        OwnedString result;
        check(gcr_solve_aux(game.ptr, a.aux_player, solver_options(a).c_str(), &result.ptr));
        write_output(a.out, result.ptr);
    } else if (solve_ne->parsed()) {
        OwnedGame game;
        load_game(a, game);
        OwnedString result;
        check(gcr_solve_ne(game.ptr, solver_options(a).c_str(), &result.ptr));
        write_output(a.out, result.ptr);
    } else if (certify->parsed()) {
        OwnedGame game;
        load_game(a, game);
        OwnedString result;
        const std::string profile = read_file(a.profile_file);
        check(gcr_certify(game.ptr, profile.c_str(), a.tol, &result.ptr));
        write_output(a.out, result.ptr);
    } else if (simulate->parsed()) {
        OwnedGame game;
        load_game(a, game);
        const std::string profile = a.profile_file.empty() ? std::string() : read_file(a.profile_file);
        OwnedString result;
        check(gcr_simulate(game.ptr, profile.empty() ? nullptr : profile.c_str(),
                           a.s0.empty() ? nullptr : a.s0.c_str(), &result.ptr));
        write_output(a.out, result.ptr);
        if (!a.dot.empty()) {
            OwnedString dot;
            check(gcr_simulate_dot(game.ptr, profile.empty() ? nullptr : profile.c_str(),
                                   a.s0.empty() ? nullptr : a.s0.c_str(), &dot.ptr));
            write_output(a.dot, dot.ptr);
        }
    } else if (threat->parsed()) {
        OwnedGame game;
        load_game(a, game);
        OwnedString result;
        check(gcr_threat_verify(game.ptr, a.s0.empty() ? nullptr : a.s0.c_str(), a.tol, &result.ptr));
        write_output(a.out, result.ptr);
    } else if (construct->parsed()) {
        Args game_args = a;
        if (game_args.preset.empty()) game_args.players = 3; // the constructions are defined in the 3-token chain game
        OwnedGame game;
        load_game(game_args, game);
        OwnedString result;
        check(gcr_construct(game.ptr, construct_kind.c_str(), a.s0.empty() ? nullptr : a.s0.c_str(), &result.ptr));
        write_output(a.out, result.ptr);
    }
    return 0;
}
