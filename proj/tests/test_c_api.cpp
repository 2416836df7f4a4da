// Exercises the shared-library surface end to end: handles, error codes,
// JSON payloads.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "gcr/gcr.h"

using nlohmann::ordered_json;

static int failures = 0;

#define CHECK_TRUE(cond)                                                              \
    do {                                                                              \
        if (!(cond)) {                                                                \
            std::fprintf(stderr, "[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond);    \
            ++failures;                                                               \
        }                                                                             \
    } while (0)

#define CHECK_OK(expr) CHECK_TRUE((expr) == GCR_OK)

struct Str {
    char* p = nullptr;
    ~Str() { gcr_free_string(p); }
};

int main() {
    // graph lifecycle and validation
    gcr_graph* p3 = nullptr;
    CHECK_OK(gcr_graph_parse("3\n1 2\n2 3\n", &p3));
    CHECK_TRUE(gcr_graph_vertices(p3) == 3);
    CHECK_TRUE(gcr_graph_edges(p3) == 2);
    int d = -1;
    CHECK_OK(gcr_graph_distance(p3, 1, 3, &d));
    CHECK_TRUE(d == 2);
    int is_tree = 0, is_path = 0;
    CHECK_OK(gcr_graph_classify(p3, &is_tree, &is_path));
    CHECK_TRUE(is_tree == 1 && is_path == 1);

    gcr_graph* bad = nullptr;
    CHECK_TRUE(gcr_graph_parse("3\n1 2\n2 3\n1 3\n1 3\n", &bad) == GCR_ERROR_PARSE);
    CHECK_TRUE(std::strlen(gcr_last_error()) > 0);

    // copwin on the parsed path
    int win = -1;
    CHECK_OK(gcr_copwin(p3, 0.9, &win));
    CHECK_TRUE(win == 1);
    gcr_graph* c4 = nullptr;
    CHECK_OK(gcr_graph_cycle(4, &c4));
    CHECK_OK(gcr_copwin(c4, 0.9, &win));
    CHECK_TRUE(win == 0);

    // two-player solve, exact vs vi
    gcr_game* g2 = nullptr;
    CHECK_OK(gcr_game_create(p3, 2, 0.9, "two", &g2));
    unsigned long long count = 0;
    CHECK_OK(gcr_game_state_count(g2, &count));
    CHECK_TRUE(count == 18);
    {
        Str exact, vi;
        CHECK_OK(gcr_solve_two(g2, nullptr, &exact.p));
        CHECK_OK(gcr_solve_two(g2, "{\"method\":\"vi\",\"tol\":1e-9}", &vi.p));
        auto je = ordered_json::parse(exact.p);
        auto jv = ordered_json::parse(vi.p);
        CHECK_TRUE(je["capture_time"]["1,3,1"] == 3);
        const double ve = je["value"]["1,3,1"].get<double>();
        const double vv = jv["value"]["1,3,1"].get<double>();
        CHECK_TRUE(std::abs(ve - vv) < 1e-6);
        CHECK_TRUE(je["placement"]["cop_placement"] == 2);
    }

    // deterministic output: two identical calls, byte-identical documents
    {
        Str a, b;
        CHECK_OK(gcr_solve_two(g2, nullptr, &a.p));
        CHECK_OK(gcr_solve_two(g2, nullptr, &b.p));
        CHECK_TRUE(std::strcmp(a.p, b.p) == 0);
    }

    // equilibrium + certify round trip through JSON
    gcr_game* g3 = nullptr;
    CHECK_OK(gcr_game_create(p3, 3, 0.9, "chain", &g3));
    {
        Str ne;
        CHECK_OK(gcr_solve_ne(g3, nullptr, &ne.p));
        auto j = ordered_json::parse(ne.p);
        CHECK_TRUE(j["certified"] == true);
        Str cert;
        CHECK_OK(gcr_certify(g3, j["profile"].dump().c_str(), 1e-9, &cert.p));
        CHECK_TRUE(ordered_json::parse(cert.p)["pass"] == true);
    }

    // simulate with an explicit profile: stay-everywhere is legal and cycles
    {
        ordered_json profile;
        profile["kind"] = "positional";
        ordered_json actions = ordered_json::object();
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c)
                    for (int m = 1; m <= 3; ++m) {
                        if ((a == b) || (b == c)) continue; // capture states carry no action
                        const std::string key = std::to_string(a) + "," + std::to_string(b) + "," +
                                                std::to_string(c) + "," + std::to_string(m);
                        actions[key] = m == 1 ? a : (m == 2 ? b : c);
                    }
        profile["actions"] = actions;
        Str trace;
        CHECK_OK(gcr_simulate(g3, profile.dump().c_str(), "1,3,2,1", &trace.p));
        auto j = ordered_json::parse(trace.p);
        CHECK_TRUE(j["capture_time"] == "infinity");
        CHECK_TRUE(j["truncated"] == true);

        Str dot;
        CHECK_OK(gcr_simulate_dot(g3, profile.dump().c_str(), "1,3,2,1", &dot.p));
        CHECK_TRUE(std::strstr(dot.p, "digraph trace") != nullptr);
    }

    // presets: fig1 scripted simulation runs without an explicit profile
    {
        gcr_game* fig1 = nullptr;
        Str info;
        CHECK_OK(gcr_preset("fig1", 0.9, &fig1, &info.p));
        auto j = ordered_json::parse(info.p);
        CHECK_TRUE(j["has_script"] == true);
        CHECK_TRUE(j["s0"] == "1,12,2,3");
        Str trace;
        CHECK_OK(gcr_simulate(fig1, nullptr, nullptr, &trace.p));
        CHECK_TRUE(ordered_json::parse(trace.p)["capture_time"] == "infinity");
        gcr_game_free(fig1);
    }

    // threat verification through the C surface
    {
        gcr_graph* p4 = nullptr;
        CHECK_OK(gcr_graph_path(4, &p4));
        gcr_game* game = nullptr;
        CHECK_OK(gcr_game_create(p4, 3, 0.9, "chain", &game));
        Str report;
        CHECK_OK(gcr_threat_verify(game, "1,2,4,1", 1e-9, &report.p));
        CHECK_TRUE(ordered_json::parse(report.p)["pass"] == true);
        gcr_game_free(game);
        gcr_graph_free(p4);
    }

    // constructions: noncap on C4
    {
        gcr_game* game = nullptr;
        CHECK_OK(gcr_game_create(c4, 3, 0.9, "chain", &game));
        Str out;
        CHECK_OK(gcr_construct(game, "noncap", nullptr, &out.p));
        auto j = ordered_json::parse(out.p);
        CHECK_TRUE(j["s0"] == "1,3,1,1");
        CHECK_TRUE(j["outcome"]["K"] == 0);
        gcr_game_free(game);
    }

    // generalized scheme from JSON: the cyclic relation spelled out by hand
    {
        gcr_graph* star = nullptr;
        CHECK_OK(gcr_graph_star(3, &star));
        const char* scheme =
            "{\"targets\":[[2],[3],[1]],\"pursuers\":[[3],[1],[2]],\"penalty_dominates\":true}";
        gcr_game* game = nullptr;
        CHECK_OK(gcr_game_create(star, 3, 0.9, scheme, &game));
        Str ne;
        CHECK_OK(gcr_solve_ne(game, nullptr, &ne.p));
        CHECK_TRUE(ordered_json::parse(ne.p)["certified"] == true);
        gcr_game_free(game);
        gcr_graph_free(star);
    }

    // the state cap honors the environment override
    {
        setenv("GCR_STATE_CAP", "10", 1);
        gcr_game* capped = nullptr;
        CHECK_OK(gcr_game_create(p3, 3, 0.9, "chain", &capped)); // creation is lazy
        unsigned long long n = 0;
        CHECK_TRUE(gcr_game_state_count(capped, &n) == GCR_ERROR_STATE_CAP); // 81 > 10
        gcr_game_free(capped);
        unsetenv("GCR_STATE_CAP");
    }

    // error paths: unknown preset, bad s0, non-cop-win precondition
    {
        gcr_game* game = nullptr;
        CHECK_TRUE(gcr_preset("fig9", 0.9, &game, nullptr) == GCR_ERROR_NOT_FOUND);
        Str out;
        CHECK_TRUE(gcr_simulate(g3, nullptr, "1,2,3,1", &out.p) == GCR_ERROR_INVALID_ARGUMENT); // no profile
        CHECK_TRUE(gcr_game_create(p3, 5, 0.9, "cyclic", &game) == GCR_ERROR_INVALID_ARGUMENT);
        gcr_game* gp3 = nullptr;
        CHECK_OK(gcr_game_create(p3, 3, 0.9, "chain", &gp3));
        CHECK_TRUE(gcr_construct(gp3, "noncap", nullptr, &out.p) == GCR_ERROR_PRECONDITION); // P3 is cop-win
        gcr_game_free(gp3);
    }

    gcr_game_free(g3);
    gcr_game_free(g2);
    gcr_graph_free(c4);
    gcr_graph_free(p3);

    if (failures == 0) std::printf("c api: all checks passed\n");
    return failures == 0 ? 0 : 1;
}
