/* C API of the GCR pursuit-game solver library.
 *
 * All functions return a gcr_status; every non-OK status leaves a
 * human-readable message in gcr_last_error() (thread-local). Objects are
 * opaque handles released with their _free function. Strings returned
 * through char** out-parameters are heap-allocated JSON or DOT documents
 * and must be released with gcr_free_string().
 *
 * Rich results (value tables, traces, reports) travel as JSON documents;
 * the formats are described in the project README.
 */
#ifndef GCR_H
#define GCR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcr_status {
    GCR_OK = 0,
    GCR_ERROR_INVALID_ARGUMENT = 1,
    GCR_ERROR_PARSE = 2,
    GCR_ERROR_PRECONDITION = 3,
    GCR_ERROR_STATE_CAP = 4,
    GCR_ERROR_NO_CONVERGENCE = 5,
    GCR_ERROR_ILLEGAL_ACTION = 6,
    GCR_ERROR_NOT_FOUND = 7,
    GCR_ERROR_INTERNAL = 8
} gcr_status;

typedef struct gcr_graph gcr_graph;
typedef struct gcr_game gcr_game;

const char* gcr_status_name(gcr_status status);
const char* gcr_last_error(void);
void gcr_free_string(char* str);

/* ---- graphs ---- */

gcr_status gcr_graph_parse(const char* edge_list_text, gcr_graph** out);
gcr_status gcr_graph_path(int vertices, gcr_graph** out);
gcr_status gcr_graph_cycle(int vertices, gcr_graph** out);
gcr_status gcr_graph_star(int leaves, gcr_graph** out);
/* Graph of a named preset (see gcr_preset). */
gcr_status gcr_preset_graph(const char* name, gcr_graph** out);
void gcr_graph_free(gcr_graph* g);

int gcr_graph_vertices(const gcr_graph* g);
int gcr_graph_edges(const gcr_graph* g);
gcr_status gcr_graph_distance(const gcr_graph* g, int u, int v, int* out);
gcr_status gcr_graph_median(const gcr_graph* g, int x, int y, int z, int* out);
gcr_status gcr_graph_classify(const gcr_graph* g, int* is_tree, int* is_path);
gcr_status gcr_graph_dot(const gcr_graph* g, char** out);

/* ---- games ----
 * scheme: "two", "chain", "cyclic", or a generalized-scheme JSON object.
 */
gcr_status gcr_game_create(const gcr_graph* g, int tokens, double gamma, const char* scheme, gcr_game** out);
void gcr_game_free(gcr_game* game);
gcr_status gcr_game_state_count(const gcr_game* game, unsigned long long* out);

/* Presets bundle a game, a starting state and (for the scripted figures) a
 * built-in strategy profile. info_json: {"name","s0","note","has_script"}. */
gcr_status gcr_preset(const char* name, double gamma, gcr_game** out_game, char** info_json);

/* ---- solving ---- */

gcr_status gcr_copwin(const gcr_graph* g, double gamma, int* out);

/* options_json (may be NULL): {"method":"exact"|"vi", "tol":double,
 * "max_iters":int, "placement":bool} */
gcr_status gcr_solve_two(const gcr_game* game, const char* options_json, char** out_json);
gcr_status gcr_solve_aux(const gcr_game* game, int player, const char* options_json, char** out_json);

/* options_json (may be NULL): {"tol":double, "max_iters":int} */
gcr_status gcr_solve_ne(const gcr_game* game, const char* options_json, char** out_json);

/* profile_json: {"kind":"positional","actions":{"v1,...,vN,mover":vertex,...}}
 * (bare action maps are accepted too) */
gcr_status gcr_certify(const gcr_game* game, const char* profile_json, double tol, char** out_json);

/* s0: "v1,...,vN,mover". profile_json as for gcr_certify, or NULL to use the
 * preset's scripted profile (games created by gcr_preset only). */
gcr_status gcr_simulate(const gcr_game* game, const char* profile_json, const char* s0, char** out_json);
gcr_status gcr_simulate_dot(const gcr_game* game, const char* profile_json, const char* s0, char** out_dot);

gcr_status gcr_threat_verify(const gcr_game* game, const char* s0, double tol, char** out_json);

/* kind: "path" | "tree" | "trigger" | "noncap". s0 required for "path" and
 * "trigger", optional for "tree", ignored for "noncap". */
gcr_status gcr_construct(const gcr_game* game, const char* kind, const char* s0, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* GCR_H */
