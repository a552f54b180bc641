/* gridbond — exact domination and bondage numbers of grid-like path
 * products.
 *
 * C interface over the solver core. All functions returning gb_status
 * report GB_OK on success; on any other status the output parameters are
 * untouched and gb_last_error() describes the failure (thread-local).
 *
 * Vertex indices at this boundary are 1-based. Edge lists are flat arrays
 * of endpoint pairs: edges[2*i] and edges[2*i+1] are the endpoints of the
 * i-th edge.
 */
#ifndef GRIDBOND_H
#define GRIDBOND_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gb_status {
    GB_OK = 0,
    GB_ERR_INVALID_ARGUMENT = 1,
    GB_ERR_INVALID_EDGE = 2,
    GB_ERR_NO_EDGES = 3,
    GB_ERR_PARSE = 4,
    GB_ERR_IO = 5,
    GB_ERR_ENUMERATION_INCOMPLETE = 6,
    GB_ERR_INTERNAL = 7
} gb_status;

typedef struct gb_graph gb_graph;
typedef struct gb_gamma_family gb_gamma_family;
typedef struct gb_bondage_result gb_bondage_result;
typedef struct gb_report gb_report;

const char* gb_version(void);
/* Message for the most recent failing call on this thread. */
const char* gb_last_error(void);
void gb_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

gb_status gb_graph_path(int32_t n, gb_graph** out);
/* kind: "strong" | "direct" | "cartesian"; factors are paths P_n and P_m
 * with the row-major labeling (i, j) -> (i-1)*m + j, 1-based. */
gb_status gb_graph_product(const char* kind, int32_t n, int32_t m, gb_graph** out);
gb_status gb_graph_from_edges(int32_t order, const int32_t* edges, int64_t edge_count,
                              gb_graph** out);
/* Text format: "c" comments, "p edge <order> <edges>", "e <u> <v>" lines. */
gb_status gb_graph_read_file(const char* path, gb_graph** out);
gb_status gb_graph_write_file(const gb_graph* g, const char* path);
void gb_graph_free(gb_graph* g);

int32_t gb_graph_order(const gb_graph* g);
int64_t gb_graph_edge_count(const gb_graph* g);
/* -1 when u and v lie in different components. */
gb_status gb_graph_distance(const gb_graph* g, int32_t u, int32_t v, int32_t* out);
gb_status gb_graph_remove_edges(const gb_graph* g, const int32_t* edges, int64_t edge_count,
                                gb_graph** out);

/* ---- domination ------------------------------------------------------ */

gb_status gb_domination_number(const gb_graph* g, int32_t* out);
gb_status gb_is_dominating(const gb_graph* g, const int32_t* vertices, int64_t count,
                           int32_t* out);

/* All minimum dominating sets, up to cap (0: default 100000). */
gb_status gb_gamma_sets(const gb_graph* g, int64_t cap, gb_gamma_family** out);
/* Only those whose closed neighborhoods are pairwise disjoint. */
gb_status gb_gamma_sets_property_p(const gb_graph* g, int64_t cap, gb_gamma_family** out);
int32_t gb_gamma_family_gamma(const gb_gamma_family* f);
int64_t gb_gamma_family_count(const gb_gamma_family* f);
int32_t gb_gamma_family_truncated(const gb_gamma_family* f);
/* Fills `out` with the gamma 1-based members of set `index`. */
gb_status gb_gamma_family_set(const gb_gamma_family* f, int64_t index, int32_t* out);
void gb_gamma_family_free(gb_gamma_family* f);

gb_status gb_max_disjoint_gamma_sets(const gb_graph* g, int64_t cap, int32_t* out);

/* ---- bondage --------------------------------------------------------- */

typedef struct gb_solve_options {
    int32_t workers;        /* 0: hardware concurrency */
    int32_t k_max;          /* 0: min of the two lemma bounds */
    int32_t deterministic;  /* nonzero: reproducible witness (single scan) */
    int64_t gamma_set_cap;  /* 0: default 100000 */
    int64_t time_budget_ms; /* 0: unlimited */
} gb_solve_options;

void gb_solve_options_init(gb_solve_options* opts);

gb_status gb_lemma1_bound(const gb_graph* g, int32_t* out);
gb_status gb_lemma2_bound(const gb_graph* g, int32_t* out);
gb_status gb_is_bondage_set(const gb_graph* g, const int32_t* edges, int64_t edge_count,
                            int32_t* out);

gb_status gb_bondage(const gb_graph* g, const gb_solve_options* opts, gb_bondage_result** out);
int32_t gb_bondage_is_exact(const gb_bondage_result* r);
/* Exact value when exact; otherwise the largest k with all k-subsets ruled
 * out (the value is > that). */
int32_t gb_bondage_value(const gb_bondage_result* r);
int64_t gb_bondage_witness_size(const gb_bondage_result* r);
gb_status gb_bondage_witness(const gb_bondage_result* r, int32_t* out_edges);
uint64_t gb_bondage_evaluated_subsets(const gb_bondage_result* r);
uint64_t gb_bondage_cache_hits(const gb_bondage_result* r);
void gb_bondage_result_free(gb_bondage_result* r);

/* ---- closed-form oracle ---------------------------------------------- */

typedef struct gb_prediction {
    int32_t exact; /* nonzero: value holds; zero: [low, high] interval */
    int32_t value;
    int32_t low;
    int32_t high;
    int32_t has_conjecture;
    int32_t conjecture;
    char source[32]; /* stable citation tag, e.g. "thm:strong-b1" */
} gb_prediction;

int32_t gb_gamma_path_formula(int32_t n);
gb_status gb_gamma_strong_formula(int32_t n, int32_t m, int32_t* out);
/* kind: "strong" | "direct". */
gb_status gb_predict_bondage(const char* kind, int32_t n, int32_t m, gb_prediction* out);
/* Constructive bondage witness for strong grids; count 0 when the residue
 * class has no construction. out_edges must hold 8 int32 (4 edges). */
gb_status gb_witness_edges_strong(int32_t n, int32_t m, int32_t* out_count, int32_t* out_edges);

/* ---- verification ---------------------------------------------------- */

/* kind: "strong" | "direct" | "path" | "gadget". Runs the per-case verifier
 * over the inclusive (n, m) rectangle; "path" ignores the m range. cap 0 and
 * case_budget_ms 0 take the defaults (100000 sets, 60 s per case). In opts,
 * time_budget_ms caps the sweep as a whole: cases past it still run and
 * report their bondage checks as skipped. */
gb_status gb_verify(const char* kind, int32_t n_lo, int32_t n_hi, int32_t m_lo, int32_t m_hi,
                    const gb_solve_options* opts, int64_t case_budget_ms, gb_report** out);
/* format: "json" | "table" | "csv". The returned string is owned by the
 * caller; release with gb_string_free. */
gb_status gb_report_render(const gb_report* report, const char* format, char** out);
/* 0: all non-degenerate checks passed; 1: some check failed; 2: a resource
 * limit (time budget / enumeration cap) left checks undecided. */
int32_t gb_report_exit_code(const gb_report* report);
void gb_report_free(gb_report* report);

#ifdef __cplusplus
}
#endif

#endif /* GRIDBOND_H */
