#include "gridbond.h"

#include <cstdio>
#include <cstring>
#include <string>

#include "core/bondage.hpp"
#include "core/domination.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/oracle.hpp"
#include "core/verify.hpp"
#include "core/version.hpp"

using namespace gridbond;

extern "C" {

struct gb_graph {
    Graph graph;
    std::optional<GridSpec> grid; // set when built as a product; enables
                                  // the single-edge symmetry reduction
};

struct gb_gamma_family {
    GammaSetFamily family;
};

struct gb_bondage_result {
    BondageResult result;
};

struct gb_report {
    SweepReport report;
};

} // extern "C"

namespace {

thread_local std::string g_last_error;

gb_status map_code(Errc code) {
    switch (code) {
    case Errc::invalid_argument: return GB_ERR_INVALID_ARGUMENT;
    case Errc::invalid_edge: return GB_ERR_INVALID_EDGE;
    case Errc::no_edges: return GB_ERR_NO_EDGES;
    case Errc::no_pair: return GB_ERR_NO_EDGES;
    case Errc::parse_error: return GB_ERR_PARSE;
    case Errc::io_error: return GB_ERR_IO;
    case Errc::enumeration_incomplete: return GB_ERR_ENUMERATION_INCOMPLETE;
    }
    return GB_ERR_INTERNAL;
}

template <typename F>
gb_status guarded(F&& f) noexcept {
    try {
        f();
        return GB_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GB_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return GB_ERR_INTERNAL;
    }
}

gb_status invalid(const char* message) {
    g_last_error = message;
    return GB_ERR_INVALID_ARGUMENT;
}

// 1-based flat endpoint pairs -> canonical 0-based edges
EdgeSet edges_from_pairs(const gb_graph* g, const int32_t* edges, int64_t edge_count) {
    if (edge_count < 0)
        fail(Errc::invalid_argument, "negative edge count");
    EdgeSet out;
    out.reserve(static_cast<std::size_t>(edge_count));
    for (int64_t i = 0; i < edge_count; ++i) {
        int u = edges[2 * i] - 1, v = edges[2 * i + 1] - 1;
        g->graph.check_vertex(u, "edge endpoint");
        g->graph.check_vertex(v, "edge endpoint");
        if (u == v)
            fail(Errc::invalid_edge, "self-loop at vertex " + std::to_string(u + 1));
        out.emplace_back(u, v);
    }
    return out;
}

VertexSet vertices_from_array(const gb_graph* g, const int32_t* vertices, int64_t count) {
    VertexSet out;
    out.reserve(static_cast<std::size_t>(count));
    for (int64_t i = 0; i < count; ++i) {
        int v = vertices[i] - 1;
        g->graph.check_vertex(v, "set member");
        out.push_back(v);
    }
    return out;
}

SolveOptions translate(const gb_solve_options* opts) {
    SolveOptions s;
    if (!opts) return s;
    s.workers = opts->workers;
    if (opts->k_max < 0) fail(Errc::invalid_argument, "k_max must be nonnegative");
    s.k_max = opts->k_max;
    s.deterministic = opts->deterministic != 0;
    if (opts->gamma_set_cap > 0) s.gamma_set_cap = opts->gamma_set_cap;
    if (opts->time_budget_ms > 0) s.time_budget = std::chrono::milliseconds(opts->time_budget_ms);
    return s;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* gb_version(void) { return kVersion; }

const char* gb_last_error(void) { return g_last_error.c_str(); }

void gb_string_free(char* s) { delete[] s; }

gb_status gb_graph_path(int32_t n, gb_graph** out) {
    if (!out) return invalid("null output pointer");
    return guarded([&] { *out = new gb_graph{path_graph(n), std::nullopt}; });
}

gb_status gb_graph_product(const char* kind, int32_t n, int32_t m, gb_graph** out) {
    if (!out || !kind) return invalid("null argument");
    return guarded([&] {
        auto pk = parse_product_kind(kind);
        if (!pk)
            fail(Errc::invalid_argument, std::string("unknown product kind '") + kind + "'");
        GridSpec grid{*pk, n, m};
        *out = new gb_graph{grid.build(), grid};
    });
}

gb_status gb_graph_from_edges(int32_t order, const int32_t* edges, int64_t edge_count,
                              gb_graph** out) {
    if (!out || (edge_count > 0 && !edges)) return invalid("null argument");
    return guarded([&] {
        EdgeSet es;
        es.reserve(static_cast<std::size_t>(edge_count));
        for (int64_t i = 0; i < edge_count; ++i)
            es.emplace_back(edges[2 * i] - 1, edges[2 * i + 1] - 1);
        *out = new gb_graph{Graph::from_edges(order, es), std::nullopt};
    });
}

gb_status gb_graph_read_file(const char* path, gb_graph** out) {
    if (!out || !path) return invalid("null argument");
    return guarded([&] { *out = new gb_graph{read_graph_file(path), std::nullopt}; });
}

gb_status gb_graph_write_file(const gb_graph* g, const char* path) {
    if (!g || !path) return invalid("null argument");
    return guarded([&] { write_graph_file(path, g->graph); });
}

void gb_graph_free(gb_graph* g) { delete g; }

int32_t gb_graph_order(const gb_graph* g) { return g ? g->graph.order() : 0; }

int64_t gb_graph_edge_count(const gb_graph* g) { return g ? g->graph.edge_count() : 0; }

gb_status gb_graph_distance(const gb_graph* g, int32_t u, int32_t v, int32_t* out) {
    if (!g || !out) return invalid("null argument");
    return guarded([&] {
        g->graph.check_vertex(u - 1, "vertex");
        g->graph.check_vertex(v - 1, "vertex");
        auto d = g->graph.distance(u - 1, v - 1);
        *out = d ? *d : -1;
    });
}

gb_status gb_graph_remove_edges(const gb_graph* g, const int32_t* edges, int64_t edge_count,
                                gb_graph** out) {
    if (!g || !out || (edge_count > 0 && !edges)) return invalid("null argument");
    return guarded([&] {
        EdgeSet es = edges_from_pairs(g, edges, edge_count);
        *out = new gb_graph{g->graph.remove_edges(es), std::nullopt};
    });
}

gb_status gb_domination_number(const gb_graph* g, int32_t* out) {
    if (!g || !out) return invalid("null argument");
    return guarded([&] { *out = domination_number(g->graph); });
}

gb_status gb_is_dominating(const gb_graph* g, const int32_t* vertices, int64_t count,
                           int32_t* out) {
    if (!g || !out || (count > 0 && !vertices)) return invalid("null argument");
    return guarded([&] {
        *out = is_dominating(g->graph, vertices_from_array(g, vertices, count)) ? 1 : 0;
    });
}

gb_status gb_gamma_sets(const gb_graph* g, int64_t cap, gb_gamma_family** out) {
    if (!g || !out) return invalid("null argument");
    return guarded([&] {
        *out = new gb_gamma_family{
            enumerate_gamma_sets(g->graph, cap > 0 ? cap : kDefaultGammaSetCap)};
    });
}

gb_status gb_gamma_sets_property_p(const gb_graph* g, int64_t cap, gb_gamma_family** out) {
    if (!g || !out) return invalid("null argument");
    return guarded([&] {
        *out = new gb_gamma_family{
            property_p_gamma_sets(g->graph, cap > 0 ? cap : kDefaultGammaSetCap)};
    });
}

int32_t gb_gamma_family_gamma(const gb_gamma_family* f) { return f ? f->family.gamma : -1; }

int64_t gb_gamma_family_count(const gb_gamma_family* f) {
    return f ? static_cast<int64_t>(f->family.sets.size()) : 0;
}

int32_t gb_gamma_family_truncated(const gb_gamma_family* f) {
    return f && f->family.truncated ? 1 : 0;
}

gb_status gb_gamma_family_set(const gb_gamma_family* f, int64_t index, int32_t* out) {
    if (!f || !out) return invalid("null argument");
    if (index < 0 || index >= static_cast<int64_t>(f->family.sets.size()))
        return invalid("set index out of range");
    const VertexSet& s = f->family.sets[static_cast<std::size_t>(index)];
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] + 1;
    return GB_OK;
}

void gb_gamma_family_free(gb_gamma_family* f) { delete f; }

gb_status gb_max_disjoint_gamma_sets(const gb_graph* g, int64_t cap, int32_t* out) {
    if (!g || !out) return invalid("null argument");
    return guarded([&] {
        *out = max_disjoint_gamma_sets(g->graph, cap > 0 ? cap : kDefaultGammaSetCap);
    });
}

void gb_solve_options_init(gb_solve_options* opts) {
    if (!opts) return;
    opts->workers = 0;
    opts->k_max = 0;
    opts->deterministic = 0;
    opts->gamma_set_cap = 0;
    opts->time_budget_ms = 0;
}

gb_status gb_lemma1_bound(const gb_graph* g, int32_t* out) {
    if (!g || !out) return invalid("null argument");
    return guarded([&] { *out = lemma1_bound(g->graph); });
}

gb_status gb_lemma2_bound(const gb_graph* g, int32_t* out) {
    if (!g || !out) return invalid("null argument");
    return guarded([&] { *out = lemma2_bound(g->graph); });
}

gb_status gb_is_bondage_set(const gb_graph* g, const int32_t* edges, int64_t edge_count,
                            int32_t* out) {
    if (!g || !out || (edge_count > 0 && !edges)) return invalid("null argument");
    return guarded([&] {
        *out = is_bondage_set(g->graph, edges_from_pairs(g, edges, edge_count)) ? 1 : 0;
    });
}

gb_status gb_bondage(const gb_graph* g, const gb_solve_options* opts, gb_bondage_result** out) {
    if (!g || !out) return invalid("null argument");
    return guarded([&] {
        SolveOptions solve = translate(opts);
        solve.grid = g->grid;
        *out = new gb_bondage_result{bondage_number(g->graph, solve)};
    });
}

int32_t gb_bondage_is_exact(const gb_bondage_result* r) { return r && r->result.exact() ? 1 : 0; }

int32_t gb_bondage_value(const gb_bondage_result* r) {
    if (!r) return -1;
    return r->result.exact() ? *r->result.value : r->result.ruled_out;
}

int64_t gb_bondage_witness_size(const gb_bondage_result* r) {
    return r && r->result.witness ? static_cast<int64_t>(r->result.witness->size()) : 0;
}

gb_status gb_bondage_witness(const gb_bondage_result* r, int32_t* out_edges) {
    if (!r || !out_edges) return invalid("null argument");
    if (!r->result.witness) return invalid("result has no witness");
    const EdgeSet& w = *r->result.witness;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out_edges[2 * i] = w[i].u + 1;
        out_edges[2 * i + 1] = w[i].v + 1;
    }
    return GB_OK;
}

uint64_t gb_bondage_evaluated_subsets(const gb_bondage_result* r) {
    return r ? r->result.evaluated_subsets : 0;
}

uint64_t gb_bondage_cache_hits(const gb_bondage_result* r) {
    return r ? r->result.cache_hits : 0;
}

void gb_bondage_result_free(gb_bondage_result* r) { delete r; }

int32_t gb_gamma_path_formula(int32_t n) { return n >= 1 ? gamma_path(n) : -1; }

gb_status gb_gamma_strong_formula(int32_t n, int32_t m, int32_t* out) {
    if (!out) return invalid("null argument");
    return guarded([&] { *out = gamma_strong(n, m); });
}

gb_status gb_predict_bondage(const char* kind, int32_t n, int32_t m, gb_prediction* out) {
    if (!kind || !out) return invalid("null argument");
    return guarded([&] {
        Prediction p;
        std::string k(kind);
        if (k == "strong")
            p = predict_bondage_strong(n, m);
        else if (k == "direct")
            p = predict_bondage_direct(n, m);
        else
            fail(Errc::invalid_argument, "unknown prediction kind '" + k + "'");
        out->exact = p.kind == Prediction::Kind::exact ? 1 : 0;
        out->value = p.value;
        out->low = p.low;
        out->high = p.high;
        out->has_conjecture = p.conjecture ? 1 : 0;
        out->conjecture = p.conjecture.value_or(0);
        std::snprintf(out->source, sizeof(out->source), "%s", p.source.c_str());
    });
}

gb_status gb_witness_edges_strong(int32_t n, int32_t m, int32_t* out_count, int32_t* out_edges) {
    if (!out_count || !out_edges) return invalid("null argument");
    return guarded([&] {
        auto witness = witness_bondage_set_strong(n, m);
        if (!witness) {
            *out_count = 0;
            return;
        }
        *out_count = static_cast<int32_t>(witness->size());
        for (std::size_t i = 0; i < witness->size(); ++i) {
            out_edges[2 * i] = (*witness)[i].u + 1;
            out_edges[2 * i + 1] = (*witness)[i].v + 1;
        }
    });
}

gb_status gb_verify(const char* kind, int32_t n_lo, int32_t n_hi, int32_t m_lo, int32_t m_hi,
                    const gb_solve_options* opts, int64_t case_budget_ms, gb_report** out) {
    if (!kind || !out) return invalid("null argument");
    return guarded([&] {
        VerifyOptions vo;
        vo.solve = translate(opts);
        // time_budget_ms caps the sweep as a whole; the per-case budget is
        // its own parameter
        vo.sweep_budget = vo.solve.time_budget;
        vo.solve.time_budget = std::chrono::milliseconds(0);
        if (opts && opts->gamma_set_cap > 0) vo.cap = opts->gamma_set_cap;
        if (case_budget_ms > 0) vo.case_budget = std::chrono::milliseconds(case_budget_ms);
        *out = new gb_report{sweep(kind, Range{n_lo, n_hi}, Range{m_lo, m_hi}, vo)};
    });
}

gb_status gb_report_render(const gb_report* report, const char* format, char** out) {
    if (!report || !format || !out) return invalid("null argument");
    return guarded([&] {
        auto fmt = parse_report_format(format);
        if (!fmt)
            fail(Errc::invalid_argument, std::string("unknown format '") + format + "'");
        *out = copy_string(render(report->report, *fmt));
    });
}

int32_t gb_report_exit_code(const gb_report* report) {
    return report ? report->report.exit_code() : 3;
}

void gb_report_free(gb_report* report) { delete report; }

} // extern "C"
