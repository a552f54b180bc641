#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "gridbond.h"

namespace {

struct Graph {
    gb_graph* g = nullptr;
    ~Graph() { gb_graph_free(g); }
};

} // namespace

TEST_CASE("version and error strings") {
    CHECK(gb_version() != nullptr);
    CHECK(std::string(gb_version()) == "0.1.0");

    gb_graph* g = nullptr;
    CHECK(gb_graph_product("bogus", 3, 3, &g) == GB_ERR_INVALID_ARGUMENT);
    CHECK(std::string(gb_last_error()).find("bogus") != std::string::npos);
    CHECK(g == nullptr);
}

TEST_CASE("graph construction and queries") {
    Graph p;
    REQUIRE(gb_graph_path(5, &p.g) == GB_OK);
    CHECK(gb_graph_order(p.g) == 5);
    CHECK(gb_graph_edge_count(p.g) == 4);

    int32_t d = 0;
    REQUIRE(gb_graph_distance(p.g, 1, 5, &d) == GB_OK);
    CHECK(d == 4);
    CHECK(gb_graph_distance(p.g, 0, 5, &d) == GB_ERR_INVALID_ARGUMENT);

    Graph prod;
    REQUIRE(gb_graph_product("strong", 4, 5, &prod.g) == GB_OK);
    CHECK(gb_graph_order(prod.g) == 20);
    CHECK(gb_graph_edge_count(prod.g) == 55);

    Graph disc;
    REQUIRE(gb_graph_product("direct", 6, 5, &disc.g) == GB_OK);
    REQUIRE(gb_graph_distance(disc.g, 1, 2, &d) == GB_OK);
    CHECK(d == -1); // different components

    CHECK(gb_graph_path(0, &p.g) == GB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("from_edges and removal use 1-based endpoints") {
    const int32_t edges[] = {1, 2, 2, 3};
    Graph g;
    REQUIRE(gb_graph_from_edges(3, edges, 2, &g.g) == GB_OK);
    CHECK(gb_graph_edge_count(g.g) == 2);

    const int32_t cut[] = {1, 2};
    gb_graph* h = nullptr;
    REQUIRE(gb_graph_remove_edges(g.g, cut, 1, &h) == GB_OK);
    Graph guard{h};
    CHECK(gb_graph_edge_count(h) == 1);

    const int32_t missing[] = {1, 3};
    gb_graph* bad = nullptr;
    CHECK(gb_graph_remove_edges(g.g, missing, 1, &bad) == GB_ERR_INVALID_EDGE);
}

TEST_CASE("domination through the C surface") {
    Graph g;
    REQUIRE(gb_graph_product("strong", 4, 5, &g.g) == GB_OK);
    int32_t gamma = 0;
    REQUIRE(gb_domination_number(g.g, &gamma) == GB_OK);
    CHECK(gamma == 4);

    const int32_t set[] = {2, 5, 17, 20}; // {v1,v4} x {v2,v5}, 1-based flat
    int32_t flag = -1;
    REQUIRE(gb_is_dominating(g.g, set, 4, &flag) == GB_OK);
    CHECK(flag == 1);

    Graph p5;
    REQUIRE(gb_graph_path(5, &p5.g) == GB_OK);
    gb_gamma_family* family = nullptr;
    REQUIRE(gb_gamma_sets(p5.g, 0, &family) == GB_OK);
    CHECK(gb_gamma_family_gamma(family) == 2);
    CHECK(gb_gamma_family_count(family) == 3);
    CHECK(gb_gamma_family_truncated(family) == 0);
    int32_t members[2] = {0};
    REQUIRE(gb_gamma_family_set(family, 0, members) == GB_OK);
    CHECK(members[0] == 1);
    CHECK(members[1] == 4);
    gb_gamma_family_free(family);

    gb_gamma_family* pp = nullptr;
    REQUIRE(gb_gamma_sets_property_p(p5.g, 0, &pp) == GB_OK);
    CHECK(gb_gamma_family_count(pp) == 2);
    gb_gamma_family_free(pp);

    int32_t disjoint = 0;
    REQUIRE(gb_max_disjoint_gamma_sets(p5.g, 0, &disjoint) == GB_OK);
    CHECK(disjoint == 2);
    REQUIRE(gb_max_disjoint_gamma_sets(p5.g, 1, &disjoint) == GB_ERR_ENUMERATION_INCOMPLETE);
}

TEST_CASE("bondage through the C surface") {
    Graph g;
    REQUIRE(gb_graph_product("strong", 4, 5, &g.g) == GB_OK);

    int32_t lemma1 = 0, lemma2 = 0;
    REQUIRE(gb_lemma1_bound(g.g, &lemma1) == GB_OK);
    REQUIRE(gb_lemma2_bound(g.g, &lemma2) == GB_OK);
    CHECK(lemma1 <= 5);
    CHECK(lemma2 >= 1);

    gb_solve_options opts;
    gb_solve_options_init(&opts);
    opts.deterministic = 1;
    gb_bondage_result* r = nullptr;
    REQUIRE(gb_bondage(g.g, &opts, &r) == GB_OK);
    CHECK(gb_bondage_is_exact(r) == 1);
    CHECK(gb_bondage_value(r) == 3);
    REQUIRE(gb_bondage_witness_size(r) == 3);
    int32_t witness[6] = {0};
    REQUIRE(gb_bondage_witness(r, witness) == GB_OK);
    int32_t flag = -1;
    REQUIRE(gb_is_bondage_set(g.g, witness, 3, &flag) == GB_OK);
    CHECK(flag == 1);
    CHECK(gb_bondage_evaluated_subsets(r) > 0);
    gb_bondage_result_free(r);

    Graph single;
    REQUIRE(gb_graph_path(1, &single.g) == GB_OK);
    gb_bondage_result* none = nullptr;
    CHECK(gb_bondage(single.g, &opts, &none) == GB_ERR_NO_EDGES);
}

TEST_CASE("oracle through the C surface") {
    CHECK(gb_gamma_path_formula(7) == 3);
    int32_t gs = 0;
    REQUIRE(gb_gamma_strong_formula(4, 5, &gs) == GB_OK);
    CHECK(gs == 4);

    gb_prediction pred{};
    REQUIRE(gb_predict_bondage("strong", 4, 5, &pred) == GB_OK);
    CHECK(pred.exact == 1);
    CHECK(pred.value == 3);
    CHECK(std::strcmp(pred.source, "thm:strong-b3") == 0);

    REQUIRE(gb_predict_bondage("strong", 4, 7, &pred) == GB_OK);
    CHECK(pred.exact == 0);
    CHECK(pred.low == 2);
    CHECK(pred.high == 5);
    CHECK(pred.has_conjecture == 1);
    CHECK(pred.conjecture == 5);

    REQUIRE(gb_predict_bondage("direct", 3, 9, &pred) == GB_OK);
    CHECK(pred.exact == 1);
    CHECK(pred.value == 1);

    int32_t count = -1;
    int32_t edges[8] = {0};
    REQUIRE(gb_witness_edges_strong(3, 5, &count, edges) == GB_OK);
    CHECK(count == 1);
    REQUIRE(gb_witness_edges_strong(4, 7, &count, edges) == GB_OK);
    CHECK(count == 0); // open class: no construction
}

TEST_CASE("graph file io through the C surface") {
    Graph g;
    REQUIRE(gb_graph_product("cartesian", 3, 3, &g.g) == GB_OK);
    const char* path = "capi_roundtrip.gr";
    REQUIRE(gb_graph_write_file(g.g, path) == GB_OK);
    Graph back;
    REQUIRE(gb_graph_read_file(path, &back.g) == GB_OK);
    CHECK(gb_graph_order(back.g) == 9);
    CHECK(gb_graph_edge_count(back.g) == 12);
    std::remove(path);

    gb_graph* missing = nullptr;
    CHECK(gb_graph_read_file("does-not-exist.gr", &missing) == GB_ERR_IO);
}

TEST_CASE("verification reports through the C surface") {
    gb_solve_options opts;
    gb_solve_options_init(&opts);
    opts.workers = 2;

    gb_report* report = nullptr;
    REQUIRE(gb_verify("strong", 2, 4, 2, 4, &opts, 0, &report) == GB_OK);
    CHECK(gb_report_exit_code(report) == 0);

    char* text = nullptr;
    REQUIRE(gb_report_render(report, "json", &text) == GB_OK);
    std::string json_text(text);
    gb_string_free(text);
    CHECK(json_text.find("\"cases\"") != std::string::npos);
    CHECK(json_text.find("\"summary\"") != std::string::npos);

    REQUIRE(gb_report_render(report, "csv", &text) == GB_OK);
    std::string csv_text(text);
    gb_string_free(text);
    CHECK(csv_text.rfind("n,m,gamma", 0) == 0);

    CHECK(gb_report_render(report, "yaml", &text) == GB_ERR_INVALID_ARGUMENT);
    gb_report_free(report);

    gb_report* bad = nullptr;
    CHECK(gb_verify("bogus", 2, 3, 2, 3, &opts, 0, &bad) == GB_ERR_INVALID_ARGUMENT);
}
