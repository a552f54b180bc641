/* Compiled as C89-compatible C: proves the public header and shared
 * library are usable from plain C. */
#include <stdio.h>
#include <string.h>

#include "gridbond.h"

static int failures = 0;

static void expect(int ok, const char* what) {
    if (!ok) {
        fprintf(stderr, "FAIL: %s (%s)\n", what, gb_last_error());
        ++failures;
    }
}

int main(void) {
    gb_graph* g = NULL;
    int32_t gamma = 0;
    gb_solve_options opts;
    gb_bondage_result* r = NULL;
    gb_prediction pred;
    gb_report* report = NULL;
    char* text = NULL;

    expect(gb_graph_product("strong", 4, 5, &g) == GB_OK, "build product");
    expect(gb_graph_order(g) == 20, "order");
    expect(gb_domination_number(g, &gamma) == GB_OK && gamma == 4, "gamma");

    gb_solve_options_init(&opts);
    opts.deterministic = 1;
    expect(gb_bondage(g, &opts, &r) == GB_OK, "bondage");
    expect(gb_bondage_is_exact(r) && gb_bondage_value(r) == 3, "bondage value");
    gb_bondage_result_free(r);
    gb_graph_free(g);

    expect(gb_predict_bondage("strong", 4, 5, &pred) == GB_OK, "prediction");
    expect(pred.exact == 1 && pred.value == 3, "prediction value");
    expect(strcmp(pred.source, "thm:strong-b3") == 0, "prediction tag");

    expect(gb_verify("path", 2, 8, 2, 2, &opts, 0, &report) == GB_OK, "verify");
    expect(gb_report_exit_code(report) == 0, "report exit code");
    expect(gb_report_render(report, "table", &text) == GB_OK, "render");
    expect(text != NULL && strstr(text, "path") != NULL, "render content");
    gb_string_free(text);
    gb_report_free(report);

    expect(gb_graph_path(0, &g) == GB_ERR_INVALID_ARGUMENT, "error path");

    if (failures == 0) printf("c client ok\n");
    return failures;
}
