// gridbond command-line front end. Talks to the solver library exclusively
// through the C interface in gridbond.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridbond.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitInputError = 3;

struct GraphHandle {
    gb_graph* g = nullptr;
    ~GraphHandle() { gb_graph_free(g); }
};

struct GraphSource {
    std::vector<std::string> product; // kind n m
    std::string file;

    bool from_product() const { return !product.empty(); }
    std::string kind() const { return product.at(0); }
    int n() const { return std::stoi(product.at(1)); }
    int m() const { return std::stoi(product.at(2)); }
};

struct CommonOpts {
    GraphSource source;
    std::string format = "table";
    std::string output;
    gb_solve_options solve{};
    double budget_seconds = 0.0;
    std::int64_t cap = 0;
};

[[noreturn]] void die(const std::string& message) {
    std::cerr << "gridbond: " << message << "\n";
    std::exit(kExitInputError);
}

void check(gb_status status) {
    if (status != GB_OK) die(gb_last_error());
}

void add_graph_source(CLI::App* cmd, GraphSource& source) {
    auto* product = cmd->add_option("--product", source.product,
                                    "grid product: <strong|direct|cartesian> <n> <m>")
                        ->expected(3);
    auto* file = cmd->add_option("--graph", source.file, "graph file (p/e text format)");
    product->excludes(file);
    file->excludes(product);
}

void add_solver_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--workers", opts.solve.workers, "worker threads (0: all cores)")
        ->envname("GRIDBOND_WORKERS");
    cmd->add_flag("--deterministic", [&opts](std::int64_t count) {
        opts.solve.deterministic = count > 0 ? 1 : 0;
    }, "reproducible witness selection (forces a single sequential scan)");
    cmd->add_option("--budget", opts.budget_seconds, "time budget in seconds (0: unlimited)");
    cmd->add_option("--cap", opts.cap, "gamma-set enumeration cap (default 100000)");
}

gb_graph* open_graph(const GraphSource& source) {
    gb_graph* g = nullptr;
    if (source.from_product()) {
        if (source.product.size() != 3) die("--product needs <kind> <n> <m>");
        int n = 0, m = 0;
        try {
            n = source.n();
            m = source.m();
        } catch (const std::exception&) {
            die("--product orders must be integers");
        }
        check(gb_graph_product(source.kind().c_str(), n, m, &g));
    } else if (!source.file.empty()) {
        check(gb_graph_read_file(source.file.c_str(), &g));
    } else {
        die("no graph given: use --product or --graph");
    }
    return g;
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output);
    if (!out) die("cannot open " + opts.output + " for writing");
    out << text;
}

// Grid-aware edge rendering: (i,j)-(k,l) for products, u-v for plain graphs.
std::string edge_text(const GraphSource& source, int u, int v) {
    if (!source.from_product()) return std::to_string(u) + "-" + std::to_string(v);
    int m = source.m();
    auto coord = [m](int flat0) {
        return "(" + std::to_string(flat0 / m + 1) + "," + std::to_string(flat0 % m + 1) + ")";
    };
    return coord(u - 1) + "-" + coord(v - 1);
}

json edge_json(const GraphSource& source, int u, int v) {
    if (!source.from_product()) return json::array({u, v});
    int m = source.m();
    auto coord = [m](int flat0) { return json::array({flat0 / m + 1, flat0 % m + 1}); };
    return json::array({coord(u - 1), coord(v - 1)});
}

std::string vertex_text(const GraphSource& source, int v) {
    if (!source.from_product()) return std::to_string(v);
    int m = source.m();
    return "(" + std::to_string((v - 1) / m + 1) + "," + std::to_string((v - 1) % m + 1) + ")";
}

gb_solve_options effective_options(const CommonOpts& opts) {
    gb_solve_options solve = opts.solve;
    if (opts.cap > 0) solve.gamma_set_cap = opts.cap;
    if (opts.budget_seconds > 0)
        solve.time_budget_ms = static_cast<std::int64_t>(opts.budget_seconds * 1000.0);
    return solve;
}

int run_gamma(const CommonOpts& opts) {
    GraphHandle handle{open_graph(opts.source)};
    int32_t gamma = 0;
    check(gb_domination_number(handle.g, &gamma));
    if (opts.format == "json") {
        json out{{"command", "gamma"}, {"gamma", gamma}};
        emit(opts, out.dump(2) + "\n");
    } else if (opts.format == "csv") {
        emit(opts, "gamma\n" + std::to_string(gamma) + "\n");
    } else {
        emit(opts, std::to_string(gamma) + "\n");
    }
    return kExitOk;
}

int run_bondage(const CommonOpts& opts) {
    GraphHandle handle{open_graph(opts.source)};
    gb_solve_options solve = effective_options(opts);
    gb_bondage_result* result = nullptr;
    check(gb_bondage(handle.g, &solve, &result));
    std::unique_ptr<gb_bondage_result, decltype(&gb_bondage_result_free)> result_guard(
        result, gb_bondage_result_free);

    bool exact = gb_bondage_is_exact(result) != 0;
    int32_t value = gb_bondage_value(result);
    std::vector<int32_t> witness(static_cast<std::size_t>(2 * gb_bondage_witness_size(result)));
    if (!witness.empty()) check(gb_bondage_witness(result, witness.data()));

    if (opts.format == "json") {
        json out{{"command", "bondage"},
                 {"exact", exact},
                 {"evaluated_subsets", gb_bondage_evaluated_subsets(result)},
                 {"cache_hits", gb_bondage_cache_hits(result)}};
        if (exact) {
            out["value"] = value;
            json edges = json::array();
            for (std::size_t i = 0; i + 1 < witness.size(); i += 2)
                edges.push_back(edge_json(opts.source, witness[i], witness[i + 1]));
            out["witness"] = std::move(edges);
        } else {
            out["ruled_out"] = value;
        }
        emit(opts, out.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string row = exact ? std::to_string(value) : (">" + std::to_string(value));
        emit(opts, "b\n" + row + "\n");
    } else {
        std::string text;
        if (exact) {
            text = "b = " + std::to_string(value) + "\n";
            if (!witness.empty()) {
                text += "witness:";
                for (std::size_t i = 0; i + 1 < witness.size(); i += 2)
                    text += " " + edge_text(opts.source, witness[i], witness[i + 1]);
                text += "\n";
            }
        } else {
            text = "b > " + std::to_string(value) + " (time budget reached)\n";
        }
        emit(opts, text);
    }
    return exact ? kExitOk : kExitResourceLimit;
}

int run_gamma_sets(const CommonOpts& opts, bool property_p_only) {
    GraphHandle handle{open_graph(opts.source)};
    gb_gamma_family* family = nullptr;
    check(property_p_only ? gb_gamma_sets_property_p(handle.g, opts.cap, &family)
                          : gb_gamma_sets(handle.g, opts.cap, &family));
    std::unique_ptr<gb_gamma_family, decltype(&gb_gamma_family_free)> family_guard(
        family, gb_gamma_family_free);

    int32_t gamma = gb_gamma_family_gamma(family);
    int64_t count = gb_gamma_family_count(family);
    bool truncated = gb_gamma_family_truncated(family) != 0;

    if (opts.format == "json") {
        json sets = json::array();
        std::vector<int32_t> buffer(static_cast<std::size_t>(gamma));
        for (int64_t i = 0; i < count; ++i) {
            check(gb_gamma_family_set(family, i, buffer.data()));
            json set = json::array();
            for (int32_t v : buffer)
                set.push_back(opts.source.from_product()
                                  ? json::array({(v - 1) / opts.source.m() + 1,
                                                 (v - 1) % opts.source.m() + 1})
                                  : json(v));
            sets.push_back(std::move(set));
        }
        json out{{"command", "gamma-sets"},
                 {"gamma", gamma},
                 {"count", count},
                 {"truncated", truncated},
                 {"sets", std::move(sets)}};
        emit(opts, out.dump(2) + "\n");
    } else {
        std::string text = "gamma = " + std::to_string(gamma) + "\n";
        text += "sets = " + std::to_string(count) + (truncated ? " (truncated)" : "") + "\n";
        std::vector<int32_t> buffer(static_cast<std::size_t>(gamma));
        for (int64_t i = 0; i < count; ++i) {
            check(gb_gamma_family_set(family, i, buffer.data()));
            text += "{";
            for (std::size_t j = 0; j < buffer.size(); ++j) {
                if (j) text += ", ";
                text += vertex_text(opts.source, buffer[j]);
            }
            text += "}\n";
        }
        emit(opts, text);
    }
    return truncated ? kExitResourceLimit : kExitOk;
}

int run_witness(const CommonOpts& opts) {
    if (!opts.source.from_product() || opts.source.kind() != "strong")
        die("witness constructions exist for --product strong <n> <m> only");
    int n = opts.source.n(), m = opts.source.m();

    gb_prediction pred{};
    check(gb_predict_bondage("strong", n, m, &pred));

    int32_t count = 0;
    int32_t edges[8] = {0};
    check(gb_witness_edges_strong(n, m, &count, edges));

    if (count == 0) {
        if (opts.format == "json") {
            json out{{"command", "witness"}, {"witness", nullptr},
                     {"prediction", {{"low", pred.low}, {"high", pred.high},
                                     {"source", pred.source}}}};
            emit(opts, out.dump(2) + "\n");
        } else {
            emit(opts, "no construction for this residue class (prediction: b in [" +
                           std::to_string(pred.low) + "," + std::to_string(pred.high) + "])\n");
        }
        return kExitOk;
    }

    GraphHandle handle{open_graph(opts.source)};
    int32_t valid = 0;
    check(gb_is_bondage_set(handle.g, edges, count, &valid));

    if (opts.format == "json") {
        json witness = json::array();
        for (int32_t i = 0; i < count; ++i)
            witness.push_back(edge_json(opts.source, edges[2 * i], edges[2 * i + 1]));
        json out{{"command", "witness"},
                 {"witness", std::move(witness)},
                 {"valid", valid != 0},
                 {"prediction",
                  {{"exact", pred.exact != 0}, {"value", pred.value}, {"source", pred.source}}}};
        emit(opts, out.dump(2) + "\n");
    } else {
        std::string text = "witness:";
        for (int32_t i = 0; i < count; ++i)
            text += " " + edge_text(opts.source, edges[2 * i], edges[2 * i + 1]);
        text += "\nvalid: ";
        text += (valid ? "yes" : "NO");
        text += "\n";
        emit(opts, text);
    }
    return valid ? kExitOk : kExitCheckFailed;
}

struct RangeArg {
    int lo = 0;
    int hi = 0;
};

RangeArg parse_range(const std::string& text) {
    RangeArg r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        die("bad range '" + text + "' (use N or LO..HI)");
    }
    return r;
}

int run_verify(const CommonOpts& opts, const std::string& kind, const std::string& n_text,
               const std::string& m_text, double total_budget_seconds) {
    RangeArg n = parse_range(n_text);
    RangeArg m = m_text.empty() ? n : parse_range(m_text);

    gb_solve_options solve = effective_options(opts);
    std::int64_t case_budget_ms = solve.time_budget_ms; // --budget: per case
    solve.time_budget_ms = total_budget_seconds > 0
                               ? static_cast<std::int64_t>(total_budget_seconds * 1000.0)
                               : 0; // whole-sweep cap

    gb_report* report = nullptr;
    check(gb_verify(kind.c_str(), n.lo, n.hi, m.lo, m.hi, &solve, case_budget_ms, &report));
    std::unique_ptr<gb_report, decltype(&gb_report_free)> report_guard(report, gb_report_free);

    char* text = nullptr;
    check(gb_report_render(report, opts.format.c_str(), &text));
    std::unique_ptr<char, decltype(&gb_string_free)> text_guard(text, gb_string_free);
    emit(opts, text);
    return gb_report_exit_code(report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domination and bondage numbers of path products"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(gb_version()));

    CommonOpts opts;
    gb_solve_options_init(&opts.solve);

    auto* gamma = app.add_subcommand("gamma", "domination number");
    add_graph_source(gamma, opts.source);
    gamma->add_option("--format", opts.format, "json | table | csv");
    gamma->add_option("--output", opts.output, "write to file instead of stdout");

    auto* bondage = app.add_subcommand("bondage", "exact bondage number with witness");
    add_graph_source(bondage, opts.source);
    bondage->add_option("--kmax", opts.solve.k_max, "largest subset size (0: lemma bounds)");
    add_solver_flags(bondage, opts);
    bondage->add_option("--format", opts.format, "json | table | csv");
    bondage->add_option("--output", opts.output, "write to file instead of stdout");

    auto* gamma_sets = app.add_subcommand("gamma-sets", "enumerate minimum dominating sets");
    add_graph_source(gamma_sets, opts.source);
    bool property_p_only = false;
    gamma_sets->add_flag("--property-p", property_p_only,
                         "keep only sets with pairwise-disjoint closed neighborhoods");
    gamma_sets->add_option("--cap", opts.cap, "enumeration cap (default 100000)");
    gamma_sets->add_option("--format", opts.format, "json | table");
    gamma_sets->add_option("--output", opts.output, "write to file instead of stdout");

    auto* witness = app.add_subcommand("witness", "constructive bondage witness for strong grids");
    add_graph_source(witness, opts.source);
    witness->add_option("--format", opts.format, "json | table");
    witness->add_option("--output", opts.output, "write to file instead of stdout");

    std::string verify_kind, n_text, m_text;
    double total_budget_seconds = 0.0;
    auto add_verify_like = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("kind", verify_kind, "strong | direct | path | gadget")->required();
        cmd->add_option("--n", n_text, "n range, N or LO..HI")->required();
        cmd->add_option("--m", m_text, "m range (default: same as --n)");
        add_solver_flags(cmd, opts);
        cmd->add_option("--total-budget", total_budget_seconds,
                        "time cap for the whole sweep in seconds (0: none)");
        cmd->add_option("--format", opts.format, "json | table | csv");
        cmd->add_option("--output", opts.output, "write to file instead of stdout");
        return cmd;
    };
    auto* verify = add_verify_like("verify", "replay the known results over a parameter range");
    auto* sweep = add_verify_like("sweep", "alias of verify");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (gamma->parsed()) return run_gamma(opts);
    if (bondage->parsed()) return run_bondage(opts);
    if (gamma_sets->parsed()) return run_gamma_sets(opts, property_p_only);
    if (witness->parsed()) return run_witness(opts);
    if (verify->parsed() || sweep->parsed())
        return run_verify(opts, verify_kind, n_text, m_text, total_budget_seconds);
    return kExitInputError;
}
