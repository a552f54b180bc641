#ifndef GRIDBOND_VERIFY_HPP
#define GRIDBOND_VERIFY_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "bondage.hpp"
#include "domination.hpp"
#include "graph.hpp"
#include "oracle.hpp"

namespace gridbond {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail; // offending values on failure, reason on skip
};

// One verified instance: computed values side by side with the closed-form
// claims, plus the outcome of every individual check.
struct CaseReport {
    std::string kind; // strong | direct | path | gadget
    int n = 0;
    int m = 0; // 0 for path cases
    bool degenerate = false;

    int gamma = -1;
    std::optional<int> gamma_oracle;
    std::string gamma_source; // citation tag for gamma_oracle, when known
    std::optional<BondageResult> bondage;
    std::optional<Prediction> prediction;
    std::optional<int> lemma1;
    std::optional<int> lemma2;
    std::optional<bool> witness_checked;
    std::optional<int> disjoint_gamma_sets;
    std::optional<std::vector<int>> component_sizes; // direct products
    std::optional<bool> consecutive_universal;       // paths, residue 2
    std::optional<int> gadget_gamma;
    std::optional<int> gadget_gamma_removed;

    std::vector<Check> checks;
    std::map<std::string, double> wall_time_ms;
    bool resource_limited = false; // a budget or cap cut the case short

    bool failed() const;               // any failed check
    bool incomplete() const;           // resource limit left checks skipped
    std::string status_string() const; // pass | fail | finding | skipped
};

struct SweepSummary {
    int cases = 0;
    int checks_passed = 0;
    int checks_failed = 0;
    int checks_skipped = 0;
    int degenerate_disagreements = 0; // failed checks on degenerate cases
};

struct SweepReport {
    std::string version;
    std::string kind;
    SolveOptions options;
    std::int64_t cap = kDefaultGammaSetCap;
    std::chrono::milliseconds case_budget{60000};
    std::chrono::milliseconds sweep_budget{0};
    std::vector<CaseReport> cases;
    SweepSummary summary; // recomputed from cases at assembly time

    // 0: all non-degenerate checks pass; 1: some failed; 2: resource limit
    // (budget expiry or enumeration truncation) left checks skipped.
    int exit_code() const;
};

struct VerifyOptions {
    SolveOptions solve;
    std::int64_t cap = kDefaultGammaSetCap;
    std::chrono::milliseconds case_budget{60000}; // per-case bondage budget
    std::chrono::milliseconds sweep_budget{0};    // whole-sweep cap; 0 = none.
                                                  // Cases past the cap still run,
                                                  // with a token budget, and report
                                                  // skipped checks.
};

CaseReport verify_strong_case(int n, int m, const VerifyOptions& opts = {});
CaseReport verify_direct_case(int n, int m, const VerifyOptions& opts = {});
CaseReport verify_path_observations(int n, std::int64_t cap = kDefaultGammaSetCap);
CaseReport verify_gadget_identity(int n, int m, const VerifyOptions& opts = {});

// Strips P_n x P_2 and P_2 x P_m (strong) glued by identifying their 2x2
// end blocks; order 2n + 2m - 4. Requires n, m = 2 (mod 3).
Graph build_gadget_h(int n, int m);
// The two diagonal edges of the identified block.
EdgeSet gadget_block_diagonals(int n, int m);

struct Range {
    int lo = 2;
    int hi = 2;
};

// Runs the per-case verifier over the (n, m) rectangle in deterministic
// order. kind: strong | direct | path | gadget; path ignores the m range;
// gadget keeps only n, m = 2 (mod 3).
SweepReport sweep(const std::string& kind, Range n_range, Range m_range,
                  const VerifyOptions& opts = {});

enum class ReportFormat { json, table, csv };

std::optional<ReportFormat> parse_report_format(const std::string& name);

nlohmann::json to_json(const CaseReport& report);
nlohmann::json to_json(const SweepReport& report);
std::string render(const SweepReport& report, ReportFormat format);

} // namespace gridbond

#endif
