#ifndef GRIDBOND_BONDAGE_HPP
#define GRIDBOND_BONDAGE_HPP

#include <chrono>
#include <cstdint>
#include <optional>

#include "domination.hpp"
#include "graph.hpp"

namespace gridbond {

inline constexpr std::size_t kDefaultCacheCapacity = 4096;

struct SolveOptions {
    int workers = 0;    // 0: use hardware concurrency
    int k_max = 0;      // 0: min(lemma1_bound, lemma2_bound)
    bool deterministic = false; // single sequential scan; witness is the
                                // lexicographically least at the minimal size
    std::int64_t gamma_set_cap = kDefaultGammaSetCap;
    std::chrono::milliseconds time_budget{0}; // 0: unlimited
    std::size_t cache_capacity = kDefaultCacheCapacity;
    bool use_cache = true;
    std::optional<GridSpec> grid; // declared grid product: enables the
                                  // single-edge symmetry reduction
};

struct BondageResult {
    std::optional<int> value;  // exact bondage number when the search finished
    int ruled_out = 0;         // every edge subset of size <= ruled_out leaves gamma unchanged
    std::optional<EdgeSet> witness;
    std::uint64_t evaluated_subsets = 0;
    std::uint64_t cache_hits = 0;

    bool exact() const { return value.has_value(); }
};

// min over adjacent pairs of d(u)+d(v)-1-|N(u) cap N(v)|; an upper bound on
// the bondage number.
int lemma1_bound(const Graph& g);

// min over distinct pairs at distance <= 2 of d(u)+d(v)-1; also an upper
// bound on the bondage number.
int lemma2_bound(const Graph& g);

// true iff removing es strictly increases the domination number.
bool is_bondage_set(const Graph& g, const EdgeSet& es);

// Staged exact search: for k = 1..k_max, enumerate k-edge subsets in
// lexicographic order until one raises gamma. Subsets proven harmless by a
// cached minimum dominating set are skipped. The value is deterministic for
// any worker count; the witness additionally so in deterministic mode.
BondageResult bondage_number(const Graph& g, const SolveOptions& opts = {});

} // namespace gridbond

#endif
