#ifndef GRIDBOND_DOMINATION_HPP
#define GRIDBOND_DOMINATION_HPP

#include <cstdint>
#include <optional>

#include "graph.hpp"

namespace gridbond {

inline constexpr std::int64_t kDefaultGammaSetCap = 100000;

// All dominating sets of minimum cardinality, in lexicographic order.
// truncated is set when the enumeration stopped at the cap.
struct GammaSetFamily {
    int gamma = 0;
    std::vector<VertexSet> sets;
    bool truncated = false;
};

bool is_dominating(const Graph& g, const VertexSet& s);

// Some dominating set of size <= k, or nullopt. Deterministic: fixed
// branching order, so repeated calls return the same set.
std::optional<VertexSet> exists_dominating_set(const Graph& g, int k);

// Exact domination number, computed per connected component and summed.
int domination_number(const Graph& g);

GammaSetFamily enumerate_gamma_sets(const Graph& g, std::int64_t cap = kDefaultGammaSetCap);

// Pairwise-disjoint closed neighborhoods. Precondition (checked): s is a
// dominating set of minimum cardinality.
bool satisfies_property_p(const Graph& g, const VertexSet& s);

GammaSetFamily property_p_gamma_sets(const Graph& g, std::int64_t cap = kDefaultGammaSetCap);

// Union of all minimum dominating sets. Fails with enumeration_incomplete
// when the cap truncates the family.
VertexSet vertices_in_some_gamma_set(const Graph& g, std::int64_t cap = kDefaultGammaSetCap);

// Maximum number of pairwise-disjoint minimum dominating sets (exact set
// packing over the enumerated family). Fails on truncation.
int max_disjoint_gamma_sets(const Graph& g, std::int64_t cap = kDefaultGammaSetCap);

// Product of the canonical path gamma-sets of P_n and P_m under the
// row-major strong-grid labeling; dominates P_n x P_m (strong) with
// ceil(n/3)*ceil(m/3) vertices and pairwise-disjoint closed neighborhoods.
VertexSet canonical_gamma_set_strong(int n, int m);

} // namespace gridbond

#endif
