#ifndef GRIDBOND_ORACLE_HPP
#define GRIDBOND_ORACLE_HPP

#include <optional>
#include <string>

#include "graph.hpp"

namespace gridbond {

// Closed-form claim about a graph parameter: an exact value or a closed
// interval, optionally with a conjectured value inside it.
struct Prediction {
    enum class Kind { exact, interval };

    Kind kind = Kind::exact;
    int value = 0; // meaningful when exact
    int low = 0;
    int high = 0;
    std::optional<int> conjecture;
    std::string source; // stable citation tag, e.g. "thm:strong-b1"

    static Prediction exact(int v, std::string tag) {
        return {Kind::exact, v, v, v, std::nullopt, std::move(tag)};
    }
    static Prediction interval(int lo, int hi, std::optional<int> conj, std::string tag) {
        return {Kind::interval, 0, lo, hi, conj, std::move(tag)};
    }
    bool contains(int v) const { return low <= v && v <= high; }
};

// Unordered residue pair (n mod 3, m mod 3) selecting the applicable
// bondage case for strong grids.
struct ResidueClass {
    int rn = 0;
    int rm = 0;

    ResidueClass(int n, int m) : rn(n % 3), rm(m % 3) {
        if (rn > rm) std::swap(rn, rm);
    }
    bool is(int a, int b) const {
        return (rn == a && rm == b) || (rn == b && rm == a);
    }
};

// ceil(n/3)
int gamma_path(int n);

// ceil(n/3) * ceil(m/3), the domination number of the strong grid.
int gamma_strong(int n, int m);

Prediction predict_bondage_strong(int n, int m);
Prediction predict_bondage_direct(int n, int m);

// The minimum dominating sets of P_n that have pairwise-disjoint closed
// neighborhoods, 1-based construction returned 0-based:
//   n = 3t   -> {v2, v5, ..., v_{n-1}}            (the unique gamma-set)
//   n = 3t+1 -> {v1, v4, ..., v_{n-3}, v_n}
//   n = 3t+2 -> {v2, v5, ..., v_{n-3}, v_n} and {v1, v4, ..., v_{n-1}}
std::vector<VertexSet> canonical_path_gamma_sets(int n);

// Constructive edge set whose removal raises the domination number of the
// strong grid, per residue class; nullopt for the open (1,1) class. Edges
// are flat indices under GridSpec{strong, n, m}.
std::optional<EdgeSet> witness_bondage_set_strong(int n, int m);

} // namespace gridbond

#endif
