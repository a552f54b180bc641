#include "oracle.hpp"

#include <algorithm>

#include "errors.hpp"

namespace gridbond {

namespace {

void require_grid_params(int n, int m) {
    if (n < 2 || m < 2)
        fail(Errc::invalid_argument, "grid factors must have order at least 2");
}

} // namespace

int gamma_path(int n) {
    if (n < 1)
        fail(Errc::invalid_argument, "path order must be positive");
    return (n + 2) / 3;
}

int gamma_strong(int n, int m) {
    require_grid_params(n, m);
    return gamma_path(n) * gamma_path(m);
}

Prediction predict_bondage_strong(int n, int m) {
    require_grid_params(n, m);
    ResidueClass cls(n, m);
    if (cls.is(0, 0) || cls.is(0, 2)) return Prediction::exact(1, "thm:strong-b1");
    if (cls.is(0, 1)) return Prediction::exact(2, "thm:strong-b2-01");
    if (cls.is(1, 2)) return Prediction::exact(3, "thm:strong-b3");
    if (cls.is(2, 2)) return Prediction::exact(2, "thm:strong-b2-22");
    return Prediction::interval(2, 5, 5, "thm:strong-open-11");
}

Prediction predict_bondage_direct(int n, int m) {
    require_grid_params(n, m);
    if (n <= 4 || m <= 4) return Prediction::exact(1, "thm:direct-b1");
    return Prediction::interval(1, 2, std::nullopt, "thm:direct-b2");
}

std::vector<VertexSet> canonical_path_gamma_sets(int n) {
    if (n < 1)
        fail(Errc::invalid_argument, "path order must be positive");
    auto seq = [n](int first, int last) {
        VertexSet s;
        for (int v = first; v <= last; v += 3) s.push_back(v - 1); // 1-based -> 0-based
        return s;
    };
    switch (n % 3) {
    case 0:
        return {seq(2, n - 1)};
    case 1: {
        VertexSet s = seq(1, n - 3);
        s.push_back(n - 1);
        return {s};
    }
    default: { // n = 3t+2
        VertexSet s = seq(2, n - 3);
        s.push_back(n - 1);
        VertexSet s2 = seq(1, n - 1);
        return {s, s2};
    }
    }
}

namespace {

// Witness edges in 1-based grid coordinates for the orientation in which the
// class is stated; `transposed` swaps the coordinate pair before flattening.
EdgeSet map_grid_edges(int n, int m, bool transposed,
                       std::initializer_list<std::array<int, 4>> coords) {
    GridSpec grid{ProductKind::strong, n, m};
    EdgeSet out;
    for (const auto& c : coords) {
        int i1 = c[0], j1 = c[1], i2 = c[2], j2 = c[3];
        if (transposed) {
            std::swap(i1, j1);
            std::swap(i2, j2);
        }
        out.push_back(grid.edge(i1, j1, i2, j2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<EdgeSet> witness_bondage_set_strong(int n, int m) {
    require_grid_params(n, m);
    int rn = n % 3;
    ResidueClass cls(n, m);

    if (cls.is(0, 0)) {
        // One edge from the unique gamma-set vertex (2,2) to (1,1).
        return map_grid_edges(n, m, false, {{{2, 2, 1, 1}}});
    }
    if (cls.is(0, 2)) {
        // Stated with the first factor divisible by 3: delete (2,1)-(2,2).
        bool t = rn != 0;
        return map_grid_edges(n, m, t, {{{2, 1, 2, 2}}});
    }
    if (cls.is(0, 1)) {
        // Stated with the first factor divisible by 3: isolate (1,1) from
        // its only possible dominators (2,1) and (2,2).
        bool t = rn != 0;
        return map_grid_edges(n, m, t, {{{2, 1, 1, 1}}, {{2, 2, 1, 1}}});
    }
    if (cls.is(1, 2)) {
        // The three edges at the degree-3 corner (1,1).
        return map_grid_edges(n, m, false, {{{1, 1, 1, 2}}, {{1, 1, 2, 1}}, {{1, 1, 2, 2}}});
    }
    if (cls.is(2, 2)) {
        // Diagonals of the corner 2x2 block {n-1,n} x {m-1,m}.
        return map_grid_edges(n, m, false,
                              {{{n - 1, m - 1, n, m}}, {{n, m - 1, n - 1, m}}});
    }
    return std::nullopt; // (1,1): no construction is known
}

} // namespace gridbond
