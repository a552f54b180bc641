#ifndef GRIDBOND_GRAPH_HPP
#define GRIDBOND_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace gridbond {

// Largest supported vertex count. Keeps every neighborhood row a handful of
// 64-bit words.
inline constexpr int kMaxOrder = 4096;

struct Edge {
    int u = 0; // canonical orientation: u < v
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Vertex subset as a sorted list of 0-based indices.
using VertexSet = std::vector<int>;
// Edge subset, duplicate-free, in lexicographic order.
using EdgeSet = std::vector<Edge>;

// Immutable simple undirected graph over vertices 0..order-1 with per-vertex
// neighborhood bitsets.
class Graph {
public:
    static Graph from_edges(int order, std::span<const Edge> edges);
    static Graph from_edges(int order, std::initializer_list<Edge> edges);

    int order() const { return order_; }
    std::int64_t edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return open_[static_cast<std::size_t>(u)].test(v); }
    bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
    int max_degree() const;

    const Bitset& open_neighborhood(int v) const { return open_[static_cast<std::size_t>(v)]; }
    const Bitset& closed_neighborhood(int v) const { return closed_[static_cast<std::size_t>(v)]; }

    // Edges in lexicographic (u, v) order.
    EdgeSet edges() const;

    // New graph with the given edges deleted; every edge must exist.
    Graph remove_edges(std::span<const Edge> es) const;
    Graph remove_edges(std::initializer_list<Edge> es) const;

    // Shortest-path length, or nullopt when u and v are in different
    // components.
    std::optional<int> distance(int u, int v) const;

    // Maximal connected vertex sets, ordered by smallest member; members
    // ascending within each part.
    std::vector<VertexSet> connected_components() const;

    // Subgraph induced by `vertices` (sorted ascending); vertex i of the
    // result is vertices[i].
    Graph induced_subgraph(const VertexSet& vertices) const;

    void check_vertex(int v, const char* what) const;

private:
    Graph() = default;

    int order_ = 0;
    std::int64_t edge_count_ = 0;
    std::vector<Bitset> open_;
    std::vector<Bitset> closed_;
    std::vector<int> degree_;
};

// Path with vertices 0..n-1 and edges {i, i+1}.
Graph path_graph(int n);

enum class ProductKind { strong, direct, cartesian };

const char* to_string(ProductKind kind);
std::optional<ProductKind> parse_product_kind(const std::string& name);

// Product grid of two paths with row-major labeling: 1-based pair (i, j)
// maps to flat index (i-1)*m + (j-1).
struct GridSpec {
    ProductKind kind = ProductKind::strong;
    int n = 2;
    int m = 2;

    int flat(int i, int j) const { return (i - 1) * m + (j - 1); }
    std::pair<int, int> coords(int v) const { return {v / m + 1, v % m + 1}; }
    Edge edge(int i1, int j1, int i2, int j2) const { return Edge(flat(i1, j1), flat(i2, j2)); }
    Graph build() const;
};

// (i,j) ~ (k,l) iff coordinates are pairwise equal or adjacent, not both
// equal.
Graph strong_product(const Graph& g, const Graph& h);
// (i,j) ~ (k,l) iff both coordinates are adjacent.
Graph direct_product(const Graph& g, const Graph& h);
// (i,j) ~ (k,l) iff one coordinate equal, the other adjacent.
Graph cartesian_product(const Graph& g, const Graph& h);

// Text format: optional "c" comment lines, one "p edge <order> <edges>" line,
// then "e <u> <v>" lines with 1-based endpoints, u < v, in lexicographic
// order.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

} // namespace gridbond

#endif
