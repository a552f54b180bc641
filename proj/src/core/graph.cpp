#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "errors.hpp"

namespace gridbond {

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= order_)
        fail(Errc::invalid_argument,
             std::string(what) + " index " + std::to_string(v) + " out of range [0, " +
                 std::to_string(order_) + ")");
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
    if (order < 1)
        fail(Errc::invalid_argument, "graph order must be positive");
    if (order > kMaxOrder)
        fail(Errc::invalid_argument,
             "graph order " + std::to_string(order) + " exceeds maximum " +
                 std::to_string(kMaxOrder));

    Graph g;
    g.order_ = order;
    g.open_.assign(static_cast<std::size_t>(order), Bitset(order));
    for (const Edge& e : edges) {
        if (e.u == e.v)
            fail(Errc::invalid_edge, "self-loop at vertex " + std::to_string(e.u + 1));
        g.check_vertex(e.u, "edge endpoint");
        g.check_vertex(e.v, "edge endpoint");
        if (g.adjacent(e.u, e.v))
            fail(Errc::invalid_edge, "duplicate edge {" + std::to_string(e.u + 1) + "," +
                                         std::to_string(e.v + 1) + "}");
        g.open_[static_cast<std::size_t>(e.u)].set(e.v);
        g.open_[static_cast<std::size_t>(e.v)].set(e.u);
        ++g.edge_count_;
    }
    g.closed_ = g.open_;
    g.degree_.resize(static_cast<std::size_t>(order));
    for (int v = 0; v < order; ++v) {
        g.closed_[static_cast<std::size_t>(v)].set(v);
        g.degree_[static_cast<std::size_t>(v)] = g.open_[static_cast<std::size_t>(v)].count();
    }
    return g;
}

Graph Graph::from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
    return d;
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order_; ++u)
        open_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::remove_edges(std::span<const Edge> es) const {
    Graph g = *this;
    for (const Edge& e : es) {
        check_vertex(e.u, "edge endpoint");
        check_vertex(e.v, "edge endpoint");
        if (!g.adjacent(e.u, e.v))
            fail(Errc::invalid_edge, "edge {" + std::to_string(e.u + 1) + "," +
                                         std::to_string(e.v + 1) +
                                         "} does not exist (or is listed twice)");
        g.open_[static_cast<std::size_t>(e.u)].reset(e.v);
        g.open_[static_cast<std::size_t>(e.v)].reset(e.u);
        g.closed_[static_cast<std::size_t>(e.u)].reset(e.v);
        g.closed_[static_cast<std::size_t>(e.v)].reset(e.u);
        --g.degree_[static_cast<std::size_t>(e.u)];
        --g.degree_[static_cast<std::size_t>(e.v)];
        --g.edge_count_;
    }
    return g;
}

Graph Graph::remove_edges(std::initializer_list<Edge> es) const {
    return remove_edges(std::span<const Edge>(es.begin(), es.size()));
}

std::optional<int> Graph::distance(int u, int v) const {
    check_vertex(u, "vertex");
    check_vertex(v, "vertex");
    if (u == v) return 0;
    std::vector<int> dist(static_cast<std::size_t>(order_), -1);
    std::deque<int> queue{u};
    dist[static_cast<std::size_t>(u)] = 0;
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        bool done = false;
        open_[static_cast<std::size_t>(w)].for_each([&](int x) {
            if (dist[static_cast<std::size_t>(x)] < 0) {
                dist[static_cast<std::size_t>(x)] = dist[static_cast<std::size_t>(w)] + 1;
                if (x == v) done = true;
                queue.push_back(x);
            }
        });
        if (done) return dist[static_cast<std::size_t>(v)];
    }
    return std::nullopt;
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> parts;
    Bitset seen(order_);
    for (int s = 0; s < order_; ++s) {
        if (seen.test(s)) continue;
        VertexSet part{s};
        seen.set(s);
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int w = queue.front();
            queue.pop_front();
            open_[static_cast<std::size_t>(w)].for_each([&](int x) {
                if (!seen.test(x)) {
                    seen.set(x);
                    part.push_back(x);
                    queue.push_back(x);
                }
            });
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

Graph Graph::induced_subgraph(const VertexSet& vertices) const {
    std::vector<int> local(static_cast<std::size_t>(order_), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i], "vertex");
        local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    }
    EdgeSet es;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        open_[static_cast<std::size_t>(vertices[i])].for_each([&](int w) {
            int j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), j);
        });
    return from_edges(static_cast<int>(vertices.size()), es);
}

Graph path_graph(int n) {
    if (n < 1)
        fail(Errc::invalid_argument, "path order must be positive");
    EdgeSet es;
    es.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

const char* to_string(ProductKind kind) {
    switch (kind) {
    case ProductKind::strong: return "strong";
    case ProductKind::direct: return "direct";
    case ProductKind::cartesian: return "cartesian";
    }
    return "?";
}

std::optional<ProductKind> parse_product_kind(const std::string& name) {
    if (name == "strong") return ProductKind::strong;
    if (name == "direct") return ProductKind::direct;
    if (name == "cartesian") return ProductKind::cartesian;
    return std::nullopt;
}

namespace {

template <typename Adjacent>
Graph product_graph(const Graph& g, const Graph& h, Adjacent adjacent) {
    if (g.order() < 1 || h.order() < 1)
        fail(Errc::invalid_argument, "product factors must be nonempty");
    if (static_cast<std::int64_t>(g.order()) * h.order() > kMaxOrder)
        fail(Errc::invalid_argument, "product order exceeds maximum " + std::to_string(kMaxOrder));
    int n = g.order(), m = h.order();
    EdgeSet es;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            int a = i * m + j;
            // enumerate (k, l) > (i, j) in flat order
            for (int k = i; k < n; ++k)
                for (int l = (k == i ? j + 1 : 0); l < m; ++l)
                    if (adjacent(g, h, i, j, k, l)) es.emplace_back(a, k * m + l);
        }
    return Graph::from_edges(n * m, es);
}

} // namespace

Graph strong_product(const Graph& g, const Graph& h) {
    return product_graph(g, h, [](const Graph& a, const Graph& b, int i, int j, int k, int l) {
        bool rows_eq = i == k, rows_adj = a.adjacent(i, k);
        bool cols_eq = j == l, cols_adj = b.adjacent(j, l);
        return (rows_eq && cols_adj) || (rows_adj && cols_eq) || (rows_adj && cols_adj);
    });
}

Graph direct_product(const Graph& g, const Graph& h) {
    return product_graph(g, h, [](const Graph& a, const Graph& b, int i, int j, int k, int l) {
        return a.adjacent(i, k) && b.adjacent(j, l);
    });
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    return product_graph(g, h, [](const Graph& a, const Graph& b, int i, int j, int k, int l) {
        return (i == k && b.adjacent(j, l)) || (a.adjacent(i, k) && j == l);
    });
}

Graph GridSpec::build() const {
    if (n < 2 || m < 2)
        fail(Errc::invalid_argument, "grid factors must have order at least 2");
    Graph pn = path_graph(n), pm = path_graph(m);
    switch (kind) {
    case ProductKind::strong: return strong_product(pn, pm);
    case ProductKind::direct: return direct_product(pn, pm);
    case ProductKind::cartesian: return cartesian_product(pn, pm);
    }
    fail(Errc::invalid_argument, "unknown product kind");
}

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int order = -1;
    std::int64_t expected_edges = -1;
    EdgeSet es;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (order >= 0)
                fail(Errc::parse_error, "line " + std::to_string(lineno) + ": duplicate p line");
            if (!(ls >> fmt >> order >> expected_edges) || fmt != "edge" || order < 1)
                fail(Errc::parse_error,
                     "line " + std::to_string(lineno) + ": expected 'p edge <order> <edges>'");
            continue;
        }
        if (tag == "e") {
            if (order < 0)
                fail(Errc::parse_error,
                     "line " + std::to_string(lineno) + ": edge before p line");
            int u = 0, v = 0;
            if (!(ls >> u >> v))
                fail(Errc::parse_error,
                     "line " + std::to_string(lineno) + ": expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > order || v > order || u == v)
                fail(Errc::parse_error, "line " + std::to_string(lineno) + ": bad edge {" +
                                            std::to_string(u) + "," + std::to_string(v) + "}");
            es.emplace_back(u - 1, v - 1);
            continue;
        }
        fail(Errc::parse_error,
             "line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
    }
    if (order < 0)
        fail(Errc::parse_error, "missing 'p edge' line");
    if (expected_edges != static_cast<std::int64_t>(es.size()))
        fail(Errc::parse_error, "edge count mismatch: header says " +
                                    std::to_string(expected_edges) + ", found " +
                                    std::to_string(es.size()));
    return Graph::from_edges(order, es);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::io_error, "cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out)
        fail(Errc::io_error, "cannot open " + path + " for writing");
    write_graph(out, g);
    if (!out)
        fail(Errc::io_error, "write to " + path + " failed");
}

} // namespace gridbond
