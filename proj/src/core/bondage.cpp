#include "bondage.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <thread>

#include "errors.hpp"

namespace gridbond {

int lemma1_bound(const Graph& g) {
    if (g.edge_count() == 0)
        fail(Errc::no_edges, "graph has no edges");
    int best = std::numeric_limits<int>::max();
    for (const Edge& e : g.edges()) {
        int common = g.open_neighborhood(e.u).intersection_count(g.open_neighborhood(e.v));
        best = std::min(best, g.degree(e.u) + g.degree(e.v) - 1 - common);
    }
    return best;
}

int lemma2_bound(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    for (int u = 0; u < g.order(); ++u) {
        // vertices within distance 2 of u
        Bitset ball = g.closed_neighborhood(u);
        g.open_neighborhood(u).for_each([&](int w) { ball |= g.open_neighborhood(w); });
        ball.for_each([&](int v) {
            if (v > u) best = std::min(best, g.degree(u) + g.degree(v) - 1);
        });
    }
    if (best == std::numeric_limits<int>::max())
        fail(Errc::no_pair, "no two vertices within distance 2");
    return best;
}

bool is_bondage_set(const Graph& g, const EdgeSet& es) {
    Graph h = g.remove_edges(es);
    return domination_number(h) > domination_number(g);
}

namespace {

Bitset to_bitset(int order, const VertexSet& s) {
    Bitset b(order);
    for (int v : s) b.set(v);
    return b;
}

// true iff the dominating set `dom` of g still dominates g minus `removed`.
// Only endpoints of removed edges can lose coverage.
bool still_dominates(const Graph& g, const Bitset& dom, std::span<const Edge> removed) {
    for (const Edge& e : removed) {
        for (int x : {e.u, e.v}) {
            if (dom.test(x)) continue;
            int dominators = g.open_neighborhood(x).intersection_count(dom);
            for (const Edge& f : removed) {
                if (f.u == x && dom.test(f.v)) --dominators;
                else if (f.v == x && dom.test(f.u)) --dominators;
            }
            if (dominators <= 0) return false;
        }
    }
    return true;
}

// Bounded FIFO of minimum dominating sets found during the search. A subset
// whose removal leaves any cached set dominating cannot raise gamma.
class GammaSetCache {
public:
    explicit GammaSetCache(std::size_t capacity) : capacity_(capacity) {}

    bool any_survivor(const Graph& g, std::span<const Edge> removed) {
        std::shared_lock lock(mutex_);
        std::size_t n = sets_.size();
        if (n == 0) return false;
        std::size_t start = last_hit_.load(std::memory_order_relaxed) % n;
        for (std::size_t off = 0; off < n; ++off) {
            std::size_t i = start + off;
            if (i >= n) i -= n;
            if (still_dominates(g, sets_[i], removed)) {
                last_hit_.store(i, std::memory_order_relaxed);
                return true;
            }
        }
        return false;
    }

    void insert(Bitset set) {
        std::unique_lock lock(mutex_);
        for (const Bitset& s : sets_)
            if (s == set) return;
        if (sets_.size() >= capacity_) sets_.pop_front();
        sets_.push_back(std::move(set));
    }

private:
    std::shared_mutex mutex_;
    std::size_t capacity_;
    std::deque<Bitset> sets_;
    std::atomic<std::size_t> last_hit_{0};
};

using Clock = std::chrono::steady_clock;

struct StageContext {
    StageContext(const Graph& graph, const EdgeSet& edge_list, int gamma_value,
                 GammaSetCache* cache_ptr, std::optional<Clock::time_point> stop_at)
        : g(graph), edges(edge_list), gamma(gamma_value), cache(cache_ptr), deadline(stop_at) {}

    const Graph& g;
    const EdgeSet& edges;
    int gamma;
    GammaSetCache* cache; // null: caching disabled
    std::optional<Clock::time_point> deadline;

    std::atomic<bool> stop{false};
    std::atomic<bool> expired{false};
    std::atomic<std::uint64_t> evaluated{0};
    std::atomic<std::uint64_t> cache_hits{0};
    std::mutex witness_mutex;
    std::optional<EdgeSet> witness;
};

// true when the subset is a witness (gamma rises without these edges).
bool subset_raises_gamma(StageContext& ctx, std::span<const Edge> removed) {
    ctx.evaluated.fetch_add(1, std::memory_order_relaxed);
    if (ctx.cache && ctx.cache->any_survivor(ctx.g, removed)) {
        ctx.cache_hits.fetch_add(1, std::memory_order_relaxed);
        return false;
    }
    Graph h = ctx.g.remove_edges(removed);
    if (auto set = exists_dominating_set(h, ctx.gamma)) {
        if (ctx.cache) ctx.cache->insert(to_bitset(ctx.g.order(), *set));
        return false;
    }
    return true;
}

void record_witness(StageContext& ctx, EdgeSet witness) {
    std::lock_guard lock(ctx.witness_mutex);
    if (!ctx.witness) ctx.witness = std::move(witness);
    ctx.stop.store(true, std::memory_order_relaxed);
}

bool deadline_passed(StageContext& ctx) {
    if (!ctx.deadline) return false;
    if (Clock::now() < *ctx.deadline) return false;
    ctx.expired.store(true, std::memory_order_relaxed);
    ctx.stop.store(true, std::memory_order_relaxed);
    return true;
}

// Scan all k-subsets of positions[first_at..] that start with the fixed
// position `first`; `positions` indexes into ctx.edges.
void scan_partition(StageContext& ctx, const std::vector<int>& positions, int first, int k) {
    int pool = static_cast<int>(positions.size());
    std::vector<int> idx(static_cast<std::size_t>(k));
    idx[0] = first;
    for (int i = 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = first + i;
    if (idx.back() >= pool) return;

    EdgeSet subset(static_cast<std::size_t>(k));
    int ticks = 0;
    while (true) {
        if (ctx.stop.load(std::memory_order_relaxed)) return;
        if (++ticks >= 256) {
            ticks = 0;
            if (deadline_passed(ctx)) return;
        }
        for (int i = 0; i < k; ++i)
            subset[static_cast<std::size_t>(i)] =
                ctx.edges[static_cast<std::size_t>(positions[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])])];
        if (subset_raises_gamma(ctx, subset)) {
            record_witness(ctx, subset);
            return;
        }
        // next combination, keeping idx[0] == first
        int i = k - 1;
        while (i >= 1 && idx[static_cast<std::size_t>(i)] == pool - k + i) --i;
        if (i < 1) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Grid maps that are automorphisms of every path product: row flip, column
// flip, their composition, and the transpose family when n == m.
std::vector<std::vector<int>> grid_automorphisms(const GridSpec& grid) {
    std::vector<std::vector<int>> perms;
    int n = grid.n, m = grid.m;
    for (int swap_axes = 0; swap_axes < (n == m ? 2 : 1); ++swap_axes)
        for (int flip_i = 0; flip_i < 2; ++flip_i)
            for (int flip_j = 0; flip_j < 2; ++flip_j) {
                std::vector<int> perm(static_cast<std::size_t>(n) * m);
                for (int v = 0; v < n * m; ++v) {
                    auto [i, j] = grid.coords(v);
                    if (flip_i) i = n + 1 - i;
                    if (flip_j) j = m + 1 - j;
                    if (swap_axes) std::swap(i, j);
                    perm[static_cast<std::size_t>(v)] = grid.flat(i, j);
                }
                perms.push_back(std::move(perm));
            }
    return perms;
}

// Positions of one representative edge per dihedral-symmetry orbit, in
// lexicographic order.
std::vector<int> orbit_representatives(const EdgeSet& edges, const GridSpec& grid) {
    auto perms = grid_automorphisms(grid);
    std::vector<int> reps;
    for (std::size_t p = 0; p < edges.size(); ++p) {
        const Edge& e = edges[p];
        bool canonical = true;
        for (const auto& perm : perms) {
            Edge img(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
            if (img < e) {
                canonical = false;
                break;
            }
        }
        if (canonical) reps.push_back(static_cast<int>(p));
    }
    return reps;
}

int resolve_workers(const SolveOptions& opts) {
    if (opts.deterministic) return 1;
    if (opts.workers > 0) return opts.workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace

BondageResult bondage_number(const Graph& g, const SolveOptions& opts) {
    if (g.edge_count() == 0)
        fail(Errc::no_edges, "graph has no edges");
    if (opts.k_max < 0)
        fail(Errc::invalid_argument, "k_max must be positive");
    int k_max = opts.k_max > 0 ? opts.k_max : std::min(lemma1_bound(g), lemma2_bound(g));

    int gamma = domination_number(g);
    EdgeSet edges = g.edges();
    GammaSetCache cache(opts.cache_capacity);
    if (opts.use_cache)
        if (auto seed = exists_dominating_set(g, gamma))
            cache.insert(to_bitset(g.order(), *seed));

    std::optional<Clock::time_point> deadline;
    if (opts.time_budget.count() > 0) deadline = Clock::now() + opts.time_budget;

    int workers = resolve_workers(opts);
    BondageResult result;

    for (int k = 1; k <= k_max; ++k) {
        StageContext ctx{g, edges, gamma, opts.use_cache ? &cache : nullptr, deadline};

        // The grid's dihedral symmetries preserve gamma, so for single edges
        // one representative per orbit decides the stage.
        std::vector<int> positions(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) positions[i] = static_cast<int>(i);
        if (k == 1 && opts.grid) positions = orbit_representatives(edges, *opts.grid);

        int first_count = static_cast<int>(positions.size()) - k + 1;
        if (first_count > 0) {
            if (workers == 1 || first_count == 1) {
                for (int f = 0; f < first_count && !ctx.stop.load(std::memory_order_relaxed); ++f)
                    scan_partition(ctx, positions, f, k);
            } else {
                std::atomic<int> next_first{0};
                auto worker = [&] {
                    while (!ctx.stop.load(std::memory_order_relaxed)) {
                        int f = next_first.fetch_add(1, std::memory_order_relaxed);
                        if (f >= first_count) return;
                        scan_partition(ctx, positions, f, k);
                    }
                };
                std::vector<std::thread> pool;
                for (int t = 0; t < std::min(workers, first_count); ++t) pool.emplace_back(worker);
                for (auto& t : pool) t.join();
            }
        }

        result.evaluated_subsets += ctx.evaluated.load();
        result.cache_hits += ctx.cache_hits.load();
        if (ctx.witness) {
            std::sort(ctx.witness->begin(), ctx.witness->end());
            result.value = k;
            result.ruled_out = k - 1;
            result.witness = std::move(ctx.witness);
            return result;
        }
        if (ctx.expired.load()) {
            result.ruled_out = k - 1;
            return result;
        }
        result.ruled_out = k;
    }
    return result;
}

} // namespace gridbond
