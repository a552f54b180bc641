#include "domination.hpp"

#include <algorithm>
#include <limits>

#include "errors.hpp"
#include "oracle.hpp"

namespace gridbond {

namespace {

Bitset to_bitset(int order, const VertexSet& s) {
    Bitset b(order);
    for (int v : s) b.set(v);
    return b;
}

// Branch-and-bound engine shared by the decision procedure and the gamma-set
// enumerator. Branching rule: take the undominated vertex with the fewest
// remaining candidate dominators and try its closed neighborhood in
// ascending index order; candidates already tried at a node are excluded
// from the branches that follow, so the branches partition the solution
// space and no set is visited twice.
class Search {
public:
    explicit Search(const Graph& g) : g_(g), excluded_(g.order()), chosen_mask_(g.order()) {
        by_degree_.resize(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) by_degree_[static_cast<std::size_t>(v)] = v;
        std::sort(by_degree_.begin(), by_degree_.end(),
                  [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b)
                                                                        : a < b; });
    }

    // First dominating set of size <= budget in branching order, if any.
    std::optional<VertexSet> decide(int budget) {
        reset(budget);
        decision_mode_ = true;
        if (recurse(0, budget)) {
            VertexSet s = chosen_;
            std::sort(s.begin(), s.end());
            return s;
        }
        return std::nullopt;
    }

    // All dominating sets of size exactly `target`, lexicographically
    // sorted; stops collecting past `cap`.
    std::pair<std::vector<VertexSet>, bool> enumerate(int target, std::int64_t cap) {
        reset(target);
        decision_mode_ = false;
        cap_ = cap;
        out_.clear();
        truncated_ = false;
        recurse(0, target);
        std::sort(out_.begin(), out_.end());
        out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
        return {std::move(out_), truncated_};
    }

private:
    void reset(int budget) {
        excluded_.clear();
        chosen_mask_.clear();
        chosen_.clear();
        dominated_.assign(static_cast<std::size_t>(budget + 1), Bitset(g_.order()));
    }

    // Largest closed neighborhood among non-excluded vertices; 0 when all
    // vertices are excluded.
    int max_coverage() const {
        for (int v : by_degree_)
            if (!excluded_.test(v)) return g_.degree(v) + 1;
        return 0;
    }

    bool recurse(int depth, int remaining) {
        if (truncated_) return false;
        const Bitset& dom = dominated_[static_cast<std::size_t>(depth)];
        int undominated = g_.order() - dom.count();
        if (undominated == 0) {
            if (decision_mode_) return true;
            emit_completions(remaining);
            return false;
        }
        if (remaining == 0) return false;
        if (static_cast<std::int64_t>(remaining) * max_coverage() < undominated) return false;

        // undominated vertex with the fewest remaining candidate dominators
        int best_v = -1, best_count = std::numeric_limits<int>::max();
        for (int v = 0; v < g_.order(); ++v) {
            if (dom.test(v)) continue;
            int cnt = g_.closed_neighborhood(v).difference_count(excluded_);
            if (cnt == 0) return false; // v can no longer be dominated
            if (cnt < best_count) {
                best_count = cnt;
                best_v = v;
                if (cnt == 1) break;
            }
        }

        candidates_buf_.clear();
        g_.closed_neighborhood(best_v).for_each([&](int u) {
            if (!excluded_.test(u)) candidates_buf_.push_back(u);
        });
        std::vector<int> candidates = candidates_buf_; // recursion reuses the buffer

        int first_excluded = static_cast<int>(exclusion_trail_.size());
        bool found = false;
        for (int u : candidates) {
            Bitset& next = dominated_[static_cast<std::size_t>(depth + 1)];
            next = dominated_[static_cast<std::size_t>(depth)];
            next |= g_.closed_neighborhood(u);
            chosen_.push_back(u);
            chosen_mask_.set(u);
            if (recurse(depth + 1, remaining - 1)) {
                found = true; // decision mode: keep chosen_ intact on the way out
                break;
            }
            chosen_.pop_back();
            chosen_mask_.reset(u);
            excluded_.set(u);
            exclusion_trail_.push_back(u);
        }
        if (!found) {
            while (static_cast<int>(exclusion_trail_.size()) > first_excluded) {
                excluded_.reset(exclusion_trail_.back());
                exclusion_trail_.pop_back();
            }
        }
        return found;
    }

    // Everything is dominated: any completion of chosen_ with `remaining`
    // free vertices is a solution of the target size. With target = gamma
    // this fires with remaining == 0 only.
    void emit_completions(int remaining) {
        free_buf_.clear();
        for (int v = 0; v < g_.order(); ++v)
            if (!excluded_.test(v) && !chosen_mask_.test(v)) free_buf_.push_back(v);
        if (static_cast<int>(free_buf_.size()) < remaining) return;
        std::vector<int> combo(static_cast<std::size_t>(remaining));
        emit_combo(free_buf_, 0, combo, 0);
    }

    void emit_combo(const std::vector<int>& pool, std::size_t from, std::vector<int>& combo,
                    std::size_t at) {
        if (truncated_) return;
        if (at == combo.size()) {
            if (static_cast<std::int64_t>(out_.size()) >= cap_) {
                truncated_ = true;
                return;
            }
            VertexSet s = chosen_;
            s.insert(s.end(), combo.begin(), combo.end());
            std::sort(s.begin(), s.end());
            out_.push_back(std::move(s));
            return;
        }
        for (std::size_t i = from; i + (combo.size() - at) <= pool.size(); ++i) {
            combo[at] = pool[i];
            emit_combo(pool, i + 1, combo, at + 1);
        }
    }

    const Graph& g_;
    Bitset excluded_;
    Bitset chosen_mask_;
    std::vector<Bitset> dominated_;
    std::vector<int> chosen_;
    std::vector<int> by_degree_;
    std::vector<int> exclusion_trail_;
    std::vector<int> candidates_buf_;
    std::vector<int> free_buf_;

    bool decision_mode_ = true;
    std::int64_t cap_ = 0;
    std::vector<VertexSet> out_;
    bool truncated_ = false;
};

int gamma_lower_bound(const Graph& g) {
    return (g.order() + g.max_degree()) / (g.max_degree() + 1);
}

// Exact gamma of one graph treated as a whole (callers split components).
std::pair<int, VertexSet> gamma_with_witness(const Graph& g) {
    Search search(g);
    for (int k = gamma_lower_bound(g);; ++k) {
        if (auto s = search.decide(k)) return {static_cast<int>(s->size()), std::move(*s)};
    }
}

struct ComponentSolution {
    VertexSet vertices; // original indices, ascending
    Graph subgraph;
    int gamma;
    VertexSet witness; // original indices
};

std::vector<ComponentSolution> solve_components(const Graph& g) {
    std::vector<ComponentSolution> out;
    for (VertexSet& comp : g.connected_components()) {
        Graph sub = g.induced_subgraph(comp);
        auto [gamma, local] = gamma_with_witness(sub);
        VertexSet witness;
        witness.reserve(local.size());
        for (int v : local) witness.push_back(comp[static_cast<std::size_t>(v)]);
        out.push_back({std::move(comp), std::move(sub), gamma, std::move(witness)});
    }
    return out;
}

} // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
    Bitset covered(g.order());
    for (int v : s) {
        g.check_vertex(v, "set member");
        covered |= g.closed_neighborhood(v);
    }
    return covered.all();
}

std::optional<VertexSet> exists_dominating_set(const Graph& g, int k) {
    if (k < 0)
        fail(Errc::invalid_argument, "budget must be nonnegative");
    auto comps = solve_components(g);
    int total = 0;
    for (const auto& c : comps) total += c.gamma;
    if (total > k) return std::nullopt;
    VertexSet s;
    for (const auto& c : comps) s.insert(s.end(), c.witness.begin(), c.witness.end());
    std::sort(s.begin(), s.end());
    return s;
}

int domination_number(const Graph& g) {
    int total = 0;
    for (const auto& c : solve_components(g)) total += c.gamma;
    return total;
}

GammaSetFamily enumerate_gamma_sets(const Graph& g, std::int64_t cap) {
    if (cap < 1)
        fail(Errc::invalid_argument, "cap must be positive");
    auto comps = solve_components(g);

    GammaSetFamily family;
    for (const auto& c : comps) family.gamma += c.gamma;

    // Per-component families in original vertex indices.
    std::vector<std::vector<VertexSet>> parts;
    for (const auto& c : comps) {
        Search search(c.subgraph);
        auto [sets, truncated] = search.enumerate(c.gamma, cap);
        if (truncated) family.truncated = true;
        std::vector<VertexSet> mapped;
        mapped.reserve(sets.size());
        for (const VertexSet& s : sets) {
            VertexSet t;
            t.reserve(s.size());
            for (int v : s) t.push_back(c.vertices[static_cast<std::size_t>(v)]);
            std::sort(t.begin(), t.end());
            mapped.push_back(std::move(t));
        }
        parts.push_back(std::move(mapped));
    }

    // A gamma-set of the whole graph is a union of per-component gamma-sets.
    std::vector<VertexSet> combined{{}};
    for (const auto& part : parts) {
        std::vector<VertexSet> next;
        for (const VertexSet& prefix : combined) {
            for (const VertexSet& s : part) {
                if (static_cast<std::int64_t>(next.size()) > cap) break;
                VertexSet u = prefix;
                u.insert(u.end(), s.begin(), s.end());
                next.push_back(std::move(u));
            }
            if (static_cast<std::int64_t>(next.size()) > cap) break;
        }
        combined = std::move(next);
    }
    if (static_cast<std::int64_t>(combined.size()) > cap) {
        family.truncated = true;
        combined.resize(static_cast<std::size_t>(cap));
    }
    for (VertexSet& s : combined) std::sort(s.begin(), s.end());
    std::sort(combined.begin(), combined.end());
    family.sets = std::move(combined);
    return family;
}

bool satisfies_property_p(const Graph& g, const VertexSet& s) {
    if (!is_dominating(g, s) || static_cast<int>(s.size()) != domination_number(g))
        fail(Errc::invalid_argument, "set is not a minimum dominating set");
    Bitset seen(g.order());
    for (int v : s) {
        if (seen.intersects(g.closed_neighborhood(v))) return false;
        seen |= g.closed_neighborhood(v);
    }
    return true;
}

GammaSetFamily property_p_gamma_sets(const Graph& g, std::int64_t cap) {
    GammaSetFamily family = enumerate_gamma_sets(g, cap);
    std::vector<VertexSet> kept;
    for (VertexSet& s : family.sets) {
        Bitset seen(g.order());
        bool disjoint = true;
        for (int v : s) {
            if (seen.intersects(g.closed_neighborhood(v))) {
                disjoint = false;
                break;
            }
            seen |= g.closed_neighborhood(v);
        }
        if (disjoint) kept.push_back(std::move(s));
    }
    family.sets = std::move(kept);
    return family;
}

VertexSet vertices_in_some_gamma_set(const Graph& g, std::int64_t cap) {
    GammaSetFamily family = enumerate_gamma_sets(g, cap);
    if (family.truncated)
        fail(Errc::enumeration_incomplete,
             "gamma-set enumeration hit the cap of " + std::to_string(cap));
    Bitset members(g.order());
    for (const VertexSet& s : family.sets)
        for (int v : s) members.set(v);
    return members.to_vector();
}

namespace {

// Exact maximum packing of pairwise-disjoint gamma-sets. All sets have the
// same size, so a state with f free vertices extends by at most f / gamma
// further sets; together with the remaining-candidate count this keeps the
// search shallow even for families in the tens of thousands.
class SetPacker {
public:
    SetPacker(std::vector<Bitset> fam, int order, int gamma)
        : fam_(std::move(fam)), order_(order), gamma_(gamma) {}

    int run() {
        std::vector<std::size_t> all(fam_.size());
        for (std::size_t i = 0; i < fam_.size(); ++i) all[i] = i;
        best_ = greedy(all);
        recurse(all, Bitset(order_), 0, order_);
        return best_;
    }

private:
    int greedy(const std::vector<std::size_t>& candidates) {
        Bitset used(order_);
        int count = 0;
        for (std::size_t i : candidates)
            if (!fam_[i].intersects(used)) {
                used |= fam_[i];
                ++count;
            }
        return count;
    }

    void recurse(const std::vector<std::size_t>& candidates, const Bitset& used, int count,
                 int free) {
        if (count > best_) best_ = count;
        std::size_t pool = candidates.size();
        for (std::size_t pos = 0; pos < pool; ++pos) {
            int headroom = std::min(free / gamma_, static_cast<int>(pool - pos));
            if (count + headroom <= best_) return;
            std::size_t i = candidates[pos]; // compatible with used by construction
            Bitset next_used = used;
            next_used |= fam_[i];
            std::vector<std::size_t> next;
            next.reserve(pool - pos);
            for (std::size_t p = pos + 1; p < pool; ++p)
                if (!fam_[candidates[p]].intersects(next_used)) next.push_back(candidates[p]);
            recurse(next, next_used, count + 1, free - gamma_);
        }
    }

    std::vector<Bitset> fam_;
    int order_;
    int gamma_;
    int best_ = 0;
};

} // namespace

int max_disjoint_gamma_sets(const Graph& g, std::int64_t cap) {
    GammaSetFamily family = enumerate_gamma_sets(g, cap);
    if (family.truncated)
        fail(Errc::enumeration_incomplete,
             "gamma-set enumeration hit the cap of " + std::to_string(cap));
    std::vector<Bitset> fam;
    fam.reserve(family.sets.size());
    for (const VertexSet& s : family.sets) fam.push_back(to_bitset(g.order(), s));
    if (family.gamma == 0) return static_cast<int>(fam.size()); // single empty set
    return SetPacker(std::move(fam), g.order(), family.gamma).run();
}

VertexSet canonical_gamma_set_strong(int n, int m) {
    if (n < 2 || m < 2)
        fail(Errc::invalid_argument, "grid factors must have order at least 2");
    GridSpec grid{ProductKind::strong, n, m};
    VertexSet rows = canonical_path_gamma_sets(n).front();
    VertexSet cols = canonical_path_gamma_sets(m).front();
    VertexSet out;
    out.reserve(rows.size() * cols.size());
    for (int i : rows)
        for (int j : cols) out.push_back(grid.flat(i + 1, j + 1));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gridbond
