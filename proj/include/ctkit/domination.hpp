#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ctkit {

enum class DomKind { Total, Semitotal };

inline const char* kind_name(DomKind k) { return k == DomKind::Total ? "total" : "semitotal"; }

struct Budget {
    std::uint64_t nodes = 100'000'000;
    double seconds = 60.0;
};

// Counts search nodes against a Budget; throws Timeout when exhausted.
class BudgetMeter {
public:
    explicit BudgetMeter(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    void tick() {
        if (++nodes_ > budget_.nodes) throw Error(Errc::Timeout, "node budget exhausted");
        if ((nodes_ & 0x3ff) == 0 && elapsed() > budget_.seconds)
            throw Error(Errc::Timeout, "time budget exhausted");
    }
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    std::uint64_t nodes() const { return nodes_; }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

// Rows a candidate covers: open neighbourhoods for total, closed for semitotal.
inline std::vector<VertexSet> cover_rows(const Graph& g, DomKind kind) {
    std::vector<VertexSet> rows(g.n());
    for (int v = 0; v < g.n(); ++v) rows[v] = kind == DomKind::Total ? g.nbrs(v) : g.closed_nbrs(v);
    return rows;
}

inline bool is_dom_set(const Graph& g, const VertexSet& d, DomKind kind) {
    if (!d.subset_of(g.vertices())) return false;
    VertexSet covered;
    d.for_each([&](int x) { covered |= kind == DomKind::Total ? g.nbrs(x) : g.closed_nbrs(x); });
    if (covered != g.vertices()) return false;
    if (kind == DomKind::Total) return true;
    bool ok = true;
    d.for_each([&](int x) {
        if (!ok) return;
        VertexSet b = ball(g, x, 2) & d;
        b.reset(x);
        if (b.empty()) ok = false;
    });
    return ok;
}

inline void check_admissible(const Graph& g, DomKind kind) {
    if (kind == DomKind::Semitotal && g.n() < 2) throw Error(Errc::IsolatedVertex, "semitotal needs n >= 2");
    if (g.n() == 0) throw Error(Errc::IsolatedVertex, "empty graph");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) throw Error(Errc::IsolatedVertex, "vertex " + std::to_string(v));
}

inline VertexSet private_neighborhood(const Graph& g, const VertexSet& d, int x) {
    if (x < 0 || x >= g.n() || !d.test(x)) throw Error(Errc::NotInSet, "vertex " + std::to_string(x));
    VertexSet out;
    for (int y = 0; y < g.n(); ++y) {
        VertexSet hit = g.nbrs(y) & d;
        if (hit.count() == 1 && hit.test(x)) out.set(y);
    }
    return out;
}

inline VertexSet witnesses(const Graph& g, const VertexSet& d, int x) {
    if (x < 0 || x >= g.n() || !d.test(x)) throw Error(Errc::NotInSet, "vertex " + std::to_string(x));
    VertexSet b = ball(g, x, 2) & d;
    b.reset(x);
    return b;
}

namespace detail {

// Greedy dominating set, valid for the kind; used as the initial upper bound.
inline VertexSet greedy_dom_set(const Graph& g, DomKind kind, const Proximity& prox) {
    const auto rows = cover_rows(g, kind);
    const VertexSet all = g.vertices();
    VertexSet d, covered;
    while (covered != all) {
        VertexSet left = all - covered;
        int best = -1, gain = -1;
        for (int c = 0; c < g.n(); ++c) {
            int k = rows[c].intersect_count(left);
            if (k > gain) gain = k, best = c;
        }
        d.set(best);
        covered |= rows[best];
    }
    if (kind == DomKind::Semitotal) {
        for (int x = d.first(); x >= 0; x = d.next(x)) {
            if (!(prox.within2[x] & d).empty()) continue;
            d.set(g.nbrs(x).first());
        }
    }
    return d;
}

// Branch and bound over the most constrained undominated vertex.
class MinDomSearch {
public:
    MinDomSearch(const Graph& g, DomKind kind, BudgetMeter& meter)
        : g_(g), kind_(kind), meter_(meter), prox_(g), rows_(cover_rows(g, kind)), all_(g.vertices()) {}

    // Smallest set of size < limit, or nullopt. With first_only, any set of size < limit.
    std::optional<VertexSet> run(int limit, bool first_only) {
        best_size_ = limit;
        first_only_ = first_only;
        found_ = false;
        rec(VertexSet{}, 0, VertexSet{}, VertexSet{});
        if (!found_) return std::nullopt;
        return best_;
    }

    const Proximity& proximity() const { return prox_; }

private:
    void record(const VertexSet& d, int size) {
        best_ = d;
        best_size_ = size;
        found_ = true;
    }

    void rec(const VertexSet& d, int size, const VertexSet& covered, VertexSet excluded) {
        meter_.tick();
        if (size >= best_size_) return;
        const VertexSet undominated = all_ - covered;
        if (undominated.empty()) {
            if (kind_ == DomKind::Total) return record(d, size);
            int pick = -1, fewest = kMaxVertices + 1;
            VertexSet pick_cands;
            for (int x = d.first(); x >= 0; x = d.next(x)) {
                if (prox_.within2[x].intersects(d)) continue;
                VertexSet cands = prox_.within2[x] - excluded;
                if (cands.count() < fewest) fewest = cands.count(), pick = x, pick_cands = cands;
            }
            if (pick < 0) return record(d, size);
            if (size + 1 >= best_size_) return;
            for (int c = pick_cands.first(); c >= 0; c = pick_cands.next(c)) {
                VertexSet nd = d;
                nd.set(c);
                rec(nd, size + 1, covered | rows_[c], excluded);
                if (first_only_ && found_) return;
                excluded.set(c);
            }
            return;
        }

        int maxcov = 0;
        for (int c = 0; c < g_.n(); ++c) {
            if (excluded.test(c) || d.test(c)) continue;
            int k = rows_[c].intersect_count(undominated);
            if (k > maxcov) maxcov = k;
        }
        if (maxcov == 0) return;
        const int need = (undominated.count() + maxcov - 1) / maxcov;
        if (size + need >= best_size_) return;

        int fewest = kMaxVertices + 1;
        VertexSet pick_cands;
        for (int u = undominated.first(); u >= 0; u = undominated.next(u)) {
            VertexSet cands = (kind_ == DomKind::Total ? g_.nbrs(u) : g_.closed_nbrs(u)) - excluded;
            int k = cands.count();
            if (k < fewest) {
                fewest = k, pick_cands = cands;
                if (k <= 1) break;
            }
        }
        if (fewest == 0) return;

        // Try candidates with the largest fresh coverage first.
        std::vector<std::pair<int, int>> order;
        pick_cands.for_each([&](int c) { order.emplace_back(-rows_[c].intersect_count(undominated), c); });
        std::sort(order.begin(), order.end());
        for (auto [neg, c] : order) {
            VertexSet nd = d;
            nd.set(c);
            rec(nd, size + 1, covered | rows_[c], excluded);
            if (first_only_ && found_) return;
            excluded.set(c);
        }
    }

    const Graph& g_;
    DomKind kind_;
    BudgetMeter& meter_;
    Proximity prox_;
    std::vector<VertexSet> rows_;
    VertexSet all_;
    VertexSet best_;
    int best_size_ = 0;
    bool first_only_ = false;
    bool found_ = false;
};

inline VertexSet lift(const VertexSet& local, const std::vector<int>& map) {
    VertexSet out;
    local.for_each([&](int v) { out.set(map[v]); });
    return out;
}

} // namespace detail

// A minimum dominating set of the given kind. Disconnected graphs are solved per component.
inline VertexSet min_dom_set(const Graph& g, DomKind kind, const Budget& budget = {}) {
    check_admissible(g, kind);
    BudgetMeter meter(budget);
    VertexSet out;
    for (const VertexSet& comp : components(g)) {
        Graph h = comp == g.vertices() ? g : induced_subgraph(g, comp);
        detail::MinDomSearch search(h, kind, meter);
        VertexSet greedy = detail::greedy_dom_set(h, kind, search.proximity());
        auto better = search.run(greedy.count(), false);
        VertexSet local = better ? *better : greedy;
        out |= detail::lift(local, comp.to_vector());
    }
    return out;
}

inline int gamma(const Graph& g, DomKind kind, const Budget& budget = {}) {
    return min_dom_set(g, kind, budget).count();
}

// Whether a dominating set of size <= k exists. Connected graphs use a first-hit search.
inline bool gamma_at_most(const Graph& g, DomKind kind, int k, const Budget& budget = {}) {
    check_admissible(g, kind);
    if (!is_connected(g)) return gamma(g, kind, budget) <= k;
    if (k < 1) return false;
    BudgetMeter meter(budget);
    detail::MinDomSearch search(g, kind, meter);
    if (detail::greedy_dom_set(g, kind, search.proximity()).count() <= k) return true;
    return search.run(k + 1, true).has_value();
}

// Cross-check mode: smallest size s such that some s-subset dominates (n <= 20).
inline int gamma_exhaustive(const Graph& g, DomKind kind) {
    check_admissible(g, kind);
    if (g.n() > 20) throw Error(Errc::Capacity, "exhaustive mode is limited to 20 vertices");
    const int n = g.n();
    const std::uint32_t full = 1u << n;
    for (int s = 1; s <= n; ++s) {
        for (std::uint32_t mask = 0; mask < full; ++mask) {
            if (std::popcount(mask) != s) continue;
            VertexSet d;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1u) d.set(v);
            if (is_dom_set(g, d, kind)) return s;
        }
    }
    throw Error(Errc::TheoryViolation, "no dominating set found");
}

// Lazy lexicographic enumeration of all dominating sets of an exact size.
class DomSetStream {
public:
    DomSetStream(const Graph& g, DomKind kind, int size, const Budget& budget = {})
        : g_(g), kind_(kind), size_(size), meter_(budget), prox_(g), rows_(cover_rows(g, kind)),
          suffix_(g.n() + 1), all_(g.vertices()) {
        check_admissible(g, kind);
        for (int v = g.n() - 1; v >= 0; --v) {
            suffix_[v] = suffix_[v + 1] | rows_[v];
            maxcov_ = std::max(maxcov_, rows_[v].count());
        }
        if (size_ < 1 || size_ > g.n()) done_ = true;
        chosen_.reserve(size_ > 0 ? size_ : 0);
    }

    std::optional<VertexSet> next() {
        if (done_) return std::nullopt;
        // Resume: the last emitted leaf sits at depth size_; start by moving it on.
        int from = started_ ? pop() + 1 : 0;
        started_ = true;
        while (true) {
            meter_.tick();
            const int depth = static_cast<int>(chosen_.size());
            int v = from;
            bool pushed = false;
            for (; v < g_.n(); ++v) {
                if (g_.n() - v < size_ - depth) break;
                if (viable(depth, v)) {
                    push(v);
                    pushed = true;
                    break;
                }
            }
            if (pushed) {
                if (static_cast<int>(chosen_.size()) == size_) return current_;
                from = v + 1;
                continue;
            }
            if (chosen_.empty()) {
                done_ = true;
                return std::nullopt;
            }
            from = pop() + 1;
        }
    }

    std::uint64_t nodes() const { return meter_.nodes(); }

private:
    bool viable(int depth, int v) const {
        const VertexSet cov = coverage_.back() | rows_[v];
        const int left = size_ - depth - 1;
        const VertexSet undominated = all_ - cov;
        if (left == 0) {
            if (!undominated.empty()) return false;
            if (kind_ == DomKind::Total) return true;
            VertexSet d = current_;
            d.set(v);
            for (int x = d.first(); x >= 0; x = d.next(x))
                if (!prox_.within2[x].intersects(d)) return false;
            return true;
        }
        if (!undominated.subset_of(suffix_[v + 1])) return false;
        if (maxcov_ * left < undominated.count()) return false;
        if (kind_ == DomKind::Semitotal) {
            VertexSet d = current_;
            d.set(v);
            const VertexSet pool = d | (all_ - VertexSet::prefix(v + 1));
            for (int x = d.first(); x >= 0; x = d.next(x))
                if (!prox_.within2[x].intersects(pool)) return false;
        }
        return true;
    }

    void push(int v) {
        chosen_.push_back(v);
        current_.set(v);
        coverage_.push_back(coverage_.back() | rows_[v]);
    }
    int pop() {
        int v = chosen_.back();
        chosen_.pop_back();
        current_.reset(v);
        coverage_.pop_back();
        return v;
    }

    const Graph& g_;
    DomKind kind_;
    int size_;
    BudgetMeter meter_;
    Proximity prox_;
    std::vector<VertexSet> rows_;
    std::vector<VertexSet> suffix_;
    VertexSet all_;
    int maxcov_ = 0;
    std::vector<int> chosen_;
    VertexSet current_;
    std::vector<VertexSet> coverage_{VertexSet{}};
    bool started_ = false;
    bool done_ = false;
};

inline std::vector<VertexSet> enumerate_dom_sets(const Graph& g, DomKind kind, int size, const Budget& budget = {}) {
    std::vector<VertexSet> out;
    DomSetStream stream(g, kind, size, budget);
    while (auto d = stream.next()) out.push_back(*d);
    return out;
}

} // namespace ctkit
