#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace ctkit {

using Edge = std::pair<int, int>;

// Immutable simple graph with bitset adjacency rows and optional labels.
class Graph {
public:
    Graph() = default;

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const {
        int s = 0;
        for (const auto& r : adj_) s += r.count();
        return s / 2;
    }
    const VertexSet& nbrs(int v) const { return adj_[v]; }
    VertexSet closed_nbrs(int v) const {
        VertexSet s = adj_[v];
        s.set(v);
        return s;
    }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::prefix(n()); }

    // Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n(); ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
        return out;
    }

    bool has_labels() const { return !labels_.empty(); }
    std::string label(int v) const {
        if (labels_.empty() || labels_[v].empty()) return std::to_string(v);
        return labels_[v];
    }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& lbl) const {
        for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
            if (labels_[v] == lbl) return v;
        return std::nullopt;
    }
    int at(const std::string& lbl) const {
        auto i = index_of(lbl);
        if (!i) throw Error(Errc::InvalidInput, "no vertex labelled " + lbl);
        return *i;
    }

    bool has_isolated_vertex() const {
        for (const auto& r : adj_)
            if (r.empty()) return true;
        return false;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

    // Raw constructor used by the free functions below; validates symmetry.
    static Graph from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels = {}) {
        const int n = static_cast<int>(rows.size());
        if (n > kMaxVertices)
            throw Error(Errc::Capacity, std::to_string(n) + " vertices exceeds " + std::to_string(kMaxVertices));
        const VertexSet all = VertexSet::prefix(n);
        for (int u = 0; u < n; ++u) {
            if (rows[u].test(u)) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
            if (!rows[u].subset_of(all)) throw Error(Errc::IndexOutOfRange, "row " + std::to_string(u));
            rows[u].for_each([&](int v) {
                if (!rows[v].test(u)) throw Error(Errc::InvalidInput, "asymmetric adjacency");
            });
        }
        if (!labels.empty()) {
            if (static_cast<int>(labels.size()) != n) throw Error(Errc::InvalidInput, "label count mismatch");
            std::unordered_map<std::string, int> seen;
            for (int v = 0; v < n; ++v) {
                if (labels[v].empty()) continue;
                if (!seen.emplace(labels[v], v).second)
                    throw Error(Errc::InvalidInput, "duplicate label " + labels[v]);
            }
        }
        Graph g;
        g.adj_ = std::move(rows);
        g.labels_ = std::move(labels);
        return g;
    }

private:
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0 || n > kMaxVertices)
        throw Error(Errc::Capacity, std::to_string(n) + " vertices exceeds " + std::to_string(kMaxVertices));
    std::vector<VertexSet> rows(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(Errc::IndexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
        if (rows[u].test(v))
            throw Error(Errc::DuplicateEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
        rows[u].set(v);
        rows[v].set(u);
    }
    return Graph::from_rows(std::move(rows));
}

// Merge u and v into the min(u,v) slot; higher indices shift down past max(u,v).
inline Graph contract_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.adjacent(u, v))
        throw Error(Errc::NotAnEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    const int lo = std::min(u, v), hi = std::max(u, v);
    std::vector<VertexSet> rows;
    rows.reserve(g.n() - 1);
    for (int w = 0; w < g.n(); ++w) {
        if (w == hi) continue;
        VertexSet r = g.nbrs(w);
        if (w == lo) {
            r |= g.nbrs(hi);
            r.reset(lo);
            r.reset(hi);
        } else if (r.test(hi)) {
            r.reset(hi);
            r.set(lo);
        }
        rows.push_back(r.erase_shift(hi));
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels = g.labels();
        labels.erase(labels.begin() + hi);
    }
    return Graph::from_rows(std::move(rows), std::move(labels));
}

inline Graph contract_edge(const Graph& g, Edge e) { return contract_edge(g, e.first, e.second); }

// BFS distances from s; -1 for unreachable.
inline std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(g.n(), -1);
    VertexSet frontier = VertexSet::single(s), seen = frontier;
    int d = 0;
    while (frontier.any()) {
        VertexSet nxt;
        frontier.for_each([&](int v) {
            dist[v] = d;
            nxt |= g.nbrs(v);
        });
        nxt -= seen;
        seen |= nxt;
        frontier = nxt;
        ++d;
    }
    return dist;
}

inline std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw Error(Errc::IndexOutOfRange, "distance query");
    int d = bfs_distances(g, u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

inline std::optional<int> set_distance(const Graph& g, const VertexSet& a, const VertexSet& b) {
    std::optional<int> best;
    a.for_each([&](int x) {
        auto dist = bfs_distances(g, x);
        b.for_each([&](int y) {
            if (dist[y] >= 0 && (!best || dist[y] < *best)) best = dist[y];
        });
    });
    return best;
}

// All vertices within distance r of v (v included).
inline VertexSet ball(const Graph& g, int v, int r) {
    VertexSet seen = VertexSet::single(v), frontier = seen;
    for (int i = 0; i < r && frontier.any(); ++i) {
        VertexSet nxt;
        frontier.for_each([&](int w) { nxt |= g.nbrs(w); });
        nxt -= seen;
        seen |= nxt;
        frontier = nxt;
    }
    return seen;
}

// Rows of vertices at distance <= 2 (self excluded) and at distance exactly 2.
struct Proximity {
    std::vector<VertexSet> within2;
    std::vector<VertexSet> exactly2;

    explicit Proximity(const Graph& g) : within2(g.n()), exactly2(g.n()) {
        for (int v = 0; v < g.n(); ++v) {
            VertexSet b = ball(g, v, 2);
            b.reset(v);
            within2[v] = b;
            exactly2[v] = b - g.nbrs(v);
        }
    }
};

inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> keep = s.to_vector();
    std::vector<int> pos(g.n(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        if (keep[i] >= g.n()) throw Error(Errc::IndexOutOfRange, "induced_subgraph");
        pos[keep[i]] = i;
    }
    std::vector<VertexSet> rows(keep.size());
    std::vector<std::string> labels;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        (g.nbrs(keep[i]) & s).for_each([&](int w) { rows[i].set(pos[w]); });
        if (g.has_labels()) labels.push_back(g.labels()[keep[i]]);
    }
    return Graph::from_rows(std::move(rows), std::move(labels));
}

inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (left.any()) {
        VertexSet comp = ball(g, left.first(), g.n());
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

inline bool is_connected(const Graph& g) { return g.n() == 0 || components(g).size() == 1; }

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
    return build_graph(a.n() + b.n(), es);
}

struct Subdivision {
    Graph h;
    std::vector<Edge> base_edges;            // edges (u,v), u < v, of the original graph
    std::vector<std::array<int, 4>> path;    // e1..e4 with e1 adjacent to u
};

// Replace every edge uv by a path u e1 e2 e3 e4 v; new vertices are appended per edge.
inline Subdivision four_subdivide(const Graph& g) {
    Subdivision s;
    s.base_edges = g.edges();
    const int m = static_cast<int>(s.base_edges.size());
    const int total = g.n() + 4 * m;
    if (total > kMaxVertices) throw Error(Errc::Capacity, "subdivision needs " + std::to_string(total) + " vertices");
    std::vector<Edge> es;
    int next = g.n();
    for (auto [u, v] : s.base_edges) {
        std::array<int, 4> p{next, next + 1, next + 2, next + 3};
        next += 4;
        es.emplace_back(u, p[0]);
        es.emplace_back(p[0], p[1]);
        es.emplace_back(p[1], p[2]);
        es.emplace_back(p[2], p[3]);
        es.emplace_back(p[3], v);
        s.path.push_back(p);
    }
    s.h = build_graph(total, es);
    return s;
}

// Labelled incremental construction used by the gadget builders.
class GraphBuilder {
public:
    int add(const std::string& label) {
        auto [it, fresh] = index_.emplace(label, static_cast<int>(labels_.size()));
        if (!fresh) throw Error(Errc::InvalidInput, "duplicate label " + label);
        labels_.push_back(label);
        edges_.emplace_back();
        return it->second;
    }
    int id(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw Error(Errc::InvalidInput, "unknown label " + label);
        return it->second;
    }
    bool has(const std::string& label) const { return index_.count(label) > 0; }
    int size() const { return static_cast<int>(labels_.size()); }

    // Idempotent: repeated connections collapse to one edge.
    void connect(int a, int b) {
        if (a == b) throw Error(Errc::SelfLoop, labels_[a]);
        edges_[a].set(b);
        edges_[b].set(a);
    }
    void connect(const std::string& a, const std::string& b) { connect(id(a), id(b)); }
    void clique(const std::vector<int>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) connect(vs[i], vs[j]);
    }

    Graph build() const { return Graph::from_rows(edges_, labels_); }

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> edges_;
    std::unordered_map<std::string, int> index_;
};

} // namespace ctkit
