#pragma once

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <string>
#include <vector>

#include "domination.hpp"
#include "named.hpp"

namespace ctkit {

namespace detail {

class InducedMatcher {
public:
    InducedMatcher(const Graph& g, const Graph& h) : g_(g), h_(h), map_(h.n(), -1) {}

    std::optional<std::vector<int>> run() {
        if (h_.n() > g_.n()) return std::nullopt;
        if (extend(0, VertexSet{})) return map_;
        return std::nullopt;
    }

private:
    // Pattern vertices are placed in index order, so the first hit is the
    // lexicographically smallest image tuple.
    bool extend(int i, const VertexSet& used) {
        if (i == h_.n()) return true;
        VertexSet cand = g_.vertices() - used;
        for (int j = 0; j < i; ++j) {
            if (h_.adjacent(i, j)) cand &= g_.nbrs(map_[j]);
            else cand -= g_.nbrs(map_[j]);
        }
        const int need = h_.degree(i);
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            if (g_.degree(v) < need) continue;
            map_[i] = v;
            VertexSet u = used;
            u.set(v);
            if (extend(i + 1, u)) return true;
        }
        map_[i] = -1;
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> map_;
};

// Disconnected patterns: components are placed one at a time, each inside what
// the closed neighbourhoods of the earlier images leave free. Identical
// consecutive components take images with increasing least vertex.
class ComponentMatcher {
public:
    ComponentMatcher(const Graph& g, const Graph& h) : g_(g), map_(h.n(), -1) {
        for (const VertexSet& c : components(h)) {
            Piece p;
            // BFS order so every vertex after the first has an earlier neighbour.
            std::vector<int> order{c.first()};
            VertexSet seen = VertexSet::single(c.first());
            for (std::size_t i = 0; i < order.size(); ++i) {
                const VertexSet nx = h.nbrs(order[i]) - seen;
                nx.for_each([&](int v) { order.push_back(v); });
                seen |= nx;
            }
            p.orig = order;
            std::vector<VertexSet> rows(order.size());
            for (std::size_t i = 0; i < order.size(); ++i)
                for (std::size_t j = 0; j < order.size(); ++j)
                    if (h.adjacent(order[i], order[j])) rows[i].set(static_cast<int>(j));
            p.g = Graph::from_rows(rows);
            pieces_.push_back(std::move(p));
        }
        std::stable_sort(pieces_.begin(), pieces_.end(),
                         [](const Piece& a, const Piece& b) { return a.g.n() > b.g.n(); });
    }

    std::optional<std::vector<int>> run() {
        if (place(0, g_.vertices(), -1)) return map_;
        return std::nullopt;
    }

private:
    struct Piece {
        Graph g;
        std::vector<int> orig;
    };

    bool place(std::size_t ci, const VertexSet& avail, int prev_first) {
        if (ci == pieces_.size()) return true;
        const Piece& p = pieces_[ci];
        if (avail.count() < p.g.n()) return false;
        // The last piece ignores the symmetry floor, which only prunes, so its
        // answer depends on avail alone and can be cached.
        const bool last = ci + 1 == pieces_.size();
        if (last && failed_last_.count(avail)) return false;
        const bool twin = !last && ci > 0 && pieces_[ci - 1].g == p.g;
        std::vector<int> img(p.g.n(), -1);
        std::unordered_set<VertexSet, VertexSetHash> tried;
        const bool ok = embed(ci, avail, twin ? prev_first : -1, img, 0, VertexSet{}, tried);
        if (last && !ok) failed_last_.insert(avail);
        return ok;
    }

    bool embed(std::size_t ci, const VertexSet& avail, int floor, std::vector<int>& img, int i, const VertexSet& used,
               std::unordered_set<VertexSet, VertexSetHash>& tried) {
        const Piece& p = pieces_[ci];
        if (i == p.g.n()) {
            if (floor >= 0 && used.first() <= floor) return false;
            if (!tried.insert(used).second) return false;
            VertexSet rest = avail;
            used.for_each([&](int v) { rest -= g_.closed_nbrs(v); });
            if (!place(ci + 1, rest, used.first())) return false;
            for (int k = 0; k < p.g.n(); ++k) map_[p.orig[k]] = img[k];
            return true;
        }
        VertexSet cand = avail - used;
        if (floor >= 0) cand -= VertexSet::prefix(floor + 1);
        for (int j = 0; j < i; ++j) {
            if (p.g.adjacent(i, j)) cand &= g_.nbrs(img[j]);
            else cand -= g_.nbrs(img[j]);
        }
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            img[i] = v;
            VertexSet u = used;
            u.set(v);
            if (embed(ci, avail, floor, img, i + 1, u, tried)) return true;
        }
        img[i] = -1;
        return false;
    }

    const Graph& g_;
    std::vector<Piece> pieces_;
    std::vector<int> map_;
    std::unordered_set<VertexSet, VertexSetHash> failed_last_;
};

} // namespace detail

// Injective map V(H) -> V(G) preserving edges and non-edges, or nullopt. For
// connected H the map is the lexicographically smallest image tuple.
inline std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
    if (h.n() > g.n()) return std::nullopt;
    if (h.n() > 1 && !is_connected(h)) return detail::ComponentMatcher(g, h).run();
    return detail::InducedMatcher(g, h).run();
}

inline bool is_h_free(const Graph& g, const Graph& h) { return !contains_induced(g, h).has_value(); }

inline bool is_h_free(const Graph& g, const std::string& spec) { return is_h_free(g, make_named_graph(spec)); }

namespace detail {

// Grows induced paths from start, the smallest vertex of the cycle sought.
inline bool grow_hole(const Graph& g, int min_len, std::vector<int>& path, const VertexSet& blocked) {
    const int start = path.front(), last = path.back();
    const VertexSet ext = g.nbrs(last) - blocked;
    for (int v = ext.first(); v >= 0; v = ext.next(v)) {
        const int len = static_cast<int>(path.size()) + 1;
        if (g.adjacent(v, start)) {
            if (len >= min_len && len >= 4) {
                path.push_back(v);
                return true;
            }
            continue; // v closes a shorter cycle, so any extension has a chord
        }
        path.push_back(v);
        VertexSet b = blocked;
        if (path.size() >= 3) b |= g.closed_nbrs(path[path.size() - 2]);
        b.set(v);
        if (grow_hole(g, min_len, path, b)) return true;
        path.pop_back();
    }
    return false;
}

} // namespace detail

// An induced cycle with at least min_len (>= 4) vertices, listed in order, or nullopt.
inline std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g, int min_len) {
    if (min_len < 4) throw Error(Errc::InvalidInput, "min_len must be at least 4");
    for (int s = 0; s < g.n(); ++s) {
        VertexSet blocked = VertexSet::prefix(s + 1);
        std::vector<int> path{s};
        if (detail::grow_hole(g, min_len, path, blocked)) return path;
    }
    return std::nullopt;
}

enum class Complexity { PolynomialTime, Hard };

struct DichotomyVerdict {
    Complexity verdict = Complexity::Hard;
    std::string justification;
};

// Dichotomy for 1- and 2-Edge Contraction on H-free graphs. t = |V(H)| saturates
// the unbounded quantifier over the families.
inline DichotomyVerdict classify_dichotomy(const Graph& h, DomKind kind, int k) {
    if (k != 1 && k != 2) throw Error(Errc::InvalidInput, "k must be 1 or 2");
    if (h.n() > 12) throw Error(Errc::Capacity, "pattern larger than 12 vertices");
    const std::string t = std::to_string(h.n());
    std::vector<std::string> families{"P5+" + t + "K1"};
    families.push_back(kind == DomKind::Total ? "P4+" + t + "P3" : "P3+" + t + "P2");
    const std::vector<std::string> names{"P5+tK1", kind == DomKind::Total ? "P4+tP3" : "P3+tP2"};
    for (std::size_t i = 0; i < families.size(); ++i) {
        if (contains_induced(make_named_graph(families[i]), h))
            return {Complexity::PolynomialTime, "H is an induced subgraph of " + names[i]};
    }
    return {Complexity::Hard, "H is not an induced subgraph of " + names[0] + " or " + names[1]};
}

} // namespace ctkit
