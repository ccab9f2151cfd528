#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace ctkit {

enum class Pattern { P3, P4, K13, TwoP3 };
enum class STConfig { O1 = 1, O2, O3, O4, O5, O6, O7 };

inline const char* pattern_name(Pattern p) {
    switch (p) {
    case Pattern::P3: return "P3";
    case Pattern::P4: return "P4";
    case Pattern::K13: return "K13";
    case Pattern::TwoP3: return "2P3";
    }
    return "?";
}

inline std::string config_name(STConfig c) { return "O" + std::to_string(static_cast<int>(c)); }

inline constexpr std::array<STConfig, 7> kAllConfigs{STConfig::O1, STConfig::O2, STConfig::O3, STConfig::O4,
                                                     STConfig::O5, STConfig::O6, STConfig::O7};

using PatternWitness = std::vector<int>;

// How the friendly-triple distance condition treats the two edge endpoints.
enum class FriendlyReading {
    Symmetric,     // z within distance 2 of x or of y
    IndexOriented  // x < y and z within distance 2 of y
};

// A small relational shape: k positions, pairwise edge / distance-exactly-2
// requirements, ordering constraints, and position pairs allowed to coincide.
struct Shape {
    enum class Rel { Edge, Dist2 };
    struct Req {
        Rel rel;
        int i, j; // i < j
    };
    int k = 0;
    std::vector<Req> reqs;
    std::vector<std::pair<int, int>> ascending; // tuple[i] < tuple[j]
    std::vector<std::pair<int, int>> may_coincide;
};

inline Shape shape_of(Pattern p) {
    using R = Shape::Rel;
    switch (p) {
    case Pattern::P3: return {3, {{R::Edge, 0, 1}, {R::Edge, 1, 2}}, {}, {}};
    case Pattern::P4: return {4, {{R::Edge, 0, 1}, {R::Edge, 1, 2}, {R::Edge, 2, 3}}, {}, {}};
    case Pattern::K13: return {4, {{R::Edge, 0, 1}, {R::Edge, 0, 2}, {R::Edge, 0, 3}}, {{1, 2}, {2, 3}}, {}};
    case Pattern::TwoP3:
        return {6, {{R::Edge, 0, 1}, {R::Edge, 1, 2}, {R::Edge, 3, 4}, {R::Edge, 4, 5}}, {}, {}};
    }
    return {};
}

// Tuple positions 0..k-1 correspond to the drawn vertices 1..k.
inline Shape shape_of(STConfig c) {
    using R = Shape::Rel;
    switch (c) {
    case STConfig::O1: return shape_of(Pattern::TwoP3);
    case STConfig::O2: return {6, {{R::Edge, 0, 1}, {R::Dist2, 1, 2}, {R::Edge, 3, 4}, {R::Edge, 4, 5}}, {}, {}};
    case STConfig::O3:
        return {6, {{R::Edge, 0, 1}, {R::Dist2, 1, 2}, {R::Edge, 3, 4}, {R::Dist2, 4, 5}}, {}, {{2, 5}}};
    case STConfig::O4: return {4, {{R::Edge, 0, 1}, {R::Edge, 1, 2}, {R::Dist2, 2, 3}}, {}, {}};
    case STConfig::O5: return shape_of(Pattern::K13);
    case STConfig::O6: return {4, {{R::Edge, 0, 1}, {R::Dist2, 1, 2}, {R::Edge, 1, 3}}, {{0, 3}}, {}};
    case STConfig::O7: return {4, {{R::Edge, 0, 1}, {R::Dist2, 1, 2}, {R::Edge, 2, 3}}, {}, {}};
    }
    return {};
}

// Pattern and configuration search inside a vertex set of one fixed graph.
class Detector {
public:
    explicit Detector(const Graph& g) : g_(g), prox_(g) {}

    const Graph& graph() const { return g_; }
    const Proximity& proximity() const { return prox_; }

    // Lexicographically first tuple realising the shape inside d.
    std::optional<PatternWitness> find(const VertexSet& d, const Shape& s) const {
        PatternWitness t(s.k, -1);
        if (extend(d, s, t, 0)) return t;
        return std::nullopt;
    }

    std::optional<PatternWitness> find_pattern(const VertexSet& d, Pattern p) const { return find(d, shape_of(p)); }

    std::optional<std::pair<STConfig, PatternWitness>> find_st_config(const VertexSet& d,
                                                                       std::optional<STConfig> which = {}) const {
        for (STConfig c : kAllConfigs) {
            if (which && *which != c) continue;
            if (auto w = find(d, shape_of(c))) return std::make_pair(c, *w);
        }
        return std::nullopt;
    }

    std::optional<PatternWitness> find_friendly_triple(const VertexSet& d,
                                                       FriendlyReading reading = FriendlyReading::Symmetric) const {
        for (int x = d.first(); x >= 0; x = d.next(x)) {
            const VertexSet ys = g_.nbrs(x) & d;
            for (int y = ys.first(); y >= 0; y = ys.next(y)) {
                if (reading == FriendlyReading::IndexOriented && y < x) continue;
                VertexSet zs = prox_.within2[y];
                if (reading == FriendlyReading::Symmetric) zs |= prox_.within2[x];
                zs &= d;
                zs.reset(x);
                zs.reset(y);
                if (zs.any()) return PatternWitness{x, y, zs.first()};
            }
        }
        return std::nullopt;
    }

    bool validate(const VertexSet& d, const Shape& s, const PatternWitness& t) const {
        if (static_cast<int>(t.size()) != s.k) return false;
        for (int i = 0; i < s.k; ++i) {
            if (t[i] < 0 || t[i] >= g_.n() || !d.test(t[i])) return false;
            for (int j = i + 1; j < s.k; ++j)
                if (t[i] == t[j] && !coincide_ok(s, i, j)) return false;
        }
        for (const auto& r : s.reqs)
            if (!related(r.rel, t[r.i], t[r.j])) return false;
        for (auto [i, j] : s.ascending)
            if (!(t[i] < t[j])) return false;
        return true;
    }

    bool validate_friendly(const VertexSet& d, const PatternWitness& t,
                           FriendlyReading reading = FriendlyReading::Symmetric) const {
        if (t.size() != 3) return false;
        for (int v : t)
            if (v < 0 || v >= g_.n() || !d.test(v)) return false;
        const int x = t[0], y = t[1], z = t[2];
        if (x == y || y == z || x == z || !g_.adjacent(x, y)) return false;
        if (reading == FriendlyReading::IndexOriented) return x < y && prox_.within2[y].test(z);
        return prox_.within2[x].test(z) || prox_.within2[y].test(z);
    }

private:
    static bool coincide_ok(const Shape& s, int i, int j) {
        for (auto [a, b] : s.may_coincide)
            if ((a == i && b == j) || (a == j && b == i)) return true;
        return false;
    }

    bool related(Shape::Rel rel, int a, int b) const {
        return rel == Shape::Rel::Edge ? g_.adjacent(a, b) : prox_.exactly2[a].test(b);
    }

    bool extend(const VertexSet& d, const Shape& s, PatternWitness& t, int pos) const {
        if (pos == s.k) return true;
        VertexSet cand = d;
        for (const auto& r : s.reqs) {
            if (r.j != pos) continue;
            cand &= r.rel == Shape::Rel::Edge ? g_.nbrs(t[r.i]) : prox_.exactly2[t[r.i]];
        }
        int floor = -1;
        for (auto [i, j] : s.ascending)
            if (j == pos && t[i] > floor) floor = t[i];
        for (int v = cand.next(floor); v >= 0; v = cand.next(v)) {
            bool clash = false;
            for (int q = 0; q < pos && !clash; ++q) clash = t[q] == v && !coincide_ok(s, q, pos);
            if (clash) continue;
            t[pos] = v;
            if (extend(d, s, t, pos + 1)) return true;
        }
        t[pos] = -1;
        return false;
    }

    const Graph& g_;
    Proximity prox_;
};

inline std::optional<PatternWitness> find_pattern(const Graph& g, const VertexSet& d, Pattern p) {
    return Detector(g).find_pattern(d, p);
}

inline std::optional<PatternWitness> find_friendly_triple(const Graph& g, const VertexSet& d,
                                                          FriendlyReading reading = FriendlyReading::Symmetric) {
    return Detector(g).find_friendly_triple(d, reading);
}

inline std::optional<std::pair<STConfig, PatternWitness>> find_st_config(const Graph& g, const VertexSet& d,
                                                                          std::optional<STConfig> which = {}) {
    return Detector(g).find_st_config(d, which);
}

} // namespace ctkit
