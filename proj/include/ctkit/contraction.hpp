#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "detectors.hpp"
#include "domination.hpp"

namespace ctkit {

struct CtCertificate {
    std::vector<Edge> sequence;        // brute force: edges in successively contracted graphs
    VertexSet final_set;               // brute force: minimum set of the terminal graph
    std::optional<VertexSet> trigger;  // characterization: the set carrying the witness
    PatternWitness witness;
    std::string witness_kind;          // "P3", "friendly", "P4", "O4", ...
};

struct CtResult {
    int value = 0; // 1, 2, 3; 0 means undefined
    int gamma = 0;
    std::string reason;
    CtCertificate cert;

    bool defined() const { return value != 0; }
};

// Diagnostics collected by the exhaustive search.
struct CtDiagnostics {
    bool big_drop = false; // some single contraction lowered gamma by two or more
    std::size_t graphs_examined = 0;
};

enum class CtMethod { BruteForce, Characterization };

namespace detail {

inline std::optional<std::string> ct_precondition(const Graph& g) {
    if (g.n() < 3) return "needs at least 3 vertices";
    if (!is_connected(g)) return "graph is disconnected";
    if (g.has_isolated_vertex()) return "graph has an isolated vertex";
    return std::nullopt;
}

struct RowsHash {
    std::size_t operator()(const std::vector<VertexSet>& rows) const {
        std::size_t h = rows.size();
        for (const auto& r : rows) h = h * 1000003u ^ r.hash();
        return h;
    }
};

inline std::vector<VertexSet> rows_of(const Graph& g) {
    std::vector<VertexSet> rows(g.n());
    for (int v = 0; v < g.n(); ++v) rows[v] = g.nbrs(v);
    return rows;
}

inline bool gamma_equals(const Graph& h, DomKind kind, int target, const Budget& budget) {
    if (h.n() < 2 || h.has_isolated_vertex()) return false;
    return gamma_at_most(h, kind, target, budget) && !gamma_at_most(h, kind, target - 1, budget);
}

} // namespace detail

namespace detail {

// Breadth-first over contraction sequences up to max_depth; value stays 0 when
// no sequence that short reaches gamma - 1.
inline CtResult ct_search(const Graph& g, DomKind kind, int max_depth, const Budget& budget, CtDiagnostics* diag) {
    CtResult res;
    if (auto why = ct_precondition(g)) {
        res.reason = *why;
        return res;
    }
    res.gamma = gamma(g, kind, budget);
    if (res.gamma == 2) {
        res.reason = "gamma is 2";
        return res;
    }
    const int target = res.gamma - 1;

    struct Node {
        Graph g;
        std::vector<Edge> seq;
    };
    std::vector<Node> level{{g, {}}};
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::unordered_set<std::vector<VertexSet>, RowsHash> seen;
        std::vector<Node> next;
        for (const Node& node : level) {
            for (const Edge& e : node.g.edges()) {
                Graph h = contract_edge(node.g, e);
                if (!seen.insert(rows_of(h)).second) continue;
                if (diag) ++diag->graphs_examined;
                std::vector<Edge> seq = node.seq;
                seq.push_back(e);
                if (depth == 1 && diag && h.n() >= 2 && !h.has_isolated_vertex() &&
                    gamma_at_most(h, kind, res.gamma - 2, budget))
                    diag->big_drop = true;
                if (gamma_equals(h, kind, target, budget)) {
                    res.value = depth;
                    res.cert.sequence = seq;
                    res.cert.final_set = min_dom_set(h, kind, budget);
                    return res;
                }
                if (depth < max_depth) next.push_back({std::move(h), std::move(seq)});
            }
        }
        level = std::move(next);
    }
    res.reason = "no sequence of at most " + std::to_string(max_depth) + " contractions";
    return res;
}

} // namespace detail

// Least number of contractions (at most 3) reaching gamma - 1 exactly, by exhaustive search.
inline CtResult ct_bruteforce(const Graph& g, DomKind kind, const Budget& budget = {}, CtDiagnostics* diag = nullptr) {
    CtResult res = detail::ct_search(g, kind, 3, budget, diag);
    if (!res.defined() && res.gamma > 2)
        throw Error(Errc::TheoryViolation, "no sequence of at most 3 contractions lowers gamma by one");
    return res;
}

// Verdict from the structural characterisation: level-1 witness in a minimum
// set, else a level-2 witness in a set one larger, else 3.
inline CtResult ct_characterization(const Graph& g, DomKind kind, const Budget& budget = {}) {
    CtResult res;
    if (auto why = detail::ct_precondition(g)) {
        res.reason = *why;
        return res;
    }
    res.gamma = gamma(g, kind, budget);
    if (res.gamma == 2) {
        res.reason = "gamma is 2";
        return res;
    }
    Detector det(g);

    DomSetStream minimum(g, kind, res.gamma, budget);
    while (auto d = minimum.next()) {
        std::optional<PatternWitness> w = kind == DomKind::Total ? det.find_pattern(*d, Pattern::P3)
                                                                 : det.find_friendly_triple(*d);
        if (w) {
            res.value = 1;
            res.cert.trigger = *d;
            res.cert.witness = *w;
            res.cert.witness_kind = kind == DomKind::Total ? "P3" : "friendly";
            return res;
        }
    }

    if (res.gamma + 1 <= g.n()) {
        DomSetStream bigger(g, kind, res.gamma + 1, budget);
        while (auto d = bigger.next()) {
            if (kind == DomKind::Total) {
                for (Pattern p : {Pattern::P4, Pattern::K13, Pattern::TwoP3}) {
                    if (auto w = det.find_pattern(*d, p)) {
                        res.value = 2;
                        res.cert.trigger = *d;
                        res.cert.witness = *w;
                        res.cert.witness_kind = pattern_name(p);
                        return res;
                    }
                }
            } else if (auto hit = det.find_st_config(*d)) {
                res.value = 2;
                res.cert.trigger = *d;
                res.cert.witness = hit->second;
                res.cert.witness_kind = config_name(hit->first);
                return res;
            }
        }
    }
    res.value = 3;
    return res;
}

inline CtResult ct(const Graph& g, DomKind kind, CtMethod method, const Budget& budget = {}) {
    return method == CtMethod::BruteForce ? ct_bruteforce(g, kind, budget) : ct_characterization(g, kind, budget);
}

// Whether ct(G) <= k. Throws Undefined when the contraction number is not defined.
inline bool k_edge_contraction(const Graph& g, DomKind kind, int k, CtMethod method = CtMethod::BruteForce,
                               const Budget& budget = {}) {
    if (k <= 0) return false;
    if (auto why = detail::ct_precondition(g)) throw Error(Errc::Undefined, *why);
    if (k >= 3) {
        if (gamma(g, kind, budget) == 2) throw Error(Errc::Undefined, "gamma is 2");
        return true;
    }
    if (method == CtMethod::BruteForce) {
        CtResult r = detail::ct_search(g, kind, k, budget, nullptr);
        if (r.gamma == 2) throw Error(Errc::Undefined, r.reason);
        return r.defined();
    }
    CtResult r = ct_characterization(g, kind, budget);
    if (!r.defined()) throw Error(Errc::Undefined, r.reason);
    return r.value <= k;
}

// Replays a brute-force certificate and checks it reaches gamma - 1.
inline bool replay_certificate(const Graph& g, DomKind kind, const CtResult& r, const Budget& budget = {}) {
    Graph h = g;
    for (const Edge& e : r.cert.sequence) {
        if (!h.adjacent(e.first, e.second)) return false;
        h = contract_edge(h, e);
    }
    return static_cast<int>(r.cert.sequence.size()) == r.value && gamma(h, kind, budget) == r.gamma - 1 &&
           is_dom_set(h, r.cert.final_set, kind) && r.cert.final_set.count() == r.gamma - 1;
}

// Hypothesis of the total-domination sufficient condition: some minimum TD set
// holds an edge xy and a third member within distance 2 of {x, y}.
inline std::optional<VertexSet> total_lemma_set(const Graph& g, int gamma_t, const Budget& budget = {}) {
    Detector det(g);
    DomSetStream s(g, DomKind::Total, gamma_t, budget);
    while (auto d = s.next())
        if (det.find_friendly_triple(*d)) return d;
    return std::nullopt;
}

// Hypothesis of the semitotal sufficient condition: some minimum SD set holds
// an edge, or a member with at least two witnesses.
inline std::optional<VertexSet> semitotal_lemma_set(const Graph& g, int gamma_t2, const Budget& budget = {}) {
    Detector det(g);
    DomSetStream s(g, DomKind::Semitotal, gamma_t2, budget);
    while (auto d = s.next()) {
        bool fires = false;
        for (int x = d->first(); x >= 0 && !fires; x = d->next(x)) {
            fires = g.nbrs(x).intersects(*d) || (det.proximity().within2[x] & *d).count() >= 2;
        }
        if (fires) return d;
    }
    return std::nullopt;
}

struct MinimalOrO6Report {
    bool applicable = false; // every minimum SD set is edge-free with unique witnesses
    int sets_checked = 0;
    std::optional<VertexSet> counterexample;
};

// When every minimum SD set is edge-free with unique witnesses, every SD set of
// size gamma + 1 carrying an ST-configuration must be minimal or contain an O6.
inline MinimalOrO6Report check_minimal_or_o6(const Graph& g, int gamma_t2, const Budget& budget = {}) {
    MinimalOrO6Report rep;
    Detector det(g);
    {
        DomSetStream s(g, DomKind::Semitotal, gamma_t2, budget);
        while (auto d = s.next()) {
            for (int x = d->first(); x >= 0; x = d->next(x)) {
                if (g.nbrs(x).intersects(*d) || (det.proximity().within2[x] & *d).count() != 1) return rep;
            }
        }
    }
    rep.applicable = true;
    if (gamma_t2 + 1 > g.n()) return rep;
    DomSetStream s(g, DomKind::Semitotal, gamma_t2 + 1, budget);
    while (auto d = s.next()) {
        if (!det.find_st_config(*d)) continue;
        ++rep.sets_checked;
        bool minimal = true;
        for (int x = d->first(); x >= 0 && minimal; x = d->next(x)) {
            VertexSet smaller = *d;
            smaller.reset(x);
            if (is_dom_set(g, smaller, DomKind::Semitotal)) minimal = false;
        }
        if (!minimal && !det.find_st_config(*d, STConfig::O6)) {
            rep.counterexample = *d;
            return rep;
        }
    }
    return rep;
}

} // namespace ctkit
