#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contraction.hpp"
#include "induced.hpp"

namespace ctkit {

enum class BoundKind { TotalP6kP3, SemitotalLift };

// k^4 + 4k^2 + 21k + 19 for the total recursion; 8|V(H)| for the semitotal lift.
inline long long bound_value(BoundKind kind, long long param) {
    if (param < 0) throw Error(Errc::InvalidInput, "bound parameter must be non-negative");
    if (kind == BoundKind::TotalP6kP3) return param * param * param * param + 4 * param * param + 21 * param + 19;
    return 8 * param;
}

struct PolyTrace {
    std::vector<std::string> steps;
    void add(std::string s) { steps.push_back(std::move(s)); }
};

inline std::string p6_plus(int k) { return k == 0 ? "P6" : k == 1 ? "P6+P3" : "P6+" + std::to_string(k) + "P3"; }

namespace detail {

inline bool char_ct_at_most_2(const Graph& g, DomKind kind, const Budget& budget) {
    CtResult r = ct_characterization(g, kind, budget);
    if (!r.defined()) throw Error(Errc::Undefined, r.reason);
    return r.value <= 2;
}

inline bool total_rec(const Graph& g, int k, const Budget& budget, PolyTrace& tr) {
    if (k == 0) {
        tr.add("k=0: P6-free, answer yes");
        return true;
    }
    if (is_h_free(g, p6_plus(k - 1))) {
        tr.add("k=" + std::to_string(k) + ": " + p6_plus(k - 1) + "-free, recurse");
        return total_rec(g, k - 1, budget, tr);
    }
    const long long f = bound_value(BoundKind::TotalP6kP3, k);
    if (!gamma_at_most(g, DomKind::Total, static_cast<int>(std::min<long long>(f, kMaxVertices)), budget)) {
        tr.add("k=" + std::to_string(k) + ": no TD set of size <= " + std::to_string(f) + ", answer yes");
        return true;
    }
    const bool v = char_ct_at_most_2(g, DomKind::Total, budget);
    tr.add("k=" + std::to_string(k) + ": characterization says " + (v ? "yes" : "no"));
    return v;
}

inline std::string plus_p3(const std::string& base, int t) {
    return t == 0 ? base : t == 1 ? base + "+P3" : base + "+" + std::to_string(t) + "P3";
}

inline bool semi_lift(const Graph& g, const std::string& base, int t, const Budget& budget, PolyTrace& tr) {
    if (t == 0) {
        tr.add(base + "-free, answer yes");
        return true;
    }
    const std::string h = plus_p3(base, t - 1);
    if (is_h_free(g, h)) {
        tr.add(h + "-free, descend");
        return semi_lift(g, base, t - 1, budget, tr);
    }
    const long long f = bound_value(BoundKind::SemitotalLift, make_named_graph(h).n());
    if (!gamma_at_most(g, DomKind::Semitotal, static_cast<int>(std::min<long long>(f, kMaxVertices)), budget)) {
        tr.add("gamma_t2 > " + std::to_string(f) + ", answer yes");
        return true;
    }
    const bool v = char_ct_at_most_2(g, DomKind::Semitotal, budget);
    tr.add("characterization on " + plus_p3(base, t) + "-free graph says " + (v ? "yes" : "no"));
    return v;
}

inline void require_ct_input(const Graph& g, DomKind kind, const Budget& budget) {
    if (auto why = ct_precondition(g)) throw Error(Errc::Undefined, *why);
    if (!gamma_at_most(g, kind, 2, budget)) return;
    throw Error(Errc::Undefined, "gamma is 2");
}

} // namespace detail

// 2-Edge Contraction for total domination on (P6 + kP3)-free graphs.
inline bool two_ec_total_p6kp3(const Graph& g, int k, const Budget& budget = {}, PolyTrace* trace = nullptr) {
    if (k < 0) throw Error(Errc::InvalidInput, "k must be non-negative");
    detail::require_ct_input(g, DomKind::Total, budget);
    if (!is_h_free(g, p6_plus(k))) throw Error(Errc::NotInClass, "graph contains an induced " + p6_plus(k));
    PolyTrace local;
    return detail::total_rec(g, k, budget, trace ? *trace : local);
}

// 2-Edge Contraction for semitotal domination on (P8 + tP3)-free or (2P4 + tP3)-free
// graphs with t <= 3; nullopt outside those classes.
inline std::optional<bool> two_ec_semitotal(const Graph& g, const Budget& budget = {}, PolyTrace* trace = nullptr) {
    detail::require_ct_input(g, DomKind::Semitotal, budget);
    PolyTrace local;
    PolyTrace& tr = trace ? *trace : local;
    for (const char* base : {"P8", "2P4"}) {
        if (is_h_free(g, base)) {
            tr.add(std::string(base) + "-free, answer yes");
            return true;
        }
    }
    for (int t = 1; t <= 3; ++t) {
        for (const char* base : {"P8", "2P4"}) {
            if (is_h_free(g, detail::plus_p3(base, t))) {
                tr.add("in class " + detail::plus_p3(base, t) + "-free");
                return detail::semi_lift(g, base, t, budget, tr);
            }
        }
    }
    tr.add("no supported class applies");
    return std::nullopt;
}

} // namespace ctkit
