#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "detectors.hpp"
#include "domination.hpp"
#include "formula.hpp"
#include "graph.hpp"
#include "induced.hpp"

namespace ctkit {

enum class GadgetKind { TdClawK2, Td2P4, TdClawK3, StdClawK2, StdLongPaw, StdC3C4, StdClawK3, Std3P4K3 };

inline constexpr std::array<GadgetKind, 8> kAllGadgets{GadgetKind::TdClawK2,  GadgetKind::Td2P4,
                                                       GadgetKind::TdClawK3,  GadgetKind::StdClawK2,
                                                       GadgetKind::StdLongPaw, GadgetKind::StdC3C4,
                                                       GadgetKind::StdClawK3, GadgetKind::Std3P4K3};

inline const char* gadget_token(GadgetKind k) {
    switch (k) {
    case GadgetKind::TdClawK2: return "tdclawk2";
    case GadgetKind::Td2P4: return "td2p4";
    case GadgetKind::TdClawK3: return "tdclawk3";
    case GadgetKind::StdClawK2: return "stdclawk2";
    case GadgetKind::StdLongPaw: return "stdlongpaw";
    case GadgetKind::StdC3C4: return "stdc3c4";
    case GadgetKind::StdClawK3: return "stdclawk3";
    case GadgetKind::Std3P4K3: return "std3p4k3";
    }
    return "?";
}

inline GadgetKind parse_gadget_kind(const std::string& s) {
    for (GadgetKind k : kAllGadgets)
        if (s == gadget_token(k)) return k;
    throw Error(Errc::InvalidInput, "unknown gadget kind '" + s + "'");
}

inline Flavor required_flavor(GadgetKind k) {
    switch (k) {
    case GadgetKind::Td2P4:
    case GadgetKind::StdLongPaw: return Flavor::Standard3Sat;
    case GadgetKind::StdC3C4: return Flavor::NaePositive;
    default: return Flavor::OneInThreePositive3Bounded;
    }
}

inline DomKind gadget_domkind(GadgetKind k) {
    return k == GadgetKind::TdClawK2 || k == GadgetKind::Td2P4 || k == GadgetKind::TdClawK3 ? DomKind::Total
                                                                                           : DomKind::Semitotal;
}

struct ClassClaim {
    std::string name;                   // e.g. "K1,3-free"
    std::vector<std::string> forbidden; // induced patterns that must be absent
    int min_hole = 0;                   // if > 0: no induced cycle of at least this length
};

struct Prediction {
    int vertex_count = 0;
    int gamma_if_sat = 0;
    int ct_if_sat = 0;
    DomKind kind = DomKind::Total;
    std::vector<ClassClaim> classes; // one per output graph
};

struct GadgetBundle {
    GadgetKind kind = GadgetKind::Td2P4;
    Formula formula;
    std::vector<Graph> graphs; // StdC3C4: {G3, G4}; otherwise a single graph
    Prediction predicted;

    const Graph& graph(std::size_t i = 0) const { return graphs.at(i); }
    int id(const std::string& label) const { return graphs.front().at(label); }
};

namespace detail {

inline std::string lab(const std::string& base, const std::string& sub, const std::string& sup = "") {
    return base + "_" + sub + (sup.empty() ? "" : "^" + sup);
}

inline std::string paw_lab(const std::string& x, char r, const std::string& c, int i) {
    return "P_" + x + "," + r + "^" + c + "(" + std::to_string(i) + ")";
}

inline std::vector<int> clause_vars(const Formula& f, int c) {
    std::vector<int> out;
    for (const auto& l : f.clauses[c]) out.push_back(l.var);
    return out;
}

// The variable of clause c that is true under a (1-in-3), and the other two in clause order.
inline std::pair<int, std::array<int, 2>> split_true(const Formula& f, int c, const Assignment& a) {
    auto vs = clause_vars(f, c);
    int t = -1;
    std::array<int, 2> rest{};
    int k = 0;
    for (int v : vs) {
        if (a[v] && t < 0) t = v;
        else rest[k++] = v;
    }
    return {t, rest};
}

// Paw P(1..4): triangle on 1,2,3 and pendant 4 on 3. Long paw adds 5 pendant on 4.
inline void add_paw(GraphBuilder& b, const std::vector<std::string>& names) {
    std::vector<int> id;
    for (const auto& s : names) id.push_back(b.add(s));
    b.clique({id[0], id[1], id[2]});
    b.connect(id[2], id[3]);
    if (id.size() == 5) b.connect(id[3], id[4]);
}

// Variable gadget shared by the semitotal and total claw reductions: a central
// (long) paw, cliques p and q, and one (long) paw per occurrence and side.
inline void add_claw_variable(GraphBuilder& b, const Formula& f, int v, bool long_paw) {
    const std::string x = f.var_name(v);
    const int len = long_paw ? 5 : 4;
    if (long_paw) add_paw(b, {lab("T", x), lab("F", x), lab("u", x), lab("v", x), lab("w", x)});
    else add_paw(b, {lab("T", x), lab("F", x), lab("v", x), lab("u", x)});
    std::vector<int> ps, qs;
    for (int c : f.occurrences(v)) {
        const std::string cn = f.clause_name(c);
        ps.push_back(b.add(lab("p", x, cn)));
        qs.push_back(b.add(lab("q", x, cn)));
        for (char r : {'T', 'F'}) {
            std::vector<std::string> names;
            for (int i = 1; i <= len; ++i) names.push_back(paw_lab(x, r, cn, i));
            add_paw(b, names);
        }
        b.connect(lab("T", x), lab("p", x, cn));
        b.connect(lab("F", x), lab("q", x, cn));
        b.connect(lab("p", x, cn), paw_lab(x, 'T', cn, 2));
        b.connect(lab("q", x, cn), paw_lab(x, 'F', cn, 1));
    }
    b.clique(ps);
    b.clique(qs);
}

inline void build_td_claw_k2(GraphBuilder& b, const Formula& f) {
    for (int v = 0; v < f.num_vars; ++v) {
        const std::string x = f.var_name(v);
        for (const char* s : {"u", "v", "T", "F"}) b.add(lab(s, x));
        b.connect(lab("u", x), lab("v", x));
        b.clique({b.id(lab("u", x)), b.id(lab("T", x)), b.id(lab("F", x))});
        std::vector<int> as, gs;
        for (int c : f.occurrences(v)) {
            const std::string cn = f.clause_name(c);
            for (const char* s : {"a", "b", "c", "d", "t", "g", "h", "i", "j", "f"}) b.add(lab(s, x, cn));
            auto e = [&](const char* p, const char* q) { b.connect(lab(p, x, cn), lab(q, x, cn)); };
            e("a", "b"), e("b", "c"), e("b", "d"), e("c", "d"), e("d", "t");
            e("g", "h"), e("h", "i"), e("h", "j"), e("i", "j"), e("j", "f");
            b.connect(lab("T", x), lab("a", x, cn));
            b.connect(lab("F", x), lab("g", x, cn));
            as.push_back(b.id(lab("a", x, cn)));
            gs.push_back(b.id(lab("g", x, cn)));
        }
        b.clique(as);
        b.clique(gs);
    }
    for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
        const std::string cn = f.clause_name(c);
        b.add(lab("u", cn));
        b.add(lab("v", cn));
        b.add(lab("w", cn));
        b.connect(lab("v", cn), lab("w", cn));
        std::vector<int> as, gs;
        for (int v : clause_vars(f, c)) {
            const std::string x = f.var_name(v);
            for (const char* s : {"a", "b", "c", "d", "t", "g", "f"}) b.add(lab(s, cn, x));
            auto e = [&](const char* p, const char* q) { b.connect(lab(p, cn, x), lab(q, cn, x)); };
            e("a", "b"), e("a", "c"), e("b", "c"), e("c", "d"), e("d", "t"), e("g", "f");
            b.connect(lab("u", cn), lab("a", cn, x));
            b.connect(lab("v", cn), lab("g", cn, x));
            b.connect(lab("t", cn, x), lab("t", x, cn));
            b.connect(lab("f", cn, x), lab("f", x, cn));
            as.push_back(b.id(lab("a", cn, x)));
            gs.push_back(b.id(lab("g", cn, x)));
        }
        b.clique(as);
        b.clique(gs);
    }
}

inline std::string literal_label(const Formula& f, const Literal& l) {
    return l.positive ? f.var_name(l.var) : "~" + f.var_name(l.var);
}

// Td2P4 (paw per variable) and StdLongPaw (long paw per variable) share the
// clause layer: one clause vertex per clause, adjacent to its literals, all
// clause vertices forming a clique.
inline void build_literal_reduction(GraphBuilder& b, const Formula& f, bool long_paw) {
    for (int v = 0; v < f.num_vars; ++v) {
        const std::string x = f.var_name(v);
        if (long_paw) add_paw(b, {x, "~" + x, lab("u", x), lab("v", x), lab("w", x)});
        else add_paw(b, {x, "~" + x, lab("u", x), lab("v", x)});
    }
    std::vector<int> cs;
    for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
        const int id = b.add(f.clause_name(c));
        cs.push_back(id);
        for (const auto& l : f.clauses[c]) b.connect(id, b.id(literal_label(f, l)));
    }
    b.clique(cs);
}

inline void build_td_claw_k3(GraphBuilder& b, const Formula& f) {
    for (int v = 0; v < f.num_vars; ++v) add_claw_variable(b, f, v, false);
    for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
        const std::string cn = f.clause_name(c);
        b.add(lab("u", cn));
        b.add(lab("v", cn));
        b.connect(lab("u", cn), lab("v", cn));
        std::vector<int> ps, qs;
        for (int v : clause_vars(f, c)) {
            const std::string x = f.var_name(v);
            for (const char* s : {"t", "p", "q", "f"}) b.add(lab(s, cn, x));
            b.connect(lab("t", cn, x), lab("p", cn, x));
            b.connect(lab("q", cn, x), lab("f", cn, x));
            b.connect(lab("v", cn), lab("q", cn, x));
            b.connect(lab("t", cn, x), paw_lab(x, 'T', cn, 1));
            b.connect(lab("f", cn, x), paw_lab(x, 'F', cn, 2));
            ps.push_back(b.id(lab("p", cn, x)));
            qs.push_back(b.id(lab("q", cn, x)));
        }
        b.clique(ps);
        b.clique(qs);
    }
}

inline void build_std_claw_k2(GraphBuilder& b, const Formula& f) {
    for (int v = 0; v < f.num_vars; ++v) add_claw_variable(b, f, v, true);
    for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
        const std::string cn = f.clause_name(c);
        const auto vs = clause_vars(f, c);
        std::vector<std::pair<int, int>> pairs{{vs[0], vs[1]}, {vs[0], vs[2]}, {vs[1], vs[2]}};
        auto pair_name = [&](std::pair<int, int> p) { return f.var_name(p.first) + f.var_name(p.second); };
        std::vector<int> ws, ts, fs;
        for (auto p : pairs) {
            ws.push_back(b.add(lab("w", cn, pair_name(p))));
            fs.push_back(b.add(lab("f", cn, pair_name(p))));
        }
        for (int v : vs) ts.push_back(b.add(lab("t", cn, f.var_name(v))));
        const int u = b.add(lab("u", cn));
        b.clique(ws);
        b.clique(ts);
        b.clique(fs);
        for (int t : ts) b.connect(u, t);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const std::string x = f.var_name(vs[i]);
            b.connect(ts[i], b.id(paw_lab(x, 'T', cn, 1)));
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                if (pairs[j].first != vs[i] && pairs[j].second != vs[i]) continue;
                b.connect(ts[i], ws[j]);
                b.connect(b.id(paw_lab(x, 'T', cn, 1)), ws[j]);
                b.connect(b.id(paw_lab(x, 'F', cn, 2)), fs[j]);
            }
        }
    }
}

// The C5 variable gadget F-T-v-w-u-F with r pendant on w.
inline void build_std_c3c4(GraphBuilder& b, const Formula& f, bool cliques) {
    for (int v = 0; v < f.num_vars; ++v) {
        const std::string x = f.var_name(v);
        for (const char* s : {"T", "F", "u", "v", "w", "r"}) b.add(lab(s, x));
        auto e = [&](const char* p, const char* q) { b.connect(lab(p, x), lab(q, x)); };
        e("F", "T"), e("T", "v"), e("v", "w"), e("w", "u"), e("u", "F"), e("w", "r");
    }
    std::vector<int> pos, neg;
    for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
        const std::string cn = f.clause_name(c);
        pos.push_back(b.add(cn));
        neg.push_back(b.add("~" + cn));
        for (int v : clause_vars(f, c)) {
            b.connect(cn, lab("T", f.var_name(v)));
            b.connect("~" + cn, lab("F", f.var_name(v)));
        }
    }
    if (cliques) {
        b.clique(pos);
        b.clique(neg);
    }
}

inline void build_std_claw_k3(GraphBuilder& b, const Formula& f) {
    for (int v = 0; v < f.num_vars; ++v) add_claw_variable(b, f, v, true);
    for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
        const std::string cn = f.clause_name(c);
        std::vector<int> us{b.add(lab("a", cn))}, vsb{b.add(lab("b", cn))}, qs;
        for (const char* s : {"w", "v", "u"}) b.add(lab(s, cn));
        b.connect(lab("w", cn), lab("v", cn));
        b.connect(lab("v", cn), lab("u", cn));
        for (int v : clause_vars(f, c)) {
            const std::string x = f.var_name(v);
            for (const char* s : {"t", "u", "v", "q", "f"}) b.add(lab(s, cn, x));
            b.clique({b.id(lab("t", cn, x)), b.id(lab("u", cn, x)), b.id(lab("v", cn, x))});
            b.connect(lab("q", cn, x), lab("f", cn, x));
            b.connect(lab("u", cn), lab("q", cn, x));
            b.connect(lab("t", cn, x), paw_lab(x, 'T', cn, 1));
            b.connect(lab("f", cn, x), paw_lab(x, 'F', cn, 2));
            us.push_back(b.id(lab("u", cn, x)));
            vsb.push_back(b.id(lab("v", cn, x)));
            qs.push_back(b.id(lab("q", cn, x)));
        }
        b.clique(us);
        b.clique(vsb);
        b.clique(qs);
    }
}

inline std::string ci(const Formula& f, int c, int i) { return f.clause_name(c) + "," + std::to_string(i); }

// The two clauses other than c containing variable v, in index order.
inline std::array<int, 2> other_clauses(const Formula& f, int v, int c) {
    std::array<int, 2> out{-1, -1};
    int k = 0;
    for (int o : f.occurrences(v))
        if (o != c) out.at(k++) = o;
    return out;
}

inline void build_std_3p4_k3(GraphBuilder& b, const Formula& f) {
    const int m = static_cast<int>(f.clauses.size());
    std::array<std::vector<int>, 2> kbig;
    for (int c = 0; c < m; ++c) {
        const auto vs = clause_vars(f, c);
        std::vector<std::pair<int, int>> pairs{{vs[0], vs[1]}, {vs[0], vs[2]}, {vs[1], vs[2]}};
        auto tname = [&](std::pair<int, int> p) { return f.var_name(p.first) + "," + f.var_name(p.second); };
        for (int i = 1; i <= 2; ++i) {
            const std::string s = ci(f, c, i);
            std::vector<int> vset{b.add(lab("p", s)), b.add(lab("q", s))}, kset;
            for (int v : vs) vset.push_back(b.add(lab("v", s, f.var_name(v))));
            for (int v : vs) {
                for (int o : other_clauses(f, v, c)) {
                    const int u = b.add(lab("u", s, f.var_name(v) + "," + f.clause_name(o)));
                    kset.push_back(u);
                    b.connect(u, b.id(lab("v", s, f.var_name(v))));
                }
            }
            for (auto p : pairs) {
                const int t = b.add(lab("t", s, tname(p)));
                kset.push_back(t);
                b.connect(t, b.id(lab("v", s, f.var_name(p.first))));
                b.connect(t, b.id(lab("v", s, f.var_name(p.second))));
            }
            b.clique(vset);
            b.clique(kset);
            kbig[i - 1].insert(kbig[i - 1].end(), kset.begin(), kset.end());
        }
        // Edge groups (1)-(4) between the two copies.
        for (int i = 1; i <= 2; ++i) {
            const std::string s = ci(f, c, i), o = ci(f, c, 3 - i);
            for (int v : vs)
                for (auto p : pairs)
                    if (p.first != v && p.second != v) b.connect(lab("v", s, f.var_name(v)), lab("t", o, tname(p)));
            b.connect(lab("p", s), lab("q", o));
            for (int v : vs) b.connect(lab("p", s), lab("v", o, f.var_name(v)));
        }
    }
    // u_{b,i}^{l,a} -- v_{a,3-i}^p for every variable p != l of clause a.
    for (int c = 0; c < m; ++c) {
        for (int v : clause_vars(f, c)) {
            for (int a : other_clauses(f, v, c)) {
                for (int i = 1; i <= 2; ++i) {
                    const int u = b.id(lab("u", ci(f, c, i), f.var_name(v) + "," + f.clause_name(a)));
                    for (int p : clause_vars(f, a))
                        if (p != v) b.connect(u, b.id(lab("v", ci(f, a, 3 - i), f.var_name(p))));
                }
            }
        }
    }
    b.clique(kbig[0]);
    b.clique(kbig[1]);
}

} // namespace detail

inline GadgetBundle build_gadget(GadgetKind kind, const Formula& f) {
    if (f.flavor != required_flavor(kind))
        throw Error(Errc::FlavorMismatch, std::string(gadget_token(kind)) + " needs a " +
                                              flavor_token(required_flavor(kind)) + " formula");
    validate(f);
    const int nx = f.num_vars, nc = static_cast<int>(f.clauses.size());
    GadgetBundle out;
    out.kind = kind;
    out.formula = f;
    Prediction& p = out.predicted;
    p.kind = gadget_domkind(kind);
    const ClassClaim claw{"K1,3-free", {"K1,3"}};
    GraphBuilder b;
    switch (kind) {
    case GadgetKind::TdClawK2:
        detail::build_td_claw_k2(b, f);
        p = {34 * nx + 24 * nc, 14 * nx + 8 * nc, 2, p.kind, {claw}};
        break;
    case GadgetKind::Td2P4:
        detail::build_literal_reduction(b, f, false);
        p = {4 * nx + nc, 2 * nx, 2, p.kind, {{"2P4-free", {"2P4"}}}};
        break;
    case GadgetKind::TdClawK3:
        detail::build_td_claw_k3(b, f);
        p = {34 * nx + 14 * nc, 14 * nx + 4 * nc, 3, p.kind, {claw}};
        break;
    case GadgetKind::StdClawK2:
        detail::build_std_claw_k2(b, f);
        p = {41 * nx + 10 * nc, 14 * nx + nc, 2, p.kind, {claw}};
        break;
    case GadgetKind::StdLongPaw: {
        detail::build_literal_reduction(b, f, true);
        p = {5 * nx + nc, 2 * nx, 2, p.kind, {{"no induced cycle of length at least 5", {}, 5}}};
        break;
    }
    case GadgetKind::StdC3C4: {
        GraphBuilder b4;
        detail::build_std_c3c4(b, f, false);
        detail::build_std_c3c4(b4, f, true);
        out.graphs.push_back(b.build());
        out.graphs.push_back(b4.build());
        p = {6 * nx + 2 * nc, 2 * nx, 2, p.kind, {{"C3-free", {"C3"}}, {"C4-free", {"C4"}}}};
        return out;
    }
    case GadgetKind::StdClawK3:
        detail::build_std_claw_k3(b, f);
        p = {41 * nx + 20 * nc, 14 * nx + 4 * nc, 3, p.kind, {claw}};
        break;
    case GadgetKind::Std3P4K3:
        detail::build_std_3p4_k3(b, f);
        p = {28 * nc, 2 * nc, 3, p.kind, {{"3P4-free", {"3P4"}}}};
        break;
    }
    out.graphs.push_back(b.build());
    return out;
}

// The dominating set the satisfiability direction of each reduction builds.
inline VertexSet certificate_from_assignment(const GadgetBundle& g, const Assignment& a) {
    const Formula& f = g.formula;
    if (static_cast<int>(a.size()) != f.num_vars || !satisfies(f, a))
        throw Error(Errc::NotSatisfying, "assignment does not satisfy the formula");
    using detail::lab;
    using detail::paw_lab;
    VertexSet d;
    auto add = [&](const std::string& s) { d.set(g.id(s)); };
    const int nc = static_cast<int>(f.clauses.size());
    switch (g.kind) {
    case GadgetKind::TdClawK2:
        for (int v = 0; v < f.num_vars; ++v) {
            const std::string x = f.var_name(v);
            add(lab("u", x));
            add(lab(a[v] ? "T" : "F", x));
            for (int c : f.occurrences(v))
                for (const char* s : a[v] ? std::array{"d", "t", "h", "j"} : std::array{"b", "d", "j", "f"})
                    add(lab(s, x, f.clause_name(c)));
        }
        for (int c = 0; c < nc; ++c) {
            const std::string cn = f.clause_name(c);
            auto [t, rest] = detail::split_true(f, c, a);
            add(lab("v", cn));
            add(lab("g", cn, f.var_name(t)));
            add(lab("c", cn, f.var_name(t)));
            add(lab("a", cn, f.var_name(t)));
            for (int r : rest) {
                add(lab("c", cn, f.var_name(r)));
                add(lab("d", cn, f.var_name(r)));
            }
        }
        break;
    case GadgetKind::Td2P4:
    case GadgetKind::StdLongPaw:
        for (int v = 0; v < f.num_vars; ++v) {
            const std::string x = f.var_name(v);
            add(lab(g.kind == GadgetKind::Td2P4 ? "u" : "v", x));
            add(a[v] ? x : "~" + x);
        }
        break;
    case GadgetKind::StdC3C4:
        for (int v = 0; v < f.num_vars; ++v) {
            add(lab("w", f.var_name(v)));
            add(lab(a[v] ? "T" : "F", f.var_name(v)));
        }
        break;
    case GadgetKind::TdClawK3:
    case GadgetKind::StdClawK2:
    case GadgetKind::StdClawK3: {
        const int second = g.kind == GadgetKind::TdClawK3 ? 3 : 4;
        for (int v = 0; v < f.num_vars; ++v) {
            const std::string x = f.var_name(v);
            add(lab("v", x));
            add(lab(a[v] ? "T" : "F", x));
            for (int c : f.occurrences(v))
                for (char r : {'T', 'F'}) {
                    add(paw_lab(x, r, f.clause_name(c), a[v] ? 1 : 2));
                    add(paw_lab(x, r, f.clause_name(c), second));
                }
        }
        for (int c = 0; c < nc; ++c) {
            const std::string cn = f.clause_name(c);
            auto [t, rest] = detail::split_true(f, c, a);
            if (g.kind == GadgetKind::StdClawK2) {
                add(lab("t", cn, f.var_name(rest[0])));
            } else if (g.kind == GadgetKind::TdClawK3) {
                add(lab("v", cn));
                add(lab("q", cn, f.var_name(t)));
                add(lab("p", cn, f.var_name(rest[0])));
                add(lab("p", cn, f.var_name(rest[1])));
            } else {
                add(lab("v", cn));
                add(lab("q", cn, f.var_name(t)));
                add(lab("v", cn, f.var_name(rest[0])));
                add(lab("u", cn, f.var_name(rest[1])));
            }
        }
        break;
    }
    case GadgetKind::Std3P4K3:
        for (int c = 0; c < nc; ++c) {
            const int t = detail::split_true(f, c, a).first;
            for (int i = 1; i <= 2; ++i) add(lab("v", detail::ci(f, c, i), f.var_name(t)));
        }
        break;
    }
    return d;
}

// A set of size gamma + 1 that the ct = 2 direction of a proof exhibits, with the
// pattern it is said to contain.
struct AugmentedSet {
    std::string context;     // e.g. the clause it was built for
    int graph = 0;           // index into GadgetBundle::graphs
    VertexSet set;
    std::string witness_kind; // "P4" or "O4"
    PatternWitness witness;
};

inline std::vector<AugmentedSet> augmented_sets(const GadgetBundle& g, const Assignment& a) {
    const VertexSet d = certificate_from_assignment(g, a);
    const Formula& f = g.formula;
    using detail::lab;
    std::vector<AugmentedSet> out;
    auto id = [&](const std::string& s) { return g.id(s); };
    for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
        const std::string cn = f.clause_name(c);
        switch (g.kind) {
        case GadgetKind::TdClawK2: {
            auto [t, rest] = detail::split_true(f, c, a);
            const std::string x = f.var_name(t), y = f.var_name(rest[0]);
            AugmentedSet s{cn, 0, d, "P4", {id(lab("c", cn, x)), id(lab("a", cn, x)), id(lab("a", cn, y)), id(lab("c", cn, y))}};
            s.set.set(id(lab("a", cn, y)));
            out.push_back(s);
            break;
        }
        case GadgetKind::Td2P4:
        case GadgetKind::StdLongPaw: {
            const auto& cl = f.clauses[c];
            if (cl.size() < 2) break;
            const std::string lx = detail::literal_label(f, cl[0]), ly = detail::literal_label(f, cl[1]);
            const std::string x = f.var_name(cl[0].var), y = f.var_name(cl[1].var);
            const bool total = g.kind == GadgetKind::Td2P4;
            const char* hub = total ? "u" : "v";
            AugmentedSet s{cn, 0, d, total ? "P4" : "O4", {}};
            for (const std::string& v : {x, y})
                for (const std::string& w : {v, "~" + v, lab("u", v), lab("v", v), lab("w", v)})
                    if (auto i = g.graph().index_of(w)) s.set.reset(*i);
            for (const std::string& w : {lx, ly, cn, lab(hub, x), lab(hub, y)}) s.set.set(id(w));
            s.witness = total ? PatternWitness{id(lab("u", x)), id(lx), id(cn), id(ly)}
                              : PatternWitness{id(lx), id(cn), id(ly), id(lab("v", y))};
            out.push_back(s);
            break;
        }
        case GadgetKind::StdClawK2: {
            auto [t, rest] = detail::split_true(f, c, a);
            const std::string x = f.var_name(t);
            AugmentedSet s{cn, 0, d, "O4",
                           {id(lab("t", cn, f.var_name(rest[0]))), id(lab("t", cn, x)),
                            id(detail::paw_lab(x, 'T', cn, 1)), id(detail::paw_lab(x, 'T', cn, 4))}};
            s.set.set(id(lab("t", cn, x)));
            out.push_back(s);
            break;
        }
        case GadgetKind::StdC3C4: {
            // Two variables sharing a truth value give an O4 through the matching clause vertex.
            const auto vs = detail::clause_vars(f, c);
            for (bool val : {false, true}) {
                std::vector<int> same;
                for (int v : vs)
                    if (a[v] == val) same.push_back(v);
                if (same.size() < 2) continue;
                const char* side = val ? "T" : "F";
                const std::string cv = val ? cn : "~" + cn;
                const std::string x = f.var_name(same[0]), y = f.var_name(same[1]);
                for (int gi = 0; gi < 2; ++gi) {
                    AugmentedSet s{cv, gi, d, "O4",
                                   {id(lab(side, x)), id(cv), id(lab(side, y)), id(lab("w", y))}};
                    s.set.set(id(cv));
                    out.push_back(s);
                }
                break;
            }
            break;
        }
        default: break;
        }
    }
    return out;
}

struct ClaimCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Certificate-scale checks: validity and size of the constructed set, the
// structural side claims on it, and the augmented sets of the ct = 2 proofs.
inline std::vector<ClaimCheck> check_certificate(const GadgetBundle& g, const Assignment& a) {
    std::vector<ClaimCheck> out;
    const VertexSet d = certificate_from_assignment(g, a);
    const DomKind kind = g.predicted.kind;
    for (std::size_t gi = 0; gi < g.graphs.size(); ++gi) {
        const Graph& h = g.graphs[gi];
        const std::string tag = g.graphs.size() > 1 ? " (graph " + std::to_string(gi) + ")" : "";
        out.push_back({"certificate is a " + std::string(kind_name(kind)) + " dominating set" + tag,
                       is_dom_set(h, d, kind), ""});
        out.push_back({"certificate size equals the predicted gamma" + tag,
                       d.count() == g.predicted.gamma_if_sat,
                       std::to_string(d.count()) + " vs " + std::to_string(g.predicted.gamma_if_sat)});
        Detector det(h);
        if (kind == DomKind::Total) {
            auto w = det.find_pattern(d, Pattern::P3);
            out.push_back({"certificate contains no P3" + tag, !w.has_value(), ""});
        } else {
            auto w = det.find_friendly_triple(d);
            out.push_back({"certificate contains no friendly triple" + tag, !w.has_value(), ""});
        }
        if (g.kind == GadgetKind::StdClawK3 || g.kind == GadgetKind::Std3P4K3) {
            bool ok = true;
            for (int x = d.first(); x >= 0 && ok; x = d.next(x))
                ok = !h.nbrs(x).intersects(d) && witnesses(h, d, x).count() == 1;
            out.push_back({"certificate is independent and every member has a unique witness" + tag, ok, ""});
        }
    }
    for (const auto& s : augmented_sets(g, a)) {
        const Graph& h = g.graphs[s.graph];
        Detector det(h);
        const Shape shape = s.witness_kind == "P4" ? shape_of(Pattern::P4) : shape_of(STConfig::O4);
        const bool dom = is_dom_set(h, s.set, kind);
        const bool size = s.set.count() == g.predicted.gamma_if_sat + 1;
        const bool has = det.validate(s.set, shape, s.witness);
        out.push_back({"augmented set for " + s.context + " is dominating, of size gamma + 1, and holds the " +
                           s.witness_kind,
                       dom && size && has,
                       std::string(dom ? "" : "not dominating; ") + (size ? "" : "wrong size; ") +
                           (has ? "" : "pattern missing")});
    }
    return out;
}

// A counting claim about D restricted to a region, checked by enumerating every
// subset of the region that could be the trace of a dominating set. Vertices with
// neighbours outside the region may be dominated from outside, and a member whose
// distance-2 ball leaves the region may have its witness outside.
struct LocalClaim {
    std::string name;
    int graph = 0;
    VertexSet region;
    int min_size = 0;
    VertexSet required;                // members of every trace
    std::vector<VertexSet> hit;        // sets every trace intersects
    int if_size = -1;                  // traces of exactly this size ...
    VertexSet absent_if_size;          // ... avoid these vertices
    std::vector<VertexSet> parts;      // if set: min_size is a sum over these disjoint parts
    LocalClaim() = default;
    LocalClaim(std::string n, int g, VertexSet r, int min)
        : name(std::move(n)), graph(g), region(r), min_size(min) {}
};

struct LocalReport {
    bool holds = false;
    long long traces = 0; // valid traces enumerated
    int min_trace = -1;
    std::string detail;
};

namespace detail {

inline constexpr int kMaxLocalRegion = 24;

// Calls fn(mask) for every valid trace of the region (bit i = verts[i]).
template <class Fn>
long long for_each_trace(const Graph& g, DomKind kind, const VertexSet& region, const Proximity& prox, Fn fn) {
    const std::vector<int> verts = region.to_vector();
    const int r = static_cast<int>(verts.size());
    if (r > kMaxLocalRegion) throw Error(Errc::Capacity, "local region larger than " + std::to_string(kMaxLocalRegion));
    std::map<int, int> pos;
    for (int i = 0; i < r; ++i) pos[verts[i]] = i;
    auto local = [&](const VertexSet& s) {
        std::uint32_t m = 0;
        for (int v = s.first(); v >= 0; v = s.next(v))
            if (auto it = pos.find(v); it != pos.end()) m |= 1u << it->second;
        return m;
    };
    std::vector<std::uint32_t> need; // each internal vertex: mask of its possible dominators
    std::vector<std::pair<std::uint32_t, std::uint32_t>> wit; // (member bit, mask of witnesses) for closed balls
    for (int i = 0; i < r; ++i) {
        const int v = verts[i];
        if (g.nbrs(v).subset_of(region)) {
            std::uint32_t m = local(g.nbrs(v));
            if (kind == DomKind::Semitotal) m |= 1u << i;
            need.push_back(m);
        }
        if (kind == DomKind::Semitotal && (prox.within2[v] | VertexSet::single(v)).subset_of(region))
            wit.emplace_back(1u << i, local(prox.within2[v]));
    }
    long long count = 0;
    for (std::uint32_t s = 0; s < (1u << r); ++s) {
        bool ok = true;
        for (auto m : need)
            if (!(s & m)) {
                ok = false;
                break;
            }
        for (std::size_t k = 0; k < wit.size() && ok; ++k)
            if ((s & wit[k].first) && !(s & wit[k].second)) ok = false;
        if (!ok) continue;
        ++count;
        fn(s, verts);
    }
    return count;
}

} // namespace detail

inline LocalReport check_local_claim(const Graph& g, DomKind kind, const LocalClaim& c) {
    LocalReport rep;
    Proximity prox(g);
    if (!c.parts.empty()) {
        VertexSet seen;
        int sum = 0;
        for (const auto& part : c.parts) {
            if (part.intersects(seen) || !part.subset_of(c.region)) {
                rep.detail = "parts overlap or leave the region";
                return rep;
            }
            seen |= part;
            int best = -1;
            rep.traces += detail::for_each_trace(g, kind, part, prox, [&](std::uint32_t s, const std::vector<int>&) {
                const int k = std::popcount(s);
                if (best < 0 || k < best) best = k;
            });
            sum += best;
        }
        rep.min_trace = sum;
        rep.holds = sum >= c.min_size;
        if (!rep.holds) rep.detail = "parts only force " + std::to_string(sum);
        return rep;
    }
    rep.holds = true;
    rep.traces = detail::for_each_trace(g, kind, c.region, prox, [&](std::uint32_t s, const std::vector<int>& verts) {
        VertexSet t;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (s >> i & 1u) t.set(verts[i]);
        const int k = t.count();
        if (rep.min_trace < 0 || k < rep.min_trace) rep.min_trace = k;
        if (!rep.holds) return;
        std::string why;
        if (k < c.min_size) why = "trace of size " + std::to_string(k);
        else if (!c.required.subset_of(t)) why = "trace misses a required vertex";
        else if (k == c.if_size && t.intersects(c.absent_if_size)) why = "size-" + std::to_string(k) + " trace uses a forbidden vertex";
        for (const auto& h : c.hit)
            if (why.empty() && !h.intersects(t)) why = "trace misses a required group";
        if (!why.empty()) {
            rep.holds = false;
            rep.detail = why + ": " + t.str();
        }
    });
    if (rep.traces == 0) {
        rep.holds = false;
        rep.detail = "no valid trace";
    }
    return rep;
}

// The counting claims each construction's analysis relies on, instantiated on the bundle.
inline std::vector<LocalClaim> local_claims(const GadgetBundle& g) {
    const Formula& f = g.formula;
    const Graph& h = g.graph();
    using detail::lab;
    using detail::paw_lab;
    std::vector<LocalClaim> out;
    auto set_of = [&](const std::vector<std::string>& names) {
        VertexSet s;
        for (const auto& n : names) s.set(h.at(n));
        return s;
    };
    auto paw = [&](const std::string& x, char r, const std::string& c, int len) {
        std::vector<std::string> names;
        for (int i = 1; i <= len; ++i) names.push_back(paw_lab(x, r, c, i));
        return names;
    };
    const int nc = static_cast<int>(f.clauses.size());
    switch (g.kind) {
    case GadgetKind::TdClawK2: break;
    case GadgetKind::Td2P4:
    case GadgetKind::StdLongPaw:
    case GadgetKind::StdC3C4:
        for (std::size_t gi = 0; gi < g.graphs.size(); ++gi)
            for (int v = 0; v < f.num_vars; ++v) {
                const std::string x = f.var_name(v);
                std::vector<std::string> names;
                if (g.kind == GadgetKind::StdC3C4) names = {lab("T", x), lab("F", x), lab("u", x), lab("v", x), lab("w", x), lab("r", x)};
                else names = {x, "~" + x, lab("u", x), lab("v", x)};
                if (g.kind == GadgetKind::StdLongPaw) names.push_back(lab("w", x));
                LocalClaim c{"|D cap V(G_" + x + ")| >= 2", static_cast<int>(gi), set_of(names), 2};
                if (g.kind == GadgetKind::Td2P4) c.required = set_of({lab("u", x)});
                out.push_back(c);
            }
        break;
    case GadgetKind::TdClawK3:
    case GadgetKind::StdClawK2:
    case GadgetKind::StdClawK3: {
        const bool lp = g.kind != GadgetKind::TdClawK3;
        const int len = lp ? 5 : 4;
        for (int v = 0; v < f.num_vars; ++v) {
            const std::string x = f.var_name(v);
            std::vector<std::vector<std::string>> paws;
            paws.push_back(lp ? std::vector<std::string>{lab("T", x), lab("F", x), lab("u", x), lab("v", x), lab("w", x)}
                              : std::vector<std::string>{lab("T", x), lab("F", x), lab("v", x), lab("u", x)});
            for (int c : f.occurrences(v))
                for (char r : {'T', 'F'}) paws.push_back(paw(x, r, f.clause_name(c), len));
            LocalClaim whole{"|D cap V(G_" + x + ")| >= 14", 0, VertexSet{}, 14};
            for (const auto& pw : paws) {
                LocalClaim c{"paw " + pw[0].substr(0, pw[0].find('(')) + " carries >= 2", 0, set_of(pw), 2};
                if (lp) c.hit.push_back(set_of({pw[3], pw[4]}));
                else c.required = set_of({pw[2]});
                out.push_back(c);
                whole.parts.push_back(c.region);
                whole.region |= c.region;
            }
            for (int c : f.occurrences(v))
                whole.region |= set_of({lab("p", x, f.clause_name(c)), lab("q", x, f.clause_name(c))});
            out.push_back(whole);
        }
        if (g.kind == GadgetKind::StdClawK2) break;
        for (int c = 0; c < nc; ++c) {
            const std::string cn = f.clause_name(c);
            std::vector<std::string> tside, fside, us{lab("a", cn)}, vs{lab("b", cn)}, core{lab("u", cn), lab("v", cn), lab("w", cn)},
                fs;
            for (int v : detail::clause_vars(f, c)) {
                const std::string x = f.var_name(v);
                if (g.kind == GadgetKind::TdClawK3) {
                    tside.insert(tside.end(), {lab("t", cn, x), lab("p", cn, x)});
                    fside.insert(fside.end(), {lab("q", cn, x), lab("f", cn, x)});
                } else {
                    tside.insert(tside.end(), {lab("t", cn, x), lab("u", cn, x), lab("v", cn, x)});
                    fside.insert(fside.end(), {lab("q", cn, x), lab("f", cn, x)});
                    us.push_back(lab("u", cn, x));
                    vs.push_back(lab("v", cn, x));
                    core.push_back(lab("q", cn, x));
                    fs.push_back(lab("f", cn, x));
                }
            }
            if (g.kind == GadgetKind::TdClawK3) {
                fside.insert(fside.end(), {lab("u", cn), lab("v", cn)});
                out.push_back({"|D cap V(G_" + cn + "^T)| >= 2", 0, set_of(tside), 2});
                LocalClaim fc{"|D cap V(G_" + cn + "^F)| >= 2 and v_" + cn + " in D", 0, set_of(fside), 2};
                fc.required = set_of({lab("v", cn)});
                out.push_back(fc);
            } else {
                tside.insert(tside.end(), {lab("a", cn), lab("b", cn)});
                fside.insert(fside.end(), {lab("u", cn), lab("v", cn), lab("w", cn)});
                out.push_back({"|D cap {u,v,w,q}_" + cn + "| >= 2", 0, set_of(core), 2});
                LocalClaim tc{"D meets {u^l, a}_" + cn + " and {v^l, b}_" + cn, 0, set_of(tside), 2};
                tc.hit = {set_of(us), set_of(vs)};
                tc.if_size = 2;
                VertexSet ts;
                for (int v : detail::clause_vars(f, c)) ts.set(h.at(lab("t", cn, f.var_name(v))));
                tc.absent_if_size = ts;
                out.push_back(tc);
                LocalClaim fc{"a size-2 trace on G_" + cn + "^F avoids the f vertices", 0, set_of(fside), 2};
                fc.if_size = 2;
                fc.absent_if_size = set_of(fs);
                out.push_back(fc);
            }
        }
        break;
    }
    case GadgetKind::Std3P4K3:
        for (int c = 0; c < nc; ++c) {
            std::vector<std::string> names;
            for (int i = 1; i <= 2; ++i) {
                const std::string s = detail::ci(f, c, i);
                names.push_back(lab("p", s));
                names.push_back(lab("q", s));
                for (int v : detail::clause_vars(f, c)) names.push_back(lab("v", s, f.var_name(v)));
            }
            out.push_back({"|D cap (V_" + f.clause_name(c) + ",1 cup V_" + f.clause_name(c) + ",2)| >= 2", 0,
                           set_of(names), 2});
        }
        break;
    }
    return out;
}

inline bool in_claimed_class(const GadgetBundle& g, std::size_t graph_index) {
    const Graph& h = g.graph(graph_index);
    const ClassClaim& claim = g.predicted.classes.at(graph_index);
    if (claim.min_hole > 0 && find_long_induced_cycle(h, claim.min_hole)) return false;
    for (const auto& spec : claim.forbidden) {
        const Graph pat = make_named_graph(spec);
        if (pat.n() <= h.n() && contains_induced(h, pat)) return false;
    }
    return true;
}

} // namespace ctkit
