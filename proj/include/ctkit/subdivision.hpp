#pragma once

#include "domination.hpp"
#include "graph.hpp"

namespace ctkit {

// TD set of the 4-subdivision H from a TD set D of G; |result| = |D| + 2m.
inline VertexSet td_transform_up(const Graph& g, const Subdivision& sub, const VertexSet& d) {
    if (!is_dom_set(g, d, DomKind::Total)) throw Error(Errc::InvalidInput, "D is not a total dominating set of G");
    VertexSet out = d;
    for (std::size_t i = 0; i < sub.base_edges.size(); ++i) {
        const auto [u, v] = sub.base_edges[i];
        const auto& e = sub.path[i];
        const bool du = d.test(u), dv = d.test(v);
        if (!du && !dv) out.set(e[1]), out.set(e[2]);
        else if (du && !dv) out.set(e[2]), out.set(e[3]);
        else if (!du && dv) out.set(e[0]), out.set(e[1]);
        else out.set(e[0]), out.set(e[3]);
    }
    return out;
}

// TD set of G from a TD set D of H: keep D's original vertices, add v when e1 is
// in D and u when e4 is in D. Each edge path loses at least two vertices.
inline VertexSet td_transform_down(const Graph& g, const Subdivision& sub, const VertexSet& d) {
    if (!is_dom_set(sub.h, d, DomKind::Total)) throw Error(Errc::InvalidInput, "D is not a total dominating set of H");
    VertexSet out = d & g.vertices();
    for (std::size_t i = 0; i < sub.base_edges.size(); ++i) {
        const auto [u, v] = sub.base_edges[i];
        if (d.test(sub.path[i][0])) out.set(v);
        if (d.test(sub.path[i][3])) out.set(u);
    }
    const int bound = d.count() - 2 * static_cast<int>(sub.base_edges.size());
    if (!is_dom_set(g, out, DomKind::Total) || out.count() > bound)
        throw Error(Errc::TheoryViolation, "inverse transform produced " + out.str());
    return out;
}

} // namespace ctkit
