#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ctkit {

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return build_graph(n, es);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw Error(Errc::InvalidSpec, "cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return build_graph(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return build_graph(n, es);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return build_graph(a + b, es);
}

// Triangle P1 P2 P3 with pendant P4 on P3 (indices 0..3).
inline Graph paw_graph() { return build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

// Triangle P1 P2 P3 with the path P3 P4 P5 (indices 0..4).
inline Graph long_paw_graph() { return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}); }

namespace detail {

inline Graph relabel_paw(Graph g, int k) {
    std::vector<std::string> labels;
    for (int i = 1; i <= k; ++i) labels.push_back("P" + std::to_string(i));
    std::vector<VertexSet> rows;
    for (int v = 0; v < g.n(); ++v) rows.push_back(g.nbrs(v));
    return Graph::from_rows(std::move(rows), std::move(labels));
}

inline std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

inline int parse_int(const std::string& s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw Error(Errc::InvalidSpec, "expected a number in '" + s + "'");
    return std::stoi(s.substr(start, i - start));
}

inline Graph parse_atom(const std::string& s) {
    std::string low;
    for (char c : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "paw") return relabel_paw(paw_graph(), 4);
    if (low == "longpaw" || low == "long_paw" || low == "long-paw") return relabel_paw(long_paw_graph(), 5);
    if (low == "claw") return complete_bipartite(1, 3);
    if (low.empty()) throw Error(Errc::InvalidSpec, "empty descriptor");
    std::size_t i = 1;
    char head = low[0];
    if (head == 'p' || head == 'c' || head == 'k') {
        int a = parse_int(low, i);
        if (head == 'k' && i < low.size() && (low[i] == ',' || low[i] == '_')) {
            ++i;
            int b = parse_int(low, i);
            if (i != low.size()) throw Error(Errc::InvalidSpec, s);
            return complete_bipartite(a, b);
        }
        if (i != low.size()) throw Error(Errc::InvalidSpec, s);
        if (a < 1) throw Error(Errc::InvalidSpec, s);
        if (head == 'p') return path_graph(a);
        if (head == 'c') return cycle_graph(a);
        return complete_graph(a);
    }
    throw Error(Errc::InvalidSpec, "unknown family '" + s + "'");
}

} // namespace detail

// Descriptors: P<n>, C<n>, K<n>, K<a>,<b> (also K1_3), paw, longpaw, claw,
// and sums of "<k>H" terms joined by '+', e.g. "P4+2P3".
inline Graph make_named_graph(const std::string& spec) {
    const std::string s = detail::strip(spec);
    if (s.empty()) throw Error(Errc::InvalidSpec, "empty descriptor");
    std::vector<Graph> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t plus = s.find('+', start);
        std::string term = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        if (term.empty()) throw Error(Errc::InvalidSpec, "empty term in '" + spec + "'");
        std::size_t i = 0;
        int mult = 1;
        if (std::isdigit(static_cast<unsigned char>(term[0]))) {
            mult = detail::parse_int(term, i);
            if (mult < 1) throw Error(Errc::InvalidSpec, "multiplicity must be positive");
        }
        Graph atom = detail::parse_atom(term.substr(i));
        for (int r = 0; r < mult; ++r) parts.push_back(atom);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    if (parts.size() == 1) return parts.front();
    Graph out;
    for (const auto& p : parts) out = disjoint_union(out, p);
    return out;
}

} // namespace ctkit
