#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "graph.hpp"

namespace ctkit {

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

} // namespace detail

// Edge list: "n m" then m lines "u v"; '#' starts a comment.
inline Graph read_edge_list(std::istream& in) {
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        std::string body = detail::strip_comment(line);
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(body);
    }
    if (rows.empty()) throw Error(Errc::Parse, "missing header");
    std::istringstream head(rows[0]);
    long n = -1, m = -1;
    std::string extra;
    if (!(head >> n >> m) || (head >> extra) || n < 0 || m < 0) throw Error(Errc::Parse, "bad header '" + rows[0] + "'");
    if (static_cast<long>(rows.size()) - 1 != m)
        throw Error(Errc::Parse, "header promises " + std::to_string(m) + " edges, found " + std::to_string(rows.size() - 1));
    if (n > kMaxVertices) throw Error(Errc::Capacity, std::to_string(n) + " vertices");
    std::vector<Edge> es;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream ls(rows[i]);
        long u, v;
        if (!(ls >> u >> v) || (ls >> extra)) throw Error(Errc::Parse, "bad edge line '" + rows[i] + "'");
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return build_graph(static_cast<int>(n), es);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Parse, "cannot open " + path);
    return read_edge_list(in);
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

inline nlohmann::json to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    nlohmann::json labels = nlohmann::json::object();
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v)
            if (!g.labels()[v].empty()) labels[std::to_string(v)] = g.labels()[v];
    j["labels"] = labels;
    return j;
}

inline nlohmann::json to_json(const VertexSet& s) { return s.to_vector(); }

} // namespace ctkit
