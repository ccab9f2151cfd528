#include <catch_amalgamated.hpp>

#include <map>

#include "ctkit/induced.hpp"
#include "ctkit/random.hpp"

using namespace ctkit;

namespace {

// Exhaustive oracle: every ordered injective map of V(H) into V(G).
bool naive_contains(const Graph& g, const Graph& h) {
    const int k = h.n();
    std::vector<int> map(k, 0);
    std::function<bool(int)> go = [&](int i) {
        if (i == k) return true;
        for (int v = 0; v < g.n(); ++v) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = map[j] != v && h.adjacent(i, j) == g.adjacent(map[j], v);
            if (!ok) continue;
            map[i] = v;
            if (go(i + 1)) return true;
        }
        return false;
    };
    return go(0);
}

} // namespace

TEST_CASE("contains_induced examples") {
    CHECK_FALSE(contains_induced(cycle_graph(5), make_named_graph("K1,3")).has_value());
    auto e = contains_induced(path_graph(6), path_graph(5));
    REQUIRE(e.has_value());
    CHECK(*e == std::vector<int>{0, 1, 2, 3, 4});
    Graph paw = make_named_graph("paw");
    auto p = contains_induced(paw, path_graph(3));
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<int>{paw.at("P1"), paw.at("P3"), paw.at("P4")});
    CHECK_FALSE(contains_induced(path_graph(3), path_graph(4)).has_value());
}

TEST_CASE("contains_induced agrees with the exhaustive scan") {
    const std::vector<std::string> patterns{"P3", "P4", "K3", "C4", "K1,3", "2P2", "paw", "3K1", "P2+K1", "K4", "P3+K1"};
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        std::mt19937_64 rng(seed);
        Graph g = random_graph(5 + static_cast<int>(seed % 5), 0.45, rng);
        for (const auto& s : patterns) {
            Graph h = make_named_graph(s);
            auto hit = contains_induced(g, h);
            CHECK(hit.has_value() == naive_contains(g, h));
            if (hit) {
                for (int i = 0; i < h.n(); ++i)
                    for (int j = 0; j < h.n(); ++j)
                        if (i != j) CHECK(h.adjacent(i, j) == g.adjacent((*hit)[i], (*hit)[j]));
            }
        }
    }
}

TEST_CASE("classify_dichotomy examples") {
    CHECK(classify_dichotomy(path_graph(6), DomKind::Total, 2).verdict == Complexity::Hard);
    CHECK(classify_dichotomy(make_named_graph("P4+2P3"), DomKind::Total, 2).verdict == Complexity::PolynomialTime);
    CHECK(classify_dichotomy(make_named_graph("K1,3"), DomKind::Semitotal, 2).verdict == Complexity::Hard);
    CHECK_THROWS_AS(classify_dichotomy(path_graph(3), DomKind::Total, 3), Error);
}

TEST_CASE("hardness is inherited by induced superpatterns") {
    // All graphs on up to 5 vertices, by edge mask, checked for monotonicity against
    // their one-vertex-deleted subgraphs.
    for (int n = 1; n <= 5; ++n) {
        std::vector<Edge> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << slots.size()); mask += (n == 5 ? 7 : 1)) {
            std::vector<Edge> es;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1u) es.push_back(slots[i]);
            Graph h = build_graph(n, es);
            for (DomKind kind : {DomKind::Total, DomKind::Semitotal}) {
                auto whole = classify_dichotomy(h, kind, 2).verdict;
                for (int drop = 0; drop < n && n > 1; ++drop) {
                    Graph sub = induced_subgraph(h, h.vertices() - VertexSet::single(drop));
                    if (classify_dichotomy(sub, kind, 2).verdict == Complexity::Hard) CHECK(whole == Complexity::Hard);
                }
                CHECK(classify_dichotomy(h, kind, 1).verdict == whole);
            }
        }
    }
}
