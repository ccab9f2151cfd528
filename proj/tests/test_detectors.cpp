#include <catch_amalgamated.hpp>

#include <random>

#include "ctkit/detectors.hpp"
#include "ctkit/named.hpp"
#include "ctkit/random.hpp"
#include "oracles.hpp"

using namespace ctkit;

TEST_CASE("pattern examples") {
    Graph k3 = complete_graph(3);
    CHECK(find_pattern(k3, k3.vertices(), Pattern::P3).has_value());
    Graph c6 = cycle_graph(6);
    for (Pattern p : {Pattern::P3, Pattern::P4, Pattern::K13, Pattern::TwoP3})
        CHECK_FALSE(find_pattern(c6, VertexSet{0, 2, 4}, p).has_value());
    Graph claw = make_named_graph("K1,3");
    auto w = find_pattern(claw, claw.vertices(), Pattern::K13);
    REQUIRE(w.has_value());
    CHECK(*w == PatternWitness{0, 1, 2, 3});
    CHECK_FALSE(find_pattern(claw, claw.vertices(), Pattern::P4).has_value());
}

TEST_CASE("friendly triple examples") {
    Graph p4 = path_graph(4);
    CHECK(find_friendly_triple(p4, VertexSet{0, 1, 3}).has_value());
    auto w = find_friendly_triple(p4, VertexSet{0, 2, 3});
    REQUIRE(w.has_value());
    CHECK(Detector(p4).validate_friendly(VertexSet{0, 2, 3}, *w));
    CHECK_FALSE(find_friendly_triple(p4, VertexSet{0, 1}).has_value());
}

TEST_CASE("ST-configuration examples") {
    Graph claw = make_named_graph("K1,3");
    CHECK(find_st_config(claw, claw.vertices(), STConfig::O5).has_value());

    Graph p5 = path_graph(5);
    auto o4 = find_st_config(p5, VertexSet{0, 1, 2, 4}, STConfig::O4);
    REQUIRE(o4.has_value());
    CHECK(o4->second == PatternWitness{0, 1, 2, 4});

    // a1 a2 m1 c m2 b2 b1 as 0..6: edges a1a2, a2m1, m1c, b1b2, b2m2, m2c
    Graph g = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {6, 5}, {5, 4}, {4, 3}});
    VertexSet d{0, 1, 3, 5, 6};
    auto o3 = find_st_config(g, d, STConfig::O3);
    REQUIRE(o3.has_value());
    CHECK(o3->second[2] == 3);
    CHECK(o3->second[5] == 3);
    CHECK(Detector(g).validate(d, shape_of(STConfig::O3), o3->second));
}

TEST_CASE("detectors match naive tuple scans and return the same lex-first witness") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 120; ++round) {
        const int n = 5 + round % 6;
        Graph g = random_connected_graph(n, 0.25 + 0.05 * (round % 5), 100 + round);
        std::uniform_int_distribution<int> pick(0, 99);
        VertexSet d;
        for (int v = 0; v < n; ++v)
            if (pick(rng) < 60) d.set(v);
        const auto dv = d.to_vector();
        Detector det(g);
        oracle::Naive naive(g);

        auto cmp = [&](const std::optional<PatternWitness>& mine, const std::vector<int>& want) {
            if (want.empty()) {
                CHECK_FALSE(mine.has_value());
            } else {
                REQUIRE(mine.has_value());
                CHECK(*mine == want);
            }
        };
        cmp(det.find_pattern(d, Pattern::P3), naive.p3(dv));
        cmp(det.find_pattern(d, Pattern::P4), naive.p4(dv));
        cmp(det.find_pattern(d, Pattern::K13), naive.k13(dv));
        cmp(det.find_pattern(d, Pattern::TwoP3), naive.two_p3(dv));
        cmp(det.find_friendly_triple(d), naive.friendly(dv, true));
        cmp(det.find_friendly_triple(d, FriendlyReading::IndexOriented), naive.friendly(dv, false));
        for (STConfig c : kAllConfigs) {
            auto got = det.find_st_config(d, c);
            cmp(got ? std::optional<PatternWitness>(got->second) : std::nullopt, naive.config(dv, static_cast<int>(c)));
            if (got) CHECK(det.validate(d, shape_of(c), got->second));
        }
        if (det.find_pattern(d, Pattern::TwoP3)) CHECK(det.find_pattern(d, Pattern::P3));
    }
}
