#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alliance/generators.hpp"
#include "alliance/harness.hpp"
#include "alliance/kernel.hpp"
#include "support/oracles.hpp"

using namespace alliance;

namespace {

std::vector<Graph> small_fixtures() {
    // everything here has n <= 6 so full subset-pair enumeration stays cheap
    return {complete(4), cycle(4),  cycle(5),
            cycle(6),    prism(3),  complete_bipartite(3, 3),
            complete(5), harness::cactus(3, 3), complete_bipartite(1, 3)};
}

std::vector<Graph> sda_fixtures() {
    return {complete(4),  complete(5),        complete(7),
            cycle(5),     cycle(7),           complete_bipartite(3, 3),
            prism(3),     prism(4),           petersen(),
            harness::cactus(3, 3), harness::cactus(3, 5), harness::cactus(5, 5)};
}

}  // namespace

TEST_CASE("boundary") {
    CHECK(boundary(cycle(4), VertexSet::of(4, {0})).to_vector() == std::vector<int>{1, 3});
    CHECK(boundary(complete(4), VertexSet::all(4)).empty());
    Graph k33 = complete_bipartite(3, 3);
    CHECK(boundary(k33, VertexSet::of(6, {0, 1, 2})).to_vector() == std::vector<int>{3, 4, 5});
}

TEST_CASE("offensive alliance predicate") {
    Graph k33 = complete_bipartite(3, 3);
    CHECK(is_offensive_alliance(k33, VertexSet::of(6, {0, 1})).holds);

    auto r = is_offensive_alliance(complete(4), VertexSet::of(4, {0}));
    CHECK(!r.holds);
    CHECK(r.violating_vertex == 1);  // first violator in index order
    CHECK(r.in_count == 1);
    CHECK(r.out_count == 2);

    CHECK(is_offensive_alliance(complete(4), VertexSet::all(4)).holds);  // empty boundary
    CHECK_THROWS_AS(is_offensive_alliance(complete(4), VertexSet(4)), std::domain_error);
}

TEST_CASE("strong offensive alliance predicate") {
    Graph k33 = complete_bipartite(3, 3);
    CHECK(is_strong_offensive_alliance(k33, VertexSet::of(6, {0, 1, 2})).holds);
    auto r = is_strong_offensive_alliance(k33, VertexSet::of(6, {0, 1}));
    CHECK(!r.holds);  // 2*2 = 4 < 3+2
    CHECK(r.in_count == 2);
    CHECK(is_strong_offensive_alliance(k33, VertexSet::all(6)).holds);
    CHECK_THROWS_AS(is_strong_offensive_alliance(k33, VertexSet(6)), std::domain_error);
}

TEST_CASE("global variants quantify over all outside vertices") {
    CHECK(is_global_offensive(complete(4), VertexSet::of(4, {0, 1})).holds);

    // one triangle of the prism is not a global strong offensive alliance
    auto r = is_global_strong_offensive(prism(3), VertexSet::of(6, {0, 1, 2}));
    CHECK(!r.holds);
    CHECK(r.in_count == 1);
    CHECK(r.out_count == 2);

    CHECK(is_global_strong_offensive(cycle(4), VertexSet::of(4, {0, 2})).holds);

    // offensive but not global: the boundary stops at vertex 2, vertices
    // 3 and 4 are untouched
    Graph tail = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    CHECK(is_offensive_alliance(tail, VertexSet::of(5, {0, 1})).holds);
    CHECK(!is_global_offensive(tail, VertexSet::of(5, {0, 1})).holds);

    CHECK(is_global_offensive(complete(4), VertexSet::all(4)).holds);  // vacuous
}

TEST_CASE("k-domination, independence, domination") {
    Graph k33 = complete_bipartite(3, 3);
    CHECK(is_k_dominating(k33, VertexSet::of(6, {0, 1, 2}), 3));
    CHECK(is_k_dominating(complete(4), VertexSet::of(4, {0, 1}), 2));
    CHECK(!is_k_dominating(cycle(4), VertexSet::of(4, {0}), 2));

    CHECK(!is_independent(complete(4), VertexSet::of(4, {0, 1})));
    CHECK(is_independent(k33, VertexSet::of(6, {0, 1, 2})));
    CHECK(is_dominating(k33, VertexSet::of(6, {0, 1, 2})));
    CHECK(!is_dominating(k33, VertexSet::of(6, {0})));

    CHECK(is_independent(complete(4), VertexSet(4)));   // empty set
    CHECK(!is_dominating(complete(4), VertexSet(4)));
}

TEST_CASE("strong defensive alliances") {
    CHECK(is_strong_defensive_alliance(complete(4), VertexSet::of(4, {0, 1, 2})));
    CHECK(!is_strong_defensive_alliance(complete(4), VertexSet::of(4, {0, 1})));
    Graph isolated = Graph::from_edges(1, {});
    CHECK(is_strong_defensive_alliance(isolated, VertexSet::of(1, {0})));  // 2*0 >= 0
    CHECK_THROWS_AS(is_strong_defensive_alliance(complete(4), VertexSet(4)), std::domain_error);
}

TEST_CASE("sda residue trimming") {
    CHECK(sda_residue(complete(4), VertexSet::of(4, {0, 1})).empty());
    CHECK(sda_residue(complete(4), VertexSet::of(4, {0, 1, 2})) == VertexSet::of(4, {0, 1, 2}));
    CHECK(is_sda_free(complete(4), VertexSet::of(4, {0, 1})));
    CHECK(!is_sda_free(complete(4), VertexSet::of(4, {0, 1, 2})));
    CHECK(is_sda_free(complete(4), VertexSet(4)));
}

TEST_CASE("trimming agrees with subset enumeration on the fixture corpus") {
    for (const auto& g : sda_fixtures()) {
        int n = g.order();
        REQUIRE(n <= 10);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
            CHECK(is_sda_free(g, VertexSet::from_bits(n, x)) == oracle::sda_free(g, x));
    }
}

TEST_CASE("kernel predicates agree with the restated definitions") {
    for (const auto& g : small_fixtures()) {
        int n = g.order();
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
            VertexSet set = VertexSet::from_bits(n, s);
            CHECK(is_offensive_alliance(g, set).holds == oracle::offensive(g, s));
            CHECK(is_strong_offensive_alliance(g, set).holds == oracle::strong_offensive(g, s));
            CHECK(is_global_offensive(g, set).holds == oracle::global_offensive(g, s));
            CHECK(is_global_strong_offensive(g, set).holds ==
                  oracle::global_strong_offensive(g, s));
            CHECK(is_independent(g, set) == oracle::independent(g, s));
            CHECK(is_dominating(g, set) == oracle::dominating(g, s));
            CHECK(is_k_dominating(g, set, 2) == oracle::k_dominating(g, s, 2));
            CHECK(is_strong_defensive_alliance(g, set) == oracle::strong_defensive(g, s));
        }
    }
}

TEST_CASE("monotonicity of the global predicates over all subset pairs") {
    for (const auto& g : small_fixtures()) {
        int n = g.order();
        if (n > 6) continue;
        for (std::uint64_t t = 1; t < (std::uint64_t{1} << n); ++t) {
            VertexSet tset = VertexSet::from_bits(n, t);
            bool t_go = is_global_offensive(g, tset).holds;
            bool t_gso = is_global_strong_offensive(g, tset).holds;
            // enumerate proper nonempty submasks
            for (std::uint64_t s = (t - 1) & t; s != 0; s = (s - 1) & t) {
                VertexSet sset = VertexSet::from_bits(n, s);
                if (is_global_offensive(g, sset).holds) CHECK(t_go);
                if (is_global_strong_offensive(g, sset).holds) CHECK(t_gso);
                for (int k = 1; k <= 3; ++k)
                    if (is_k_dominating(g, sset, k)) CHECK(is_k_dominating(g, tset, k));
            }
        }
    }
}

TEST_CASE("downward closure of SDA-free sets") {
    for (const auto& g : small_fixtures()) {
        int n = g.order();
        if (n > 6) continue;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            if (!is_sda_free(g, VertexSet::from_bits(n, x))) continue;
            for (std::uint64_t s = (x - 1) & x; true; s = (s - 1) & x) {
                CHECK(is_sda_free(g, VertexSet::from_bits(n, s)));
                if (s == 0) break;
            }
        }
    }
}

TEST_CASE("cubic equivalence: strong offensive = 3-dominating, offensive = 2-dominating") {
    std::vector<Graph> cubic = {petersen(), prism(3), prism(4)};
    for (const auto& g : all_labeled_cubic(4)) cubic.push_back(g);
    for (const auto& g : all_labeled_cubic(6)) cubic.push_back(g);
    for (const auto& g : cubic) {
        int n = g.order();
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
            VertexSet set = VertexSet::from_bits(n, s);
            CHECK(is_global_strong_offensive(g, set).holds == is_k_dominating(g, set, 3));
            CHECK(is_global_offensive(g, set).holds == is_k_dominating(g, set, 2));
        }
    }
}

TEST_CASE("cubic equivalence holds exhaustively at n = 8") {
    long checked = 0;
    for_each_labeled_cubic(8, [&](const Graph& g) {
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << 8); ++s) {
            VertexSet set = VertexSet::from_bits(8, s);
            bool gso = is_global_strong_offensive(g, set).holds;
            bool go = is_global_offensive(g, set).holds;
            if (gso != is_k_dominating(g, set, 3) || go != is_k_dominating(g, set, 2)) ++checked;
        }
    });
    CHECK(checked == 0);
}

TEST_CASE("global offensive alliances are dominating") {
    for (const auto& g : small_fixtures()) {
        int n = g.order();
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
            VertexSet set = VertexSet::from_bits(n, s);
            if (is_global_offensive(g, set).holds) CHECK(is_dominating(g, set));
        }
    }
}
