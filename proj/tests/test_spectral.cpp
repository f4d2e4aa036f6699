#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "alliance/generators.hpp"
#include "alliance/harness.hpp"
#include "alliance/io.hpp"
#include "alliance/solvers.hpp"
#include "alliance/spectral.hpp"

using namespace alliance;

namespace {

constexpr double pi = 3.14159265358979323846;

double mu_complete(int n) { return n; }
double mu_complete_bipartite(int a, int b) { return a + b; }
double mu_cycle(int n) { return 2.0 - 2.0 * std::cos(2.0 * pi * (n / 2) / n); }

}  // namespace

TEST_CASE("power iteration matches closed forms for complete graphs") {
    for (int n = 2; n <= 12; ++n)
        CHECK(std::abs(laplacian_spectral_radius(complete(n)) - mu_complete(n)) < 1e-6);
}

TEST_CASE("power iteration matches closed forms for complete bipartite graphs") {
    for (int a = 1; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            CHECK(std::abs(laplacian_spectral_radius(complete_bipartite(a, b)) -
                           mu_complete_bipartite(a, b)) < 1e-6);
}

TEST_CASE("power iteration matches closed forms for cycles") {
    for (int n = 3; n <= 12; ++n)
        CHECK(std::abs(laplacian_spectral_radius(cycle(n)) - mu_cycle(n)) < 1e-6);
}

TEST_CASE("line graphs of regular graphs reach mu = 2*delta") {
    std::vector<Graph> bases = {complete(4), complete(5),  complete(6),
                                complete_bipartite(3, 3),  cycle(4),
                                cycle(6),    cycle(8),     cycle(10),
                                prism(3),    prism(4),     prism(5),
                                prism(6),    petersen()};
    for (const auto& g : bases) {
        REQUIRE(g.size() <= 20);
        int delta = *degree_profile(g).common_degree;
        double mu = laplacian_spectral_radius(line_graph(g).graph);
        CHECK(std::abs(mu - line_graph_spectral_radius_regular(delta)) < 1e-6);
    }
}

TEST_CASE("odd cycles fall short of mu(L) = 4, which the claims exclude") {
    double mu = laplacian_spectral_radius(line_graph(cycle(5)).graph);
    CHECK(std::abs(mu - mu_cycle(5)) < 1e-6);  // L(C5) = C5
    CHECK(4.0 - mu > 0.3);
}

TEST_CASE("spectral radius rejects bad inputs") {
    CHECK_THROWS_AS(laplacian_spectral_radius(Graph::from_edges(3, {})), std::domain_error);
    SpectralOptions bad;
    bad.tol = 0;
    CHECK_THROWS_AS(laplacian_spectral_radius(complete(3), bad), std::domain_error);
    CHECK_THROWS_AS(line_graph_spectral_radius_regular(1), std::domain_error);
    CHECK(line_graph_spectral_radius_regular(3) == 6.0);
    CHECK(line_graph_spectral_radius_regular(2) == 4.0);
}

TEST_CASE("rational helpers") {
    CHECK(rational_ceil(Rational(5, 2)) == 3);
    CHECK(rational_ceil(Rational(-7, 2)) == -3);
    CHECK(rational_ceil(Rational(6, 3)) == 2);
    CHECK(to_string(Rational(9, 2)) == "9/2");
    CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("spectral bounds on gamma_o (thof)") {
    Graph k33 = complete_bipartite(3, 3);
    auto b = bounds_thof(k33, gamma_o(k33).size);
    CHECK(b.applicable);
    CHECK(b.spectral);
    CHECK(b.exact == 3);
    CHECK(std::abs(b.lower - 2.0) < 1e-6);   // (6/6) * ceil(4/2)
    CHECK(std::abs(b.upper - 4.5) < 1e-6);   // 6*(12-3)/12
    CHECK(b.lower_ok);
    CHECK(b.upper_ok);
    CHECK(!b.band_flip);

    auto k4 = bounds_thof(complete(4), gamma_o(complete(4)).size);
    CHECK(std::abs(k4.lower - 2.0) < 1e-6);
    CHECK(std::abs(k4.upper - 2.5) < 1e-6);
    CHECK(k4.exact == 2);
    CHECK(k4.lower_ok);
    CHECK(k4.upper_ok);
}

TEST_CASE("an exactly tight spectral bound does not flip inside the band") {
    // gamma_o(petersen) = 4 equals the lower bound (10/5)*2 exactly
    Graph p = petersen();
    auto b = bounds_thof(p, gamma_o(p).size);
    CHECK(b.exact == 4);
    CHECK(std::abs(b.lower - 4.0) < 1e-6);
    CHECK(b.lower_ok);
    CHECK(b.upper_ok);
    CHECK(!b.band_flip);
    CHECK(b.lower_safe <= b.lower + 1e-9);  // certified end cannot exceed the center
}

TEST_CASE("line-graph bounds in base parameters (coro)") {
    auto k4 = bounds_coro(complete(4), gamma_o(line_graph(complete(4)).graph).size);
    CHECK(k4.lower_exact == Rational(3));
    CHECK(k4.upper_exact == Rational(4));
    CHECK(k4.exact == 4);
    CHECK(k4.lower_ok);
    CHECK(k4.upper_ok);

    Graph k33 = complete_bipartite(3, 3);
    auto b = bounds_coro(k33, gamma_o(line_graph(k33).graph).size);
    CHECK(b.lower_exact == Rational(9, 2));
    CHECK(b.upper_exact == Rational(6));
    CHECK(b.exact == 5);
    CHECK(b.lower_ok);
    CHECK(b.upper_ok);

    // L(C5) = C5, so the exact value is gamma_o(C5) = 3
    auto c5 = bounds_coro(cycle(5), gamma_o(cycle(5)).size);
    CHECK(c5.lower_exact == Rational(5, 2));
    CHECK(c5.upper_exact == Rational(15, 4));
    CHECK(c5.exact == 3);
    CHECK(c5.lower_ok);
    CHECK(c5.upper_ok);

    CHECK_THROWS_AS(bounds_coro(complete_bipartite(1, 3), 1), std::domain_error);
}

TEST_CASE("degree bounds (cotainf)") {
    auto k4 = bounds_cotainf(complete(4), 2);
    CHECK(k4.lower_exact == Rational(2));  // ceil(16/10)
    CHECK(k4.upper_exact == Rational(8, 3));
    CHECK(k4.lower_ok);
    CHECK(k4.upper_ok);

    auto c6 = bounds_cotainf(cycle(6), gamma_o(cycle(6)).size);
    CHECK(c6.exact == 3);
    CHECK(c6.lower_exact == Rational(2));  // ceil(12/6), even-degree branch
    CHECK(c6.upper_exact == Rational(4));
    CHECK(c6.lower_ok);
    CHECK(c6.upper_ok);

    // cubic graphs: the odd branch gives ceil(2n/5)
    auto p = bounds_cotainf(petersen(), 4);
    CHECK(p.lower_exact == Rational(4));
}

TEST_CASE("odd-degree regular bounds (cotasup)") {
    for (int r : {3, 4, 5}) {
        auto b = bounds_cotasup(prism(r), gamma_o(prism(r)).size);
        CHECK(b.exact == r);
        CHECK(b.upper_exact == Rational(r));  // upper bound n/2 is tight
        CHECK(b.lower_ok);
        CHECK(b.upper_ok);
    }
    auto p = bounds_cotasup(petersen(), gamma_o(petersen()).size);
    CHECK(p.lower_exact == Rational(4));  // 10*4/10, tight
    CHECK(p.exact == 4);
    CHECK(p.lower_ok);

    auto k4 = bounds_cotasup(complete(4), 2);
    CHECK(k4.lower_exact == Rational(8, 5));
    CHECK(k4.upper_exact == Rational(2));
    CHECK(k4.lower_ok);
    CHECK(k4.upper_ok);

    CHECK_THROWS_AS(bounds_cotasup(cycle(6), 3), std::domain_error);      // even degree
    CHECK_THROWS_AS(bounds_cotasup(complete_bipartite(1, 3), 1), std::domain_error);
}

TEST_CASE("strong-alliance range (th1) and line-graph range (eq5)") {
    auto th1_k4 = bounds_th1(complete(4), gamma_so(complete(4)).size);
    CHECK(th1_k4.lower_exact == Rational(2));
    CHECK(th1_k4.upper_exact == Rational(3));
    CHECK(th1_k4.exact == 3);  // upper bound tight exactly on K4
    CHECK(th1_k4.lower_ok);
    CHECK(th1_k4.upper_ok);

    Graph k33 = complete_bipartite(3, 3);
    auto th1_k33 = bounds_th1(k33, gamma_so(k33).size);
    CHECK(th1_k33.lower_exact == Rational(3));
    CHECK(th1_k33.upper_exact == Rational(9, 2));
    CHECK(th1_k33.exact == 3);

    auto eq5_k33 = bounds_eq5(k33, gamma_o(line_graph(k33).graph).size);
    CHECK(eq5_k33.lower_exact == Rational(9, 2));
    CHECK(eq5_k33.upper_exact == Rational(6));
    CHECK(eq5_k33.exact == 5);
    CHECK(eq5_k33.lower_ok);
    CHECK(eq5_k33.upper_ok);

    auto eq5_k4 = bounds_eq5(complete(4), gamma_o(line_graph(complete(4)).graph).size);
    CHECK(eq5_k4.lower_exact == Rational(3));
    CHECK(eq5_k4.upper_exact == Rational(4));
    CHECK(eq5_k4.exact == 4);  // upper bound tight

    CHECK_THROWS_AS(bounds_th1(cycle(5), 3), std::domain_error);
    CHECK_THROWS_AS(bounds_eq5(cycle(5), 3), std::domain_error);
}

TEST_CASE("cubic gamma_o range (eq6)") {
    auto p = bounds_eq6(petersen(), gamma_o(petersen()).size);
    CHECK(p.lower_exact == Rational(4));
    CHECK(p.upper_exact == Rational(5));
    CHECK(p.exact == 4);
    CHECK(p.lower_ok);
    CHECK(p.upper_ok);
}

TEST_CASE("independent-alliance bounds (otfen22) and applicability") {
    Graph k33 = complete_bipartite(3, 3);
    auto both = bounds_otfen22(k33, a_i(k33)->size, gamma_i(k33)->size);
    CHECK(both.applicable);
    CHECK(both.lower_exact == Rational(2));
    CHECK(both.upper_exact == Rational(2));  // tight on both sides
    CHECK(both.exact == 2);
    CHECK(both.lower_ok);
    CHECK(both.upper_ok);

    // K4 has no independent offensive alliance at all
    auto k4 = bounds_otfen22(complete(4), std::nullopt, std::nullopt);
    CHECK(!k4.applicable);

    // petersen has a_i = gamma_i = 4
    auto p = bounds_otfen22(petersen(), 4, 4);
    CHECK(!p.applicable);

    // the twin-pair graph: a_i = 2 < gamma_i = 5 applies, and the lower
    // bound (n+2)/4 = 3.5 genuinely fails -- the report must say so
    Graph twin = parse_graph6("KSZ??cGCr@?s");
    auto ai = a_i(twin);
    auto gi = gamma_i(twin);
    REQUIRE(ai.has_value());
    REQUIRE(gi.has_value());
    CHECK(ai->size == 2);
    auto b = bounds_otfen22(twin, ai->size, gi->size);
    CHECK(b.applicable);
    CHECK(!b.lower_ok);
    CHECK(b.upper_ok);

    // gamma_i absent: not applicable (a_i < gamma_i has no meaning)
    auto na = bounds_otfen22(parse_graph6("G{O_ww"), 2, std::nullopt);
    CHECK(!na.applicable);
}
