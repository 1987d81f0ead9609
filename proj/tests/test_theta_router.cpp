#include <doctest.h>

#include "icg/gabriel.hpp"
#include "icg/generators.hpp"
#include "icg/steiner.hpp"
#include "icg/theta_router.hpp"
#include "oracles.hpp"

using namespace icg;

TEST_SUITE("theta_router") {

TEST_CASE("theta subgraph arcs") {
    const double t30 = std::tan(oracle::rad(30)), t50 = std::tan(oracle::rad(50));
    const PointSet ps({{0, 0}, {1, t30}, {1, t50}, {1, 1}});
    const GeomGraph g(ps, {{0, 1}, {0, 2}, {0, 3}});
    const auto sub = theta_subgraph(g, 0.0);
    auto has = [&](Index a, Index b) {
        return std::find(sub.arcs.begin(), sub.arcs.end(), Arc{a, b}) != sub.arcs.end();
    };
    CHECK(has(0, 1));
    CHECK_FALSE(has(0, 2));
    CHECK_FALSE(has(2, 0));
    CHECK(has(0, 3));  // closed wedge
    CHECK(sub.arcs.size() == 2);
}

TEST_CASE("arcs increase the projection onto theta") {
    const auto ps = lattice_generator(5, 5, 0.05, 1);
    const auto g = gabriel_graph(ps);
    Rng rng(2);
    for (int k = 0; k < 50; ++k) {
        const double th = rng.uniform(0, 360);
        const Point u{std::cos(oracle::rad(th)), std::sin(oracle::rad(th))};
        for (const Arc& a : theta_subgraph(g, th).arcs) CHECK(dot(ps[a.to] - ps[a.from], u) > 0.0);
    }
}

TEST_CASE("candidate thetas") {
    const GeomGraph edge(PointSet({{0, 0}, {1, 0}, {0, 1}}), {{0, 1}});
    const auto c = candidate_thetas(edge, 0, 2);
    auto contains = [&](double x) {
        return std::any_of(c.begin(), c.end(), [&](double y) { return angular_distance_deg(x, y) < 1e-9; });
    };
    CHECK(contains(45));
    CHECK(contains(315));
    CHECK(contains(135));
    CHECK(contains(225));
    CHECK(contains(90));  // slope(s -> t)
    CHECK(contains(0));   // midpoint of 315 and 45
    CHECK(std::is_sorted(c.begin(), c.end()));

    const double h = std::sqrt(3.0) / 2.0;
    const GeomGraph tri(PointSet({{0, 0}, {1, 0}, {0.5, h}}), {{0, 1}, {0, 2}, {1, 2}});
    // Slopes 0, 60, 120 (and reverses) give 12 values +-45 that collapse to 12
    // distinct critical values at most, plus as many midpoints, plus slope(s->t).
    CHECK(candidate_thetas(tri, 0, 1).size() <= 25);

    const GeomGraph empty(PointSet({{0, 0}, {1, 1}}));
    const auto ce = candidate_thetas(empty, 0, 1);
    REQUIRE(ce.size() == 1);
    CHECK(ce[0] == doctest::Approx(45));
}

TEST_CASE("theta subgraph is constant between critical values") {
    const auto ps = gen_uniform(15, 4);
    const auto g = gabriel_graph(ps);
    auto crit = candidate_thetas(g, 0, 1);
    for (std::size_t k = 0; k + 1 < crit.size(); ++k) {
        const double a = crit[k], b = crit[k + 1];
        const auto s1 = theta_subgraph(g, a + 0.3 * (b - a));
        const auto s2 = theta_subgraph(g, a + 0.7 * (b - a));
        // Critical values include midpoints, so each open gap lies inside one
        // region of constant subgraph.
        CHECK(s1.arcs == s2.arcs);
    }
}

TEST_CASE("route examples") {
    const GeomGraph edge(PointSet({{0, 0}, {2, 1}}), {{0, 1}});
    const auto w = route(edge, 0, 1);
    REQUIRE(w);
    CHECK(w->vertices == std::vector<Index>{0, 1});
    REQUIRE(w->theta_deg);
    CHECK(*w->theta_deg == doctest::Approx(slope_deg({0, 0}, {2, 1})));

    const GeomGraph apart(PointSet({{0, 0}, {0.1, 0}, {5, 5}, {5.1, 5}}), {{0, 1}, {2, 3}});
    CHECK_FALSE(route(apart, 0, 2));
    CHECK_THROWS_AS(route(apart, 0, 0), Error);
    CHECK_THROWS_AS(route(apart, 0, 9), Error);
}

TEST_CASE("route is complete and sound on lattice Gabriel triangulations") {
    for (std::uint64_t s = 0; s < 3; ++s) {
        const auto ps = lattice_generator(6, 6, 0.05, s);
        const auto g = gabriel_graph(ps);
        REQUIRE(is_gabriel_triangulation(g));
        const ThetaRouter router(g);
        for (Index a = 0; a < ps.size(); ++a) {
            for (Index b = 0; b < ps.size(); ++b) {
                if (a == b) continue;
                const auto w = router.route(a, b);
                REQUIRE(w);
                const auto pts = path_points(g, w->vertices);
                CHECK(is_theta_path(pts, *w->theta_deg));
                CHECK(is_increasing_chord(pts));
                CHECK(detour(pts) <= 2.094 + 1e-6);
            }
        }
    }
}

TEST_CASE("route is deterministic") {
    const auto ps = lattice_generator(5, 5, 0.1, 9);
    const auto g = gabriel_graph(ps);
    for (Index b = 1; b < ps.size(); ++b) {
        const auto w1 = route(g, 0, b), w2 = route(g, 0, b);
        REQUIRE(w1);
        CHECK(w1->vertices == w2->vertices);
        CHECK(*w1->theta_deg == *w2->theta_deg);
    }
}

TEST_CASE("route agrees with the exhaustive oracle on small triangulations") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto ps = lattice_generator(2 + s % 2, 3, 0.1, s);
        const auto g = gabriel_graph(ps);
        REQUIRE(is_gabriel_triangulation(g));
        for (Index a = 0; a < ps.size(); ++a)
            for (Index b = 0; b < ps.size(); ++b)
                if (a != b && route(g, a, b)) CHECK(exhaustive_increasing_chord_search(g, a, b));
    }
}

}
