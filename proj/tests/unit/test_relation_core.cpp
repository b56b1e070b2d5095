#include "crdyn/error.hpp"
#include "crdyn/finite_relation.hpp"
#include "crdyn/orbit.hpp"
#include "crdyn/segment_relation.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

using namespace crdyn;

namespace {

SegmentRelation cross()
{
    return SegmentRelation({{0.0, 0.5, 1.0, 0.5}, {0.5, 0.0, 0.5, 1.0}});
}

// walks with m edges via repeated adjacency-matrix products
std::uint64_t matrix_walks(const FiniteRelation& g, int m)
{
    const int n = g.size();
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& [x, y] : g.edges()) {
        a[x][y] = 1;
    }
    std::vector<std::vector<std::uint64_t>> p(n, std::vector<std::uint64_t>(n, 0));
    for (int i = 0; i < n; ++i) {
        p[i][i] = 1;
    }
    for (int s = 0; s < m; ++s) {
        std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                for (int j = 0; j < n; ++j) {
                    q[i][j] += p[i][k] * a[k][j];
                }
            }
        }
        p = q;
    }
    std::uint64_t total = 0;
    for (const auto& row : p) {
        for (auto v : row) {
            total += v;
        }
    }
    return total;
}

} // namespace

TEST_CASE("finite relation construction and membership")
{
    FiniteRelation c3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(c3.contains(0, 1));
    CHECK_FALSE(c3.contains(1, 0));
    CHECK(c3.predecessors(0) == std::vector<Vertex>{2});
    CHECK_THROWS_AS(FiniteRelation(2, {}), ConstraintError);
    CHECK_THROWS_AS(FiniteRelation(0, {{0, 0}}), ConstraintError);
    CHECK_THROWS_AS(FiniteRelation(2, {{0, 2}}), OutOfRange);
    CHECK_THROWS_AS((void)c3.contains(0, 3), OutOfRange);

    FiniteRelation loop(2, {{0, 0}});
    CHECK(loop.successors(1).empty());
    CHECK(loop.domain() == std::vector<Vertex>{0});

    FiniteRelation single(2, {{0, 1}});
    CHECK(single.domain() == std::vector<Vertex>{0});
    CHECK(single.range() == std::vector<Vertex>{1});
    CHECK(single.inverse().edges() == std::vector<Edge>{{1, 0}});
}

TEST_CASE("involution, fiber consistency and projection soundness on small relations")
{
    for (const auto& g : testsupport::all_small_relations(3)) {
        const auto inv = g.inverse();
        REQUIRE(inv.inverse() == g);
        for (Vertex x = 0; x < g.size(); ++x) {
            const auto& succ = g.successors(x);
            for (Vertex y = 0; y < g.size(); ++y) {
                REQUIRE(g.contains(x, y) == inv.contains(y, x));
                const bool listed = std::find(succ.begin(), succ.end(), y) != succ.end();
                REQUIRE(listed == g.contains(x, y));
            }
            const auto dom = g.domain();
            const bool in_p1 = std::find(dom.begin(), dom.end(), x) != dom.end();
            REQUIRE(in_p1 == !succ.empty());
        }
    }
}

TEST_CASE("mahavier products")
{
    FiniteRelation back(2, {{1, 0}});
    auto m1 = mahavier_paths(back, 1);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0] == std::vector<Vertex>{1, 0});
    CHECK(mahavier_paths(back, 2).empty());

    auto c3 = FiniteRelation::cycle(3);
    auto m2 = mahavier_paths(c3, 2);
    CHECK(m2 == std::vector<std::vector<Vertex>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});

    CHECK(mahavier_paths(FiniteRelation::full(2), 2).size() == 8);
    CHECK_THROWS_AS((void)mahavier_paths(FiniteRelation::full(4), 12), CapExceeded);
    CHECK_THROWS_AS((void)mahavier_paths(c3, 0), ConstraintError);
}

TEST_CASE("mahavier path counts equal adjacency matrix walk counts")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (rng() % 3 == 0) {
                    e.emplace_back(i, j);
                }
            }
        }
        if (e.empty()) {
            e.emplace_back(0, 0);
        }
        FiniteRelation g(n, e);
        const int m = 1 + static_cast<int>(rng() % 4);
        auto paths = mahavier_paths(g, m);
        REQUIRE(paths.size() == matrix_walks(g, m));
        REQUIRE(count_walks(g, m) == matrix_walks(g, m));
        REQUIRE(std::is_sorted(paths.begin(), paths.end()));
        for (const auto& p : paths) {
            REQUIRE(p.size() == static_cast<std::size_t>(m) + 1);
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                REQUIRE(g.contains(p[i], p[i + 1]));
            }
        }
    }
}

TEST_CASE("segment membership")
{
    auto g = cross();
    CHECK(g.contains(0.3, 0.5));
    CHECK_FALSE(g.contains(0.3, 0.4));
    CHECK(g.contains(0.5, 0.9));
    CHECK(g.contains(0.3, 0.5 + 5e-10));
    CHECK_FALSE(g.contains(0.3, 0.5 + 5e-9));
    CHECK_THROWS_AS((void)g.contains(1.2, 0.5), OutOfRange);
    CHECK_THROWS_AS(SegmentRelation({}), ConstraintError);
    CHECK_THROWS_AS(SegmentRelation({{0.0, 0.0, 1.5, 1.0}}), ConstraintError);
}

TEST_CASE("segment distance agrees with dense sampling of the segment")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        Segment s{u(rng), u(rng), u(rng), u(rng)};
        const double x = u(rng);
        const double y = u(rng);
        double best = 1e9;
        for (int k = 0; k <= 20000; ++k) {
            const double t = k / 20000.0;
            best = std::min(best, std::hypot(x - (s.x1 + t * (s.x2 - s.x1)), y - (s.y1 + t * (s.y2 - s.y1))));
        }
        CHECK(s.distance(x, y) <= best + 1e-12);
        CHECK(s.distance(x, y) >= best - 1e-4);
    }
}

TEST_CASE("segment fibers and projections")
{
    auto g = cross();
    CHECK(g.successors(0.5).is_unit());
    auto s = g.successors(0.3);
    REQUIRE(s.size() == 1);
    CHECK(s.intervals()[0] == Interval{0.5, 0.5});
    auto p = g.predecessors(0.9);
    REQUIRE(p.size() == 1);
    CHECK(p.intervals()[0] == Interval{0.5, 0.5});
    CHECK(g.domain().is_unit());
    CHECK(g.range().is_unit());

    SegmentRelation ex22({{0.0, 0.5, 1.0, 1.0}, {1.0, 0.0, 1.0, 1.0}});
    CHECK(ex22.domain().is_unit());
    CHECK(ex22.range().is_unit());
    CHECK(ex22.successors(0.5).intervals()[0].lo == doctest::Approx(0.75));

    SegmentRelation dot({{1.0, 0.0, 1.0, 0.0}});
    CHECK(dot.successors(0.5).empty());
    CHECK(dot.domain() == IntervalSet::point(1.0));
}

TEST_CASE("segment inverse swaps coordinates")
{
    auto g = cross();
    auto inv = g.inverse();
    CHECK(inv.inverse() == g);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
        const double x = u(rng);
        const double y = k % 2 ? 0.5 : u(rng);
        CHECK(g.contains(x, y) == inv.contains(y, x));
    }
    // the cross is symmetric: its inverse covers the same point set
    for (int k = 0; k <= 100; ++k) {
        const double t = k / 100.0;
        CHECK(inv.contains(t, 0.5));
        CHECK(inv.contains(0.5, t));
    }
}

TEST_CASE("segment image")
{
    SegmentRelation ex22({{0.0, 0.5, 1.0, 1.0}, {1.0, 0.0, 1.0, 1.0}});
    CHECK(ex22.image(IntervalSet::point(0.0)) == IntervalSet::point(0.5));
    CHECK(ex22.image(IntervalSet::point(1.0)).is_unit());
    auto img = ex22.image(IntervalSet::closed(0.0, 0.5));
    REQUIRE(img.size() == 1);
    CHECK(img.intervals()[0].lo == doctest::Approx(0.5));
    CHECK(img.intervals()[0].hi == doctest::Approx(0.75));
    // no tolerance slack: a point just left of the vertical segment stays put
    CHECK(ex22.image(IntervalSet::point(1.0 - 1e-10)).size() == 1);
}

TEST_CASE("finite orbit extension")
{
    FiniteRelation back(2, {{1, 0}});
    FiniteOrbit p{{1, 0}, false};
    for (auto policy : {OrbitPolicy::first, OrbitPolicy::random, OrbitPolicy::greedy}) {
        CHECK_THROWS_AS((void)extend_orbit(back, p, policy), DeadEnd);
    }
    auto orbit = simulate_orbit(back, 1, 5, OrbitPolicy::first);
    CHECK(orbit.points == std::vector<Vertex>{1, 0});
    CHECK(orbit.dead_end);

    // greedy prefers the successor visited least recently
    auto full = FiniteRelation::full(3);
    auto g = simulate_orbit(full, 0, 6, OrbitPolicy::greedy);
    CHECK(g.points == std::vector<Vertex>{0, 1, 2, 0, 1, 2, 0});
    auto b = simulate_backward_orbit(FiniteRelation::cycle(3), 0, 3, OrbitPolicy::first);
    CHECK(b.points == std::vector<Vertex>{0, 2, 1, 0});
}

TEST_CASE("segment orbit extension")
{
    auto g = cross();
    SegmentOrbit p{{0.3}, false};
    auto q = extend_orbit(g, p, OrbitPolicy::first);
    CHECK(q.points == std::vector<double>{0.3, 0.5});
    auto r = extend_orbit(g, q, OrbitPolicy::greedy);
    REQUIRE(r.points.size() == 3);
    CHECK((r.points[2] == 0.0 || r.points[2] == 1.0));

    SegmentRelation dot({{1.0, 0.0, 1.0, 0.0}});
    auto o = simulate_orbit(dot, 1.0, 10, OrbitPolicy::first);
    CHECK(o.points == std::vector<double>{1.0, 0.0});
    CHECK(o.dead_end);
    CHECK_THROWS_AS((void)simulate_orbit(g, 1.5, 3, OrbitPolicy::first), OutOfRange);
    auto back = simulate_backward_orbit(g, 0.3, 1, OrbitPolicy::first);
    CHECK(back.points[1] == 0.5);
}

TEST_CASE("orbit policies stay inside the relation")
{
    auto g = cross();
    for (auto policy : {OrbitPolicy::first, OrbitPolicy::random, OrbitPolicy::greedy}) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            auto o = simulate_orbit(g, 0.3, 300, policy, seed);
            for (std::size_t i = 0; i + 1 < o.points.size(); ++i) {
                REQUIRE(g.contains(o.points[i], o.points[i + 1]));
            }
            auto b = simulate_backward_orbit(g, 0.7, 300, policy, seed);
            for (std::size_t i = 0; i + 1 < b.points.size(); ++i) {
                REQUIRE(g.contains(b.points[i + 1], b.points[i]));
            }
        }
    }
    auto r1 = simulate_orbit(g, 0.3, 100, OrbitPolicy::random, 42);
    auto r2 = simulate_orbit(g, 0.3, 100, OrbitPolicy::random, 42);
    CHECK(r1.points == r2.points);
}

TEST_CASE("policy names")
{
    CHECK(parse_policy("greedy") == OrbitPolicy::greedy);
    CHECK(to_string(OrbitPolicy::random) == "random");
    CHECK_THROWS_AS((void)parse_policy("best"), ParseError);
}
