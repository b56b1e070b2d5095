#include "crdyn/corpus.hpp"
#include "crdyn/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace crdyn;

TEST_CASE("example names and aliases")
{
    const auto names = example_names();
    CHECK(names.size() == 9);
    CHECK(names.front() == "ex1");
    for (const auto& n : names) {
        CHECK(build_example(n).name == n);
    }
    CHECK(build_example("goranH").name == "ex1");
    CHECK(build_example("omegaPLUS").name == "ex1");
    CHECK(build_example("bluy").name == "ex22");
    CHECK_THROWS_AS(build_example("nope"), ConstraintError);
}

TEST_CASE("continuum examples are segment relations, the rest finite")
{
    for (const char* n : {"ex1", "ex22", "ex22-inverse", "tistile", "rene2"}) {
        CHECK(std::holds_alternative<SegmentRelation>(build_example(n).relation));
    }
    for (const char* n : {"star3", "cycle3", "identity2", "single-edge"}) {
        CHECK(std::holds_alternative<FiniteRelation>(build_example(n).relation));
    }
    const auto inv = std::get<SegmentRelation>(build_example("ex22-inverse").relation);
    CHECK(inv == halving_relation().inverse());
}

TEST_CASE("dyadic tree segment count")
{
    for (int d : {1, 3, 6}) {
        const auto r = dyadic_tree_relation(d);
        CHECK(r.segments().size() == 2 + ((std::size_t{1} << (d + 1)) - 2));
        const auto pairs = std::count_if(r.segments().begin(), r.segments().end(),
                                         [](const Segment& s) { return s.is_point(); });
        CHECK(pairs == (1 << (d + 1)) - 2);
    }
    CHECK(std::get<SegmentRelation>(build_example("rene2", {default_lambda(), 3}).relation).segments().size() == 16);
    CHECK_THROWS_AS(dyadic_tree_relation(0), ConstraintError);
    CHECK_THROWS_AS(dyadic_tree_relation(25), ConstraintError);
}

TEST_CASE("dyadic point pairs straddle each odd dyadic")
{
    const auto r = dyadic_tree_relation(4);
    for (int n = 1; n <= 4; ++n) {
        const double half = std::ldexp(1.0, -(n + 1));
        for (int k = 1; k < (1 << n); k += 2) {
            const double d = std::ldexp(static_cast<double>(k), -n);
            CHECK(r.contains(d, d - half));
            CHECK(r.contains(d, d + half));
        }
    }
}

TEST_CASE("rotation parameter is honoured")
{
    const auto ex = build_example("tistile", {0.25, 10});
    const auto& r = std::get<SegmentRelation>(ex.relation);
    CHECK(r.contains(0.0, 0.25));
    CHECK(r.contains(0.75, 0.0));
    CHECK(default_lambda() == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0));
    CHECK_THROWS_AS(build_example("tistile", {1.5, 10}), ConstraintError);
}

TEST_CASE("every expected fact of every example verifies")
{
    for (const auto& n : example_names()) {
        const auto ex = build_example(n);
        const auto results = verify_example(ex);
        CHECK(results.size() == ex.expected.size());
        CHECK_FALSE(results.empty());
        for (const auto& f : results) {
            INFO(n << ": " << f.statement << " | " << f.detail);
            CHECK(f.passed);
            CHECK_FALSE(f.source.empty());
        }
    }
}
