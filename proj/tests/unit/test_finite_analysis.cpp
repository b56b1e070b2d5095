#include "crdyn/error.hpp"
#include "crdyn/finite_analysis.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace crdyn;
using K = MinimalityKind;

namespace {

// Independent model of the orbit notions: enumerate lasso walks
// w_0 ... w_L with a back edge w_L -> w_i. On n <= 3 points every orbit set
// and every limit set of an infinite walk is realized by a lasso with L <= 8.
struct LassoFacts {
    std::vector<std::set<std::set<int>>> orbit_sets;  // per start
    std::vector<std::set<std::set<int>>> limit_sets;  // per start
};

LassoFacts lassos(const FiniteRelation& g)
{
    const int n = g.size();
    LassoFacts f;
    f.orbit_sets.resize(n);
    f.limit_sets.resize(n);
    std::vector<int> walk;
    auto rec = [&](auto&& self) -> void {
        const int last = walk.back();
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (g.contains(last, walk[i])) {
                f.orbit_sets[walk[0]].insert(std::set<int>(walk.begin(), walk.end()));
                f.limit_sets[walk[0]].insert(std::set<int>(walk.begin() + static_cast<long>(i), walk.end()));
            }
        }
        if (walk.size() >= 9) {
            return;
        }
        for (int y : g.successors(last)) {
            walk.push_back(y);
            self(self);
            walk.pop_back();
        }
    };
    for (int x = 0; x < n; ++x) {
        walk.assign(1, x);
        rec(rec);
    }
    return f;
}

bool lasso_flag(const std::vector<std::set<std::set<int>>>& sets, int n, int variant)
{
    for (int x = 0; x < n; ++x) {
        const auto& s = sets[x];
        std::set<int> uni;
        bool some_full = false;
        bool all_full = !s.empty();
        for (const auto& m : s) {
            uni.insert(m.begin(), m.end());
            some_full = some_full || static_cast<int>(m.size()) == n;
            all_full = all_full && static_cast<int>(m.size()) == n;
        }
        const bool ok = variant == 1 ? all_full : variant == 2 ? some_full : static_cast<int>(uni.size()) == n;
        if (!ok) {
            return false;
        }
    }
    return true;
}

// flags of the twelve orbit kinds from the lasso model
FlagVector lasso_flags(const FiniteRelation& g)
{
    FlagVector flags{};
    const auto fwd = lassos(g);
    const auto bwd = lassos(g.inverse());
    const int n = g.size();
    flags[index_of(K::one_plus)] = lasso_flag(fwd.orbit_sets, n, 1);
    flags[index_of(K::two_plus)] = lasso_flag(fwd.orbit_sets, n, 2);
    flags[index_of(K::three_plus)] = lasso_flag(fwd.orbit_sets, n, 3);
    flags[index_of(K::one_omega)] = lasso_flag(fwd.limit_sets, n, 1);
    flags[index_of(K::two_omega)] = lasso_flag(fwd.limit_sets, n, 2);
    flags[index_of(K::three_omega)] = lasso_flag(fwd.limit_sets, n, 3);
    flags[index_of(K::one_minus)] = lasso_flag(bwd.orbit_sets, n, 1);
    flags[index_of(K::two_minus)] = lasso_flag(bwd.orbit_sets, n, 2);
    flags[index_of(K::three_minus)] = lasso_flag(bwd.orbit_sets, n, 3);
    flags[index_of(K::one_alpha)] = lasso_flag(bwd.limit_sets, n, 1);
    flags[index_of(K::two_alpha)] = lasso_flag(bwd.limit_sets, n, 2);
    flags[index_of(K::three_alpha)] = lasso_flag(bwd.limit_sets, n, 3);
    return flags;
}

// every subset as a vector, for the literal invariance definitions
std::vector<std::vector<int>> all_subsets(int n)
{
    std::vector<std::vector<int>> out;
    for (int m = 0; m < (1 << n); ++m) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v) {
            if (m & (1 << v)) {
                s.push_back(v);
            }
        }
        out.push_back(s);
    }
    return out;
}

bool walk_ok(const FiniteRelation& h, const Witness& w)
{
    std::vector<int> walk = w.path;
    walk.insert(walk.end(), w.cycle.begin(), w.cycle.end());
    walk.push_back(w.cycle.front());
    if (walk.front() != w.start) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        if (!h.contains(walk[i], walk[i + 1])) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("invariance examples")
{
    auto s3 = testsupport::star3();
    CHECK(is_invariant(s3, std::vector<Vertex>{1}, InvarianceKind::forward_1));
    CHECK_FALSE(is_invariant(s3, std::vector<Vertex>{1}, InvarianceKind::forward_inf));
    for (auto k : kAllInvarianceKinds) {
        CHECK(is_invariant(s3, std::vector<Vertex>{}, k));
        CHECK(is_invariant(s3, std::vector<Vertex>{0, 1, 2}, k));
    }
    CHECK_THROWS_AS((void)is_invariant(s3, std::vector<Vertex>{3}, InvarianceKind::forward_1), OutOfRange);
}

TEST_CASE("mask and vector invariance agree; infinity-invariance implies 1-invariance")
{
    for (const auto& g : testsupport::all_small_relations(3)) {
        for (const auto& a : all_subsets(g.size())) {
            for (auto k : kAllInvarianceKinds) {
                REQUIRE(is_invariant(g, a, k) == is_invariant(g, to_mask(g, a), k));
            }
            if (is_invariant(g, a, InvarianceKind::forward_inf)) {
                REQUIRE(is_invariant(g, a, InvarianceKind::forward_1));
            }
            if (is_invariant(g, a, InvarianceKind::backward_inf)) {
                REQUIRE(is_invariant(g, a, InvarianceKind::backward_1));
            }
        }
    }
}

TEST_CASE("oracle examples")
{
    auto c3 = FiniteRelation::cycle(3);
    CHECK(decide_minimal_oracle(c3, K::one));
    CHECK(decide_minimal_fast(c3, K::one_plus));

    auto full2 = FiniteRelation::full(2);
    CHECK_FALSE(decide_minimal_oracle(full2, K::one));
    CHECK(decide_minimal_oracle(full2, K::inf));
    CHECK(find_witness(full2, K::one)->subset == std::vector<Vertex>{0});

    auto id2 = FiniteRelation::identity(2);
    CHECK_FALSE(decide_minimal_oracle(id2, K::inf));
    CHECK(find_witness(id2, K::inf)->subset == std::vector<Vertex>{0});

    auto s3 = testsupport::star3();
    CHECK(decide_minimal_oracle(s3, K::inf));
    CHECK_FALSE(decide_minimal_oracle(s3, K::one));
    CHECK(find_witness(s3, K::one)->subset == std::vector<Vertex>{1});
    CHECK(decide_minimal_fast(s3, K::two_plus));
    CHECK_FALSE(decide_minimal_fast(s3, K::one_plus));
    auto w = find_witness(s3, K::one_plus);
    REQUIRE(w);
    CHECK(w->type == Witness::Type::avoiding);
    CHECK(w->cycle == std::vector<Vertex>{1});
    CHECK(w->avoids == 0);

    FiniteRelation g(2, {{0, 1}, {1, 0}, {1, 1}});
    CHECK_FALSE(decide_minimal_oracle(g, K::one));
    CHECK(decide_minimal_oracle(g, K::inf));
    CHECK(find_witness(g, K::one)->subset == std::vector<Vertex>{1});
}

TEST_CASE("oracle caps")
{
    CHECK_THROWS_AS((void)decide_minimal_oracle(FiniteRelation::cycle(13), K::one), CapExceeded);
    CHECK_THROWS_AS((void)decide_minimal_oracle(FiniteRelation::cycle(9), K::two_plus), CapExceeded);
    CHECK(decide_minimal_oracle(FiniteRelation::cycle(12), K::one));
    CHECK(decide_minimal_fast(FiniteRelation::cycle(20), K::one));
}

TEST_CASE("orbit oracle agrees with the lasso model on every relation with n <= 3")
{
    for (const auto& g : testsupport::all_small_relations(3)) {
        const auto oracle = decide_all_oracle(g);
        const auto model = lasso_flags(g);
        for (auto k : kAllKinds) {
            if (!is_subset_kind(k)) {
                INFO("kind " << to_string(k) << " n=" << g.size() << " edges=" << g.edges().size());
                REQUIRE(oracle[index_of(k)] == model[index_of(k)]);
            }
        }
    }
}

TEST_CASE("fast deciders agree with the oracle on every relation with n <= 3")
{
    int count = 0;
    for (const auto& g : testsupport::all_small_relations(3)) {
        ++count;
        const auto oracle = decide_all_oracle(g);
        const auto fast = decide_all_fast(g);
        for (auto k : kAllKinds) {
            REQUIRE(oracle[index_of(k)] == decide_minimal_oracle(g, k));
            REQUIRE(fast[index_of(k)] == decide_minimal_fast(g, k));
            REQUIRE(fast[index_of(k)] == oracle[index_of(k)]);
        }
    }
    CHECK(count == 527);
}

TEST_CASE("witnesses refute the flags they accompany")
{
    for (const auto& g : testsupport::all_small_relations(3)) {
        const auto report = classify(g);
        const Mask full = (1u << g.size()) - 1;
        for (auto k : kAllKinds) {
            const auto& w = report.witnesses[index_of(k)];
            if (report.flag(k)) {
                REQUIRE_FALSE(w);
                continue;
            }
            REQUIRE(w);
            const FiniteRelation h = is_backward_kind(k) ? g.inverse() : g;
            if (is_subset_kind(k)) {
                REQUIRE(w->type == Witness::Type::subset);
                const Mask m = to_mask(g, w->subset);
                REQUIRE(m != 0);
                REQUIRE(m != full);
                REQUIRE(is_invariant(g, m, invariance_of(k)));
                continue;
            }
            if (w->type == Witness::Type::dead_end) {
                // no infinite walk from start
                REQUIRE(lassos(h).orbit_sets[w->start].empty());
                continue;
            }
            REQUIRE(w->type == Witness::Type::avoiding);
            REQUIRE(walk_ok(h, *w));
            const auto f = forward_counterpart(k);
            if (f == K::one_plus) {
                REQUIRE(std::find(w->path.begin(), w->path.end(), w->avoids) == w->path.end());
            }
            REQUIRE(std::find(w->cycle.begin(), w->cycle.end(), w->avoids) == w->cycle.end());
            if (f != K::one_plus && f != K::one_omega) {
                // avoids is unreachable from start
                const auto facts = lassos(h);
                for (const auto& m : facts.orbit_sets[w->start]) {
                    REQUIRE(m.count(w->avoids) == 0);
                }
            }
        }
    }
}

TEST_CASE("witnesses are the least subsets in bitmask order")
{
    for (const auto& g : testsupport::all_relations(2)) {
        for (auto k : {K::one, K::inf, K::one_back, K::inf_back}) {
            auto w = find_witness(g, k);
            if (!w) {
                continue;
            }
            const Mask m = to_mask(g, w->subset);
            for (Mask smaller = 1; smaller < m; ++smaller) {
                REQUIRE_FALSE(is_invariant(g, smaller, invariance_of(k)));
            }
        }
    }
}

TEST_CASE("constructive subset witnesses above the oracle cap")
{
    std::vector<Edge> e;
    for (int i = 0; i < 14; ++i) {
        e.emplace_back(i, (i + 1) % 14);
    }
    e.emplace_back(3, 3);
    FiniteRelation g(14, e);
    CHECK(decide_minimal_fast(g, K::inf));
    auto w = find_witness(g, K::one);
    REQUIRE(w);
    CHECK(is_invariant(g, w->subset, InvarianceKind::forward_1));
    CHECK(w->subset.size() < 14);

    FiniteRelation id(14, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}, {8, 8}, {9, 9}, {10, 10},
                           {11, 11}, {12, 12}, {13, 13}});
    auto wi = find_witness(id, K::inf);
    REQUIRE(wi);
    CHECK(wi->subset == std::vector<Vertex>{0});
}

TEST_CASE("classification reports")
{
    auto c3 = classify(FiniteRelation::cycle(3));
    for (auto k : kAllKinds) {
        CHECK(c3.flag(k));
    }
    CHECK(c3.p1_full);
    CHECK(c3.p2_full);

    auto id2 = classify(FiniteRelation::identity(2));
    for (auto k : kAllKinds) {
        CHECK_FALSE(id2.flag(k));
    }
    CHECK(id2.witnesses[index_of(K::one)]->subset == std::vector<Vertex>{0});

    auto s3 = classify(testsupport::star3());
    for (auto k : {K::inf, K::inf_back, K::two_plus, K::three_plus, K::two_minus, K::three_minus, K::two_omega,
                   K::three_omega, K::two_alpha, K::three_alpha}) {
        CHECK(s3.flag(k));
    }
    for (auto k : {K::one, K::one_plus, K::one_omega, K::one_back, K::one_minus, K::one_alpha}) {
        CHECK_FALSE(s3.flag(k));
    }

    auto point = classify(FiniteRelation(1, {{0, 0}}));
    for (auto k : kAllKinds) {
        CHECK(point.flag(k));
    }
}

TEST_CASE("omega and alpha sets")
{
    FiniteRelation g(3, {{0, 1}, {1, 2}, {2, 1}});
    CHECK(omega_set(g, {0}, {1, 2}) == std::vector<Vertex>{1, 2});
    FiniteRelation loop(1, {{0, 0}});
    CHECK(omega_set(loop, {}, {0}) == std::vector<Vertex>{0});
    auto s3 = testsupport::star3();
    CHECK(omega_set(s3, {}, {1}) == std::vector<Vertex>{1});
    CHECK_THROWS_AS((void)omega_set(g, {}, {0}), ConstraintError);
    CHECK_THROWS_AS((void)omega_set(g, {}, {}), ConstraintError);

    // a backward walk 1 <- 2 <- 1 ... is a walk of the inverse
    CHECK(alpha_set(g, {}, {1, 2}) == std::vector<Vertex>{1, 2});
    CHECK(alpha_set(s3, {0}, {1}) == std::vector<Vertex>{1});
    CHECK_THROWS_AS((void)alpha_set(g, {}, {0, 1}), ConstraintError);
}

TEST_CASE("vertex shift minimality")
{
    CHECK(is_shift_minimal(FiniteRelation::cycle(3)));
    CHECK_FALSE(is_shift_minimal(FiniteRelation::full(2)));
    CHECK_FALSE(is_shift_minimal(testsupport::star3()));
    CHECK_THROWS_AS((void)is_shift_minimal(FiniteRelation(2, {{0, 0}})), HypothesisViolated);

    // shift minimality forces 1-minimality
    int tested = 0;
    for (const auto& g : testsupport::all_small_relations(3)) {
        if (!g.domain_is_full() || !g.range_is_full()) {
            CHECK_THROWS_AS((void)is_shift_minimal(g), HypothesisViolated);
            continue;
        }
        ++tested;
        if (is_shift_minimal(g)) {
            REQUIRE(decide_minimal_oracle(g, K::one));
        }
    }
    CHECK(tested > 0);
}
