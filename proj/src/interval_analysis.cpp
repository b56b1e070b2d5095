#include "crdyn/interval_analysis.hpp"

#include "crdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace crdyn {

DensityDiagnostic density(std::span<const double> points)
{
    if (points.empty()) {
        throw ConstraintError("density of an empty sample");
    }
    std::vector<double> sorted(points.begin(), points.end());
    for (double x : sorted) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw ConstraintError("sample point outside [0,1]");
        }
    }
    std::sort(sorted.begin(), sorted.end());
    double gap = sorted.front();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        gap = std::max(gap, sorted[i] - sorted[i - 1]);
    }
    gap = std::max(gap, 1.0 - sorted.back());
    return {points.size(), gap};
}

std::string_view to_string(ClosureMode m)
{
    return m == ClosureMode::inner ? "inner" : "outer";
}

ClosureMode parse_mode(std::string_view name)
{
    if (name == "inner") {
        return ClosureMode::inner;
    }
    if (name == "outer") {
        return ClosureMode::outer;
    }
    throw ParseError("unknown closure mode '" + std::string(name) + "'");
}

namespace {

bool same_within(const IntervalSet& a, const IntervalSet& b, double tol)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.intervals()[i].lo - b.intervals()[i].lo) > tol ||
            std::abs(a.intervals()[i].hi - b.intervals()[i].hi) > tol) {
            return false;
        }
    }
    return true;
}

} // namespace

ClosureResult invariant_closure(const SegmentRelation& r, const IntervalSet& s0, ClosureMode mode, double epsilon,
                                int max_iter)
{
    if (s0.empty()) {
        throw ConstraintError("closure needs a nonempty start set");
    }
    if (!(epsilon >= 0.0)) {
        throw ConstraintError("epsilon must be nonnegative");
    }
    if (mode == ClosureMode::inner && epsilon != 0.0) {
        throw ConstraintError("inner closure never fattens; epsilon must be 0");
    }
    ClosureResult res;
    res.mode = mode;
    res.epsilon = epsilon;
    res.set = s0;
    while (res.iterations < max_iter) {
        const IntervalSet source = epsilon > 0.0 ? res.set.fatten(epsilon) : res.set;
        IntervalSet next = res.set.unite(r.image(source));
        ++res.iterations;
        const bool stable = same_within(next, res.set, kClosureStability);
        res.set = std::move(next);
        if (stable) {
            res.converged = true;
            break;
        }
    }
    return res;
}

std::vector<double> omega_estimate(const SegmentOrbit& orbit, double burn_in)
{
    if (!(burn_in >= 0.0 && burn_in < 1.0)) {
        throw ConstraintError("burn_in must lie in [0,1)");
    }
    const auto n = orbit.points.size();
    const auto skip = static_cast<std::size_t>(std::floor(burn_in * static_cast<double>(n)));
    if (skip >= n) {
        throw ConstraintError("orbit tail is empty after burn-in");
    }
    return {orbit.points.begin() + static_cast<long>(skip), orbit.points.end()};
}

std::vector<double> alpha_estimate(const SegmentOrbit& backward_orbit, double burn_in)
{
    return omega_estimate(backward_orbit, burn_in);
}

std::vector<double> limit_set_sample(const SegmentRelation& r, double x0, int steps, double burn_in,
                                     std::span<const std::uint64_t> seeds, bool backward)
{
    std::vector<double> out;
    auto add = [&](const SegmentOrbit& o) {
        auto tail = omega_estimate(o, burn_in);
        out.insert(out.end(), tail.begin(), tail.end());
    };
    const SegmentRelation h = backward ? r.inverse() : r;
    add(simulate_orbit(h, x0, steps, OrbitPolicy::first));
    add(simulate_orbit(h, x0, steps, OrbitPolicy::greedy));
    for (auto s : seeds) {
        add(simulate_orbit(h, x0, steps, OrbitPolicy::random, s));
    }
    return out;
}

namespace {

bool backward_kind(InvarianceKind k)
{
    return k == InvarianceKind::backward_1 || k == InvarianceKind::backward_inf;
}

InvarianceCheck check_forward_inf(const SegmentRelation& h, const IntervalSet& a)
{
    const IntervalSet host = a.fatten(h.tolerance());
    const IntervalSet img = h.image(a, h.tolerance());
    for (const auto& iv : img.intervals()) {
        auto y = host.first_uncovered(iv.lo, iv.hi);
        if (!y) {
            continue;
        }
        // a preimage of y inside A
        const IntervalSet preds = h.predecessors(*y).intersect(host);
        const double x = preds.empty() ? a.min() : preds.min();
        return {false, Violation{x, *y}};
    }
    return {};
}

InvarianceCheck check_forward_1(const SegmentRelation& h, const IntervalSet& a, double pitch)
{
    const IntervalSet host = a.fatten(h.tolerance());
    const IntervalSet sample_set = a.intersect(h.domain());
    auto test = [&](double x) -> std::optional<Violation> {
        const IntervalSet succ = h.successors(x);
        if (succ.empty() || succ.intersects(host)) {
            return std::nullopt;
        }
        return Violation{x, succ.min()};
    };
    for (const auto& iv : sample_set.intervals()) {
        const auto steps = static_cast<long>(std::floor(iv.length() / pitch));
        for (long k = 0; k <= steps; ++k) {
            if (auto v = test(iv.lo + static_cast<double>(k) * pitch)) {
                return {false, v};
            }
        }
        if (!iv.is_point()) {
            if (auto v = test(iv.hi)) {
                return {false, v};
            }
        }
    }
    return {};
}

} // namespace

InvarianceCheck check_invariant_candidate(const SegmentRelation& r, const IntervalSet& a, InvarianceKind kind,
                                          double pitch)
{
    if (a.empty()) {
        throw ConstraintError("candidate set must be nonempty");
    }
    if (!(pitch > 0.0)) {
        throw ConstraintError("grid pitch must be positive");
    }
    const SegmentRelation h = backward_kind(kind) ? r.inverse() : r;
    if (kind == InvarianceKind::forward_inf || kind == InvarianceKind::backward_inf) {
        return check_forward_inf(h, a);
    }
    return check_forward_1(h, a, pitch);
}

// ---------------------------------------------------------------- witnesses

namespace {

constexpr std::size_t kEndpointSeedCap = 64;

std::vector<double> seed_points(const SegmentRelation& r, int grid)
{
    std::set<double> seeds;
    for (int k = 0; k <= grid; ++k) {
        seeds.insert(static_cast<double>(k) / grid);
    }
    if (r.segments().size() <= kEndpointSeedCap) {
        for (const auto& s : r.segments()) {
            seeds.insert({s.x1, s.y1, s.x2, s.y2});
        }
    }
    return {seeds.begin(), seeds.end()};
}

} // namespace

std::optional<IntervalSet> find_segment_witness(const SegmentRelation& r, MinimalityKind kind, double proper_gap)
{
    const InvarianceKind inv = invariance_of(kind);
    auto accept = [&](const IntervalSet& a) {
        return !a.empty() && a.max_gap() >= proper_gap && check_invariant_candidate(r, a, inv).holds;
    };

    const auto closure_seeds = seed_points(r, 8);
    const SegmentRelation inverse = r.inverse();
    for (const SegmentRelation* h : {&r, &inverse}) {
        for (double s : closure_seeds) {
            auto c = invariant_closure(*h, IntervalSet::point(s), ClosureMode::inner, 0.0, 200);
            if (accept(c.set)) {
                return c.set;
            }
        }
    }
    for (double s : seed_points(r, 64)) {
        auto a = IntervalSet::point(s);
        if (accept(a)) {
            return a;
        }
    }
    constexpr int kCoarse = 8;
    for (int i = 0; i <= kCoarse; ++i) {
        for (int j = i; j <= kCoarse; ++j) {
            const double lo = static_cast<double>(i) / kCoarse;
            const double hi = static_cast<double>(j) / kCoarse;
            auto a = IntervalSet::closed(lo, hi);
            if (accept(a)) {
                return a;
            }
            if (i > 0 && j < kCoarse) {
                auto outside = IntervalSet({{0.0, lo}, {hi, 1.0}});
                if (accept(outside)) {
                    return outside;
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- diagnostic

std::string_view to_string(Evidence e)
{
    switch (e) {
    case Evidence::refuted_by_witness: return "refuted-by-witness";
    case Evidence::refuted: return "refuted";
    case Evidence::plausible: return "plausible";
    case Evidence::not_observed: return "not-observed";
    }
    return "?";
}

namespace {

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

struct DirectionFacts {
    std::optional<double> no_orbit_at;       // a point outside p1
    std::optional<double> periodic_at;       // start of a non-dense periodic first-policy orbit
    std::optional<double> thin_hull_at;      // start whose converged reachable hull is not dense
    bool all_orbits_dense = true;
    bool all_tails_dense = true;
    bool greedy_orbits_dense = true;
    bool greedy_tails_dense = true;
    bool hulls_dense = true;
    bool tail_unions_dense = true;
    bool outer_floods = true;
};

DirectionFacts gather(const SegmentRelation& h, const SegmentDiagnosticConfig& cfg)
{
    DirectionFacts f;
    f.no_orbit_at = h.domain().first_uncovered(0.0, 1.0);
    const double eps = cfg.epsilon;
    const int starts = std::max(cfg.starts, 2);
    for (int k = 0; k < starts; ++k) {
        const double x = static_cast<double>(k) / (starts - 1);
        std::vector<double> tails;
        std::vector<double> orbit_points;
        auto record = [&](const SegmentOrbit& o, bool greedy) {
            const bool dense = density(o.points).dense_at(eps);
            const auto tail = omega_estimate(o, cfg.burn_in);
            const bool tail_dense = density(tail).dense_at(eps);
            f.all_orbits_dense = f.all_orbits_dense && dense;
            f.all_tails_dense = f.all_tails_dense && tail_dense;
            if (greedy) {
                f.greedy_orbits_dense = f.greedy_orbits_dense && dense;
                f.greedy_tails_dense = f.greedy_tails_dense && tail_dense;
            }
            tails.insert(tails.end(), tail.begin(), tail.end());
            orbit_points.insert(orbit_points.end(), o.points.begin(), o.points.end());
        };

        const auto first = simulate_orbit(h, x, cfg.steps, OrbitPolicy::first);
        record(first, false);
        if (!first.dead_end && !f.periodic_at) {
            std::set<double> seen(first.points.begin(), first.points.end() - 1);
            if (seen.count(first.points.back()) && !density(first.points).dense_at(eps)) {
                f.periodic_at = x;
            }
        }
        record(simulate_orbit(h, x, cfg.steps, OrbitPolicy::greedy), true);
        for (std::uint64_t s = 0; s < 2; ++s) {
            record(simulate_orbit(h, x, cfg.steps, OrbitPolicy::random, cfg.seed + s), false);
        }
        f.tail_unions_dense = f.tail_unions_dense && density(tails).dense_at(eps);

        const auto hull = invariant_closure(h, IntervalSet::point(x), ClosureMode::inner, 0.0, cfg.closure_iter);
        const bool hull_dense = hull.set.max_gap() < eps || density(orbit_points).dense_at(eps);
        f.hulls_dense = f.hulls_dense && hull_dense;
        if (hull.converged && hull.set.max_gap() >= eps && !f.thin_hull_at) {
            f.thin_hull_at = x;
        }

        const auto outer = invariant_closure(h, IntervalSet::point(x), ClosureMode::outer, eps / 10.0,
                                             cfg.closure_iter);
        f.outer_floods = f.outer_floods && outer.set.max_gap() < eps;
    }
    return f;
}

SegmentDiagnosis orbit_diagnosis(const DirectionFacts& f, MinimalityKind forward_kind)
{
    using enum MinimalityKind;
    SegmentDiagnosis d;
    if (f.no_orbit_at) {
        d.evidence = Evidence::refuted;
        d.detail = "no orbit from x=" + fmt(*f.no_orbit_at) + " (outside the projection)";
        return d;
    }
    if (f.thin_hull_at) {
        d.evidence = Evidence::refuted;
        d.detail = "reachable hull from x=" + fmt(*f.thin_hull_at) + " is not dense";
        return d;
    }
    const bool one_type = forward_kind == one_plus || forward_kind == one_omega;
    if (one_type && f.periodic_at) {
        d.evidence = Evidence::refuted;
        d.detail = "periodic orbit from x=" + fmt(*f.periodic_at) + " is not dense";
        return d;
    }
    bool dense = false;
    switch (forward_kind) {
    case one_plus: dense = f.all_orbits_dense; break;
    case two_plus: dense = f.greedy_orbits_dense; break;
    case three_plus: dense = f.hulls_dense; break;
    case one_omega: dense = f.all_tails_dense; break;
    case two_omega: dense = f.greedy_tails_dense; break;
    case three_omega: dense = f.tail_unions_dense; break;
    default: break;
    }
    d.evidence = dense ? Evidence::plausible : Evidence::not_observed;
    d.detail = dense ? "all sampled orbits dense at epsilon" : "some sampled orbit not dense at epsilon";
    return d;
}

} // namespace

SegmentReport classify_segments(const SegmentRelation& r, const SegmentDiagnosticConfig& config)
{
    SegmentReport rep;
    rep.config = config;
    rep.p1_full = r.domain().is_unit();
    rep.p2_full = r.range().is_unit();
    const DirectionFacts fwd = gather(r, config);
    const DirectionFacts bwd = gather(r.inverse(), config);

    for (auto k : kAllKinds) {
        const DirectionFacts& f = is_backward_kind(k) ? bwd : fwd;
        auto& d = rep.kinds[index_of(k)];
        if (!is_subset_kind(k)) {
            d = orbit_diagnosis(f, forward_counterpart(k));
            continue;
        }
        if (auto w = find_segment_witness(r, k, config.epsilon)) {
            d.evidence = Evidence::refuted_by_witness;
            d.detail = "proper invariant set found";
            d.witness = std::move(w);
        } else if (f.outer_floods) {
            d.evidence = Evidence::plausible;
            d.detail = "no witness in the candidate library; outer closures flood";
        } else {
            d.evidence = Evidence::not_observed;
            d.detail = "no witness in the candidate library; some outer closure stays thin";
        }
    }
    return rep;
}

} // namespace crdyn
