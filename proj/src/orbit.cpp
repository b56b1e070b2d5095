#include "crdyn/orbit.hpp"

#include "crdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace crdyn {

std::string_view to_string(OrbitPolicy p)
{
    switch (p) {
    case OrbitPolicy::first: return "first";
    case OrbitPolicy::random: return "random";
    case OrbitPolicy::greedy: return "greedy";
    }
    return "?";
}

OrbitPolicy parse_policy(std::string_view name)
{
    if (name == "first") {
        return OrbitPolicy::first;
    }
    if (name == "random") {
        return OrbitPolicy::random;
    }
    if (name == "greedy" || name == "greedy-coverage") {
        return OrbitPolicy::greedy;
    }
    throw ParseError("unknown orbit policy '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- finite

FiniteWalker::FiniteWalker(const FiniteRelation& g, OrbitPolicy policy, std::uint64_t seed)
    : g_(g), policy_(policy), rng_(seed), last_visit_(static_cast<std::size_t>(g.size()), -1)
{
}

void FiniteWalker::visit(Vertex x)
{
    if (x < 0 || x >= g_.size()) {
        throw OutOfRange("point " + std::to_string(x) + " outside [0, " + std::to_string(g_.size()) + ")");
    }
    last_visit_[static_cast<std::size_t>(x)] = clock_++;
    current_ = x;
}

std::optional<Vertex> FiniteWalker::step()
{
    const auto& succ = g_.successors(current_);
    if (succ.empty()) {
        return std::nullopt;
    }
    Vertex next = succ.front();
    switch (policy_) {
    case OrbitPolicy::first:
        break;
    case OrbitPolicy::random: {
        std::uniform_int_distribution<std::size_t> pick(0, succ.size() - 1);
        next = succ[pick(rng_)];
        break;
    }
    case OrbitPolicy::greedy:
        // never-visited vertices carry -1 and win; succ is sorted so ties keep the smallest
        for (Vertex v : succ) {
            if (last_visit_[static_cast<std::size_t>(v)] < last_visit_[static_cast<std::size_t>(next)]) {
                next = v;
            }
        }
        break;
    }
    visit(next);
    return next;
}

// ---------------------------------------------------------------- segments

SegmentWalker::SegmentWalker(const SegmentRelation& r, OrbitPolicy policy, std::uint64_t seed)
    : r_(r), policy_(policy), rng_(seed)
{
}

void SegmentWalker::visit(double x)
{
    check_unit(x);
    last_visit_[x] = clock_++;
    current_ = x;
}

double SegmentWalker::pick_greedy(const IntervalSet& succ) const
{
    auto nearest = [&](double c) {
        double d = std::numeric_limits<double>::infinity();
        auto it = last_visit_.lower_bound(c);
        if (it != last_visit_.end()) {
            d = it->first - c;
        }
        if (it != last_visit_.begin()) {
            d = std::min(d, c - std::prev(it)->first);
        }
        return d;
    };
    auto recency = [&](double c) {
        auto it = last_visit_.find(c);
        return it == last_visit_.end() ? -1L : it->second;
    };

    double best = succ.min();
    double best_score = -1.0;
    long best_recency = 0;
    auto consider = [&](double c) {
        const double score = nearest(c);
        const long rec = recency(c);
        if (score > best_score || (score == best_score && rec < best_recency) ||
            (score == best_score && rec == best_recency && c < best)) {
            best = c;
            best_score = score;
            best_recency = rec;
        }
    };

    for (const auto& iv : succ.intervals()) {
        consider(iv.lo);
        if (iv.is_point()) {
            continue;
        }
        consider(iv.hi);
        // interior maxima of the distance function are midpoints between
        // consecutive visited points; include the neighbours just outside iv
        auto it = last_visit_.lower_bound(iv.lo);
        if (it != last_visit_.begin()) {
            --it;
        }
        for (auto next = it; it != last_visit_.end() && it->first <= iv.hi; it = next) {
            next = std::next(it);
            if (next == last_visit_.end()) {
                break;
            }
            const double mid = 0.5 * (it->first + next->first);
            if (mid > iv.lo && mid < iv.hi) {
                consider(mid);
            }
        }
    }
    return best;
}

std::optional<double> SegmentWalker::step()
{
    if (policy_ == OrbitPolicy::random) {
        const auto pieces = r_.fiber_pieces(current_);
        if (pieces.empty()) {
            return std::nullopt;
        }
        std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
        const auto& iv = pieces[pick(rng_)];
        double next = iv.lo;
        if (!iv.is_point()) {
            std::uniform_real_distribution<double> u(iv.lo, iv.hi);
            next = std::clamp(u(rng_), iv.lo, iv.hi);
        }
        visit(next);
        return next;
    }
    const auto succ = r_.successors(current_);
    if (succ.empty()) {
        return std::nullopt;
    }
    const double next = policy_ == OrbitPolicy::first ? succ.min() : pick_greedy(succ);
    visit(next);
    return next;
}

// ---------------------------------------------------------------- drivers

namespace {

template <class Walker, class Relation, class Point>
OrbitPrefix<Point> run(const Relation& r, Point x0, int steps, OrbitPolicy policy, std::uint64_t seed)
{
    if (steps < 0) {
        throw ConstraintError("steps must be nonnegative");
    }
    Walker w(r, policy, seed);
    w.visit(x0);
    OrbitPrefix<Point> out;
    out.points.reserve(static_cast<std::size_t>(steps) + 1);
    out.points.push_back(x0);
    for (int i = 0; i < steps; ++i) {
        auto next = w.step();
        if (!next) {
            out.dead_end = true;
            break;
        }
        out.points.push_back(*next);
    }
    return out;
}

template <class Walker, class Relation, class Point>
OrbitPrefix<Point> extend(const Relation& r, const OrbitPrefix<Point>& prefix, OrbitPolicy policy,
                          std::uint64_t seed)
{
    if (prefix.points.empty()) {
        throw ConstraintError("cannot extend an empty orbit prefix");
    }
    Walker w(r, policy, seed);
    for (Point p : prefix.points) {
        w.visit(p);
    }
    auto next = w.step();
    if (!next) {
        throw DeadEnd("orbit cannot be extended: last point has no successor");
    }
    OrbitPrefix<Point> out = prefix;
    out.points.push_back(*next);
    return out;
}

} // namespace

FiniteOrbit extend_orbit(const FiniteRelation& g, const FiniteOrbit& prefix, OrbitPolicy policy,
                         std::uint64_t seed)
{
    return extend<FiniteWalker>(g, prefix, policy, seed);
}

SegmentOrbit extend_orbit(const SegmentRelation& r, const SegmentOrbit& prefix, OrbitPolicy policy,
                          std::uint64_t seed)
{
    return extend<SegmentWalker>(r, prefix, policy, seed);
}

FiniteOrbit simulate_orbit(const FiniteRelation& g, Vertex x0, int steps, OrbitPolicy policy,
                           std::uint64_t seed)
{
    return run<FiniteWalker>(g, x0, steps, policy, seed);
}

SegmentOrbit simulate_orbit(const SegmentRelation& r, double x0, int steps, OrbitPolicy policy,
                            std::uint64_t seed)
{
    return run<SegmentWalker>(r, x0, steps, policy, seed);
}

FiniteOrbit simulate_backward_orbit(const FiniteRelation& g, Vertex x0, int steps, OrbitPolicy policy,
                                    std::uint64_t seed)
{
    const auto inv = g.inverse();
    return run<FiniteWalker>(inv, x0, steps, policy, seed);
}

SegmentOrbit simulate_backward_orbit(const SegmentRelation& r, double x0, int steps,
                                     OrbitPolicy policy, std::uint64_t seed)
{
    const auto inv = r.inverse();
    return run<SegmentWalker>(inv, x0, steps, policy, seed);
}

} // namespace crdyn
