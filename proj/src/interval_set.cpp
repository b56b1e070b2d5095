#include "crdyn/interval_set.hpp"

#include "crdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace crdyn {

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals))
{
    normalize();
}

IntervalSet IntervalSet::point(double x)
{
    return IntervalSet({Interval{x, x}});
}

IntervalSet IntervalSet::points(std::span<const double> xs)
{
    std::vector<Interval> v;
    v.reserve(xs.size());
    for (double x : xs) {
        v.push_back({x, x});
    }
    return IntervalSet(std::move(v));
}

IntervalSet IntervalSet::closed(double lo, double hi)
{
    return IntervalSet({Interval{lo, hi}});
}

void IntervalSet::normalize()
{
    for (auto& iv : intervals_) {
        if (std::isnan(iv.lo) || std::isnan(iv.hi)) {
            throw ConstraintError("interval endpoint is NaN");
        }
        if (iv.lo > iv.hi) {
            std::swap(iv.lo, iv.hi);
        }
        iv.lo = std::clamp(iv.lo, 0.0, 1.0);
        iv.hi = std::clamp(iv.hi, 0.0, 1.0);
    }
    std::sort(intervals_.begin(), intervals_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    std::vector<Interval> merged;
    merged.reserve(intervals_.size());
    for (const auto& iv : intervals_) {
        if (!merged.empty() && iv.lo - merged.back().hi <= kMergeResolution) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    intervals_ = std::move(merged);
}

double IntervalSet::min() const
{
    if (empty()) {
        throw ConstraintError("min of empty interval set");
    }
    return intervals_.front().lo;
}

double IntervalSet::max() const
{
    if (empty()) {
        throw ConstraintError("max of empty interval set");
    }
    return intervals_.back().hi;
}

double IntervalSet::measure() const
{
    double m = 0.0;
    for (const auto& iv : intervals_) {
        m += iv.length();
    }
    return m;
}

bool IntervalSet::contains(double x, double tol) const
{
    return distance(x) <= tol;
}

double IntervalSet::distance(double x) const
{
    if (empty()) {
        return std::numeric_limits<double>::infinity();
    }
    // first interval whose hi >= x
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                               [](const Interval& iv, double v) { return iv.hi < v; });
    double best = std::numeric_limits<double>::infinity();
    if (it != intervals_.end()) {
        best = std::max(0.0, it->lo - x);
    }
    if (it != intervals_.begin()) {
        best = std::min(best, x - std::prev(it)->hi);
    }
    return best;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const
{
    std::vector<Interval> v = intervals_;
    v.insert(v.end(), other.intervals_.begin(), other.intervals_.end());
    return IntervalSet(std::move(v));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const
{
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < intervals_.size() && j < other.intervals_.size()) {
        const auto& a = intervals_[i];
        const auto& b = other.intervals_[j];
        double lo = std::max(a.lo, b.lo);
        double hi = std::min(a.hi, b.hi);
        if (lo <= hi) {
            out.push_back({lo, hi});
        }
        if (a.hi < b.hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return IntervalSet(std::move(out));
}

bool IntervalSet::intersects(const IntervalSet& other, double tol) const
{
    if (tol > 0.0) {
        return !fatten(tol).intersect(other).empty();
    }
    return !intersect(other).empty();
}

IntervalSet IntervalSet::fatten(double eps) const
{
    if (eps < 0.0) {
        throw ConstraintError("fatten: negative epsilon");
    }
    std::vector<Interval> v;
    v.reserve(intervals_.size());
    for (const auto& iv : intervals_) {
        v.push_back({std::max(0.0, iv.lo - eps), std::min(1.0, iv.hi + eps)});
    }
    return IntervalSet(std::move(v));
}

bool IntervalSet::is_subset_of(const IntervalSet& other, double tol) const
{
    const IntervalSet host = tol > 0.0 ? other.fatten(tol) : other;
    for (const auto& iv : intervals_) {
        auto it = std::lower_bound(host.intervals_.begin(), host.intervals_.end(), iv.lo,
                                   [](const Interval& h, double v) { return h.hi < v; });
        if (it == host.intervals_.end() || it->lo > iv.lo || it->hi < iv.hi) {
            return false;
        }
    }
    return true;
}

bool IntervalSet::is_unit(double tol) const
{
    return max_gap() <= tol;
}

double IntervalSet::max_gap() const
{
    if (empty()) {
        return 1.0;
    }
    double gap = intervals_.front().lo;
    for (std::size_t i = 1; i < intervals_.size(); ++i) {
        gap = std::max(gap, intervals_[i].lo - intervals_[i - 1].hi);
    }
    return std::max(gap, 1.0 - intervals_.back().hi);
}

double IntervalSet::symmetric_difference_measure(const IntervalSet& other) const
{
    return measure() + other.measure() - 2.0 * intersect(other).measure();
}

namespace {

// sup over x in a of dist(x, b)
double directed_hausdorff(const IntervalSet& a, const IntervalSet& b)
{
    double worst = 0.0;
    for (const auto& iv : a.intervals()) {
        worst = std::max({worst, b.distance(iv.lo), b.distance(iv.hi)});
        // interior maxima sit at midpoints of gaps of b lying inside iv
        for (std::size_t k = 1; k < b.intervals().size(); ++k) {
            double g0 = b.intervals()[k - 1].hi;
            double g1 = b.intervals()[k].lo;
            double mid = 0.5 * (g0 + g1);
            if (mid >= iv.lo && mid <= iv.hi) {
                worst = std::max(worst, 0.5 * (g1 - g0));
            }
        }
    }
    return worst;
}

} // namespace

double IntervalSet::hausdorff(const IntervalSet& other) const
{
    if (empty() || other.empty()) {
        throw ConstraintError("hausdorff distance of an empty set");
    }
    return std::max(directed_hausdorff(*this, other), directed_hausdorff(other, *this));
}

std::optional<double> IntervalSet::first_uncovered(double lo, double hi) const
{
    double cursor = lo;
    bool cursor_covered = false;
    for (const auto& iv : intervals_) {
        if (iv.hi < cursor) {
            continue;
        }
        if (iv.lo > hi) {
            break;
        }
        if (iv.lo > cursor) {
            return 0.5 * (cursor + iv.lo);
        }
        cursor = iv.hi;
        cursor_covered = true;
        if (cursor >= hi) {
            return std::nullopt;
        }
    }
    if (hi > cursor) {
        return 0.5 * (cursor + hi);
    }
    return cursor_covered ? std::nullopt : std::optional<double>(cursor);
}

} // namespace crdyn
