#include "crdyn/segment_relation.hpp"

#include "crdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace crdyn {

void check_unit(double v)
{
    if (!(v >= 0.0 && v <= 1.0)) {
        throw OutOfRange("coordinate " + std::to_string(v) + " outside [0,1]");
    }
}

double Segment::distance(double x, double y) const
{
    const double dx = x2 - x1;
    const double dy = y2 - y1;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) {
        t = std::clamp(((x - x1) * dx + (y - y1) * dy) / len2, 0.0, 1.0);
    }
    return std::hypot(x - (x1 + t * dx), y - (y1 + t * dy));
}

SegmentRelation::SegmentRelation(std::vector<Segment> segments, double tolerance)
    : segments_(std::move(segments)), tolerance_(tolerance)
{
    if (segments_.empty()) {
        throw ConstraintError("segment relation must be nonempty");
    }
    if (!(tolerance_ >= 0.0)) {
        throw ConstraintError("tolerance must be nonnegative");
    }
    for (const auto& s : segments_) {
        for (double v : {s.x1, s.y1, s.x2, s.y2}) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw ConstraintError("segment coordinate " + std::to_string(v) + " outside [0,1]");
            }
        }
    }
}

bool SegmentRelation::contains(double x, double y) const
{
    check_unit(x);
    check_unit(y);
    return std::any_of(segments_.begin(), segments_.end(),
                       [&](const Segment& s) { return s.distance(x, y) <= tolerance_; });
}

namespace {

// y-range of s over abscissa v, with the x-range widened by `slack`.
bool fiber_of(const Segment& s, double v, double slack, Interval& out)
{
    const double lo = std::min(s.x1, s.x2);
    const double hi = std::max(s.x1, s.x2);
    if (v < lo - slack || v > hi + slack) {
        return false;
    }
    if (s.is_vertical()) {
        out = {std::min(s.y1, s.y2), std::max(s.y1, s.y2)};
        return true;
    }
    const double t = std::clamp((v - s.x1) / (s.x2 - s.x1), 0.0, 1.0);
    const double y = std::clamp(s.y1 + t * (s.y2 - s.y1), 0.0, 1.0);
    out = {y, y};
    return true;
}

std::vector<Interval> pieces(const std::vector<Segment>& segs, double v, double slack, bool swap)
{
    std::vector<Interval> out;
    Interval iv;
    for (const auto& s : segs) {
        if (fiber_of(swap ? s.swapped() : s, v, slack, iv)) {
            out.push_back(iv);
        }
    }
    return out;
}

} // namespace

std::vector<Interval> SegmentRelation::fiber_pieces(double x) const
{
    check_unit(x);
    return pieces(segments_, x, tolerance_, false);
}

IntervalSet SegmentRelation::successors(double x) const
{
    return IntervalSet(fiber_pieces(x));
}

IntervalSet SegmentRelation::predecessors(double y) const
{
    check_unit(y);
    return IntervalSet(pieces(segments_, y, tolerance_, true));
}

IntervalSet SegmentRelation::image(const IntervalSet& a, double slack) const
{
    std::vector<Interval> out;
    const auto& ivs = a.intervals();
    for (const auto& s : segments_) {
        const double lo = std::min(s.x1, s.x2);
        const double hi = std::max(s.x1, s.x2);
        auto first = std::lower_bound(ivs.begin(), ivs.end(), lo - slack,
                                      [](const Interval& iv, double v) { return iv.hi < v; });
        for (auto it = first; it != ivs.end() && it->lo <= hi + slack; ++it) {
            const auto& iv = *it;
            const double clo = std::clamp(iv.lo, lo, hi);
            const double chi = std::clamp(iv.hi, lo, hi);
            if (s.is_vertical()) {
                out.push_back({std::min(s.y1, s.y2), std::max(s.y1, s.y2)});
                continue;
            }
            const double slope = (s.y2 - s.y1) / (s.x2 - s.x1);
            const double ya = s.y1 + (clo - s.x1) * slope;
            const double yb = s.y1 + (chi - s.x1) * slope;
            out.push_back({std::min(ya, yb), std::max(ya, yb)});
        }
    }
    return IntervalSet(std::move(out));
}

SegmentRelation SegmentRelation::inverse() const
{
    std::vector<Segment> swapped;
    swapped.reserve(segments_.size());
    for (const auto& s : segments_) {
        swapped.push_back(s.swapped());
    }
    return SegmentRelation(std::move(swapped), tolerance_);
}

IntervalSet SegmentRelation::domain() const
{
    std::vector<Interval> v;
    for (const auto& s : segments_) {
        v.push_back({std::min(s.x1, s.x2), std::max(s.x1, s.x2)});
    }
    return IntervalSet(std::move(v));
}

IntervalSet SegmentRelation::range() const
{
    std::vector<Interval> v;
    for (const auto& s : segments_) {
        v.push_back({std::min(s.y1, s.y2), std::max(s.y1, s.y2)});
    }
    return IntervalSet(std::move(v));
}

} // namespace crdyn
