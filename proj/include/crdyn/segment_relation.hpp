#pragma once

#include "crdyn/interval_set.hpp"

#include <vector>

namespace crdyn {

/// Line segment in the unit square from (x1,y1) to (x2,y2). Equal endpoints
/// encode a single point pair.
struct Segment {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;

    [[nodiscard]] bool is_point() const { return x1 == x2 && y1 == y2; }
    [[nodiscard]] bool is_vertical() const { return x1 == x2; }
    [[nodiscard]] Segment swapped() const { return {y1, x1, y2, x2}; }
    /// Euclidean distance from (x,y) to the segment.
    [[nodiscard]] double distance(double x, double y) const;

    bool operator==(const Segment&) const = default;
};

/// A closed relation on [0,1] given as a finite union of segments.
class SegmentRelation {
public:
    static constexpr double kDefaultTolerance = 1e-9;

    /// Throws ConstraintError for an empty list, a coordinate outside [0,1] or
    /// a negative tolerance.
    explicit SegmentRelation(std::vector<Segment> segments, double tolerance = kDefaultTolerance);

    [[nodiscard]] const std::vector<Segment>& segments() const { return segments_; }
    [[nodiscard]] double tolerance() const { return tolerance_; }

    /// Distance from (x,y) to the nearest segment is at most the tolerance.
    [[nodiscard]] bool contains(double x, double y) const;

    /// The y-values attained at abscissa x, one entry per segment that meets
    /// the vertical line (within tolerance). Not merged.
    [[nodiscard]] std::vector<Interval> fiber_pieces(double x) const;
    [[nodiscard]] IntervalSet successors(double x) const;
    [[nodiscard]] IntervalSet predecessors(double y) const;

    /// Image {y : (x,y) in R, x in A}. With slack > 0 a segment also counts
    /// points of A within `slack` of its x-range, evaluated at the nearest end.
    [[nodiscard]] IntervalSet image(const IntervalSet& a, double slack = 0.0) const;

    [[nodiscard]] SegmentRelation inverse() const;

    [[nodiscard]] IntervalSet domain() const;
    [[nodiscard]] IntervalSet range() const;

    bool operator==(const SegmentRelation& other) const
    {
        return segments_ == other.segments_ && tolerance_ == other.tolerance_;
    }

private:
    std::vector<Segment> segments_;
    double tolerance_;
};

/// Throws OutOfRange unless 0 <= v <= 1.
void check_unit(double v);

} // namespace crdyn
