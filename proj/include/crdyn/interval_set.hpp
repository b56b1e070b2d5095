#pragma once

#include <optional>
#include <span>
#include <vector>

namespace crdyn {

/// Closed interval [lo, hi] inside [0,1]; lo == hi encodes a single point.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] bool is_point() const { return lo == hi; }
    [[nodiscard]] double length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

/// A closed subset of [0,1] stored as a sorted list of disjoint closed
/// intervals. Intervals closer than `kMergeResolution` are merged, so the
/// representation is canonical up to that resolution.
class IntervalSet {
public:
    static constexpr double kMergeResolution = 1e-12;

    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> intervals);

    static IntervalSet point(double x);
    static IntervalSet points(std::span<const double> xs);
    static IntervalSet closed(double lo, double hi);
    static IntervalSet unit() { return closed(0.0, 1.0); }

    [[nodiscard]] const std::vector<Interval>& intervals() const { return intervals_; }
    [[nodiscard]] bool empty() const { return intervals_.empty(); }
    [[nodiscard]] std::size_t size() const { return intervals_.size(); }

    [[nodiscard]] double min() const;
    [[nodiscard]] double max() const;

    /// Lebesgue measure.
    [[nodiscard]] double measure() const;

    [[nodiscard]] bool contains(double x, double tol = 0.0) const;
    [[nodiscard]] double distance(double x) const;

    [[nodiscard]] IntervalSet unite(const IntervalSet& other) const;
    [[nodiscard]] IntervalSet intersect(const IntervalSet& other) const;
    [[nodiscard]] bool intersects(const IntervalSet& other, double tol = 0.0) const;

    /// Every interval grown by eps on both sides, clipped to [0,1].
    [[nodiscard]] IntervalSet fatten(double eps) const;

    [[nodiscard]] bool is_subset_of(const IntervalSet& other, double tol = 0.0) const;

    /// True if this set covers [0,1] up to `tol`.
    [[nodiscard]] bool is_unit(double tol = kMergeResolution) const;

    /// Largest uncovered gap of [0,1], including the stretches next to 0 and 1.
    [[nodiscard]] double max_gap() const;

    /// Measure of the symmetric difference with `other`.
    [[nodiscard]] double symmetric_difference_measure(const IntervalSet& other) const;

    /// Hausdorff distance between the two (nonempty) sets.
    [[nodiscard]] double hausdorff(const IntervalSet& other) const;

    /// A point of [lo, hi] not contained in this set, if there is one. Interior
    /// points of the first uncovered gap are preferred over its boundary.
    [[nodiscard]] std::optional<double> first_uncovered(double lo, double hi) const;

    bool operator==(const IntervalSet&) const = default;

private:
    void normalize();

    std::vector<Interval> intervals_;
};

} // namespace crdyn
