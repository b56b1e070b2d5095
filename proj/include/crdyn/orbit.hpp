#pragma once

#include "crdyn/finite_relation.hpp"
#include "crdyn/segment_relation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace crdyn {

/// How the next point of an orbit is chosen among the successors.
///   first:  smallest successor.
///   random: a uniformly chosen fiber piece, then a uniform point on it.
///   greedy: the successor farthest from every point visited so far; ties go
///           to the point visited least recently, then to the smallest one.
enum class OrbitPolicy { first, random, greedy };

std::string_view to_string(OrbitPolicy p);
/// Throws ParseError for an unknown name.
OrbitPolicy parse_policy(std::string_view name);

/// A finite orbit segment (x_1, ..., x_m). `dead_end` is set when the last
/// point has no successor, so the prefix cannot be extended.
template <class Point>
struct OrbitPrefix {
    std::vector<Point> points;
    bool dead_end = false;
};

using FiniteOrbit = OrbitPrefix<Vertex>;
using SegmentOrbit = OrbitPrefix<double>;

/// Stateful orbit builder. Keeps the policy state (random engine, visit
/// history) so long orbits are extended in near-linear time.
class FiniteWalker {
public:
    FiniteWalker(const FiniteRelation& g, OrbitPolicy policy, std::uint64_t seed);
    /// Records `x` as the current point.
    void visit(Vertex x);
    /// Next point after the current one; nullopt at a dead end.
    std::optional<Vertex> step();

private:
    const FiniteRelation& g_;
    OrbitPolicy policy_;
    std::mt19937_64 rng_;
    std::vector<long> last_visit_;
    long clock_ = 0;
    Vertex current_ = -1;
};

class SegmentWalker {
public:
    SegmentWalker(const SegmentRelation& r, OrbitPolicy policy, std::uint64_t seed);
    void visit(double x);
    std::optional<double> step();

private:
    double pick_greedy(const IntervalSet& succ) const;

    const SegmentRelation& r_;
    OrbitPolicy policy_;
    std::mt19937_64 rng_;
    std::map<double, long> last_visit_;
    long clock_ = 0;
    double current_ = -1.0;
};

/// Appends one successor of the last point chosen by `policy`. Throws DeadEnd
/// if the last point has no successor, ConstraintError on an empty prefix.
FiniteOrbit extend_orbit(const FiniteRelation& g, const FiniteOrbit& prefix, OrbitPolicy policy,
                         std::uint64_t seed = 0);
SegmentOrbit extend_orbit(const SegmentRelation& r, const SegmentOrbit& prefix, OrbitPolicy policy,
                          std::uint64_t seed = 0);

/// Orbit of up to steps+1 points starting at x0, truncated at a dead end.
FiniteOrbit simulate_orbit(const FiniteRelation& g, Vertex x0, int steps, OrbitPolicy policy,
                           std::uint64_t seed = 0);
SegmentOrbit simulate_orbit(const SegmentRelation& r, double x0, int steps, OrbitPolicy policy,
                            std::uint64_t seed = 0);

/// The same on the inverse relation.
FiniteOrbit simulate_backward_orbit(const FiniteRelation& g, Vertex x0, int steps, OrbitPolicy policy,
                                    std::uint64_t seed = 0);
SegmentOrbit simulate_backward_orbit(const SegmentRelation& r, double x0, int steps,
                                     OrbitPolicy policy, std::uint64_t seed = 0);

} // namespace crdyn
