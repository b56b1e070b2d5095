#pragma once

#include "crdyn/interval_set.hpp"
#include "crdyn/minimality.hpp"
#include "crdyn/orbit.hpp"
#include "crdyn/segment_relation.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crdyn {

inline constexpr double kDefaultDensityEpsilon = 1e-2;
inline constexpr double kGridPitch = 1e-4;
inline constexpr double kClosureStability = 1e-12;

struct DensityDiagnostic {
    std::size_t sample_count = 0;
    /// Largest gap between consecutive sorted samples, with sentinels 0 and 1.
    double max_gap = 1.0;
    [[nodiscard]] bool dense_at(double eps) const { return max_gap < eps; }
};

/// Throws ConstraintError for an empty sample or a point outside [0,1].
DensityDiagnostic density(std::span<const double> points);

enum class ClosureMode { inner, outer };
std::string_view to_string(ClosureMode m);
ClosureMode parse_mode(std::string_view name);

struct ClosureResult {
    IntervalSet set;
    int iterations = 0;
    bool converged = false;
    ClosureMode mode = ClosureMode::inner;
    double epsilon = 0.0;
};

/// Iterates S <- S u image(R, fatten(S, epsilon)) until consecutive sets agree
/// endpoint-wise within kClosureStability, or max_iter iterations ran.
/// Inner mode requires epsilon = 0.
ClosureResult invariant_closure(const SegmentRelation& r, const IntervalSet& s0, ClosureMode mode, double epsilon,
                                int max_iter);

/// Points of the orbit after discarding the first `burn_in` fraction.
std::vector<double> omega_estimate(const SegmentOrbit& orbit, double burn_in);
/// The same for a backward orbit.
std::vector<double> alpha_estimate(const SegmentOrbit& backward_orbit, double burn_in);

/// Lower approximation of the union of limit sets of orbits from x0: tails of
/// orbits under every policy and the given seeds, merged.
std::vector<double> limit_set_sample(const SegmentRelation& r, double x0, int steps, double burn_in,
                                     std::span<const std::uint64_t> seeds, bool backward = false);

struct Violation {
    double x = 0.0;
    std::optional<double> y;  // offending successor, when there is one
};

struct InvarianceCheck {
    bool holds = true;
    std::optional<Violation> violation;
};

/// Numeric invariance test of a candidate set.
///   forward-inf: image(R, A) is inside A fattened by the tolerance.
///   forward-1:   on a grid over A n p1(R), every successor set meets A.
/// Backward kinds run on the inverse relation.
InvarianceCheck check_invariant_candidate(const SegmentRelation& r, const IntervalSet& a, InvarianceKind kind,
                                          double pitch = kGridPitch);

/// Search a library of candidate sets for a proper nonempty invariant set
/// refuting a subset kind: inner closures of the relation and of its inverse
/// from seed points, singletons, then coarse interval unions. A candidate is
/// proper when its max_gap is at least `proper_gap`.
std::optional<IntervalSet> find_segment_witness(const SegmentRelation& r, MinimalityKind kind,
                                                double proper_gap = kDefaultDensityEpsilon);

enum class Evidence {
    refuted_by_witness,  // a proper invariant set was found
    refuted,             // a non-dense orbit, limit set or reachable hull was observed
    plausible,           // every sampled test came out dense
    not_observed,        // neither
};
std::string_view to_string(Evidence e);

struct SegmentDiagnosis {
    Evidence evidence = Evidence::not_observed;
    std::string detail;
    std::optional<IntervalSet> witness;
};

struct SegmentDiagnosticConfig {
    int starts = 9;          // sampled start points k/(starts-1)
    int steps = 2000;        // orbit length
    double epsilon = kDefaultDensityEpsilon;
    double burn_in = 0.5;
    int closure_iter = 200;  // inner closure iteration cap
    std::uint64_t seed = 0;
};

struct SegmentReport {
    std::array<SegmentDiagnosis, kKindCount> kinds{};
    bool p1_full = false;
    bool p2_full = false;
    SegmentDiagnosticConfig config;
};

/// Resolution-bounded diagnostic for all sixteen kinds.
SegmentReport classify_segments(const SegmentRelation& r, const SegmentDiagnosticConfig& config = {});

} // namespace crdyn
