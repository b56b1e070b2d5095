#pragma once

#include "crdyn/corpus.hpp"
#include "crdyn/finite_analysis.hpp"
#include "crdyn/interval_analysis.hpp"
#include "crdyn/interval_set.hpp"

#include <array>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace crdyn {

/// Bijection of {0,...,n-1}; map[x] is the image of x.
class Permutation {
public:
    /// Throws ConstraintError unless `map` is a permutation of 0..n-1, n >= 1.
    explicit Permutation(std::vector<Vertex> map);
    static Permutation identity(int n);

    [[nodiscard]] int size() const { return static_cast<int>(map_.size()); }
    [[nodiscard]] const std::vector<Vertex>& map() const { return map_; }
    [[nodiscard]] Vertex operator()(Vertex x) const;
    [[nodiscard]] Permutation inverse() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<Vertex> map_;
};

enum class Orientation { increasing, decreasing };
std::string_view to_string(Orientation o);  // "inc" / "dec"
Orientation parse_orientation(std::string_view name);

/// Strictly monotone piecewise-linear map of [0,1] onto itself, given by its
/// breakpoints (x_i, phi(x_i)) with x ascending from 0 to 1.
class PLHomeomorphism {
public:
    /// Throws ConstraintError unless there are at least two breakpoints, x runs
    /// strictly from 0 to 1, and y runs strictly from 0 to 1 (increasing) or
    /// from 1 to 0 (decreasing).
    PLHomeomorphism(std::vector<std::pair<double, double>> breakpoints, Orientation orientation);
    static PLHomeomorphism identity();
    static PLHomeomorphism reflection();  // t -> 1 - t

    [[nodiscard]] const std::vector<std::pair<double, double>>& breakpoints() const { return bp_; }
    [[nodiscard]] Orientation orientation() const { return orientation_; }

    /// Throws OutOfRange outside [0,1].
    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] PLHomeomorphism inverse() const;
    /// Image of a set; intervals go to intervals.
    [[nodiscard]] IntervalSet operator()(const IntervalSet& a) const;

    bool operator==(const PLHomeomorphism&) const = default;

private:
    std::vector<std::pair<double, double>> bp_;
    Orientation orientation_;
};

using Homeomorphism = std::variant<Permutation, PLHomeomorphism>;

/// H = {(phi(x), phi(y)) : (x,y) in G}. Throws ConstraintError on a backend or
/// size mismatch.
FiniteRelation transport(const FiniteRelation& g, const Permutation& phi);
/// Each segment is cut where either coordinate crosses a breakpoint of phi,
/// and the pieces are mapped endpoint-wise. The tolerance is kept.
SegmentRelation transport(const SegmentRelation& r, const PLHomeomorphism& phi);
Relation transport(const Relation& r, const Homeomorphism& phi);

std::vector<Vertex> transport_subset(const std::vector<Vertex>& a, const Permutation& phi);

/// Symmetric distance between two segment unions, evaluated at the segment
/// endpoints and `samples` interior points per segment.
double segment_hausdorff(const SegmentRelation& a, const SegmentRelation& b, int samples = 256);

struct FiniteConjugacyReport {
    MinimalityReport original;
    MinimalityReport transported;
    std::array<bool, kKindCount> kind_equal{};
    bool all_equal = false;
    /// p1(G) = X iff p1(H) = Y, and the same for p2.
    bool p1_preserved = false;
    bool p2_preserved = false;
};

struct SegmentConjugacyReport {
    SegmentReport original;
    SegmentReport transported;
    std::array<bool, kKindCount> kind_equal{};  // same evidence
    bool all_equal = false;
    bool p1_preserved = false;
    bool p2_preserved = false;
};

FiniteConjugacyReport check_conjugacy_invariance(const FiniteRelation& g, const Permutation& phi);
/// Diagnostic only: numeric evidence need not be preserved by a non-isometric phi.
SegmentConjugacyReport check_conjugacy_invariance(const SegmentRelation& r, const PLHomeomorphism& phi,
                                                  const SegmentDiagnosticConfig& config = {});

/// For one subset A: whether A is k-invariant in G and whether phi(A) is
/// k-invariant in the transported relation, for the four invariance kinds.
struct SubsetTransport {
    std::array<bool, 4> in_original{};
    std::array<bool, 4> in_transported{};
    [[nodiscard]] bool preserved() const { return in_original == in_transported; }
};
SubsetTransport check_subset_transport(const FiniteRelation& g, const Permutation& phi,
                                       const std::vector<Vertex>& a);

} // namespace crdyn
