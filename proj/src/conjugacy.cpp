#include "crdyn/conjugacy.hpp"

#include "crdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace crdyn {

Permutation::Permutation(std::vector<Vertex> map) : map_(std::move(map))
{
    if (map_.empty()) {
        throw ConstraintError("permutation must be nonempty");
    }
    std::vector<bool> seen(map_.size(), false);
    for (Vertex v : map_) {
        if (v < 0 || v >= size() || seen[v]) {
            throw ConstraintError("map is not a permutation of 0.." + std::to_string(size() - 1));
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<Vertex> m(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) {
        m[i] = i;
    }
    return Permutation(std::move(m));
}

Vertex Permutation::operator()(Vertex x) const
{
    if (x < 0 || x >= size()) {
        throw OutOfRange("vertex " + std::to_string(x) + " outside the permutation domain");
    }
    return map_[x];
}

Permutation Permutation::inverse() const
{
    std::vector<Vertex> inv(map_.size());
    for (int i = 0; i < size(); ++i) {
        inv[map_[i]] = i;
    }
    return Permutation(std::move(inv));
}

std::string_view to_string(Orientation o)
{
    return o == Orientation::increasing ? "inc" : "dec";
}

Orientation parse_orientation(std::string_view name)
{
    if (name == "inc") {
        return Orientation::increasing;
    }
    if (name == "dec") {
        return Orientation::decreasing;
    }
    throw ParseError("orientation must be \"inc\" or \"dec\"");
}

PLHomeomorphism::PLHomeomorphism(std::vector<std::pair<double, double>> breakpoints, Orientation orientation)
    : bp_(std::move(breakpoints)), orientation_(orientation)
{
    if (bp_.size() < 2) {
        throw ConstraintError("a PL homeomorphism needs at least two breakpoints");
    }
    const bool inc = orientation_ == Orientation::increasing;
    if (bp_.front().first != 0.0 || bp_.back().first != 1.0) {
        throw ConstraintError("breakpoints must start at x=0 and end at x=1");
    }
    if (bp_.front().second != (inc ? 0.0 : 1.0) || bp_.back().second != (inc ? 1.0 : 0.0)) {
        throw ConstraintError(inc ? "increasing map must fix 0 and 1" : "decreasing map must swap 0 and 1");
    }
    for (std::size_t i = 1; i < bp_.size(); ++i) {
        const auto& [x0, y0] = bp_[i - 1];
        const auto& [x1, y1] = bp_[i];
        if (!(x1 > x0)) {
            throw ConstraintError("breakpoint abscissae must be strictly increasing");
        }
        if (inc ? !(y1 > y0) : !(y1 < y0)) {
            throw ConstraintError("breakpoint values must be strictly monotone in the stated orientation");
        }
    }
}

PLHomeomorphism PLHomeomorphism::identity()
{
    return PLHomeomorphism({{0.0, 0.0}, {1.0, 1.0}}, Orientation::increasing);
}

PLHomeomorphism PLHomeomorphism::reflection()
{
    return PLHomeomorphism({{0.0, 1.0}, {1.0, 0.0}}, Orientation::decreasing);
}

double PLHomeomorphism::operator()(double x) const
{
    check_unit(x);
    auto it = std::upper_bound(bp_.begin(), bp_.end(), x,
                               [](double v, const std::pair<double, double>& p) { return v < p.first; });
    if (it == bp_.end()) {
        return bp_.back().second;
    }
    const auto& [x1, y1] = *it;
    const auto& [x0, y0] = *(it - 1);
    if (x == x0) {
        return y0;
    }
    return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
}

PLHomeomorphism PLHomeomorphism::inverse() const
{
    std::vector<std::pair<double, double>> inv;
    inv.reserve(bp_.size());
    for (const auto& [x, y] : bp_) {
        inv.emplace_back(y, x);
    }
    if (orientation_ == Orientation::decreasing) {
        std::reverse(inv.begin(), inv.end());
    }
    return PLHomeomorphism(std::move(inv), orientation_);
}

IntervalSet PLHomeomorphism::operator()(const IntervalSet& a) const
{
    std::vector<Interval> out;
    out.reserve(a.size());
    for (const auto& iv : a.intervals()) {
        const double u = (*this)(iv.lo);
        const double v = (*this)(iv.hi);
        out.push_back({std::min(u, v), std::max(u, v)});
    }
    return IntervalSet(std::move(out));
}

FiniteRelation transport(const FiniteRelation& g, const Permutation& phi)
{
    if (phi.size() != g.size()) {
        throw ConstraintError("permutation size " + std::to_string(phi.size()) + " does not match relation size " +
                              std::to_string(g.size()));
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [x, y] : g.edges()) {
        edges.emplace_back(phi(x), phi(y));
    }
    return FiniteRelation(g.size(), std::move(edges));
}

namespace {

// parameters t in (0,1) where the coordinate a + t(b-a) crosses a breakpoint
void add_cuts(double a, double b, const PLHomeomorphism& phi, std::vector<double>& ts)
{
    if (a == b) {
        return;
    }
    for (const auto& [bx, by] : phi.breakpoints()) {
        (void)by;
        const double t = (bx - a) / (b - a);
        if (t > 0.0 && t < 1.0) {
            ts.push_back(t);
        }
    }
}

double lerp_unit(double a, double b, double t)
{
    return std::clamp(a + t * (b - a), 0.0, 1.0);
}

} // namespace

SegmentRelation transport(const SegmentRelation& r, const PLHomeomorphism& phi)
{
    std::vector<Segment> out;
    for (const auto& s : r.segments()) {
        if (s.is_point()) {
            out.push_back({phi(s.x1), phi(s.y1), phi(s.x1), phi(s.y1)});
            continue;
        }
        std::vector<double> ts{0.0, 1.0};
        add_cuts(s.x1, s.x2, phi, ts);
        add_cuts(s.y1, s.y2, phi, ts);
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (std::size_t k = 1; k < ts.size(); ++k) {
            const double t0 = ts[k - 1];
            const double t1 = ts[k];
            out.push_back({phi(lerp_unit(s.x1, s.x2, t0)), phi(lerp_unit(s.y1, s.y2, t0)),
                           phi(lerp_unit(s.x1, s.x2, t1)), phi(lerp_unit(s.y1, s.y2, t1))});
        }
    }
    return SegmentRelation(std::move(out), r.tolerance());
}

Relation transport(const Relation& r, const Homeomorphism& phi)
{
    if (const auto* g = std::get_if<FiniteRelation>(&r)) {
        const auto* p = std::get_if<Permutation>(&phi);
        if (!p) {
            throw ConstraintError("a finite relation needs a permutation");
        }
        return transport(*g, *p);
    }
    const auto* pl = std::get_if<PLHomeomorphism>(&phi);
    if (!pl) {
        throw ConstraintError("a segment relation needs a piecewise-linear homeomorphism");
    }
    return transport(std::get<SegmentRelation>(r), *pl);
}

std::vector<Vertex> transport_subset(const std::vector<Vertex>& a, const Permutation& phi)
{
    std::vector<Vertex> out;
    out.reserve(a.size());
    for (Vertex v : a) {
        out.push_back(phi(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

double directed_distance(const SegmentRelation& a, const SegmentRelation& b, int samples)
{
    double worst = 0.0;
    auto probe = [&](double x, double y) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& t : b.segments()) {
            best = std::min(best, t.distance(x, y));
        }
        worst = std::max(worst, best);
    };
    for (const auto& s : a.segments()) {
        const int n = s.is_point() ? 0 : samples + 1;
        probe(s.x1, s.y1);
        for (int k = 1; k < n; ++k) {
            const double t = static_cast<double>(k) / n;
            probe(s.x1 + t * (s.x2 - s.x1), s.y1 + t * (s.y2 - s.y1));
        }
        probe(s.x2, s.y2);
    }
    return worst;
}

std::array<bool, kKindCount> compare_flags(const FlagVector& a, const FlagVector& b)
{
    std::array<bool, kKindCount> eq{};
    for (std::size_t i = 0; i < kKindCount; ++i) {
        eq[i] = a[i] == b[i];
    }
    return eq;
}

} // namespace

double segment_hausdorff(const SegmentRelation& a, const SegmentRelation& b, int samples)
{
    if (samples < 0) {
        throw ConstraintError("sample count must be nonnegative");
    }
    return std::max(directed_distance(a, b, samples), directed_distance(b, a, samples));
}

FiniteConjugacyReport check_conjugacy_invariance(const FiniteRelation& g, const Permutation& phi)
{
    const FiniteRelation h = transport(g, phi);
    FiniteConjugacyReport rep;
    rep.original = classify(g);
    rep.transported = classify(h);
    rep.kind_equal = compare_flags(rep.original.flags, rep.transported.flags);
    rep.all_equal = rep.original.flags == rep.transported.flags;
    rep.p1_preserved = g.domain_is_full() == h.domain_is_full();
    rep.p2_preserved = g.range_is_full() == h.range_is_full();
    return rep;
}

SegmentConjugacyReport check_conjugacy_invariance(const SegmentRelation& r, const PLHomeomorphism& phi,
                                                  const SegmentDiagnosticConfig& config)
{
    const SegmentRelation h = transport(r, phi);
    SegmentConjugacyReport rep;
    rep.original = classify_segments(r, config);
    rep.transported = classify_segments(h, config);
    rep.all_equal = true;
    for (std::size_t i = 0; i < kKindCount; ++i) {
        rep.kind_equal[i] = rep.original.kinds[i].evidence == rep.transported.kinds[i].evidence;
        rep.all_equal = rep.all_equal && rep.kind_equal[i];
    }
    rep.p1_preserved = rep.original.p1_full == rep.transported.p1_full;
    rep.p2_preserved = rep.original.p2_full == rep.transported.p2_full;
    return rep;
}

SubsetTransport check_subset_transport(const FiniteRelation& g, const Permutation& phi,
                                       const std::vector<Vertex>& a)
{
    const FiniteRelation h = transport(g, phi);
    const auto b = transport_subset(a, phi);
    SubsetTransport out;
    for (std::size_t i = 0; i < kAllInvarianceKinds.size(); ++i) {
        out.in_original[i] = is_invariant(g, a, kAllInvarianceKinds[i]);
        out.in_transported[i] = is_invariant(h, b, kAllInvarianceKinds[i]);
    }
    return out;
}

} // namespace crdyn
