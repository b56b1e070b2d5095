#include "crdyn/finite_analysis.hpp"

#include "crdyn/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace crdyn {

namespace {

Mask bit(Vertex v)
{
    return Mask{1} << static_cast<unsigned>(v);
}

Mask full_mask(int n)
{
    return n >= 32 ? ~Mask{0} : (Mask{1} << static_cast<unsigned>(n)) - 1;
}

bool backward(InvarianceKind k)
{
    return k == InvarianceKind::backward_1 || k == InvarianceKind::backward_inf;
}

bool is_one(InvarianceKind k)
{
    return k == InvarianceKind::forward_1 || k == InvarianceKind::backward_1;
}

std::vector<Mask> successor_masks(const FiniteRelation& g)
{
    std::vector<Mask> out(static_cast<std::size_t>(g.size()), 0);
    for (const auto& [x, y] : g.edges()) {
        out[static_cast<std::size_t>(x)] |= bit(y);
    }
    return out;
}

bool invariant_by_masks(const std::vector<Mask>& succ, Mask a, bool one)
{
    for (std::size_t x = 0; x < succ.size(); ++x) {
        if ((a & bit(static_cast<Vertex>(x))) == 0) {
            continue;
        }
        const Mask s = succ[x];
        if (one ? (s != 0 && (s & a) == 0) : (s & ~a) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<char> reachable(const FiniteRelation& g, Vertex x)
{
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::vector<Vertex> stack{x};
    seen[static_cast<std::size_t>(x)] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.successors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

// Shortest path from `from` to `to` of length >= 1 avoiding `excluded`,
// as the list of vertices before `to`. Empty if none.
std::vector<Vertex> shortest_walk(const FiniteRelation& g, Vertex from, Vertex to, Vertex excluded = -1)
{
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<Vertex> parent(n, -2);
    std::deque<Vertex> queue;
    for (Vertex w : g.successors(from)) {
        if (w == excluded) {
            continue;
        }
        if (w == to) {
            return {from};
        }
        if (parent[static_cast<std::size_t>(w)] == -2) {
            parent[static_cast<std::size_t>(w)] = from;
            queue.push_back(w);
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.successors(v)) {
            if (w == excluded) {
                continue;
            }
            if (w == to) {
                std::vector<Vertex> path{v};
                for (Vertex p = v; p != from;) {
                    p = parent[static_cast<std::size_t>(p)];
                    path.push_back(p);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
        }
    }
    return {};
}

// Shortest closed walk through v (starting at v), avoiding `excluded`.
std::vector<Vertex> shortest_cycle(const FiniteRelation& g, Vertex v, Vertex excluded = -1)
{
    return shortest_walk(g, v, v, excluded);
}

// Some cycle of g avoiding `excluded`, from the smallest vertex that lies on one.
std::vector<Vertex> cycle_avoiding(const FiniteRelation& g, Vertex excluded)
{
    for (Vertex s = 0; s < g.size(); ++s) {
        if (s == excluded) {
            continue;
        }
        auto c = shortest_cycle(g, s, excluded);
        if (!c.empty()) {
            return c;
        }
    }
    return {};
}

bool acyclic_without(const FiniteRelation& g, Vertex removed)
{
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<int> indeg(n, 0);
    for (const auto& [x, y] : g.edges()) {
        if (x != removed && y != removed) {
            ++indeg[static_cast<std::size_t>(y)];
        }
    }
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (v != removed && indeg[static_cast<std::size_t>(v)] == 0) {
            ready.push_back(v);
        }
    }
    std::size_t done = 0;
    while (!ready.empty()) {
        Vertex v = ready.back();
        ready.pop_back();
        ++done;
        for (Vertex w : g.successors(v)) {
            if (w != removed && --indeg[static_cast<std::size_t>(w)] == 0) {
                ready.push_back(w);
            }
        }
    }
    return done == n - (removed >= 0 ? 1 : 0);
}

// ------------------------------------------------------------ orbit oracle

// Per start point: what the orbit sets and omega sets of infinite walks look like.
struct StartSummary {
    bool has_orbit = false;
    bool every_orbit_full = true;
    bool some_orbit_full = false;
    Mask orbit_union = 0;
    bool every_omega_full = true;
    bool some_omega_full = false;
    Mask omega_union = 0;
};

std::vector<StartSummary> orbit_summaries(const FiniteRelation& g)
{
    const int n = g.size();
    if (n > kOrbitOracleCap) {
        throw CapExceeded("orbit oracle supports n <= " + std::to_string(kOrbitOracleCap) + ", got " +
                          std::to_string(n));
    }
    const Mask full = full_mask(n);
    const std::size_t masks = std::size_t{1} << static_cast<unsigned>(n);
    auto state = [&](Vertex v, Mask m) { return static_cast<std::size_t>(v) * masks + m; };

    // closed[M]: some closed walk visits exactly the vertices of M
    std::vector<char> closed(masks, 0);
    std::vector<char> seen(static_cast<std::size_t>(n) * masks, 0);
    std::vector<std::pair<Vertex, Mask>> stack;
    for (Vertex t = 0; t < n; ++t) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, {t, bit(t)});
        seen[state(t, bit(t))] = 1;
        while (!stack.empty()) {
            auto [v, m] = stack.back();
            stack.pop_back();
            for (Vertex w : g.successors(v)) {
                if (w == t) {
                    closed[m] = 1;
                }
                const Mask mw = m | bit(w);
                if (!seen[state(w, mw)]) {
                    seen[state(w, mw)] = 1;
                    stack.emplace_back(w, mw);
                }
            }
        }
    }

    // recurrent[M]: vertices lying on a closed walk that stays inside M
    std::vector<Mask> recurrent(masks, 0);
    for (Mask m = 0; m < masks; ++m) {
        recurrent[m] = closed[m] ? m : 0;
    }
    for (int i = 0; i < n; ++i) {
        for (Mask m = 0; m < masks; ++m) {
            if (m & bit(i)) {
                recurrent[m] |= recurrent[m ^ bit(i)];
            }
        }
    }

    std::vector<StartSummary> out(static_cast<std::size_t>(n));
    for (Vertex x = 0; x < n; ++x) {
        auto& s = out[static_cast<std::size_t>(x)];
        // an infinite walk from x with orbit set M passes through a state
        // (v, M) from which it can cycle forever inside M
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, {x, bit(x)});
        seen[state(x, bit(x))] = 1;
        while (!stack.empty()) {
            auto [v, m] = stack.back();
            stack.pop_back();
            if (recurrent[m] & bit(v)) {
                s.has_orbit = true;
                s.every_orbit_full = s.every_orbit_full && m == full;
                s.some_orbit_full = s.some_orbit_full || m == full;
                s.orbit_union |= m;
            }
            for (Vertex w : g.successors(v)) {
                const Mask mw = m | bit(w);
                if (!seen[state(w, mw)]) {
                    seen[state(w, mw)] = 1;
                    stack.emplace_back(w, mw);
                }
            }
        }
        // omega sets are the closed-walk vertex sets reachable from x
        const auto reach = reachable(g, x);
        Mask rmask = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (reach[static_cast<std::size_t>(v)]) {
                rmask |= bit(v);
            }
        }
        for (Mask c = 1; c < masks; ++c) {
            if (closed[c] && (c & rmask) != 0) {
                s.every_omega_full = s.every_omega_full && c == full;
                s.some_omega_full = s.some_omega_full || c == full;
                s.omega_union |= c;
            }
        }
    }
    return out;
}

bool orbit_flag(const std::vector<StartSummary>& sums, MinimalityKind forward_kind, Mask full)
{
    using enum MinimalityKind;
    return std::all_of(sums.begin(), sums.end(), [&](const StartSummary& s) {
        switch (forward_kind) {
        case one_plus: return s.has_orbit && s.every_orbit_full;
        case two_plus: return s.some_orbit_full;
        case three_plus: return s.orbit_union == full;
        case one_omega: return s.has_orbit && s.every_omega_full;
        case two_omega: return s.some_omega_full;
        case three_omega: return s.omega_union == full;
        default: throw ConstraintError("not an orbit kind");
        }
    });
}

std::optional<Mask> least_invariant_mask(const FiniteRelation& g, InvarianceKind kind)
{
    if (g.size() > kSubsetOracleCap) {
        throw CapExceeded("subset oracle supports n <= " + std::to_string(kSubsetOracleCap) + ", got " +
                          std::to_string(g.size()));
    }
    const auto succ = successor_masks(backward(kind) ? g.inverse() : g);
    const Mask full = full_mask(g.size());
    for (Mask a = 1; a < full; ++a) {
        if (invariant_by_masks(succ, a, is_one(kind))) {
            return a;
        }
    }
    return std::nullopt;
}

bool fast_forward(const FiniteRelation& h, MinimalityKind k)
{
    using enum MinimalityKind;
    switch (k) {
    case one:
    case one_plus:
    case one_omega:
        if (!h.domain_is_full()) {
            return false;
        }
        for (Vertex v = 0; v < h.size(); ++v) {
            if (!acyclic_without(h, v)) {
                return false;
            }
        }
        return true;
    case inf:
    case two_plus:
    case three_plus:
    case two_omega:
    case three_omega:
        return strongly_connected(h);
    default:
        throw ConstraintError("not a forward kind");
    }
}

} // namespace

// ------------------------------------------------------------ public API

Mask to_mask(const FiniteRelation& g, const std::vector<Vertex>& subset)
{
    if (g.size() > 31) {
        throw CapExceeded("bitmask subsets support n <= 31");
    }
    Mask m = 0;
    for (Vertex v : subset) {
        if (v < 0 || v >= g.size()) {
            throw OutOfRange("subset index " + std::to_string(v) + " outside [0, " + std::to_string(g.size()) +
                             ")");
        }
        m |= bit(v);
    }
    return m;
}

std::vector<Vertex> from_mask(Mask m)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < 32; ++v) {
        if (m & bit(v)) {
            out.push_back(v);
        }
    }
    return out;
}

bool is_invariant(const FiniteRelation& g, const std::vector<Vertex>& a, InvarianceKind kind)
{
    std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
    for (Vertex v : a) {
        if (v < 0 || v >= g.size()) {
            throw OutOfRange("subset index " + std::to_string(v) + " outside [0, " + std::to_string(g.size()) +
                             ")");
        }
        in[static_cast<std::size_t>(v)] = 1;
    }
    const FiniteRelation h = backward(kind) ? g.inverse() : g;
    for (Vertex x = 0; x < h.size(); ++x) {
        if (!in[static_cast<std::size_t>(x)]) {
            continue;
        }
        const auto& succ = h.successors(x);
        auto inside = [&](Vertex y) { return in[static_cast<std::size_t>(y)] != 0; };
        if (is_one(kind)) {
            if (!succ.empty() && std::none_of(succ.begin(), succ.end(), inside)) {
                return false;
            }
        } else if (!std::all_of(succ.begin(), succ.end(), inside)) {
            return false;
        }
    }
    return true;
}

bool is_invariant(const FiniteRelation& g, Mask a, InvarianceKind kind)
{
    if (g.size() > 31 || (a & ~full_mask(g.size())) != 0) {
        throw OutOfRange("subset mask outside the point set");
    }
    return invariant_by_masks(successor_masks(backward(kind) ? g.inverse() : g), a, is_one(kind));
}

std::optional<std::vector<Vertex>> least_invariant_subset(const FiniteRelation& g, InvarianceKind kind)
{
    if (auto m = least_invariant_mask(g, kind)) {
        return from_mask(*m);
    }
    return std::nullopt;
}

bool decide_minimal_oracle(const FiniteRelation& g, MinimalityKind kind)
{
    if (is_subset_kind(kind)) {
        return !least_invariant_mask(g, invariance_of(kind)).has_value();
    }
    const FiniteRelation h = is_backward_kind(kind) ? g.inverse() : g;
    return orbit_flag(orbit_summaries(h), forward_counterpart(kind), full_mask(g.size()));
}

FlagVector decide_all_oracle(const FiniteRelation& g)
{
    FlagVector flags{};
    for (auto k : {MinimalityKind::one, MinimalityKind::inf, MinimalityKind::one_back, MinimalityKind::inf_back}) {
        flags[index_of(k)] = decide_minimal_oracle(g, k);
    }
    const Mask full = full_mask(g.size());
    const auto fwd = orbit_summaries(g);
    const auto bwd = orbit_summaries(g.inverse());
    for (auto k : kAllKinds) {
        if (is_subset_kind(k)) {
            continue;
        }
        flags[index_of(k)] = orbit_flag(is_backward_kind(k) ? bwd : fwd, forward_counterpart(k), full);
    }
    return flags;
}

bool strongly_connected(const FiniteRelation& g)
{
    const auto fwd = reachable(g, 0);
    if (std::find(fwd.begin(), fwd.end(), 0) != fwd.end()) {
        return false;
    }
    const auto bwd = reachable(g.inverse(), 0);
    if (std::find(bwd.begin(), bwd.end(), 0) != bwd.end()) {
        return false;
    }
    // n = 1: reachability is trivial, the loop is what makes the walk infinite
    return g.size() > 1 || g.contains(0, 0);
}

bool decide_minimal_fast(const FiniteRelation& g, MinimalityKind kind)
{
    if (is_backward_kind(kind)) {
        return fast_forward(g.inverse(), forward_counterpart(kind));
    }
    return fast_forward(g, kind);
}

FlagVector decide_all_fast(const FiniteRelation& g)
{
    const FiniteRelation inv = g.inverse();
    bool sc = strongly_connected(g);
    bool one_f = fast_forward(g, MinimalityKind::one);
    bool one_b = fast_forward(inv, MinimalityKind::one);
    FlagVector flags{};
    for (auto k : kAllKinds) {
        const auto f = forward_counterpart(k);
        const bool is_one_type =
            f == MinimalityKind::one || f == MinimalityKind::one_plus || f == MinimalityKind::one_omega;
        // the inverse is strongly connected iff g is
        flags[index_of(k)] = is_one_type ? (is_backward_kind(k) ? one_b : one_f) : sc;
    }
    return flags;
}

std::optional<Witness> find_witness(const FiniteRelation& g, MinimalityKind kind)
{
    if (decide_minimal_fast(g, kind)) {
        return std::nullopt;
    }
    const FiniteRelation h = is_backward_kind(kind) ? g.inverse() : g;
    const auto f = forward_counterpart(kind);
    const int n = g.size();

    if (is_subset_kind(kind)) {
        Witness w;
        w.type = Witness::Type::subset;
        if (n <= kSubsetOracleCap) {
            auto m = least_invariant_mask(g, invariance_of(kind));
            if (!m) {
                throw Error("fast decider and subset oracle disagree");
            }
            w.subset = from_mask(*m);
            return w;
        }
        if (f == MinimalityKind::inf) {
            for (Vertex x = 0; x < n; ++x) {
                const auto r = reachable(h, x);
                if (std::find(r.begin(), r.end(), 0) != r.end()) {
                    for (Vertex v = 0; v < n; ++v) {
                        if (r[static_cast<std::size_t>(v)]) {
                            w.subset.push_back(v);
                        }
                    }
                    return w;
                }
            }
        } else {
            for (Vertex v = 0; v < n; ++v) {
                if (h.successors(v).empty()) {
                    w.subset = {v};
                    return w;
                }
            }
            for (Vertex v = 0; v < n; ++v) {
                auto c = cycle_avoiding(h, v);
                if (!c.empty()) {
                    std::sort(c.begin(), c.end());
                    c.erase(std::unique(c.begin(), c.end()), c.end());
                    w.subset = c;
                    return w;
                }
            }
        }
        throw Error("no subset witness found for a false flag");
    }

    // orbit kinds: a point without infinite walks refutes every orbit notion
    std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        on_cycle[static_cast<std::size_t>(v)] = !shortest_cycle(h, v).empty();
    }
    for (Vertex x = 0; x < n; ++x) {
        const auto r = reachable(h, x);
        bool live = false;
        for (Vertex v = 0; v < n; ++v) {
            live = live || (r[static_cast<std::size_t>(v)] && on_cycle[static_cast<std::size_t>(v)]);
        }
        if (!live) {
            Witness w;
            w.type = Witness::Type::dead_end;
            w.start = x;
            return w;
        }
    }

    Witness w;
    w.type = Witness::Type::avoiding;
    if (f == MinimalityKind::one_plus || f == MinimalityKind::one_omega) {
        for (Vertex v = 0; v < n; ++v) {
            auto c = cycle_avoiding(h, v);
            if (!c.empty()) {
                w.start = c.front();
                w.cycle = std::move(c);
                w.avoids = v;
                return w;
            }
        }
        throw Error("no avoiding cycle found for a false flag");
    }
    for (Vertex x = 0; x < n; ++x) {
        const auto r = reachable(h, x);
        auto miss = std::find(r.begin(), r.end(), 0);
        if (miss == r.end()) {
            continue;
        }
        w.start = x;
        w.avoids = static_cast<Vertex>(miss - r.begin());
        // walk to the nearest point lying on a cycle, then loop there
        for (Vertex c = 0; c < n; ++c) {
            if (!r[static_cast<std::size_t>(c)] || !on_cycle[static_cast<std::size_t>(c)]) {
                continue;
            }
            std::vector<Vertex> path = c == x ? std::vector<Vertex>{} : shortest_walk(h, x, c);
            if (c != x && path.empty()) {
                continue;
            }
            if (w.cycle.empty() || path.size() < w.path.size()) {
                w.path = std::move(path);
                w.cycle = shortest_cycle(h, c);
            }
        }
        return w;
    }
    throw Error("no unreachable point found for a false flag");
}

namespace {

void check_walk(const FiniteRelation& g, const std::vector<Vertex>& preperiod, const std::vector<Vertex>& cycle)
{
    if (cycle.empty()) {
        throw ConstraintError("walk cycle must be nonempty");
    }
    std::vector<Vertex> walk = preperiod;
    walk.insert(walk.end(), cycle.begin(), cycle.end());
    walk.push_back(cycle.front());
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        if (!g.contains(walk[i], walk[i + 1])) {
            throw ConstraintError("walk is not edge-consistent at (" + std::to_string(walk[i]) + "," +
                                  std::to_string(walk[i + 1]) + ")");
        }
    }
}

} // namespace

std::vector<Vertex> omega_set(const FiniteRelation& g, const std::vector<Vertex>& preperiod,
                              const std::vector<Vertex>& cycle)
{
    check_walk(g, preperiod, cycle);
    std::vector<Vertex> out = cycle;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> alpha_set(const FiniteRelation& g, const std::vector<Vertex>& preperiod,
                              const std::vector<Vertex>& cycle)
{
    return omega_set(g.inverse(), preperiod, cycle);
}

bool is_shift_minimal(const FiniteRelation& g)
{
    if (!g.domain_is_full() || !g.range_is_full()) {
        throw HypothesisViolated("shift minimality test requires p1(G) = p2(G) = X");
    }
    const FiniteRelation h = g.inverse();
    const int n = h.size();
    // essential vertices: those with an infinite walk, found by pruning sinks
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) {
                continue;
            }
            const auto& s = h.successors(v);
            if (std::none_of(s.begin(), s.end(), [&](Vertex w) { return alive[static_cast<std::size_t>(w)] != 0; })) {
                alive[static_cast<std::size_t>(v)] = 0;
                changed = true;
            }
        }
    }
    if (std::find(alive.begin(), alive.end(), 0) != alive.end()) {
        return false;
    }
    // whole graph must be one simple cycle through every vertex
    for (Vertex v = 0; v < n; ++v) {
        if (h.successors(v).size() != 1) {
            return false;
        }
    }
    Vertex v = 0;
    for (int k = 1; k < n; ++k) {
        v = h.successors(v).front();
        if (v == 0) {
            return false;
        }
    }
    return h.successors(v).front() == 0;
}

namespace {

MinimalityReport report_with(const FiniteRelation& g, const FlagVector& flags)
{
    MinimalityReport r;
    r.flags = flags;
    r.p1_full = g.domain_is_full();
    r.p2_full = g.range_is_full();
    for (auto k : kAllKinds) {
        if (!flags[index_of(k)]) {
            r.witnesses[index_of(k)] = find_witness(g, k);
        }
    }
    return r;
}

} // namespace

MinimalityReport classify(const FiniteRelation& g)
{
    return report_with(g, decide_all_fast(g));
}

MinimalityReport classify_oracle(const FiniteRelation& g)
{
    return report_with(g, decide_all_oracle(g));
}

} // namespace crdyn
