#include "crdyn/finite_relation.hpp"

#include "crdyn/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace crdyn {

FiniteRelation::FiniteRelation(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
{
    if (n_ < 1) {
        throw ConstraintError("relation needs at least one point, got n=" + std::to_string(n_));
    }
    if (edges_.empty()) {
        throw ConstraintError("relation must be nonempty");
    }
    for (const auto& [x, y] : edges_) {
        check_vertex(x);
        check_vertex(y);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    succ_.assign(static_cast<std::size_t>(n_), {});
    pred_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& [x, y] : edges_) {
        succ_[static_cast<std::size_t>(x)].push_back(y);
    }
    for (const auto& [x, y] : edges_) {
        pred_[static_cast<std::size_t>(y)].push_back(x);
    }
    // succ_ lists are sorted because edges_ is; pred_ lists are filled in x order
}

void FiniteRelation::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_) {
        throw OutOfRange("point " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    }
}

FiniteRelation FiniteRelation::full(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return {n, std::move(e)};
}

FiniteRelation FiniteRelation::identity(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, i);
    }
    return {n, std::move(e)};
}

FiniteRelation FiniteRelation::cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
    }
    return {n, std::move(e)};
}

FiniteRelation FiniteRelation::functional(std::span<const int> f)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < f.size(); ++i) {
        e.emplace_back(static_cast<int>(i), f[i]);
    }
    return {static_cast<int>(f.size()), std::move(e)};
}

FiniteRelation FiniteRelation::star(int n, Vertex center)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, center);
        e.emplace_back(center, i);
    }
    return {n, std::move(e)};
}

bool FiniteRelation::contains(Vertex x, Vertex y) const
{
    check_vertex(x);
    check_vertex(y);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{x, y});
}

const std::vector<Vertex>& FiniteRelation::successors(Vertex x) const
{
    check_vertex(x);
    return succ_[static_cast<std::size_t>(x)];
}

const std::vector<Vertex>& FiniteRelation::predecessors(Vertex y) const
{
    check_vertex(y);
    return pred_[static_cast<std::size_t>(y)];
}

FiniteRelation FiniteRelation::inverse() const
{
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (const auto& [x, y] : edges_) {
        e.emplace_back(y, x);
    }
    return {n_, std::move(e)};
}

std::vector<Vertex> FiniteRelation::domain() const
{
    std::vector<Vertex> out;
    for (int v = 0; v < n_; ++v) {
        if (!succ_[static_cast<std::size_t>(v)].empty()) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Vertex> FiniteRelation::range() const
{
    std::vector<Vertex> out;
    for (int v = 0; v < n_; ++v) {
        if (!pred_[static_cast<std::size_t>(v)].empty()) {
            out.push_back(v);
        }
    }
    return out;
}

bool FiniteRelation::domain_is_full() const
{
    return std::none_of(succ_.begin(), succ_.end(), [](const auto& s) { return s.empty(); });
}

bool FiniteRelation::range_is_full() const
{
    return std::none_of(pred_.begin(), pred_.end(), [](const auto& s) { return s.empty(); });
}

std::uint64_t count_walks(const FiniteRelation& g, int m)
{
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const auto n = static_cast<std::size_t>(g.size());
    // ways[v] = number of walks of the current length ending at v
    std::vector<std::uint64_t> ways(n, 1);
    for (int step = 0; step < m; ++step) {
        std::vector<std::uint64_t> next(n, 0);
        for (const auto& [x, y] : g.edges()) {
            auto& slot = next[static_cast<std::size_t>(y)];
            auto add = ways[static_cast<std::size_t>(x)];
            slot = (kMax - slot < add) ? kMax : slot + add;
        }
        ways = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto w : ways) {
        total = (kMax - total < w) ? kMax : total + w;
    }
    return total;
}

std::vector<std::vector<Vertex>> mahavier_paths(const FiniteRelation& g, int m, std::uint64_t cap)
{
    if (m < 1) {
        throw ConstraintError("Mahavier product order must be >= 1");
    }
    const auto total = count_walks(g, m);
    if (total > cap) {
        throw CapExceeded("Mahavier product has " + std::to_string(total) + " sequences, cap is " +
                          std::to_string(cap));
    }
    std::vector<std::vector<Vertex>> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<Vertex> path;
    path.reserve(static_cast<std::size_t>(m) + 1);

    auto extend = [&](auto&& self) -> void {
        if (path.size() == static_cast<std::size_t>(m) + 1) {
            out.push_back(path);
            return;
        }
        for (Vertex y : g.successors(path.back())) {
            path.push_back(y);
            self(self);
            path.pop_back();
        }
    };
    for (Vertex x = 0; x < g.size(); ++x) {
        path.assign(1, x);
        extend(extend);
    }
    return out;
}

} // namespace crdyn
