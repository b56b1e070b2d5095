#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace crdyn {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// A nonempty relation on the discrete space {0, ..., n-1}. Every subset of a
/// finite discrete space is closed, so any nonempty edge set qualifies.
///
/// Edges are stored sorted and deduplicated; adjacency lists are kept in both
/// directions. Instances are immutable.
class FiniteRelation {
public:
    /// Throws ConstraintError for n < 1 or an empty edge list, OutOfRange for
    /// an endpoint outside [0, n).
    FiniteRelation(int n, std::vector<Edge> edges);

    /// All n*n pairs.
    static FiniteRelation full(int n);
    /// The diagonal {(i,i)}.
    static FiniteRelation identity(int n);
    /// i -> i+1 mod n.
    static FiniteRelation cycle(int n);
    /// The graph of a self-map, i -> f[i].
    static FiniteRelation functional(std::span<const int> f);
    /// (X x {c}) u ({c} x X), the finite analogue of a cross-shaped relation.
    static FiniteRelation star(int n, Vertex center);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

    [[nodiscard]] bool contains(Vertex x, Vertex y) const;
    [[nodiscard]] const std::vector<Vertex>& successors(Vertex x) const;
    [[nodiscard]] const std::vector<Vertex>& predecessors(Vertex y) const;

    [[nodiscard]] FiniteRelation inverse() const;

    /// p1(G) and p2(G), sorted.
    [[nodiscard]] std::vector<Vertex> domain() const;
    [[nodiscard]] std::vector<Vertex> range() const;
    [[nodiscard]] bool domain_is_full() const;
    [[nodiscard]] bool range_is_full() const;

    bool operator==(const FiniteRelation& other) const
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(Vertex v) const;

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> succ_;
    std::vector<std::vector<Vertex>> pred_;
};

/// Default cap on the number of sequences `mahavier_paths` will materialize.
inline constexpr std::uint64_t kMahavierCap = 1'000'000;

/// Number of walks with m edges, saturating at UINT64_MAX.
std::uint64_t count_walks(const FiniteRelation& g, int m);

/// All (x_1, ..., x_{m+1}) with every consecutive pair an edge, in
/// lexicographic order. Throws CapExceeded when the count exceeds `cap`.
std::vector<std::vector<Vertex>> mahavier_paths(const FiniteRelation& g, int m,
                                                std::uint64_t cap = kMahavierCap);

} // namespace crdyn
