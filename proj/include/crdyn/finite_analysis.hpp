#pragma once

#include "crdyn/finite_relation.hpp"
#include "crdyn/minimality.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace crdyn {

/// Largest n for which subset kinds are decided by enumerating subsets.
inline constexpr int kSubsetOracleCap = 12;
/// Largest n for which orbit kinds are decided by the (vertex, visited set)
/// product-state search.
inline constexpr int kOrbitOracleCap = 8;

using Mask = std::uint32_t;

/// Bitmask of a point subset; throws OutOfRange for indices outside [0, n).
Mask to_mask(const FiniteRelation& g, const std::vector<Vertex>& subset);
std::vector<Vertex> from_mask(Mask m);

bool is_invariant(const FiniteRelation& g, const std::vector<Vertex>& a, InvarianceKind kind);
bool is_invariant(const FiniteRelation& g, Mask a, InvarianceKind kind);

/// Literal definition by exhaustion. Throws CapExceeded above the caps.
bool decide_minimal_oracle(const FiniteRelation& g, MinimalityKind kind);
FlagVector decide_all_oracle(const FiniteRelation& g);

/// Graph-theoretic decision procedures; agree with the oracle.
bool decide_minimal_fast(const FiniteRelation& g, MinimalityKind kind);
FlagVector decide_all_fast(const FiniteRelation& g);

/// Least proper nonempty invariant subset in bitmask order, if any.
/// Throws CapExceeded above kSubsetOracleCap.
std::optional<std::vector<Vertex>> least_invariant_subset(const FiniteRelation& g, InvarianceKind kind);

/// Witness for a false flag, nullopt when the flag is true.
std::optional<Witness> find_witness(const FiniteRelation& g, MinimalityKind kind);

/// Vertices visited infinitely often by the walk preperiod, cycle, cycle, ...
/// Throws ConstraintError if the cycle is empty or the walk leaves the relation.
std::vector<Vertex> omega_set(const FiniteRelation& g, const std::vector<Vertex>& preperiod,
                              const std::vector<Vertex>& cycle);
/// The same for a backward walk, i.e. a walk of the inverse relation.
std::vector<Vertex> alpha_set(const FiniteRelation& g, const std::vector<Vertex>& preperiod,
                              const std::vector<Vertex>& cycle);

/// Minimality of the one-sided vertex shift on infinite walks of the inverse
/// relation. Requires p1(G) = p2(G) = X, else throws HypothesisViolated.
bool is_shift_minimal(const FiniteRelation& g);

/// Flags from the fast deciders plus projections and witnesses.
MinimalityReport classify(const FiniteRelation& g);
/// Same report with flags taken from the oracle (within its caps).
MinimalityReport classify_oracle(const FiniteRelation& g);

/// Strong connectivity of the edge digraph (n = 1 needs the loop).
bool strongly_connected(const FiniteRelation& g);

} // namespace crdyn
