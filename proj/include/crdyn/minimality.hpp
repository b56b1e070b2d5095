#pragma once

#include "crdyn/finite_relation.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace crdyn {

enum class InvarianceKind { forward_1, forward_inf, backward_1, backward_inf };

inline constexpr std::array<InvarianceKind, 4> kAllInvarianceKinds = {
    InvarianceKind::forward_1, InvarianceKind::forward_inf, InvarianceKind::backward_1,
    InvarianceKind::backward_inf};

/// The sixteen minimality notions, in report order.
enum class MinimalityKind : std::uint8_t {
    one,          // 1
    inf,          // infinity
    one_plus,     // 1 (+)
    two_plus,     // 2 (+)
    three_plus,   // 3 (+)
    one_back,     // 1-backward
    inf_back,     // infinity-backward
    one_minus,    // 1 (-)
    two_minus,    // 2 (-)
    three_minus,  // 3 (-)
    one_omega,
    two_omega,
    three_omega,
    one_alpha,
    two_alpha,
    three_alpha,
};

inline constexpr std::size_t kKindCount = 16;

inline constexpr std::array<MinimalityKind, kKindCount> kAllKinds = {
    MinimalityKind::one,        MinimalityKind::inf,         MinimalityKind::one_plus,
    MinimalityKind::two_plus,   MinimalityKind::three_plus,  MinimalityKind::one_back,
    MinimalityKind::inf_back,   MinimalityKind::one_minus,   MinimalityKind::two_minus,
    MinimalityKind::three_minus, MinimalityKind::one_omega,  MinimalityKind::two_omega,
    MinimalityKind::three_omega, MinimalityKind::one_alpha,  MinimalityKind::two_alpha,
    MinimalityKind::three_alpha};

/// Report key: "1", "inf", "1plus", ..., "3alpha".
std::string_view to_string(MinimalityKind k);
std::string_view to_string(InvarianceKind k);
/// Throws ConstraintError for an unknown name.
MinimalityKind parse_kind(std::string_view name);
InvarianceKind parse_invariance(std::string_view name);

/// Kinds decided by a proper nonempty invariant subset.
bool is_subset_kind(MinimalityKind k);
/// Kinds defined on the inverse relation.
bool is_backward_kind(MinimalityKind k);
/// The forward kind whose definition applied to the inverse relation gives k;
/// forward kinds map to themselves.
MinimalityKind forward_counterpart(MinimalityKind k);
/// Invariance notion whose proper subsets refute a subset kind.
InvarianceKind invariance_of(MinimalityKind k);

inline std::size_t index_of(MinimalityKind k) { return static_cast<std::size_t>(k); }

using FlagVector = std::array<bool, kKindCount>;

/// Why a minimality flag is false on a finite relation.
struct Witness {
    enum class Type {
        subset,       // proper nonempty invariant subset
        dead_end,     // a point with no forward (backward) orbit
        avoiding,     // an orbit that never visits `avoids` from some time on
    };
    Type type = Type::subset;
    std::vector<Vertex> subset;  // subset witnesses
    Vertex start = -1;           // dead_end and avoiding
    std::vector<Vertex> path;    // avoiding: walk from start to the cycle entry
    std::vector<Vertex> cycle;   // avoiding: repeated cycle
    Vertex avoids = -1;          // avoiding: a vertex outside the orbit/limit set

    bool operator==(const Witness&) const = default;
};

struct MinimalityReport {
    FlagVector flags{};
    bool p1_full = false;
    bool p2_full = false;
    std::array<std::optional<Witness>, kKindCount> witnesses{};

    [[nodiscard]] bool flag(MinimalityKind k) const { return flags[index_of(k)]; }
};

} // namespace crdyn
