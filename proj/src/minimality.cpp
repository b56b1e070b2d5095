#include "crdyn/minimality.hpp"

#include "crdyn/error.hpp"

#include <string>

namespace crdyn {

namespace {

constexpr std::array<std::string_view, kKindCount> kKindNames = {
    "1",      "inf",    "1plus",  "2plus",  "3plus",  "1back",  "infback", "1minus",
    "2minus", "3minus", "1omega", "2omega", "3omega", "1alpha", "2alpha",  "3alpha"};

constexpr std::array<std::string_view, 4> kInvarianceNames = {"forward-1", "forward-inf", "backward-1",
                                                              "backward-inf"};

} // namespace

std::string_view to_string(MinimalityKind k)
{
    return kKindNames[index_of(k)];
}

std::string_view to_string(InvarianceKind k)
{
    return kInvarianceNames[static_cast<std::size_t>(k)];
}

MinimalityKind parse_kind(std::string_view name)
{
    for (std::size_t i = 0; i < kKindCount; ++i) {
        if (kKindNames[i] == name) {
            return kAllKinds[i];
        }
    }
    throw ConstraintError("unknown minimality kind '" + std::string(name) + "'");
}

InvarianceKind parse_invariance(std::string_view name)
{
    for (std::size_t i = 0; i < kInvarianceNames.size(); ++i) {
        if (kInvarianceNames[i] == name) {
            return kAllInvarianceKinds[i];
        }
    }
    throw ConstraintError("unknown invariance kind '" + std::string(name) + "'");
}

bool is_subset_kind(MinimalityKind k)
{
    using enum MinimalityKind;
    return k == one || k == inf || k == one_back || k == inf_back;
}

bool is_backward_kind(MinimalityKind k)
{
    return (index_of(k) >= index_of(MinimalityKind::one_back) && index_of(k) <= index_of(MinimalityKind::three_minus)) ||
           index_of(k) >= index_of(MinimalityKind::one_alpha);
}

MinimalityKind forward_counterpart(MinimalityKind k)
{
    using enum MinimalityKind;
    switch (k) {
    case one_back: return one;
    case inf_back: return inf;
    case one_minus: return one_plus;
    case two_minus: return two_plus;
    case three_minus: return three_plus;
    case one_alpha: return one_omega;
    case two_alpha: return two_omega;
    case three_alpha: return three_omega;
    default: return k;
    }
}

InvarianceKind invariance_of(MinimalityKind k)
{
    using enum MinimalityKind;
    switch (k) {
    case one: return InvarianceKind::forward_1;
    case inf: return InvarianceKind::forward_inf;
    case one_back: return InvarianceKind::backward_1;
    case inf_back: return InvarianceKind::backward_inf;
    default: throw ConstraintError("kind '" + std::string(to_string(k)) + "' is not a subset kind");
    }
}

} // namespace crdyn
