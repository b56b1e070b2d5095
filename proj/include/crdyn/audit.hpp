#pragma once

#include "crdyn/conjugacy.hpp"
#include "crdyn/finite_analysis.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace crdyn {

/// premise => conclusion between two minimality flags. An equivalence is two rows.
struct Implication {
    MinimalityKind premise;
    MinimalityKind conclusion;
};

/// The implications every classification must satisfy.
const std::vector<Implication>& implication_table();
std::string describe(const Implication& i);  // e.g. "1 => inf"

/// Kinds whose truth forces both projections to be full.
const std::vector<MinimalityKind>& surjective_kinds();

using FastDecider = std::function<bool(const FiniteRelation&, MinimalityKind)>;

struct AuditConfig {
    int n_max = 7;
    int exhaustive_n = 3;
    int samples = 10000;
    std::uint64_t seed = 0;
    bool functional_only = false;  // restrict instances to graphs of self-maps
    /// Replaces decide_minimal_fast; a test hook for the harness itself.
    FastDecider fast_decider;
};

/// Throws ConstraintError unless 1 <= exhaustive_n <= n_max <= kOrbitOracleCap,
/// samples >= 0, and exhaustive_n <= 4 (6 for self-maps only).
void validate(const AuditConfig& c);

struct AuditViolation {
    std::string instance;  // relation JSON
    std::string check;
    std::string detail;
};

struct AuditReport {
    std::size_t exhaustive_instances = 0;
    std::size_t sampled_instances = 0;
    std::size_t agreement_checks = 0;    // fast vs oracle, per kind
    std::size_t implication_checks = 0;  // table rows and projections
    std::size_t subset_checks = 0;       // inf-invariant => 1-invariant, per subset
    std::size_t shift_checks = 0;        // shift minimal => 1-minimal
    std::size_t conjugacy_checks = 0;    // random relabelling keeps the flags
    std::vector<AuditViolation> violations;  // sorted by instance, then check
};

/// Every nonempty relation with n <= exhaustive_n, then `samples` random
/// relations with exhaustive_n < n <= n_max (1 <= n <= n_max when
/// exhaustive_n == n_max).
std::vector<FiniteRelation> audit_instances(const AuditConfig& c);

AuditReport run_audit(const AuditConfig& c);

/// Random relation: Bernoulli edges, a self-map plus extra edges, or an
/// n-cycle plus extra edges, chosen uniformly.
FiniteRelation random_relation(std::mt19937_64& rng, int n);
/// Graph of a random self-map.
FiniteRelation random_functional(std::mt19937_64& rng, int n);
Permutation random_permutation(std::mt19937_64& rng, int n);

/// All n^n graphs of self-maps of {0..n-1}.
std::vector<FiniteRelation> all_functional(int n);
/// Whether the self-map graph is a single cycle through all n points.
bool is_single_cycle(const FiniteRelation& g);

struct CollapseReport {
    std::size_t maps = 0;
    std::size_t constant = 0;         // all sixteen oracle flags equal
    std::size_t all_true = 0;
    std::size_t matches_cycle = 0;    // all flags true exactly for the single n-cycle
    std::size_t fast_agrees = 0;
    std::vector<std::string> failures;  // relation JSON
};
CollapseReport functional_collapse(int n);

struct ConjugacySampleReport {
    std::size_t pairs = 0;
    std::size_t equal = 0;
    std::size_t projections_preserved = 0;
    std::size_t round_trips = 0;
    std::vector<std::string> failures;
};
/// Random (relation, permutation) pairs with 1 <= n <= n_max.
ConjugacySampleReport conjugacy_sample(int pairs, int n_max, std::uint64_t seed);

struct SubsetTransportReport {
    std::size_t cases = 0;  // (relation, permutation, subset)
    std::size_t preserved = 0;
};
/// Every relation with n <= n_max, every permutation, every subset.
SubsetTransportReport subset_transport_exhaustive(int n_max);

/// (stronger, weaker): a finding is an instance with the stronger flag true
/// and the weaker false.
using KindPair = std::pair<MinimalityKind, MinimalityKind>;
std::vector<KindPair> default_probe_pairs();

struct ProbePairResult {
    KindPair pair;
    std::size_t findings = 0;
    std::vector<std::string> examples;  // first few relation JSONs
};

struct ProbeReport {
    std::size_t instances = 0;
    std::vector<ProbePairResult> pairs;
    /// Set when no pair has findings.
    std::string notice;
};

/// Flags come from the oracle. Uses the instance set of AuditConfig.
ProbeReport run_probe(const AuditConfig& c, const std::vector<KindPair>& pairs);

extern const char* const kFiniteCollapseNotice;

} // namespace crdyn
