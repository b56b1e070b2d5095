#pragma once

// JSON-level operations shared by the command line and the Python module.

#include "crdyn/audit.hpp"
#include "crdyn/conjugacy.hpp"
#include "crdyn/corpus.hpp"
#include "crdyn/interval_analysis.hpp"
#include "crdyn/orbit.hpp"
#include "crdyn/relation_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crdyn {

struct OrbitRequest {
    double x0 = 0.0;  // a vertex index for finite relations
    int steps = 10000;
    OrbitPolicy policy = OrbitPolicy::first;
    std::uint64_t seed = 0;
    bool backward = false;
    double epsilon = kDefaultDensityEpsilon;
};

struct OrbitData {
    std::vector<double> points;  // vertices are stored as whole numbers
    bool truncated = false;
    std::optional<double> max_gap;  // segments only
    bool dense = false;             // finite: every vertex visited
};

OrbitData compute_orbit(const Relation& rel, const OrbitRequest& req);
Json orbit_to_json(const Relation& rel, const OrbitRequest& req, const OrbitData& data);

/// Finite report, or the labeled segment diagnostic.
Json classify_to_json(const Relation& rel, const SegmentDiagnosticConfig& cfg = {});

/// Segment relations accept the four subset kinds only.
Json witness_to_json(const Relation& rel, MinimalityKind kind, double proper_gap = kDefaultDensityEpsilon);

Json closure_to_json(const Relation& rel, ClosureMode mode, std::optional<double> epsilon, double x0,
                     int max_iter);

Json audit_config_to_json(const AuditConfig& c);
Json audit_to_json(const AuditConfig& c, const AuditReport& rep);

/// "stronger:weaker", e.g. "3plus:2plus".
KindPair parse_pair(const std::string& text);
Json probe_to_json(const AuditConfig& c, const ProbeReport& rep);

struct ConjugateOutcome {
    Json json;
    bool finite = false;
    bool consistent = false;  // every flag and both projections agree
};
ConjugateOutcome conjugate(const Relation& rel, const Homeomorphism& phi, const SegmentDiagnosticConfig& cfg = {});

} // namespace crdyn
