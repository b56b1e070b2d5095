#include "crdyn/operations.hpp"

#include "crdyn/error.hpp"
#include "crdyn/finite_analysis.hpp"

#include <algorithm>
#include <cmath>

namespace crdyn {

namespace {

Vertex as_vertex(double x)
{
    if (x != std::floor(x)) {
        throw ConstraintError("a finite start point must be an integer vertex");
    }
    return static_cast<Vertex>(x);
}

} // namespace

OrbitData compute_orbit(const Relation& rel, const OrbitRequest& req)
{
    OrbitData d;
    if (const auto* g = std::get_if<FiniteRelation>(&rel)) {
        const Vertex x0 = as_vertex(req.x0);
        const auto orbit = req.backward ? simulate_backward_orbit(*g, x0, req.steps, req.policy, req.seed)
                                        : simulate_orbit(*g, x0, req.steps, req.policy, req.seed);
        std::vector<bool> seen(static_cast<std::size_t>(g->size()), false);
        for (Vertex v : orbit.points) {
            d.points.push_back(v);
            seen[v] = true;
        }
        d.truncated = orbit.dead_end;
        // discrete topology: dense means every point is visited
        d.dense = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
        return d;
    }
    const auto& r = std::get<SegmentRelation>(rel);
    const auto orbit = req.backward ? simulate_backward_orbit(r, req.x0, req.steps, req.policy, req.seed)
                                    : simulate_orbit(r, req.x0, req.steps, req.policy, req.seed);
    d.points = orbit.points;
    d.truncated = orbit.dead_end;
    const auto diag = density(d.points);
    d.max_gap = diag.max_gap;
    d.dense = diag.dense_at(req.epsilon);
    return d;
}

Json orbit_to_json(const Relation& rel, const OrbitRequest& req, const OrbitData& data)
{
    const bool finite = std::holds_alternative<FiniteRelation>(rel);
    Json j;
    j["seed"] = req.seed;
    j["policy"] = std::string(to_string(req.policy));
    j["direction"] = req.backward ? "backward" : "forward";
    j["x0"] = finite ? Json(as_vertex(req.x0)) : Json(req.x0);
    j["steps"] = req.steps;
    j["epsilon"] = req.epsilon;
    j["max_gap"] = data.max_gap ? Json(*data.max_gap) : Json(nullptr);
    j["dense_at"] = data.dense;
    j["truncated"] = data.truncated;
    Json pts = Json::array();
    for (double x : data.points) {
        pts.push_back(finite ? Json(static_cast<Vertex>(x)) : Json(x));
    }
    j["points"] = std::move(pts);
    return j;
}

Json classify_to_json(const Relation& rel, const SegmentDiagnosticConfig& cfg)
{
    if (const auto* g = std::get_if<FiniteRelation>(&rel)) {
        return report_to_json(classify(*g));
    }
    return report_to_json(classify_segments(std::get<SegmentRelation>(rel), cfg));
}

Json witness_to_json(const Relation& rel, MinimalityKind kind, double proper_gap)
{
    const std::string name(to_string(kind));
    Json j;
    j["kind"] = name;
    if (const auto* g = std::get_if<FiniteRelation>(&rel)) {
        const auto w = find_witness(*g, kind);
        j["witness"] = w ? witness_to_json(*w) : Json(nullptr);
        if (!w) {
            j["message"] = "none found: the relation is " + name + "-minimal";
        }
        return j;
    }
    if (!is_subset_kind(kind)) {
        throw ConstraintError("segment witnesses are searched for the kinds 1, inf, 1back and infback only");
    }
    const auto w = find_segment_witness(std::get<SegmentRelation>(rel), kind, proper_gap);
    j["label"] = std::string(kDiagnosticLabel);
    j["witness"] = w ? interval_set_to_json(*w) : Json(nullptr);
    if (!w) {
        j["message"] = "none found in the candidate library";
    }
    return j;
}

Json closure_to_json(const Relation& rel, ClosureMode mode, std::optional<double> epsilon, double x0, int max_iter)
{
    const auto* r = std::get_if<SegmentRelation>(&rel);
    if (!r) {
        throw ConstraintError("closures are computed for segment relations");
    }
    const double eps = epsilon ? *epsilon : (mode == ClosureMode::inner ? 0.0 : 1e-3);
    check_unit(x0);
    const auto c = invariant_closure(*r, IntervalSet::point(x0), mode, eps, max_iter);
    Json j;
    j["intervals"] = interval_set_to_json(c.set);
    j["mode"] = std::string(to_string(c.mode));
    j["epsilon"] = c.epsilon;
    j["iterations"] = c.iterations;
    j["converged"] = c.converged;
    j["max_gap"] = c.set.max_gap();
    return j;
}

Json audit_config_to_json(const AuditConfig& c)
{
    Json j;
    j["n_max"] = c.n_max;
    j["exhaustive_n"] = c.exhaustive_n;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["functional_only"] = c.functional_only;
    return j;
}

Json audit_to_json(const AuditConfig& c, const AuditReport& rep)
{
    Json j;
    j["config"] = audit_config_to_json(c);
    j["exhaustive_instances"] = rep.exhaustive_instances;
    j["sampled_instances"] = rep.sampled_instances;
    Json checks;
    checks["fast_oracle_agreement"] = rep.agreement_checks;
    checks["implications"] = rep.implication_checks;
    checks["subset_invariance"] = rep.subset_checks;
    checks["shift_minimality"] = rep.shift_checks;
    checks["conjugacy"] = rep.conjugacy_checks;
    j["checks"] = std::move(checks);
    Json table = Json::array();
    for (const auto& i : implication_table()) {
        table.push_back(describe(i));
    }
    j["implications"] = std::move(table);
    Json v = Json::array();
    for (const auto& x : rep.violations) {
        v.push_back({{"instance", x.instance}, {"check", x.check}, {"detail", x.detail}});
    }
    j["violation_count"] = rep.violations.size();
    j["violations"] = std::move(v);
    return j;
}

KindPair parse_pair(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ParseError("a kind pair is written stronger:weaker, e.g. 3plus:2plus");
    }
    return {parse_kind(text.substr(0, colon)), parse_kind(text.substr(colon + 1))};
}

Json probe_to_json(const AuditConfig& c, const ProbeReport& rep)
{
    Json j;
    j["config"] = audit_config_to_json(c);
    j["flags_from"] = "oracle";
    j["instances"] = rep.instances;
    Json rows = Json::array();
    for (const auto& p : rep.pairs) {
        Json r;
        r["stronger"] = std::string(to_string(p.pair.first));
        r["weaker"] = std::string(to_string(p.pair.second));
        r["findings"] = p.findings;
        Json ex = Json::array();
        for (const auto& e : p.examples) {
            ex.push_back(Json::parse(e));
        }
        r["examples"] = std::move(ex);
        rows.push_back(std::move(r));
    }
    j["pairs"] = std::move(rows);
    j["notice"] = rep.notice.empty() ? Json(nullptr) : Json(rep.notice);
    return j;
}

ConjugateOutcome conjugate(const Relation& rel, const Homeomorphism& phi, const SegmentDiagnosticConfig& cfg)
{
    const Relation moved = transport(rel, phi);
    ConjugateOutcome out;
    Json& j = out.json;
    j["transported"] = relation_to_json(moved);
    std::array<bool, kKindCount> equal{};
    bool all_equal = false;
    bool p1 = false;
    bool p2 = false;
    if (const auto* g = std::get_if<FiniteRelation>(&rel)) {
        const auto rep = check_conjugacy_invariance(*g, std::get<Permutation>(phi));
        equal = rep.kind_equal;
        out.finite = true;
        p1 = rep.p1_preserved;
        p2 = rep.p2_preserved;
        j["original"] = report_to_json(rep.original);
        j["image"] = report_to_json(rep.transported);
        all_equal = rep.all_equal;
    } else {
        const auto rep =
            check_conjugacy_invariance(std::get<SegmentRelation>(rel), std::get<PLHomeomorphism>(phi), cfg);
        equal = rep.kind_equal;
        p1 = rep.p1_preserved;
        p2 = rep.p2_preserved;
        j["label"] = std::string(kDiagnosticLabel);
        j["original"] = report_to_json(rep.original);
        j["image"] = report_to_json(rep.transported);
        all_equal = rep.all_equal;
    }
    Json eq = Json::object();
    for (auto k : kAllKinds) {
        eq[std::string(to_string(k))] = equal[index_of(k)];
    }
    j["kind_equal"] = std::move(eq);
    j["all_equal"] = all_equal;
    j["p1_preserved"] = p1;
    j["p2_preserved"] = p2;
    out.consistent = all_equal && p1 && p2;
    return out;
}

} // namespace crdyn
