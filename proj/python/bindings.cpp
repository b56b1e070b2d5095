// Python module _core. Relations and reports cross the boundary as JSON text;
// the crdyn package decodes them.

#include "crdyn/error.hpp"
#include "crdyn/operations.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace crdyn;

namespace {

std::string text(const Json& j)
{
    return dump(j);
}

SegmentDiagnosticConfig diagnostic(int steps, double epsilon, std::uint64_t seed)
{
    SegmentDiagnosticConfig c;
    c.steps = steps;
    c.epsilon = epsilon;
    c.seed = seed;
    return c;
}

AuditConfig audit_config(int n_max, int exhaustive_n, int samples, std::uint64_t seed, bool functional_only)
{
    AuditConfig c;
    c.n_max = n_max;
    c.exhaustive_n = exhaustive_n;
    c.samples = samples;
    c.seed = seed;
    c.functional_only = functional_only;
    return c;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "minimality analysis of closed relations";

    // later registrations are tried first, so the subclasses win over Error
    auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<ConstraintError>(m, "ConstraintError", error.ptr());

    m.def("kinds", [] {
        std::vector<std::string> names;
        for (auto k : kAllKinds) {
            names.emplace_back(to_string(k));
        }
        return names;
    });

    m.def("serialize", [](const std::string& relation) { return serialize_relation(parse_relation(relation)); },
          py::arg("relation"), "canonical form of a relation file");

    m.def(
        "classify",
        [](const std::string& relation, int steps, double epsilon, std::uint64_t seed) {
            const Relation rel = parse_relation(relation);
            py::gil_scoped_release release;
            return text(classify_to_json(rel, diagnostic(steps, epsilon, seed)));
        },
        py::arg("relation"), py::arg("steps") = 2000, py::arg("epsilon") = kDefaultDensityEpsilon,
        py::arg("seed") = 0);

    m.def(
        "orbit",
        [](const std::string& relation, double x0, int steps, const std::string& policy, std::uint64_t seed,
           const std::string& direction, double epsilon) {
            if (direction != "forward" && direction != "backward") {
                throw ParseError("direction must be forward or backward");
            }
            const Relation rel = parse_relation(relation);
            const OrbitRequest req{x0, steps, parse_policy(policy), seed, direction == "backward", epsilon};
            return text(orbit_to_json(rel, req, compute_orbit(rel, req)));
        },
        py::arg("relation"), py::arg("x0") = 0.0, py::arg("steps") = 10000, py::arg("policy") = "first",
        py::arg("seed") = 0, py::arg("direction") = "forward", py::arg("epsilon") = kDefaultDensityEpsilon);

    m.def(
        "witness",
        [](const std::string& relation, const std::string& kind, double epsilon) {
            return text(witness_to_json(parse_relation(relation), parse_kind(kind), epsilon));
        },
        py::arg("relation"), py::arg("kind"), py::arg("epsilon") = kDefaultDensityEpsilon);

    m.def(
        "closure",
        [](const std::string& relation, const std::string& mode, double x0, std::optional<double> epsilon,
           int max_iter) {
            return text(closure_to_json(parse_relation(relation), parse_mode(mode), epsilon, x0, max_iter));
        },
        py::arg("relation"), py::arg("mode") = "inner", py::arg("x0") = 0.0, py::arg("epsilon") = py::none(),
        py::arg("max_iter") = 200);

    m.def(
        "audit",
        [](int n_max, int exhaustive_n, int samples, std::uint64_t seed, bool functional_only) {
            const auto c = audit_config(n_max, exhaustive_n, samples, seed, functional_only);
            py::gil_scoped_release release;
            return text(audit_to_json(c, run_audit(c)));
        },
        py::arg("n_max") = 7, py::arg("exhaustive_n") = 3, py::arg("samples") = 10000, py::arg("seed") = 0,
        py::arg("functional_only") = false);

    m.def(
        "probe",
        [](const std::vector<std::string>& pairs, int n_max, int exhaustive_n, int samples, std::uint64_t seed,
           bool functional_only) {
            const auto c = audit_config(n_max, exhaustive_n, samples, seed, functional_only);
            std::vector<KindPair> parsed;
            for (const auto& p : pairs) {
                parsed.push_back(parse_pair(p));
            }
            if (parsed.empty()) {
                parsed = default_probe_pairs();
            }
            py::gil_scoped_release release;
            return text(probe_to_json(c, run_probe(c, parsed)));
        },
        py::arg("pairs") = std::vector<std::string>{}, py::arg("n_max") = 7, py::arg("exhaustive_n") = 3,
        py::arg("samples") = 10000, py::arg("seed") = 0, py::arg("functional_only") = false);

    m.def(
        "conjugate",
        [](const std::string& relation, const std::string& phi, int steps, double epsilon, std::uint64_t seed) {
            return text(conjugate(parse_relation(relation), parse_homeomorphism(phi), diagnostic(steps, epsilon, seed))
                            .json);
        },
        py::arg("relation"), py::arg("phi"), py::arg("steps") = 2000, py::arg("epsilon") = kDefaultDensityEpsilon,
        py::arg("seed") = 0);

    m.def("corpus_names", &example_names);

    m.def(
        "corpus_dump",
        [](const std::string& name, int depth, double lambda) {
            return serialize_relation(build_example(name, {lambda, depth}).relation);
        },
        py::arg("name"), py::arg("depth") = 10, py::arg("lambda_") = default_lambda());

    m.def(
        "corpus_verify",
        [](const std::string& name, int depth, double lambda, int steps, double epsilon, std::uint64_t seed) {
            const auto ex = build_example(name, {lambda, depth});
            Json rows = Json::array();
            for (const auto& f : verify_example(ex, {steps, epsilon, seed})) {
                rows.push_back(
                    {{"statement", f.statement}, {"source", f.source}, {"passed", f.passed}, {"detail", f.detail}});
            }
            return text(rows);
        },
        py::arg("name"), py::arg("depth") = 10, py::arg("lambda_") = default_lambda(), py::arg("steps") = 10000,
        py::arg("epsilon") = 1e-2, py::arg("seed") = 0);

    m.def(
        "max_gap", [](const std::vector<double>& points) { return density(points).max_gap; }, py::arg("points"),
        "largest uncovered gap of [0,1] left by the points");
}
