#include "crdyn/error.hpp"
#include "crdyn/operations.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace crdyn;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitConstraint = 3;
constexpr int kExitViolation = 4;

void print(const Json& j)
{
    std::cout << dump(j, 2) << '\n';
}

struct OrbitOptions {
    std::string input;
    double x0 = 0.0;
    int steps = 10000;
    std::string policy = "first";
    std::uint64_t seed = 0;
    std::string direction = "forward";
    double epsilon = kDefaultDensityEpsilon;
    bool csv = false;

    [[nodiscard]] OrbitRequest request() const
    {
        return {x0, steps, parse_policy(policy), seed, direction == "backward", epsilon};
    }
};

void add_orbit_flags(CLI::App* cmd, OrbitOptions& o)
{
    cmd->add_option("--input", o.input, "relation file")->required();
    cmd->add_option("--x0", o.x0, "start point (a vertex index for finite relations)");
    cmd->add_option("--steps", o.steps, "number of steps");
    cmd->add_option("--policy", o.policy, "successor choice")
        ->check(CLI::IsMember({"first", "random", "greedy"}));
    cmd->add_option("--seed", o.seed, "seed of the random policy");
    cmd->add_option("--direction", o.direction, "forward or backward")
        ->check(CLI::IsMember({"forward", "backward"}));
}

void print_orbit_csv(const OrbitData& d)
{
    std::cout << "step,x\n";
    for (std::size_t k = 0; k < d.points.size(); ++k) {
        std::cout << k << ',' << format_number(d.points[k]) << '\n';
    }
}

int cmd_classify(const std::string& input, const SegmentDiagnosticConfig& cfg)
{
    print(classify_to_json(read_relation_file(input), cfg));
    return 0;
}

int cmd_orbit(const OrbitOptions& o)
{
    const Relation rel = read_relation_file(o.input);
    const OrbitRequest req = o.request();
    const OrbitData d = compute_orbit(rel, req);
    if (o.csv) {
        print_orbit_csv(d);
    } else {
        print(orbit_to_json(rel, req, d));
    }
    return 0;
}

int cmd_witness(const std::string& input, const std::string& kind_name, double proper_gap)
{
    const Relation rel = read_relation_file(input);
    print(witness_to_json(rel, parse_kind(kind_name), proper_gap));
    return 0;
}

int cmd_audit(const AuditConfig& c)
{
    const auto rep = run_audit(c);
    print(audit_to_json(c, rep));
    return rep.violations.empty() ? 0 : kExitViolation;
}

int cmd_probe(const AuditConfig& c, const std::vector<std::string>& pair_args)
{
    std::vector<KindPair> pairs;
    for (const auto& p : pair_args) {
        pairs.push_back(parse_pair(p));
    }
    if (pairs.empty()) {
        pairs = default_probe_pairs();
    }
    print(probe_to_json(c, run_probe(c, pairs)));
    return 0;
}

int cmd_conjugate(const std::string& input, const std::string& phi_file, const SegmentDiagnosticConfig& cfg)
{
    const auto out = conjugate(read_relation_file(input), read_homeomorphism_file(phi_file), cfg);
    print(out.json);
    // a finite mismatch contradicts conjugacy invariance; segment evidence is only diagnostic
    return out.finite && !out.consistent ? kExitViolation : 0;
}

int cmd_corpus_list(const CorpusParameters& params)
{
    for (const auto& name : example_names()) {
        const auto ex = build_example(name, params);
        Json j;
        j["name"] = name;
        j["relation"] = relation_to_json(ex.relation);
        std::cout << dump(j) << '\n';
    }
    return 0;
}

int cmd_corpus_dump(const std::string& name, const CorpusParameters& params)
{
    std::cout << serialize_relation(build_example(name, params).relation) << '\n';
    return 0;
}

int cmd_corpus_verify(const std::string& name, const CorpusParameters& params, const VerifyConfig& vc)
{
    std::vector<std::string> names = name.empty() ? example_names() : std::vector<std::string>{name};
    bool ok = true;
    for (const auto& n : names) {
        const auto ex = build_example(n, params);
        std::cout << ex.name << '\n';
        for (const auto& f : verify_example(ex, vc)) {
            ok = ok && f.passed;
            std::cout << "  " << (f.passed ? "PASS" : "FAIL") << ' ' << f.statement << " [" << f.source << "]";
            if (!f.detail.empty()) {
                std::cout << " | " << f.detail;
            }
            std::cout << '\n';
        }
        if (!ex.note.empty()) {
            std::cout << "  note: " << ex.note << '\n';
        }
    }
    return ok ? 0 : kExitViolation;
}

int cmd_emit_plot(const std::string& what, const OrbitOptions& o)
{
    const Relation rel = read_relation_file(o.input);
    if (what == "orbit") {
        print_orbit_csv(compute_orbit(rel, o.request()));
        return 0;
    }
    std::cout << "piece,x,y\n";
    if (const auto* g = std::get_if<FiniteRelation>(&rel)) {
        std::size_t k = 0;
        for (const auto& [x, y] : g->edges()) {
            std::cout << k++ << ',' << x << ',' << y << '\n';
        }
        return 0;
    }
    const auto& r = std::get<SegmentRelation>(rel);
    for (std::size_t k = 0; k < r.segments().size(); ++k) {
        const auto& s = r.segments()[k];
        std::cout << k << ',' << format_number(s.x1) << ',' << format_number(s.y1) << '\n';
        std::cout << k << ',' << format_number(s.x2) << ',' << format_number(s.y2) << '\n';
    }
    return 0;
}

int cmd_closure(const std::string& input, const std::string& mode, std::optional<double> epsilon, double x0,
                int max_iter)
{
    print(closure_to_json(read_relation_file(input), parse_mode(mode), epsilon, x0, max_iter));
    return 0;
}

void add_audit_flags(CLI::App* cmd, AuditConfig& c)
{
    cmd->add_option("--n-max", c.n_max, "largest sampled relation size");
    cmd->add_option("--exhaustive-n", c.exhaustive_n, "enumerate every relation up to this size");
    cmd->add_option("--samples", c.samples, "number of random relations");
    cmd->add_option("--seed", c.seed, "seed of the relation sampler");
    cmd->add_flag("--functional-only", c.functional_only, "only graphs of self-maps");
}

int run(int argc, char** argv)
{
    CLI::App app{"Minimality analysis of closed relations on finite sets and on [0,1]"};
    app.require_subcommand(1);

    std::string input;
    std::string kind;
    SegmentDiagnosticConfig diag;
    OrbitOptions orbit;
    AuditConfig audit;
    std::vector<std::string> pairs;
    std::string phi_file;
    CorpusParameters params;
    VerifyConfig verify;
    std::string example;
    std::string what = "geometry";
    std::string mode = "inner";
    std::optional<double> epsilon;
    double proper_gap = kDefaultDensityEpsilon;
    double x0 = 0.0;
    int max_iter = 200;

    auto* classify = app.add_subcommand("classify", "minimality report (diagnostic for segment relations)");
    classify->add_option("--input", input, "relation file")->required();
    classify->add_option("--steps", diag.steps, "orbit length of the segment diagnostic");
    classify->add_option("--epsilon", diag.epsilon, "density threshold of the segment diagnostic");
    classify->add_option("--seed", diag.seed, "seed of the random orbits");

    auto* orb = app.add_subcommand("orbit", "simulate an orbit");
    add_orbit_flags(orb, orbit);
    orb->add_option("--epsilon", orbit.epsilon, "density threshold");
    orb->add_flag("--csv", orbit.csv, "emit step,x rows instead of JSON");

    auto* wit = app.add_subcommand("witness", "a set or orbit refuting one minimality kind");
    wit->add_option("--input", input, "relation file")->required();
    wit->add_option("--kind", kind, "kind name, e.g. 1, inf, 2plus, 3alpha")->required();
    wit->add_option("--epsilon", proper_gap, "smallest max_gap of a proper segment witness");

    auto* aud = app.add_subcommand("audit", "check the implication table and fast deciders");
    add_audit_flags(aud, audit);

    auto* probe = app.add_subcommand("probe", "search finite relations for stronger-but-not-weaker instances");
    add_audit_flags(probe, audit);
    probe->add_option("--pair", pairs, "stronger:weaker kind pair (repeatable)");

    auto* conj = app.add_subcommand("conjugate", "transport a relation along a homeomorphism");
    conj->add_option("--input", input, "relation file")->required();
    conj->add_option("--phi", phi_file, "homeomorphism file")->required();
    conj->add_option("--steps", diag.steps, "orbit length of the segment diagnostic");
    conj->add_option("--epsilon", diag.epsilon, "density threshold of the segment diagnostic");
    conj->add_option("--seed", diag.seed, "seed of the random orbits");

    auto* corpus = app.add_subcommand("corpus", "built-in example relations");
    corpus->require_subcommand(1);
    auto add_params = [&](CLI::App* c) {
        c->add_option("--depth", params.depth, "truncation depth of rene2");
        c->add_option("--lambda", params.lambda, "rotation number of tistile");
    };
    auto* clist = corpus->add_subcommand("list", "every example as a relation file, one per line");
    add_params(clist);
    auto* cdump = corpus->add_subcommand("dump", "one example as a relation file");
    cdump->add_option("name", example, "example name")->required();
    add_params(cdump);
    auto* cverify = corpus->add_subcommand("verify", "check the expected facts");
    cverify->add_option("name", example, "example name (all when omitted)");
    add_params(cverify);
    cverify->add_option("--steps", verify.steps, "orbit length");
    cverify->add_option("--epsilon", verify.epsilon, "density threshold");
    cverify->add_option("--seed", verify.seed, "seed of the random orbits");

    auto* plot = app.add_subcommand("emit-plot", "CSV data for plotting");
    add_orbit_flags(plot, orbit);
    plot->add_option("--what", what, "geometry or orbit")->check(CLI::IsMember({"geometry", "orbit"}));

    auto* clos = app.add_subcommand("closure", "inner or outer invariant closure of a point");
    clos->add_option("--input", input, "relation file")->required();
    clos->add_option("--mode", mode, "inner or outer")->check(CLI::IsMember({"inner", "outer"}));
    clos->add_option("--epsilon", epsilon, "fattening radius (outer mode, default 1e-3)");
    clos->add_option("--x0", x0, "start point");
    clos->add_option("--max-iter", max_iter, "iteration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*classify) {
            return cmd_classify(input, diag);
        }
        if (*orb) {
            return cmd_orbit(orbit);
        }
        if (*wit) {
            return cmd_witness(input, kind, proper_gap);
        }
        if (*aud) {
            return cmd_audit(audit);
        }
        if (*probe) {
            return cmd_probe(audit, pairs);
        }
        if (*conj) {
            return cmd_conjugate(input, phi_file, diag);
        }
        if (*clist) {
            return cmd_corpus_list(params);
        }
        if (*cdump) {
            return cmd_corpus_dump(example, params);
        }
        if (*cverify) {
            return cmd_corpus_verify(example, params, verify);
        }
        if (*plot) {
            return cmd_emit_plot(what, orbit);
        }
        if (*clos) {
            return cmd_closure(input, mode, epsilon, x0, max_iter);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ConstraintError& e) {
        std::cerr << "constraint violation: " << e.what() << '\n';
        return kExitConstraint;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConstraint;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    return run(argc, argv);
}
