#include "crdyn/audit.hpp"

#include "crdyn/error.hpp"
#include "crdyn/relation_io.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace crdyn {

const char* const kFiniteCollapseNotice =
    "No findings. On a finite relation the flags inf, 2plus, 3plus, 2omega and 3omega all equal strong "
    "connectivity of the edge digraph, and infback, 2minus, 3minus, 2alpha and 3alpha equal it for the inverse, "
    "which is the same digraph reversed. A 3-but-not-2 instance therefore cannot exist on a finite carrier; the "
    "empty result says nothing about continua.";

namespace {

using K = MinimalityKind;

bool flag_of(const FlagVector& f, K k)
{
    return f[index_of(k)];
}

std::string kind_name(K k)
{
    return std::string(to_string(k));
}

std::string flags_string(const FlagVector& f)
{
    std::string s;
    for (bool b : f) {
        s += b ? '1' : '0';
    }
    return s;
}

} // namespace

const std::vector<Implication>& implication_table()
{
    static const std::vector<Implication> table = {
        // subset kinds
        {K::one, K::inf},
        {K::one_back, K::inf_back},
        {K::one, K::one_back},
        {K::one_back, K::one},
        // forward orbit chain
        {K::one, K::one_plus},
        {K::one_plus, K::one},
        {K::one_plus, K::two_plus},
        {K::two_plus, K::three_plus},
        {K::three_plus, K::inf},
        // limit sets
        {K::one_omega, K::one_plus},
        {K::one_plus, K::one_omega},
        {K::two_omega, K::two_plus},
        {K::two_plus, K::two_omega},
        {K::three_omega, K::three_plus},
        {K::one_omega, K::two_omega},
        {K::two_omega, K::three_omega},
        // backward chain
        {K::one_back, K::one_minus},
        {K::one_minus, K::one_back},
        {K::one_minus, K::one_plus},
        {K::one_plus, K::one_minus},
        {K::one_minus, K::two_minus},
        {K::two_minus, K::three_minus},
        {K::three_minus, K::inf_back},
        {K::one_alpha, K::one_minus},
        {K::one_minus, K::one_alpha},
        {K::two_alpha, K::two_minus},
        {K::two_minus, K::two_alpha},
        {K::three_alpha, K::three_minus},
        {K::one_alpha, K::two_alpha},
        {K::two_alpha, K::three_alpha},
    };
    return table;
}

std::string describe(const Implication& i)
{
    return kind_name(i.premise) + " => " + kind_name(i.conclusion);
}

const std::vector<MinimalityKind>& surjective_kinds()
{
    static const std::vector<MinimalityKind> kinds = {K::one,      K::inf,       K::one_plus,  K::two_plus,
                                                      K::three_plus, K::one_back, K::inf_back, K::one_minus,
                                                      K::two_minus, K::three_minus};
    return kinds;
}

void validate(const AuditConfig& c)
{
    if (c.exhaustive_n < 1 || c.exhaustive_n > c.n_max) {
        throw ConstraintError("exhaustive_n must satisfy 1 <= exhaustive_n <= n_max");
    }
    if (c.n_max > kOrbitOracleCap) {
        throw ConstraintError("n_max must not exceed the oracle cap " + std::to_string(kOrbitOracleCap));
    }
    if (c.samples < 0) {
        throw ConstraintError("sample count must be nonnegative");
    }
    if (c.exhaustive_n > (c.functional_only ? 6 : 4)) {
        throw ConstraintError(c.functional_only ? "exhaustive enumeration of self-maps is limited to n <= 6"
                                                : "exhaustive enumeration of all relations is limited to n <= 4");
    }
}

FiniteRelation random_functional(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> f(static_cast<std::size_t>(n));
    for (auto& v : f) {
        v = pick(rng);
    }
    return FiniteRelation::functional(f);
}

Permutation random_permutation(std::mt19937_64& rng, int n)
{
    std::vector<Vertex> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    std::shuffle(m.begin(), m.end(), rng);
    return Permutation(std::move(m));
}

FiniteRelation random_relation(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> family(0, 2);
    std::uniform_int_distribution<int> extra(0, 2);
    std::vector<Edge> edges;
    switch (family(rng)) {
    case 0: {
        std::uniform_real_distribution<double> density(0.05, 0.7);
        std::bernoulli_distribution coin(density(rng));
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                if (coin(rng)) {
                    edges.emplace_back(x, y);
                }
            }
        }
        if (edges.empty()) {
            edges.emplace_back(pick(rng), pick(rng));
        }
        return FiniteRelation(n, std::move(edges));
    }
    case 1:
        edges = random_functional(rng, n).edges();
        break;
    default: {
        const auto order = random_permutation(rng, n).map();
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(order[i], order[(i + 1) % n]);
        }
        break;
    }
    }
    for (int k = extra(rng); k > 0; --k) {
        edges.emplace_back(pick(rng), pick(rng));
    }
    return FiniteRelation(n, std::move(edges));
}

std::vector<FiniteRelation> all_functional(int n)
{
    if (n < 1 || n > 8) {
        throw ConstraintError("self-map enumeration needs 1 <= n <= 8");
    }
    std::vector<FiniteRelation> out;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(FiniteRelation::functional(f));
        int i = 0;
        while (i < n && ++f[i] == n) {
            f[i++] = 0;
        }
        if (i == n) {
            break;
        }
    }
    return out;
}

bool is_single_cycle(const FiniteRelation& g)
{
    const int n = g.size();
    if (static_cast<int>(g.edges().size()) != n) {
        return false;
    }
    Vertex v = 0;
    for (int step = 1; step <= n; ++step) {
        const auto succ = g.successors(v);
        if (succ.size() != 1) {
            return false;
        }
        v = succ.front();
        if (v == 0) {
            return step == n;
        }
    }
    return false;
}

namespace {

std::vector<FiniteRelation> all_relations(int n)
{
    std::vector<FiniteRelation> out;
    const int pairs = n * n;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << pairs); ++m) {
        std::vector<Edge> e;
        for (int k = 0; k < pairs; ++k) {
            if (m & (std::uint64_t{1} << k)) {
                e.emplace_back(k / n, k % n);
            }
        }
        out.emplace_back(n, std::move(e));
    }
    return out;
}

} // namespace

std::vector<FiniteRelation> audit_instances(const AuditConfig& c)
{
    validate(c);
    std::vector<FiniteRelation> out;
    for (int n = 1; n <= c.exhaustive_n; ++n) {
        auto part = c.functional_only ? all_functional(n) : all_relations(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::mt19937_64 rng(c.seed);
    const int lo = c.exhaustive_n < c.n_max ? c.exhaustive_n + 1 : 1;
    std::uniform_int_distribution<int> size(lo, c.n_max);
    for (int i = 0; i < c.samples; ++i) {
        const int n = size(rng);
        out.push_back(c.functional_only ? random_functional(rng, n) : random_relation(rng, n));
    }
    return out;
}

AuditReport run_audit(const AuditConfig& c)
{
    validate(c);
    const FastDecider fast = c.fast_decider ? c.fast_decider : FastDecider(decide_minimal_fast);
    const auto instances = audit_instances(c);

    AuditReport rep;
    rep.sampled_instances = static_cast<std::size_t>(c.samples);
    rep.exhaustive_instances = instances.size() - rep.sampled_instances;
    std::mt19937_64 rng(c.seed ^ 0x9e3779b97f4a7c15ULL);

    for (std::size_t idx = 0; idx < instances.size(); ++idx) {
        const auto& g = instances[idx];
        const bool is_exhaustive = idx < rep.exhaustive_instances;
        std::string name;
        auto violate = [&](std::string check, std::string detail) {
            if (name.empty()) {
                name = serialize_relation(g);
            }
            rep.violations.push_back({name, std::move(check), std::move(detail)});
        };

        const FlagVector oracle = decide_all_oracle(g);
        FlagVector fast_flags{};
        for (auto k : kAllKinds) {
            fast_flags[index_of(k)] = fast(g, k);
            ++rep.agreement_checks;
            if (fast_flags[index_of(k)] != oracle[index_of(k)]) {
                violate("fast-oracle agreement",
                        "kind " + kind_name(k) + ": fast " + (fast_flags[index_of(k)] ? "true" : "false") +
                            ", oracle " + (oracle[index_of(k)] ? "true" : "false"));
            }
        }

        for (const auto& imp : implication_table()) {
            ++rep.implication_checks;
            if (flag_of(oracle, imp.premise) && !flag_of(oracle, imp.conclusion)) {
                violate("implication " + describe(imp), "oracle flags " + flags_string(oracle));
            }
            if (flag_of(fast_flags, imp.premise) && !flag_of(fast_flags, imp.conclusion)) {
                violate("implication " + describe(imp), "fast flags " + flags_string(fast_flags));
            }
        }
        const bool surjective = g.domain_is_full() && g.range_is_full();
        for (auto k : surjective_kinds()) {
            ++rep.implication_checks;
            if (flag_of(oracle, k) && !surjective) {
                violate("projections", "kind " + kind_name(k) + " holds but a projection is not full");
            }
        }

        // inf-invariant => 1-invariant, both directions
        const int n = g.size();
        auto check_subset = [&](Mask a) {
            for (auto [inf, one] : {std::pair{InvarianceKind::forward_inf, InvarianceKind::forward_1},
                                    std::pair{InvarianceKind::backward_inf, InvarianceKind::backward_1}}) {
                ++rep.subset_checks;
                if (is_invariant(g, a, inf) && !is_invariant(g, a, one)) {
                    violate("inf-invariant implies 1-invariant",
                            std::string(to_string(inf)) + " subset mask " + std::to_string(a));
                }
            }
        };
        if (is_exhaustive) {
            for (Mask a = 0; a < (Mask{1} << n); ++a) {
                check_subset(a);
            }
        } else {
            std::uniform_int_distribution<Mask> pick(0, (Mask{1} << n) - 1);
            for (int s = 0; s < 8; ++s) {
                check_subset(pick(rng));
            }
        }

        if (surjective) {
            ++rep.shift_checks;
            if (is_shift_minimal(g) && !flag_of(oracle, K::one)) {
                violate("shift minimal implies 1-minimal", "oracle flags " + flags_string(oracle));
            }
        }

        ++rep.conjugacy_checks;
        const auto phi = random_permutation(rng, n);
        const FlagVector moved = decide_all_fast(transport(g, phi));
        if (moved != fast_flags) {
            std::string map;
            for (Vertex v : phi.map()) {
                map += std::to_string(v) + " ";
            }
            violate("conjugacy invariance", "permutation " + map + "gives flags " + flags_string(moved));
        }
    }

    std::sort(rep.violations.begin(), rep.violations.end(), [](const AuditViolation& a, const AuditViolation& b) {
        return std::tie(a.instance, a.check, a.detail) < std::tie(b.instance, b.check, b.detail);
    });
    return rep;
}

CollapseReport functional_collapse(int n)
{
    CollapseReport rep;
    for (const auto& g : all_functional(n)) {
        ++rep.maps;
        const FlagVector f = decide_all_oracle(g);
        const bool constant = std::all_of(f.begin(), f.end(), [&](bool b) { return b == f[0]; });
        const bool cycle = is_single_cycle(g);
        rep.constant += constant ? 1 : 0;
        rep.all_true += constant && f[0] ? 1 : 0;
        const bool matches = constant && f[0] == cycle;
        rep.matches_cycle += matches ? 1 : 0;
        const bool agrees = decide_all_fast(g) == f;
        rep.fast_agrees += agrees ? 1 : 0;
        if (!matches || !agrees) {
            rep.failures.push_back(serialize_relation(g));
        }
    }
    return rep;
}

ConjugacySampleReport conjugacy_sample(int pairs, int n_max, std::uint64_t seed)
{
    if (pairs < 0 || n_max < 1 || n_max > kSubsetOracleCap) {
        throw ConstraintError("conjugacy sample needs pairs >= 0 and 1 <= n_max <= " +
                              std::to_string(kSubsetOracleCap));
    }
    ConjugacySampleReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, n_max);
    for (int i = 0; i < pairs; ++i) {
        const int n = size(rng);
        const auto g = random_relation(rng, n);
        const auto phi = random_permutation(rng, n);
        const auto r = check_conjugacy_invariance(g, phi);
        ++rep.pairs;
        rep.equal += r.all_equal ? 1 : 0;
        rep.projections_preserved += r.p1_preserved && r.p2_preserved ? 1 : 0;
        const bool back = transport(transport(g, phi), phi.inverse()) == g;
        rep.round_trips += back ? 1 : 0;
        if (!r.all_equal || !r.p1_preserved || !r.p2_preserved || !back) {
            rep.failures.push_back(serialize_relation(g));
        }
    }
    return rep;
}

SubsetTransportReport subset_transport_exhaustive(int n_max)
{
    if (n_max < 1 || n_max > 3) {
        throw ConstraintError("exhaustive subset transport is limited to n <= 3");
    }
    SubsetTransportReport rep;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Vertex> m(static_cast<std::size_t>(n));
        std::iota(m.begin(), m.end(), 0);
        std::vector<Permutation> perms;
        do {
            perms.emplace_back(m);
        } while (std::next_permutation(m.begin(), m.end()));
        for (const auto& g : all_relations(n)) {
            for (const auto& phi : perms) {
                for (Mask a = 0; a < (Mask{1} << n); ++a) {
                    ++rep.cases;
                    rep.preserved += check_subset_transport(g, phi, from_mask(a)).preserved() ? 1 : 0;
                }
            }
        }
    }
    return rep;
}

std::vector<KindPair> default_probe_pairs()
{
    return {{K::three_plus, K::two_plus}, {K::three_omega, K::two_omega}, {K::three_minus, K::two_minus}};
}

ProbeReport run_probe(const AuditConfig& c, const std::vector<KindPair>& pairs)
{
    constexpr std::size_t kExamples = 5;
    const auto instances = audit_instances(c);
    ProbeReport rep;
    rep.instances = instances.size();
    for (const auto& p : pairs) {
        rep.pairs.push_back({p, 0, {}});
    }
    for (const auto& g : instances) {
        const FlagVector f = decide_all_oracle(g);
        for (auto& pr : rep.pairs) {
            if (flag_of(f, pr.pair.first) && !flag_of(f, pr.pair.second)) {
                ++pr.findings;
                if (pr.examples.size() < kExamples) {
                    pr.examples.push_back(serialize_relation(g));
                }
            }
        }
    }
    const bool none = std::all_of(rep.pairs.begin(), rep.pairs.end(),
                                  [](const ProbePairResult& r) { return r.findings == 0; });
    if (none) {
        rep.notice = kFiniteCollapseNotice;
    }
    return rep;
}

} // namespace crdyn
