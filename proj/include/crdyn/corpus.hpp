#pragma once

#include "crdyn/finite_relation.hpp"
#include "crdyn/segment_relation.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace crdyn {

using Relation = std::variant<FiniteRelation, SegmentRelation>;

/// The golden-ratio rotation number used by default for the rotation example.
double default_lambda();

struct CorpusParameters {
    double lambda = default_lambda();  // rotation number of "tistile"
    int depth = 10;                     // dyadic truncation depth of "rene2"
};

struct ExpectedFact {
    std::string statement;
    std::string source;  // the example the fact restates
};

struct NamedExample {
    std::string name;
    Relation relation;
    CorpusParameters parameters;
    std::vector<ExpectedFact> expected;
    std::string note;  // resolution caveats
};

/// Names accepted by build_example, in listing order.
std::vector<std::string> example_names();

/// Throws ConstraintError for an unknown name or invalid parameters.
NamedExample build_example(const std::string& name, const CorpusParameters& params = {});

/// Segment relations of the continuum examples.
SegmentRelation cross_relation();                 // [0,1]x{1/2} u {1/2}x[0,1]
SegmentRelation halving_relation();               // (0,1/2)-(1,1) and (1,0)-(1,1)
SegmentRelation rotation_relation(double lambda); // (0,l)-(1-l,1) and (1-l,0)-(1,l)
SegmentRelation dyadic_tree_relation(int depth);  // horizontal, diagonal and dyadic point pairs

struct FactResult {
    std::string statement;
    std::string source;
    bool passed = false;
    std::string detail;
};

struct VerifyConfig {
    int steps = 10000;
    double epsilon = 1e-2;
    std::uint64_t seed = 0;
};

/// Runs the checks behind every expected fact of the example.
std::vector<FactResult> verify_example(const NamedExample& ex, const VerifyConfig& config = {});

} // namespace crdyn
