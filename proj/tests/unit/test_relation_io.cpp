#include "crdyn/corpus.hpp"
#include "crdyn/error.hpp"
#include "crdyn/relation_io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace crdyn;

TEST_CASE("number formatting")
{
    CHECK(format_number(1e-9) == "1e-9");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1e20) == "1e20");
    CHECK(format_number(-2.5e-300) == "-2.5e-300");
    CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_number(std::nan("")) == "null");
}

TEST_CASE("formatted numbers read back exactly")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    for (int i = 0; i < 2000; ++i) {
        const double v = std::pow(10.0, u(rng)) * (i % 2 ? 1.0 : -1.0);
        CHECK(std::stod(format_number(v)) == v);
    }
}

TEST_CASE("relation files are written bit-exactly")
{
    CHECK(serialize_relation(FiniteRelation::cycle(3)) == R"({"type":"finite","n":3,"edges":[[0,1],[1,2],[2,0]]})");
    CHECK(serialize_relation(halving_relation()) ==
          R"({"type":"segments","tolerance":1e-9,"segments":[[0,0.5,1,1],[1,0,1,1]]})");
}

TEST_CASE("relation files round trip")
{
    for (const auto& g : testsupport::all_small_relations(2)) {
        const Relation r = g;
        CHECK(std::get<FiniteRelation>(parse_relation(serialize_relation(r))) == g);
    }
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Segment> segs;
        for (int k = 0; k < 3; ++k) {
            segs.push_back({u(rng), u(rng), u(rng), u(rng)});
        }
        const SegmentRelation s(segs, u(rng) * 1e-6);
        CHECK(std::get<SegmentRelation>(parse_relation(serialize_relation(s))) == s);
    }
    for (const auto& name : example_names()) {
        const auto ex = build_example(name);
        CHECK(serialize_relation(parse_relation(serialize_relation(ex.relation))) == serialize_relation(ex.relation));
    }
}

TEST_CASE("malformed relation files are parse errors")
{
    const char* bad[] = {
        "",
        "{",
        "[1,2]",
        R"({"n":3,"edges":[]})",
        R"({"type":"graph","n":3,"edges":[[0,1]]})",
        R"({"type":"finite","n":3})",
        R"({"type":"finite","n":3,"edges":[[0,1]],"extra":1})",
        R"({"type":"finite","n":3.5,"edges":[[0,1]]})",
        R"({"type":"finite","n":3,"edges":[[0,1,2]]})",
        R"({"type":"finite","n":3,"edges":[["0",1]]})",
        R"({"type":"finite","n":3,"edges":{"0":1}})",
        R"({"type":"segments","tolerance":"small","segments":[[0,0,1,1]]})",
        R"({"type":"segments","tolerance":1e-9,"segments":[[0,0,1]]})",
    };
    for (const char* text : bad) {
        INFO(text);
        CHECK_THROWS_AS(parse_relation(text), ParseError);
    }
}

TEST_CASE("well-formed files with invalid values are constraint errors")
{
    const char* bad[] = {
        R"({"type":"finite","n":0,"edges":[[0,0]]})",
        R"({"type":"finite","n":2,"edges":[]})",
        R"({"type":"finite","n":2,"edges":[[0,2]]})",
        R"({"type":"finite","n":2,"edges":[[-1,0]]})",
        R"({"type":"segments","tolerance":1e-9,"segments":[]})",
        R"({"type":"segments","tolerance":1e-9,"segments":[[0,0,1.5,1]]})",
        R"({"type":"segments","tolerance":-1,"segments":[[0,0,1,1]]})",
    };
    for (const char* text : bad) {
        INFO(text);
        CHECK_THROWS_AS(parse_relation(text), ConstraintError);
    }
    CHECK_THROWS_AS(read_relation_file("/nonexistent/relation.json"), ParseError);
}

TEST_CASE("homeomorphism files")
{
    const auto p = parse_homeomorphism(R"({"type":"permutation","map":[2,0,1]})");
    CHECK(std::get<Permutation>(p) == Permutation({2, 0, 1}));
    CHECK(dump(homeomorphism_to_json(p)) == R"({"type":"permutation","map":[2,0,1]})");

    const char* pl_text = R"({"type":"pl","orientation":"dec","breakpoints":[[0,1],[0.5,0.25],[1,0]]})";
    const auto pl = parse_homeomorphism(pl_text);
    CHECK(std::get<PLHomeomorphism>(pl)(0.5) == 0.25);
    CHECK(dump(homeomorphism_to_json(pl)) == pl_text);

    CHECK_THROWS_AS(parse_homeomorphism(R"({"type":"pl","orientation":"up","breakpoints":[[0,0],[1,1]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_homeomorphism(R"({"type":"rotation","map":[0]})"), ParseError);
    CHECK_THROWS_AS(parse_homeomorphism(R"({"type":"permutation","map":[0,0]})"), ConstraintError);
    CHECK_THROWS_AS(parse_homeomorphism(R"({"type":"pl","orientation":"inc","breakpoints":[[0,0],[0.5,0.7],[0.6,0.6],[1,1]]})"),
                    ConstraintError);
}

TEST_CASE("finite report layout")
{
    const Json j = report_to_json(classify(testsupport::star3()));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        (void)v;
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"flags", "p1_full", "p2_full", "witnesses"});
    std::vector<std::string> kinds;
    for (const auto& [k, v] : j["flags"].items()) {
        (void)v;
        kinds.push_back(k);
    }
    CHECK(kinds == std::vector<std::string>{"1", "inf", "1plus", "2plus", "3plus", "1back", "infback", "1minus",
                                            "2minus", "3minus", "1omega", "2omega", "3omega", "1alpha", "2alpha",
                                            "3alpha"});
    CHECK(j["flags"]["inf"] == true);
    CHECK(j["flags"]["1"] == false);
    CHECK(dump(j["witnesses"]["1"]) == R"({"type":"subset","set":[1]})");
    CHECK_FALSE(j["witnesses"].contains("inf"));
}

TEST_CASE("orbit witnesses serialize their walk")
{
    Witness w;
    w.type = Witness::Type::avoiding;
    w.start = 1;
    w.path = {};
    w.cycle = {1};
    w.avoids = 0;
    CHECK(dump(witness_to_json(w)) == R"({"type":"avoiding","start":1,"path":[],"cycle":[1],"avoids":0})");
    Witness d;
    d.type = Witness::Type::dead_end;
    d.start = 0;
    CHECK(dump(witness_to_json(d)) == R"({"type":"dead-end","start":0})");
}

TEST_CASE("segment reports are labeled as diagnostics")
{
    SegmentDiagnosticConfig cfg;
    cfg.steps = 200;
    cfg.seed = 42;
    const Json j = report_to_json(classify_segments(cross_relation(), cfg));
    CHECK(j["label"] == "resolution-bounded diagnostic");
    CHECK(j["config"]["seed"] == 42);
    CHECK(j["kinds"]["1"]["evidence"] == "refuted-by-witness");
    CHECK(j["kinds"]["1"].contains("witness"));
}

TEST_CASE("pretty output keeps rows of numbers on one line")
{
    Json j;
    j["a"] = Json::array({1e-9, 2});
    CHECK(dump(j, 2) == "{\n  \"a\": [1e-9, 2]\n}");
    CHECK(dump(Json::object()) == "{}");
    CHECK(dump(Json::array()) == "[]");
    CHECK(dump(Json("q\"s")) == R"("q\"s")");
}
