#include "crdyn/relation_io.hpp"

#include "crdyn/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace crdyn {

std::string format_number(double v)
{
    if (!std::isfinite(v)) {
        return "null";
    }
    if (v == 0.0) {
        return "0";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, res.ptr);
    const auto e = s.find('e');
    if (e == std::string::npos) {
        return s;
    }
    std::string mantissa = s.substr(0, e);
    std::string exponent = s.substr(e + 1);
    std::string sign;
    if (!exponent.empty() && (exponent[0] == '-' || exponent[0] == '+')) {
        if (exponent[0] == '-') {
            sign = "-";
        }
        exponent.erase(0, 1);
    }
    const auto nz = exponent.find_first_not_of('0');
    exponent = nz == std::string::npos ? "0" : exponent.substr(nz);
    return mantissa + "e" + sign + exponent;
}

namespace {

bool is_scalar(const Json& j)
{
    return !j.is_array() && !j.is_object();
}

void dump_to(const Json& j, int indent, int depth, std::string& out)
{
    const bool pretty = indent >= 0;
    auto newline = [&](int d) {
        if (pretty) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(depth + 1);
            out += Json(key).dump();
            out += pretty ? ": " : ":";
            dump_to(value, indent, depth + 1, out);
        }
        newline(depth);
        out += '}';
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // short rows of scalars stay on one line
        const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
        out += '[';
        bool first = true;
        for (const auto& value : j) {
            if (!first) {
                out += flat && pretty ? ", " : ",";
            }
            first = false;
            if (!flat) {
                newline(depth + 1);
            }
            dump_to(value, indent, depth + 1, out);
        }
        if (!flat) {
            newline(depth);
        }
        out += ']';
        return;
    }
    case Json::value_t::number_float:
        out += format_number(j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

void require(bool cond, const std::string& what)
{
    if (!cond) {
        throw ParseError(what);
    }
}

void only_keys(const Json& j, std::initializer_list<const char*> keys)
{
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [key, value] : j.items()) {
        (void)value;
        require(allowed.count(key) != 0, "unexpected key \"" + key + "\"");
    }
    for (const char* k : keys) {
        require(j.contains(k), std::string("missing key \"") + k + "\"");
    }
}

int as_int(const Json& j, const std::string& what)
{
    require(j.is_number_integer(), what + " must be an integer");
    const auto v = j.get<long long>();
    require(v >= std::numeric_limits<int>::min() && v <= std::numeric_limits<int>::max(), what + " is out of range");
    return static_cast<int>(v);
}

double as_double(const Json& j, const std::string& what)
{
    require(j.is_number(), what + " must be a number");
    return j.get<double>();
}

const Json& as_array(const Json& j, const std::string& what, std::size_t arity = 0)
{
    require(j.is_array(), what + " must be an array");
    if (arity > 0) {
        require(j.size() == arity, what + " must have " + std::to_string(arity) + " entries");
    }
    return j;
}

std::string type_of(const Json& j)
{
    require(j.is_object(), "top level must be a JSON object");
    require(j.contains("type") && j["type"].is_string(), "missing string key \"type\"");
    return j["type"].get<std::string>();
}

Json vertex_list(const std::vector<Vertex>& v)
{
    Json a = Json::array();
    for (Vertex x : v) {
        a.push_back(x);
    }
    return a;
}

} // namespace

std::string dump(const Json& j, int indent)
{
    std::string out;
    dump_to(j, indent, 0, out);
    return out;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Relation parse_relation(std::string_view text)
{
    const Json j = parse_json(text);
    const std::string type = type_of(j);
    if (type == "finite") {
        only_keys(j, {"type", "n", "edges"});
        const int n = as_int(j["n"], "\"n\"");
        std::vector<Edge> edges;
        for (const auto& e : as_array(j["edges"], "\"edges\"")) {
            as_array(e, "an edge", 2);
            edges.emplace_back(as_int(e[0], "an edge endpoint"), as_int(e[1], "an edge endpoint"));
        }
        return FiniteRelation(n, std::move(edges));
    }
    if (type == "segments") {
        only_keys(j, {"type", "tolerance", "segments"});
        const double tol = as_double(j["tolerance"], "\"tolerance\"");
        std::vector<Segment> segs;
        for (const auto& s : as_array(j["segments"], "\"segments\"")) {
            as_array(s, "a segment", 4);
            segs.push_back({as_double(s[0], "a coordinate"), as_double(s[1], "a coordinate"),
                            as_double(s[2], "a coordinate"), as_double(s[3], "a coordinate")});
        }
        return SegmentRelation(std::move(segs), tol);
    }
    throw ParseError("unknown relation type \"" + type + "\"");
}

Relation read_relation_file(const std::string& path)
{
    return parse_relation(read_text_file(path));
}

Json relation_to_json(const Relation& r)
{
    Json j;
    if (const auto* g = std::get_if<FiniteRelation>(&r)) {
        j["type"] = "finite";
        j["n"] = g->size();
        Json edges = Json::array();
        for (const auto& [x, y] : g->edges()) {
            edges.push_back({x, y});
        }
        j["edges"] = std::move(edges);
        return j;
    }
    const auto& s = std::get<SegmentRelation>(r);
    j["type"] = "segments";
    j["tolerance"] = s.tolerance();
    Json segs = Json::array();
    for (const auto& seg : s.segments()) {
        segs.push_back({seg.x1, seg.y1, seg.x2, seg.y2});
    }
    j["segments"] = std::move(segs);
    return j;
}

std::string serialize_relation(const Relation& r)
{
    return dump(relation_to_json(r));
}

Homeomorphism parse_homeomorphism(std::string_view text)
{
    const Json j = parse_json(text);
    const std::string type = type_of(j);
    if (type == "permutation") {
        only_keys(j, {"type", "map"});
        std::vector<Vertex> map;
        for (const auto& v : as_array(j["map"], "\"map\"")) {
            map.push_back(as_int(v, "a permutation entry"));
        }
        return Permutation(std::move(map));
    }
    if (type == "pl") {
        only_keys(j, {"type", "orientation", "breakpoints"});
        require(j["orientation"].is_string(), "\"orientation\" must be a string");
        const Orientation o = parse_orientation(j["orientation"].get<std::string>());
        std::vector<std::pair<double, double>> bp;
        for (const auto& p : as_array(j["breakpoints"], "\"breakpoints\"")) {
            as_array(p, "a breakpoint", 2);
            bp.emplace_back(as_double(p[0], "a breakpoint"), as_double(p[1], "a breakpoint"));
        }
        return PLHomeomorphism(std::move(bp), o);
    }
    throw ParseError("unknown homeomorphism type \"" + type + "\"");
}

Homeomorphism read_homeomorphism_file(const std::string& path)
{
    return parse_homeomorphism(read_text_file(path));
}

Json homeomorphism_to_json(const Homeomorphism& phi)
{
    Json j;
    if (const auto* p = std::get_if<Permutation>(&phi)) {
        j["type"] = "permutation";
        j["map"] = vertex_list(p->map());
        return j;
    }
    const auto& pl = std::get<PLHomeomorphism>(phi);
    j["type"] = "pl";
    j["orientation"] = std::string(to_string(pl.orientation()));
    Json bp = Json::array();
    for (const auto& [x, y] : pl.breakpoints()) {
        bp.push_back({x, y});
    }
    j["breakpoints"] = std::move(bp);
    return j;
}

Json interval_set_to_json(const IntervalSet& s)
{
    Json a = Json::array();
    for (const auto& iv : s.intervals()) {
        a.push_back({iv.lo, iv.hi});
    }
    return a;
}

Json witness_to_json(const Witness& w)
{
    Json j;
    switch (w.type) {
    case Witness::Type::subset:
        j["type"] = "subset";
        j["set"] = vertex_list(w.subset);
        break;
    case Witness::Type::dead_end:
        j["type"] = "dead-end";
        j["start"] = w.start;
        break;
    case Witness::Type::avoiding:
        j["type"] = "avoiding";
        j["start"] = w.start;
        j["path"] = vertex_list(w.path);
        j["cycle"] = vertex_list(w.cycle);
        j["avoids"] = w.avoids;
        break;
    }
    return j;
}

Json report_to_json(const MinimalityReport& r)
{
    Json j;
    Json flags = Json::object();
    Json witnesses = Json::object();
    for (auto k : kAllKinds) {
        const std::string name(to_string(k));
        flags[name] = r.flag(k);
        if (const auto& w = r.witnesses[index_of(k)]) {
            witnesses[name] = witness_to_json(*w);
        }
    }
    j["flags"] = std::move(flags);
    j["p1_full"] = r.p1_full;
    j["p2_full"] = r.p2_full;
    j["witnesses"] = std::move(witnesses);
    return j;
}

Json report_to_json(const SegmentReport& r)
{
    Json j;
    j["label"] = std::string(kDiagnosticLabel);
    Json kinds = Json::object();
    for (auto k : kAllKinds) {
        const auto& d = r.kinds[index_of(k)];
        Json e;
        e["evidence"] = std::string(to_string(d.evidence));
        e["detail"] = d.detail;
        if (d.witness) {
            e["witness"] = interval_set_to_json(*d.witness);
        }
        kinds[std::string(to_string(k))] = std::move(e);
    }
    j["kinds"] = std::move(kinds);
    j["p1_full"] = r.p1_full;
    j["p2_full"] = r.p2_full;
    Json cfg;
    cfg["starts"] = r.config.starts;
    cfg["steps"] = r.config.steps;
    cfg["epsilon"] = r.config.epsilon;
    cfg["burn_in"] = r.config.burn_in;
    cfg["closure_iterations"] = r.config.closure_iter;
    cfg["seed"] = r.config.seed;
    j["config"] = std::move(cfg);
    return j;
}

} // namespace crdyn
