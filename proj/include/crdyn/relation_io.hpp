#pragma once

#include "crdyn/conjugacy.hpp"
#include "crdyn/corpus.hpp"
#include "crdyn/finite_analysis.hpp"
#include "crdyn/interval_analysis.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace crdyn {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal; exponents without padding or '+', e.g. 1e-9.
std::string format_number(double v);

/// Serializer for Json values that writes numbers with format_number.
/// indent < 0 gives a single line without spaces.
std::string dump(const Json& j, int indent = -1);

/// Relation files. Malformed JSON or a wrong shape throws ParseError; values
/// that parse but violate a constraint (vertex range, coordinates) throw
/// ConstraintError.
Relation parse_relation(std::string_view text);
Relation read_relation_file(const std::string& path);
Json relation_to_json(const Relation& r);
std::string serialize_relation(const Relation& r);

Homeomorphism parse_homeomorphism(std::string_view text);
Homeomorphism read_homeomorphism_file(const std::string& path);
Json homeomorphism_to_json(const Homeomorphism& phi);

Json interval_set_to_json(const IntervalSet& s);  // [[a,b],...]
Json witness_to_json(const Witness& w);
Json report_to_json(const MinimalityReport& r);
/// Carries "label": "resolution-bounded diagnostic".
Json report_to_json(const SegmentReport& r);

inline constexpr std::string_view kDiagnosticLabel = "resolution-bounded diagnostic";

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_text_file(const std::string& path);

} // namespace crdyn
