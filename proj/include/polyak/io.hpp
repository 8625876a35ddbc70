#pragma once

#include <string>
#include <string_view>

#include "polyak/certificate.hpp"
#include "polyak/diagram.hpp"
#include "polyak/formal_sum.hpp"
#include "polyak/invariants.hpp"
#include "polyak/relations.hpp"

namespace polyak {

// Every reader takes the JSON pointer of its input so schema errors name the
// offending location, e.g. "/entries/3/coeff".

Json to_json(const GaussDiagram& d);
GaussDiagram gauss_diagram_from_json(const Json& j, const std::string& at = "");

Json to_json(const ChordDiagram& d);
ChordDiagram chord_diagram_from_json(const Json& j, const std::string& at = "");

// {"flavor","skeleton","terms":[{"diagram":key,"coeff":"p/q"}]}
Json to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const Json& j, const std::string& at = "");

// {"order","skeleton","profile","entries":[{"diagram":key,"coeff":"p/q"}]}
Json to_json(const InvariantFunctional& f);
InvariantFunctional functional_from_json(const Json& j, const std::string& at = "");

Json to_json(const WitnessPair& w);
WitnessPair witness_from_json(const Json& j, const std::string& at = "");

// Rows are written against the ambient index: {"terms":[[column,"p/q"],...]}.
Json to_json(const RelationSystem& sys);
RelationSystem relation_system_from_json(const Json& j, const std::string& at = "");

// with_runtime = false writes runtime_ms as 0, for byte comparisons.
Json to_json(const Certificate& c, bool with_runtime = true);
Certificate certificate_from_json(const Json& j, const std::string& at = "");

// Throws ParseError with the byte offset on malformed text.
Json parse_json(std::string_view text);
// Two-space indented, trailing newline.
std::string dump_json(const Json& j);

}  // namespace polyak
