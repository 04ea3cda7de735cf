#pragma once

#include "reptriples/search.hpp"

#include <string>

namespace reptriples {

/// One solution as a JSON object (no trailing newline). Big integers are
/// serialized as decimal strings so consumers never hit numeric-width
/// limits; witnesses are [[d1,n1],[d2,n2],[d3,n3]] for bc+1, ac+1, ab+1.
std::string to_json_line(const Solution& s);

/// Column order is fixed: g,a,b,c,d1,n1,d2,n2,d3,n3.
std::string csv_header();
std::string to_csv_row(const Solution& s);

/// Inverse of to_json_line. Throws std::runtime_error on malformed input.
Solution parse_json_record(const std::string& line);

}  // namespace reptriples
