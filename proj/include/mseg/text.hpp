#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "mseg/rank_triangle.hpp"

namespace mseg {

// Grammar (UTF-8, whitespace insignificant):
//   multisegment := "{" [ segment ("," segment)* ] "}"
//   segment      := "[" value [ "," value ] "]"     one value => singleton
//   value        := ["-"] digits [ "/2" | ".5" ]
Multisegment parse_multisegment(std::string_view text);

// A whole string holding one value, e.g. for CLI options.
Value parse_value(std::string_view text);

std::string format_segment(const Segment& seg);

// Canonical form; parse_multisegment(format_multisegment(a)) == a.
std::string format_multisegment(const Multisegment& alpha);

// Staggered triangle layout: row k lists r_{i,i+k}, shifted half a cell per row.
std::string render_rank_triangle(const RankTriangle& triangle);

std::ostream& operator<<(std::ostream& os, Value v);
std::ostream& operator<<(std::ostream& os, const Segment& seg);
std::ostream& operator<<(std::ostream& os, const Multisegment& alpha);

}  // namespace mseg
