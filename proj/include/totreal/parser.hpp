#ifndef TOTREAL_PARSER_HPP
#define TOTREAL_PARSER_HPP

#include <string>

#include "totreal/manifolds.hpp"

namespace totreal {

/// Descriptor expression grammar (whitespace-insensitive):
///   expr := sum; sum := item ('#' item)*; item := [INT '*'] prod;
///   prod := prim ('x' prim)*; prim := atom | '(' expr ')' | func;
///   func := 'surgery(' expr ',' INT ',' ('canonical'|'other') [',' LABEL] ')'
///         | 'tbundle(' expr ',' INT ')' | 'rev(' expr ')';
///   atom := 'S' INT | 'T' INT | 'wu' | 'm(' INT ',' INT ')' | 'xk(' INT ')'
///         | 's3tws2' | 'cp2cp2bar'
/// '#' binds looser than 'x' and '*'. Throws ParseError with a 1-based column.
ManifoldPtr parse_descriptor(const std::string& text);

/// Canonical serialization; parse_descriptor(print_descriptor(d)) rebuilds an
/// identical tree.
std::string print_descriptor(const ManifoldPtr& d);

}  // namespace totreal

#endif
