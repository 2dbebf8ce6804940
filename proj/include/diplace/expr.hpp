#pragma once

// Game expressions.
//
//   expr := term (('+' | '-') term)*
//   term := '-' term | atom
//   atom := integer | integer '/' power-of-two | '*' [nat] | 'up' | 'down'
//         | '{' [expr (',' expr)*] '|' [expr (',' expr)*] '}' | '(' expr ')'
//
// Sums are disjunctive; the result is always in canonical form.

#include <optional>
#include <string>

#include "diplace/errors.hpp"
#include "diplace/game.hpp"

namespace diplace {

/// Throws ParseError with the byte offset of the offending token.
Game parse_expr(const std::string& text);

/// Readable form: numbers ("-3/4"), number plus ups, downs and a nimber
/// ("2 + down + *"), otherwise braces around pretty-printed options
/// ("{0,*|-1}"). The output parses back to the same value.
std::string pretty(Game g);

/// Left and right stops.
Dyadic left_stop(Game g);
Dyadic right_stop(Game g);

}  // namespace diplace
