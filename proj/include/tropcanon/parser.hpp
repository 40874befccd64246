#pragma once

#include <string>
#include <vector>

#include "tropcanon/diffpoly.hpp"

namespace tropcanon {

/// Parses a differential system: one polynomial per line (right-hand side 0
/// implicit), `#` starts a comment, blank lines ignored.
///
/// Tokens: `xJ` variable, `xJ'` (primes repeatable) or `xJ^(K)` derivative,
/// integer or rational literals `p/q`, operators `+ - * ^`, parentheses.
/// Throws ParseError with 1-based line/column.
std::vector<DiffPoly> parse_system(const std::string& text);

/// Parses a single polynomial (no comments, single line).
DiffPoly parse_poly(const std::string& text);

} // namespace tropcanon
