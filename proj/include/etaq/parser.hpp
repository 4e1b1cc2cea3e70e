#pragma once

#include <string>

#include "etaq/claims.hpp"
#include "etaq/expr.hpp"

namespace etaq {

// Claim-file grammar, one statement per line, '#' comments:
//   series NAME = EXPR
//   identity "LABEL": EXPR == EXPR
//   congruence "LABEL": NAME[A*n+B] == 0 mod M
//   internal "LABEL": NAME[A*n+B] == NAME[C*n+D] mod M
//
// Expressions:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' int)?            (int may be negative)
//   atom   := f<digits> | q | int | name | '(' expr ')' | func '(' args ')'
//   func   := extract | huff | subst
//
// Parse errors carry line and column. Names must resolve against earlier
// definitions or the builtin catalog; labels must be unique per file.
ClaimFile parse_claim_file(const std::string& text);

// Single expression, names resolved against the builtin catalog only.
ExprPtr parse_expr(const std::string& text);

} // namespace etaq
