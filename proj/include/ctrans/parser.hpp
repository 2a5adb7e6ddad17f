#ifndef CTRANS_PARSER_HPP
#define CTRANS_PARSER_HPP

#include <string_view>

#include "ctrans/expr.hpp"

namespace ctrans {

// Parses a density / test-function expression.
//
// Grammar (standard precedence, '^' takes an integer exponent):
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   primary := NUMBER['i'] | 'i' | 'pi' | 'z'
//            | 'complex' '(' SIGNED ',' SIGNED ')'
//            | 'cauchy_of' '(' IDENT ')'
//            | 'moebius' '(' constant-expr ')'
//            | '(' expr ')'
//
// moebius takes any constant subexpression and folds it to its value.
// Syntax errors carry 1-based line/column positions.
Expr parse_density(std::string_view text);

} // namespace ctrans

#endif
