#pragma once

#include <string>

#include "lpfd/formula.hpp"

namespace lpfd {

// Parses the concrete formula syntax:
//
//   phi  ::= PRED "(" var {"," var} ")" | "true" | "false" | "~" phi
//          | "[" q "]" phi | "dia[" q "]" phi | "dep[" q "]" (var | grp)
//          | "(" phi ")" | phi ("&" | "|" | "->") phi
//          | "pa" "(" grp ")" | "paY" "(" grp ";" grp ")" | "na" "(" grp ")"
//          | "ca1" "(" grp ")" | "ca2" "(" grp ")" | "ca" "(" grp ")"
//          | "D" "(" grp ";" var ")" | "DD" "(" grp ")" phi
//   q    ::= "=" grp ";" "<=" grp ";" "<" grp
//   grp  ::= ["-"] "{" [var {"," var}] "}"
//
// "&" binds tighter than "|", which binds tighter than the right-associative
// "->"; "~" and the bracket operators bind tightest. The printer always
// parenthesizes binary connectives, so printed text stays in the grammar.
//
// Identifier resolution and arity checks happen at bind time, not here.
// Throws ParseError with a 1-based line/column position.
MacroFormula parseFormula(const std::string& text);

// Parses a standalone group literal such as "{E,A}", "-{1}" or "E,A".
MacroGroup parseGroupLiteral(const std::string& text);

// Parses a standalone subscript triple such as "[={E}; <={}; <{A}]".
MacroQuery parseQueryLiteral(const std::string& text);

}  // namespace lpfd
