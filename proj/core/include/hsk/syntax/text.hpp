#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "hsk/syntax/formula.hpp"
#include "hsk/syntax/term.hpp"

namespace hsk {

/// Parses one formula. `%` starts a comment running to the end of the line.
///
///   formula := "!" formula | formula "&" formula | formula "|" formula
///            | formula "->" formula | "exists" ?x "." formula
///            | "forall" ?x "." formula | "(" formula ")" | atom
///   atom    := term "=" term | IDENT | IDENT "(" term ("," term)* ")"
///   term    := ?x | *1 | *name | IDENT | IDENT "(" term ("," term)* ")"
///
/// Binding strength: ! > & > | > ->; & and | associate left, -> right.
/// Throws ParseError with the 1-based position of the offending token,
/// including when a symbol is used with two different arities.
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

/// Renders in the grammar above with minimal parentheses; parse_formula
/// inverts it exactly.
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Collapses runs of whitespace and drops comments, the only differences
/// printing introduces after a parse.
std::string normalize_whitespace(std::string_view text);

}  // namespace hsk
