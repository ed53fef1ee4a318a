#pragma once

#include <string>
#include <string_view>

#include "goedel/ast.hpp"

namespace goedel {

// Recursive-descent parser for the concrete grammar:
//   terms     0 | s<term> | N[<decimal>] | <var> | sub(<term>,<term>)
//             | (<term>+<term>) | (<term>*<term>)   (infix chains associate left)
//   formulas  <term>=<term> | P(<term>,<term>) | ~F | E<var>:F | A<var>:F
//             | F&F | F|F | F->F | F<->F | (F)
// Precedence, loosest to tightest: <->, ->, |, &, prefix (~, quantifiers).
// -> and <-> associate right; the colon after a quantifier variable is
// optional sugar and never part of the symbol sequence. Whitespace is
// insignificant. Throws SyntaxError with a byte offset.
FormulaPtr parse_formula(std::string_view text);

// A term on its own, same lexical rules. Used by the numeral/size plumbing.
TermPtr parse_term(std::string_view text);

}  // namespace goedel
