#pragma once

#include <cstddef>
#include <string>

#include "goedel/ast.hpp"

namespace goedel {

// Numerals whose count exceeds the threshold render as N[k] instead of s...s0.
constexpr std::size_t kDefaultNumeralThreshold = 32;

// Canonical text form: parse(render(f)) == f structurally. Binary connectives
// and +/* are always parenthesized, ~ and quantifiers parenthesize their
// operand, atoms are bare, quantifiers render without the colon.
std::string render_formula(const FormulaPtr& f,
                           std::size_t numeral_threshold = kDefaultNumeralThreshold);
std::string render_term(const TermPtr& t,
                        std::size_t numeral_threshold = kDefaultNumeralThreshold);

// Text from a run sequence (the decode path). Proof separators render as
// newlines, matching the one-formula-per-line proof file format.
std::string render_runs(const RunSeq& runs,
                        std::size_t numeral_threshold = kDefaultNumeralThreshold);

}  // namespace goedel
