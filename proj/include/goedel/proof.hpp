#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goedel/ast.hpp"
#include "goedel/codec.hpp"

namespace goedel {

// Hilbert-style system: propositional schemas K/S/CP, the Robinson sentences
// Q1..Q7 as fixed closed formulas over canonical variables, equality schemas,
// universal instantiation with closed witness terms, and a substitution
// evaluation schema backed by the code-level sub function. Rules: modus
// ponens and generalization. Proofs are bare formula sequences; justification
// is recovered by search, schemas tried in the declared order.
enum class Axiom {
    K, S, CP,
    Q1, Q2, Q3, Q4, Q5, Q6, Q7,
    EqRefl, EqSub, UnivInst, SubEval,
};

const char* axiom_name(Axiom a);

// First matching schema in declaration order, or nullopt.
std::optional<Axiom> match_axiom(const FormulaPtr& f);

struct Verdict {
    bool valid = false;
    std::size_t line = 0;  // 1-based first unjustified line when invalid
    std::string reason;    // empty when valid
};

Verdict check_proof(const std::vector<FormulaPtr>& lines);

// Sequence coding of proofs: digit blocks joined by the separator symbol
// under Positional (a single line has no separator, so its code equals the
// formula's code); the classical prime tower of line codes under PrimePower.
BigNat encode_proof(const std::vector<FormulaPtr>& lines, const CodecScheme& scheme);
std::vector<FormulaPtr> decode_proof(const BigNat& r, const CodecScheme& scheme);

// The proof predicate: true iff r decodes to a valid proof whose last line
// has canonical code s. Total: every decode/parse failure is just false.
bool proves(const BigNat& r, const BigNat& s, const CodecScheme& scheme);

// All pairs (r, s) with r <= max_code and proves(r, s), ascending in r.
// s is determined by r, so the pair count equals the count of valid r.
std::vector<std::pair<uint64_t, BigNat>> enumerate_provable(uint64_t max_code,
                                                            const CodecScheme& scheme);

}  // namespace goedel
