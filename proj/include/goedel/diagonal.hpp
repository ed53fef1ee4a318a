#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "goedel/ast.hpp"
#include "goedel/codec.hpp"

namespace goedel {

// Evaluates a closed term built from 0, numerals, s, and sub applications.
// sub(a, b) evaluates to sub_code(eval(a), v, eval(b)) where v is the unique
// free variable of the formula coded by eval(a). Plus/Times have no
// evaluation here (standard-model semantics is out of scope).
// Throws NotDecodable, VariableNotFree, ArityError, CapExceeded, OpenTermError.
BigNat eval_sub_term(const TermPtr& t, const CodecScheme& scheme);

// Diagonal construction: theta(y) := d[v := sub(y,y)], n := code(theta),
// alpha := theta[y := Numeral(n)]. alpha equals d[v := witness_term] where
// the witness term evaluates to alpha's own code.
struct FixedPointResult {
    FormulaPtr d;
    char v = 0;
    FormulaPtr theta;
    BigNat n;                          // code of theta
    FormulaPtr alpha;
    TermPtr witness_term;              // sub(N[n], N[n])
    std::optional<BigNat> witness_code;  // exact, only when materializable
    SizeReport alpha_report;
    bool fixed_point = false;          // verified, never assumed
};

// Throws ArityError when d does not have exactly one free variable, and an
// OpenTermError when d binds y over an occurrence of v (capture).
FixedPointResult diagonalize(const FormulaPtr& d, char v, const CodecScheme& scheme);

// The undecidable-sentence instance: d = Ar(~(P(r,w))), v = w.
FixedPointResult goedel_sentence(const CodecScheme& scheme);

// Self-numeral impossibility: a formula's numeral has code(f)+1 symbols,
// always more than the formula's own symbol count, so no formula can contain
// the numeral of its own code.
struct Certificate {
    BigNat formula_symbols;
    // Exact code(f)+1 when the code materializes; otherwise empty, with the
    // conclusion still derived from code(f) >= base^(L-1) >= L.
    std::optional<BigNat> numeral_symbols;
    bool impossible = false;  // false means inconclusive
};

Certificate self_numeral_certificate(const FormulaPtr& f, const CodecScheme& scheme);

// The two readings of which variable is free in the negated-provability
// formula when its sub term is written as an object term sub(v, v).
enum class Reading { ZFree, YFree };

struct LiteralReport {
    Reading reading;
    char v = 0;             // z or y
    FormulaPtr base;        // ~(Er(Ew((P(r,w) & w=sub(v,v)))))
    BigNat n;               // code of base
    FormulaPtr instantiated;  // base[v := Numeral(n)]
    SizeReport result_report;  // size of sub_code(n, v, n)
    std::optional<BigNat> result_code;  // exact when materializable
    bool consistent = false;  // splice route agrees with the AST route
    Certificate cert;          // why a literal self-numeral cannot appear
};

LiteralReport literal_pipeline(Reading reading, const CodecScheme& scheme);

// k-fold conjunction of ~(N[code(Z)] = N[code(s_i)]), left-associated. The
// report counts the truncated infinite-sequence form, i.e. each conjunct is
// followed by its connective: sum_i (|conjunct_i| + 1).
struct GammaPrefix {
    std::size_t k = 0;
    FormulaPtr prefix;
    SizeReport report;
};

GammaPrefix gamma_prefix(std::size_t k, const std::vector<FormulaPtr>& S,
                         const FormulaPtr& Z, const CodecScheme& scheme);

// Rows (k, symbol_count) for k = 1..k_max with S drawn from the generator.
std::vector<std::pair<std::size_t, BigNat>> gamma_divergence(
    const std::function<FormulaPtr(std::size_t)>& gen, const FormulaPtr& Z,
    std::size_t k_max, const CodecScheme& scheme);

}  // namespace goedel
