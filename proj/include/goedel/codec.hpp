#pragma once

#include <cstdint>
#include <optional>

#include "goedel/ast.hpp"
#include "goedel/bignat.hpp"
#include "goedel/errors.hpp"

namespace goedel {

// Two numbering schemes over the same alphabet:
//   Positional: digit concatenation, code = sum sym_i * base^(L-1-i).
//   PrimePower: product of p_i ^ sym_i over the first L primes.
// Positional is the default and the only scheme with a size calculus.
struct CodecScheme {
    enum class Kind { Positional, PrimePower };

    Kind kind = Kind::Positional;
    unsigned base = 32;            // must strictly exceed the largest symbol code
    std::size_t prime_cap = 64;    // PrimePower: max expanded sequence length

    // Codes longer than this many digits are reported, never materialized.
    // 209715 = floor(2^20 bits / 5 bits per base-32 digit).
    std::size_t cap_digits = 209715;

    static CodecScheme positional(unsigned base = 32);
    static CodecScheme prime_power();
    bool positional_p() const { return kind == Kind::Positional; }
};

// Sequence level. encode_runs throws EmptySequence on an empty sequence and
// CapExceeded (with the SizeReport) past the materialization cap.
BigNat encode_runs(const RunSeq& runs, const CodecScheme& scheme);
RunSeq decode_runs(const BigNat& n, const CodecScheme& scheme);

// Formula level: canonical sequence of f, and decode+parse back.
BigNat encode_formula(const FormulaPtr& f, const CodecScheme& scheme);
FormulaPtr decode_formula(const BigNat& n, const CodecScheme& scheme);

// Size calculus (Positional only; PrimePower raises UnsupportedScheme).
SizeReport runs_size(const RunSeq& runs, const CodecScheme& scheme);
SizeReport formula_size(const FormulaPtr& f, const CodecScheme& scheme);

// Code modulo p without materialization, via run arithmetic. Exponents in the
// geometric terms may be astronomically large; mpz_powm carries them.
BigNat runs_mod(const RunSeq& runs, const BigNat& p, const CodecScheme& scheme);
BigNat formula_mod(const FormulaPtr& f, const BigNat& p, const CodecScheme& scheme);

// Unary numeral with n 's' symbols: expanded symbol count is n+1.
TermPtr numeral_of(const BigNat& n);

// Code-level substitution: splices the digit runs of Numeral(j) into every
// free occurrence of z inside the formula coded by y. Result equals
// encode(substitute(decode(y), z, Numeral(j))) but is computed on digit
// slices of y, not by re-encoding the substituted tree.
// Throws NotDecodable, VariableNotFree, CapExceeded.
BigNat sub_code(const BigNat& y, char z, const BigNat& j, const CodecScheme& scheme);

// Size and residue of the sub result without materializing it.
SizeReport sub_size(const BigNat& y, char z, const BigNat& j, const CodecScheme& scheme);
BigNat sub_mod(const BigNat& y, char z, const BigNat& j, const BigNat& p,
               const CodecScheme& scheme);

// The i-th prime, 0-based, from a lazily extended table.
const BigNat& nth_prime(std::size_t i);

// Fingerprint moduli used by the diagonal verification.
inline const BigNat& fp_prime_a() {
    static const BigNat p("2305843009213693951");  // 2^61 - 1
    return p;
}
inline const BigNat& fp_prime_b() {
    static const BigNat p("18446744073709551557");  // 2^64 - 59
    return p;
}

}  // namespace goedel
