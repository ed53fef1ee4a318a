#include "goedel/codec.hpp"

#include <algorithm>
#include <string>

#include "goedel/parser.hpp"
#include "goedel/printer.hpp"

namespace goedel {

namespace {

// base^k for materialized work; k is bounded by the digit cap here.
BigNat pow_base(unsigned base, std::size_t k) {
    BigNat out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, k);
    return out;
}

// (base^k - 1) / (base - 1): value of k copies of digit 1.
BigNat repunit(unsigned base, std::size_t k) {
    BigNat out = pow_base(base, k) - 1;
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), base - 1);
    return out;
}

// base^k mod m with an arbitrary-precision exponent.
BigNat pow_base_mod(unsigned base, const BigNat& k, const BigNat& m) {
    BigNat b = base, out;
    mpz_powm(out.get_mpz_t(), b.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
    return out;
}

// repunit(base, k) mod m without materializing, via the exact quotient
// ((base^k - 1) mod (base-1)m) / (base-1), which (base-1) always divides.
BigNat repunit_mod(unsigned base, const BigNat& k, const BigNat& m) {
    BigNat big = m * (base - 1);
    BigNat x = pow_base_mod(base, k, big);
    x = (x + big - 1) % big;
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), base - 1);
    return x % m;
}

void require_code(uint8_t code, unsigned base) {
    if (!is_symbol_code(code) || code >= base)
        throw NotDecodable("symbol code " + std::to_string(code) + " outside the alphabet");
}

std::size_t checked_size(const BigNat& n, const char* what) {
    if (!n.fits_ulong_p())
        throw CapExceeded(std::string(what) + " beyond addressable range",
                          SizeReport{n, n, false});
    return n.get_ui();
}

std::vector<uint8_t> expand_runs(const RunSeq& runs, std::size_t cap, const char* capname) {
    std::vector<uint8_t> symbols;
    for (const Run& r : runs) {
        std::size_t k = checked_size(r.count, "run length");
        if (symbols.size() + k > cap) {
            BigNat total = runs_length(runs);
            throw CapExceeded(std::string(capname), SizeReport{total, total, false});
        }
        symbols.insert(symbols.end(), k, r.code);
    }
    return symbols;
}

}  // namespace

// PrimePower sequences are short, so the table stays tiny.
const BigNat& nth_prime(std::size_t i) {
    static std::vector<BigNat> primes{2};
    while (primes.size() <= i) {
        BigNat next;
        mpz_nextprime(next.get_mpz_t(), primes.back().get_mpz_t());
        primes.push_back(next);
    }
    return primes[i];
}

CodecScheme CodecScheme::positional(unsigned base) {
    // get_str/set_str digit characters are only consistent up to base 36,
    // and every symbol code must be a single digit.
    if (base <= kMaxSymbolCode || base > 36)
        throw DomainError("BadBase",
                          "positional base must be in (" + std::to_string(kMaxSymbolCode) +
                              ", 36], got " + std::to_string(base));
    CodecScheme s;
    s.kind = Kind::Positional;
    s.base = base;
    return s;
}

CodecScheme CodecScheme::prime_power() {
    CodecScheme s;
    s.kind = Kind::PrimePower;
    return s;
}

SizeReport runs_size(const RunSeq& runs, const CodecScheme& scheme) {
    if (!scheme.positional_p())
        throw UnsupportedScheme("size calculus is defined for positional codes only");
    BigNat total = runs_length(runs);
    SizeReport rep;
    rep.symbol_count = total;
    rep.digit_length = total;  // one digit per symbol
    rep.materializable = total <= scheme.cap_digits;
    return rep;
}

SizeReport formula_size(const FormulaPtr& f, const CodecScheme& scheme) {
    return runs_size(formula_runs(f), scheme);
}

BigNat encode_runs(const RunSeq& runs, const CodecScheme& scheme) {
    if (runs.empty()) throw EmptySequence();
    if (scheme.positional_p()) {
        SizeReport rep = runs_size(runs, scheme);
        if (!rep.materializable)
            throw CapExceeded("code exceeds the materialization cap", rep);
        BigNat value = 0;
        for (const Run& r : runs) {
            require_code(r.code, scheme.base);
            std::size_t k = r.count.get_ui();  // bounded by the cap check above
            if (scheme.base == 32)
                mpz_mul_2exp(value.get_mpz_t(), value.get_mpz_t(), 5 * k);
            else
                value *= pow_base(scheme.base, k);
            value += repunit(scheme.base, k) * r.code;
        }
        return value;
    }
    std::vector<uint8_t> symbols =
        expand_runs(runs, scheme.prime_cap, "sequence exceeds the prime-power cap");
    BigNat value = 1, power;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        require_code(symbols[i], 32);
        mpz_pow_ui(power.get_mpz_t(), nth_prime(i).get_mpz_t(), symbols[i]);
        value *= power;
    }
    return value;
}

RunSeq decode_runs(const BigNat& n, const CodecScheme& scheme) {
    if (n == 0) throw NotDecodable("zero codes no sequence");
    RunSeq runs;
    auto push = [&](uint8_t code, const BigNat& count) {
        if (!runs.empty() && runs.back().code == code)
            runs.back().count += count;
        else
            runs.push_back({code, count});
    };
    if (scheme.positional_p()) {
        std::string digits = n.get_str(scheme.base);
        if (digits.size() > scheme.cap_digits) {
            BigNat len = digits.size();
            throw CapExceeded("code exceeds the materialization cap", SizeReport{len, len, false});
        }
        for (std::size_t i = 0; i < digits.size(); ++i) {
            char c = digits[i];
            uint8_t d = c <= '9' ? static_cast<uint8_t>(c - '0')
                                 : static_cast<uint8_t>(c - 'a' + 10);
            if (!is_symbol_code(d))
                throw NotDecodable("digit " + std::to_string(d) + " at position " +
                                   std::to_string(i) + " is not a symbol");
            push(d, 1);
        }
        return runs;
    }
    BigNat rest = n;
    for (std::size_t i = 0; rest != 1; ++i) {
        if (i >= scheme.prime_cap) {
            BigNat len = i;
            throw CapExceeded("sequence exceeds the prime-power cap", SizeReport{len, len, false});
        }
        const BigNat& p = nth_prime(i);
        unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        if (e == 0)
            throw NotDecodable("prime " + dec(p) + " is missing from the tower");
        if (e > kMaxSymbolCode || !is_symbol_code(static_cast<uint8_t>(e)))
            throw NotDecodable("exponent " + std::to_string(e) + " of prime " + dec(p) +
                               " is not a symbol");
        push(static_cast<uint8_t>(e), 1);
    }
    if (runs.empty()) throw NotDecodable("one codes the empty sequence");
    return runs;
}

BigNat encode_formula(const FormulaPtr& f, const CodecScheme& scheme) {
    return encode_runs(formula_runs(f), scheme);
}

FormulaPtr decode_formula(const BigNat& n, const CodecScheme& scheme) {
    RunSeq runs = decode_runs(n, scheme);
    for (const Run& r : runs)
        if (r.code == kProofSep)
            throw NotDecodable("proof separator inside a formula");
    return parse_formula(render_runs(runs));
}

BigNat runs_mod(const RunSeq& runs, const BigNat& p, const CodecScheme& scheme) {
    if (!scheme.positional_p())
        throw UnsupportedScheme("run arithmetic is defined for positional codes only");
    if (p <= 0) throw BoundsError("modulus must be positive");
    BigNat value = 0;
    for (const Run& r : runs) {
        require_code(r.code, scheme.base);
        value = value * pow_base_mod(scheme.base, r.count, p) +
                repunit_mod(scheme.base, r.count, p) * r.code;
        value %= p;
    }
    return value;
}

BigNat formula_mod(const FormulaPtr& f, const BigNat& p, const CodecScheme& scheme) {
    return runs_mod(formula_runs(f), p, scheme);
}

TermPtr numeral_of(const BigNat& n) { return t_numeral(n); }

namespace {

// Shared core of the sub family: the marked canonical runs of the formula
// coded by y, plus its free-occurrence count for z.
struct SubPlan {
    MarkedRuns marked;
    BigNat length;       // expanded canonical length of y's sequence
    BigNat occurrences;  // free z positions
};

SubPlan plan_sub(const BigNat& y, char z, const CodecScheme& scheme) {
    FormulaPtr f = decode_formula(y, scheme);
    SubPlan plan;
    plan.marked = formula_runs_marked(f, z);
    plan.length = runs_length(plan.marked.runs);
    plan.occurrences = plan.marked.free_positions.size();
    if (plan.occurrences == 0)
        throw VariableNotFree("'" + std::string(1, z) + "' is not free in the coded formula");
    return plan;
}

SizeReport sub_report(const SubPlan& plan, const BigNat& j, const CodecScheme& scheme) {
    SizeReport rep;
    // Each free occurrence (one digit) becomes a numeral of j+1 digits.
    rep.symbol_count = plan.length + plan.occurrences * j;
    rep.digit_length = rep.symbol_count;
    rep.materializable = rep.digit_length <= scheme.cap_digits;
    return rep;
}

// Walks the marked runs in expanded order, handing contiguous unmarked
// stretches and marked single symbols to the two sinks. This is the one
// traversal all three sub variants share; only the arithmetic differs.
template <class PlainSink, class MarkSink>
void walk_spliced(const SubPlan& plan, PlainSink&& plain, MarkSink&& mark) {
    std::size_t next_mark = 0;
    const auto& marks = plan.marked.free_positions;
    BigNat at = 0;
    for (const Run& r : plan.marked.runs) {
        BigNat end = at + r.count;
        BigNat cursor = at;
        while (next_mark < marks.size() && BigNat(marks[next_mark]) < end) {
            BigNat m = marks[next_mark];
            if (m > cursor) plain(r.code, m - cursor);
            mark();
            cursor = m + 1;
            ++next_mark;
        }
        if (end > cursor) plain(r.code, end - cursor);
        at = end;
    }
}

}  // namespace

SizeReport sub_size(const BigNat& y, char z, const BigNat& j, const CodecScheme& scheme) {
    if (!scheme.positional_p())
        throw UnsupportedScheme("the sub size calculus is positional only");
    return sub_report(plan_sub(y, z, scheme), j, scheme);
}

BigNat sub_code(const BigNat& y, char z, const BigNat& j, const CodecScheme& scheme) {
    if (!scheme.positional_p()) {
        // No digit strings to splice; substitute on the tree and re-encode.
        FormulaPtr f = decode_formula(y, scheme);
        if (count_free_occurrences(f, z) == 0)
            throw VariableNotFree("'" + std::string(1, z) + "' is not free in the coded formula");
        return encode_formula(substitute(f, z, numeral_of(j)), scheme);
    }
    SubPlan plan = plan_sub(y, z, scheme);
    SizeReport rep = sub_report(plan, j, scheme);
    if (!rep.materializable)
        throw CapExceeded("sub result exceeds the materialization cap", rep);
    std::size_t jj = j.get_ui();  // materializable, so j fits
    unsigned base = scheme.base;
    // Digit block of the numeral: j copies of the successor code, then zero.
    BigNat block = repunit(base, jj) * kSucc * base + kZero;
    BigNat value = 0;
    walk_spliced(
        plan,
        [&](uint8_t code, const BigNat& count) {
            std::size_t k = count.get_ui();
            value *= pow_base(base, k);
            value += repunit(base, k) * code;
        },
        [&]() {
            value *= pow_base(base, jj + 1);
            value += block;
        });
    return value;
}

BigNat sub_mod(const BigNat& y, char z, const BigNat& j, const BigNat& p,
               const CodecScheme& scheme) {
    if (!scheme.positional_p())
        throw UnsupportedScheme("run arithmetic is defined for positional codes only");
    if (p <= 0) throw BoundsError("modulus must be positive");
    SubPlan plan = plan_sub(y, z, scheme);
    unsigned base = scheme.base;
    BigNat block = (repunit_mod(base, j, p) * kSucc * base + kZero) % p;
    BigNat shift = pow_base_mod(base, j + 1, p);
    BigNat value = 0;
    walk_spliced(
        plan,
        [&](uint8_t code, const BigNat& count) {
            value = value * pow_base_mod(base, count, p) + repunit_mod(base, count, p) * code;
            value %= p;
        },
        [&]() { value = (value * shift + block) % p; });
    return value;
}

}  // namespace goedel
