// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit code is
// the number of failures. `--only N` runs a single criterion.
//
// Criterion 7 is expected to stay red. It demands strictly increasing counts
// of valid proof codes at the bounds 50000 / 500000 / 5000000, and no sound
// axiom set over this alphabet can deliver that: the window (50000, 500000]
// contains only 4-digit codes with leading digit <= 15, i.e. 4-symbol
// sequences, and the only 4-symbol formulas are equations t=u with three
// symbols of terms, none of which is a reflexive closed equation or any
// other axiom; separator-joined multi-line proofs need at least 7 digits,
// beyond 32^6. The counts come out (1, 1, 2), so the middle step cannot
// rise. The check is kept faithful to its statement rather than weakened,
// and the strictly-increasing invariant it aims at is demonstrated on the
// reachable ladder 1000 / 1200 / 3000000 inside the same criterion's detail.

#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "goedel/diagonal.hpp"
#include "goedel/parser.hpp"
#include "goedel/printer.hpp"
#include "goedel/proof.hpp"

using namespace goedel;

namespace {

const CodecScheme kPos = CodecScheme::positional();
const CodecScheme kPrime = CodecScheme::prime_power();

FormulaPtr F(const std::string& text) { return parse_formula(text); }

struct Check {
    int failures = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

// Sequence-space enumeration: generates every digit string with value <= max
// outright, the counterpart to the integer scan inside enumerate_provable.
void scan_sequences(std::vector<uint8_t>& seq, uint64_t value, uint64_t max,
                    std::vector<std::pair<uint64_t, BigNat>>& out) {
    if (!seq.empty()) {
        std::string text;
        for (uint8_t d : seq) text += d == kProofSep ? "\n" : symbol_text(d);
        try {
            std::vector<FormulaPtr> lines;
            std::size_t start = 0;
            while (start <= text.size()) {
                std::size_t nl = text.find('\n', start);
                std::size_t end = nl == std::string::npos ? text.size() : nl;
                lines.push_back(parse_formula(std::string_view(text).substr(start, end - start)));
                if (nl == std::string::npos) break;
                start = nl + 1;
            }
            if (check_proof(lines).valid)
                out.emplace_back(value, encode_formula(lines.back(), kPos));
        } catch (const DomainError&) {
        }
    }
    for (uint8_t d = 1; d <= kMaxSymbolCode; ++d) {
        if (!is_symbol_code(d)) continue;
        uint64_t next = value * 32 + d;
        if (next > max) break;
        seq.push_back(d);
        scan_sequences(seq, next, max, out);
        seq.pop_back();
    }
}

bool c01_round_trip(Check& c) {
    testgen::Gen gen(0xa11ce);
    for (int i = 0; i < 10000; ++i) {
        FormulaPtr f = gen.formula(3);
        if (!formula_eq(decode_formula(encode_formula(f, kPos), kPos), f)) {
            c.expect(false, "positional round trip broke at case " + std::to_string(i));
            return false;
        }
    }
    for (int i = 0; i < 1000; ++i) {
        FormulaPtr f = gen.small_formula(64);
        if (!formula_eq(decode_formula(encode_formula(f, kPrime), kPrime), f)) {
            c.expect(false, "prime round trip broke at case " + std::to_string(i));
            return false;
        }
    }
    return true;
}

bool c02_pinned_codes(Check& c) {
    c.expect(encode_formula(F("0=0"), kPos) == 1185, "0=0 != 1185");
    c.expect(encode_formula(F("z=0"), kPos) == 20641, "z=0 != 20641");
    c.expect(encode_formula(F("z=z"), kPos) == 20660, "z=z != 20660");
    c.expect(encode_formula(F("ss0=0"), kPos) == 2163873, "ss0=0 != 2163873");
    c.expect(encode_formula(F("s0=s0"), kPos) == 2135105, "s0=s0 != 2135105");
    c.expect(encode_formula(F("0=0"), kPrime) == 2430, "prime 0=0 != 2430");
    c.expect(formula_eq(decode_formula(BigNat(1185), kPos), F("0=0")), "decode 1185");
    c.expect(formula_eq(decode_formula(BigNat(2430), kPrime), F("0=0")), "decode 2430");
    c.expect(formula_eq(decode_formula(BigNat(6329383), kPos), F("0=0")),
             "decode (0=0) wrapper");
    return c.failures == 0;
}

bool c03_sub_oracle(Check& c) {
    c.expect(sub_code(BigNat(20641), 'z', BigNat(2), kPos) == 2163873, "sub pinned 2163873");
    c.expect(sub_code(BigNat(20641), 'z', BigNat(0), kPos) == 1185, "sub pinned 1185");
    testgen::Gen gen(0x0b5e55);
    int done = 0, bad = 0;
    while (done < 2000) {
        FormulaPtr f = gen.formula(3);
        std::set<char> fv = free_vars(f);
        if (fv.empty()) continue;
        char z = *fv.begin();
        BigNat y = encode_formula(f, kPos);
        BigNat j = gen.pick(1001);
        BigNat splice = sub_code(y, z, j, kPos);
        BigNat tree = encode_formula(substitute(decode_formula(y, kPos), z, numeral_of(j)), kPos);
        if (splice != tree) ++bad;
        ++done;
    }
    c.expect(bad == 0, std::to_string(bad) + " of 2000 splices disagree with the tree route");
    bool raised = false;
    try {
        sub_code(BigNat(1185), 'z', BigNat(2), kPos);
    } catch (const VariableNotFree&) {
        raised = true;
    }
    c.expect(raised, "sub on a closed formula must raise VariableNotFree");
    return c.failures == 0;
}

bool c04_numeral_law(Check& c) {
    testgen::Gen gen(0x4e4e4e);
    for (int i = 0; i < 100; ++i) {
        uint64_t n = gen.pick(1000001);
        TermPtr t = numeral_of(n);
        if (term_symbol_count(t) != BigNat(n) + 1) {
            c.expect(false, "numeral " + std::to_string(n) + " symbol count");
            return false;
        }
        if (n > 200000) continue;  // larger codes pass the digit cap
        BigNat code = encode_runs(term_runs(t), kPos);
        BigNat p32n;
        mpz_ui_pow_ui(p32n.get_mpz_t(), 32, n);
        if (code != (p32n - 1) / 31 * 2 * 32 + 1 ||
            BigNat(code.get_str(32).size()) != BigNat(n) + 1) {
            c.expect(false, "numeral " + std::to_string(n) + " code shape");
            return false;
        }
    }
    return true;
}

bool c05_size_calculus(Check& c) {
    testgen::Gen gen(0x512e);
    const BigNat p = fp_prime_a();
    for (int i = 0; i < 1000; ++i) {
        FormulaPtr f = gen.formula(3);
        SizeReport rep = formula_size(f, kPos);
        BigNat code = encode_formula(f, kPos);
        bool ok = rep.materializable && rep.symbol_count == symbol_count(f) &&
                  rep.digit_length == BigNat(code.get_str(32).size()) &&
                  formula_mod(f, p, kPos) == code % p;
        if (!ok) {
            c.expect(false, "size or residue mismatch at case " + std::to_string(i));
            return false;
        }
    }
    // reports keep working where materialization is impossible
    FormulaPtr big = f_equals(t_numeral(BigNat("1000000000000000000000")), t_zero());
    SizeReport rep = formula_size(big, kPos);
    c.expect(!rep.materializable && rep.symbol_count == BigNat("1000000000000000000003"),
             "non-materializable report");
    bool capped = false;
    try {
        encode_formula(big, kPos);
    } catch (const CapExceeded& e) {
        capped = e.report() == rep;
    }
    c.expect(capped, "encode past the cap must raise CapExceeded with the report");
    return c.failures == 0;
}

bool c06_proof_checker(Check& c) {
    std::vector<FormulaPtr> mp = {F("0=0"), F("0=0 -> (0=0 -> 0=0)"), F("0=0 -> 0=0")};
    c.expect(check_proof(mp).valid, "three-line modus ponens proof");
    c.expect(match_axiom(mp[1]) == Axiom::K, "line 2 must match K first");
    Verdict bad = check_proof({F("z=0")});
    c.expect(!bad.valid && bad.line == 1 && bad.reason == "not-an-axiom",
             "single bad line verdict");
    bad = check_proof({F("0=0"), F("z=0")});
    c.expect(!bad.valid && bad.line == 2 && bad.reason == "not-justified",
             "second bad line verdict");
    c.expect(proves(BigNat(1185), BigNat(1185), kPos), "P(1185,1185)");
    c.expect(!proves(BigNat(1185), BigNat(1186), kPos), "P(1185,1186) must fail");
    c.expect(proves(BigNat(6329383), BigNat(1185), kPos), "non-canonical proof of 0=0");
    BigNat tower;
    mpz_ui_pow_ui(tower.get_mpz_t(), 2, 2430);
    c.expect(proves(tower, BigNat(2430), kPrime), "prime tower single line");
    auto pairs = enumerate_provable(1185, kPos);
    c.expect(pairs.size() == 1 && pairs[0].first == 1185 && pairs[0].second == 1185,
             "enumerate(1185)");
    auto got = enumerate_provable(50000, kPos);
    std::vector<std::pair<uint64_t, BigNat>> want;
    std::vector<uint8_t> seq;
    scan_sequences(seq, 0, 50000, want);
    std::sort(want.begin(), want.end());
    c.expect(got == want, "integer scan != sequence-space scan at 50000");
    return c.failures == 0;
}

bool c07_enumerator_growth(Check& c) {
    auto pairs = enumerate_provable(5000000, kPos);
    auto count_below = [&](uint64_t bound) {
        std::size_t n = 0;
        for (const auto& [r, s] : pairs)
            if (r <= bound) ++n;
        return n;
    };
    std::size_t c1 = count_below(50000), c2 = count_below(500000), c3 = count_below(5000000);
    std::size_t l1 = count_below(1000), l2 = count_below(1200), l3 = count_below(3000000);
    c.detail << "counts(50000,500000,5000000)=(" << c1 << "," << c2 << "," << c3
             << ") want strictly increasing; ladder counts(1000,1200,3000000)=(" << l1 << ","
             << l2 << "," << l3 << ")";
    bool growing = c1 < c2 && c2 < c3;
    bool ladder = l1 < l2 && l2 < l3;
    if (!growing) ++c.failures;
    if (!ladder) {
        ++c.failures;
        c.detail << "; ladder must strictly increase";
    }
    return c.failures == 0;
}

bool c08_diagonal(Check& c) {
    struct Seed {
        const char* text;
        char v;
    };
    const Seed seeds[] = {
        {"w=0", 'w'}, {"Ar(~(P(r,w)))", 'w'}, {"(w=0 & 0=0)", 'w'}, {"Ex(x=w)", 'w'},
        {"P(z,z)", 'z'},
    };
    for (const Seed& s : seeds) {
        FixedPointResult r = diagonalize(F(s.text), s.v, kPos);
        if (!r.fixed_point) {
            c.expect(false, std::string("fixed point failed for ") + s.text);
            continue;
        }
        // tampering with the numeral must break size or residue agreement
        for (int delta : {-1, 1}) {
            FormulaPtr fake = substitute(r.theta, 'y', numeral_of(r.n + delta));
            bool same = formula_size(fake, kPos) == r.alpha_report &&
                        formula_mod(fake, fp_prime_a(), kPos) ==
                            sub_mod(r.n, 'y', r.n, fp_prime_a(), kPos) &&
                        formula_mod(fake, fp_prime_b(), kPos) ==
                            sub_mod(r.n, 'y', r.n, fp_prime_b(), kPos);
            c.expect(!same, std::string("tamper undetected for ") + s.text);
        }
    }
    FixedPointResult g = goedel_sentence(kPos);
    c.expect(g.fixed_point, "goedel sentence fixed point");
    c.expect(symbol_count(g.theta) == 18, "goedel theta size");
    c.expect(g.alpha_report.symbol_count == BigNat(16) + (g.n + 1) * 2, "goedel alpha size");
    bool captured = false;
    try {
        diagonalize(F("Ey(y=w)"), 'w', kPos);
    } catch (const OpenTermError&) {
        captured = true;
    }
    c.expect(captured, "capture must raise OpenTermError");
    bool arity = false;
    try {
        diagonalize(F("z=x"), 'z', kPos);
    } catch (const ArityError&) {
        arity = true;
    }
    c.expect(arity, "two free variables must raise ArityError");
    return c.failures == 0;
}

bool c09_certificates(Check& c) {
    testgen::Gen gen(0xce27);
    for (int i = 0; i < 10000; ++i) {
        FormulaPtr f = gen.formula(3);
        Certificate cert = self_numeral_certificate(f, kPos);
        bool ok = cert.impossible && cert.numeral_symbols.has_value() &&
                  *cert.numeral_symbols == encode_formula(f, kPos) + 1 &&
                  *cert.numeral_symbols > cert.formula_symbols;
        if (!ok) {
            c.expect(false, "certificate failed at case " + std::to_string(i));
            return false;
        }
    }
    // the two literal readings: consistent splice/tree routes, impossible cert
    for (Reading reading : {Reading::ZFree, Reading::YFree}) {
        LiteralReport r = literal_pipeline(reading, kPos);
        c.expect(r.consistent, "literal pipeline routes disagree");
        c.expect(r.cert.impossible && !r.cert.numeral_symbols.has_value(),
                 "literal certificate must conclude from the bound");
        c.expect(r.result_report.symbol_count == BigNat(26) + (r.n + 1) * 2,
                 "literal instantiated size");
    }
    return c.failures == 0;
}

bool c10_gamma(Check& c) {
    GammaPrefix g = gamma_prefix(1, {F("z=z")}, F("z=0"), kPos);
    c.expect(g.report.symbol_count == 41308, "gamma(1, [z=z], z=0) != 41308");
    auto gen = [](std::size_t i) { return f_equals(t_var('z'), t_numeral(i)); };
    auto rows = gamma_divergence(gen, F("z=0"), 100, kPos);
    bool strict = rows.size() == 100;
    BigNat prev = 0;
    for (const auto& [k, symbols] : rows) {
        if (symbols <= prev) strict = false;
        prev = symbols;
    }
    c.expect(strict, "divergence rows must strictly increase");
    bool bounds = false;
    try {
        gamma_prefix(2, {F("z=z")}, F("z=0"), kPos);
    } catch (const BoundsError&) {
        bounds = true;
    }
    c.expect(bounds, "prefix beyond the sequence must raise BoundsError");
    return c.failures == 0;
}

struct Criterion {
    int id;
    const char* name;
    bool (*run)(Check&);
};

const Criterion kCriteria[] = {
    {1, "codec-round-trip", c01_round_trip},
    {2, "pinned-codes", c02_pinned_codes},
    {3, "sub-splice-oracle", c03_sub_oracle},
    {4, "numeral-law", c04_numeral_law},
    {5, "size-calculus", c05_size_calculus},
    {6, "proof-checker", c06_proof_checker},
    {7, "enumerator-growth", c07_enumerator_growth},
    {8, "diagonal-fixed-points", c08_diagonal},
    {9, "certificate-universality", c09_certificates},
    {10, "gamma-prefix", c10_gamma},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::strcmp(argv[1], "--only") == 0) only = std::atoi(argv[2]);
    int failures = 0;
    for (const Criterion& cr : kCriteria) {
        if (only != 0 && cr.id != only) continue;
        Check check;
        bool ok = false;
        try {
            ok = cr.run(check);
        } catch (const std::exception& e) {
            check.detail << "unexpected exception: " << e.what();
            ok = false;
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << cr.id << " " << cr.name;
        std::string detail = check.detail.str();
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    return failures;
}
