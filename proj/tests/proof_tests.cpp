#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gen.hpp"
#include "goedel/parser.hpp"
#include "goedel/printer.hpp"
#include "goedel/proof.hpp"

using namespace goedel;

static const CodecScheme kPos = CodecScheme::positional();
static const CodecScheme kPrime = CodecScheme::prime_power();

static FormulaPtr F(const std::string& text) { return parse_formula(text); }

// Enumeration oracle: walks sequence space instead of integer space. Every
// digit string over the alphabet with value <= max is generated explicitly,
// so nothing the integer scan should find can hide between digits.
namespace oracle {

void candidate(const std::vector<uint8_t>& seq, uint64_t value,
               std::vector<std::pair<uint64_t, BigNat>>& out) {
    std::string text;
    for (uint8_t d : seq) text += d == kProofSep ? "\n" : symbol_text(d);
    std::vector<FormulaPtr> lines;
    std::size_t start = 0;
    try {
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

void scan(std::vector<uint8_t>& seq, uint64_t value, uint64_t max,
          std::vector<std::pair<uint64_t, BigNat>>& out) {
    if (!seq.empty()) candidate(seq, value, out);
    for (uint8_t d = 1; d <= kMaxSymbolCode; ++d) {
        if (!is_symbol_code(d)) continue;
        uint64_t next = value * 32 + d;
        if (next > max) break;  // digits ascend, later ones only grow
        seq.push_back(d);
        scan(seq, next, max, out);
        seq.pop_back();
    }
}

std::vector<std::pair<uint64_t, BigNat>> scan_sequences(uint64_t max) {
    std::vector<std::pair<uint64_t, BigNat>> out;
    std::vector<uint8_t> seq;
    scan(seq, 0, max, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle

TEST_CASE("propositional schemas") {
    CHECK(match_axiom(F("0=0 -> (z=z -> 0=0)")) == Axiom::K);
    CHECK(match_axiom(F("(0=0 -> (z=0 -> x=0)) -> ((0=0 -> z=0) -> (0=0 -> x=0))")) ==
          Axiom::S);
    CHECK(match_axiom(F("(~(0=0) -> ~(z=0)) -> (z=0 -> 0=0)")) == Axiom::CP);
    CHECK(!match_axiom(F("0=0 -> (z=z -> z=0)")));
    CHECK(!match_axiom(F("(0=0 -> (z=0 -> x=0)) -> ((0=0 -> z=0) -> (0=0 -> z=0))")));
    CHECK(!match_axiom(F("z=0")));
}

TEST_CASE("arithmetic sentences match exactly, not up to renaming") {
    CHECK(match_axiom(F("AxAy(sx=sy -> x=y)")) == Axiom::Q1);
    CHECK(match_axiom(F("Ax~(sx=0)")) == Axiom::Q2);
    CHECK(match_axiom(F("Ax(~(x=0) -> Ey(x=sy))")) == Axiom::Q3);
    CHECK(match_axiom(F("Ax((x+0)=x)")) == Axiom::Q4);
    CHECK(match_axiom(F("AxAy((x+sy)=s(x+y))")) == Axiom::Q5);
    CHECK(match_axiom(F("Ax((x*0)=0)")) == Axiom::Q6);
    CHECK(match_axiom(F("AxAy((x*sy)=((x*y)+x))")) == Axiom::Q7);
    CHECK(!match_axiom(F("AzAy(sz=sy -> z=y)")));  // wrong variables
    CHECK(!match_axiom(F("Ax((0+x)=x)")));         // flipped arguments
}

TEST_CASE("equality reflexivity wants a closed term") {
    CHECK(match_axiom(F("ss0=ss0")) == Axiom::EqRefl);
    CHECK(match_axiom(F("sub(N[5],0)=sub(N[5],0)")) == Axiom::EqRefl);
    CHECK(!match_axiom(F("x=x")));
    CHECK(!match_axiom(F("ss0=s0")));
}

TEST_CASE("equality substitution recovers the template") {
    CHECK(match_axiom(F("ss0=sss0 -> (P(ss0,0) -> P(sss0,0))")) == Axiom::EqSub);
    CHECK(match_axiom(F("0=s0 -> (P(0,0) -> P(s0,0))")) == Axiom::EqSub);
    // template may leave other copies of t alone
    CHECK(match_axiom(F("0=s0 -> (P(0,0) -> P(s0,0))")) == Axiom::EqSub);
    CHECK(match_axiom(F("0=s0 -> ((0=0 & P(0,0)) -> (0=0 & P(s0,0)))")) == Axiom::EqSub);
    // identical sides collapse to requiring identical wings
    CHECK(match_axiom(F("s0=s0 -> (P(s0,0) -> P(s0,0))")) == Axiom::EqSub);
    CHECK(!match_axiom(F("s0=s0 -> (P(s0,0) -> P(0,0))")));
    CHECK(!match_axiom(F("ss0=sss0 -> (P(ss0,0) -> P(sss0,s0))")));
    CHECK(!match_axiom(F("x=s0 -> (P(x,0) -> P(s0,0))")));  // open left side
    // differing under a quantifier is fine when the variables allow it
    CHECK(match_axiom(F("0=s0 -> (Ax(x=0) -> Ax(x=s0))")) == Axiom::EqSub);
}

TEST_CASE("universal instantiation with closed witnesses") {
    CHECK(match_axiom(F("Az(z=0) -> ss0=0")) == Axiom::UnivInst);
    CHECK(match_axiom(F("Az(P(z,z)) -> P(N[9],N[9])")) == Axiom::UnivInst);
    CHECK(match_axiom(F("Az(0=0) -> 0=0")) == Axiom::UnivInst);  // vacuous binder
    CHECK(match_axiom(F("Az(Az(z=0)) -> Az(z=0)")) == Axiom::UnivInst);
    CHECK(!match_axiom(F("Az(z=0) -> x=0")));  // open witness
    CHECK(!match_axiom(F("Az(P(z,z)) -> P(s0,ss0)")));
}

TEST_CASE("substitution evaluation is checked by the evaluator") {
    CHECK(match_axiom(F("sub(N[20641],ss0)=N[2163873]")) == Axiom::SubEval);
    CHECK(match_axiom(F("sub(N[20641],0)=N[1185]")) == Axiom::SubEval);
    CHECK(!match_axiom(F("sub(N[20641],ss0)=N[2163874]")));
    CHECK(!match_axiom(F("sub(N[1185],0)=N[1185]")));   // no free variable inside
    CHECK(!match_axiom(F("sub(N[32],0)=N[1185]")));     // argument does not decode
    CHECK(!match_axiom(F("sub(x,0)=N[1185]")));         // open argument
}

TEST_CASE("the schema order is pinned: K wins over EqSub") {
    CHECK(match_axiom(F("0=0 -> (0=0 -> 0=0)")) == Axiom::K);
}

TEST_CASE("check_proof accepts modus ponens and generalization") {
    std::vector<FormulaPtr> mp = {F("0=0"), F("0=0 -> (0=0 -> 0=0)"), F("0=0 -> 0=0")};
    Verdict v = check_proof(mp);
    CHECK(v.valid);

    std::vector<FormulaPtr> gen = {F("0=0"), F("Az(0=0)"), F("Aw(Az(0=0))")};
    CHECK(check_proof(gen).valid);
}

TEST_CASE("check_proof pins the failure line and reason") {
    Verdict v = check_proof({F("z=0")});
    CHECK(!v.valid);
    CHECK(v.line == 1);
    CHECK(v.reason == "not-an-axiom");

    v = check_proof({F("0=0"), F("z=0")});
    CHECK(!v.valid);
    CHECK(v.line == 2);
    CHECK(v.reason == "not-justified");

    v = check_proof({});
    CHECK(!v.valid);
    CHECK(v.reason == "empty proof");

    // modus ponens needs the antecedent on an earlier line
    v = check_proof({F("0=0 -> (0=0 -> 0=0)"), F("0=0 -> 0=0")});
    CHECK(!v.valid);
    CHECK(v.line == 2);
}

TEST_CASE("proof codes join lines with the separator digit") {
    std::vector<FormulaPtr> lines = {F("0=0"), F("0=0")};
    BigNat code = encode_proof(lines, kPos);
    CHECK(code == BigNat("151q151", 32));  // q is digit 26
    std::vector<FormulaPtr> back = decode_proof(code, kPos);
    REQUIRE(back.size() == 2);
    CHECK(formula_eq(back[0], lines[0]));
    CHECK(formula_eq(back[1], lines[1]));

    // single line: the proof code is the formula code
    CHECK(encode_proof({F("0=0")}, kPos) == 1185);

    CHECK_THROWS_AS(encode_proof({}, kPos), EmptySequence);
    CHECK_THROWS_AS(decode_proof(BigNat("151qq151", 32), kPos), NotDecodable);
    CHECK_THROWS_AS(decode_proof(BigNat("151q", 32), kPos), NotDecodable);
    CHECK_THROWS_AS(decode_proof(BigNat("q151", 32), kPos), NotDecodable);
}

TEST_CASE("proof codes under the prime tower") {
    // exponents are line codes, so only tiny lines keep the tower in reach:
    // 2^2430 * 3^2430 is fine, but one quantifier pushes a line code past
    // 10^33 and the tower over the bit budget
    std::vector<FormulaPtr> lines = {F("0=0"), F("0=0")};
    BigNat code = encode_proof(lines, kPrime);
    std::vector<FormulaPtr> back = decode_proof(code, kPrime);
    REQUIRE(back.size() == 2);
    CHECK(formula_eq(back[0], lines[0]));
    CHECK(formula_eq(back[1], lines[1]));
    BigNat t2430;
    mpz_ui_pow_ui(t2430.get_mpz_t(), 2, 2430);
    BigNat t3;
    mpz_ui_pow_ui(t3.get_mpz_t(), 3, 2430);
    CHECK(code == t2430 * t3);
    CHECK(proves(code, BigNat(2430), kPrime));
    CHECK_THROWS_AS(encode_proof({F("0=0"), F("Az(0=0)")}, kPrime), CapExceeded);
    // single line "0=0": 2^2430
    CHECK(encode_proof({F("0=0")}, kPrime) == t2430);
    CHECK(proves(t2430, BigNat(2430), kPrime));
}

TEST_CASE("proves is total and checks the conclusion code") {
    CHECK(proves(BigNat(1185), BigNat(1185), kPos));
    CHECK(!proves(BigNat(1185), BigNat(1186), kPos));
    CHECK(!proves(BigNat(20641), BigNat(20641), kPos));  // z=0 is not provable
    CHECK(!proves(BigNat(0), BigNat(0), kPos));
    CHECK(!proves(BigNat(25), BigNat(25), kPos));
    CHECK(!proves(BigNat(37946), BigNat(1185), kPos));  // trailing separator local
    // a non-canonical single-line proof of 0=0: raw digits ( 0 = 0 )
    CHECK(proves(BigNat(6329383), BigNat(1185), kPos));
    CHECK(!proves(BigNat(6329383), BigNat(6329383), kPos));  // s must be canonical
    // three-line modus ponens round trip
    std::vector<FormulaPtr> mp = {F("0=0"), F("0=0 -> (0=0 -> 0=0)"), F("0=0 -> 0=0")};
    BigNat r = encode_proof(mp, kPos);
    CHECK(proves(r, encode_formula(F("0=0 -> 0=0"), kPos), kPos));
    CHECK(!proves(r, BigNat(1185), kPos));
}

TEST_CASE("enumeration up to 1185 finds exactly the reflexivity line") {
    auto pairs = enumerate_provable(1185, kPos);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].first == 1185);
    CHECK(pairs[0].second == 1185);
}

TEST_CASE("enumeration ladder: counts step up at the two smallest proofs") {
    CHECK(enumerate_provable(1000, kPos).empty());
    auto at1200 = enumerate_provable(1200, kPos);
    REQUIRE(at1200.size() == 1);
    CHECK(at1200[0].first == 1185);
    auto at3m = enumerate_provable(3000000, kPos);
    REQUIRE(at3m.size() == 2);
    CHECK(at3m[0].first == 1185);
    CHECK(at3m[1].first == 2135105);  // s0=s0
    CHECK(at3m[1].second == 2135105);
}

TEST_CASE("integer scan equals the sequence-space oracle up to 50000") {
    auto got = enumerate_provable(50000, kPos);
    auto want = oracle::scan_sequences(50000);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].first == want[i].first);
        CHECK(got[i].second == want[i].second);
    }
    // and the window itself is pinned
    REQUIRE(got.size() == 1);
    CHECK(got[0].first == 1185);
}

TEST_CASE("prime-scheme enumeration finds the smallest towers") {
    // 2^2430 is astronomically large; nothing below a modest bound is a
    // valid tower proof, because the exponent of 2 must itself decode.
    CHECK(enumerate_provable(100000, kPrime).empty());
}

TEST_CASE("random valid proofs stay valid through the codecs") {
    testgen::Gen gen(0x9009);
    std::vector<FormulaPtr> axioms = {
        F("0=0"), F("ss0=ss0"), F("Ax~(sx=0)"), F("AxAy(sx=sy -> x=y)"),
        F("sub(N[20641],0)=N[1185]")};
    for (int i = 0; i < 50; ++i) {
        std::vector<FormulaPtr> lines;
        std::size_t len = 1 + gen.pick(4);
        for (std::size_t k = 0; k < len; ++k) lines.push_back(axioms[gen.pick(axioms.size())]);
        // cap off with a generalization of the last line
        lines.push_back(f_forall('u', lines.back()));
        REQUIRE(check_proof(lines).valid);
        BigNat r = encode_proof(lines, kPos);
        BigNat s = encode_formula(lines.back(), kPos);
        CHECK(proves(r, s, kPos));
        auto back = decode_proof(r, kPos);
        REQUIRE(back.size() == lines.size());
        for (std::size_t k = 0; k < lines.size(); ++k)
            CHECK(formula_eq(back[k], lines[k]));
    }
}
