#include "goedel/proof.hpp"

#include <array>
#include <functional>
#include <string_view>

#include "goedel/diagonal.hpp"
#include "goedel/parser.hpp"
#include "goedel/printer.hpp"

namespace goedel {

namespace {

bool is_implies(const FormulaPtr& f) { return f && f->kind == Formula::Kind::Implies; }
bool is_not(const FormulaPtr& f) { return f && f->kind == Formula::Kind::Not; }

// K: A -> (B -> A)
bool match_k(const FormulaPtr& f) {
    if (!is_implies(f) || !is_implies(f->f2)) return false;
    return formula_eq(f->f1, f->f2->f2);
}

// S: (A -> (B -> C)) -> ((A -> B) -> (A -> C))
bool match_s(const FormulaPtr& f) {
    if (!is_implies(f)) return false;
    const FormulaPtr& l = f->f1;
    const FormulaPtr& r = f->f2;
    if (!is_implies(l) || !is_implies(l->f2)) return false;
    if (!is_implies(r) || !is_implies(r->f1) || !is_implies(r->f2)) return false;
    const FormulaPtr& a = l->f1;
    const FormulaPtr& b = l->f2->f1;
    const FormulaPtr& c = l->f2->f2;
    return formula_eq(r->f1->f1, a) && formula_eq(r->f1->f2, b) &&
           formula_eq(r->f2->f1, a) && formula_eq(r->f2->f2, c);
}

// CP: (~A -> ~B) -> (B -> A)
bool match_cp(const FormulaPtr& f) {
    if (!is_implies(f)) return false;
    const FormulaPtr& l = f->f1;
    const FormulaPtr& r = f->f2;
    if (!is_implies(l) || !is_not(l->f1) || !is_not(l->f2) || !is_implies(r)) return false;
    return formula_eq(l->f1->f1, r->f2) && formula_eq(l->f2->f1, r->f1);
}

// The seven arithmetic sentences, closed over x and y.
const std::array<FormulaPtr, 7>& q_sentences() {
    static const std::array<FormulaPtr, 7> qs = [] {
        TermPtr x = t_var('x');
        TermPtr y = t_var('y');
        TermPtr zero = t_zero();
        auto all_x = [&](const FormulaPtr& f) { return f_forall('x', f); };
        auto all_xy = [&](const FormulaPtr& f) { return f_forall('x', f_forall('y', f)); };
        return std::array<FormulaPtr, 7>{
            // sx = sy -> x = y
            all_xy(f_implies(f_equals(t_succ(x), t_succ(y)), f_equals(x, y))),
            // ~(sx = 0)
            all_x(f_not(f_equals(t_succ(x), zero))),
            // ~(x = 0) -> Ey(x = sy)
            all_x(f_implies(f_not(f_equals(x, zero)),
                            f_exists('y', f_equals(x, t_succ(y))))),
            // x + 0 = x
            all_x(f_equals(t_plus(x, zero), x)),
            // x + sy = s(x + y)
            all_xy(f_equals(t_plus(x, t_succ(y)), t_succ(t_plus(x, y)))),
            // x * 0 = 0
            all_x(f_equals(t_times(x, zero), zero)),
            // x * sy = (x * y) + x
            all_xy(f_equals(t_times(x, t_succ(y)), t_plus(t_times(x, y), x))),
        };
    }();
    return qs;
}

// t = t, closed
bool match_eq_refl(const FormulaPtr& f) {
    return f->kind == Formula::Kind::Equals && term_eq(f->t1, f->t2) && is_closed_term(f->t1);
}

// Parallel anti-match: rebuilds the template whose v-instances at t and u are
// a and b. Differences must sit at term positions and be exactly t vs u.
TermPtr anti_term(const TermPtr& a, const TermPtr& b, const TermPtr& t, const TermPtr& u,
                  char v) {
    if (term_eq(a, b)) return a;
    if (term_eq(a, t) && term_eq(b, u)) return t_var(v);
    if (a->kind != b->kind) return nullptr;
    switch (a->kind) {
        case Term::Kind::Succ: {
            TermPtr inner = anti_term(a->a, b->a, t, u, v);
            return inner ? t_succ(inner) : nullptr;
        }
        case Term::Kind::Plus:
        case Term::Kind::Times:
        case Term::Kind::Sub: {
            TermPtr l = anti_term(a->a, b->a, t, u, v);
            TermPtr r = anti_term(a->b, b->b, t, u, v);
            if (!l || !r) return nullptr;
            return a->kind == Term::Kind::Plus    ? t_plus(l, r)
                   : a->kind == Term::Kind::Times ? t_times(l, r)
                                                  : t_sub(l, r);
        }
        default:
            return nullptr;  // unequal leaves that are not a t/u difference
    }
}

FormulaPtr anti_formula(const FormulaPtr& a, const FormulaPtr& b, const TermPtr& t,
                        const TermPtr& u, char v) {
    if (a->kind != b->kind) return nullptr;
    switch (a->kind) {
        case Formula::Kind::Equals:
        case Formula::Kind::Pred: {
            TermPtr l = anti_term(a->t1, b->t1, t, u, v);
            TermPtr r = anti_term(a->t2, b->t2, t, u, v);
            if (!l || !r) return nullptr;
            return a->kind == Formula::Kind::Equals ? f_equals(l, r) : f_pred(l, r);
        }
        case Formula::Kind::Not: {
            FormulaPtr inner = anti_formula(a->f1, b->f1, t, u, v);
            return inner ? f_not(inner) : nullptr;
        }
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff: {
            FormulaPtr l = anti_formula(a->f1, b->f1, t, u, v);
            FormulaPtr r = anti_formula(a->f2, b->f2, t, u, v);
            if (!l || !r) return nullptr;
            switch (a->kind) {
                case Formula::Kind::And: return f_and(l, r);
                case Formula::Kind::Or: return f_or(l, r);
                case Formula::Kind::Implies: return f_implies(l, r);
                default: return f_iff(l, r);
            }
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            if (a->var != b->var) return nullptr;
            FormulaPtr inner = anti_formula(a->f1, b->f1, t, u, v);
            if (!inner) return nullptr;
            return a->kind == Formula::Kind::Exists ? f_exists(a->var, inner)
                                                    : f_forall(a->var, inner);
        }
    }
    return nullptr;
}

// t = u -> (A -> B) where A and B are the same template at t and u.
bool match_eq_sub(const FormulaPtr& f) {
    if (!is_implies(f) || f->f1->kind != Formula::Kind::Equals || !is_implies(f->f2))
        return false;
    const TermPtr& t = f->f1->t1;
    const TermPtr& u = f->f1->t2;
    if (!is_closed_term(t) || !is_closed_term(u)) return false;
    const FormulaPtr& a = f->f2->f1;
    const FormulaPtr& b = f->f2->f2;
    if (term_eq(t, u)) return formula_eq(a, b);
    for (char v : std::string_view(kVarNames)) {
        FormulaPtr tmpl = anti_formula(a, b, t, u, v);
        if (!tmpl) continue;  // template shape is v-independent; bindings are not
        if (formula_eq(substitute(tmpl, v, t), a) && formula_eq(substitute(tmpl, v, u), b))
            return true;
    }
    return false;
}

// First subtree of b where a has a free v, in parallel walk; the witness
// term candidate for universal instantiation.
TermPtr find_witness(const FormulaPtr& a, const FormulaPtr& b, char v) {
    if (a->kind != b->kind) return nullptr;
    std::function<TermPtr(const TermPtr&, const TermPtr&)> in_term =
        [&](const TermPtr& s, const TermPtr& w) -> TermPtr {
        if (s->kind == Term::Kind::Var && s->var == v) return w;
        if (s->kind != w->kind) return nullptr;
        if (!s->a || !w->a) return nullptr;
        if (TermPtr hit = in_term(s->a, w->a)) return hit;
        if (s->b && w->b) return in_term(s->b, w->b);
        return nullptr;
    };
    switch (a->kind) {
        case Formula::Kind::Equals:
        case Formula::Kind::Pred:
            if (TermPtr hit = in_term(a->t1, b->t1)) return hit;
            return in_term(a->t2, b->t2);
        case Formula::Kind::Not:
            return find_witness(a->f1, b->f1, v);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            if (TermPtr hit = find_witness(a->f1, b->f1, v)) return hit;
            return find_witness(a->f2, b->f2, v);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            if (a->var == v) return nullptr;  // v rebound, no free sites below
            return find_witness(a->f1, b->f1, v);
    }
    return nullptr;
}

// Av(phi) -> phi[v := t] for a closed t.
bool match_univ_inst(const FormulaPtr& f) {
    if (!is_implies(f) || f->f1->kind != Formula::Kind::Forall) return false;
    char v = f->f1->var;
    const FormulaPtr& body = f->f1->f1;
    const FormulaPtr& inst = f->f2;
    TermPtr t = find_witness(body, inst, v);
    if (!t) t = t_zero();  // v may have no free occurrence; any instance works
    if (!is_closed_term(t)) return false;
    return formula_eq(substitute(body, v, t), inst);
}

bool numeral_shape(const TermPtr& t) {
    return t->kind == Term::Kind::Zero || t->kind == Term::Kind::Numeral;
}

// sub(N[a], N[b]) = N[c] with c confirmed by the code-level evaluator.
bool match_sub_eval(const FormulaPtr& f) {
    if (f->kind != Formula::Kind::Equals) return false;
    const TermPtr& app = f->t1;
    if (app->kind != Term::Kind::Sub || !numeral_shape(app->a) || !numeral_shape(app->b) ||
        !numeral_shape(f->t2))
        return false;
    try {
        CodecScheme scheme = CodecScheme::positional();
        return eval_sub_term(app, scheme) == (f->t2->kind == Term::Kind::Zero ? 0 : f->t2->count);
    } catch (const DomainError&) {
        return false;
    }
}

}  // namespace

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::K: return "K";
        case Axiom::S: return "S";
        case Axiom::CP: return "CP";
        case Axiom::Q1: return "Q1";
        case Axiom::Q2: return "Q2";
        case Axiom::Q3: return "Q3";
        case Axiom::Q4: return "Q4";
        case Axiom::Q5: return "Q5";
        case Axiom::Q6: return "Q6";
        case Axiom::Q7: return "Q7";
        case Axiom::EqRefl: return "EqRefl";
        case Axiom::EqSub: return "EqSub";
        case Axiom::UnivInst: return "UnivInst";
        case Axiom::SubEval: return "SubEval";
    }
    return "?";
}

std::optional<Axiom> match_axiom(const FormulaPtr& f) {
    if (match_k(f)) return Axiom::K;
    if (match_s(f)) return Axiom::S;
    if (match_cp(f)) return Axiom::CP;
    const auto& qs = q_sentences();
    for (std::size_t i = 0; i < qs.size(); ++i)
        if (formula_eq(f, qs[i])) return static_cast<Axiom>(static_cast<int>(Axiom::Q1) + i);
    if (match_eq_refl(f)) return Axiom::EqRefl;
    if (match_eq_sub(f)) return Axiom::EqSub;
    if (match_univ_inst(f)) return Axiom::UnivInst;
    if (match_sub_eval(f)) return Axiom::SubEval;
    return std::nullopt;
}

Verdict check_proof(const std::vector<FormulaPtr>& lines) {
    if (lines.empty()) return {false, 0, "empty proof"};
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (match_axiom(lines[i])) continue;
        bool justified = false;
        // modus ponens: some earlier k states lines[j] -> lines[i]
        for (std::size_t k = 0; k < i && !justified; ++k) {
            if (!is_implies(lines[k]) || !formula_eq(lines[k]->f2, lines[i])) continue;
            for (std::size_t j = 0; j < i && !justified; ++j)
                if (formula_eq(lines[k]->f1, lines[j])) justified = true;
        }
        // generalization: Av over some earlier line
        if (!justified && lines[i]->kind == Formula::Kind::Forall)
            for (std::size_t j = 0; j < i && !justified; ++j)
                if (formula_eq(lines[i]->f1, lines[j])) justified = true;
        if (!justified)
            return {false, i + 1, i == 0 ? "not-an-axiom" : "not-justified"};
    }
    return {true, 0, ""};
}

BigNat encode_proof(const std::vector<FormulaPtr>& lines, const CodecScheme& scheme) {
    if (lines.empty()) throw EmptySequence();
    if (scheme.positional_p()) {
        RunSeq all;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (i > 0) all.push_back({kProofSep, 1});
            RunSeq part = formula_runs(lines[i]);
            all.insert(all.end(), part.begin(), part.end());
        }
        return encode_runs(all, scheme);
    }
    // Prime tower over the line codes. The bit budget mirrors the digit cap.
    const BigNat bit_budget = BigNat(scheme.cap_digits) * 5;
    BigNat bits = 0, value = 1, power;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i >= scheme.prime_cap) {
            BigNat len = lines.size();
            throw CapExceeded("proof exceeds the prime-power cap", SizeReport{len, len, false});
        }
        BigNat code = encode_formula(lines[i], scheme);
        const BigNat& p = nth_prime(i);
        bits += code * mpz_sizeinbase(p.get_mpz_t(), 2);
        if (bits > bit_budget)
            throw CapExceeded("proof code exceeds the materialization cap",
                              SizeReport{bits, bits, false});
        mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), code.get_ui());
        value *= power;
    }
    return value;
}

std::vector<FormulaPtr> decode_proof(const BigNat& r, const CodecScheme& scheme) {
    std::vector<FormulaPtr> lines;
    if (scheme.positional_p()) {
        RunSeq runs = decode_runs(r, scheme);
        RunSeq part;
        auto flush = [&]() {
            if (part.empty()) throw NotDecodable("empty proof line");
            lines.push_back(parse_formula(render_runs(part)));
            part.clear();
        };
        for (const Run& run : runs) {
            if (run.code != kProofSep) {
                part.push_back(run);
                continue;
            }
            if (run.count != 1) throw NotDecodable("adjacent proof separators");
            flush();
        }
        flush();
        return lines;
    }
    BigNat rest = r;
    if (rest == 0 || rest == 1) throw NotDecodable("no prime tower");
    for (std::size_t i = 0; rest != 1; ++i) {
        if (i >= scheme.prime_cap)
            throw CapExceeded("proof exceeds the prime-power cap",
                              SizeReport{BigNat(i), BigNat(i), false});
        const BigNat& p = nth_prime(i);
        unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        if (e == 0) throw NotDecodable("prime " + dec(p) + " is missing from the tower");
        lines.push_back(decode_formula(BigNat(e), scheme));
    }
    return lines;
}

bool proves(const BigNat& r, const BigNat& s, const CodecScheme& scheme) {
    try {
        std::vector<FormulaPtr> lines = decode_proof(r, scheme);
        if (!check_proof(lines).valid) return false;
        return encode_formula(lines.back(), scheme) == s;
    } catch (const DomainError&) {
        return false;
    }
}

std::vector<std::pair<uint64_t, BigNat>> enumerate_provable(uint64_t max_code,
                                                            const CodecScheme& scheme) {
    std::vector<std::pair<uint64_t, BigNat>> out;
    if (!scheme.positional_p()) {
        for (uint64_t r = 2; r <= max_code; ++r) {
            BigNat rn = r;
            try {
                std::vector<FormulaPtr> lines = decode_proof(rn, scheme);
                if (check_proof(lines).valid)
                    out.emplace_back(r, encode_formula(lines.back(), scheme));
            } catch (const DomainError&) {
            }
        }
        return out;
    }
    // Digit-filter fast path: reject codes with out-of-alphabet digits before
    // any string or parse work. Codes fitting u64 have at most 13 digits.
    const unsigned base = scheme.base;
    uint8_t digits[16];
    std::string text;
    for (uint64_t r = 1; r <= max_code; ++r) {
        uint64_t n = r;
        int len = 0;
        bool ok = true;
        while (n) {
            uint8_t d = static_cast<uint8_t>(n % base);
            if (!is_symbol_code(d)) {
                ok = false;
                break;
            }
            digits[len++] = d;
            n /= base;
        }
        if (!ok) continue;
        text.clear();
        for (int i = len - 1; i >= 0; --i)
            text += digits[i] == kProofSep ? "\n" : symbol_text(digits[i]);
        try {
            std::vector<FormulaPtr> lines;
            std::size_t start = 0;
            while (start <= text.size()) {
                std::size_t nl = text.find('\n', start);
                std::size_t end = nl == std::string::npos ? text.size() : nl;
                lines.push_back(parse_formula(
                    std::string_view(text).substr(start, end - start)));
                if (nl == std::string::npos) break;
                start = nl + 1;
            }
            if (check_proof(lines).valid)
                out.emplace_back(r, encode_formula(lines.back(), scheme));
        } catch (const DomainError&) {
        }
    }
    return out;
}

}  // namespace goedel
