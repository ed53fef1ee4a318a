#include "goedel/diagonal.hpp"

#include <string>

namespace goedel {

BigNat eval_sub_term(const TermPtr& t, const CodecScheme& scheme) {
    switch (t->kind) {
        case Term::Kind::Zero:
            return 0;
        case Term::Kind::Numeral:
            return t->count;
        case Term::Kind::Succ:
            return eval_sub_term(t->a, scheme) + 1;
        case Term::Kind::Var:
            throw OpenTermError(std::string("cannot evaluate the variable '") + t->var + "'");
        case Term::Kind::Plus:
        case Term::Kind::Times:
            throw DomainError("NotEvaluable", "'+' and '*' have no code-level evaluation");
        case Term::Kind::Sub: {
            BigNat y = eval_sub_term(t->a, scheme);
            BigNat j = eval_sub_term(t->b, scheme);
            FormulaPtr f = decode_formula(y, scheme);
            std::set<char> fv = free_vars(f);
            if (fv.size() != 1)
                throw ArityError("sub needs a coded formula with exactly one free variable, got " +
                                 std::to_string(fv.size()));
            return sub_code(y, *fv.begin(), j, scheme);
        }
    }
    throw DomainError("NotEvaluable", "unreachable term kind");
}

namespace {

void require_positional(const CodecScheme& scheme, const char* what) {
    if (!scheme.positional_p())
        throw UnsupportedScheme(std::string(what) + " needs the positional size calculus");
}

// The two verification routes for code(alpha) == sub(n, y, n): splice the
// digit string of theta directly, and walk the substituted tree. They share
// no arithmetic; agreement on sizes and on two prime residues (or on the
// exact codes, when small enough) is the fixed-point check.
bool verify_fixed_point(const BigNat& n, char var, const FormulaPtr& alpha,
                        const SizeReport& alpha_report, std::optional<BigNat>& exact,
                        const CodecScheme& scheme) {
    SizeReport splice_report = sub_size(n, var, n, scheme);
    if (!(splice_report == alpha_report)) return false;
    if (alpha_report.materializable) {
        BigNat spliced = sub_code(n, var, n, scheme);
        exact = spliced;
        return spliced == encode_formula(alpha, scheme);
    }
    for (const BigNat& p : {fp_prime_a(), fp_prime_b()})
        if (sub_mod(n, var, n, p, scheme) != formula_mod(alpha, p, scheme)) return false;
    return true;
}

}  // namespace

FixedPointResult diagonalize(const FormulaPtr& d, char v, const CodecScheme& scheme) {
    require_positional(scheme, "diagonalization");
    std::set<char> fv = free_vars(d);
    if (fv.size() != 1)
        throw ArityError("the seed formula must have exactly one free variable, got " +
                         std::to_string(fv.size()));
    if (*fv.begin() != v)
        throw ArityError(std::string("the free variable is '") + *fv.begin() + "', not '" + v +
                         "'");
    FixedPointResult out;
    out.d = d;
    out.v = v;
    // theta(y) := d[v := sub(y,y)]; capture of y is substitute_open's error.
    TermPtr subyy = t_sub(t_var('y'), t_var('y'));
    out.theta = substitute_open(d, v, subyy);
    out.n = encode_formula(out.theta, scheme);
    out.alpha = substitute(out.theta, 'y', numeral_of(out.n));
    out.witness_term = t_sub(t_numeral(out.n), t_numeral(out.n));
    out.alpha_report = formula_size(out.alpha, scheme);
    out.fixed_point =
        verify_fixed_point(out.n, 'y', out.alpha, out.alpha_report, out.witness_code, scheme);
    return out;
}

FixedPointResult goedel_sentence(const CodecScheme& scheme) {
    FormulaPtr d = f_forall('r', f_not(f_pred(t_var('r'), t_var('w'))));
    return diagonalize(d, 'w', scheme);
}

Certificate self_numeral_certificate(const FormulaPtr& f, const CodecScheme& scheme) {
    Certificate cert;
    cert.formula_symbols = symbol_count(f);
    if (scheme.positional_p()) {
        SizeReport rep = formula_size(f, scheme);
        if (rep.materializable) {
            cert.numeral_symbols = encode_formula(f, scheme) + 1;
            cert.impossible = *cert.numeral_symbols > cert.formula_symbols;
            return cert;
        }
        // code >= base^(L-1) >= L for every L >= 1, so the numeral has more
        // than L symbols without the code in hand.
        cert.impossible = true;
        return cert;
    }
    BigNat expanded = cert.formula_symbols;
    if (expanded <= scheme.prime_cap) {
        cert.numeral_symbols = encode_formula(f, scheme) + 1;
        cert.impossible = *cert.numeral_symbols > cert.formula_symbols;
        return cert;
    }
    // code >= 2^L > L: same conclusion from the tower's floor.
    cert.impossible = true;
    return cert;
}

LiteralReport literal_pipeline(Reading reading, const CodecScheme& scheme) {
    require_positional(scheme, "the literal pipeline");
    LiteralReport rep;
    rep.reading = reading;
    rep.v = reading == Reading::ZFree ? 'z' : 'y';
    TermPtr vv = t_var(rep.v);
    rep.base = f_not(f_exists(
        'r', f_exists('w', f_and(f_pred(t_var('r'), t_var('w')),
                                 f_equals(t_var('w'), t_sub(vv, vv))))));
    rep.n = encode_formula(rep.base, scheme);
    rep.instantiated = substitute(rep.base, rep.v, numeral_of(rep.n));
    rep.result_report = sub_size(rep.n, rep.v, rep.n, scheme);
    std::optional<BigNat> exact;
    SizeReport tree_report = formula_size(rep.instantiated, scheme);
    rep.consistent =
        verify_fixed_point(rep.n, rep.v, rep.instantiated, tree_report, exact, scheme);
    rep.result_code = exact;
    rep.cert = self_numeral_certificate(rep.instantiated, scheme);
    return rep;
}

GammaPrefix gamma_prefix(std::size_t k, const std::vector<FormulaPtr>& S, const FormulaPtr& Z,
                         const CodecScheme& scheme) {
    require_positional(scheme, "the gamma prefix");
    if (k == 0) throw BoundsError("the prefix length must be at least 1");
    if (k > S.size())
        throw BoundsError("prefix length " + std::to_string(k) + " exceeds the sequence length " +
                          std::to_string(S.size()));
    BigNat zc = encode_formula(Z, scheme);
    GammaPrefix out;
    out.k = k;
    BigNat truncated = 0;
    for (std::size_t i = 0; i < k; ++i) {
        BigNat sc = encode_formula(S[i], scheme);
        FormulaPtr conjunct = f_not(f_equals(t_numeral(zc), t_numeral(sc)));
        // conjunct plus its trailing connective in the unending conjunction
        truncated += symbol_count(conjunct) + 1;
        out.prefix = i == 0 ? conjunct : f_and(out.prefix, conjunct);
    }
    out.report.symbol_count = truncated;
    out.report.digit_length = truncated;
    out.report.materializable = truncated <= scheme.cap_digits;
    return out;
}

std::vector<std::pair<std::size_t, BigNat>> gamma_divergence(
    const std::function<FormulaPtr(std::size_t)>& gen, const FormulaPtr& Z, std::size_t k_max,
    const CodecScheme& scheme) {
    require_positional(scheme, "the gamma prefix");
    BigNat zc = encode_formula(Z, scheme);
    // ~( N[zc] = N[sc] ) & : four structural symbols, two numerals, one
    // connective per sequence element.
    std::vector<std::pair<std::size_t, BigNat>> rows;
    BigNat running = 0;
    for (std::size_t i = 1; i <= k_max; ++i) {
        BigNat sc = encode_formula(gen(i), scheme);
        running += 4 + (zc + 1) + (sc + 1) + 1;
        rows.emplace_back(i, running);
    }
    return rows;
}

}  // namespace goedel
