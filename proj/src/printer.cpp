#include "goedel/printer.hpp"

#include "goedel/errors.hpp"

namespace goedel {

namespace {

void put_numeral(std::string& out, const BigNat& k, std::size_t threshold) {
    if (k > threshold) {
        // N[k] abbreviates the whole numeral, s-run and terminating zero.
        out += "N[";
        out += dec(k);
        out += ']';
        return;
    }
    std::size_t n = k.get_ui();
    out.append(n, 's');
    out += '0';
}

void put_term(std::string& out, const TermPtr& t, std::size_t threshold) {
    switch (t->kind) {
        case Term::Kind::Zero:
            out += '0';
            return;
        case Term::Kind::Var:
            out += t->var;
            return;
        case Term::Kind::Numeral:
            put_numeral(out, t->count, threshold);
            return;
        case Term::Kind::Succ:
            out += 's';
            put_term(out, t->a, threshold);
            return;
        case Term::Kind::Plus:
        case Term::Kind::Times:
            out += '(';
            put_term(out, t->a, threshold);
            out += t->kind == Term::Kind::Plus ? '+' : '*';
            put_term(out, t->b, threshold);
            out += ')';
            return;
        case Term::Kind::Sub:
            out += "sub(";
            put_term(out, t->a, threshold);
            out += ',';
            put_term(out, t->b, threshold);
            out += ')';
            return;
    }
}

void put_formula(std::string& out, const FormulaPtr& f, std::size_t threshold) {
    switch (f->kind) {
        case Formula::Kind::Equals:
            put_term(out, f->t1, threshold);
            out += '=';
            put_term(out, f->t2, threshold);
            return;
        case Formula::Kind::Pred:
            out += "P(";
            put_term(out, f->t1, threshold);
            out += ',';
            put_term(out, f->t2, threshold);
            out += ')';
            return;
        case Formula::Kind::Not:
            out += "~(";
            put_formula(out, f->f1, threshold);
            out += ')';
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff: {
            const char* op = f->kind == Formula::Kind::And       ? "&"
                             : f->kind == Formula::Kind::Or      ? "|"
                             : f->kind == Formula::Kind::Implies ? "->"
                                                                 : "<->";
            out += '(';
            put_formula(out, f->f1, threshold);
            out += op;
            put_formula(out, f->f2, threshold);
            out += ')';
            return;
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            out += f->kind == Formula::Kind::Exists ? 'E' : 'A';
            out += f->var;
            out += '(';
            put_formula(out, f->f1, threshold);
            out += ')';
            return;
    }
}

}  // namespace

std::string render_term(const TermPtr& t, std::size_t numeral_threshold) {
    std::string out;
    put_term(out, t, numeral_threshold);
    return out;
}

std::string render_formula(const FormulaPtr& f, std::size_t numeral_threshold) {
    std::string out;
    put_formula(out, f, numeral_threshold);
    return out;
}

std::string render_runs(const RunSeq& runs, std::size_t numeral_threshold) {
    std::string out;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const Run& r = runs[i];
        // An s-run long enough to abbreviate, directly followed by a zero, is
        // a numeral: fold the zero into the N[k] form so the result reparses.
        if (r.code == kSucc && r.count > numeral_threshold && i + 1 < runs.size() &&
            runs[i + 1].code == kZero) {
            out += "N[";
            out += dec(r.count);
            out += ']';
            BigNat rest = runs[i + 1].count - 1;
            if (!rest.fits_ulong_p())
                throw CapExceeded("run too long to render", SizeReport{rest, rest, false});
            out.append(rest.get_ui(), '0');
            ++i;
            continue;
        }
        if (!r.count.fits_ulong_p())
            throw CapExceeded("run too long to render", SizeReport{r.count, r.count, false});
        std::size_t n = r.count.get_ui();
        if (r.code == kProofSep) {
            out.append(n, '\n');
            continue;
        }
        const char* text = symbol_text(r.code);
        for (std::size_t j = 0; j < n; ++j) out += text;
    }
    return out;
}

}  // namespace goedel
