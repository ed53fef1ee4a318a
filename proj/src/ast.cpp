#include "goedel/ast.hpp"

#include <functional>

namespace goedel {

namespace {

TermPtr make_term(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormulaPtr make_formula(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

TermPtr t_zero() {
    static const TermPtr zero = make_term({Term::Kind::Zero, 0, 0, nullptr, nullptr});
    return zero;
}

TermPtr t_var(char name) {
    if (var_code(name) == 0)
        throw DomainError("BadVariable", std::string("no variable named '") + name + "'");
    return make_term({Term::Kind::Var, name, 0, nullptr, nullptr});
}

TermPtr t_numeral(const BigNat& k) {
    if (k == 0) return t_zero();
    return make_term({Term::Kind::Numeral, 0, k, nullptr, nullptr});
}

TermPtr t_succ(const TermPtr& t) {
    // s over a numeral extends the run; the symbol sequence is identical.
    if (t->kind == Term::Kind::Zero) return t_numeral(1);
    if (t->kind == Term::Kind::Numeral) return t_numeral(t->count + 1);
    return make_term({Term::Kind::Succ, 0, 0, t, nullptr});
}

TermPtr t_plus(const TermPtr& a, const TermPtr& b) {
    return make_term({Term::Kind::Plus, 0, 0, a, b});
}

TermPtr t_times(const TermPtr& a, const TermPtr& b) {
    return make_term({Term::Kind::Times, 0, 0, a, b});
}

TermPtr t_sub(const TermPtr& a, const TermPtr& b) {
    return make_term({Term::Kind::Sub, 0, 0, a, b});
}

FormulaPtr f_equals(const TermPtr& a, const TermPtr& b) {
    return make_formula({Formula::Kind::Equals, a, b, nullptr, nullptr, 0});
}

FormulaPtr f_pred(const TermPtr& a, const TermPtr& b) {
    return make_formula({Formula::Kind::Pred, a, b, nullptr, nullptr, 0});
}

FormulaPtr f_not(const FormulaPtr& f) {
    return make_formula({Formula::Kind::Not, nullptr, nullptr, f, nullptr, 0});
}

FormulaPtr f_and(const FormulaPtr& a, const FormulaPtr& b) {
    return make_formula({Formula::Kind::And, nullptr, nullptr, a, b, 0});
}

FormulaPtr f_or(const FormulaPtr& a, const FormulaPtr& b) {
    return make_formula({Formula::Kind::Or, nullptr, nullptr, a, b, 0});
}

FormulaPtr f_implies(const FormulaPtr& a, const FormulaPtr& b) {
    return make_formula({Formula::Kind::Implies, nullptr, nullptr, a, b, 0});
}

FormulaPtr f_iff(const FormulaPtr& a, const FormulaPtr& b) {
    return make_formula({Formula::Kind::Iff, nullptr, nullptr, a, b, 0});
}

FormulaPtr f_exists(char v, const FormulaPtr& f) {
    if (var_code(v) == 0)
        throw DomainError("BadVariable", std::string("no variable named '") + v + "'");
    return make_formula({Formula::Kind::Exists, nullptr, nullptr, f, nullptr, v});
}

FormulaPtr f_forall(char v, const FormulaPtr& f) {
    if (var_code(v) == 0)
        throw DomainError("BadVariable", std::string("no variable named '") + v + "'");
    return make_formula({Formula::Kind::Forall, nullptr, nullptr, f, nullptr, v});
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Kind::Zero: return true;
        case Term::Kind::Var: return a->var == b->var;
        case Term::Kind::Numeral: return a->count == b->count;
        case Term::Kind::Succ: return term_eq(a->a, b->a);
        case Term::Kind::Plus:
        case Term::Kind::Times:
        case Term::Kind::Sub: return term_eq(a->a, b->a) && term_eq(a->b, b->b);
    }
    return false;
}

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Formula::Kind::Equals:
        case Formula::Kind::Pred:
            return term_eq(a->t1, b->t1) && term_eq(a->t2, b->t2);
        case Formula::Kind::Not:
            return formula_eq(a->f1, b->f1);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            return formula_eq(a->f1, b->f1) && formula_eq(a->f2, b->f2);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return a->var == b->var && formula_eq(a->f1, b->f1);
    }
    return false;
}

std::set<char> term_vars(const TermPtr& t) {
    std::set<char> out;
    std::function<void(const TermPtr&)> walk = [&](const TermPtr& u) {
        if (!u) return;
        if (u->kind == Term::Kind::Var) out.insert(u->var);
        walk(u->a);
        walk(u->b);
    };
    walk(t);
    return out;
}

bool is_closed_term(const TermPtr& t) { return term_vars(t).empty(); }

namespace {

void collect_free(const FormulaPtr& f, std::set<char>& bound, std::set<char>& out) {
    auto term_free = [&](const TermPtr& t) {
        for (char v : term_vars(t))
            if (!bound.count(v)) out.insert(v);
    };
    switch (f->kind) {
        case Formula::Kind::Equals:
        case Formula::Kind::Pred:
            term_free(f->t1);
            term_free(f->t2);
            return;
        case Formula::Kind::Not:
            collect_free(f->f1, bound, out);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            collect_free(f->f1, bound, out);
            collect_free(f->f2, bound, out);
            return;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            bool fresh = bound.insert(f->var).second;
            collect_free(f->f1, bound, out);
            if (fresh) bound.erase(f->var);
            return;
        }
    }
}

}  // namespace

std::set<char> free_vars(const FormulaPtr& f) {
    std::set<char> bound, out;
    collect_free(f, bound, out);
    return out;
}

namespace {

BigNat count_in_term(const TermPtr& t, char v) {
    if (!t) return 0;
    if (t->kind == Term::Kind::Var) return t->var == v ? 1 : 0;
    return count_in_term(t->a, v) + count_in_term(t->b, v);
}

BigNat count_free(const FormulaPtr& f, char v, bool bound) {
    if (bound) return 0;
    switch (f->kind) {
        case Formula::Kind::Equals:
        case Formula::Kind::Pred:
            return count_in_term(f->t1, v) + count_in_term(f->t2, v);
        case Formula::Kind::Not:
            return count_free(f->f1, v, bound);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            return count_free(f->f1, v, bound) + count_free(f->f2, v, bound);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return count_free(f->f1, v, bound || f->var == v);
    }
    return 0;
}

TermPtr subst_term(const TermPtr& u, char v, const TermPtr& t) {
    if (!u) return u;
    switch (u->kind) {
        case Term::Kind::Zero:
        case Term::Kind::Numeral:
            return u;
        case Term::Kind::Var:
            return u->var == v ? t : u;
        case Term::Kind::Succ:
            return t_succ(subst_term(u->a, v, t));
        case Term::Kind::Plus:
            return t_plus(subst_term(u->a, v, t), subst_term(u->b, v, t));
        case Term::Kind::Times:
            return t_times(subst_term(u->a, v, t), subst_term(u->b, v, t));
        case Term::Kind::Sub:
            return t_sub(subst_term(u->a, v, t), subst_term(u->b, v, t));
    }
    return u;
}

// binders: variables currently bound on the path; capture_check guards the
// open-term variant.
FormulaPtr subst_formula(const FormulaPtr& f, char v, const TermPtr& t,
                         std::set<char>& binders, const std::set<char>* t_vars) {
    auto hit_term = [&](const TermPtr& u) { return count_in_term(u, v) != 0; };
    switch (f->kind) {
        case Formula::Kind::Equals:
        case Formula::Kind::Pred: {
            if (!hit_term(f->t1) && !hit_term(f->t2)) return f;
            if (t_vars)
                for (char w : *t_vars)
                    if (binders.count(w))
                        throw OpenTermError(std::string("substituting an open term would capture '") +
                                            w + "'");
            TermPtr a = subst_term(f->t1, v, t);
            TermPtr b = subst_term(f->t2, v, t);
            return f->kind == Formula::Kind::Equals ? f_equals(a, b) : f_pred(a, b);
        }
        case Formula::Kind::Not:
            return f_not(subst_formula(f->f1, v, t, binders, t_vars));
        case Formula::Kind::And:
            return f_and(subst_formula(f->f1, v, t, binders, t_vars),
                         subst_formula(f->f2, v, t, binders, t_vars));
        case Formula::Kind::Or:
            return f_or(subst_formula(f->f1, v, t, binders, t_vars),
                        subst_formula(f->f2, v, t, binders, t_vars));
        case Formula::Kind::Implies:
            return f_implies(subst_formula(f->f1, v, t, binders, t_vars),
                             subst_formula(f->f2, v, t, binders, t_vars));
        case Formula::Kind::Iff:
            return f_iff(subst_formula(f->f1, v, t, binders, t_vars),
                         subst_formula(f->f2, v, t, binders, t_vars));
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            if (f->var == v) return f;  // v rebound underneath, nothing free below
            bool fresh = binders.insert(f->var).second;
            FormulaPtr body = subst_formula(f->f1, v, t, binders, t_vars);
            if (fresh) binders.erase(f->var);
            return f->kind == Formula::Kind::Exists ? f_exists(f->var, body)
                                                    : f_forall(f->var, body);
        }
    }
    return f;
}

}  // namespace

BigNat count_free_occurrences(const FormulaPtr& f, char v) {
    return count_free(f, v, false);
}

FormulaPtr substitute(const FormulaPtr& f, char v, const TermPtr& t) {
    if (!is_closed_term(t))
        throw OpenTermError("substituted term must be closed");
    std::set<char> binders;
    return subst_formula(f, v, t, binders, nullptr);
}

FormulaPtr substitute_open(const FormulaPtr& f, char v, const TermPtr& t) {
    std::set<char> tv = term_vars(t);
    std::set<char> binders;
    return subst_formula(f, v, t, binders, &tv);
}

// --- canonical symbol sequences ---

namespace {

struct RunEmitter {
    RunSeq runs;
    std::vector<std::size_t>* positions = nullptr;  // free-occurrence offsets
    char mark_var = 0;
    BigNat offset = 0;

    void put(uint8_t code, const BigNat& count = 1) {
        offset += count;
        if (!runs.empty() && runs.back().code == code) {
            runs.back().count += count;
            return;
        }
        runs.push_back({code, count});
    }

    void put_marked(uint8_t code) {
        if (positions) {
            if (!offset.fits_ulong_p())
                throw CapExceeded("free-occurrence offset beyond addressable range",
                                  SizeReport{offset, offset, false});
            positions->push_back(static_cast<std::size_t>(offset.get_ui()));
        }
        put(code);
    }
};

void emit_term(const TermPtr& t, RunEmitter& em, const std::set<char>& bound);

void emit_binary_term(uint8_t op, const TermPtr& a, const TermPtr& b, RunEmitter& em,
                      const std::set<char>& bound) {
    em.put(kLParen);
    emit_term(a, em, bound);
    em.put(op);
    emit_term(b, em, bound);
    em.put(kRParen);
}

void emit_term(const TermPtr& t, RunEmitter& em, const std::set<char>& bound) {
    switch (t->kind) {
        case Term::Kind::Zero:
            em.put(kZero);
            return;
        case Term::Kind::Numeral:
            em.put(kSucc, t->count);
            em.put(kZero);
            return;
        case Term::Kind::Var: {
            uint8_t c = var_code(t->var);
            if (em.mark_var == t->var && !bound.count(t->var))
                em.put_marked(c);
            else
                em.put(c);
            return;
        }
        case Term::Kind::Succ:
            em.put(kSucc);
            emit_term(t->a, em, bound);
            return;
        case Term::Kind::Plus:
            emit_binary_term(kPlus, t->a, t->b, em, bound);
            return;
        case Term::Kind::Times:
            emit_binary_term(kTimes, t->a, t->b, em, bound);
            return;
        case Term::Kind::Sub:
            em.put(kSubFn);
            em.put(kLParen);
            emit_term(t->a, em, bound);
            em.put(kComma);
            emit_term(t->b, em, bound);
            em.put(kRParen);
            return;
    }
}

void emit_formula(const FormulaPtr& f, RunEmitter& em, std::set<char>& bound) {
    switch (f->kind) {
        case Formula::Kind::Equals:
            emit_term(f->t1, em, bound);
            em.put(kEquals);
            emit_term(f->t2, em, bound);
            return;
        case Formula::Kind::Pred:
            em.put(kPredP);
            em.put(kLParen);
            emit_term(f->t1, em, bound);
            em.put(kComma);
            emit_term(f->t2, em, bound);
            em.put(kRParen);
            return;
        case Formula::Kind::Not:
            em.put(kNot);
            em.put(kLParen);
            emit_formula(f->f1, em, bound);
            em.put(kRParen);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff: {
            uint8_t op = f->kind == Formula::Kind::And       ? kAnd
                         : f->kind == Formula::Kind::Or      ? kOr
                         : f->kind == Formula::Kind::Implies ? kImplies
                                                             : kIff;
            em.put(kLParen);
            emit_formula(f->f1, em, bound);
            em.put(op);
            emit_formula(f->f2, em, bound);
            em.put(kRParen);
            return;
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            em.put(f->kind == Formula::Kind::Exists ? kExists : kForall);
            em.put(var_code(f->var));
            em.put(kLParen);
            bool fresh = bound.insert(f->var).second;
            emit_formula(f->f1, em, bound);
            if (fresh) bound.erase(f->var);
            em.put(kRParen);
            return;
        }
    }
}

}  // namespace

RunSeq term_runs(const TermPtr& t) {
    RunEmitter em;
    std::set<char> bound;
    emit_term(t, em, bound);
    return std::move(em.runs);
}

RunSeq formula_runs(const FormulaPtr& f) {
    RunEmitter em;
    std::set<char> bound;
    emit_formula(f, em, bound);
    return std::move(em.runs);
}

MarkedRuns formula_runs_marked(const FormulaPtr& f, char v) {
    MarkedRuns out;
    RunEmitter em;
    em.positions = &out.free_positions;
    em.mark_var = v;
    std::set<char> bound;
    emit_formula(f, em, bound);
    out.runs = std::move(em.runs);
    return out;
}

BigNat runs_length(const RunSeq& runs) {
    BigNat total = 0;
    for (const Run& r : runs) total += r.count;
    return total;
}

BigNat symbol_count(const FormulaPtr& f) { return runs_length(formula_runs(f)); }

BigNat term_symbol_count(const TermPtr& t) { return runs_length(term_runs(t)); }

}  // namespace goedel
