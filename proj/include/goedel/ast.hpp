#pragma once

#include <memory>
#include <set>
#include <vector>

#include "goedel/bignat.hpp"
#include "goedel/errors.hpp"
#include "goedel/symbols.hpp"

namespace goedel {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

// Terms of the object language. Numeral(k) is the run-length form of s^k 0;
// constructors normalize so that Succ never sits directly on Zero/Numeral and
// Numeral(0) never exists (it collapses to Zero). This keeps structural
// equality in sync with symbol-sequence equality.
struct Term {
    enum class Kind { Zero, Var, Numeral, Succ, Plus, Times, Sub };

    Kind kind;
    char var = 0;    // Var
    BigNat count;    // Numeral: k >= 1
    TermPtr a, b;    // Succ(a); Plus/Times/Sub(a, b)
};

TermPtr t_zero();
TermPtr t_var(char name);  // throws DomainError if name is not in the variable set
TermPtr t_numeral(const BigNat& k);
TermPtr t_succ(const TermPtr& t);
TermPtr t_plus(const TermPtr& a, const TermPtr& b);
TermPtr t_times(const TermPtr& a, const TermPtr& b);
TermPtr t_sub(const TermPtr& a, const TermPtr& b);

struct Formula {
    enum class Kind { Equals, Pred, Not, And, Or, Implies, Iff, Exists, Forall };

    Kind kind;
    TermPtr t1, t2;    // Equals, Pred
    FormulaPtr f1, f2; // connectives; quantifier body in f1
    char var = 0;      // quantifiers
};

FormulaPtr f_equals(const TermPtr& a, const TermPtr& b);
FormulaPtr f_pred(const TermPtr& a, const TermPtr& b);
FormulaPtr f_not(const FormulaPtr& f);
FormulaPtr f_and(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr f_or(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr f_implies(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr f_iff(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr f_exists(char v, const FormulaPtr& f);
FormulaPtr f_forall(char v, const FormulaPtr& f);

bool term_eq(const TermPtr& a, const TermPtr& b);
bool formula_eq(const FormulaPtr& a, const FormulaPtr& b);

std::set<char> free_vars(const FormulaPtr& f);
std::set<char> term_vars(const TermPtr& t);
bool is_closed_term(const TermPtr& t);

// Number of free occurrences of v (bound occurrences under a v-binder excluded).
BigNat count_free_occurrences(const FormulaPtr& f, char v);

// Replaces every free occurrence of v by the closed term t.
// Throws OpenTermError when t has variables.
FormulaPtr substitute(const FormulaPtr& f, char v, const TermPtr& t);

// Substitution variant used by the diagonal construction, where the inserted
// term may be open. Throws OpenTermError when a free occurrence of v sits
// under a binder for one of t's variables (capture).
FormulaPtr substitute_open(const FormulaPtr& f, char v, const TermPtr& t);

// Run-length compressed symbol sequence: maximal runs of one symbol code.
// The expanded sequence is what gets Goedel-numbered; run counts are exact.
struct Run {
    uint8_t code;
    BigNat count;
};
using RunSeq = std::vector<Run>;

RunSeq formula_runs(const FormulaPtr& f);
RunSeq term_runs(const TermPtr& t);
BigNat runs_length(const RunSeq& runs);

// Expanded symbol count of the canonical sequence (numerals count as k+1).
BigNat symbol_count(const FormulaPtr& f);
BigNat term_symbol_count(const TermPtr& t);

// Canonical runs plus the expanded-sequence offsets of every free occurrence
// of v. Offsets must fit size_t; callers only use this on formulas decoded
// from materialized codes, whose length is below the digit cap.
struct MarkedRuns {
    RunSeq runs;
    std::vector<std::size_t> free_positions;
};
MarkedRuns formula_runs_marked(const FormulaPtr& f, char v);

}  // namespace goedel
