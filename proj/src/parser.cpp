#include "goedel/parser.hpp"

#include <cctype>
#include <vector>

#include "goedel/errors.hpp"

namespace goedel {

namespace {

enum class Tok {
    Zero, Succ, Plus, Times, Equals, LParen, RParen, Comma,
    Not, And, Or, Implies, Iff, Exists, Forall, Pred, SubKw,
    Var, NumLit, Colon, End,
};

struct Token {
    Tok kind;
    std::size_t offset;
    char var = 0;    // Var
    BigNat num = 0;  // NumLit
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        std::size_t at = i;
        char c = text[i];
        switch (c) {
            case '0': out.push_back({Tok::Zero, at}); ++i; continue;
            case '+': out.push_back({Tok::Plus, at}); ++i; continue;
            case '*': out.push_back({Tok::Times, at}); ++i; continue;
            case '=': out.push_back({Tok::Equals, at}); ++i; continue;
            case '(': out.push_back({Tok::LParen, at}); ++i; continue;
            case ')': out.push_back({Tok::RParen, at}); ++i; continue;
            case ',': out.push_back({Tok::Comma, at}); ++i; continue;
            case '~': out.push_back({Tok::Not, at}); ++i; continue;
            case '&': out.push_back({Tok::And, at}); ++i; continue;
            case '|': out.push_back({Tok::Or, at}); ++i; continue;
            case ':': out.push_back({Tok::Colon, at}); ++i; continue;
            case 'E': out.push_back({Tok::Exists, at}); ++i; continue;
            case 'A': out.push_back({Tok::Forall, at}); ++i; continue;
            case 'P': out.push_back({Tok::Pred, at}); ++i; continue;
            case '-':
                if (i + 1 < text.size() && text[i + 1] == '>') {
                    out.push_back({Tok::Implies, at});
                    i += 2;
                    continue;
                }
                throw SyntaxError(at, "'->'");
            case '<':
                if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
                    out.push_back({Tok::Iff, at});
                    i += 3;
                    continue;
                }
                throw SyntaxError(at, "'<->'");
            case 's':
                // "sub(" is the substitution function; any other 's' is the
                // successor symbol ('u' alone is a variable, 'b' is nothing).
                if (text.substr(i, 3) == "sub" && i + 3 < text.size() && text[i + 3] == '(') {
                    out.push_back({Tok::SubKw, at});
                    i += 3;
                    continue;
                }
                out.push_back({Tok::Succ, at});
                ++i;
                continue;
            case 'N': {
                ++i;
                if (i >= text.size() || text[i] != '[') throw SyntaxError(i, "'[' after N");
                ++i;
                std::size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == start) throw SyntaxError(start, "decimal digits");
                if (i >= text.size() || text[i] != ']') throw SyntaxError(i, "']'");
                Token t{Tok::NumLit, at};
                t.num = BigNat(std::string(text.substr(start, i - start)), 10);
                out.push_back(t);
                ++i;
                continue;
            }
            default:
                if (var_code(c) != 0) {
                    Token t{Tok::Var, at};
                    t.var = c;
                    out.push_back(t);
                    ++i;
                    continue;
                }
                throw SyntaxError(at, "a symbol");
        }
    }
    out.push_back({Tok::End, text.size()});
    return out;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    const Token& next() { return toks[pos++]; }
    bool at(Tok k) const { return toks[pos].kind == k; }
    bool eat(Tok k) {
        if (!at(k)) return false;
        ++pos;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!eat(k)) throw SyntaxError(peek().offset, what);
    }

    TermPtr term() {
        const Token& t = next();
        switch (t.kind) {
            case Tok::Zero: return t_zero();
            case Tok::NumLit: return t_numeral(t.num);
            case Tok::Var: return t_var(t.var);
            case Tok::Succ: return t_succ(term());
            case Tok::SubKw: {
                expect(Tok::LParen, "'('");
                TermPtr a = term();
                expect(Tok::Comma, "','");
                TermPtr b = term();
                expect(Tok::RParen, "')'");
                return t_sub(a, b);
            }
            case Tok::LParen: {
                // (t # t # ...) with # in {+,*}, left-associated, no precedence.
                TermPtr acc = term();
                if (!at(Tok::Plus) && !at(Tok::Times))
                    throw SyntaxError(peek().offset, "'+' or '*'");
                while (at(Tok::Plus) || at(Tok::Times)) {
                    bool plus = next().kind == Tok::Plus;
                    TermPtr rhs = term();
                    acc = plus ? t_plus(acc, rhs) : t_times(acc, rhs);
                }
                expect(Tok::RParen, "')'");
                return acc;
            }
            default:
                throw SyntaxError(t.offset, "a term");
        }
    }

    FormulaPtr atom() {
        if (at(Tok::Pred)) {
            next();
            expect(Tok::LParen, "'('");
            TermPtr a = term();
            expect(Tok::Comma, "','");
            TermPtr b = term();
            expect(Tok::RParen, "')'");
            return f_pred(a, b);
        }
        if (at(Tok::LParen)) {
            // Either a parenthesized formula or a parenthesized term opening
            // an equality; try the term reading first and fall back.
            std::size_t save = pos;
            try {
                TermPtr lhs = term();
                if (at(Tok::Equals)) {
                    next();
                    return f_equals(lhs, term());
                }
            } catch (const SyntaxError&) {
            }
            pos = save;
            next();
            FormulaPtr f = formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        TermPtr lhs = term();
        expect(Tok::Equals, "'='");
        return f_equals(lhs, term());
    }

    FormulaPtr unary() {
        if (eat(Tok::Not)) return f_not(unary());
        if (at(Tok::Exists) || at(Tok::Forall)) {
            bool exists = next().kind == Tok::Exists;
            if (!at(Tok::Var)) throw SyntaxError(peek().offset, "a variable");
            char v = next().var;
            eat(Tok::Colon);  // optional sugar
            FormulaPtr body = unary();
            return exists ? f_exists(v, body) : f_forall(v, body);
        }
        return atom();
    }

    FormulaPtr conj() {
        FormulaPtr a = unary();
        while (eat(Tok::And)) a = f_and(a, unary());
        return a;
    }

    FormulaPtr disj() {
        FormulaPtr a = conj();
        while (eat(Tok::Or)) a = f_or(a, conj());
        return a;
    }

    FormulaPtr impl() {
        FormulaPtr a = disj();
        if (eat(Tok::Implies)) return f_implies(a, impl());
        return a;
    }

    FormulaPtr formula() {
        FormulaPtr a = impl();
        if (eat(Tok::Iff)) return f_iff(a, formula());
        return a;
    }
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
    Parser p{lex(text)};
    FormulaPtr f = p.formula();
    if (!p.at(Tok::End)) throw SyntaxError(p.peek().offset, "end of input");
    return f;
}

TermPtr parse_term(std::string_view text) {
    Parser p{lex(text)};
    TermPtr t = p.term();
    if (!p.at(Tok::End)) throw SyntaxError(p.peek().offset, "end of input");
    return t;
}

}  // namespace goedel
