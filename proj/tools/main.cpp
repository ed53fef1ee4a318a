#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goedel/diagonal.hpp"
#include "goedel/parser.hpp"
#include "goedel/printer.hpp"
#include "goedel/proof.hpp"

namespace {

using namespace goedel;

CodecScheme make_scheme(const std::string& name) {
    return name == "prime" ? CodecScheme::prime_power() : CodecScheme::positional();
}

void add_scheme_option(CLI::App* cmd, std::string& scheme) {
    cmd->add_option("--scheme", scheme, "numbering scheme")
        ->check(CLI::IsMember({"positional", "prime"}))
        ->capture_default_str();
}

char parse_var(const std::string& s) {
    if (s.size() != 1 || var_code(s[0]) == 0)
        throw DomainError("BadVariable", "'" + s + "' is not a variable");
    return s[0];
}

std::vector<FormulaPtr> load_proof_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("IoError", "cannot open '" + path + "'");
    std::vector<FormulaPtr> lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        try {
            lines.push_back(parse_formula(std::string_view(line).substr(a, b - a + 1)));
        } catch (const SyntaxError& e) {
            throw DomainError("SyntaxError",
                              path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return lines;
}

const char* mark(bool ok) { return ok ? "pass" : "fail"; }
const char* yesno(bool b) { return b ? "true" : "false"; }

void print_size(const SizeReport& rep) {
    std::cout << "symbols=" << dec(rep.symbol_count) << " digits=" << dec(rep.digit_length)
              << " materializable=" << yesno(rep.materializable) << "\n";
}

void print_fixed_point(const FixedPointResult& r, bool materialize) {
    std::cout << "d=" << render_formula(r.d) << "\n";
    std::cout << "v=" << r.v << "\n";
    std::cout << "theta=" << render_formula(r.theta) << "\n";
    std::cout << "n=" << dec(r.n) << "\n";
    std::cout << "alpha_symbols=" << dec(r.alpha_report.symbol_count) << "\n";
    std::cout << "alpha_digits=" << dec(r.alpha_report.digit_length) << "\n";
    std::cout << "materializable=" << yesno(r.alpha_report.materializable) << "\n";
    if (materialize && r.witness_code)
        std::cout << "alpha_code=" << dec(*r.witness_code) << "\n";
    std::cout << "fixed_point=" << mark(r.fixed_point) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goedel numbering, code-level substitution, proof predicate,"
                 " and diagonal fixed points over a 26-symbol alphabet"};
    app.require_subcommand(1);

    std::string formula_text, code_text, var_text, j_text, n_text, proof_path;
    std::string conclusion_text, reading_text = "z", z_text = "z=0";
    std::string scheme_name = "positional";
    std::vector<std::string> s_texts;
    std::size_t threshold = kDefaultNumeralThreshold;
    std::size_t gamma_k = 0, divergence_k = 0;
    uint64_t max_code = 0;
    bool want_text = false, materialize = false;

    CLI::App* c_parse = app.add_subcommand("parse", "parse a formula and reprint it canonically");
    c_parse->add_option("formula", formula_text)->required();
    c_parse->add_option("--threshold", threshold, "numeral abbreviation threshold");

    CLI::App* c_encode = app.add_subcommand("encode", "code of a formula");
    c_encode->add_option("formula", formula_text)->required();
    add_scheme_option(c_encode, scheme_name);

    CLI::App* c_decode = app.add_subcommand("decode", "symbol sequence of a code");
    c_decode->add_option("code", code_text)->required();
    c_decode->add_option("--threshold", threshold, "numeral abbreviation threshold");
    add_scheme_option(c_decode, scheme_name);

    CLI::App* c_sub = app.add_subcommand("sub", "code-level substitution sub(y, z, j)");
    c_sub->add_option("y", code_text, "code of the formula")->required();
    c_sub->add_option("z", var_text, "variable to replace")->required();
    c_sub->add_option("j", j_text, "numeral argument")->required();
    add_scheme_option(c_sub, scheme_name);

    CLI::App* c_numeral = app.add_subcommand("numeral", "code of the unary numeral of n");
    c_numeral->add_option("n", n_text)->required();
    c_numeral->add_flag("--text", want_text, "print the symbol form instead of the code");
    add_scheme_option(c_numeral, scheme_name);

    CLI::App* c_size = app.add_subcommand("size", "size report of a formula's code");
    c_size->add_option("formula", formula_text)->required();
    add_scheme_option(c_size, scheme_name);

    CLI::App* c_check = app.add_subcommand("check-proof", "verify a proof");
    c_check->add_option("file", proof_path, "one formula per line, # comments");
    c_check->add_option("--code", code_text, "coded proof instead of a file");
    c_check->add_option("--conclusion", conclusion_text,
                        "print whether the proof is valid with this conclusion code");
    add_scheme_option(c_check, scheme_name);

    CLI::App* c_pairs = app.add_subcommand("prove-pairs", "all (r, s) with r up to a bound");
    c_pairs->add_option("max", max_code)->required();
    add_scheme_option(c_pairs, scheme_name);

    CLI::App* c_diag = app.add_subcommand("diagonalize", "fixed point of a one-variable formula");
    c_diag->add_option("formula", formula_text)->required();
    c_diag->add_option("--var", var_text, "the free variable (default: inferred)");
    c_diag->add_flag("--materialize", materialize, "print the exact code when it fits the cap");
    add_scheme_option(c_diag, scheme_name);

    CLI::App* c_goedel = app.add_subcommand("goedel", "the undecidable-sentence construction");
    c_goedel->add_flag("--materialize", materialize, "print the exact code when it fits the cap");
    add_scheme_option(c_goedel, scheme_name);

    CLI::App* c_lit = app.add_subcommand("literal", "literal-numeral reading of the sentence");
    c_lit->add_option("--reading", reading_text, "which variable the sub term leaves free")
        ->check(CLI::IsMember({"z", "y"}))
        ->capture_default_str();
    c_lit->add_flag("--materialize", materialize, "print the exact code when it fits the cap");
    add_scheme_option(c_lit, scheme_name);

    CLI::App* c_cert = app.add_subcommand("certificate", "self-numeral impossibility report");
    c_cert->add_option("formula", formula_text)->required();
    add_scheme_option(c_cert, scheme_name);

    CLI::App* c_gamma = app.add_subcommand("gamma", "difference-conjunction prefix sizes");
    c_gamma->add_option("--k", gamma_k, "prefix length (default: number of --s entries, else 1)");
    c_gamma->add_option("--z", z_text, "the compared formula")->capture_default_str();
    c_gamma->add_option("--s", s_texts, "sequence entries (repeatable; default s_i is z=N[i])");
    c_gamma->add_option("--divergence", divergence_k, "print rows k symbols for k=1..KMAX");
    add_scheme_option(c_gamma, scheme_name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CodecScheme scheme = make_scheme(scheme_name);
        if (*c_parse) {
            std::cout << render_formula(parse_formula(formula_text), threshold) << "\n";
        } else if (*c_encode) {
            std::cout << dec(encode_formula(parse_formula(formula_text), scheme)) << "\n";
        } else if (*c_decode) {
            std::cout << render_runs(decode_runs(parse_bignat(code_text), scheme), threshold)
                      << "\n";
        } else if (*c_sub) {
            std::cout << dec(sub_code(parse_bignat(code_text), parse_var(var_text),
                                      parse_bignat(j_text), scheme))
                      << "\n";
        } else if (*c_numeral) {
            TermPtr n = numeral_of(parse_bignat(n_text));
            if (want_text)
                std::cout << render_term(n) << "\n";
            else
                std::cout << dec(encode_runs(term_runs(n), scheme)) << "\n";
        } else if (*c_size) {
            print_size(formula_size(parse_formula(formula_text), scheme));
        } else if (*c_check) {
            if (proof_path.empty() == code_text.empty())
                throw DomainError("UsageError", "need a proof file or --code, not both");
            if (!conclusion_text.empty() && !code_text.empty()) {
                bool ok = proves(parse_bignat(code_text), parse_bignat(conclusion_text), scheme);
                std::cout << yesno(ok) << "\n";
                return 0;
            }
            std::vector<FormulaPtr> lines = code_text.empty()
                                                ? load_proof_file(proof_path)
                                                : decode_proof(parse_bignat(code_text), scheme);
            Verdict v = check_proof(lines);
            if (!conclusion_text.empty()) {
                bool ok = v.valid && encode_formula(lines.back(), scheme) ==
                                         parse_bignat(conclusion_text);
                std::cout << yesno(ok) << "\n";
                return 0;
            }
            if (!v.valid) {
                std::cout << "invalid line " << v.line << ": " << v.reason << "\n";
                return 1;
            }
            std::cout << "valid\nconclusion=" << dec(encode_formula(lines.back(), scheme))
                      << "\n";
        } else if (*c_pairs) {
            for (const auto& [r, s] : enumerate_provable(max_code, scheme))
                std::cout << r << " " << dec(s) << "\n";
        } else if (*c_diag) {
            FormulaPtr d = parse_formula(formula_text);
            char v;
            if (!var_text.empty()) {
                v = parse_var(var_text);
            } else {
                std::set<char> fv = free_vars(d);
                if (fv.size() != 1)
                    throw ArityError("the seed formula must have exactly one free variable, got " +
                                     std::to_string(fv.size()));
                v = *fv.begin();
            }
            print_fixed_point(diagonalize(d, v, scheme), materialize);
        } else if (*c_goedel) {
            print_fixed_point(goedel_sentence(scheme), materialize);
        } else if (*c_lit) {
            LiteralReport r =
                literal_pipeline(reading_text == "z" ? Reading::ZFree : Reading::YFree, scheme);
            std::cout << "reading=" << reading_text << "\n";
            std::cout << "v=" << r.v << "\n";
            std::cout << "base=" << render_formula(r.base) << "\n";
            std::cout << "n=" << dec(r.n) << "\n";
            std::cout << "result_symbols=" << dec(r.result_report.symbol_count) << "\n";
            std::cout << "result_digits=" << dec(r.result_report.digit_length) << "\n";
            std::cout << "materializable=" << yesno(r.result_report.materializable) << "\n";
            if (materialize && r.result_code)
                std::cout << "result_code=" << dec(*r.result_code) << "\n";
            std::cout << "consistent=" << mark(r.consistent) << "\n";
            std::cout << "self_numeral_impossible=" << yesno(r.cert.impossible) << "\n";
        } else if (*c_cert) {
            Certificate cert = self_numeral_certificate(parse_formula(formula_text), scheme);
            std::cout << "formula_symbols=" << dec(cert.formula_symbols) << "\n";
            std::cout << "numeral_symbols="
                      << (cert.numeral_symbols ? dec(*cert.numeral_symbols) : std::string("-"))
                      << "\n";
            std::cout << "impossible=" << yesno(cert.impossible) << "\n";
        } else if (*c_gamma) {
            FormulaPtr Z = parse_formula(z_text);
            auto default_gen = [](std::size_t i) {
                return f_equals(t_var('z'), t_numeral(i));
            };
            if (divergence_k > 0) {
                std::function<FormulaPtr(std::size_t)> gen = default_gen;
                if (!s_texts.empty()) {
                    if (s_texts.size() < divergence_k)
                        throw BoundsError("need at least " + std::to_string(divergence_k) +
                                          " --s entries");
                    std::vector<FormulaPtr> S;
                    for (const std::string& s : s_texts) S.push_back(parse_formula(s));
                    gen = [S](std::size_t i) { return S[i - 1]; };
                }
                for (const auto& [k, symbols] : gamma_divergence(gen, Z, divergence_k, scheme))
                    std::cout << k << " " << dec(symbols) << "\n";
            } else {
                std::size_t k = gamma_k ? gamma_k : std::max<std::size_t>(s_texts.size(), 1);
                std::vector<FormulaPtr> S;
                if (s_texts.empty())
                    for (std::size_t i = 1; i <= k; ++i) S.push_back(default_gen(i));
                else
                    for (const std::string& s : s_texts) S.push_back(parse_formula(s));
                GammaPrefix g = gamma_prefix(k, S, Z, scheme);
                std::cout << "k=" << g.k << " ";
                print_size(g.report);
            }
        }
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "BadNumber: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
