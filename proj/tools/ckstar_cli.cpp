/*
 * ckstar command-line front end.
 *
 * Subcommands: matrix classify|factor, ktheory, expr
 * normalize|delta|counit|gauge|member, rep decompose|verify, shift words.
 * Matrices are JSON {"n":..,"rows":[[..]]}, text grids, or "F<k>"
 * shortcuts. Results go to stdout, diagnostics to stderr. Exit codes:
 * 0 success, 1 property-check failure (rep verify / expr member false),
 * 2 input error. Output is byte-identical across runs for fixed inputs.
 */

#include "ckstar/ckstar.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace ckstar;

namespace {

Word parse_word_list(const std::string& csv) {
    Word w;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) w.push_back(std::stoi(item));
    if (w.empty()) throw std::invalid_argument("empty letter list: " + csv);
    return w;
}

json tensor_to_json(const TensorElement& t) {
    json terms = json::array();
    for (const auto& [k, c] : t.terms()) {
        json legs = json::array();
        for (std::size_t leg = 0; leg < k.contexts.size(); ++leg)
            legs.push_back({{"context", k.contexts[leg].tag()},
                            {"monomial", k.monomials[leg].str()}});
        terms.push_back({{"coefficient", c.str()}, {"legs", legs}});
    }
    return terms;
}

json element_to_json(const AlgebraElement& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back({{"coefficient", c.str()}, {"monomial", m.str()}});
    return {{"context", x.context().tag()}, {"terms", terms}};
}

struct ExprArgs {
    std::string context;
    std::string expression;
    std::string family = "af";
    bool as_json = false;
};

Family family_from_name(const std::string& name, SigmaRule& sigma, bool& needs_sigma) {
    needs_sigma = false;
    if (name == "cstar") return Family::CStar;
    if (name == "af") return Family::AF;
    if (name == "sf") return Family::SF;
    needs_sigma = true;
    if (name == "ck1") {
        sigma = sigma_first();
        return Family::CKSigma;
    }
    if (name == "ckn") {
        sigma = sigma_last();
        return Family::CKSigma;
    }
    if (name == "ck1n") {
        sigma = sigma_first_last();
        return Family::CKSigma;
    }
    throw std::invalid_argument("unknown family: " + name +
                                " (expected cstar|af|sf|ck1|ckn|ck1n)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic computation in the Cuntz-Krieger bialgebra CK_*"};
    app.require_subcommand(1);

    // ---- matrix ----
    auto* matrix = app.add_subcommand("matrix", "monoid operations on 0-1 matrices");
    matrix->require_subcommand(1);
    std::string matrix_file;
    bool matrix_json = false;

    auto* mclassify = matrix->add_subcommand("classify", "nondegenerate/irreducible/permutation/simple");
    mclassify->add_option("matrix", matrix_file, "matrix file or F<k>")->required();
    mclassify->add_flag("--json", matrix_json, "JSON output");

    auto* mfactor = matrix->add_subcommand("factor", "list the Kronecker divisor pairs N_A");
    mfactor->add_option("matrix", matrix_file, "matrix file or F<k>")->required();
    mfactor->add_flag("--json", matrix_json, "JSON output");

    // ---- ktheory ----
    auto* kth = app.add_subcommand("ktheory", "K-groups of O_A from the Smith form of 1 - A^t");
    std::string kth_file;
    bool kth_smith = false, kth_json = false;
    kth->add_option("matrix", kth_file, "matrix file or F<k>")->required();
    kth->add_flag("--smith", kth_smith, "also print the Smith diagonal");
    kth->add_flag("--json", kth_json, "JSON output");

    // ---- expr ----
    auto* expr = app.add_subcommand("expr", "algebra element operations");
    expr->require_subcommand(1);
    ExprArgs ea;
    auto add_expr_common = [&](CLI::App* sub) {
        sub->add_option("--context", ea.context, "context matrix file or F<k>")->required();
        sub->add_option("expression", ea.expression, "expression, e.g. \"s1 s2* + (1/2)I\"")
            ->required();
        sub->add_flag("--json", ea.as_json, "JSON output");
    };
    auto* enormalize = expr->add_subcommand("normalize", "canonical normal form");
    add_expr_common(enormalize);
    auto* edelta = expr->add_subcommand("delta", "comultiplication Delta(x)");
    add_expr_common(edelta);
    auto* ecounit = expr->add_subcommand("counit", "counit eps(x)");
    add_expr_common(ecounit);
    auto* egauge = expr->add_subcommand("gauge", "formal gauge phases per degree");
    add_expr_common(egauge);
    auto* emember = expr->add_subcommand("member", "subbialgebra membership");
    add_expr_common(emember);
    emember->add_option("--family", ea.family, "cstar|af|sf|ck1|ckn|ck1n")->required();

    // ---- rep ----
    auto* rep = app.add_subcommand("rep", "permutative representations");
    rep->require_subcommand(1);
    std::string rep_a, rep_b, rep_j, rep_k;
    int rep_depth = 6;
    bool rep_json = false, rep_verify_flag = false;
    auto add_rep_common = [&](CLI::App* sub) {
        sub->add_option("-A", rep_a, "left context matrix")->required();
        sub->add_option("-B", rep_b, "right context matrix")->required();
        sub->add_option("-J", rep_j, "left cycle word, comma-separated")->required();
        sub->add_option("-K", rep_k, "right cycle word, comma-separated")->required();
        sub->add_option("--depth", rep_depth, "truncation depth (default 6)");
    };
    auto* rdecompose = rep->add_subcommand("decompose", "decompose P(J) (x) P(K) into cycles");
    add_rep_common(rdecompose);
    rdecompose->add_flag("--verify", rep_verify_flag, "also verify at the given depth");
    rdecompose->add_flag("--json", rep_json, "JSON output");
    auto* rverify = rep->add_subcommand("verify", "verify the decomposition; exit 0/1");
    add_rep_common(rverify);

    // ---- shift ----
    auto* shift = app.add_subcommand("shift", "subshift of finite type");
    shift->require_subcommand(1);
    std::string shift_a;
    int shift_l = 1;
    bool shift_count_only = false, shift_json = false;
    auto* swords = shift->add_subcommand("words", "admissible words of a given length");
    swords->add_option("-A", shift_a, "context matrix")->required();
    swords->add_option("-l", shift_l, "word length")->required();
    swords->add_flag("--count-only", shift_count_only, "print only the count");
    swords->add_flag("--json", shift_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mclassify->parsed()) {
            ZeroOneMatrix a = load_matrix(matrix_file);
            MatrixClassification c = classify(a);
            if (matrix_json) {
                std::cout << json{{"nondegenerate", c.nondegenerate},
                                  {"irreducible", c.irreducible},
                                  {"permutation", c.permutation},
                                  {"simple_ck", c.simple_ck}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "nondegenerate = " << (c.nondegenerate ? "true" : "false") << "\n"
                          << "irreducible   = " << (c.irreducible ? "true" : "false") << "\n"
                          << "permutation   = " << (c.permutation ? "true" : "false") << "\n"
                          << "simple_ck     = " << (c.simple_ck ? "true" : "false") << "\n";
            }
            return 0;
        }
        if (mfactor->parsed()) {
            ZeroOneMatrix a = load_matrix(matrix_file);
            auto divs = divisors(a);
            if (matrix_json) {
                json out = json::array();
                for (const auto& d : divs)
                    out.push_back({{"left", matrix_to_json(d.left)},
                                   {"right", matrix_to_json(d.right)}});
                std::cout << out.dump() << "\n";
            } else {
                for (const auto& d : divs)
                    std::cout << "(" << d.left.tag() << ", " << d.right.tag() << ")\n";
            }
            return 0;
        }
        if (kth->parsed()) {
            ZeroOneMatrix a = load_matrix(kth_file);
            KGroups kg = k_groups(a);
            if (kth_json) {
                json out{{"k0", kg.k0.str()}, {"k1", kg.k1.str()}};
                if (kth_smith) {
                    json diag = json::array();
                    for (const BigInt& d : kg.smith_diagonal) diag.push_back(d.str());
                    out["smith_diagonal"] = diag;
                }
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "K0 = " << kg.k0.str() << "\n";
                std::cout << "K1 = " << kg.k1.str() << "\n";
                if (kth_smith) {
                    std::cout << "smith diagonal =";
                    for (const BigInt& d : kg.smith_diagonal) std::cout << " " << d;
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (expr->parsed()) {
            ZeroOneMatrix ctx = load_matrix(ea.context);
            AlgebraElement x = parse_expression(ea.expression, ctx);
            if (enormalize->parsed()) {
                if (ea.as_json)
                    std::cout << element_to_json(x).dump() << "\n";
                else
                    std::cout << x.str() << "\n";
                return 0;
            }
            if (edelta->parsed()) {
                TensorElement d = delta(DirectSumElement::inject(x));
                if (ea.as_json)
                    std::cout << tensor_to_json(d).dump() << "\n";
                else
                    std::cout << d.str() << "\n";
                return 0;
            }
            if (ecounit->parsed()) {
                GaussianRational v = counit(DirectSumElement::inject(x));
                if (ea.as_json)
                    std::cout << json{{"counit", v.str()}}.dump() << "\n";
                else
                    std::cout << v.str() << "\n";
                return 0;
            }
            if (egauge->parsed()) {
                auto comps = x.gauge_components();
                if (ea.as_json) {
                    json out = json::array();
                    for (const auto& [d, part] : comps)
                        out.push_back({{"degree", d},
                                       {"phase", GaugePhase::for_degree(ctx.dim(), d).str()},
                                       {"component", part.str()}});
                    std::cout << out.dump() << "\n";
                } else {
                    for (const auto& [d, part] : comps)
                        std::cout << "degree " << d << "  phase "
                                  << GaugePhase::for_degree(ctx.dim(), d).str() << "  "
                                  << part.str() << "\n";
                }
                return 0;
            }
            if (emember->parsed()) {
                SigmaRule sigma;
                bool needs_sigma = false;
                Family f = family_from_name(ea.family, sigma, needs_sigma);
                bool ok = member(DirectSumElement::inject(x), f, needs_sigma ? &sigma : nullptr);
                if (ea.as_json)
                    std::cout << json{{"family", ea.family}, {"member", ok}}.dump() << "\n";
                else
                    std::cout << (ok ? "true" : "false") << "\n";
                return ok ? 0 : 1;
            }
        }
        if (rep->parsed()) {
            ZeroOneMatrix a = load_matrix(rep_a), b = load_matrix(rep_b);
            CycleWord j(a, parse_word_list(rep_j)), k(b, parse_word_list(rep_k));
            Decomposition dec = decompose(j, k);
            if (rverify->parsed()) {
                bool ok = verify_decomposition(j, k, dec, rep_depth);
                std::cout << (ok ? "verified" : "FAILED") << "\n";
                return ok ? 0 : 1;
            }
            std::string over = a.tag() + "(x)" + b.tag();
            if (rep_json) {
                json out = json::array();
                for (const CycleWord& c : dec.components)
                    out.push_back({{"word", c.letters},
                                   {"period", c.period()},
                                   {"primitive", c.primitive()},
                                   {"context", c.context.tag()}});
                std::cout << out.dump() << "\n";
            } else {
                for (const CycleWord& c : dec.components)
                    std::cout << c.str() << " over " << over
                              << (c.primitive() ? " [primitive]" : " [non-primitive]") << "\n";
            }
            if (rep_verify_flag && !verify_decomposition(j, k, dec, rep_depth)) {
                std::cerr << "verification failed at depth " << rep_depth << "\n";
                return 1;
            }
            return 0;
        }
        if (swords->parsed()) {
            ZeroOneMatrix a = load_matrix(shift_a);
            if (shift_count_only) {
                BigInt c = count_words(a, shift_l);
                if (shift_json)
                    std::cout << json{{"length", shift_l}, {"count", c.str()}}.dump() << "\n";
                else
                    std::cout << c << "\n";
                return 0;
            }
            auto words = admissible_words(a, shift_l);
            if (shift_json) {
                json out = json::array();
                for (const Word& w : words) out.push_back(w);
                std::cout << json{{"length", shift_l},
                                  {"count", words.size()},
                                  {"words", out}}
                                 .dump()
                          << "\n";
            } else {
                for (const Word& w : words) {
                    for (std::size_t t = 0; t < w.size(); ++t)
                        std::cout << (t ? "," : "") << w[t];
                    std::cout << "\n";
                }
                std::cout << "count = " << words.size() << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
