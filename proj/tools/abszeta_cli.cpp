// Command-line front end: constructions, shifted products, deciders, and the
// verification suites, with deterministic plain/latex/json output.
#include <complex>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "abszeta/catalog.hpp"
#include "abszeta/gamma_expr.hpp"
#include "abszeta/io.hpp"
#include "abszeta/numerics.hpp"
#include "abszeta/verify.hpp"

namespace {

using namespace abszeta;

RenderStyle parse_style(const std::string& format) {
    if (format == "plain") return RenderStyle::Plain;
    if (format == "latex") return RenderStyle::Latex;
    if (format == "json") return RenderStyle::Json;
    throw CLI::ValidationError("--format", "expected plain, latex, or json");
}

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        const Complex value = comma == std::string::npos
                                  ? Complex{std::stod(text), 0.0}
                                  : Complex{std::stod(text.substr(0, comma)),
                                            std::stod(text.substr(comma + 1))};
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
            throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--s", "expected finite \"re\" or \"re,im\", got '" + text + "'");
    }
}

// "gl"/"sl"/"gm" plus --r compose to the full spec; anything else parses
// as-is.
NamedCount resolve_count(const std::string& spec, std::optional<int> rank) {
    if (rank) {
        if (spec == "gl" || spec == "sl") return parse_count_spec(spec + ":" + std::to_string(*rank));
        if (spec == "gm") return parse_count_spec("gm^" + std::to_string(*rank));
    }
    return parse_count_spec(spec);
}

double default_tolerance() {
    if (const char* env = std::getenv("ABSZETA_TOL")) return std::stod(env);
    return 1e-3;
}

int run_zeta(const NamedCount& count, RenderStyle style, std::optional<Complex> at) {
    const FactoredRational zeta = zeta_of_poly(count.poly);
    std::cout << render(zeta, style) << "\n";
    if (at) std::cout << "value at s = " << VerificationReport::format_complex(*at) << ": "
                      << VerificationReport::format_complex(eval_factored(zeta, *at)) << "\n";
    return 0;
}

int run_product(const NamedCount& count, long long modulus, const std::string& upper,
                RenderStyle style, std::optional<Complex> at, double tol) {
    const FactoredRational zeta = zeta_of_poly(count.poly);
    if (upper == "inf") {
        const auto verdict = check_convergence(count.poly, modulus);
        if (!verdict.converges) {
            std::cout << "diverges (f(1)=" << verdict.f1.str() << ", f'(1)=" << verdict.f1prime.str()
                      << ")\n";
            return 0;
        }
        const GammaProduct product = normalize(infinite_shifted_product(count.poly, modulus));
        if (const auto extracted = extract_rational(product)) {
            std::cout << render(*extracted, style) << "\n";
        } else {
            std::cout << render(product, style) << "\n";
        }
        if (at) std::cout << "value at s = " << VerificationReport::format_complex(*at) << ": "
                          << VerificationReport::format_complex(eval_gamma_product(product, *at))
                          << "\n";
        return 0;
    }
    long long upper_index = 0;
    try {
        std::size_t used = 0;
        upper_index = std::stoll(upper, &used);
        if (used != upper.size()) throw std::invalid_argument(upper);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--K", "expected a nonnegative integer or \"inf\", got '" + upper + "'");
    }
    const FactoredRational product = finite_shifted_product(zeta, modulus, upper_index);
    std::cout << render(product, style) << "\n";
    if (at) {
        // Numeric cross-check of the telescoped form against the direct
        // partial product at s.
        const auto report = partial_product_sweep(count.poly, modulus, *at, {upper_index}, tol);
        std::cout << "value at s = " << VerificationReport::format_complex(*at) << ": "
                  << VerificationReport::format_complex(eval_factored(product, *at)) << "\n";
        if (check_convergence(count.poly, modulus).converges) {
            std::cout << (report.passed ? "matches" : "MISMATCHES") << " gamma closed form, rel_err="
                      << VerificationReport::format_double(report.rel_err) << " (tol "
                      << VerificationReport::format_double(tol) << ")\n";
            if (!report.passed) return 1;
        }
    }
    return 0;
}

int run_convergence(const NamedCount& count, long long modulus, RenderStyle style) {
    const auto verdict = check_convergence(count.poly, modulus);
    if (style == RenderStyle::Json) {
        nlohmann::json out = {{"count", count.name},
                              {"N", modulus},
                              {"converges", verdict.converges},
                              {"f1", verdict.f1.str()},
                              {"f1prime", verdict.f1prime.str()}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (verdict.converges)
        std::cout << "converges\n";
    else
        std::cout << "diverges (f(1)=" << verdict.f1.str() << ", f'(1)=" << verdict.f1prime.str()
                  << ")\n";
    return 0;
}

int run_rationality(const NamedCount& count, long long modulus, RenderStyle style) {
    const auto verdict = check_convergence(count.poly, modulus);
    if (!verdict.converges) {
        std::cout << "diverges (f(1)=" << verdict.f1.str() << ", f'(1)=" << verdict.f1prime.str()
                  << ")\n";
        return 0;
    }
    const auto extracted = extract_rational(infinite_shifted_product(count.poly, modulus));
    if (style == RenderStyle::Json) {
        nlohmann::json out = {{"count", count.name}, {"N", modulus}, {"rational", extracted.has_value()}};
        if (extracted) out["expression"] = to_json(*extracted);
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (extracted)
        std::cout << "rational: " << render(*extracted, style) << "\n";
    else
        std::cout << "not rational (gamma factors remain)\n";
    return 0;
}

int run_fe(const NamedCount& count, std::optional<long long> modulus, const std::string& upper,
           RenderStyle style) {
    FactoredRational expr = zeta_of_poly(count.poly);
    if (modulus) {
        if (upper == "inf") {
            const auto extracted = extract_rational(infinite_shifted_product(count.poly, *modulus));
            if (!extracted) {
                std::cout << "not rational at N=" << *modulus << "; no factored expression to scan\n";
                return 0;
            }
            expr = *extracted;
        } else {
            expr = finite_shifted_product(expr, *modulus, std::stoll(upper));
        }
    }
    const auto scan = detect_functional_equation(expr);
    if (style == RenderStyle::Json) {
        std::cout << to_json(scan).dump() << "\n";
        return 0;
    }
    if (scan.every_center) {
        std::cout << "every center (constant expression)\n";
        return 0;
    }
    if (scan.equations.empty()) {
        std::cout << "none\n";
        return 0;
    }
    for (const auto& fe : scan.equations) {
        const std::string center = rat_den(fe.center) == 1
                                       ? rat_num(fe.center).str()
                                       : rat_num(fe.center).str() + "/" + rat_den(fe.center).str();
        std::cout << "Z(" << center << "-s) = Z(s)" << (fe.sign == 1 ? "" : "^-1") << "\n";
    }
    return 0;
}

int run_automorphy(const NamedCount& count, std::optional<long long> modulus, RenderStyle style) {
    const auto symmetry =
        modulus ? quotient_automorphy(count.poly, *modulus) : detect_automorphy(count.poly);
    if (style == RenderStyle::Json) {
        nlohmann::json out;
        if (symmetry)
            out = {{"sign", symmetry->sign}, {"center", symmetry->center}};
        else
            out = nullptr;
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (!symmetry) {
        std::cout << "absent\n";
        return 0;
    }
    std::cout << "f(1/x) = " << (symmetry->sign == 1 ? "" : "-") << "x^-" << symmetry->center
              << " f(x)\n";
    return 0;
}

int run_verify(const std::string& which, RenderStyle style) {
    std::vector<VerifySuite> suites;
    if (which == "all") {
        suites = run_all_verify_suites();
    } else {
        suites.push_back(run_verify_suite(which));
    }
    const bool detailed = which != "all";  // single suites get the full table
    bool all_passed = true;
    for (const auto& suite : suites) {
        const bool ok = suite.passed();
        all_passed = all_passed && ok;
        if (style == RenderStyle::Json) {
            for (const auto& report : suite.reports) std::cout << to_json_line(report) << "\n";
            continue;
        }
        std::printf("[%s] %s — %s (%zu checks, %.1f ms)\n", ok ? "PASS" : "FAIL",
                    suite.name.c_str(), suite.description.c_str(), suite.reports.size(),
                    suite.elapsed_ms);
        for (const auto& report : suite.reports) {
            if (report.passed && !detailed) continue;
            std::printf("  %-4s  %-58s  rel_err=%-11.3e  %s\n", report.passed ? "pass" : "FAIL",
                        report.claim.c_str(), report.rel_err, report.lhs.c_str());
            if (!report.passed)
                std::printf("        expected: %s\n", report.rhs.c_str());
        }
    }
    return all_passed ? 0 : 1;
}

int run_catalog() {
    std::cout << "gl:r          |GL(r,F_x)|, e.g. gl:2 -> " << format_laurent(counting_gl(2)) << "\n"
              << "sl:r          |SL(r,F_x)|, e.g. sl:2 -> " << format_laurent(counting_sl(2)) << "\n"
              << "gm^r          (x-1)^r,     e.g. gm^2 -> " << format_laurent(counting_gm_power(2)) << "\n"
              << "quartic:a,b,c,d  x^a+x^b-x^c-x^d, e.g. quartic:1,4,2,3 -> "
              << format_laurent(quartic(1, 4, 2, 3)) << "\n"
              << "<polynomial>  raw term list, e.g. \"x^4 - x^3 - x^2 + x\"\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"absolute zeta workbench: exact shifted products over F_1 and their deciders"};
    app.require_subcommand(1);

    std::string count_spec;
    std::string format = "plain";
    std::string upper = "0";
    std::string suite = "all";
    std::string at_text;
    long long modulus = 1;
    std::optional<int> rank;
    double tol = default_tolerance();

    auto add_common = [&](CLI::App* cmd, bool with_count = true) {
        if (with_count) cmd->add_option("count", count_spec, "counting function spec")->required();
        cmd->add_option("--format", format, "plain, latex, or json");
        cmd->add_option("--r", rank, "rank for bare gl/sl/gm specs");
    };

    auto* zeta_cmd = app.add_subcommand("zeta", "factored zeta of a counting function");
    add_common(zeta_cmd);
    zeta_cmd->add_option("--s", at_text, "evaluate numerically at s = re[,im]");

    auto* product_cmd = app.add_subcommand("product", "finite or infinite shifted product");
    add_common(product_cmd);
    product_cmd->add_option("--N", modulus, "shift modulus")->check(CLI::PositiveNumber);
    product_cmd->add_option("--K", upper, "upper index, or \"inf\"");
    product_cmd->add_option("--s", at_text, "evaluate numerically at s = re[,im]");
    product_cmd->add_option("--tol", tol, "numeric tolerance for --s cross-checks");

    auto* convergence_cmd = app.add_subcommand("convergence", "does the infinite product converge");
    add_common(convergence_cmd);
    convergence_cmd->add_option("--N", modulus, "shift modulus")->check(CLI::PositiveNumber);

    auto* rationality_cmd = app.add_subcommand("rationality", "is the infinite product rational");
    add_common(rationality_cmd);
    rationality_cmd->add_option("--N", modulus, "shift modulus")->check(CLI::PositiveNumber);

    auto* fe_cmd = app.add_subcommand("fe", "functional equations Z(D-s) = Z(s)^C");
    add_common(fe_cmd);
    bool fe_has_n = false;
    fe_cmd->add_option("--N", modulus, "shift modulus")->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { fe_has_n = true; });
    fe_cmd->add_option("--K", upper, "upper index, or \"inf\"");

    auto* automorphy_cmd = app.add_subcommand("automorphy", "counting-function symmetry f(1/x) = C x^-D f(x)");
    add_common(automorphy_cmd);
    bool automorphy_has_n = false;
    automorphy_cmd->add_option("--N", modulus, "quotient modulus (scan f/(1-x^-N))")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { automorphy_has_n = true; });

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("suite", suite, "suite name or \"all\"");
    verify_cmd->add_option("--format", format, "plain or json");

    auto* catalog_cmd = app.add_subcommand("catalog", "list the named counting functions");
    (void)catalog_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const RenderStyle style = parse_style(format);
        std::optional<Complex> at;
        if (!at_text.empty()) at = parse_complex(at_text);

        if (zeta_cmd->parsed()) return run_zeta(resolve_count(count_spec, rank), style, at);
        if (product_cmd->parsed())
            return run_product(resolve_count(count_spec, rank), modulus, upper, style, at, tol);
        if (convergence_cmd->parsed())
            return run_convergence(resolve_count(count_spec, rank), modulus, style);
        if (rationality_cmd->parsed())
            return run_rationality(resolve_count(count_spec, rank), modulus, style);
        if (fe_cmd->parsed())
            return run_fe(resolve_count(count_spec, rank),
                          fe_has_n ? std::optional<long long>(modulus) : std::nullopt, upper, style);
        if (automorphy_cmd->parsed())
            return run_automorphy(resolve_count(count_spec, rank),
                                  automorphy_has_n ? std::optional<long long>(modulus) : std::nullopt,
                                  style);
        if (verify_cmd->parsed()) return run_verify(suite, style);
        if (catalog_cmd->parsed()) return run_catalog();
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
