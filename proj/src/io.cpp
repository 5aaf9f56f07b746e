#include "abszeta/io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace abszeta {

namespace {

nlohmann::json json_int(const Int& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
        return n.convert_to<std::int64_t>();
    return n.str();
}

nlohmann::json json_rational(const Rat& q) {
    return nlohmann::json::array({json_int(rat_num(q)), json_int(rat_den(q))});
}

std::string rational_text(const Rat& q) {
    std::string text = rat_num(q).str();
    if (rat_den(q) != 1) text += "/" + rat_den(q).str();
    return text;
}

}  // namespace

std::string format_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [k, a] = *it;
        const bool negative = a < 0;
        const Int magnitude = negative ? Int(-a) : a;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (magnitude != 1 || k == 0) out += magnitude.str();
        if (k != 0) {
            out += "x";
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

LaurentPoly parse_laurent(const std::string& text) {
    LaurentPoly p;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& what) {
        const std::string token = i < text.size() ? text.substr(i, 8) : "<end>";
        throw std::invalid_argument("polynomial parse error: " + what + " at '" + token + "'");
    };
    auto parse_digits = [&]() -> std::string {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail("expected digits");
        return text.substr(start, i - start);
    };

    bool any_term = false;
    skip_ws();
    while (i < text.size()) {
        int sign = +1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : +1;
            ++i;
            skip_ws();
        } else if (any_term) {
            fail("expected '+' or '-'");
        }
        Int coefficient = 1;
        bool have_coefficient = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coefficient = Int(parse_digits());
            have_coefficient = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        long long exponent = 0;
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                bool exp_negative = false;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    exp_negative = text[i] == '-';
                    ++i;
                }
                exponent = std::stoll(parse_digits());
                if (exp_negative) exponent = -exponent;
            }
        } else if (!have_coefficient) {
            fail("expected coefficient or 'x'");
        }
        p += LaurentPoly::monomial(exponent, sign * coefficient);
        any_term = true;
        skip_ws();
    }
    if (!any_term) throw std::invalid_argument("polynomial parse error: empty input");
    return p;
}

namespace {

// "(s-2)", "s", "(s+1)", "(s-1/2)"; exponent appended when > 1.
std::string linear_factor_text(const Rat& root, long long exponent, bool latex) {
    std::string body;
    if (root == 0) {
        body = "s";
    } else {
        body = "(s" + std::string(root > 0 ? "-" : "+") + rational_text(root > 0 ? root : Rat(-root)) + ")";
    }
    if (exponent > 1)
        body += latex ? "^{" + std::to_string(exponent) + "}" : "^" + std::to_string(exponent);
    return body;
}

std::string scalar_text(const Rat& scalar, bool latex) {
    if (latex && rat_den(scalar) != 1)
        return "\\frac{" + rat_num(scalar).str() + "}{" + rat_den(scalar).str() + "}";
    return rational_text(scalar);
}

// A lone unit-power factor drops its parentheses inside \frac{}{}.
std::string strip_lone_parens(const std::string& text) {
    if (text.size() >= 2 && text.front() == '(' && text.find('(', 1) == std::string::npos &&
        text.back() == ')')
        return text.substr(1, text.size() - 2);
    return text;
}

std::string render_plain(const FactoredRational& expr, bool latex) {
    std::string numerator;
    std::string denominator;
    std::size_t numerator_entries = 0;
    std::size_t denominator_entries = 0;
    for (const auto& [root, e] : expr.factors()) {
        if (e > 0) {
            numerator += linear_factor_text(root, e, latex);
            ++numerator_entries;
        } else {
            denominator += linear_factor_text(root, -e, latex);
            ++denominator_entries;
        }
    }
    std::string out;
    if (expr.scalar() != 1) out += scalar_text(expr.scalar(), latex) + " ";
    if (denominator.empty()) {
        out += numerator.empty() ? "1" : numerator;
        return out;
    }
    if (latex) {
        if (numerator_entries == 1) numerator = strip_lone_parens(numerator);
        if (denominator_entries == 1) denominator = strip_lone_parens(denominator);
        out += "\\frac{" + (numerator.empty() ? "1" : numerator) + "}{" + denominator + "}";
        return out;
    }
    out += numerator.empty() ? "1" : numerator;
    out += "/";
    out += denominator_entries > 1 ? "(" + denominator + ")" : denominator;
    return out;
}

std::string gamma_factor_text(const Rat& root, long long exponent, long long modulus) {
    std::string argument;
    if (root == 0) {
        argument = "s";
    } else {
        argument = "s" + std::string(root > 0 ? "-" : "+") + rational_text(root > 0 ? root : Rat(-root));
    }
    std::string body = "Gamma(";
    if (modulus == 1) {
        body += root == 0 ? argument : "(" + argument + ")";
    } else {
        body += (root == 0 ? argument : "(" + argument + ")") + "/" + std::to_string(modulus);
    }
    body += ")";
    if (exponent > 1) body += "^" + std::to_string(exponent);
    return body;
}

}  // namespace

std::string render(const FactoredRational& expr, RenderStyle style) {
    if (style == RenderStyle::Json) return to_json(expr).dump();
    return render_plain(expr, style == RenderStyle::Latex);
}

std::string render(const GammaProduct& product, RenderStyle style) {
    if (style == RenderStyle::Json) return to_json(product).dump();
    if (product.gamma_factors().empty()) {
        FactoredRational folded = product.rational_part();
        folded.multiply_scalar(product.scalar());
        return render(folded, style);
    }
    std::string numerator;
    std::string denominator;
    std::size_t denominator_entries = 0;
    for (const auto& [root, eps] : product.gamma_factors()) {
        if (eps > 0) {
            numerator += gamma_factor_text(root, eps, product.modulus());
        } else {
            denominator += gamma_factor_text(root, -eps, product.modulus());
            ++denominator_entries;
        }
    }
    std::string out;
    if (product.scalar() != 1) out += rational_text(product.scalar()) + " * ";
    out += numerator.empty() ? "1" : numerator;
    if (!denominator.empty()) {
        out += "/";
        out += denominator_entries > 1 ? "(" + denominator + ")" : denominator;
    }
    if (!product.rational_part().is_one())
        out += " * " + render(product.rational_part(), style);
    return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
    auto terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(nlohmann::json::array({it->first, json_int(it->second)}));
    return terms;
}

nlohmann::json to_json(const FactoredRational& expr) {
    auto factors = nlohmann::json::array();
    for (const auto& [root, e] : expr.factors())
        factors.push_back(nlohmann::json::array({json_int(rat_num(root)), json_int(rat_den(root)), e}));
    return {{"scalar", json_rational(expr.scalar())}, {"factors", factors}};
}

nlohmann::json to_json(const GammaProduct& product) {
    auto gamma = nlohmann::json::array();
    for (const auto& [root, eps] : product.gamma_factors())
        gamma.push_back(nlohmann::json::array({json_int(rat_num(root)), json_int(rat_den(root)), eps}));
    return {{"N", product.modulus()},
            {"gamma", gamma},
            {"rational", to_json(product.rational_part())},
            {"scalar", json_rational(product.scalar())}};
}

nlohmann::json to_json(const FunctionalEquationScan& scan) {
    auto equations = nlohmann::json::array();
    for (const auto& fe : scan.equations)
        equations.push_back({{"center", json_rational(fe.center)}, {"sign", fe.sign}});
    return {{"equations", equations}, {"every_center", scan.every_center}};
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    return {{"claim", report.claim},   {"verdict", report.passed ? "pass" : "fail"},
            {"lhs", report.lhs},       {"rhs", report.rhs},
            {"abs_err", report.abs_err}, {"rel_err", report.rel_err},
            {"params", params}};
}

std::string to_json_line(const VerificationReport& report) { return to_json(report).dump(); }

}  // namespace abszeta
