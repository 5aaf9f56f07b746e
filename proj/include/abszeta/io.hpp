#ifndef ABSZETA_IO_HPP
#define ABSZETA_IO_HPP

#include <string>

#include <json.hpp>

#include "abszeta/gamma_expr.hpp"
#include "abszeta/laurent.hpp"
#include "abszeta/report.hpp"
#include "abszeta/zeta_expr.hpp"

namespace abszeta {

enum class RenderStyle { Plain, Latex, Json };

/// Signed sparse term list, descending exponents: "x^4 - x^3 - x^2 + x".
std::string format_laurent(const LaurentPoly& p);

/// Parses the same grammar: signed monomials with optional integer
/// coefficient and integer exponent of either sign. Throws
/// std::invalid_argument naming the offending token.
LaurentPoly parse_laurent(const std::string& text);

/// Deterministic factored form. Plain: "(s-2)(s-3)/((s-1)(s-4))" with
/// numerator and denominator each ascending by root.
std::string render(const FactoredRational& expr, RenderStyle style);
std::string render(const GammaProduct& product, RenderStyle style);

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const FactoredRational& expr);
nlohmann::json to_json(const GammaProduct& product);
nlohmann::json to_json(const FunctionalEquationScan& scan);
nlohmann::json to_json(const VerificationReport& report);

/// One-line JSON (JSON-lines friendly).
std::string to_json_line(const VerificationReport& report);

}  // namespace abszeta

#endif
