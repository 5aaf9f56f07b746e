#include "abszeta/zeta_expr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abszeta {

FactoredRational FactoredRational::from_factor(const Rat& root, long long exponent) {
    FactoredRational expr;
    expr.multiply_factor(root, exponent);
    return expr;
}

long long FactoredRational::exponent_of(const Rat& root) const {
    auto it = factors_.find(root);
    return it == factors_.end() ? 0 : it->second;
}

void FactoredRational::multiply_factor(const Rat& root, long long exponent) {
    if (exponent == 0) return;
    auto [it, inserted] = factors_.emplace(root, exponent);
    if (!inserted) {
        it->second += exponent;
        if (it->second == 0) factors_.erase(it);
    }
}

void FactoredRational::multiply_scalar(const Rat& value) {
    if (value <= 0) throw std::invalid_argument("scalar must stay positive");
    scalar_ *= value;
}

FactoredRational zeta_of_poly(const LaurentPoly& f) {
    FactoredRational zeta;
    for (const auto& [k, a] : f.terms())
        zeta.multiply_factor(Rat(k), -a.convert_to<long long>());
    return zeta;
}

FactoredRational shift(const FactoredRational& expr, const Rat& t) {
    FactoredRational shifted;
    for (const auto& [root, e] : expr.factors()) shifted.multiply_factor(root - t, e);
    shifted.multiply_scalar(expr.scalar());
    return shifted;
}

FactoredRational multiply(const FactoredRational& lhs, const FactoredRational& rhs) {
    FactoredRational product = lhs;
    for (const auto& [root, e] : rhs.factors()) product.multiply_factor(root, e);
    product.multiply_scalar(rhs.scalar());
    return product;
}

FactoredRational inverse(const FactoredRational& expr) {
    FactoredRational inv;
    for (const auto& [root, e] : expr.factors()) inv.multiply_factor(root, -e);
    inv.multiply_scalar(Rat(1) / expr.scalar());
    return inv;
}

FactoredRational finite_shifted_product(const FactoredRational& expr, long long modulus,
                                        long long upper_index) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    if (upper_index < 0) throw std::invalid_argument("upper index must be nonnegative");
    FactoredRational product;
    for (long long k = 0; k <= upper_index; ++k)
        product = multiply(product, shift(expr, Rat(k * modulus)));
    return product;
}

bool FunctionalEquationScan::contains(const Rat& center, int sign) const {
    if (every_center && sign == +1) return true;
    return std::find(equations.begin(), equations.end(), FunctionalEquation{center, sign}) !=
           equations.end();
}

FunctionalEquationScan detect_functional_equation(const FactoredRational& expr) {
    FunctionalEquationScan scan;
    if (expr.factors().empty()) {
        // The constant admits every center; not representable as a list.
        scan.every_center = true;
        return scan;
    }

    // Under s -> D - s each factor (s - beta)^e becomes
    // (-1)^e (s - (D - beta))^e, so besides the root-map symmetry the total
    // exponent parity and the scalar constrain which signs are possible.
    long long exponent_sum = 0;
    for (const auto& [root, e] : expr.factors()) exponent_sum += e;
    const bool parity_even = ((exponent_sum % 2) + 2) % 2 == 0;

    std::set<Rat> candidates;
    for (const auto& [alpha, ea] : expr.factors())
        for (const auto& [beta, eb] : expr.factors()) candidates.insert(alpha + beta);

    for (const Rat& center : candidates) {
        bool symmetric = true;       // e(D - beta) == e(beta)
        bool antisymmetric = true;   // e(D - beta) == -e(beta)
        for (const auto& [root, e] : expr.factors()) {
            const long long mirrored = expr.exponent_of(center - root);
            symmetric = symmetric && mirrored == e;
            antisymmetric = antisymmetric && mirrored == -e;
        }
        if (symmetric && parity_even) scan.equations.push_back({center, +1});
        if (antisymmetric && parity_even && expr.scalar() == 1)
            scan.equations.push_back({center, -1});
    }

    std::sort(scan.equations.begin(), scan.equations.end(),
              [](const FunctionalEquation& lhs, const FunctionalEquation& rhs) {
                  if (lhs.center != rhs.center) return lhs.center < rhs.center;
                  return lhs.sign > rhs.sign;
              });
    return scan;
}

}  // namespace abszeta
