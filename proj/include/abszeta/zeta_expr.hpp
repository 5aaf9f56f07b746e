#ifndef ABSZETA_ZETA_EXPR_HPP
#define ABSZETA_ZETA_EXPR_HPP

#include <map>
#include <vector>

#include "abszeta/laurent.hpp"
#include "abszeta/types.hpp"

namespace abszeta {

// scalar * prod_beta (s - beta)^{e_beta} in canonical form: exact rational
// roots, integer exponents, zero exponents never stored, scalar positive.
// Equality of the representation is equality of the function.
class FactoredRational {
  public:
    using FactorMap = std::map<Rat, long long>;

    FactoredRational() = default;  // the constant 1

    static FactoredRational one() { return {}; }
    static FactoredRational from_factor(const Rat& root, long long exponent);

    bool is_one() const noexcept { return factors_.empty() && scalar_ == 1; }
    const FactorMap& factors() const noexcept { return factors_; }
    const Rat& scalar() const noexcept { return scalar_; }
    long long exponent_of(const Rat& root) const;

    void multiply_factor(const Rat& root, long long exponent);
    void multiply_scalar(const Rat& value);

    bool operator==(const FactoredRational& rhs) const = default;

  private:
    FactorMap factors_;
    Rat scalar_ = 1;
};

/// zeta_f(s) = prod_k (s - k)^{-a(k)} for f = sum_k a(k) x^k.
FactoredRational zeta_of_poly(const LaurentPoly& f);

/// Z(s + t): every root beta moves to beta - t.
FactoredRational shift(const FactoredRational& expr, const Rat& t);

FactoredRational multiply(const FactoredRational& lhs, const FactoredRational& rhs);
FactoredRational inverse(const FactoredRational& expr);

/// Z_N^K(s) = prod_{k=0}^{K} Z(s + kN), telescoped by the canonical map.
FactoredRational finite_shifted_product(const FactoredRational& expr, long long modulus,
                                        long long upper_index);

/// Z(D - s) = Z(s)^C with C in {+1,-1}.
struct FunctionalEquation {
    Rat center;
    int sign = +1;

    bool operator==(const FunctionalEquation&) const = default;
};

/// Every functional equation of the expression, ascending center, +1 before
/// -1 at equal centers. The constant expression satisfies Z(D-s) = Z(s) for
/// every D; that case returns an empty list with every_center set.
struct FunctionalEquationScan {
    std::vector<FunctionalEquation> equations;
    bool every_center = false;

    bool contains(const Rat& center, int sign) const;
};

FunctionalEquationScan detect_functional_equation(const FactoredRational& expr);

}  // namespace abszeta

#endif
