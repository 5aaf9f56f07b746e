#ifndef ABSZETA_GAMMA_EXPR_HPP
#define ABSZETA_GAMMA_EXPR_HPP

#include <map>
#include <optional>
#include <string>

#include "abszeta/laurent.hpp"
#include "abszeta/zeta_expr.hpp"

namespace abszeta {

// scalar * prod_beta Gamma((s - beta)/N)^{eps_beta} * rational_part.
// Z_N^infty(s) of a convergent counting function lives here; the gamma
// exponent at root k is +a(k).
class GammaProduct {
  public:
    using FactorMap = std::map<Rat, long long>;

    explicit GammaProduct(long long modulus);

    long long modulus() const noexcept { return modulus_; }
    const FactorMap& gamma_factors() const noexcept { return gamma_; }
    const FactoredRational& rational_part() const noexcept { return rational_; }
    const Rat& scalar() const noexcept { return scalar_; }

    void multiply_gamma(const Rat& root, long long exponent);
    void multiply_rational(const FactoredRational& expr);
    void multiply_scalar(const Rat& value);

    bool operator==(const GammaProduct& rhs) const = default;

  private:
    long long modulus_;
    FactorMap gamma_;
    FactoredRational rational_;
    Rat scalar_ = 1;
};

/// The two convergence moments; the product Z_N^infty(s) converges iff both
/// vanish, independently of N.
struct ConvergenceVerdict {
    bool converges = false;
    Int f1;       // f(1)
    Int f1prime;  // f'(1)
};

ConvergenceVerdict check_convergence(const LaurentPoly& f, long long modulus);

/// Z_N^infty(s) = prod_{k>=0} zeta_f(s + kN) as a formal gamma product.
/// Throws DivergenceError when the moments do not vanish.
GammaProduct infinite_shifted_product(const LaurentPoly& f, long long modulus);

/// G(s + t): every root moves to root - t.
GammaProduct shift(const GammaProduct& product, const Rat& t);

/// Canonical form: within each residue class of roots mod N, gamma factors
/// are pushed onto the smallest root via Gamma(z+1) = z Gamma(z); the linear
/// factors and powers of 1/N peeled off land in rational_part and scalar.
/// The represented function is unchanged.
GammaProduct normalize(const GammaProduct& product);

/// scalar * rational_part after normalize, iff no gamma factor survives.
std::optional<FactoredRational> extract_rational(const GammaProduct& product);

/// Root-of-unity criterion for the convergent quartic family: Z_N^infty is
/// rational iff N divides (|a-b|+|c-d|)/2 or (|a-b|-|c-d|)/2, half-integers
/// counting as non-divisible. Requires a+b = c+d.
bool quartic_rationality_condition(long long a, long long b, long long c, long long d,
                                   long long modulus);

/// Outcome of replaying the SL/GL telescoping identity at rank r: the
/// infinite product of zeta_GL(r)(s+n) over n >= 1 against zeta_SL(r)(s).
struct IdentityCheck {
    bool equal = false;
    int rank = 0;
    FactoredRational lhs;  // extracted infinite product
    FactoredRational rhs;  // zeta of the SL count
};

/// Requires r >= 2; the rank-1 product diverges from the SL side.
IdentityCheck sl_gl_product_identity(int r);

}  // namespace abszeta

#endif
