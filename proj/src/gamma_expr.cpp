#include "abszeta/gamma_expr.hpp"

#include <cstdlib>
#include <stdexcept>

#include "abszeta/catalog.hpp"

namespace abszeta {

GammaProduct::GammaProduct(long long modulus) : modulus_(modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
}

void GammaProduct::multiply_gamma(const Rat& root, long long exponent) {
    if (exponent == 0) return;
    auto [it, inserted] = gamma_.emplace(root, exponent);
    if (!inserted) {
        it->second += exponent;
        if (it->second == 0) gamma_.erase(it);
    }
}

void GammaProduct::multiply_rational(const FactoredRational& expr) {
    rational_ = multiply(rational_, expr);
}

void GammaProduct::multiply_scalar(const Rat& value) {
    if (value <= 0) throw std::invalid_argument("scalar must stay positive");
    scalar_ *= value;
}

ConvergenceVerdict check_convergence(const LaurentPoly& f, long long modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    ConvergenceVerdict verdict;
    verdict.f1 = f.eval_at_one();
    verdict.f1prime = f.derivative_at_one();
    // The partial products behave like K^{f'(1)/N} with an s^{-f(1)} front
    // factor, so both moments must vanish; N never changes the verdict.
    verdict.converges = verdict.f1 == 0 && verdict.f1prime == 0;
    return verdict;
}

GammaProduct infinite_shifted_product(const LaurentPoly& f, long long modulus) {
    const auto verdict = check_convergence(f, modulus);
    if (!verdict.converges) throw DivergenceError(verdict.f1, verdict.f1prime);
    GammaProduct product(modulus);
    for (const auto& [k, a] : f.terms())
        product.multiply_gamma(Rat(k), a.convert_to<long long>());
    return product;
}

GammaProduct shift(const GammaProduct& product, const Rat& t) {
    GammaProduct shifted(product.modulus());
    for (const auto& [root, eps] : product.gamma_factors()) shifted.multiply_gamma(root - t, eps);
    shifted.multiply_rational(shift(product.rational_part(), t));
    shifted.multiply_scalar(product.scalar());
    return shifted;
}

GammaProduct normalize(const GammaProduct& product) {
    const long long n = product.modulus();
    GammaProduct reduced(n);
    reduced.multiply_rational(product.rational_part());
    reduced.multiply_scalar(product.scalar());

    // Group roots by residue class mod N: beta ~ beta' iff (beta - beta')/N
    // is an integer. Roots arrive in ascending order, so the first member of
    // each class is its smallest element and becomes the class anchor.
    std::map<Rat, Rat> anchor_of;  // root -> smallest root of its class
    for (const auto& [root, eps] : product.gamma_factors()) {
        Rat anchor = root;
        for (const auto& [seen, seen_anchor] : anchor_of) {
            if (is_integer((root - seen) / n)) {
                anchor = seen_anchor;
                break;
            }
        }
        anchor_of.emplace(root, anchor);

        // Gamma((s-beta)/N) = Gamma((s-anchor)/N) / prod_{j=1}^{m} ((s - (anchor + jN))/N)
        // with m = (beta - anchor)/N; each peeled factor contributes one
        // linear term and one power of N.
        const long long steps = rat_num((root - anchor) / n).convert_to<long long>();
        reduced.multiply_gamma(anchor, eps);
        for (long long j = 1; j <= steps; ++j)
            reduced.multiply_rational(FactoredRational::from_factor(anchor + Rat(j * n), -eps));
        if (steps != 0) {
            Int n_power = boost::multiprecision::pow(Int(n), static_cast<unsigned>(steps) *
                                                                 static_cast<unsigned>(std::llabs(eps)));
            reduced.multiply_scalar(eps > 0 ? Rat(n_power) : Rat(1) / Rat(n_power));
        }
    }
    return reduced;
}

std::optional<FactoredRational> extract_rational(const GammaProduct& product) {
    const GammaProduct reduced = normalize(product);
    if (!reduced.gamma_factors().empty()) return std::nullopt;
    FactoredRational result = reduced.rational_part();
    result.multiply_scalar(reduced.scalar());
    return result;
}

bool quartic_rationality_condition(long long a, long long b, long long c, long long d,
                                   long long modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    if (a + b != c + d)
        throw std::invalid_argument("rationality criterion needs the convergent family a+b = c+d");
    const long long p = std::llabs(a - b);
    const long long q = std::llabs(c - d);
    auto divides_half = [modulus](long long sum) {
        if (sum % 2 != 0) return false;  // half-integers never divisible
        return (sum / 2) % modulus == 0;
    };
    return divides_half(p + q) || divides_half(p - q);
}

IdentityCheck sl_gl_product_identity(int r) {
    if (r < 2) throw std::invalid_argument("identity requires rank >= 2");
    IdentityCheck check;
    check.rank = r;
    // prod_{n>=1} zeta_GL(r)(s+n) is the full shifted product evaluated at
    // s+1; it collapses to a rational expression at modulus 1.
    GammaProduct full = infinite_shifted_product(counting_gl(r), 1);
    auto collapsed = extract_rational(shift(full, Rat(1)));
    if (!collapsed) throw std::logic_error("modulus-1 product did not collapse");
    check.lhs = *collapsed;
    check.rhs = zeta_of_poly(counting_sl(r));
    check.equal = check.lhs == check.rhs;
    return check;
}

}  // namespace abszeta
