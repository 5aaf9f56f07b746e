#ifndef ABSZETA_LAURENT_HPP
#define ABSZETA_LAURENT_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>

#include "abszeta/types.hpp"

namespace abszeta {

// Sparse Laurent polynomial over Z: exponent -> coefficient, zero
// coefficients never stored, all arithmetic exact.
class LaurentPoly {
  public:
    using TermMap = std::map<long long, Int>;

    LaurentPoly() = default;  // the zero polynomial
    LaurentPoly(std::initializer_list<std::pair<long long, Int>> terms);

    static LaurentPoly monomial(long long exponent, Int coefficient = Int(1));
    static LaurentPoly constant(Int value);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    Int coeff(long long exponent) const;

    // Degree bounds; only defined for nonzero polynomials.
    long long min_exponent() const;
    long long max_exponent() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly& rhs) const = default;

    /// f(1) = sum of coefficients.
    Int eval_at_one() const;
    /// f'(1) = sum of k*a(k); also the first moment of the exponent list.
    Int derivative_at_one() const;

    /// Exact evaluation at a rational point (x != 0 required when negative
    /// exponents are present).
    Rat eval_rational(const Rat& x) const;
    Complex eval_complex(Complex x) const;

    /// p(1/x): every exponent negated.
    LaurentPoly reciprocal_transform() const;

    /// x^m * p.
    LaurentPoly shifted_exponents(long long m) const;

  private:
    void insert_term(long long exponent, const Int& coefficient);

    TermMap terms_;
};

/// Symmetry descriptor: f(1/x) = sign * x^{-center} * f(x), sign in {+1,-1}.
struct Automorphy {
    int sign = +1;
    long long center = 0;

    bool operator==(const Automorphy&) const = default;
};

/// The unique automorphy of p if one exists. Only the center
/// min_exponent + max_exponent can work (leading terms must match), so a
/// single candidate is compared for both signs.
std::optional<Automorphy> detect_automorphy(const LaurentPoly& p);

/// Automorphy of the formal quotient p(x) / (1 - x^{-N}). The quotient
/// flips the sign and moves the center up by N.
std::optional<Automorphy> quotient_automorphy(const LaurentPoly& p, long long modulus);

/// N-th cyclotomic polynomial, computed by exact division of x^N - 1 by the
/// proper-divisor cyclotomics. Memoized per process.
const LaurentPoly& cyclotomic(long long n);

/// True iff p vanishes at the primitive N-th root of unity, decided exactly
/// via divisibility of x^m * p by the N-th cyclotomic polynomial.
bool vanishes_at_primitive_root(const LaurentPoly& p, long long n);

/// Exact quotient q with q * (1 - x^{-N}) = p, when it exists in
/// Z[x, x^{-1}]. Existence is equivalent to every residue-class coefficient
/// sum of p mod N vanishing; decided that way, no long division.
std::optional<LaurentPoly> divide_by_one_minus_x_neg(const LaurentPoly& p, long long modulus);

}  // namespace abszeta

#endif
