#include <doctest.h>

#include <complex>
#include <random>

#include "abszeta/catalog.hpp"
#include "abszeta/io.hpp"
#include "abszeta/numerics.hpp"
#include "abszeta/zeta_expr.hpp"

using namespace abszeta;

namespace {

FactoredRational factors(std::initializer_list<std::pair<long long, long long>> entries) {
    FactoredRational expr;
    for (const auto& [root, e] : entries) expr.multiply_factor(Rat(root), e);
    return expr;
}

LaurentPoly random_poly(std::mt19937& rng, int max_terms = 5, int exp_range = 5, int coeff_range = 5) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<long long> exponent(-exp_range, exp_range);
    std::uniform_int_distribution<int> coefficient(-coeff_range, coeff_range);
    LaurentPoly p;
    const int terms = term_count(rng);
    for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(exponent(rng), coefficient(rng));
    return p;
}

}  // namespace

TEST_CASE("zeta of the small counting functions") {
    CHECK(zeta_of_poly(counting_sl(2)) == factors({{1, 1}, {3, -1}}));
    CHECK(zeta_of_poly(counting_sl(1)) == factors({{0, -1}}));
    CHECK(zeta_of_poly(counting_gl(1)) == factors({{0, 1}, {1, -1}}));
    CHECK(zeta_of_poly(LaurentPoly{}) == FactoredRational::one());
}

TEST_CASE("zeta is a homomorphism from + to *") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly f = random_poly(rng);
        const LaurentPoly g = random_poly(rng);
        CHECK(zeta_of_poly(f + g) == multiply(zeta_of_poly(f), zeta_of_poly(g)));
    }
}

TEST_CASE("shift moves the roots") {
    const FactoredRational sl2 = factors({{1, 1}, {3, -1}});
    CHECK(shift(sl2, Rat(1)) == factors({{0, 1}, {2, -1}}));
    CHECK(shift(sl2, Rat(0)) == sl2);
    CHECK(shift(shift(sl2, Rat(5, 2)), Rat(-5, 2)) == sl2);
}

TEST_CASE("multiply cancels inverse pairs") {
    const FactoredRational sl2 = factors({{1, 1}, {3, -1}});
    CHECK(multiply(sl2, inverse(sl2)) == FactoredRational::one());
    CHECK(multiply(sl2, FactoredRational::one()) == sl2);
    // zeta_GL(2) * zeta_SL(2) telescopes to the full product value.
    CHECK(multiply(zeta_of_poly(counting_gl(2)), zeta_of_poly(counting_sl(2))) ==
          factors({{2, 1}, {4, -1}}));
}

TEST_CASE("finite shifted products") {
    const FactoredRational z = zeta_of_poly(counting_gl(2));
    CHECK(finite_shifted_product(z, 1, 0) == z);
    CHECK(finite_shifted_product(z, 3, 0) == z);

    // spot checks of the closed forms (the full K <= 200 sweep is in the
    // acceptance gate)
    CHECK(finite_shifted_product(z, 1, 7) == factors({{2, 1}, {-4, 1}, {4, -1}, {-6, -1}}));
    CHECK(finite_shifted_product(z, 2, 5) == factors({{3, 1}, {-8, 1}, {4, -1}, {-9, -1}}));

    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const FactoredRational expr = zeta_of_poly(random_poly(rng));
        std::uniform_int_distribution<long long> modulus(1, 4);
        std::uniform_int_distribution<long long> upper(1, 12);
        const long long n = modulus(rng);
        const long long k = upper(rng);
        CHECK(finite_shifted_product(expr, n, k) ==
              multiply(finite_shifted_product(expr, n, k - 1), shift(expr, Rat(k * n))));
    }
}

TEST_CASE("telescoping kernel identity") {
    const LaurentPoly x_minus_one{{1, 1}, {0, -1}};
    std::mt19937 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        const LaurentPoly f = random_poly(rng);
        const FactoredRational zf = zeta_of_poly(f);
        CHECK(multiply(zf, inverse(shift(zf, Rat(1)))) ==
              shift(zeta_of_poly(x_minus_one * f), Rat(1)));
    }
}

TEST_CASE("functional equation detection") {
    const auto gl2 = detect_functional_equation(zeta_of_poly(counting_gl(2)));
    REQUIRE(gl2.equations.size() == 1);
    CHECK(gl2.equations[0] == FunctionalEquation{Rat(5), +1});
    CHECK(!gl2.every_center);

    const auto inverse_pair = detect_functional_equation(factors({{2, 1}, {4, -1}}));
    REQUIRE(inverse_pair.equations.size() == 1);
    CHECK(inverse_pair.equations[0] == FunctionalEquation{Rat(6), -1});

    const auto trivial = detect_functional_equation(FactoredRational::one());
    CHECK(trivial.every_center);
    CHECK(trivial.equations.empty());
    CHECK(trivial.contains(Rat(17), +1));

    // A lone linear factor admits no functional equation: the sign of
    // (D-s-1) can match neither (s-1) nor its inverse.
    CHECK(detect_functional_equation(factors({{1, 1}})).equations.empty());

    // (s-1)(s-3) is symmetric about 2 with even exponent sum.
    const auto even_pair = detect_functional_equation(factors({{1, 1}, {3, 1}}));
    REQUIRE(even_pair.equations.size() == 1);
    CHECK(even_pair.equations[0] == FunctionalEquation{Rat(4), +1});

    // Scaled expressions keep +1 equations but lose -1 equations.
    FactoredRational scaled = factors({{2, 1}, {4, -1}});
    scaled.multiply_scalar(Rat(3, 2));
    CHECK(detect_functional_equation(scaled).equations.empty());
    FactoredRational scaled_sym = zeta_of_poly(counting_gl(2));
    scaled_sym.multiply_scalar(Rat(3, 2));
    CHECK(detect_functional_equation(scaled_sym).contains(Rat(5), +1));
}

TEST_CASE("functional equations of the shifted gl:2 products") {
    const FactoredRational z = zeta_of_poly(counting_gl(2));
    for (long long n = 1; n <= 3; ++n)
        for (long long k = 0; k <= 8; ++k)
            CHECK(detect_functional_equation(finite_shifted_product(z, n, k))
                      .contains(Rat(5 - k * n), +1));
}

TEST_CASE("numeric agreement between factored and termwise evaluation") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> re(8.0, 20.0), im(-5.0, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentPoly f = random_poly(rng);
        const FactoredRational zeta = zeta_of_poly(f);
        const Complex s{re(rng), im(rng)};
        Complex direct = 1.0;
        for (const auto& [k, a] : f.terms())
            direct *= pow_int(s - Complex(static_cast<double>(k), 0.0),
                              -a.convert_to<long long>());
        const Complex factored = eval_factored(zeta, s);
        CHECK(std::abs(factored - direct) <= 1e-12 * std::abs(direct));
    }
}

TEST_CASE("canonical form invariants") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const FactoredRational expr =
            multiply(zeta_of_poly(random_poly(rng)), zeta_of_poly(random_poly(rng)));
        for (const auto& [root, e] : expr.factors()) CHECK(e != 0);
        CHECK(expr.scalar() > 0);
    }
    CHECK_THROWS_AS(FactoredRational::one().multiply_scalar(Rat(-1)), std::invalid_argument);
}
