#include <doctest.h>

#include <random>

#include "abszeta/catalog.hpp"
#include "abszeta/gamma_expr.hpp"
#include "abszeta/numerics.hpp"

using namespace abszeta;

namespace {

FactoredRational factors(std::initializer_list<std::pair<long long, long long>> entries) {
    FactoredRational expr;
    for (const auto& [root, e] : entries) expr.multiply_factor(Rat(root), e);
    return expr;
}

}  // namespace

TEST_CASE("convergence verdicts") {
    CHECK(check_convergence(quartic(1, 4, 2, 3), 1).converges);
    CHECK(check_convergence(quartic(2, 9, 5, 6), 7).converges);
    CHECK(!check_convergence(quartic(1, 4, 2, 4), 3).converges);

    const auto diverging = check_convergence(counting_gm_power(1), 5);
    CHECK(!diverging.converges);
    CHECK(diverging.f1 == 0);
    CHECK(diverging.f1prime == 1);

    // constant count: f(1) = 1 already breaks the zeroth moment
    const auto constant = check_convergence(counting_sl(1), 1);
    CHECK(!constant.converges);
    CHECK(constant.f1 == 1);

    for (int r = 2; r <= 8; ++r) CHECK(check_convergence(counting_gl(r), 1).converges);
    CHECK(check_convergence(LaurentPoly{}, 3).converges);
}

TEST_CASE("infinite product carries gamma exponents +a(k)") {
    const GammaProduct product = infinite_shifted_product(counting_gl(2), 3);
    CHECK(product.modulus() == 3);
    CHECK(product.gamma_factors() ==
          GammaProduct::FactorMap{{Rat(1), 1}, {Rat(2), -1}, {Rat(3), -1}, {Rat(4), 1}});
    CHECK(product.rational_part() == FactoredRational::one());
    CHECK(product.scalar() == 1);

    // (x-1)^r gives binomial exponents with alternating signs.
    const GammaProduct tower = infinite_shifted_product(counting_gm_power(3), 2);
    CHECK(tower.gamma_factors() ==
          GammaProduct::FactorMap{{Rat(0), -1}, {Rat(1), 3}, {Rat(2), -3}, {Rat(3), 1}});

    CHECK_THROWS_AS(infinite_shifted_product(counting_gm_power(1), 1), DivergenceError);
    try {
        infinite_shifted_product(counting_gm_power(1), 1);
    } catch (const DivergenceError& e) {
        CHECK(e.f1 == 0);
        CHECK(e.f1prime == 1);
    }
}

TEST_CASE("normalize collapses the modulus-1 and modulus-2 products") {
    const auto n1 = normalize(infinite_shifted_product(counting_gl(2), 1));
    CHECK(n1.gamma_factors().empty());
    CHECK(n1.scalar() == 1);
    CHECK(n1.rational_part() == factors({{2, 1}, {4, -1}}));

    const auto n2 = normalize(infinite_shifted_product(counting_gl(2), 2));
    CHECK(n2.gamma_factors().empty());
    CHECK(n2.scalar() == 1);  // the two 1/2 powers cancel
    CHECK(n2.rational_part() == factors({{3, 1}, {4, -1}}));
}

TEST_CASE("normalize merges residue classes at modulus 3") {
    const auto n3 = normalize(infinite_shifted_product(counting_gl(2), 3));
    // roots 1 and 4 share a class; 2 and 3 stay alone
    CHECK(n3.gamma_factors() ==
          GammaProduct::FactorMap{{Rat(1), 2}, {Rat(2), -1}, {Rat(3), -1}});
    CHECK(n3.rational_part() == factors({{4, -1}}));
    CHECK(n3.scalar() == 3);

    // value must be unchanged
    const auto raw = infinite_shifted_product(counting_gl(2), 3);
    for (const Complex s : {Complex{9.0, 1.0}, Complex{6.5, -2.0}, Complex{12.0, 4.0}}) {
        const Complex before = eval_gamma_product(raw, s);
        const Complex after = eval_gamma_product(n3, s);
        CHECK(std::abs(before - after) <= 1e-12 * std::abs(before));
    }
}

TEST_CASE("rational extraction across moduli") {
    CHECK(extract_rational(infinite_shifted_product(counting_gl(2), 1)) ==
          factors({{2, 1}, {4, -1}}));
    CHECK(extract_rational(infinite_shifted_product(counting_gl(2), 2)) ==
          factors({{3, 1}, {4, -1}}));
    CHECK(!extract_rational(infinite_shifted_product(counting_gl(2), 3)).has_value());

    // (x-1)^r: rational exactly at modulus 1, where the product is the zeta
    // of x(x-1)^{r-1}.
    for (int r = 2; r <= 6; ++r) {
        const auto at_one = extract_rational(infinite_shifted_product(counting_gm_power(r), 1));
        REQUIRE(at_one.has_value());
        CHECK(*at_one == zeta_of_poly(LaurentPoly::monomial(1) * counting_gm_power(r - 1)));
        CHECK(!extract_rational(infinite_shifted_product(counting_gm_power(r), 2)).has_value());
    }
}

TEST_CASE("the two rationality routes agree and coincide") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long long> exponent(1, 10);
    std::uniform_int_distribution<long long> modulus(1, 12);
    int agreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const long long a = exponent(rng), b = exponent(rng), c = exponent(rng);
        const long long d = a + b - c;
        if (d < 1 || d > 10) continue;
        const LaurentPoly f = quartic(a, b, c, d);
        const long long n = modulus(rng);
        const auto via_gamma = extract_rational(infinite_shifted_product(f, n));
        const auto via_divide = divide_by_one_minus_x_neg(f, n);
        CHECK(via_gamma.has_value() == via_divide.has_value());
        if (via_gamma && via_divide) {
            CHECK(*via_gamma == zeta_of_poly(*via_divide));
            ++agreements;
        }
    }
    CHECK(agreements > 0);
}

TEST_CASE("half-sum divisibility criterion") {
    CHECK(quartic_rationality_condition(1, 4, 2, 3, 2));
    CHECK(!quartic_rationality_condition(1, 4, 2, 3, 3));
    CHECK(quartic_rationality_condition(0, 4, 1, 3, 1));
    CHECK_THROWS_AS(quartic_rationality_condition(1, 4, 2, 4, 2), std::invalid_argument);

    // against the exact root-of-unity test
    for (long long a = 1; a <= 8; ++a)
        for (long long b = a; b <= 8; ++b)
            for (long long c = 1; c <= 8; ++c) {
                const long long d = a + b - c;
                if (d < 1 || d > 8) continue;
                for (long long n = 1; n <= 16; ++n)
                    CHECK(quartic_rationality_condition(a, b, c, d, n) ==
                          vanishes_at_primitive_root(quartic(a, b, c, d), n));
            }
}

TEST_CASE("sl zeta equals the infinite product of shifted gl zetas") {
    const auto rank2 = sl_gl_product_identity(2);
    CHECK(rank2.equal);
    CHECK(rank2.lhs == factors({{1, 1}, {3, -1}}));

    const auto rank3 = sl_gl_product_identity(3);
    CHECK(rank3.equal);
    CHECK(rank3.lhs == factors({{6, 1}, {5, 1}, {8, -1}, {3, -1}}));

    for (int r = 4; r <= 6; ++r) CHECK(sl_gl_product_identity(r).equal);
    CHECK_THROWS_AS(sl_gl_product_identity(1), std::invalid_argument);
}

TEST_CASE("gamma product shift and the defining relation") {
    // G(s)/G(s+N) = zeta_f(s) numerically, the telescoping fixed point.
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> re(10.0, 16.0), im(-3.0, 3.0);
    const std::vector<std::pair<LaurentPoly, long long>> corpus = {
        {counting_gl(2), 1}, {counting_gl(2), 3}, {counting_gl(3), 2},
        {counting_gm_power(3), 2}, {quartic(1, 7, 3, 5), 4},
    };
    for (const auto& [f, n] : corpus) {
        const GammaProduct product = infinite_shifted_product(f, n);
        const FactoredRational zeta = zeta_of_poly(f);
        for (int i = 0; i < 10; ++i) {
            const Complex s{re(rng), im(rng)};
            const Complex lhs = eval_gamma_product(product, s) /
                                eval_gamma_product(product, s + Complex(static_cast<double>(n), 0.0));
            const Complex rhs = eval_factored(zeta, s);
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
        }
    }

    // shift moves every root: G(s+1) built two ways.
    const GammaProduct base = infinite_shifted_product(counting_gl(2), 2);
    const GammaProduct shifted = shift(base, Rat(1));
    for (int i = 0; i < 5; ++i) {
        const Complex s{re(rng), im(rng)};
        const Complex lhs = eval_gamma_product(shifted, s);
        const Complex rhs = eval_gamma_product(base, s + 1.0);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
}
