#include "abszeta/laurent.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace abszeta {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<long long, Int>> terms) {
    for (const auto& [k, a] : terms) insert_term(k, a);
}

LaurentPoly LaurentPoly::monomial(long long exponent, Int coefficient) {
    LaurentPoly p;
    p.insert_term(exponent, coefficient);
    return p;
}

LaurentPoly LaurentPoly::constant(Int value) { return monomial(0, std::move(value)); }

Int LaurentPoly::coeff(long long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

long long LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no degree bounds");
    return terms_.begin()->first;
}

long long LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no degree bounds");
    return terms_.rbegin()->first;
}

void LaurentPoly::insert_term(long long exponent, const Int& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [k, a] : rhs.terms_) insert_term(k, a);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [k, a] : rhs.terms_) insert_term(k, -a);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly product;
    for (const auto& [k, a] : lhs.terms_)
        for (const auto& [j, b] : rhs.terms_) product.insert_term(k + j, a * b);
    return product;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly negated;
    for (const auto& [k, a] : terms_) negated.terms_.emplace(k, -a);
    return negated;
}

Int LaurentPoly::eval_at_one() const {
    Int sum = 0;
    for (const auto& [k, a] : terms_) sum += a;
    return sum;
}

Int LaurentPoly::derivative_at_one() const {
    Int sum = 0;
    for (const auto& [k, a] : terms_) sum += Int(k) * a;
    return sum;
}

Rat LaurentPoly::eval_rational(const Rat& x) const {
    if (!terms_.empty() && min_exponent() < 0 && x == 0)
        throw std::invalid_argument("evaluation at 0 with negative exponents");
    Rat sum = 0;
    for (const auto& [k, a] : terms_) {
        Rat power = 1;
        long long e = k < 0 ? -k : k;
        Rat base = k < 0 ? Rat(1) / x : x;
        for (long long i = 0; i < e; ++i) power *= base;
        sum += Rat(a) * power;
    }
    return sum;
}

Complex LaurentPoly::eval_complex(Complex x) const {
    Complex sum = 0.0;
    for (const auto& [k, a] : terms_)
        sum += to_double(a) * std::pow(x, static_cast<double>(k));
    return sum;
}

LaurentPoly LaurentPoly::reciprocal_transform() const {
    LaurentPoly flipped;
    for (const auto& [k, a] : terms_) flipped.terms_.emplace(-k, a);
    return flipped;
}

LaurentPoly LaurentPoly::shifted_exponents(long long m) const {
    LaurentPoly shifted;
    for (const auto& [k, a] : terms_) shifted.terms_.emplace(k + m, a);
    return shifted;
}

std::optional<Automorphy> detect_automorphy(const LaurentPoly& p) {
    if (p.is_zero()) return std::nullopt;
    // Matching leading terms forces center = min + max; try both signs.
    const long long center = p.min_exponent() + p.max_exponent();
    const LaurentPoly flipped = p.reciprocal_transform();
    for (int sign : {+1, -1}) {
        LaurentPoly candidate = p.shifted_exponents(-center);
        if (sign < 0) candidate = -candidate;
        if (candidate == flipped) return Automorphy{sign, center};
    }
    return std::nullopt;
}

std::optional<Automorphy> quotient_automorphy(const LaurentPoly& p, long long modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    auto base = detect_automorphy(p);
    if (!base) return std::nullopt;
    return Automorphy{-base->sign, base->center + modulus};
}

namespace {

// Dense ordinary-polynomial coefficients, index = exponent.
using Dense = std::vector<Int>;

Dense to_dense(const LaurentPoly& p, long long shift) {
    Dense c(static_cast<std::size_t>(p.max_exponent() + shift) + 1, Int(0));
    for (const auto& [k, a] : p.terms()) c[static_cast<std::size_t>(k + shift)] = a;
    return c;
}

// Exact quotient by a monic divisor; remainder must vanish.
Dense divide_exact_monic(Dense numerator, const Dense& divisor) {
    const std::size_t dd = divisor.size() - 1;
    if (numerator.size() <= dd) throw std::logic_error("cyclotomic division underflow");
    Dense quotient(numerator.size() - dd, Int(0));
    for (std::size_t i = numerator.size(); i-- > dd;) {
        Int q = numerator[i];
        if (q == 0) continue;
        quotient[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) numerator[i - dd + j] -= q * divisor[j];
    }
    for (const Int& c : numerator)
        if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
    return quotient;
}

LaurentPoly from_dense(const Dense& c) {
    LaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) p += LaurentPoly::monomial(static_cast<long long>(i), c[i]);
    return p;
}

LaurentPoly compute_cyclotomic(long long n) {
    // x^n - 1 divided by the cyclotomics of all proper divisors.
    Dense numerator(static_cast<std::size_t>(n) + 1, Int(0));
    numerator[0] = -1;
    numerator[static_cast<std::size_t>(n)] = 1;
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        numerator = divide_exact_monic(std::move(numerator), to_dense(cyclotomic(d), 0));
    }
    return from_dense(numerator);
}

}  // namespace

const LaurentPoly& cyclotomic(long long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
    // Recursive mutex: compute_cyclotomic re-enters for proper divisors.
    static std::recursive_mutex cache_mutex;
    static std::unordered_map<long long, LaurentPoly> cache;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        LaurentPoly value = n == 1 ? LaurentPoly{{1, 1}, {0, -1}} : compute_cyclotomic(n);
        it = cache.emplace(n, std::move(value)).first;
    }
    return it->second;
}

bool vanishes_at_primitive_root(const LaurentPoly& p, long long n) {
    if (n < 1) throw std::invalid_argument("root index must be positive");
    if (p.is_zero()) return true;
    // x^m * p is an ordinary polynomial and x^m is a unit at roots of unity.
    const long long shift = p.min_exponent() < 0 ? -p.min_exponent() : 0;
    Dense remainder = to_dense(p, shift);
    const Dense phi = to_dense(cyclotomic(n), 0);
    const std::size_t dd = phi.size() - 1;
    for (std::size_t i = remainder.size(); i-- > dd;) {
        Int q = remainder[i];
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) remainder[i - dd + j] -= q * phi[j];
    }
    for (std::size_t i = 0; i < dd && i < remainder.size(); ++i)
        if (remainder[i] != 0) return false;
    return true;
}

std::optional<LaurentPoly> divide_by_one_minus_x_neg(const LaurentPoly& p, long long modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    if (p.is_zero()) return LaurentPoly{};
    const long long lo = p.min_exponent();
    const long long hi = p.max_exponent();
    // q(k) = sum_{j>=0} a(k + jN); a Laurent quotient exists iff every
    // residue-class sum (the value q would take below lo) vanishes.
    std::vector<Int> running(static_cast<std::size_t>(modulus), Int(0));
    LaurentPoly quotient;
    for (long long k = hi; k >= lo; --k) {
        const auto r = static_cast<std::size_t>(((k % modulus) + modulus) % modulus);
        running[r] += p.coeff(k);
        if (running[r] != 0) quotient += LaurentPoly::monomial(k, running[r]);
    }
    for (const Int& sum : running)
        if (sum != 0) return std::nullopt;
    return quotient;
}

}  // namespace abszeta
