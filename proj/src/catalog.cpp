#include "abszeta/catalog.hpp"

#include <stdexcept>

#include "abszeta/io.hpp"

namespace abszeta {

namespace {

void check_rank(int r, int max_rank) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (r > max_rank) throw std::invalid_argument("rank exceeds cap of " + std::to_string(max_rank));
}

// x^{lead} * prod_{i=first}^{r} (1 - x^{-i})
LaurentPoly expanded_group_count(long long lead, int first, int r) {
    LaurentPoly product = LaurentPoly::monomial(lead);
    for (int i = first; i <= r; ++i)
        product *= LaurentPoly{{0, 1}, {-i, -1}};
    return product;
}

}  // namespace

LaurentPoly counting_gl(int r, int max_rank) {
    check_rank(r, max_rank);
    return expanded_group_count(static_cast<long long>(r) * r, 1, r);
}

LaurentPoly counting_sl(int r, int max_rank) {
    check_rank(r, max_rank);
    return expanded_group_count(static_cast<long long>(r) * r - 1, 2, r);
}

LaurentPoly counting_gm_power(int r, int max_rank) {
    check_rank(r, max_rank);
    LaurentPoly power = LaurentPoly::constant(1);
    const LaurentPoly x_minus_one{{1, 1}, {0, -1}};
    for (int i = 0; i < r; ++i) power *= x_minus_one;
    return power;
}

LaurentPoly quartic(long long a, long long b, long long c, long long d) {
    LaurentPoly p;
    p += LaurentPoly::monomial(a);
    p += LaurentPoly::monomial(b);
    p -= LaurentPoly::monomial(c);
    p -= LaurentPoly::monomial(d);
    return p;
}

NamedCount parse_count_spec(const std::string& spec) {
    NamedCount count;
    count.name = spec;
    auto parse_int = [&](const std::string& text) -> long long {
        try {
            std::size_t used = 0;
            long long value = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return value;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer in count spec: '" + text + "'");
        }
    };
    if (spec.rfind("gl:", 0) == 0) {
        count.kind = NamedCount::Kind::GL;
        count.rank = static_cast<int>(parse_int(spec.substr(3)));
        count.poly = counting_gl(count.rank);
    } else if (spec.rfind("sl:", 0) == 0) {
        count.kind = NamedCount::Kind::SL;
        count.rank = static_cast<int>(parse_int(spec.substr(3)));
        count.poly = counting_sl(count.rank);
    } else if (spec.rfind("gm^", 0) == 0) {
        count.kind = NamedCount::Kind::GmPower;
        count.rank = static_cast<int>(parse_int(spec.substr(3)));
        count.poly = counting_gm_power(count.rank);
    } else if (spec.rfind("quartic:", 0) == 0) {
        count.kind = NamedCount::Kind::Quartic;
        std::string rest = spec.substr(8);
        long long values[4];
        for (int i = 0; i < 4; ++i) {
            const auto comma = rest.find(',');
            if ((comma == std::string::npos) != (i == 3))
                throw std::invalid_argument("quartic spec needs four comma-separated exponents");
            values[i] = parse_int(rest.substr(0, comma));
            rest = comma == std::string::npos ? std::string{} : rest.substr(comma + 1);
        }
        count.a = values[0];
        count.b = values[1];
        count.c = values[2];
        count.d = values[3];
        count.poly = quartic(count.a, count.b, count.c, count.d);
    } else {
        count.kind = NamedCount::Kind::Raw;
        count.poly = parse_laurent(spec);
    }
    return count;
}

}  // namespace abszeta
