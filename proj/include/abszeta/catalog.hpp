#ifndef ABSZETA_CATALOG_HPP
#define ABSZETA_CATALOG_HPP

#include <string>

#include "abszeta/laurent.hpp"

namespace abszeta {

// Degree r^2 stays manageable up to here; raise explicitly if you need more.
inline constexpr int kDefaultMaxRank = 64;

/// |GL(r, F_x)| = x^{r^2} (1 - x^{-1}) ... (1 - x^{-r}), expanded.
LaurentPoly counting_gl(int r, int max_rank = kDefaultMaxRank);

/// |SL(r, F_x)| = x^{r^2 - 1} (1 - x^{-2}) ... (1 - x^{-r}), expanded.
/// r = 1 yields the constant 1.
LaurentPoly counting_sl(int r, int max_rank = kDefaultMaxRank);

/// |G_m^r(F_x)| = (x - 1)^r.
LaurentPoly counting_gm_power(int r, int max_rank = kDefaultMaxRank);

/// x^a + x^b - x^c - x^d; coincident exponents merge (and may cancel).
LaurentPoly quartic(long long a, long long b, long long c, long long d);

/// A counting function together with the name it parses from / prints as.
struct NamedCount {
    enum class Kind { GL, SL, GmPower, Quartic, Raw };

    Kind kind = Kind::Raw;
    int rank = 0;                          // GL/SL/GmPower
    long long a = 0, b = 0, c = 0, d = 0;  // Quartic
    std::string name;
    LaurentPoly poly;
};

/// Parses "gl:r", "sl:r", "gm^r", "quartic:a,b,c,d", or a raw polynomial in
/// the term grammar ("x^4 - x^3 - x^2 + x").
NamedCount parse_count_spec(const std::string& spec);

}  // namespace abszeta

#endif
