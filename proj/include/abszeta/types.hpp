#ifndef ABSZETA_TYPES_HPP
#define ABSZETA_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace abszeta {

// Exact coefficient / root arithmetic. Binomial coefficients of (x-1)^r
// overflow 64 bits near r ~ 60, so everything symbolic runs on bignums.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Complex = std::complex<double>;

inline double to_double(const Rat& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

/// Thrown when an infinite shifted product is requested for a counting
/// function whose moments f(1), f'(1) do not both vanish.
class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(Int f_at_one, Int fprime_at_one)
        : std::runtime_error("infinite product diverges: f(1)=" + f_at_one.str() +
                             ", f'(1)=" + fprime_at_one.str()),
          f1(std::move(f_at_one)), f1prime(std::move(fprime_at_one)) {}

    Int f1;
    Int f1prime;
};

/// Thrown by numeric evaluation when the point sits on a pole (or a root
/// raised to a negative exponent) of the expression being evaluated.
class PoleError : public std::runtime_error {
  public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace abszeta

#endif
