#ifndef ABSZETA_NUMERICS_HPP
#define ABSZETA_NUMERICS_HPP

#include <functional>
#include <vector>

#include "abszeta/gamma_expr.hpp"
#include "abszeta/laurent.hpp"
#include "abszeta/report.hpp"
#include "abszeta/zeta_expr.hpp"

namespace abszeta {

/// Complex gamma via the Lanczos approximation (g = 7, 9 terms), with the
/// reflection formula for Re(z) < 0.5. Throws PoleError within 1e-12 of a
/// nonpositive integer.
Complex gamma_complex(Complex z);

/// Integer power by squaring; negative exponents invert.
Complex pow_int(Complex base, long long exponent);

Complex eval_factored(const FactoredRational& expr, Complex s);
Complex eval_gamma_product(const GammaProduct& product, Complex s);

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    bool converged = false;
    int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) over a real interval with a
/// complex-valued integrand; worst panels are bisected until the global
/// error estimate meets max(abs_tol, rel_tol * |value|).
QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_subdivisions = 2000);

/// Direct partial products Z_N^K(s) over a K grid. Convergent inputs are
/// compared against the gamma-product closed form (error falls like 1/K);
/// divergent inputs get a log-log growth-rate fit against f'(1)/N.
VerificationReport partial_product_sweep(const LaurentPoly& f, long long modulus, Complex s,
                                         const std::vector<long long>& k_grid, double tol = 1e-3);

/// exp(int_1^inf f(x) x^{-s-1} / log x dx) against the factored zeta value.
/// Requires f(1) = 0 and Re(s) above the top exponent of f.
VerificationReport mellin_log_check(const LaurentPoly& f, Complex s, double tol = 1e-8);

/// Termwise two-variable zeta: Z_f(w, s) = sum_k a(k) (s - k)^{-w}.
Complex two_variable_zeta(const LaurentPoly& f, Complex w, Complex s);

/// exp(dZ/dw at w=0) against the factored zeta value, with a central
/// difference of step h.
VerificationReport zeta_from_w_derivative(const LaurentPoly& f, Complex s, double h = 1e-5,
                                          double tol = 1e-6);

}  // namespace abszeta

#endif
