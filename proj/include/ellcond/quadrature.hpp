#pragma once

#include <functional>

namespace ellcond {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // accumulated absolute error bound
    int intervals = 0;    // subintervals used by the adaptive refinement
};

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_intervals = 4000;
};

using Integrand = std::function<double(double)>;

/// Adaptive 15-point Gauss-Kronrod integration over a finite interval [a, b].
/// Throws Error(DivergentIntegral) if the interval budget is exhausted or the
/// integrand produces non-finite values.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Integral of f over [a, +inf). The tail beyond max(a, 1) is folded onto
/// (0, 1] by the algebraic substitution w = c/t, which handles both
/// exponential and power-law decay.
QuadratureResult integrate_upper(const Integrand& f, double a,
                                 const QuadratureOptions& opts = {});

/// Integral of f over (-inf, b].
QuadratureResult integrate_lower(const Integrand& f, double b,
                                 const QuadratureOptions& opts = {});

/// Integral of f over the whole real line.
QuadratureResult integrate_line(const Integrand& f,
                                const QuadratureOptions& opts = {});

} // namespace ellcond
