#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "ellcond/errors.hpp"

namespace ellcond {

/// Brent's method on a bracketing interval [a, b] with f(a)*f(b) <= 0.
/// Returns the root to absolute tolerance xtol on the abscissa.
/// Throws Error(NoConvergence) when the iteration budget runs out and
/// Error(BadArgument) when the bracket does not straddle a sign change.
template <class F>
double brent_root(F&& f, double a, double b, double fa, double fb,
                  double xtol = 1e-12, int max_iter = 200) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw Error(ErrorCode::BadArgument, "brent_root: endpoints do not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double q2 = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * q2 * (q2 - r) - (b - a) * (r - 1.0));
                q = (q2 - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw Error(ErrorCode::NoConvergence, "brent_root: iteration budget exhausted");
}

template <class F>
double brent_root(F&& f, double a, double b, double xtol = 1e-12, int max_iter = 200) {
    return brent_root(f, a, b, f(a), f(b), xtol, max_iter);
}

/// Plain bisection on a sign-changing bracket; tolerance is absolute in x.
template <class F>
double bisect_root(F&& f, double a, double b, double fa, double fb,
                   double xtol = 1e-10, int max_iter = 200) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw Error(ErrorCode::BadArgument, "bisect_root: endpoints do not bracket a root");
    for (int iter = 0; iter < max_iter; ++iter) {
        const double mid = 0.5 * (a + b);
        if (b - a <= xtol || mid <= a || mid >= b) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    throw Error(ErrorCode::NoConvergence, "bisect_root: iteration budget exhausted");
}

} // namespace ellcond
