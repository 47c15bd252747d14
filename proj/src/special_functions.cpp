#include "ellcond/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ellcond/errors.hpp"
#include "ellcond/roots.hpp"

namespace ellcond {
namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// Acklam's rational approximation to the normal quantile (|err| < 1.15e-9),
// used as the seed for a Halley refinement step.
double normal_quantile_seed(double p) {
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;

    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw Error(ErrorCode::NoConvergence, "incomplete_beta continued fraction stalled");
}

} // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw Error(ErrorCode::ProbabilityOutOfRange, "normal_quantile requires 0 < p < 1");
    double x = normal_quantile_seed(p);
    // Halley refinement; one step reaches full double precision from the seed.
    for (int i = 0; i < 2; ++i) {
        const double e = normal_cdf(x) - p;
        const double u = e / normal_pdf(x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw Error(ErrorCode::BadArgument, "incomplete_beta requires a, b > 0");
    if (!(x >= 0.0 && x <= 1.0))
        throw Error(ErrorCode::BadArgument, "incomplete_beta requires x in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double lbeta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    const double front = std::exp(lbeta + a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double nu) {
    if (!(nu > 0.0))
        throw Error(ErrorCode::BadDegreesOfFreedom, "student_t_cdf requires nu > 0");
    if (t == 0.0) return 0.5;
    const double x = nu / (nu + t * t);
    const double half_tail = 0.5 * incomplete_beta(0.5 * nu, 0.5, x);
    return t > 0.0 ? 1.0 - half_tail : half_tail;
}

double student_t_pdf(double t, double nu) {
    if (!(nu > 0.0))
        throw Error(ErrorCode::BadDegreesOfFreedom, "student_t_pdf requires nu > 0");
    const double lognorm = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                           0.5 * std::log(nu * std::numbers::pi);
    return std::exp(lognorm - 0.5 * (nu + 1.0) * std::log1p(t * t / nu));
}

double student_t_quantile(double p, double nu) {
    if (!(p > 0.0 && p < 1.0))
        throw Error(ErrorCode::ProbabilityOutOfRange, "student_t_quantile requires 0 < p < 1");
    if (!(nu > 0.0))
        throw Error(ErrorCode::BadDegreesOfFreedom, "student_t_quantile requires nu > 0");
    if (p == 0.5) return 0.0;
    // symmetry: solve on the upper half only
    if (p < 0.5) return -student_t_quantile(1.0 - p, nu);

    double hi = 1.0;
    while (student_t_cdf(hi, nu) < p) {
        hi *= 2.0;
        if (hi > 1e300)
            throw Error(ErrorCode::NoConvergence, "student_t_quantile bracket expansion failed");
    }
    auto objective = [p, nu](double t) { return student_t_cdf(t, nu) - p; };
    double root = brent_root(objective, 0.0, hi, 0.5 - p, student_t_cdf(hi, nu) - p, 1e-14, 300);
    // Newton polish in probability space to clean up the last bits
    for (int i = 0; i < 2; ++i) {
        const double err = student_t_cdf(root, nu) - p;
        const double dens = student_t_pdf(root, nu);
        if (dens > 0.0) root -= err / dens;
    }
    return root;
}

} // namespace ellcond
