#include "ellcond/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "ellcond/errors.hpp"

namespace ellcond {
namespace {

// 15-point Kronrod abscissae on (0,1]; even indices are the embedded
// 7-point Gauss nodes.  Values from QUADPACK dqk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);

    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double absc = half * kXgk[j];
        fv1[j] = f(center - absc);
        fv2[j] = f(center + absc);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    }

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    const double value = resk * half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);

    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);

    if (!std::isfinite(value))
        throw Error(ErrorCode::DivergentIntegral,
                    "integrand produced a non-finite value");
    return {a, b, value, err};
}

} // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opts) {
    if (a == b) return {0.0, 0.0, 0};
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::priority_queue<Panel> queue;
    queue.push(evaluate_panel(f, a, b));
    double total = queue.top().value;
    double total_err = queue.top().error;
    int count = 1;

    while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::fabs(total))) {
        if (count >= opts.max_intervals)
            throw Error(ErrorCode::DivergentIntegral,
                        "adaptive quadrature did not converge within the interval budget");
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // interval no longer splittable in double precision; accept it
            total_err -= worst.error;
            worst.error = 0.0;
            queue.push(worst);
            if (queue.top().error == 0.0) break;
            continue;
        }
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++count;
    }

    return {sign * total, total_err, count};
}

QuadratureResult integrate_upper(const Integrand& f, double a,
                                 const QuadratureOptions& opts) {
    const double cut = std::max(a, 1.0);
    QuadratureResult head{0.0, 0.0, 0};
    if (a < cut) head = integrate(f, a, cut, opts);

    // w = cut/t maps t in (0,1] onto [cut, inf)
    auto tail_integrand = [&f, cut](double t) {
        const double w = cut / t;
        return f(w) * cut / (t * t);
    };
    QuadratureResult tail = integrate(tail_integrand, 0.0, 1.0, opts);

    return {head.value + tail.value, head.error + tail.error,
            head.intervals + tail.intervals};
}

QuadratureResult integrate_lower(const Integrand& f, double b,
                                 const QuadratureOptions& opts) {
    auto mirrored = [&f](double w) { return f(-w); };
    return integrate_upper(mirrored, -b, opts);
}

QuadratureResult integrate_line(const Integrand& f,
                                const QuadratureOptions& opts) {
    QuadratureResult lower = integrate_lower(f, 0.0, opts);
    QuadratureResult upper = integrate_upper(f, 0.0, opts);
    return {lower.value + upper.value, lower.error + upper.error,
            lower.intervals + upper.intervals};
}

} // namespace ellcond
