#include "splitcx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace splitcx {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1]; abscissae and
// weights evaluated with 80 decimal digit arithmetic by L. W. Fullerton,
// Bell Labs, 1981. Positive half only; the rule is symmetric. Exact for
// polynomials of degree <= 22 (Kronrod) and <= 13 (embedded Gauss).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
    double a = 0.0;
    double b = 0.0;
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
};

struct ByError {
    bool operator()(const Interval& lhs, const Interval& rhs) const { return lhs.error < rhs.error; }
};

// One rule application. The error estimate follows the classical scaled
// comparison of the Kronrod and Gauss sums: raw |K - G| is damped through
// resasc (the integral of |f - mean|) so smooth panels are not oversplit,
// and floored at 50 ulp of resabs so noise is never reported as precision.
Interval gk15(const ComplexFn& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::fabs(hlgth);

    std::complex<double> fv1[7], fv2[7];
    const std::complex<double> fc = f(center);
    std::complex<double> resg = wg[3] * fc;
    std::complex<double> resk = wgk[7] * fc;
    double resabs = wgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * xgk[j];
        fv1[j] = f(center - absc);
        fv2[j] = f(center + absc);
        const std::complex<double> fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += wg[j / 2] * fsum;  // xgk[1], xgk[3], xgk[5] are the Gauss nodes
        resk += wgk[j] * fsum;
        resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }
    const std::complex<double> reskh = 0.5 * resk;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }
    resabs *= dhlgth;
    resasc *= dhlgth;

    Interval out;
    out.a = a;
    out.b = b;
    out.value = resk * hlgth;
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double epmach = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * epmach)) {
        err = std::max(epmach * 50.0 * resabs, err);
    }
    if (!std::isfinite(err)) {
        err = std::numeric_limits<double>::infinity();
    }
    out.error = err;
    return out;
}

}  // namespace

QuadResult integrate_complex(const ComplexFn& f, double a, double b,
                             const QuadratureConfig& cfg,
                             std::span<const double> breakpoints) {
    QuadResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }
    const double sign = (a < b) ? 1.0 : -1.0;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);

    std::vector<double> knots;
    knots.push_back(lo);
    if (cfg.peak_refinement) {
        for (double p : breakpoints) {
            if (p > lo && p < hi) knots.push_back(p);
        }
    }
    knots.push_back(hi);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
    std::complex<double> total{0.0, 0.0};
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        Interval iv = gk15(f, knots[i], knots[i + 1]);
        result.evals += 15;
        total += iv.value;
        total_err += iv.error;
        heap.push(iv);
    }

    std::int64_t subdivisions = 0;
    std::vector<Interval> frozen;  // panels at rounding resolution, no longer splittable
    auto bound = [&cfg](const std::complex<double>& v) {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(v));
    };
    while (total_err > bound(total) && !heap.empty()) {
        if (result.evals + 30 > cfg.max_evals_per_arc || subdivisions >= cfg.max_subdivisions) {
            break;
        }
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            frozen.push_back(worst);
            continue;
        }
        Interval left = gk15(f, worst.a, mid);
        Interval right = gk15(f, mid, worst.b);
        result.evals += 30;
        ++subdivisions;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-accumulate from the surviving panels: the incremental running sums
    // above steer refinement, the final answer comes from one clean pass.
    std::complex<double> value{0.0, 0.0};
    double err = 0.0;
    for (const Interval& iv : frozen) {
        value += iv.value;
        err += iv.error;
    }
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    result.value = sign * value;
    result.error = err;
    result.converged = err <= bound(value) && std::isfinite(err);
    return result;
}

}  // namespace splitcx
