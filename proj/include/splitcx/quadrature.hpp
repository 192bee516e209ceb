#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>

namespace splitcx {

// Tolerances and budgets for adaptive quadrature. A pass stops refining once
//   total_error <= max(abs_tol, rel_tol * |integral|)
// or the budget runs out, in which case the result is flagged non-converged
// instead of being silently accepted.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    std::int64_t max_subdivisions = std::int64_t{1} << 60;  // effectively unbounded; evals cap binds first
    long max_evals_per_arc = 1'000'000;
    // Honor caller-supplied interior breakpoints (kernel peak locations at
    // scale eps, window edges). A fresh adaptive pass that has not bracketed
    // a narrow peak can misjudge its error estimate, so peak seeding is on by
    // default and only disabled for diagnostics.
    bool peak_refinement = true;
};

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;  // estimated absolute error of |value|
    long evals = 0;
    bool converged = false;
};

using ComplexFn = std::function<std::complex<double>(double)>;

// Adaptive 15-point Gauss-Kronrod integration of f over the directed interval
// from a to b (a > b integrates backwards and negates). Interior breakpoints
// seed the initial subdivision; points outside the open interval are ignored.
QuadResult integrate_complex(const ComplexFn& f, double a, double b,
                             const QuadratureConfig& cfg,
                             std::span<const double> breakpoints = {});

}  // namespace splitcx
