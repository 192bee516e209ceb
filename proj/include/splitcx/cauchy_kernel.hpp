#pragma once

#include <optional>

#include "splitcx/splitnum.hpp"
#include "splitcx/wavefield.hpp"

// Reproducing kernels for the hyperbolic Cauchy integral. The geometric
// kernel is K(Z) = Z^{-1}, singular on the whole light cone N(Z) = 0, not
// just at a point. The regularized family pushes each null factor off its
// zero line into the complex plane:
//
//   K_eps(Z)      = ( 1/(u + i eps sgn v),        1/(v + i eps sgn u) )
//   K_shifted(Z)  = ( 1/((u-u0) + i eps sgn v),   1/((v-v0) + i eps sgn u) )
//
// written in idempotent components (u = x+y, v = x-y). Each component's
// imaginary shift is keyed to the sign of the *other* null coordinate;
// the two hyperbola branches crossing u = u0 sit at opposite signs of v,
// so their Lorentzian peaks combine into one full Poisson kernel in the
// eps -> 0 limit instead of cancelling. Components are uniformly bounded
// by 1/eps. Values live in the complex idempotent basis (BiComplex); the
// {1, j} real form of the unregularized kernel is kernel() below.

namespace splitcx {

struct KernelParams {
    SplitComplex z0{0.0, 0.0};
    double epsilon = 1e-2;
    std::optional<WindowProfile> window;

    // epsilon clamped to [1e-8, 1]: below 1e-8 the Lorentzian peak is too
    // narrow for double-precision quadrature at default tolerances
    static constexpr double min_epsilon = 1e-8;
    static constexpr double max_epsilon = 1.0;

    KernelParams(SplitComplex center, double eps,
                 std::optional<WindowProfile> win = std::nullopt);
};

// sign with hard zero rejection: the regularized kernels are undefined on
// the axes u = 0, v = 0 where the sign coupling has no value
double strict_sgn(double t);

// K(Z) = Z^{-1}, idempotent components (1/u, 1/v); throws std::domain_error
// on (a neighborhood of) the light cone
SplitComplex kernel(SplitComplex z);

// unshifted regularized kernel
BiComplex kernel_eps(SplitComplex z, double epsilon);

// kernel centered at params.z0
BiComplex kernel_shifted(SplitComplex z, const KernelParams& params);

// shifted kernel with the window rolled in:
//   plus  component *= phi(u - u0)
//   minus component *= phi(v - v0)
// requires params.window
BiComplex kernel_windowed(SplitComplex z, const KernelParams& params);

// idempotent summands of kernel_shifted: kernel_plus keeps the plus
// component (minus = 0), kernel_minus the other; their sum is kernel_shifted
BiComplex kernel_plus(SplitComplex z, const KernelParams& params);
BiComplex kernel_minus(SplitComplex z, const KernelParams& params);

}  // namespace splitcx
