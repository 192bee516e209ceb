#include "splitcx/cauchy_kernel.hpp"

#include <stdexcept>

namespace splitcx {

KernelParams::KernelParams(SplitComplex center, double eps, std::optional<WindowProfile> win)
    : z0(center), epsilon(eps), window(std::move(win)) {
    if (!(epsilon >= min_epsilon && epsilon <= max_epsilon))
        throw std::invalid_argument("KernelParams: epsilon must lie in [1e-8, 1]");
    if (window && window->phi(0.0) != 1.0)
        throw std::invalid_argument("KernelParams: window must satisfy phi(0) = 1");
}

double strict_sgn(double t) {
    if (t > 0.0) return 1.0;
    if (t < 0.0) return -1.0;
    throw std::domain_error("strict_sgn: sign argument is zero (point on a null axis)");
}

SplitComplex kernel(SplitComplex z) { return inverse(z); }

BiComplex kernel_eps(SplitComplex z, double epsilon) {
    NullCoords n = to_null(z);
    std::complex<double> plus = 1.0 / std::complex<double>(n.u, epsilon * strict_sgn(n.v));
    std::complex<double> minus = 1.0 / std::complex<double>(n.v, epsilon * strict_sgn(n.u));
    return {plus, minus};
}

BiComplex kernel_shifted(SplitComplex z, const KernelParams& params) {
    NullCoords n = to_null(z);
    NullCoords n0 = to_null(params.z0);
    double eps = params.epsilon;
    std::complex<double> plus = 1.0 / std::complex<double>(n.u - n0.u, eps * strict_sgn(n.v));
    std::complex<double> minus = 1.0 / std::complex<double>(n.v - n0.v, eps * strict_sgn(n.u));
    return {plus, minus};
}

BiComplex kernel_windowed(SplitComplex z, const KernelParams& params) {
    if (!params.window)
        throw std::invalid_argument("kernel_windowed: params carry no window profile");
    BiComplex k = kernel_shifted(z, params);
    NullCoords n = to_null(z);
    NullCoords n0 = to_null(params.z0);
    k.plus *= params.window->phi(n.u - n0.u);
    k.minus *= params.window->phi(n.v - n0.v);
    return k;
}

BiComplex kernel_plus(SplitComplex z, const KernelParams& params) {
    BiComplex k = kernel_shifted(z, params);
    return {k.plus, 0.0};
}

BiComplex kernel_minus(SplitComplex z, const KernelParams& params) {
    BiComplex k = kernel_shifted(z, params);
    return {0.0, k.minus};
}

}  // namespace splitcx
