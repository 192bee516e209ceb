#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "splitcx/cauchy_kernel.hpp"

using namespace splitcx;

namespace {
double cabs(std::complex<double> w) { return std::abs(w); }
}  // namespace

TEST_CASE("geometric kernel is the multiplicative inverse") {
    SplitComplex k = kernel({2.0, 1.0});
    CHECK(k.x == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(k.y == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    NullCoords n = to_null(k);
    CHECK(n.u == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(n.v == doctest::Approx(1.0).epsilon(1e-15));

    SplitComplex one = kernel({1.0, 0.0});
    CHECK(one.x == 1.0);
    CHECK(one.y == 0.0);

    // singular on the whole cone, not only at the origin
    CHECK_THROWS_AS(kernel({1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(kernel({2.0, -2.0}), std::domain_error);
}

TEST_CASE("regularized kernel at a fixed point") {
    BiComplex k = kernel_eps({2.0, 1.0}, 0.1);  // u = 3, v = 1, both sgn +1
    CHECK(k.plus.real() == doctest::Approx(0.33296337402885684).epsilon(1e-15));
    CHECK(k.plus.imag() == doctest::Approx(-0.011098779134295227).epsilon(1e-15));
    CHECK(k.minus.real() == doctest::Approx(0.99009900990099009).epsilon(1e-15));
    CHECK(k.minus.imag() == doctest::Approx(-0.099009900990099010).epsilon(1e-15));
}

TEST_CASE("regularized kernel converges to the geometric kernel off the cone") {
    for (SplitComplex z : {SplitComplex{2.0, 1.0}, SplitComplex{-0.5, 0.3},
                           SplitComplex{1.2, -3.0}}) {
        BiComplex reg = kernel_eps(z, 1e-8);
        BiComplex exact = bicomplex_embed(kernel(z));
        CHECK(cabs(reg.plus - exact.plus) <= 1e-6);
        CHECK(cabs(reg.minus - exact.minus) <= 1e-6);
    }
}

TEST_CASE("regularized kernel components are bounded by 1/eps") {
    const double eps = 0.05;
    const double cap = 1.0 / eps + 1e-9;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        SplitComplex z{coord(rng), coord(rng)};
        BiComplex k = kernel_eps(z, eps);
        CHECK(cabs(k.plus) <= cap);
        CHECK(cabs(k.minus) <= cap);
    }
    // saturated right on the cone (but off the axes)
    BiComplex k = kernel_eps({1.0 + 0.5e-12, 1.0}, eps);
    CHECK(cabs(k.minus) == doctest::Approx(1.0 / eps).epsilon(1e-9));
}

TEST_CASE("sign coupling rejects the null axes") {
    CHECK_THROWS_AS(strict_sgn(0.0), std::domain_error);
    CHECK(strict_sgn(3.0) == 1.0);
    CHECK(strict_sgn(-0.25) == -1.0);
    // z = (1, -1) has u = 0: the minus component needs sgn(u)
    CHECK_THROWS_AS(kernel_eps({1.0, -1.0}, 0.1), std::domain_error);
    CHECK_THROWS_AS(kernel_eps({1.0, 1.0}, 0.1), std::domain_error);
}

TEST_CASE("kernel parameters are validated") {
    CHECK_THROWS_AS(KernelParams({0.0, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(KernelParams({0.0, 0.0}, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(KernelParams({0.0, 0.0}, 1e-9), std::invalid_argument);
    CHECK_NOTHROW(KernelParams({0.0, 0.0}, 1e-8));
    CHECK_NOTHROW(KernelParams({0.0, 0.0}, 1.0));

    WindowProfile bad;
    bad.phi = [](double) { return 0.0; };
    bad.support_radius = 1.0;
    CHECK_THROWS_AS(KernelParams({0.0, 0.0}, 0.1, bad), std::invalid_argument);
}

TEST_CASE("shift by zero reduces to the unshifted kernel") {
    KernelParams p({0.0, 0.0}, 0.07);
    for (SplitComplex z : {SplitComplex{2.0, 1.0}, SplitComplex{-1.3, 0.6}}) {
        BiComplex a = kernel_shifted(z, p);
        BiComplex b = kernel_eps(z, 0.07);
        CHECK(a.plus == b.plus);
        CHECK(a.minus == b.minus);
    }
}

TEST_CASE("idempotent summands add up to the shifted kernel") {
    KernelParams p({0.3, 0.1}, 0.02);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        SplitComplex z{coord(rng), coord(rng)};
        BiComplex kp = kernel_plus(z, p);
        BiComplex km = kernel_minus(z, p);
        BiComplex ks = kernel_shifted(z, p);
        CHECK(kp.minus == std::complex<double>(0.0, 0.0));
        CHECK(km.plus == std::complex<double>(0.0, 0.0));
        CHECK(kp.plus + km.plus == ks.plus);
        CHECK(kp.minus + km.minus == ks.minus);
    }
}

TEST_CASE("shifted kernel approximates the translated geometric kernel") {
    SplitComplex z{2.0, 1.0};
    SplitComplex z0{0.5, 0.25};
    KernelParams p(z0, 1e-8);
    BiComplex reg = kernel_shifted(z, p);
    BiComplex exact = bicomplex_embed(kernel(z - z0));
    CHECK(cabs(reg.plus - exact.plus) <= 1e-6);
    CHECK(cabs(reg.minus - exact.minus) <= 1e-6);
}

TEST_CASE("windowed kernel tapers each component in its own variable") {
    SplitComplex z0{0.3, 0.1};  // u0 = 0.4, v0 = 0.2
    WindowProfile w = smooth_bump(1.0);
    KernelParams p(z0, 0.05, w);
    KernelParams bare(z0, 0.05);

    // phi(0) = 1: no taper exactly at the center's null lines
    BiComplex at_center = kernel_windowed(z0, p);
    BiComplex bare_center = kernel_shifted(z0, bare);
    CHECK(at_center.plus == bare_center.plus);
    CHECK(at_center.minus == bare_center.minus);

    // inside the support the taper is the scalar bump value
    SplitComplex z{0.55, 0.25};  // u = 0.8, v = 0.3
    BiComplex kw = kernel_windowed(z, p);
    BiComplex ks = kernel_shifted(z, bare);
    NullCoords n = to_null(z);
    NullCoords n0 = to_null(z0);
    CHECK(kw.plus == ks.plus * w.phi(n.u - n0.u));
    CHECK(kw.minus == ks.minus * w.phi(n.v - n0.v));

    // outside the support the component dies
    SplitComplex far{2.0, 0.5};  // u = 2.5: |u - u0| = 2.1 > 1
    CHECK(kernel_windowed(far, p).plus == std::complex<double>(0.0, 0.0));

    CHECK_THROWS_AS(kernel_windowed(z, bare), std::invalid_argument);
}

TEST_CASE("conjugation swaps the idempotent components") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        SplitComplex z{coord(rng), coord(rng)};
        BiComplex k = kernel_eps(z, 0.3);
        BiComplex kc = kernel_eps(conj(z), 0.3);
        CHECK(kc.plus == k.minus);
        CHECK(kc.minus == k.plus);
    }
}

TEST_CASE("regularized kernel solves the wave equation away from the axes") {
    BiFieldFn field = [](SplitComplex z) { return kernel_eps(z, 0.5); };
    for (SplitComplex z : {SplitComplex{2.0, 0.3}, SplitComplex{-1.0, 0.4}}) {
        BiComplex r = dbar_fd(field, z, 1e-5);
        CHECK(cabs(r.plus) <= 1e-8);
        CHECK(cabs(r.minus) <= 1e-8);
    }
}
