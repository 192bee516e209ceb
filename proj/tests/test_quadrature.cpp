#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "splitcx/quadrature.hpp"

using namespace splitcx;
using std::numbers::pi;

TEST_CASE("single panel integrates degree-22 polynomials exactly") {
    QuadratureConfig cfg;
    cfg.abs_tol = 1.0;  // accept the first pass: isolates one rule application
    ComplexFn f = [](double t) { return std::complex<double>(std::pow(t, 22.0), 0.0); };
    QuadResult r = integrate_complex(f, 0.0, 1.0, cfg);
    CHECK(r.evals == 15);
    CHECK(std::fabs(r.value.real() - 1.0 / 23.0) <= 1e-15);

    ComplexFn one = [](double) { return std::complex<double>(1.0, 0.0); };
    QuadResult w = integrate_complex(one, -1.0, 1.0, cfg);
    CHECK(w.evals == 15);
    CHECK(std::fabs(w.value.real() - 2.0) <= 4e-16);  // weights sum to the interval length
}

TEST_CASE("smooth integrands hit default tolerances") {
    QuadratureConfig cfg;
    ComplexFn f = [](double t) { return std::complex<double>(std::exp(t), std::cos(t)); };
    QuadResult r = integrate_complex(f, 0.0, 1.0, cfg);
    CHECK(r.converged);
    CHECK(std::fabs(r.value.real() - (std::exp(1.0) - 1.0)) <= 1e-13);
    CHECK(std::fabs(r.value.imag() - std::sin(1.0)) <= 1e-13);

    ComplexFn g = [](double t) { return std::complex<double>(1.0 / (1.0 + t * t), 0.0); };
    QuadResult s = integrate_complex(g, -1.0, 3.0, cfg);
    CHECK(s.converged);
    CHECK(std::fabs(s.value.real() - (std::atan(3.0) + std::atan(1.0))) <= 1e-12);
}

TEST_CASE("direction reversal negates the value") {
    QuadratureConfig cfg;
    ComplexFn f = [](double t) { return std::complex<double>(t * t, t); };
    QuadResult fwd = integrate_complex(f, 0.25, 2.0, cfg);
    QuadResult bwd = integrate_complex(f, 2.0, 0.25, cfg);
    CHECK(fwd.value.real() == doctest::Approx(-bwd.value.real()).epsilon(1e-14));
    CHECK(fwd.value.imag() == doctest::Approx(-bwd.value.imag()).epsilon(1e-14));

    QuadResult empty = integrate_complex(f, 1.0, 1.0, cfg);
    CHECK(empty.value == std::complex<double>(0.0, 0.0));
    CHECK(empty.converged);
}

TEST_CASE("narrow peak in a wide interval needs seeding") {
    // Lorentzian of width 1e-6 at t0, interval 6 decades wider. The exact
    // integral is atan((b-t0)/eps) + atan(t0/eps), essentially pi.
    const double eps = 1e-6;
    const double t0 = pi / 10.0;
    ComplexFn f = [eps, t0](double t) {
        const double d = t - t0;
        return std::complex<double>(eps / (d * d + eps * eps), 0.0);
    };
    const double exact = std::atan((1000.0 - t0) / eps) + std::atan(t0 / eps);

    // 19 splits cannot even produce a panel of the peak's width from a
    // 1000-wide start (that alone needs ~30 bisections), so the blind run
    // must either miss the mass or admit non-convergence
    QuadratureConfig blind_cfg;
    blind_cfg.max_evals_per_arc = 600;
    QuadResult blind = integrate_complex(f, 0.0, 1000.0, blind_cfg);
    const bool blind_ok = blind.converged && std::fabs(blind.value.real() - exact) <= 1e-6;
    CHECK_FALSE(blind_ok);

    QuadratureConfig seeded_cfg;
    seeded_cfg.max_evals_per_arc = 3000;
    std::vector<double> seeds{t0};
    for (double w = eps; w <= 2.0; w *= 4.0) {
        seeds.push_back(t0 - w);
        seeds.push_back(t0 + w);
    }
    QuadResult seeded = integrate_complex(f, 0.0, 1000.0, seeded_cfg, seeds);
    CHECK(seeded.converged);
    CHECK(std::fabs(seeded.value.real() - exact) <= 1e-8);
    CHECK(seeded.evals <= 3000);
}

TEST_CASE("breakpoints outside the interval are ignored") {
    QuadratureConfig cfg;
    ComplexFn f = [](double t) { return std::complex<double>(std::sin(t), 0.0); };
    std::vector<double> seeds{-5.0, 0.5, 7.0};
    QuadResult r = integrate_complex(f, 0.0, 1.0, cfg, seeds);
    CHECK(r.converged);
    CHECK(std::fabs(r.value.real() - (1.0 - std::cos(1.0))) <= 1e-13);
}

TEST_CASE("exhausted budget is reported, not hidden") {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-300;  // unreachable
    cfg.rel_tol = 1e-300;
    cfg.max_evals_per_arc = 465;  // 1 initial panel + 15 splits
    ComplexFn f = [](double t) { return std::complex<double>(t > 0.0 ? std::sin(1.0 / t) : 0.0, 0.0); };
    QuadResult r = integrate_complex(f, 0.0, 1.0, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.evals <= 465);
    CHECK(std::isfinite(r.value.real()));
}
