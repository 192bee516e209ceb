#include "splitcx/contour.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace splitcx {

namespace {

constexpr double pi = std::numbers::pi;

// geometric subdivision for arcs spanning several decades in |u| or |v|;
// endpoints of a hyperbola arc never straddle zero
std::vector<double> decade_ladder(double a, double b) {
    std::vector<double> pts;
    const double lo = std::min(std::fabs(a), std::fabs(b));
    const double hi = std::max(std::fabs(a), std::fabs(b));
    if (!(lo > 0.0) || hi / lo < 10.0) return pts;
    const double sign = (a > 0.0) ? 1.0 : -1.0;
    const int n = static_cast<int>(std::ceil(std::log10(hi / lo)));
    const double ratio = std::pow(hi / lo, 1.0 / n);
    double t = lo;
    for (int k = 1; k < n; ++k) {
        t *= ratio;
        pts.push_back(sign * t);
    }
    return pts;
}

std::vector<double> merged(const std::vector<double>& hints, std::vector<double> extra) {
    extra.insert(extra.end(), hints.begin(), hints.end());
    return extra;
}

// panel boundaries straddling a Lorentzian peak of width eps at center,
// widening geometrically so the adaptive pass starts near-balanced
std::vector<double> peak_ladder(double center, double eps) {
    std::vector<double> pts{center};
    for (double w = eps; w <= 256.0 * eps; w *= 4.0) {
        pts.push_back(center - w);
        pts.push_back(center + w);
    }
    return pts;
}

// kernel_shifted with a per-component fallback: a component whose sign
// coupling is undefined (the other null coordinate exactly zero) becomes 0
// instead of throwing. Quadrature nodes hit the axes only on the closing
// segments, where the affected component's differential vanishes, so the
// placeholder is never consumed by an integral.
BiComplex guarded_kernel(NullCoords n, NullCoords n0, double eps,
                         const std::optional<WindowProfile>& window) {
    const double su = n.u > 0.0 ? 1.0 : (n.u < 0.0 ? -1.0 : 0.0);
    const double sv = n.v > 0.0 ? 1.0 : (n.v < 0.0 ? -1.0 : 0.0);
    std::complex<double> plus =
        sv == 0.0 ? 0.0 : 1.0 / std::complex<double>(n.u - n0.u, eps * sv);
    std::complex<double> minus =
        su == 0.0 ? 0.0 : 1.0 / std::complex<double>(n.v - n0.v, eps * su);
    if (window) {
        plus *= window->phi(n.u - n0.u);
        minus *= window->phi(n.v - n0.v);
    }
    return {plus, minus};
}

}  // namespace

HyperbolaContour::HyperbolaContour(double R, double S) : r_(R), s_(S) {
    if (!(R > 0.0)) throw std::invalid_argument("HyperbolaContour: R must be positive");
    if (!(S > std::sqrt(R)))
        throw std::invalid_argument("HyperbolaContour: S must exceed sqrt(R), smaller S leaves empty truncated branches");
    const double t = R / S;  // inner truncation endpoint, paired with S
    cycle_ = {
        OrientedArc::make(HyperbolaArc{R, t, S}),         // right branch, u rising
        OrientedArc::make(SegmentArc{{S, t}, {S, -t}}),   // u = S
        OrientedArc::make(HyperbolaArc{-R, S, t}),        // top branch, u falling
        OrientedArc::make(SegmentArc{{t, -S}, {-t, -S}}), // v = -S
        OrientedArc::make(HyperbolaArc{R, -t, -S}),       // left branch
        OrientedArc::make(SegmentArc{{-S, -t}, {-S, t}}), // u = -S
        OrientedArc::make(HyperbolaArc{-R, -S, -t}),      // bottom branch
        OrientedArc::make(SegmentArc{{-t, S}, {t, S}}),   // v = S
    };
}

std::vector<OrientedArc> HyperbolaContour::branches() const {
    std::vector<OrientedArc> out;
    for (const OrientedArc& arc : cycle_)
        if (arc.kind == OrientedArc::Kind::Hyperbola) out.push_back(arc);
    return out;
}

std::vector<OrientedArc> HyperbolaContour::closing_segments() const {
    std::vector<OrientedArc> out;
    for (const OrientedArc& arc : cycle_)
        if (arc.kind == OrientedArc::Kind::Segment) out.push_back(arc);
    return out;
}

HyperbolaContour build_contour(double R, double S) { return HyperbolaContour(R, S); }

double signed_area(const HyperbolaContour& contour) {
    // (1/2) closed integral of (x dy - y dx) = (1/4) closed integral of (v du - u dv)
    BiFieldFn G = [](SplitComplex z) {
        NullCoords n = to_null(z);
        return BiComplex{{n.v, 0.0}, {n.u, 0.0}};
    };
    QuadratureConfig cfg;
    LineIntegralResult r = line_integral(G, contour.boundary(), cfg);
    return 0.25 * (r.value.plus.real() - r.value.minus.real());
}

LineIntegralResult line_integral(const BiFieldFn& G, const OrientedArc& arc,
                                 const QuadratureConfig& cfg, const IntegrandHints& hints) {
    LineIntegralResult out;
    if (arc.kind == OrientedArc::Kind::Hyperbola) {
        const HyperbolaArc& h = arc.hyperbola;
        const double c = h.c;

        ComplexFn fplus = [&G, c](double u) { return G(from_null(u, c / u)).plus; };
        QuadResult rp = integrate_complex(fplus, h.u_begin, h.u_end, cfg,
                                          merged(hints.u_breakpoints, decade_ladder(h.u_begin, h.u_end)));

        const double v_begin = c / h.u_begin;
        const double v_end = c / h.u_end;
        ComplexFn fminus = [&G, c](double v) { return G(from_null(c / v, v)).minus; };
        QuadResult rm = integrate_complex(fminus, v_begin, v_end, cfg,
                                          merged(hints.v_breakpoints, decade_ladder(v_begin, v_end)));

        out.value = {rp.value, rm.value};
        out.error_plus = rp.error;
        out.error_minus = rm.error;
        out.evals = rp.evals + rm.evals;
        out.converged = rp.converged && rm.converged;
        return out;
    }

    const SegmentArc seg = arc.segment;
    const double du = seg.to.u - seg.from.u;
    const double dv = seg.to.v - seg.from.v;
    if (du != 0.0) {
        ComplexFn f = [&G, seg, du, dv](double t) {
            return G(from_null(seg.from.u + t * du, seg.from.v + t * dv)).plus * du;
        };
        std::vector<double> bp;
        for (double ub : hints.u_breakpoints) bp.push_back((ub - seg.from.u) / du);
        QuadResult rp = integrate_complex(f, 0.0, 1.0, cfg, bp);
        out.value.plus = rp.value;
        out.error_plus = rp.error;
        out.evals += rp.evals;
        out.converged = out.converged && rp.converged;
    }
    if (dv != 0.0) {
        ComplexFn f = [&G, seg, du, dv](double t) {
            return G(from_null(seg.from.u + t * du, seg.from.v + t * dv)).minus * dv;
        };
        std::vector<double> bp;
        for (double vb : hints.v_breakpoints) bp.push_back((vb - seg.from.v) / dv);
        QuadResult rm = integrate_complex(f, 0.0, 1.0, cfg, bp);
        out.value.minus = rm.value;
        out.error_minus = rm.error;
        out.evals += rm.evals;
        out.converged = out.converged && rm.converged;
    }
    return out;
}

LineIntegralResult line_integral(const BiFieldFn& G, const std::vector<OrientedArc>& arcs,
                                 const QuadratureConfig& cfg, const IntegrandHints& hints) {
    LineIntegralResult out;
    for (const OrientedArc& arc : arcs) {
        LineIntegralResult part = line_integral(G, arc, cfg, hints);
        out.value = out.value + part.value;
        out.error_plus += part.error_plus;
        out.error_minus += part.error_minus;
        out.evals += part.evals;
        out.converged = out.converged && part.converged;
    }
    return out;
}

SplitComplex closed_rectangle_integral(const FieldFn& F, SplitComplex lo, SplitComplex hi,
                                       const QuadratureConfig& cfg) {
    // pack the two real components into one complex integrand per side
    auto pack = [&F](double x, double y) {
        SplitComplex w = F({x, y});
        return std::complex<double>(w.x, w.y);
    };
    ComplexFn bottom = [&pack, y = lo.y](double x) { return pack(x, y); };
    ComplexFn right = [&pack, x = hi.x](double y) { return pack(x, y); };
    ComplexFn top = [&pack, y = hi.y](double x) { return pack(x, y); };
    ComplexFn left = [&pack, x = lo.x](double y) { return pack(x, y); };

    QuadResult rb = integrate_complex(bottom, lo.x, hi.x, cfg);
    QuadResult rr = integrate_complex(right, lo.y, hi.y, cfg);
    QuadResult rt = integrate_complex(top, hi.x, lo.x, cfg);
    QuadResult rl = integrate_complex(left, hi.y, lo.y, cfg);

    SplitComplex horiz{rb.value.real() + rt.value.real(), rb.value.imag() + rt.value.imag()};
    SplitComplex vert{rr.value.real() + rl.value.real(), rr.value.imag() + rl.value.imag()};
    return horiz + unit_j * vert;  // dZ = dx + j dy
}

SplitComplex stokes_residual(const FieldFn& F, SplitComplex lo, SplitComplex hi, double h,
                             const QuadratureConfig& cfg) {
    SplitComplex boundary = closed_rectangle_integral(F, lo, hi, cfg);
    SplitComplex center{0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)};
    const double area = (hi.x - lo.x) * (hi.y - lo.y);
    SplitComplex density = unit_j * dbar_fd(F, center, h) * (2.0 * area);
    return boundary - density;
}

LineIntegralResult segment_correction(const WaveFunction& F, const KernelParams& p, double R,
                                      double S, const QuadratureConfig& cfg) {
    HyperbolaContour contour = build_contour(R, S);
    NullCoords n0 = to_null(p.z0);
    BiFieldFn G = [&F, &p, n0](SplitComplex z) {
        return guarded_kernel(to_null(z), n0, p.epsilon, std::nullopt) * F.bicomplex_at(z);
    };
    IntegrandHints hints;
    hints.u_breakpoints = peak_ladder(n0.u, p.epsilon);
    hints.v_breakpoints = peak_ladder(n0.v, p.epsilon);
    return line_integral(G, contour.closing_segments(), cfg, hints);
}

void LimitSchedule::validate() const {
    if (epsilons.empty()) throw std::invalid_argument("LimitSchedule: empty epsilon schedule");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        const double e = epsilons[i];
        if (!(e >= KernelParams::min_epsilon && e <= KernelParams::max_epsilon))
            throw std::invalid_argument("LimitSchedule: epsilon outside [1e-8, 1]");
        if (i > 0 && !(e < epsilons[i - 1]))
            throw std::invalid_argument("LimitSchedule: epsilons must decrease strictly");
    }
    if (!(delta > 0.0)) throw std::invalid_argument("LimitSchedule: delta must be positive");
}

namespace {

ReconstructionReport run_reconstruction(const WaveFunction& F, SplitComplex z0, double R,
                                        const LimitSchedule& sched, const QuadratureConfig& cfg,
                                        const std::optional<WindowProfile>& window) {
    if (!(R > 0.0)) throw std::invalid_argument("reconstruct: R must be positive");
    if (!(std::fabs(norm(z0)) < R))
        throw std::invalid_argument("reconstruct: z0 lies outside U = { |N(Z)| < R }");
    sched.validate();

    const NullCoords n0 = to_null(z0);
    const std::complex<double> two_pi_i(0.0, 2.0 * pi);

    ReconstructionReport report;
    report.reference = F(z0);

    for (double eps : sched.epsilons) {
        const auto t_start = std::chrono::steady_clock::now();
        const double S = sched.s_for(R, eps);
        HyperbolaContour contour = build_contour(R, S);
        KernelParams params(z0, eps, window);  // validates eps and the window

        BiFieldFn G = [&F, n0, params](SplitComplex z) {
            return guarded_kernel(to_null(z), n0, params.epsilon, params.window) * F.bicomplex_at(z);
        };

        IntegrandHints hints;
        hints.u_breakpoints = peak_ladder(n0.u, eps);
        hints.v_breakpoints = peak_ladder(n0.v, eps);
        if (window) {
            const double r = window->support_radius;
            hints.u_breakpoints.push_back(n0.u - r);
            hints.u_breakpoints.push_back(n0.u + r);
            hints.v_breakpoints.push_back(n0.v - r);
            hints.v_breakpoints.push_back(n0.v + r);
        }

        LineIntegralResult raw = line_integral(G, contour.boundary(), cfg, hints);

        // the plus projection of the cycle winds negatively, the minus
        // projection positively: normalize each by its own winding
        SchedulePoint pt;
        pt.epsilon = eps;
        pt.S = S;
        pt.value = {-raw.value.plus / two_pi_i, raw.value.minus / two_pi_i};
        pt.error_plus = raw.error_plus / (2.0 * pi);
        pt.error_minus = raw.error_minus / (2.0 * pi);
        pt.evals = raw.evals;
        pt.converged = raw.converged;
        pt.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

        report.points.push_back(pt);
        report.total_evals += pt.evals;
        report.all_converged = report.all_converged && pt.converged;
    }

    const SchedulePoint& last = report.points.back();
    BiComplex extrap = last.value;
    if (sched.extrapolation == Extrapolation::LinearInEps && report.points.size() >= 2) {
        const SchedulePoint& prev = report.points[report.points.size() - 2];
        const double w = last.epsilon / (prev.epsilon - last.epsilon);
        extrap = {last.value.plus + (last.value.plus - prev.value.plus) * w,
                  last.value.minus + (last.value.minus - prev.value.minus) * w};
    }
    report.extrapolated = extrap;
    report.estimate = from_null(extrap.plus.real(), extrap.minus.real());
    report.imag_residual = std::max(std::fabs(extrap.plus.imag()), std::fabs(extrap.minus.imag()));
    report.abs_error = modulus(report.estimate - report.reference);
    return report;
}

}  // namespace

ReconstructionReport reconstruct(const WaveFunction& F, SplitComplex z0, double R,
                                 const LimitSchedule& sched, const QuadratureConfig& cfg) {
    if (!F.bounded())
        throw std::invalid_argument(
            "reconstruct: characteristic data declared unbounded; use reconstruct_windowed");
    return run_reconstruction(F, z0, R, sched, cfg, std::nullopt);
}

ReconstructionReport reconstruct_windowed(const WaveFunction& F, SplitComplex z0, double R,
                                          const WindowProfile& phi, const LimitSchedule& sched,
                                          const QuadratureConfig& cfg) {
    return run_reconstruction(F, z0, R, sched, cfg, phi);
}

std::complex<double> poisson_limit_check(const Profile& profile, double t0, double eps, double T,
                                         const QuadratureConfig& cfg) {
    ComplexFn f = [&profile, t0, eps](double t) {
        const double d = t - t0;
        return std::complex<double>(0.0, 2.0 * eps * profile(t) / (d * d + eps * eps));
    };
    QuadResult r = integrate_complex(f, -T, T, cfg, peak_ladder(t0, eps));
    return r.value;
}

}  // namespace splitcx
