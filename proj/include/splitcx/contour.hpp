#pragma once

#include <complex>
#include <vector>

#include "splitcx/cauchy_kernel.hpp"
#include "splitcx/quadrature.hpp"
#include "splitcx/splitnum.hpp"
#include "splitcx/wavefield.hpp"

// Oriented contours around the region U = { |N(Z)| < R }, split-complex line
// integrals, and the reconstruction of a wave solution's interior values from
// its boundary values.
//
// The boundary of U truncated at |u|, |v| <= S consists of four hyperbola
// arcs uv = +-R and four short closing segments. The cycle is stored
// counterclockwise in the (x, y) plane (positive signed area). Line
// integrals split along the idempotents: e+ dZ = e+ du and e- dZ = e- du
// with v in place of u for e-, so
//
//   integral of G dZ = ( integral of G_plus du,  integral of G_minus dv ).
//
// Winding convention. The map (x, y) -> (u, v) reverses orientation, and the
// two null projections of the counterclockwise cycle wind with opposite
// signs: the plus projection encircles u = u0 with winding -1, the minus
// projection encircles v = v0 with winding +1. Reconstruction therefore
// normalizes each component by its own winding,
//
//   estimate = ( -I_plus / 2 pi i,  +I_minus / 2 pi i ),
//
// calibrated once and pinned by the F = 1 test: both components then
// converge to the components of F(Z0) with vanishing imaginary part.

namespace splitcx {

// arc of uv = c traversed from u_begin to u_end (u never crosses zero)
struct HyperbolaArc {
    double c;
    double u_begin;
    double u_end;
};

// straight segment in null coordinates
struct SegmentArc {
    NullCoords from;
    NullCoords to;
};

struct OrientedArc {
    enum class Kind { Hyperbola, Segment } kind;
    HyperbolaArc hyperbola{};
    SegmentArc segment{};

    static OrientedArc make(HyperbolaArc a) { return {Kind::Hyperbola, a, {}}; }
    static OrientedArc make(SegmentArc a) { return {Kind::Segment, {}, a}; }
};

class HyperbolaContour {
  public:
    HyperbolaContour(double R, double S);

    double R() const { return r_; }
    double S() const { return s_; }

    // full counterclockwise cycle: branches and closing segments interleaved
    const std::vector<OrientedArc>& boundary() const { return cycle_; }

    std::vector<OrientedArc> branches() const;
    std::vector<OrientedArc> closing_segments() const;

  private:
    double r_;
    double s_;
    std::vector<OrientedArc> cycle_;
};

// validates R > 0, S > sqrt(R)
HyperbolaContour build_contour(double R, double S);

// (1/2) closed integral of (x dy - y dx); positive for the stored cycle.
// Closed form for the full boundary: 2R + 2R ln(S^2 / R).
double signed_area(const HyperbolaContour& contour);

// breakpoints seeded into the quadrature: known integrand features such as
// Lorentzian peak locations and window support edges, in null coordinates
struct IntegrandHints {
    std::vector<double> u_breakpoints;
    std::vector<double> v_breakpoints;
};

struct LineIntegralResult {
    BiComplex value{};
    double error_plus = 0.0;
    double error_minus = 0.0;
    long evals = 0;
    bool converged = true;
};

LineIntegralResult line_integral(const BiFieldFn& G, const OrientedArc& arc,
                                 const QuadratureConfig& cfg, const IntegrandHints& hints = {});
LineIntegralResult line_integral(const BiFieldFn& G, const std::vector<OrientedArc>& arcs,
                                 const QuadratureConfig& cfg, const IntegrandHints& hints = {});

// closed integral of F dZ over the axis-aligned rectangle [lo.x, hi.x] x
// [lo.y, hi.y], counterclockwise; zero for wave solutions
SplitComplex closed_rectangle_integral(const FieldFn& F, SplitComplex lo, SplitComplex hi,
                                       const QuadratureConfig& cfg);

// One-cell exterior-derivative check: boundary integral minus the interior
// density 2 j (dbar F)(center) x area. O(area (h^2 + diam^2)) for smooth F.
SplitComplex stokes_residual(const FieldFn& F, SplitComplex lo, SplitComplex hi, double h,
                             const QuadratureConfig& cfg);

// integral of K_shifted . F dZ over the four closing segments of the
// truncated boundary; decays like 1/S at fixed epsilon
LineIntegralResult segment_correction(const WaveFunction& F, const KernelParams& p, double R,
                                      double S, const QuadratureConfig& cfg);

enum class Extrapolation { None, LinearInEps };

// Coupled limit schedule: for each epsilon the truncation is S = R/(epsilon
// * delta), which pins the segment term at O(delta) of the main one, and the
// remaining error is linear in epsilon, removed by Richardson extrapolation
// over the last two schedule points.
struct LimitSchedule {
    std::vector<double> epsilons{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
    double delta = 1e-3;
    Extrapolation extrapolation = Extrapolation::LinearInEps;

    double s_for(double R, double epsilon) const { return R / (epsilon * delta); }
    void validate() const;
};

struct SchedulePoint {
    double epsilon = 0.0;
    double S = 0.0;
    BiComplex value{};  // per-component normalized boundary integral
    double error_plus = 0.0;
    double error_minus = 0.0;
    long evals = 0;
    bool converged = true;
    double wall_time_s = 0.0;
};

struct ReconstructionReport {
    std::vector<SchedulePoint> points;
    BiComplex extrapolated{};
    SplitComplex estimate{};
    SplitComplex reference{};
    double abs_error = 0.0;
    double imag_residual = 0.0;
    long total_evals = 0;
    bool all_converged = true;
};

// Boundary-value reconstruction of F(z0) for bounded solutions F: runs the
// schedule, normalizes each idempotent component by its winding, then
// extrapolates epsilon -> 0. Rejects z0 outside U and unbounded data.
ReconstructionReport reconstruct(const WaveFunction& F, SplitComplex z0, double R,
                                 const LimitSchedule& sched, const QuadratureConfig& cfg);

// Windowed variant: multiplies the kernel components by phi(u - u0) /
// phi(v - v0), giving compact support along the arcs. Valid for unbounded
// smooth data; phi(0) = 1 keeps the reproduced value unchanged.
ReconstructionReport reconstruct_windowed(const WaveFunction& F, SplitComplex z0, double R,
                                          const WindowProfile& phi, const LimitSchedule& sched,
                                          const QuadratureConfig& cfg);

// integral over [-T, T] of 2 i eps / ((t - t0)^2 + eps^2) . profile(t) dt,
// which tends to 2 pi i profile(t0) as eps -> 0, T -> infinity
std::complex<double> poisson_limit_check(const Profile& profile, double t0, double eps, double T,
                                         const QuadratureConfig& cfg);

}  // namespace splitcx
