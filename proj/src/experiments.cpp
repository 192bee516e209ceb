#include "splitcx/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

namespace splitcx {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string sanitize_id(std::string s) {
    std::replace(s.begin(), s.end(), ',', '_');
    return s;
}

struct ProfileSpec {
    std::string name;
    double param = 1.0;
};

ProfileSpec parse_profile(const std::string& spec) {
    ProfileSpec out;
    auto colon = spec.find(':');
    out.name = spec.substr(0, colon);
    if (colon != std::string::npos) {
        out.param = std::stod(spec.substr(colon + 1));
    } else {
        out.param = (out.name == "const") ? 0.5 : 1.0;
    }
    return out;
}

struct FitResult {
    double slope = 0.0;
    double r2 = 0.0;
};

FitResult fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(xs[i]);
        const double y = std::log(ys[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double dn = static_cast<double>(n);
    const double cov = sxy - sx * sy / dn;
    const double varx = sxx - sx * sx / dn;
    const double vary = syy - sy * sy / dn;
    FitResult fit;
    fit.slope = cov / varx;
    fit.r2 = (vary > 0.0) ? (cov * cov) / (varx * vary) : 1.0;
    return fit;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    return v[mid];
}

ExperimentResult run_verify_algebra(const ExperimentConfig& cfg) {
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> comp(-10.0, 10.0);
    auto draw = [&rng, &comp] { return SplitComplex{comp(rng), comp(rng)}; };

    const int n = 10000;
    const double tol = 1e-12;
    double worst_norm = 0.0, worst_conj = 0.0, worst_assoc = 0.0, worst_inv = 0.0;
    long inverse_cases = 0;

    for (int i = 0; i < n; ++i) {
        const SplitComplex z = draw();
        const SplitComplex w = draw();
        const SplitComplex q = draw();
        const double mz2 = z.x * z.x + z.y * z.y;
        const double mw2 = w.x * w.x + w.y * w.y;

        // N is multiplicative; deviations are measured against the Euclidean
        // magnitude scale, which bounds the rounding of both sides
        const double dn = std::fabs(norm(z * w) - norm(z) * norm(w));
        worst_norm = std::max(worst_norm, dn / std::max(1.0, mz2 * mw2));

        const SplitComplex zz = z * conj(z);
        const double dc = std::max(std::fabs(zz.x - norm(z)), std::fabs(zz.y));
        worst_conj = std::max(worst_conj, dc / std::max(1.0, mz2));

        const SplitComplex a = (z * w) * q;
        const SplitComplex b = z * (w * q);
        const double da = std::max(std::fabs(a.x - b.x), std::fabs(a.y - b.y));
        worst_assoc = std::max(worst_assoc, da / std::max(1.0, modulus(a)));

        if (std::fabs(norm(z)) >= 1e-6) {
            ++inverse_cases;
            const SplitComplex e = z * inverse(z) - SplitComplex{1.0, 0.0};
            worst_inv = std::max(worst_inv, std::max(std::fabs(e.x), std::fabs(e.y)));
        }
    }

    const std::string tail = ":seed=" + std::to_string(cfg.seed) + ":tol=1e-12";
    ExperimentResult result;
    auto add = [&result](std::string id, double worst, long cases, double tolerance) {
        ReportRow row;
        row.experiment = std::move(id);
        row.abs_error = worst;
        row.evals = cases;
        result.rows.push_back(row);
        result.pass = result.pass && worst <= tolerance;
    };
    add("verify-algebra:norm-mult" + tail, worst_norm, n, tol);
    add("verify-algebra:conj-norm" + tail, worst_conj, n, tol);
    add("verify-algebra:assoc" + tail, worst_assoc, n, tol);
    add("verify-algebra:inverse" + tail, worst_inv, inverse_cases, tol);
    result.summary = "verify-algebra: " + std::string(result.pass ? "pass" : "FAIL");
    return result;
}

ExperimentResult run_verify_solutions(const ExperimentConfig& cfg) {
    const std::vector<std::string> families{"gaussian", "sech", "sinbump", "poly1", "poly2"};
    const std::vector<std::string> curved{"gaussian", "sech", "sinbump"};
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    const double tol = 1e-6;

    ExperimentResult result;
    for (const std::string& fam : families) {
        WaveFunction F(make_family(fam));
        FieldFn field = F.as_field();
        double worst = 0.0;
        std::vector<double> ratios;
        for (int i = 0; i < 100; ++i) {
            const SplitComplex z{coord(rng), coord(rng)};
            worst = std::max(worst, modulus(dbar_fd(field, z, 1e-5)));
            // The dbar residual of an assembled solution cancels to rounding
            // noise at every h (both difference directions reuse the same
            // f(u+-h), g(v+-h) values), so the stencil's order is observed on
            // the conjugate factor derivative, whose h^2 term survives:
            // successive differences |d(h)-d(h/2)| / |d(h/2)-d(h/4)| -> 4.
            const double h = 1e-3;
            const SplitComplex d1 = d_fd(field, z, h);
            const SplitComplex d2 = d_fd(field, z, 0.5 * h);
            const SplitComplex d4 = d_fd(field, z, 0.25 * h);
            const double num = modulus(d1 - d2);
            const double den = modulus(d2 - d4);
            if (num > 1e-11 && den > 0.0) ratios.push_back(num / den);
        }

        ReportRow row;
        row.experiment = "verify-solutions:" + fam + ":dbar-residual:h=1e-5:tol=1e-6";
        row.abs_error = worst;
        row.evals = 400;
        result.rows.push_back(row);
        result.pass = result.pass && worst <= tol;

        if (std::find(curved.begin(), curved.end(), fam) != curved.end()) {
            const double ratio = median(ratios);
            ReportRow order;
            order.experiment = "verify-solutions:" + fam + ":fd-order:h=1e-3:range=3.5-4.5";
            order.abs_error = ratio;
            order.evals = static_cast<long>(ratios.size());
            result.rows.push_back(order);
            result.pass = result.pass && ratio >= 3.5 && ratio <= 4.5;
        }
    }
    result.summary = "verify-solutions: " + std::string(result.pass ? "pass" : "FAIL");
    return result;
}

ExperimentResult run_green_check(const ExperimentConfig& cfg) {
    ExperimentResult result;
    WaveFunction F(make_family(cfg.family));
    FieldFn field = F.as_field();

    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> cen(-1.5, 1.5);
    std::uniform_real_distribution<double> half(0.05, 0.75);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double cx = cen(rng), cy = cen(rng);
        const double wx = half(rng), wy = half(rng);
        const SplitComplex lo{cx - wx, cy - wy};
        const SplitComplex hi{cx + wx, cy + wy};
        worst = std::max(worst, modulus(closed_rectangle_integral(field, lo, hi, cfg.quad)));
    }
    {
        ReportRow row;
        row.experiment = "green-check:" + sanitize_id(cfg.family) + ":closed-loop:n=20:tol=1e-9";
        row.abs_error = worst;
        row.evals = 20;
        result.rows.push_back(row);
        result.pass = result.pass && worst <= 1e-9;
    }

    // coordinate field: boundary integral of x dZ over the unit square is
    // exactly j, matching 2 j (dbar x) area = j
    FieldFn coord_x = [](SplitComplex z) { return SplitComplex{z.x, 0.0}; };
    const double id_res = modulus(stokes_residual(coord_x, {0.0, 0.0}, {1.0, 1.0}, 1e-3, cfg.quad));
    {
        ReportRow row;
        row.experiment = "green-check:stokes-identity:tol=1e-9";
        row.abs_error = id_res;
        result.rows.push_back(row);
        result.pass = result.pass && id_res <= 1e-9;
    }

    // x^3 has quadratic exterior-derivative density, integrated exactly by
    // the midpoint value over a rectangle, so the cell-halving ratio isolates
    // the O(h^2) finite-difference term at fixed h: residual = area * h^2
    FieldFn cubic = [](SplitComplex z) { return SplitComplex{z.x * z.x * z.x, 0.0}; };
    const double h = 0.05;
    const double cx = 0.4, cy = 0.2;
    double res[3];
    const double sizes[3] = {0.02, 0.01, 0.005};
    for (int k = 0; k < 3; ++k) {
        const double a = 0.5 * sizes[k];
        res[k] = modulus(stokes_residual(cubic, {cx - a, cy - a}, {cx + a, cy + a}, h, cfg.quad));
    }
    for (int k = 0; k < 2; ++k) {
        const double ratio = res[k] / res[k + 1];
        ReportRow row;
        row.experiment = "green-check:stokes-order:step=" + std::to_string(k + 1) + ":range=3.5-4.5";
        row.abs_error = ratio;
        result.rows.push_back(row);
        result.pass = result.pass && ratio >= 3.5 && ratio <= 4.5;
    }
    result.summary = "green-check: " + std::string(result.pass ? "pass" : "FAIL");
    return result;
}

ExperimentResult run_poisson_check(const ExperimentConfig& cfg) {
    ExperimentResult result;

    auto add_case = [&result, &cfg](const std::string& id, const Profile& profile, double t0,
                                    double eps, double T, double tol) {
        const std::complex<double> val = poisson_limit_check(profile, t0, eps, T, cfg.quad);
        const double target = 2.0 * pi * profile(t0);
        const double rel = std::abs(val - std::complex<double>(0.0, target)) / target;
        ReportRow row;
        row.experiment = id;
        row.epsilon = eps;
        row.S = T;
        row.est_re_plus = val.real();
        row.est_im_plus = val.imag();
        row.ref_plus = target;
        row.abs_error = rel;
        result.rows.push_back(row);
        result.pass = result.pass && rel <= tol;
        return rel;
    };

    Profile flat = [](double) { return 1.0; };
    Profile gauss = [](double t) { return std::exp(-t * t); };

    add_case("poisson-check:flat:t0=0:eps=1e-4:T=1e4:tol=1e-6", flat, 0.0, 1e-4, 1e4, 1e-6);
    add_case("poisson-check:gaussian:t0=0.75:eps=1e-6:T=50:tol=1e-6", gauss, 0.75, 1e-6, 50.0,
             1e-6);

    // the deviation is linear in eps; the fitted exponent documents it
    std::vector<double> epss{1e-3, 1e-4, 1e-5, 1e-6};
    std::vector<double> devs;
    for (double e : epss) {
        const std::complex<double> val = poisson_limit_check(gauss, 0.75, e, 50.0, cfg.quad);
        const double target = 2.0 * pi * std::exp(-0.5625);
        devs.push_back(std::abs(val - std::complex<double>(0.0, target)) / target);
    }
    const FitResult fit = fit_loglog(epss, devs);
    ReportRow row;
    row.experiment = "poisson-check:gaussian-slope:range=0.9-1.1";
    row.abs_error = fit.slope;
    result.rows.push_back(row);
    result.pass = result.pass && fit.slope >= 0.9 && fit.slope <= 1.1;

    result.summary = "poisson-check: " + std::string(result.pass ? "pass" : "FAIL");
    return result;
}

void append_report_rows(ExperimentResult& result, const ReconstructionReport& rep,
                        const std::string& base, bool timing) {
    for (const SchedulePoint& pt : rep.points) {
        ReportRow row;
        row.experiment = base;
        row.epsilon = pt.epsilon;
        row.S = pt.S;
        row.est_re_plus = pt.value.plus.real();
        row.est_im_plus = pt.value.plus.imag();
        row.est_re_minus = pt.value.minus.real();
        row.est_im_minus = pt.value.minus.imag();
        const BiComplex ref{{to_null(rep.reference).u, 0.0}, {to_null(rep.reference).v, 0.0}};
        row.ref_plus = ref.plus.real();
        row.ref_minus = ref.minus.real();
        row.abs_error = modulus(real_part(pt.value) - rep.reference);
        row.imag_residual =
            std::max(std::fabs(pt.value.plus.imag()), std::fabs(pt.value.minus.imag()));
        row.evals = pt.evals;
        row.wall_time_s = timing ? pt.wall_time_s : 0.0;
        result.rows.push_back(row);
    }
    ReportRow final_row;
    final_row.experiment = base + ":extrapolated";
    final_row.est_re_plus = rep.extrapolated.plus.real();
    final_row.est_im_plus = rep.extrapolated.plus.imag();
    final_row.est_re_minus = rep.extrapolated.minus.real();
    final_row.est_im_minus = rep.extrapolated.minus.imag();
    final_row.ref_plus = to_null(rep.reference).u;
    final_row.ref_minus = to_null(rep.reference).v;
    final_row.abs_error = rep.abs_error;
    final_row.imag_residual = rep.imag_residual;
    final_row.evals = rep.total_evals;
    result.rows.push_back(final_row);
}

ExperimentResult run_reconstruct(const ExperimentConfig& cfg) {
    ExperimentResult result;
    WaveFunction F(make_family(cfg.family));

    ReconstructionReport rep;
    std::string wlabel;
    if (cfg.window_spec.empty()) {
        rep = reconstruct(F, cfg.z0, cfg.R, cfg.schedule, cfg.quad);
    } else {
        rep = reconstruct_windowed(F, cfg.z0, cfg.R, make_window(cfg.window_spec), cfg.schedule,
                                   cfg.quad);
        wlabel = ":window=" + sanitize_id(cfg.window_spec);
    }

    const std::string base = "reconstruct:" + sanitize_id(cfg.family) + ":R=" + fmt_num(cfg.R) +
                             ":z0=" + fmt_num(cfg.z0.x) + "_" + fmt_num(cfg.z0.y) + wlabel +
                             ":tol=1e-3";
    append_report_rows(result, rep, base, cfg.timing);
    result.pass = rep.abs_error <= 1e-3 && rep.imag_residual <= 1e-3 && rep.all_converged;
    result.summary = "reconstruct: abs_error=" + fmt_num(rep.abs_error) +
                     " imag_residual=" + fmt_num(rep.imag_residual) +
                     (result.pass ? " pass" : " FAIL");
    return result;
}

// one normalized boundary integral at a single (eps, S), no extrapolation
BiComplex value_at(const WaveFunction& F, SplitComplex z0, double R, double eps, double S,
                   const QuadratureConfig& quad) {
    LimitSchedule sched;
    sched.epsilons = {eps};
    sched.delta = R / (eps * S);  // s_for then reproduces exactly this S
    sched.extrapolation = Extrapolation::None;
    return reconstruct(F, z0, R, sched, quad).points.front().value;
}

ExperimentResult run_sweep(const ExperimentConfig& cfg) {
    ExperimentResult result;

    // truncation law at fixed eps: consecutive S-doubling differences decay
    // like 1/S for constant data
    {
        WaveFunction Fc(make_family("const"));
        const double eps = 1e-2;
        const std::vector<double> Ss{50.0, 100.0, 200.0, 400.0, 800.0};
        std::vector<BiComplex> vals;
        for (double S : Ss) vals.push_back(value_at(Fc, cfg.z0, cfg.R, eps, S, cfg.quad));
        std::vector<double> ds, xs;
        for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
            const double d = max_component_abs(vals[k + 1] - vals[k]);
            ds.push_back(d);
            xs.push_back(Ss[k]);
            ReportRow row;
            row.experiment = "sweep:truncation-points:family=const:eps=0.01";
            row.epsilon = eps;
            row.S = Ss[k + 1];
            row.abs_error = d;
            result.rows.push_back(row);
        }
        const FitResult fit = fit_loglog(xs, ds);
        const double exponent = -fit.slope;  // d ~ S^(-1)
        ReportRow row;
        row.experiment = "sweep:truncation-slope:family=const:eps=0.01:range=0.8-1.2";
        row.abs_error = exponent;
        result.rows.push_back(row);
        result.pass = result.pass && exponent >= 0.8 && exponent <= 1.2;
    }

    // epsilon law over the default schedule: per-point error vs eps should
    // fit a line in log-log with high R^2 (that is what justifies the
    // linear-in-eps extrapolation)
    for (const std::string fam : {"gaussian", "sech"}) {
        WaveFunction F(make_family(fam));
        const ReconstructionReport rep = reconstruct(F, cfg.z0, cfg.R, cfg.schedule, cfg.quad);
        std::vector<double> epss, errs;
        for (const SchedulePoint& pt : rep.points) {
            const double err = modulus(real_part(pt.value) - rep.reference);
            epss.push_back(pt.epsilon);
            errs.push_back(err);
            ReportRow row;
            row.experiment = "sweep:eps-points:family=" + fam;
            row.epsilon = pt.epsilon;
            row.S = pt.S;
            row.abs_error = err;
            row.evals = pt.evals;
            row.wall_time_s = cfg.timing ? pt.wall_time_s : 0.0;
            result.rows.push_back(row);
        }
        const FitResult fit = fit_loglog(epss, errs);
        ReportRow row;
        row.experiment = "sweep:eps-law:family=" + fam + ":R2>=0.95";
        row.est_re_plus = fit.slope;
        row.abs_error = fit.r2;
        result.rows.push_back(row);
        result.pass = result.pass && fit.r2 >= 0.95;
    }

    // contour independence: two admissible radii must reconstruct the same
    // interior value
    {
        WaveFunction F(make_family("gaussian/sech"));
        const ReconstructionReport rep1 = reconstruct(F, cfg.z0, 1.0, cfg.schedule, cfg.quad);
        const ReconstructionReport rep2 = reconstruct(F, cfg.z0, 2.0, cfg.schedule, cfg.quad);
        const double diff = modulus(rep1.estimate - rep2.estimate);
        ReportRow row;
        row.experiment = "sweep:contour-independence:R=1_vs_2:tol=2e-3";
        row.abs_error = diff;
        result.rows.push_back(row);
        result.pass = result.pass && diff <= 2e-3;
    }

    result.summary = "sweep: " + std::string(result.pass ? "pass" : "FAIL");
    return result;
}

}  // namespace

CharacteristicData make_family(const std::string& spec) {
    const auto slash = spec.find('/');
    const ProfileSpec fs = parse_profile(slash == std::string::npos ? spec : spec.substr(0, slash));
    const ProfileSpec gs =
        parse_profile(slash == std::string::npos ? spec : spec.substr(slash + 1));
    CharacteristicData data;
    data.f = profile_by_name(fs.name, fs.param);
    data.g = profile_by_name(gs.name, gs.param);
    data.bounded = profile_is_bounded(fs.name) && profile_is_bounded(gs.name);
    if (data.bounded) {
        data.bound =
            2.0 * std::max(profile_bound(fs.name, fs.param), profile_bound(gs.name, gs.param));
    }
    return data;
}

WindowProfile make_window(const std::string& spec) {
    const ProfileSpec ws = parse_profile(spec);
    if (ws.name != "bump") throw std::invalid_argument("unknown window profile: " + ws.name);
    const double radius = (spec.find(':') == std::string::npos) ? 4.0 : ws.param;
    return smooth_bump(radius);
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult result;
    if (cfg.command == "verify-algebra") {
        result = run_verify_algebra(cfg);
    } else if (cfg.command == "verify-solutions") {
        result = run_verify_solutions(cfg);
    } else if (cfg.command == "green-check") {
        result = run_green_check(cfg);
    } else if (cfg.command == "poisson-check") {
        result = run_poisson_check(cfg);
    } else if (cfg.command == "reconstruct") {
        result = run_reconstruct(cfg);
    } else if (cfg.command == "sweep") {
        result = run_sweep(cfg);
    } else {
        throw std::invalid_argument("unknown command: " + cfg.command);
    }
    if (!cfg.timing) {
        for (ReportRow& row : result.rows) row.wall_time_s = 0.0;
    }
    return result;
}

}  // namespace splitcx
