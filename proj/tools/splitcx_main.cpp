#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "splitcx/experiments.hpp"

namespace {

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = (comma == std::string::npos) ? text.size() : comma;
        out.push_back(std::stod(text.substr(pos, end - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string diagnostic_id(const std::string& command, std::string what) {
    std::replace(what.begin(), what.end(), ',', '_');
    std::replace(what.begin(), what.end(), ' ', '_');
    return "error:" + command + ":" + what;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"split-complex wave-solution boundary reconstruction"};
    app.set_config("--config", "", "flat key=value config file; flags override it");

    splitcx::ExperimentConfig cfg;
    std::string z0_text = "0.3,0.1";
    std::string eps_text;
    std::string extrapolation = "linear";
    bool no_timing = false;

    app.add_option("--command", cfg.command,
                   "verify-algebra | verify-solutions | green-check | poisson-check | "
                   "reconstruct | sweep");
    app.add_option("--R", cfg.R, "hyperbola level: contour is |N(Z)| = R");
    app.add_option("--z0", z0_text, "evaluation point as x,y");
    app.add_option("--family", cfg.family, "characteristic data name[:param] or fspec/gspec");
    app.add_option("--eps-schedule", eps_text, "comma-separated strictly decreasing epsilons");
    app.add_option("--delta", cfg.schedule.delta, "truncation rule S = R/(eps*delta)");
    app.add_option("--abs-tol", cfg.quad.abs_tol, "quadrature absolute tolerance");
    app.add_option("--rel-tol", cfg.quad.rel_tol, "quadrature relative tolerance");
    app.add_option("--window", cfg.window_spec, "window profile, e.g. bump:4");
    app.add_option("--seed", cfg.seed, "seed for random-point suites");
    app.add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out_path, "report file path; stdout when omitted");
    app.add_option("--extrapolation", extrapolation, "linear | none")
        ->check(CLI::IsMember({"linear", "none"}));
    app.add_flag("--no-timing", no_timing, "zero wall_time_s so identical runs match byte-for-byte");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const std::vector<double> z0v = parse_csv_doubles(z0_text);
        if (z0v.size() != 2) throw std::invalid_argument("--z0 expects two values x,y");
        cfg.z0 = {z0v[0], z0v[1]};
        if (!eps_text.empty()) cfg.schedule.epsilons = parse_csv_doubles(eps_text);
        cfg.schedule.extrapolation = (extrapolation == "none")
                                         ? splitcx::Extrapolation::None
                                         : splitcx::Extrapolation::LinearInEps;
        cfg.timing = !no_timing;
    } catch (const std::exception& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    }

    try {
        const splitcx::ExperimentResult result = splitcx::run_experiment(cfg);
        splitcx::write_report(result.rows, cfg.format, cfg.out_path);
        std::cerr << result.summary << "\n";
        return result.pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        splitcx::ReportRow row;
        row.experiment = diagnostic_id(cfg.command, e.what());
        try {
            splitcx::write_report({row}, cfg.format, cfg.out_path);
        } catch (...) {
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        splitcx::ReportRow row;
        row.experiment = diagnostic_id(cfg.command, e.what());
        try {
            splitcx::write_report({row}, cfg.format, cfg.out_path);
        } catch (...) {
        }
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
