#pragma once

#include <string>
#include <vector>

#include "splitcx/contour.hpp"
#include "splitcx/report.hpp"

// Named experiment suites behind the CLI. Each suite runs its checks, emits
// one ReportRow per case or per schedule point, and reports an overall pass
// flag. Pass thresholds are embedded in the experiment id strings so report
// files are self-describing.

namespace splitcx {

struct ExperimentConfig {
    std::string command = "reconstruct";
    double R = 1.0;
    SplitComplex z0{0.3, 0.1};
    // "name[:param]" for f = g, or "fspec/gspec" for distinct characteristic
    // data, e.g. "gaussian/sech", "poly1", "const:0.5"
    std::string family = "gaussian/sech";
    LimitSchedule schedule;
    QuadratureConfig quad;
    std::string window_spec;  // "bump:RADIUS", empty for none
    unsigned seed = 42;
    bool timing = true;  // false zeroes wall_time_s for byte-stable reports
    std::string format = "csv";
    std::string out_path;  // empty writes to stdout
};

struct ExperimentResult {
    std::vector<ReportRow> rows;
    bool pass = true;
    std::string summary;
};

CharacteristicData make_family(const std::string& spec);
WindowProfile make_window(const std::string& spec);

// dispatch on config.command:
//   verify-algebra | verify-solutions | green-check | poisson-check |
//   reconstruct | sweep
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace splitcx
