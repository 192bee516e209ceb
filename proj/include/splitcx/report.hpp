#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Machine-readable experiment reports. One row per checked case or per
// (epsilon, S) schedule point. The CSV column order is frozen; JSON emits
// the same fields as an array of flat objects. All floating-point values
// are serialized with %.17g so a written report reparses bit-exactly.

namespace splitcx {

struct ReportRow {
    std::string experiment;  // suite:case:threshold id, no commas
    double epsilon = 0.0;
    double S = 0.0;
    double est_re_plus = 0.0;
    double est_im_plus = 0.0;
    double est_re_minus = 0.0;
    double est_im_minus = 0.0;
    double ref_plus = 0.0;
    double ref_minus = 0.0;
    double abs_error = 0.0;
    double imag_residual = 0.0;
    long evals = 0;
    double wall_time_s = 0.0;
};

inline constexpr const char* kCsvHeader =
    "experiment,epsilon,S,est_re_plus,est_im_plus,est_re_minus,est_im_minus,"
    "ref_plus,ref_minus,abs_error,imag_residual,evals,wall_time_s";

std::string format_g17(double value);

std::string to_csv(const std::vector<ReportRow>& rows);
std::string to_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> rows_from_json(const std::string& text);

// format is "csv" or "json"; empty path writes to stdout
void write_report(const std::vector<ReportRow>& rows, const std::string& format,
                  const std::string& path);

}  // namespace splitcx
