#include "splitcx/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace splitcx {

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const ReportRow& r : rows) {
        out << r.experiment << ',' << format_g17(r.epsilon) << ',' << format_g17(r.S) << ','
            << format_g17(r.est_re_plus) << ',' << format_g17(r.est_im_plus) << ','
            << format_g17(r.est_re_minus) << ',' << format_g17(r.est_im_minus) << ','
            << format_g17(r.ref_plus) << ',' << format_g17(r.ref_minus) << ','
            << format_g17(r.abs_error) << ',' << format_g17(r.imag_residual) << ',' << r.evals
            << ',' << format_g17(r.wall_time_s) << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<ReportRow>& rows) {
    // emitted by hand: %.17g for every floating field, fixed key order
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& r = rows[i];
        out << "  {\"experiment\": " << nlohmann::json(r.experiment).dump()
            << ", \"epsilon\": " << format_g17(r.epsilon) << ", \"S\": " << format_g17(r.S)
            << ", \"est_re_plus\": " << format_g17(r.est_re_plus)
            << ", \"est_im_plus\": " << format_g17(r.est_im_plus)
            << ", \"est_re_minus\": " << format_g17(r.est_re_minus)
            << ", \"est_im_minus\": " << format_g17(r.est_im_minus)
            << ", \"ref_plus\": " << format_g17(r.ref_plus)
            << ", \"ref_minus\": " << format_g17(r.ref_minus)
            << ", \"abs_error\": " << format_g17(r.abs_error)
            << ", \"imag_residual\": " << format_g17(r.imag_residual) << ", \"evals\": " << r.evals
            << ", \"wall_time_s\": " << format_g17(r.wall_time_s) << "}";
        out << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
    return out.str();
}

std::vector<ReportRow> rows_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<ReportRow> rows;
    for (const auto& item : doc) {
        ReportRow r;
        r.experiment = item.at("experiment").get<std::string>();
        r.epsilon = item.at("epsilon").get<double>();
        r.S = item.at("S").get<double>();
        r.est_re_plus = item.at("est_re_plus").get<double>();
        r.est_im_plus = item.at("est_im_plus").get<double>();
        r.est_re_minus = item.at("est_re_minus").get<double>();
        r.est_im_minus = item.at("est_im_minus").get<double>();
        r.ref_plus = item.at("ref_plus").get<double>();
        r.ref_minus = item.at("ref_minus").get<double>();
        r.abs_error = item.at("abs_error").get<double>();
        r.imag_residual = item.at("imag_residual").get<double>();
        r.evals = item.at("evals").get<long>();
        r.wall_time_s = item.at("wall_time_s").get<double>();
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_report(const std::vector<ReportRow>& rows, const std::string& format,
                  const std::string& path) {
    std::string body;
    if (format == "csv") {
        body = to_csv(rows);
    } else if (format == "json") {
        body = to_json(rows);
    } else {
        throw std::invalid_argument("write_report: format must be csv or json, got " + format);
    }
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_report: cannot open " + path);
    out << body;
    if (!out) throw std::runtime_error("write_report: write failed for " + path);
}

}  // namespace splitcx
