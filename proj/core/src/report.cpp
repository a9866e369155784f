#include "striplab/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace striplab {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit_series_csv(const std::string& path, const ConvergenceReport& r) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("emit_series_csv: cannot open " + path);
    os << "# striplab series v1; columns: n,norm,delta,cr_residual\n";
    os << "n,norm,delta,cr_residual\n";
    for (const auto& row : r.rows)
        os << row.n << ',' << format_double(row.norm) << ',' << format_double(row.delta) << ','
           << format_double(row.cr_residual) << '\n';
}

void emit_pairs_csv(const std::string& path, const std::vector<PairRow>& rows) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("emit_pairs_csv: cannot open " + path);
    os << "# striplab pairs v1; columns: left,right,modulus,normalized\n";
    os << "left,right,modulus,normalized\n";
    for (const auto& r : rows)
        os << r.left << ',' << r.right << ',' << format_double(r.modulus) << ','
           << format_double(r.normalized) << '\n';
}

void emit_summary_json(const std::string& path, const std::string& experiment,
                       const std::map<std::string, std::string>& params,
                       const std::vector<Check>& checks, const ConvergenceReport* report,
                       int exit_status) {
    nlohmann::ordered_json j;
    j["schema"] = "striplab-summary/1";
    j["experiment"] = experiment;
    j["params"] = params;
    j["exit_status"] = exit_status;
    nlohmann::ordered_json jc = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        jc.push_back({{"name", c.name},
                      {"value", c.value},
                      {"threshold", c.threshold},
                      {"pass", c.pass}});
    }
    j["checks"] = jc;
    if (report) {
        nlohmann::ordered_json jr;
        jr["converged"] = report->converged;
        jr["iterations"] = report->iterations;
        jr["stop_tol"] = report->stop_tol;
        jr["input_norm"] = report->input_norm;
        jr["truncated_mass"] = report->truncated_mass;
        jr["truncation_warning"] = report->truncation_warning;
        jr["interp"] = report->interp;
        if (!report->orthogonality_defects.empty())
            jr["orthogonality_defects"] = report->orthogonality_defects;
        if (!report->top_eigenvalues.empty()) {
            jr["top_eigenvalues"] = report->top_eigenvalues;
            jr["top_cr_residuals"] = report->top_cr_residuals;
        }
        if (!report->rows.empty()) {
            jr["final_norm"] = report->rows.back().norm;
            jr["final_delta"] = report->rows.back().delta;
            jr["final_cr_residual"] = report->rows.back().cr_residual;
        }
        j["report"] = jr;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("emit_summary_json: cannot open " + path);
    os << j.dump(2) << '\n';
}

} // namespace striplab
