#pragma once

#include "striplab/util.hpp"

#include <map>
#include <string>
#include <vector>

namespace striplab {

/// One named invariant check surfaced in summary.json.
struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct IterationRow {
    int n = 0;
    double norm = 0.0;
    double delta = 0.0;
    double cr_residual = 0.0;
};

/// Convergence diagnostics of an operator iteration. Serialized to JSON via
/// emit_summary and to CSV via emit_series.
struct ConvergenceReport {
    bool converged = false;
    int iterations = 0;
    double stop_tol = 0.0;
    double input_norm = 0.0;
    double truncated_mass = 0.0;
    bool truncation_warning = false;
    std::string interp;
    std::vector<IterationRow> rows;
    std::vector<double> orthogonality_defects; // normalized |<f - L, h_j>|
    std::vector<double> top_eigenvalues;       // optional spectral summary
    std::vector<double> top_cr_residuals;
};

/// Writes rows as CSV with a header comment line documenting the columns.
void emit_series_csv(const std::string& path, const ConvergenceReport& r);

/// Writes a pairing table (one row per (left, right) battery pair).
struct PairRow {
    std::string left, right;
    double modulus = 0.0;
    double normalized = 0.0;
};
void emit_pairs_csv(const std::string& path, const std::vector<PairRow>& rows);

/// Serializes an experiment summary: parameters, checks, report scalars.
/// Schema-stamped; deterministic for fixed inputs.
void emit_summary_json(const std::string& path, const std::string& experiment,
                       const std::map<std::string, std::string>& params,
                       const std::vector<Check>& checks, const ConvergenceReport* report,
                       int exit_status);

/// Formats a double deterministically (shortest round-trip form).
std::string format_double(double v);

} // namespace striplab
