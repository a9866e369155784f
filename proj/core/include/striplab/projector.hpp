#pragma once

#include "striplab/geometry.hpp"
#include "striplab/interpolation.hpp"
#include "striplab/report.hpp"
#include "striplab/szego.hpp"

#include <Eigen/Dense>
#include <optional>

namespace striplab {

/// Discrete weighted L^2 norm of the Cauchy-Riemann derivative
/// dbar f = (d/dx + i d/dy) f / 2 over interior reported nodes, normalized by
/// ||f|| on the same node set. Central differences: uniform in x, 3-point
/// nonuniform in y (exact on affine samples).
double cr_residual(const GridFunction& f);

/// The averaged Szego operator on the strip: at each node z, restrict f to
/// the two unit circles through z, project each restriction onto its Hardy
/// span in L^2(C_t, ds/(1-y^2)^beta), evaluate both projections at z, and
/// average. beta = alpha - 1/2 comes from the grid.
class StripProjector {
  public:
    StripProjector(std::shared_ptr<const StripGrid> grid, int N, int n_theta,
                   InterpScheme scheme = InterpScheme::Biquintic);

    const StripGrid& grid() const { return *grid_; }
    std::shared_ptr<const StripGrid> grid_ptr() const { return grid_; }
    int N() const { return N_; }
    int n_theta() const { return n_theta_; }
    InterpScheme scheme() const { return scheme_; }
    const CircleSlice& slice() const { return slice_; }
    const SzegoSolver& solver() const { return solver_; }

    /// True if some circle through some grid node exits the padded region,
    /// i.e. zero extension of f participates somewhere.
    bool uses_zero_extension() const { return uses_zero_extension_; }

    GridFunction apply(const GridFunction& f) const;

    /// Dense matrix of apply() on nodal values. Throws std::length_error above
    /// the memory guard (default 5000 nodes).
    Eigen::MatrixXcd assemble_matrix(std::size_t max_nodes = 5000) const;

  private:
    std::shared_ptr<const StripGrid> grid_;
    int N_, n_theta_;
    InterpScheme scheme_;
    CircleSlice slice_; // translation-invariant template (t = 0)
    SzegoSolver solver_;
    GridSampler sampler_;
    // Per y-row and side, the length-n_theta vector w with
    // (T f)(z) = w . samples; depends only on the row through theta_z.
    Eigen::MatrixXcd eval_left_, eval_right_; // (ny, n_theta)
    // phi-direction stencils per sample angle (same for every node)
    std::vector<std::array<int, kMaxStencil>> phi_rows_;
    std::vector<std::array<double, kMaxStencil>> phi_w_;
    bool uses_zero_extension_ = false;

    void build_eval_vectors();
};

/// Result of the fixed-point iteration pi^n f.
struct IterationResult {
    GridFunction limit;
    ConvergenceReport report;
};

struct IterateOptions {
    int max_iter = 500;
    double stop_tol = 1e-8;
    bool record_cr = true;
};

IterationResult iterate_to_bergman(const StripProjector& op, const GridFunction& f,
                                   const IterateOptions& opts = {});

/// Orthogonality defects <f - L, h_j> against a library of holomorphic atoms,
/// plus the normalized magnitudes |<f - L, h_j>| / (||f|| ||h_j||).
struct DefectReport {
    std::vector<cplx> raw;
    std::vector<double> normalized;
};
DefectReport bergman_defect(const GridFunction& f, const GridFunction& limit,
                            const std::vector<GridFunction>& atoms);

/// Spectrum of the metric-symmetrized dense operator. Eigenvalues ascending.
struct SpectrumResult {
    Eigen::VectorXd eigenvalues;
    std::vector<GridFunction> top_vectors; // k largest, mapped back to the grid
    std::vector<double> top_cr_residuals;
};
SpectrumResult spectrum_pi(const StripProjector& op, int k, std::size_t max_nodes = 5000);

/// Same, from an already assembled matrix.
SpectrumResult spectrum_of_matrix(const Eigen::MatrixXcd& A,
                                  std::shared_ptr<const StripGrid> grid, int k);

/// Commutator diagnostics with the parity operators f(z) -> f(-z) and
/// f(z) -> f(conj z) on a test function: ||pi(Pf) - P(pi f)|| / ||f||.
/// Reported, never asserted.
struct ParityCommutators {
    double point_reflection;
    double conjugation;
};
ParityCommutators parity_commutators(const StripProjector& op, const GridFunction& f);

} // namespace striplab
