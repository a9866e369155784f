#pragma once

#include "striplab/util.hpp"

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

namespace striplab {

/// The two centers t with |z - t| = 1 of the unit circles through a point of
/// the open strip |Im z| < 1. Throws std::domain_error for |Im z| >= 1.
std::pair<double, double> tangent_centers(cplx z);

/// Coarea density lambda(y) for the sliding unit circle; identically 1.
/// Throws std::domain_error for |y| >= 1.
double lambda_factor(double y);

/// Truncated discretization of the strip S = {|Im z| < 1}.
///
/// x-nodes are uniform on [-(M+pad), M+pad]; y-nodes are y = sin(phi) for
/// midpoint phi-nodes on (-pi/2, pi/2), which keeps |y| < 1 strictly and
/// regularizes the (1-y^2)^-alpha endpoint singularity. Per-node quadrature
/// weights represent lambda(y) dx dy / (1-y^2)^alpha; the singular factor is
/// integrated exactly over each phi panel (for alpha = 1/2 this reduces to
/// the plain midpoint rule dx * dphi).
class StripGrid {
  public:
    StripGrid(double M, double pad, int nx, int ny, double alpha);

    double M() const { return M_; }
    double pad() const { return pad_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double alpha() const { return alpha_; }
    double beta() const { return alpha_ - 0.5; }

    double x0() const { return xs_[0]; }
    double dx() const { return dx_; }
    double dphi() const { return dphi_; }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    const std::vector<double>& phis() const { return phis_; }
    /// Exact panel mass of cos^{1-2 alpha} over phi-panel j, times lambda.
    const std::vector<double>& phi_masses() const { return phi_masses_; }

    std::size_t size() const { return (std::size_t)nx_ * ny_; }
    std::size_t index(int ix, int iy) const { return (std::size_t)iy * nx_ + ix; }
    cplx node(int ix, int iy) const { return {xs_[ix], ys_[iy]}; }
    cplx node(std::size_t k) const { return node((int)(k % nx_), (int)(k / nx_)); }

    /// Weight of node k for the measure lambda(y) dx dy / (1-y^2)^alpha.
    double weight(std::size_t k) const { return dx_ * phi_masses_[k / nx_]; }
    /// Weight of node k for the coarea measure lambda(y) dx dy / sqrt(1-y^2)
    /// (independent of alpha; exact midpoint masses in (x, phi) variables).
    double coarea_weight(std::size_t k) const {
        (void)k;
        return dx_ * dphi_;
    }

    /// True if node k lies in the reported region |x| <= M. Diagnostics and
    /// report norms are restricted to it; the pad band only feeds operators.
    bool reported(std::size_t k) const { return reported_[k]; }
    const std::vector<char>& reported_mask() const { return reported_; }

    /// Sum of weights over reported nodes (for normalizations).
    double reported_mass() const { return reported_mass_; }

  private:
    double M_, pad_, alpha_, dx_, dphi_;
    int nx_, ny_;
    std::vector<double> xs_, ys_, phis_, phi_masses_;
    std::vector<char> reported_;
    double reported_mass_ = 0.0;
};

/// Complex samples on a StripGrid.
struct GridFunction {
    std::shared_ptr<const StripGrid> grid;
    Eigen::VectorXcd values;

    GridFunction() = default;
    explicit GridFunction(std::shared_ptr<const StripGrid> g)
        : grid(std::move(g)), values(Eigen::VectorXcd::Zero((Eigen::Index)grid->size())) {}

    static GridFunction sample(std::shared_ptr<const StripGrid> g,
                               const std::function<cplx(cplx)>& f);
};

/// Weighted L^2 inner product over the reported region.
cplx strip_inner(const GridFunction& f, const GridFunction& g);
double strip_norm(const GridFunction& f);
/// Same over the full padded grid (used for truncated-mass estimates).
double strip_norm_full(const GridFunction& f);

/// Fraction ||f||^2 outside the reported region relative to the whole grid.
double truncated_mass_fraction(const GridFunction& f);

/// One sliding circle C_t: uniform midpoint angle nodes, the boundary weight
/// (1-y^2)^-beta = |cos theta|^-2beta sampled at the nodes, and quadrature
/// weights for ds/(1-y^2)^beta.
///
/// The quadrature weights are Fourier product-integration weights: the unique
/// trigonometric-polynomial weights on the uniform nodes that integrate
/// e^{i k theta} |cos theta|^-2beta exactly (to moment accuracy) for all
/// |k| <= n_theta/2 - 1. For beta = 0 they reduce to the plain midpoint rule
/// 2 pi / n_theta.
struct CircleSlice {
    double t = 0.0;
    double beta = 0.0;
    int n_theta = 0;
    std::vector<double> thetas;
    std::vector<double> boundary_weight;
    std::vector<double> quad;

    cplx point(int j) const { return {t + std::cos(thetas[j]), std::sin(thetas[j])}; }
};

/// Builds the angle nodes and weights for C_t. Throws std::invalid_argument
/// if a node collides with the weight singularity at theta = +-pi/2 (happens
/// for n_theta = 2 mod 4); choose another n_theta.
CircleSlice circle_nodes(double t, int n_theta, double beta);

std::shared_ptr<const StripGrid> build_strip_grid(double M, double pad, int nx, int ny,
                                                  double alpha);

struct CoareaResult {
    double lhs;             // grid quadrature of f lambda / sqrt(1-y^2)
    double rhs;             // nested quadrature over t of the half-circle line integrals
    double residual;        // |lhs - rhs|
    double truncated_mass;  // estimated |f| mass fraction outside |x| <= M
};

/// Checks the coarea identity for a function given by a closed-form evaluator
/// (real part is compared; the identity is linear so this loses nothing for
/// the test battery). n_t and n_theta control the nested rhs quadrature.
CoareaResult verify_coarea(const GridFunction& f, const std::function<cplx(cplx)>& eval,
                           int n_t = 0, int n_theta = 0);

/// Variant for bare grid data: the rhs restriction uses bicubic interpolation,
/// so the residual is limited by interpolation accuracy.
CoareaResult verify_coarea(const GridFunction& f, int n_t = 0, int n_theta = 0);

} // namespace striplab
