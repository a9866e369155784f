#pragma once

#include "striplab/report.hpp"
#include "striplab/util.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace striplab {

/// One circle of the family: center c(s) = -eps s^2 (real) and radius
/// r(s) = s sqrt(1 - s^2 + eps^2 s^2), for 0 < s < s_max = (1-eps^2)^{-1/2}.
std::pair<double, double> circle_of(double s, double eps);

/// The two circle parameters through an interior point: roots u = s^2 of
/// u^2 + (2 eps Re(zeta) - 1) u + |zeta|^2 = 0. Throws std::domain_error when
/// the roots are complex or out of range ("outside G") and when the
/// discriminant vanishes ("boundary of G").
std::pair<double, double> circles_through(cplx zeta, double eps);

/// Product (s, psi) grid over (0, s_max) x [-pi, pi) with midpoint nodes.
/// Nodes whose two covering circles nearly coincide (quadratic discriminant
/// below delta_disc) are flagged inactive: they stay in storage and in the
/// quadrature, but are excluded from convergence and consistency diagnostics.
class DiscFamily {
  public:
    DiscFamily(double eps, int n_s, int n_psi, double delta_disc = 1e-3);

    double eps() const { return eps_; }
    double s_max() const { return s_max_; }
    int n_s() const { return n_s_; }
    int n_psi() const { return n_psi_; }
    double delta_disc() const { return delta_disc_; }
    double ds() const { return ds_; }
    double dpsi() const { return dpsi_; }

    const std::vector<double>& s_nodes() const { return s_; }
    const std::vector<double>& psi_nodes() const { return psi_; }

    std::size_t size() const { return (std::size_t)n_s_ * n_psi_; }
    std::size_t index(int is, int ipsi) const { return (std::size_t)is * n_psi_ + ipsi; }
    cplx point(int is, int ipsi) const {
        auto [c, r] = circle_[is];
        return cplx(c + r * std::cos(psi_[ipsi]), r * std::sin(psi_[ipsi]));
    }
    std::pair<double, double> circle(int is) const { return circle_[is]; }

    /// Quadrature weight of node k for d omega = kappa s ds dpsi (kappa = 4 pi;
    /// see disc_inner). Uniform per s-row.
    double weight(std::size_t k) const { return w_[k / n_psi_]; }
    bool active(std::size_t k) const { return active_[k]; }

    /// Share of the measure carried by inactive nodes.
    double inactive_mass_fraction() const { return inactive_mass_; }

  private:
    double eps_, s_max_, delta_disc_, ds_, dpsi_;
    int n_s_, n_psi_;
    std::vector<double> s_, psi_, w_;
    std::vector<std::pair<double, double>> circle_;
    std::vector<char> active_;
    double inactive_mass_ = 0.0;
};

/// Samples on a DiscFamily grid.
struct DiscGridFunction {
    std::shared_ptr<const DiscFamily> family;
    Eigen::VectorXcd values;

    DiscGridFunction() = default;
    explicit DiscGridFunction(std::shared_ptr<const DiscFamily> f)
        : family(std::move(f)), values(Eigen::VectorXcd::Zero((Eigen::Index)family->size())) {}

    static DiscGridFunction sample(std::shared_ptr<const DiscFamily> f,
                                   const std::function<cplx(cplx)>& fn);
};

/// Pushdown inner product <f, g> = kappa sum f conj(g) s ds dpsi with
/// kappa = 4 pi, the normalization of dV = dz/(z + eps conj w) ^ dw ^ dconj w
/// fixed by the Monte Carlo oracle (see tests). Full grid, active or not.
cplx disc_inner(const DiscGridFunction& f, const DiscGridFunction& g);
double disc_norm(const DiscGridFunction& f);
/// Norm restricted to active nodes (diagnostics).
double disc_norm_active(const DiscGridFunction& f);

/// Monte Carlo estimate of int_{dD} F(z w) dV over the hypersurface
/// rho = |z|^2+|w|^2-1+eps(zw+conj(zw)) = 0, using the exact slice
/// parametrization (w, phi) -> z = -eps conj(w) + R(|w|) e^{i phi}.
/// Deterministic for a fixed seed.
double mc_boundary_integral(const std::function<double(cplx)>& F, double eps,
                            std::size_t samples, std::uint64_t seed);

/// Redundancy mismatch: every grid point zeta lies on a second circle; the
/// value stored at (s, psi) is compared with the interpolated value at the
/// partner coordinates. Max over active nodes, normalized by the sup of |f|.
double redundancy_mismatch(const DiscGridFunction& f);

/// The averaged-Szego operator on G: at each grid point, restrict f to the
/// two circles through it, project both restrictions with the plain
/// (unweighted) Szego projection after centering/scaling to the unit circle,
/// evaluate at the point, and average. N is the Hardy truncation degree.
class DiscProjector {
  public:
    DiscProjector(std::shared_ptr<const DiscFamily> family, int N);

    const DiscFamily& family() const { return *family_; }
    std::shared_ptr<const DiscFamily> family_ptr() const { return family_; }
    int N() const { return N_; }

    DiscGridFunction apply(const DiscGridFunction& f) const;

  private:
    std::shared_ptr<const DiscFamily> family_;
    int N_;
};

/// Result bundle for the disc iteration.
struct DiscIterationResult {
    DiscGridFunction limit;
    ConvergenceReport report;
};

DiscIterationResult iterate_disc(const DiscProjector& op, const DiscGridFunction& f,
                                 int max_iter = 500, double stop_tol = 1e-8);

/// Discrete CR residual on the curvilinear (s, psi) grid via the exact
/// Jacobian of zeta(s, psi); restricted to active nodes with full stencils.
double disc_cr_residual(const DiscGridFunction& f);

} // namespace striplab
