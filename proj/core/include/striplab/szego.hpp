#pragma once

#include "striplab/geometry.hpp"

#include <Eigen/Dense>

namespace striplab {

/// Trigonometric moments c_k = int_{-pi}^{pi} e^{-ik theta} |cos theta|^{-2 beta} dtheta
/// for k = 0..K (c_{-k} = c_k; odd moments vanish by the quarter-turn symmetry
/// of the weight). Computed by singularity-aware quadrature: the quadrant
/// substitution theta = pi/2 - u^2 followed by a geometrically graded
/// composite Gauss-Legendre rule toward the singular endpoint.
/// Relative accuracy ~1e-12 for beta in [0, 1/2).
std::vector<double> weight_moments(double beta, int K);

/// Optional closed-form cross-check via Gamma functions:
/// c_{2m} = 2^{1+2b} pi / (1-2b) * Gamma(2-2b) / (Gamma(1-b+m) Gamma(1-b-m)).
double weight_moment_gamma(double beta, int k);

/// Hardy coefficients a_0..a_N of sum a_n e^{i n theta}.
struct HardyCoeffs {
    Eigen::VectorXcd a;
    int degree() const { return (int)a.size() - 1; }
};

/// Weighted Szego projection onto span{e^{i n theta}: 0 <= n <= N} in
/// L^2(C_t, ds/(1-y^2)^beta), via the Toeplitz Gram system G a = b with
/// G_{mn} = c_{m-n}. One solver per beta serves every t by translation
/// invariance. Immutable after construction.
class SzegoSolver {
  public:
    SzegoSolver(double beta, int N, double cond_limit = 1e12);

    double beta() const { return beta_; }
    int N() const { return N_; }
    const std::vector<double>& moments() const { return c_; } // c_0..c_N
    double condition_estimate() const { return cond_; }
    const Eigen::MatrixXd& gram() const { return gram_; }

    /// Solve G a = b.
    Eigen::VectorXcd solve(const Eigen::VectorXcd& b) const;

  private:
    double beta_;
    int N_;
    std::vector<double> c_;
    Eigen::MatrixXd gram_;
    Eigen::LDLT<Eigen::MatrixXd> ldlt_;
    double cond_ = 0.0;
};

/// Weighted best-Hardy-approximation of boundary samples g on a slice:
/// argmin over a of ||g - sum a_n e^{in theta}|| in the slice quadrature
/// inner product. Requires solver.beta == slice.beta and solver.N < n_theta/2.
HardyCoeffs project_boundary(const Eigen::VectorXcd& g, const CircleSlice& slice,
                             const SzegoSolver& solver);

/// Unweighted fast path (beta = 0): plain Fourier truncation of the samples.
HardyCoeffs fourier_truncate(const Eigen::VectorXcd& g, const CircleSlice& slice, int N);

/// Evaluate sum a_n (z - t)^n for |z - t| <= 1 (throws outside).
cplx evaluate_hardy(const HardyCoeffs& coeffs, double t, cplx z);

/// Weighted boundary inner product sum g1 conj(g2) quad on a slice.
cplx circle_inner(const Eigen::VectorXcd& g1, const Eigen::VectorXcd& g2,
                  const CircleSlice& slice);

/// Boundary samples of the Hardy sum at the slice nodes.
Eigen::VectorXcd hardy_samples(const HardyCoeffs& coeffs, const CircleSlice& slice);

} // namespace striplab
