#include "striplab/szego.hpp"
#include "striplab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace striplab {

std::vector<double> weight_moments(double beta, int K) {
    if (!(beta >= 0.0 && beta < 0.5))
        throw std::invalid_argument("weight_moments: beta must lie in [0, 1/2)");
    if (K < 0) throw std::invalid_argument("weight_moments: K must be >= 0");
    std::vector<double> c(K + 1, 0.0);
    if (beta == 0.0) {
        c[0] = 2 * kPi;
        return c;
    }
    // c_{2m} = 4 (-1)^m \int_0^{pi/2} cos(2 m s) (sin s)^{-2 beta} ds, odd k vanish.
    // Quadrant substitution s = pi/2 - theta already applied; the remaining
    // endpoint singularity (sin s)^{-2 beta} at s = 0 is handled by the
    // substitution s = u^2 plus a geometrically graded composite rule, so the
    // integrand behaves like u^{1 - 4 beta} near 0.
    for (int k = 0; k <= K; k += 2) {
        int m = k / 2;
        auto f = [&](double u) {
            double s = u * u;
            return std::cos(2.0 * m * s) * std::pow(std::sin(s), -2.0 * beta) * 2.0 * u;
        };
        double U = std::sqrt(kPi / 2);
        // resolve the oscillation cos(2 m u^2) on the outer panels
        int order = 24;
        int osc_panels = std::max(8, m / 2);
        double split = U / 2;
        double inner = graded_gl_toward(f, 0.0, split, 200, order);
        double outer = composite_gl(f, split, U, osc_panels, order);
        c[k] = 4.0 * ((m % 2 == 0) ? 1.0 : -1.0) * (inner + outer);
    }
    return c;
}

double weight_moment_gamma(double beta, int k) {
    if (k % 2 != 0) return 0.0;
    int m = std::abs(k) / 2;
    // c_{2m} = 2^{1+2b} pi / (1-2b) * Gamma(2-2b) / (Gamma(1-b+m) Gamma(1-b-m))
    double b = beta;
    double lg_num = std::lgamma(2.0 - 2.0 * b);
    double gp = std::tgamma(1.0 - b + m);
    // Gamma(1-b-m) via reflection when the argument is negative.
    double arg = 1.0 - b - m;
    double gm;
    if (arg > 0) {
        gm = std::tgamma(arg);
    } else {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        gm = kPi / (std::sin(kPi * arg) * std::tgamma(1.0 - arg));
    }
    return std::pow(2.0, 1.0 + 2.0 * b) * kPi / (1.0 - 2.0 * b) * std::exp(lg_num) / (gp * gm);
}

SzegoSolver::SzegoSolver(double beta, int N, double cond_limit) : beta_(beta), N_(N) {
    if (!(beta >= 0.0 && beta < 0.5))
        throw std::invalid_argument("SzegoSolver: beta must lie in [0, 1/2)");
    if (N < 0) throw std::invalid_argument("SzegoSolver: N must be >= 0");
    c_ = weight_moments(beta, N);
    gram_.resize(N + 1, N + 1);
    for (int m = 0; m <= N; ++m)
        for (int n = 0; n <= N; ++n) gram_(m, n) = c_[std::abs(m - n)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
    if (lo <= 0)
        throw std::runtime_error("SzegoSolver: Gram matrix not positive definite");
    cond_ = hi / lo;
    if (cond_ > cond_limit)
        throw std::runtime_error("SzegoSolver: Gram condition estimate " + std::to_string(cond_) +
                                 " exceeds limit " + std::to_string(cond_limit) +
                                 " (beta too close to 1/2 for this N)");
    ldlt_.compute(gram_);
}

Eigen::VectorXcd SzegoSolver::solve(const Eigen::VectorXcd& b) const {
    Eigen::VectorXcd out(b.size());
    Eigen::VectorXd re = ldlt_.solve(b.real());
    Eigen::VectorXd im = ldlt_.solve(b.imag());
    out.real() = re;
    out.imag() = im;
    return out;
}

HardyCoeffs project_boundary(const Eigen::VectorXcd& g, const CircleSlice& slice,
                             const SzegoSolver& solver) {
    int n = slice.n_theta;
    if ((int)g.size() != n) throw std::invalid_argument("project_boundary: sample count mismatch");
    if (std::abs(slice.beta - solver.beta()) > 1e-14)
        throw std::invalid_argument("project_boundary: slice/solver beta mismatch");
    int N = solver.N();
    if (!(N < n / 2)) throw std::invalid_argument("project_boundary: need N < n_theta/2");
    if (!g.allFinite()) throw std::invalid_argument("project_boundary: samples not finite");
    // b_m = sum_j g_j e^{-i m theta_j} quad_j
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(N + 1);
    for (int j = 0; j < n; ++j) {
        cplx gw = g[j] * slice.quad[j];
        cplx e = std::polar(1.0, -slice.thetas[j]);
        cplx p = 1.0;
        for (int m = 0; m <= N; ++m) {
            b[m] += gw * p;
            p *= e;
        }
    }
    HardyCoeffs h;
    h.a = solver.solve(b);
    return h;
}

HardyCoeffs fourier_truncate(const Eigen::VectorXcd& g, const CircleSlice& slice, int N) {
    int n = slice.n_theta;
    if ((int)g.size() != n) throw std::invalid_argument("fourier_truncate: sample count mismatch");
    if (!(N < n / 2)) throw std::invalid_argument("fourier_truncate: need N < n_theta/2");
    HardyCoeffs h;
    h.a = Eigen::VectorXcd::Zero(N + 1);
    for (int m = 0; m <= N; ++m) {
        cplx s = 0.0;
        for (int j = 0; j < n; ++j) s += g[j] * std::polar(1.0, -m * slice.thetas[j]);
        h.a[m] = s / (double)n;
    }
    return h;
}

cplx evaluate_hardy(const HardyCoeffs& coeffs, double t, cplx z) {
    cplx w = z - t;
    if (std::abs(w) > 1.0 + 1e-12)
        throw std::domain_error("evaluate_hardy: point outside the closed disc |z - t| <= 1");
    cplx acc = 0.0;
    for (int m = coeffs.degree(); m >= 0; --m) acc = acc * w + coeffs.a[m];
    return acc;
}

cplx circle_inner(const Eigen::VectorXcd& g1, const Eigen::VectorXcd& g2,
                  const CircleSlice& slice) {
    if (g1.size() != g2.size() || (int)g1.size() != slice.n_theta)
        throw std::invalid_argument("circle_inner: size mismatch with slice");
    cplx s = 0.0;
    for (int j = 0; j < slice.n_theta; ++j) s += g1[j] * std::conj(g2[j]) * slice.quad[j];
    return s;
}

Eigen::VectorXcd hardy_samples(const HardyCoeffs& coeffs, const CircleSlice& slice) {
    Eigen::VectorXcd out(slice.n_theta);
    for (int j = 0; j < slice.n_theta; ++j) {
        cplx e = std::polar(1.0, slice.thetas[j]);
        cplx acc = 0.0;
        for (int m = coeffs.degree(); m >= 0; --m) acc = acc * e + coeffs.a[m];
        out[j] = acc;
    }
    return out;
}

} // namespace striplab
