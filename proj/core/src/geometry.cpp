#include "striplab/geometry.hpp"
#include "striplab/interpolation.hpp"
#include "striplab/quadrature.hpp"
#include "striplab/szego.hpp"

#include <cmath>
#include <stdexcept>

namespace striplab {

std::pair<double, double> tangent_centers(cplx z) {
    double y = z.imag();
    if (std::abs(y) >= 1.0)
        throw std::domain_error("tangent_centers: point outside the open strip (|Im z| >= 1)");
    double r = std::sqrt((1.0 - y) * (1.0 + y));
    return {z.real() - r, z.real() + r};
}

double lambda_factor(double y) {
    if (std::abs(y) >= 1.0) throw std::domain_error("lambda_factor: |y| >= 1");
    return 1.0;
}

StripGrid::StripGrid(double M, double pad, int nx, int ny, double alpha)
    : M_(M), pad_(pad), alpha_(alpha), nx_(nx), ny_(ny) {
    if (!(M > 0)) throw std::invalid_argument("StripGrid: M must be positive");
    if (!(pad >= 2.0)) throw std::invalid_argument("StripGrid: pad must be >= 2");
    if (nx < 4 || ny < 4) throw std::invalid_argument("StripGrid: nx, ny must be >= 4");
    if (!(alpha >= 0.5 && alpha < 1.0))
        throw std::invalid_argument("StripGrid: alpha must lie in [1/2, 1)");

    double L = M + pad;
    xs_.resize(nx);
    dx_ = 2.0 * L / (nx - 1);
    for (int i = 0; i < nx; ++i) xs_[i] = -L + i * dx_;

    dphi_ = kPi / ny;
    phis_.resize(ny);
    ys_.resize(ny);
    phi_masses_.resize(ny);
    for (int j = 0; j < ny; ++j) {
        phis_[j] = -kPi / 2 + (j + 0.5) * dphi_;
        ys_[j] = std::sin(phis_[j]);
    }
    // Exact panel masses of cos^{1-2 alpha}(phi) * lambda(sin phi). The
    // exponent 1 - 2 alpha lies in (-1, 0], so the endpoint panels carry an
    // integrable singularity; a graded rule toward the singular end keeps the
    // mass exact there. For alpha = 1/2 every mass is exactly dphi.
    double expo = 1.0 - 2.0 * alpha;
    for (int j = 0; j < ny; ++j) {
        double a = phis_[j] - dphi_ / 2, b = phis_[j] + dphi_ / 2;
        if (std::abs(expo) < 1e-15) {
            phi_masses_[j] = dphi_ * lambda_factor(ys_[j]);
            continue;
        }
        auto f = [&](double p) { return std::pow(std::cos(p), expo) * lambda_factor(std::sin(p)); };
        double m;
        if (j == 0) {
            // singular at phi = -pi/2: integrate in u = phi + pi/2 graded toward 0
            auto g = [&](double u) { return std::pow(std::sin(u), expo); };
            m = graded_gl_toward(g, 0.0, b + kPi / 2) - graded_gl_toward(g, 0.0, a + kPi / 2);
        } else if (j == ny - 1) {
            auto g = [&](double u) { return std::pow(std::sin(u), expo); };
            m = graded_gl_toward(g, 0.0, kPi / 2 - a) - graded_gl_toward(g, 0.0, kPi / 2 - b);
        } else {
            m = composite_gl(f, a, b, 4);
        }
        phi_masses_[j] = m;
    }

    reported_.resize(size());
    for (std::size_t k = 0; k < size(); ++k) {
        reported_[k] = std::abs(xs_[k % nx_]) <= M_ + 1e-12 ? 1 : 0;
        if (reported_[k]) reported_mass_ += weight(k);
    }
}

GridFunction GridFunction::sample(std::shared_ptr<const StripGrid> g,
                                  const std::function<cplx(cplx)>& f) {
    GridFunction out(std::move(g));
    const StripGrid& gr = *out.grid;
    for (std::size_t k = 0; k < gr.size(); ++k) out.values[(Eigen::Index)k] = f(gr.node(k));
    return out;
}

cplx strip_inner(const GridFunction& f, const GridFunction& g) {
    if (f.grid != g.grid) throw std::invalid_argument("strip_inner: grid mismatch");
    const StripGrid& gr = *f.grid;
    cplx s = 0.0;
    for (std::size_t k = 0; k < gr.size(); ++k)
        if (gr.reported(k))
            s += gr.weight(k) * f.values[(Eigen::Index)k] * std::conj(g.values[(Eigen::Index)k]);
    return s;
}

double strip_norm(const GridFunction& f) {
    const StripGrid& gr = *f.grid;
    double s = 0.0;
    for (std::size_t k = 0; k < gr.size(); ++k)
        if (gr.reported(k)) s += gr.weight(k) * std::norm(f.values[(Eigen::Index)k]);
    return std::sqrt(s);
}

double strip_norm_full(const GridFunction& f) {
    const StripGrid& gr = *f.grid;
    double s = 0.0;
    for (std::size_t k = 0; k < gr.size(); ++k)
        s += gr.weight(k) * std::norm(f.values[(Eigen::Index)k]);
    return std::sqrt(s);
}

double truncated_mass_fraction(const GridFunction& f) {
    double full = strip_norm_full(f), rep = strip_norm(f);
    double full2 = full * full, rep2 = rep * rep;
    if (full2 <= 0) return 0.0;
    return (full2 - rep2) / full2;
}

CircleSlice circle_nodes(double t, int n_theta, double beta) {
    if (n_theta < 8) throw std::invalid_argument("circle_nodes: n_theta must be >= 8");
    if (!(beta >= 0.0 && beta < 0.5))
        throw std::invalid_argument("circle_nodes: beta must lie in [0, 1/2)");
    CircleSlice s;
    s.t = t;
    s.beta = beta;
    s.n_theta = n_theta;
    s.thetas.resize(n_theta);
    s.boundary_weight.resize(n_theta);
    s.quad.resize(n_theta);
    double dth = 2 * kPi / n_theta;
    for (int j = 0; j < n_theta; ++j) {
        double th = -kPi + (j + 0.5) * dth;
        s.thetas[j] = th;
        double c = std::cos(th);
        if (std::abs(c) < 1e-9)
            throw std::invalid_argument(
                "circle_nodes: node collides with the weight singularity at +-pi/2; "
                "offset the nodes by choosing a different n_theta");
        s.boundary_weight[j] = std::pow(std::abs(c), -2.0 * beta);
    }
    if (beta == 0.0) {
        for (int j = 0; j < n_theta; ++j) s.quad[j] = dth;
        return s;
    }
    // Fourier product-integration weights: w_j = (1/n) sum_{|m|<=K} c_m e^{i m theta_j}
    // reproduces every moment c_k, |k| <= K = n/2 - 1, of the boundary weight.
    int K = n_theta / 2 - 1;
    std::vector<double> c = weight_moments(beta, K);
    for (int j = 0; j < n_theta; ++j) {
        double w = c[0];
        for (int m = 1; m <= K; ++m) w += 2.0 * c[m] * std::cos(m * s.thetas[j]);
        s.quad[j] = w / n_theta;
    }
    return s;
}

std::shared_ptr<const StripGrid> build_strip_grid(double M, double pad, int nx, int ny,
                                                  double alpha) {
    return std::make_shared<const StripGrid>(M, pad, nx, ny, alpha);
}

namespace {
CoareaResult coarea_impl(const GridFunction& f, const std::function<cplx(cplx)>& eval, int n_t,
                         int n_theta) {
    const StripGrid& g = *f.grid;
    if (n_t <= 0) n_t = 2 * g.nx();
    if (n_theta <= 0) n_theta = 4 * g.ny();

    // lhs: grid quadrature of f(z) lambda(y) / sqrt(1 - y^2) dx dy, which in
    // the (x, phi) variables is just the midpoint rule with weights dx dphi.
    cplx lhs = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k)
        lhs += g.coarea_weight(k) * lambda_factor(g.ys()[k / g.nx()]) * f.values[(Eigen::Index)k];

    // rhs: int dt over circle centers of the right half-circle line integral.
    double L = g.M() + g.pad();
    double t_lo = -L - 1.0, t_hi = L + 1.0;
    double dt = (t_hi - t_lo) / n_t;
    double dth = kPi / n_theta;
    cplx rhs = 0.0;
    for (int i = 0; i < n_t; ++i) {
        double t = t_lo + (i + 0.5) * dt;
        cplx line = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            double th = -kPi / 2 + (j + 0.5) * dth;
            line += eval(cplx(t + std::cos(th), std::sin(th)));
        }
        rhs += line * dth * dt;
    }

    CoareaResult r;
    r.lhs = lhs.real();
    r.rhs = rhs.real();
    r.residual = std::abs(lhs - rhs);
    r.truncated_mass = truncated_mass_fraction(f);
    return r;
}
} // namespace

CoareaResult verify_coarea(const GridFunction& f, const std::function<cplx(cplx)>& eval, int n_t,
                           int n_theta) {
    return coarea_impl(f, eval, n_t, n_theta);
}

CoareaResult verify_coarea(const GridFunction& f, int n_t, int n_theta) {
    GridSampler interp(*f.grid, InterpScheme::Biquintic);
    const Eigen::VectorXcd& v = f.values;
    auto eval = [&](cplx z) { return interp.sample(v, z.real(), z.imag()); };
    return coarea_impl(f, eval, n_t, n_theta);
}

} // namespace striplab
