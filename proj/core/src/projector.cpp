#include "striplab/projector.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace striplab {

double cr_residual(const GridFunction& f) {
    const StripGrid& g = *f.grid;
    int nx = g.nx(), ny = g.ny();
    const auto& ys = g.ys();
    double num = 0.0, den = 0.0;
    for (int iy = 1; iy < ny - 1; ++iy) {
        double dn = ys[iy] - ys[iy - 1], dp = ys[iy + 1] - ys[iy];
        for (int ix = 1; ix < nx - 1; ++ix) {
            std::size_t k = g.index(ix, iy);
            if (!g.reported(k)) continue;
            cplx fx = (f.values[(Eigen::Index)g.index(ix + 1, iy)] -
                       f.values[(Eigen::Index)g.index(ix - 1, iy)]) /
                      (2.0 * g.dx());
            cplx f0 = f.values[(Eigen::Index)k];
            cplx fm = f.values[(Eigen::Index)g.index(ix, iy - 1)];
            cplx fp = f.values[(Eigen::Index)g.index(ix, iy + 1)];
            // 3-point nonuniform central difference, exact on quadratics in y
            cplx fy = (dp / dn * (f0 - fm) + dn / dp * (fp - f0)) / (dn + dp);
            cplx dbar = 0.5 * (fx + cplx(0, 1) * fy);
            double w = g.weight(k);
            num += w * std::norm(dbar);
            den += w * std::norm(f0);
        }
    }
    if (den <= 0) return 0.0;
    return std::sqrt(num / den);
}

StripProjector::StripProjector(std::shared_ptr<const StripGrid> grid, int N, int n_theta,
                               InterpScheme scheme)
    : grid_(std::move(grid)),
      N_(N),
      n_theta_(n_theta),
      scheme_(scheme),
      slice_(circle_nodes(0.0, n_theta, grid_->beta())),
      solver_(grid_->beta(), N),
      sampler_(*grid_, scheme) {
    if (!(N < n_theta / 2)) throw std::invalid_argument("StripProjector: need N < n_theta/2");
    int npts = sampler_.points();
    phi_rows_.resize(n_theta_);
    phi_w_.resize(n_theta_);
    for (int j = 0; j < n_theta_; ++j) {
        double phi = std::asin(std::sin(slice_.thetas[j]));
        sampler_.phi_stencil(phi, phi_rows_[j], phi_w_[j]);
        (void)npts;
    }
    build_eval_vectors();
    double L = grid_->M() + grid_->pad();
    double reach = std::abs(grid_->xs().front()) + 2.0;
    uses_zero_extension_ = reach > L + 0.5 * grid_->dx();
}

void StripProjector::build_eval_vectors() {
    int ny = grid_->ny();
    eval_left_.resize(ny, n_theta_);
    eval_right_.resize(ny, n_theta_);
    for (int iy = 0; iy < ny; ++iy) {
        double y = grid_->ys()[iy];
        double c = std::sqrt((1.0 - y) * (1.0 + y));
        // z - t1 = c + iy, z - t2 = -c + iy; only e^{i theta_z} matters
        double th1 = std::atan2(y, c);
        double th2 = kPi - th1;
        for (int side = 0; side < 2; ++side) {
            double th_z = side == 0 ? th1 : th2;
            Eigen::VectorXcd e(N_ + 1);
            for (int m = 0; m <= N_; ++m) e[m] = std::polar(1.0, m * th_z);
            Eigen::VectorXcd u = solver_.solve(e);
            for (int j = 0; j < n_theta_; ++j) {
                cplx em = std::polar(1.0, -slice_.thetas[j]);
                cplx p = 1.0, acc = 0.0;
                for (int m = 0; m <= N_; ++m) {
                    acc += u[m] * p;
                    p *= em;
                }
                (side == 0 ? eval_left_ : eval_right_)(iy, j) = slice_.quad[j] * acc;
            }
        }
    }
}

GridFunction StripProjector::apply(const GridFunction& f) const {
    if (f.grid.get() != grid_.get())
        throw std::invalid_argument("StripProjector::apply: grid mismatch");
    GridFunction out(grid_);
    const int nx = grid_->nx();
    const int ny = grid_->ny();
    const int n = n_theta_;
    const int npts = sampler_.points();
    const cplx* fv = f.values.data();
    cplx* ov = out.values.data();

    std::vector<double> cos_t(n);
    for (int j = 0; j < n; ++j) cos_t[j] = std::cos(slice_.thetas[j]);

    parallel_for((std::size_t)ny, [&](std::size_t lo, std::size_t hi) {
        std::array<double, kMaxStencil> wx;
        int base;
        for (std::size_t iy = lo; iy < hi; ++iy) {
            double y = grid_->ys()[iy];
            double c = std::sqrt((1.0 - y) * (1.0 + y));
            for (int ix = 0; ix < nx; ++ix) {
                double x = grid_->xs()[ix];
                cplx acc = 0.0;
                for (int side = 0; side < 2; ++side) {
                    double t = side == 0 ? x - c : x + c;
                    const cplx* wv = (side == 0 ? eval_left_ : eval_right_).data() + iy;
                    for (int j = 0; j < n; ++j) {
                        if (!sampler_.x_stencil(t + cos_t[j], base, wx)) continue;
                        cplx sample = 0.0;
                        const auto& prow = phi_rows_[j];
                        const auto& pw = phi_w_[j];
                        for (int b = 0; b < npts; ++b) {
                            const cplx* rowbase = fv + (std::size_t)prow[b] * nx + base;
                            cplx racc = 0.0;
                            for (int a = 0; a < npts; ++a) racc += wx[a] * rowbase[a];
                            sample += pw[b] * racc;
                        }
                        acc += wv[(std::size_t)j * ny] * sample;
                    }
                }
                ov[(std::size_t)iy * nx + ix] = 0.5 * acc;
            }
        }
    });
    return out;
}

Eigen::MatrixXcd StripProjector::assemble_matrix(std::size_t max_nodes) const {
    std::size_t nn = grid_->size();
    if (nn > max_nodes)
        throw std::length_error("assemble_matrix: grid exceeds the dense-matrix memory guard");
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero((Eigen::Index)nn, (Eigen::Index)nn);
    const int nx = grid_->nx();
    const int ny = grid_->ny();
    const int n = n_theta_;
    const int npts = sampler_.points();
    std::vector<double> cos_t(n);
    for (int j = 0; j < n; ++j) cos_t[j] = std::cos(slice_.thetas[j]);

    parallel_for((std::size_t)ny, [&](std::size_t lo, std::size_t hi) {
        std::array<double, kMaxStencil> wx;
        int base;
        for (std::size_t iy = lo; iy < hi; ++iy) {
            double y = grid_->ys()[iy];
            double c = std::sqrt((1.0 - y) * (1.0 + y));
            for (int ix = 0; ix < nx; ++ix) {
                std::size_t row = iy * nx + ix;
                double x = grid_->xs()[ix];
                for (int side = 0; side < 2; ++side) {
                    double t = side == 0 ? x - c : x + c;
                    const Eigen::MatrixXcd& ev = side == 0 ? eval_left_ : eval_right_;
                    for (int j = 0; j < n; ++j) {
                        if (!sampler_.x_stencil(t + cos_t[j], base, wx)) continue;
                        cplx coef = 0.5 * ev((Eigen::Index)iy, j);
                        for (int b = 0; b < npts; ++b) {
                            std::size_t rowbase = (std::size_t)phi_rows_[j][b] * nx + base;
                            cplx cb = coef * phi_w_[j][b];
                            for (int a = 0; a < npts; ++a)
                                A((Eigen::Index)row, (Eigen::Index)(rowbase + a)) += cb * wx[a];
                        }
                    }
                }
            }
        }
    });
    return A;
}

IterationResult iterate_to_bergman(const StripProjector& op, const GridFunction& f,
                                   const IterateOptions& opts) {
    IterationResult res;
    ConvergenceReport& rep = res.report;
    rep.stop_tol = opts.stop_tol;
    rep.input_norm = strip_norm(f);
    rep.truncated_mass = truncated_mass_fraction(f);
    rep.truncation_warning = op.uses_zero_extension() && rep.truncated_mass > 1e-8;
    rep.interp = interp_name(op.scheme());

    GridFunction prev = f;
    double nf = rep.input_norm > 0 ? rep.input_norm : 1.0;
    rep.converged = false;
    for (int it = 1; it <= opts.max_iter; ++it) {
        GridFunction cur = op.apply(prev);
        GridFunction diff(cur);
        diff.values -= prev.values;
        IterationRow row;
        row.n = it;
        row.norm = strip_norm(cur);
        row.delta = strip_norm(diff);
        row.cr_residual = opts.record_cr ? cr_residual(cur) : 0.0;
        rep.rows.push_back(row);
        prev = std::move(cur);
        rep.iterations = it;
        if (row.delta <= opts.stop_tol * nf) {
            rep.converged = true;
            break;
        }
    }
    res.limit = std::move(prev);
    return res;
}

DefectReport bergman_defect(const GridFunction& f, const GridFunction& limit,
                            const std::vector<GridFunction>& atoms) {
    DefectReport out;
    GridFunction diff(f);
    diff.values -= limit.values;
    double nf = strip_norm(f);
    if (nf == 0) nf = 1.0;
    for (const auto& h : atoms) {
        cplx v = strip_inner(diff, h);
        out.raw.push_back(v);
        double nh = strip_norm(h);
        out.normalized.push_back(std::abs(v) / (nf * (nh > 0 ? nh : 1.0)));
    }
    return out;
}

SpectrumResult spectrum_of_matrix(const Eigen::MatrixXcd& A,
                                  std::shared_ptr<const StripGrid> grid, int k) {
    std::size_t nn = grid->size();
    Eigen::VectorXd ws((Eigen::Index)nn);
    for (std::size_t i = 0; i < nn; ++i) ws[(Eigen::Index)i] = std::sqrt(grid->weight(i));
    Eigen::MatrixXcd H = ws.asDiagonal() * A * ws.cwiseInverse().asDiagonal();
    H = 0.5 * (H + H.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    if (es.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver failed");
    SpectrumResult r;
    r.eigenvalues = es.eigenvalues();
    int total = (int)nn;
    for (int i = 0; i < k && i < total; ++i) {
        Eigen::VectorXcd v = es.eigenvectors().col(total - 1 - i);
        GridFunction gf(grid);
        gf.values = v.array() / ws.array().cast<cplx>();
        r.top_cr_residuals.push_back(cr_residual(gf));
        r.top_vectors.push_back(std::move(gf));
    }
    return r;
}

SpectrumResult spectrum_pi(const StripProjector& op, int k, std::size_t max_nodes) {
    Eigen::MatrixXcd A = op.assemble_matrix(max_nodes);
    return spectrum_of_matrix(A, op.grid_ptr(), k);
}

ParityCommutators parity_commutators(const StripProjector& op, const GridFunction& f) {
    const StripGrid& g = *f.grid;
    int nx = g.nx(), ny = g.ny();
    auto flip_point = [&](const GridFunction& u) {
        GridFunction out(f.grid);
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix)
                out.values[(Eigen::Index)g.index(ix, iy)] =
                    u.values[(Eigen::Index)g.index(nx - 1 - ix, ny - 1 - iy)];
        return out;
    };
    auto flip_conj = [&](const GridFunction& u) {
        GridFunction out(f.grid);
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix)
                out.values[(Eigen::Index)g.index(ix, iy)] =
                    std::conj(u.values[(Eigen::Index)g.index(ix, ny - 1 - iy)]);
        return out;
    };
    double nf = strip_norm(f);
    if (nf == 0) nf = 1.0;
    GridFunction a = op.apply(flip_point(f));
    GridFunction b = flip_point(op.apply(f));
    a.values -= b.values;
    GridFunction c = op.apply(flip_conj(f));
    GridFunction d = flip_conj(op.apply(f));
    c.values -= d.values;
    return {strip_norm(a) / nf, strip_norm(c) / nf};
}

} // namespace striplab
