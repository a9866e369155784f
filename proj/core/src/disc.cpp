#include "striplab/disc.hpp"
#include "striplab/interpolation.hpp"

#include <cmath>
#include <random>

namespace striplab {

std::pair<double, double> circle_of(double s, double eps) {
    double smax = 1.0 / std::sqrt(1.0 - eps * eps);
    if (!(s > 0.0 && s < smax)) throw std::domain_error("circle_of: s out of (0, s_max)");
    double r2 = 1.0 - s * s + eps * eps * s * s;
    return {-eps * s * s, s * std::sqrt(r2)};
}

std::pair<double, double> circles_through(cplx zeta, double eps) {
    // u^2 + (2 eps Re zeta - 1) u + |zeta|^2 = 0, u = s^2
    double b = 2.0 * eps * zeta.real() - 1.0;
    double c = std::norm(zeta);
    double disc = b * b - 4.0 * c;
    if (disc < 0) throw std::domain_error("circles_through: point outside G (complex roots)");
    if (disc == 0) throw std::domain_error("circles_through: point on the boundary of G");
    double rt = std::sqrt(disc);
    // stable root pairing
    double q = -0.5 * (b + (b >= 0 ? rt : -rt));
    double u1 = q;
    double u2 = (q != 0.0) ? c / q : 0.0;
    if (u1 > u2) std::swap(u1, u2);
    double smax2 = 1.0 / (1.0 - eps * eps);
    if (!(u1 > 0.0 && u2 < smax2))
        throw std::domain_error("circles_through: roots outside (0, s_max^2); point outside G");
    return {std::sqrt(u1), std::sqrt(u2)};
}

DiscFamily::DiscFamily(double eps, int n_s, int n_psi, double delta_disc)
    : eps_(eps), delta_disc_(delta_disc), n_s_(n_s), n_psi_(n_psi) {
    if (!(eps >= 0.0 && eps < 0.5)) throw std::invalid_argument("DiscFamily: eps in [0, 1/2)");
    if (n_s < 8 || n_psi < 8) throw std::invalid_argument("DiscFamily: grid too small");
    s_max_ = 1.0 / std::sqrt(1.0 - eps * eps);
    ds_ = s_max_ / n_s;
    dpsi_ = 2.0 * kPi / n_psi;
    s_.resize(n_s);
    w_.resize(n_s);
    circle_.resize(n_s);
    psi_.resize(n_psi);
    for (int i = 0; i < n_s; ++i) {
        s_[i] = (i + 0.5) * ds_;
        circle_[i] = circle_of(s_[i], eps);
        w_[i] = 4.0 * kPi * s_[i] * ds_ * dpsi_;
    }
    for (int j = 0; j < n_psi; ++j) psi_[j] = -kPi + (j + 0.5) * dpsi_;
    active_.assign(size(), 1);
    double total = 0.0, inactive = 0.0;
    for (int i = 0; i < n_s; ++i) {
        for (int j = 0; j < n_psi; ++j) {
            cplx z = point(i, j);
            double b = 2.0 * eps * z.real() - 1.0;
            double disc = b * b - 4.0 * std::norm(z);
            std::size_t k = index(i, j);
            total += w_[i];
            if (disc < delta_disc_) {
                active_[k] = 0;
                inactive += w_[i];
            }
        }
    }
    inactive_mass_ = total > 0 ? inactive / total : 0.0;
}

DiscGridFunction DiscGridFunction::sample(std::shared_ptr<const DiscFamily> f,
                                          const std::function<cplx(cplx)>& fn) {
    DiscGridFunction out(std::move(f));
    const DiscFamily& fam = *out.family;
    for (int i = 0; i < fam.n_s(); ++i)
        for (int j = 0; j < fam.n_psi(); ++j)
            out.values[(Eigen::Index)fam.index(i, j)] = fn(fam.point(i, j));
    return out;
}

cplx disc_inner(const DiscGridFunction& f, const DiscGridFunction& g) {
    if (f.family != g.family) throw std::invalid_argument("disc_inner: family mismatch");
    const DiscFamily& fam = *f.family;
    cplx s = 0.0;
    for (std::size_t k = 0; k < fam.size(); ++k)
        s += fam.weight(k) * f.values[(Eigen::Index)k] * std::conj(g.values[(Eigen::Index)k]);
    return s;
}

double disc_norm(const DiscGridFunction& f) {
    const DiscFamily& fam = *f.family;
    double s = 0.0;
    for (std::size_t k = 0; k < fam.size(); ++k)
        s += fam.weight(k) * std::norm(f.values[(Eigen::Index)k]);
    return std::sqrt(s);
}

double disc_norm_active(const DiscGridFunction& f) {
    const DiscFamily& fam = *f.family;
    double s = 0.0;
    for (std::size_t k = 0; k < fam.size(); ++k)
        if (fam.active(k)) s += fam.weight(k) * std::norm(f.values[(Eigen::Index)k]);
    return std::sqrt(s);
}

double mc_boundary_integral(const std::function<double(cplx)>& F, double eps,
                            std::size_t samples, std::uint64_t seed) {
    // dV = 2 dphi du dv over {|w| < s_max} x [0, 2pi); z = -eps conj(w) + R e^{i phi},
    // R^2 = 1 - (1 - eps^2)|w|^2. Sample w uniformly on the disc of radius s_max.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double smax = 1.0 / std::sqrt(1.0 - eps * eps);
    double acc = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        double r = smax * std::sqrt(unif(rng));
        double a = 2.0 * kPi * unif(rng) - kPi;
        double phi = 2.0 * kPi * unif(rng);
        cplx w = std::polar(r, a);
        double R2 = 1.0 - (1.0 - eps * eps) * r * r;
        if (R2 < 0) R2 = 0;
        cplx z = -eps * std::conj(w) + std::polar(std::sqrt(R2), phi);
        acc += F(z * w);
    }
    double area = kPi * smax * smax;
    return 2.0 * (2.0 * kPi) * area * acc / (double)samples;
}

namespace {
// cubic interpolation across s-rows at a fixed psi column; clamped one-sided
// stencils at the ends (never more than half a cell of extrapolation)
cplx sample_srow(const DiscFamily& fam, const Eigen::VectorXcd& v, double s, int jpsi) {
    int ns = fam.n_s();
    double u = s / fam.ds() - 0.5;
    int i0 = (int)std::floor(u);
    int base = i0 - 1;
    if (base < 0) base = 0;
    if (base > ns - 4) base = ns - 4;
    double t = u - (base + 1);
    auto w = lagrange_weights(t, 4);
    cplx acc = 0.0;
    for (int a = 0; a < 4; ++a)
        acc += w[a] * v[(Eigen::Index)fam.index(base + a, jpsi)];
    return acc;
}

// Hardy-truncate the restriction of f to circle s and evaluate at angle psi_eval.
cplx project_on_circle(const DiscFamily& fam, const Eigen::VectorXcd& v, double s, int N,
                       double psi_eval) {
    int n = fam.n_psi();
    // restriction samples g_j = f(c(s) + r(s) e^{i psi_j}) by s-interpolation
    // per psi column, then a_m = (1/n) sum_j g_j e^{-im psi_j},
    // value = sum_{m<=N} a_m e^{im psi_eval}. Rearranged into a single pass:
    // value = sum_j g_j K(psi_eval - psi_j), K = Dirichlet kernel / n.
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
        cplx g = sample_srow(fam, v, s, j);
        double d = psi_eval - fam.psi_nodes()[j];
        // K(d) = (1/n) sum_{m=0}^{N} e^{i m d}
        double half = 0.5 * d;
        cplx k;
        double sh = std::sin(half);
        if (std::abs(sh) < 1e-9) {
            k = cplx(N + 1.0, 0.0);
        } else {
            // sum e^{imd} = e^{iNd/2} sin((N+1)d/2)/sin(d/2)
            k = std::polar(std::sin((N + 1) * half) / sh, N * half);
        }
        acc += g * (k / (double)n);
    }
    return acc;
}
} // namespace

double redundancy_mismatch(const DiscGridFunction& f) {
    const DiscFamily& fam = *f.family;
    double sup = 0.0;
    for (Eigen::Index i = 0; i < f.values.size(); ++i) sup = std::max(sup, std::abs(f.values[i]));
    if (sup == 0) return 0.0;
    double worst = 0.0;
    for (int i = 0; i < fam.n_s(); ++i) {
        for (int j = 0; j < fam.n_psi(); ++j) {
            std::size_t k = fam.index(i, j);
            if (!fam.active(k)) continue;
            cplx z = fam.point(i, j);
            double s1, s2;
            try {
                std::tie(s1, s2) = circles_through(z, fam.eps());
            } catch (const std::domain_error&) {
                continue;
            }
            double partner = std::abs(s1 - fam.s_nodes()[i]) > std::abs(s2 - fam.s_nodes()[i])
                                 ? s1
                                 : s2;
            if (partner < fam.s_nodes().front() || partner > fam.s_nodes().back()) continue;
            auto [c, r] = circle_of(partner, fam.eps());
            double psi = std::atan2(z.imag(), z.real() - c);
            (void)r;
            // interpolate f at (partner, psi): s-interp per column then
            // trigonometric interpolation is overkill; use the two nearest
            // psi columns cubically
            double u = (psi + kPi) / fam.dpsi() - 0.5;
            int j0 = (int)std::floor(u);
            double t = u - j0;
            auto wj = lagrange_weights(t, 4);
            cplx val = 0.0;
            for (int a = 0; a < 4; ++a) {
                int jj = j0 - 1 + a;
                jj = ((jj % fam.n_psi()) + fam.n_psi()) % fam.n_psi();
                val += wj[a] * sample_srow(fam, f.values, partner, jj);
            }
            worst = std::max(worst, std::abs(val - f.values[(Eigen::Index)k]) / sup);
        }
    }
    return worst;
}

DiscProjector::DiscProjector(std::shared_ptr<const DiscFamily> family, int N)
    : family_(std::move(family)), N_(N) {
    if (!(N >= 1 && N < family_->n_psi() / 2))
        throw std::invalid_argument("DiscProjector: need 1 <= N < n_psi/2");
}

DiscGridFunction DiscProjector::apply(const DiscGridFunction& f) const {
    if (f.family.get() != family_.get())
        throw std::invalid_argument("DiscProjector::apply: family mismatch");
    const DiscFamily& fam = *family_;
    DiscGridFunction out(family_);
    const Eigen::VectorXcd& v = f.values;
    int npsi = fam.n_psi();
    parallel_for((std::size_t)fam.n_s(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            for (int j = 0; j < npsi; ++j) {
                cplx z = fam.point((int)i, j);
                double s1, s2;
                try {
                    std::tie(s1, s2) = circles_through(z, fam.eps());
                } catch (const std::domain_error&) {
                    // boundary-band point; keep the old value
                    out.values[(Eigen::Index)fam.index((int)i, j)] =
                        v[(Eigen::Index)fam.index((int)i, j)];
                    continue;
                }
                cplx acc = 0.0;
                for (double s : {s1, s2}) {
                    auto [c, r] = circle_of(s, fam.eps());
                    (void)r;
                    double psi_eval = std::atan2(z.imag(), z.real() - c);
                    acc += project_on_circle(fam, v, s, N_, psi_eval);
                }
                out.values[(Eigen::Index)fam.index((int)i, j)] = 0.5 * acc;
            }
        }
    });
    return out;
}

DiscIterationResult iterate_disc(const DiscProjector& op, const DiscGridFunction& f, int max_iter,
                                 double stop_tol) {
    DiscIterationResult res;
    ConvergenceReport& rep = res.report;
    rep.stop_tol = stop_tol;
    rep.input_norm = disc_norm_active(f);
    rep.interp = "cubic-s";
    DiscGridFunction prev = f;
    double nf = rep.input_norm > 0 ? rep.input_norm : 1.0;
    for (int it = 1; it <= max_iter; ++it) {
        DiscGridFunction cur = op.apply(prev);
        DiscGridFunction diff(cur.family);
        diff.values = cur.values - prev.values;
        IterationRow row;
        row.n = it;
        row.norm = disc_norm_active(cur);
        row.delta = disc_norm_active(diff);
        row.cr_residual = disc_cr_residual(cur);
        rep.rows.push_back(row);
        prev = std::move(cur);
        rep.iterations = it;
        if (row.delta <= stop_tol * nf) {
            rep.converged = true;
            break;
        }
    }
    res.limit = std::move(prev);
    return res;
}

double disc_cr_residual(const DiscGridFunction& f) {
    const DiscFamily& fam = *f.family;
    int ns = fam.n_s(), npsi = fam.n_psi();
    double num = 0.0, den = 0.0;
    double eps = fam.eps();
    for (int i = 1; i < ns - 1; ++i) {
        double s = fam.s_nodes()[i];
        double r2arg = 1.0 - s * s + eps * eps * s * s;
        double r = s * std::sqrt(r2arg);
        double drds = std::sqrt(r2arg) + s * (eps * eps - 1.0) * s / std::sqrt(r2arg);
        double dcds = -2.0 * eps * s;
        for (int j = 0; j < npsi; ++j) {
            std::size_t k = fam.index(i, j);
            if (!fam.active(k) || !fam.active(fam.index(i - 1, j)) ||
                !fam.active(fam.index(i + 1, j)))
                continue;
            int jm = (j - 1 + npsi) % npsi, jp = (j + 1) % npsi;
            cplx fs = (f.values[(Eigen::Index)fam.index(i + 1, j)] -
                       f.values[(Eigen::Index)fam.index(i - 1, j)]) /
                      (2.0 * fam.ds());
            cplx fpsi = (f.values[(Eigen::Index)fam.index(i, jp)] -
                         f.values[(Eigen::Index)fam.index(i, jm)]) /
                        (2.0 * fam.dpsi());
            cplx e = std::polar(1.0, fam.psi_nodes()[j]);
            cplx zs = dcds + drds * e;     // d zeta / d s
            cplx zp = cplx(0, 1) * r * e;  // d zeta / d psi
            // f_s = f_z zs + f_zbar conj(zs); f_psi = f_z zp + f_zbar conj(zp)
            cplx det = zs * std::conj(zp) - zp * std::conj(zs);
            if (std::abs(det) < 1e-14) continue;
            cplx fzbar = (zs * fpsi - zp * fs) / det;
            double w = fam.weight(k);
            num += w * std::norm(fzbar);
            den += w * std::norm(f.values[(Eigen::Index)k]);
        }
    }
    if (den <= 0) return 0.0;
    return std::sqrt(num / den);
}

} // namespace striplab
