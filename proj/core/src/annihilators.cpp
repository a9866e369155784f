#include "striplab/annihilators.hpp"

#include <cmath>
#include <stdexcept>

namespace striplab {

std::vector<AnnihilatorSpec> annihilator_battery() {
    std::vector<AnnihilatorSpec> v;
    v.push_back({"ann_k1_gauss", [](double t) { return std::exp(-t * t); }, 1, "exp(-t^2) e^{i theta}"});
    v.push_back({"ann_k2_gauss", [](double t) { return std::exp(-t * t); }, 2, "exp(-t^2) e^{2i theta}"});
    v.push_back(
        {"ann_k1_wide", [](double t) { return std::exp(-0.5 * t * t); }, 1, "exp(-t^2/2) e^{i theta}"});
    v.push_back({"ann_k3_shift",
                 [](double t) { return (t - 0.5) * std::exp(-t * t); }, 3,
                 "(t-1/2) exp(-t^2) e^{3i theta}"});
    return v;
}

cplx annihilator_value(const AnnihilatorSpec& spec, cplx z) {
    auto [t1, t2] = tangent_centers(z);
    double th1 = std::atan2(z.imag(), z.real() - t1);
    double th2 = std::atan2(z.imag(), z.real() - t2);
    return spec.phi(t1) * std::polar(1.0, spec.k * th1) +
           spec.phi(t2) * std::polar(1.0, spec.k * th2);
}

GridFunction make_annihilator(const AnnihilatorSpec& spec, std::shared_ptr<const StripGrid> grid) {
    if (spec.k < 1) throw std::invalid_argument("make_annihilator: k must be >= 1");
    if (std::abs(grid->alpha() - 0.5) > 1e-12)
        throw std::invalid_argument(
            "make_annihilator: the duality pairing requires an alpha = 1/2 grid");
    return GridFunction::sample(std::move(grid), [&spec](cplx z) { return annihilator_value(spec, z); });
}

cplx annihilation_pairing(const GridFunction& f, const GridFunction& h_tilde) {
    if (f.grid != h_tilde.grid) throw std::invalid_argument("annihilation_pairing: grid mismatch");
    const StripGrid& g = *f.grid;
    if (std::abs(g.alpha() - 0.5) > 1e-12)
        throw std::invalid_argument("annihilation_pairing: requires an alpha = 1/2 grid");
    cplx s = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k)
        s += g.coarea_weight(k) * f.values[(Eigen::Index)k] * h_tilde.values[(Eigen::Index)k];
    return s;
}

cplx annihilation_pairing_nested(const std::function<cplx(cplx)>& f, const AnnihilatorSpec& spec,
                                 double t_half_range, int n_t, int n_theta) {
    double dt = 2.0 * t_half_range / n_t;
    double dth = 2.0 * kPi / n_theta;
    cplx acc = 0.0;
    for (int i = 0; i < n_t; ++i) {
        double t = -t_half_range + (i + 0.5) * dt;
        double pt = spec.phi(t);
        if (pt == 0.0) continue;
        cplx line = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            double th = -kPi + (j + 0.5) * dth;
            line += f(cplx(t + std::cos(th), std::sin(th))) * std::polar(1.0, spec.k * th);
        }
        acc += pt * line * dth * dt;
    }
    return acc;
}

} // namespace striplab
