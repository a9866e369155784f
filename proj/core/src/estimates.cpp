#include "striplab/estimates.hpp"
#include "striplab/quadrature.hpp"
#include "striplab/util.hpp"

#include <cmath>
#include <stdexcept>

namespace striplab {

double lemma1_integral(double p, double t, int panels) {
    if (!(p > 1.0)) throw std::invalid_argument("lemma1_integral: need p > 1");
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("lemma1_integral: need 0 < t < 1");
    // chord: |x| <= X(t), X = sqrt(2t - t^2); dist = 1 - sqrt(x^2 + (1-t)^2)
    double X = std::sqrt(t * (2.0 - t));
    double om = 1.0 - t;
    auto dist = [&](double x) { return 1.0 - std::sqrt(x * x + om * om); };
    // substitution x = X - v^2 regularizes the endpoint for p > 2 and weakens
    // it to v^{1-2/p} otherwise; panels graded toward v = 0 handle the rest
    auto gv = [&](double v) {
        double x = X - v * v;
        return std::pow(dist(x), -1.0 / p) * 2.0 * v;
    };
    double V = std::sqrt(X);
    // graded stack into the endpoint, composite rule across the rest
    double split = V / 8.0;
    double val = graded_gl_toward(gv, 0.0, split, 160, 16) + composite_gl(gv, split, V, panels, 16);
    return 2.0 * val; // integrand even in x; both chord ends identical
}

double weighted_edge_integral(double p, double beta, double t, int panels) {
    if (!(p > 1.0)) throw std::invalid_argument("weighted_edge_integral: need p > 1");
    if (!(beta >= 0.0 && beta < 0.5))
        throw std::invalid_argument("weighted_edge_integral: need 0 <= beta < 1/2");
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("weighted_edge_integral: need 0 < t < 1");
    double rt = std::sqrt(t);
    // denominator (sqrt(t) (sqrt(t) - x))^{1/p}; substitution x = rt - v^2
    auto gv = [&](double v) {
        double x = rt - v * v;
        double num = std::pow(x * x + t * t, beta / (2.0 * p));
        double den = std::pow(rt * v * v, 1.0 / p);
        return num / den * 2.0 * v;
    };
    double V = std::sqrt(rt);
    double split = V / 8.0;
    return graded_gl_toward(gv, 0.0, split, 160, 16) + composite_gl(gv, split, V, panels, 16);
}

double fitted_slope(const std::vector<double>& ts, const std::vector<double>& vals) {
    if (ts.size() != vals.size() || ts.size() < 2)
        throw std::invalid_argument("fitted_slope: need matching vectors, size >= 2");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = ts.size();
    for (std::size_t i = 0; i < n; ++i) {
        double lx = std::log(ts[i]), ly = std::log(vals[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> t_ladder(double t_lo, double t_hi, int n) {
    std::vector<double> out(n);
    double r = std::log(t_hi / t_lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = t_lo * std::exp(i * r);
    return out;
}

std::vector<SlopePoint> slope_lattice(const std::vector<double>& ps,
                                      const std::vector<double>& betas, double t_lo, double t_hi,
                                      int n_ladder) {
    std::vector<SlopePoint> out;
    std::vector<double> ts = t_ladder(t_lo, t_hi, n_ladder);
    for (double p : ps) {
        for (double b : betas) {
            std::vector<double> vals;
            vals.reserve(ts.size());
            for (double t : ts) vals.push_back(weighted_edge_integral(p, b, t));
            SlopePoint sp;
            sp.p = p;
            sp.beta = b;
            sp.slope = fitted_slope(ts, vals);
            sp.predicted = 0.5 + b / (2.0 * p) - 1.0 / p;
            out.push_back(sp);
        }
    }
    return out;
}

} // namespace striplab
