#include "striplab/quadrature.hpp"
#include "striplab/util.hpp"

#include <cmath>
#include <stdexcept>

namespace striplab {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: order must be >= 1");
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration on P_n from the Chebyshev initial guess.
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

namespace {
const GaussLegendre& cached_rule(int order) {
    static const GaussLegendre g8(8), g16(16), g24(24), g32(32);
    switch (order) {
        case 8: return g8;
        case 16: return g16;
        case 24: return g24;
        case 32: return g32;
        default: {
            thread_local GaussLegendre custom(order);
            if ((int)custom.nodes.size() != order) custom = GaussLegendre(order);
            return custom;
        }
    }
}

double gl_panel(const std::function<double(double)>& f, double a, double b,
                const GaussLegendre& g) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        s += g.weights[i] * f(mid + half * g.nodes[i]);
    return s * half;
}
} // namespace

double composite_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int order) {
    const GaussLegendre& g = cached_rule(order);
    double h = (b - a) / panels, s = 0.0;
    for (int i = 0; i < panels; ++i) s += gl_panel(f, a + i * h, a + (i + 1) * h, g);
    return s;
}

double graded_gl_toward(const std::function<double(double)>& f, double a, double b,
                        int levels, int order) {
    const GaussLegendre& g = cached_rule(order);
    double s = 0.0;
    double hi = b;
    double width = b - a;
    for (int lvl = 0; lvl < levels; ++lvl) {
        double lo = a + width * std::pow(0.5, lvl + 1);
        if (!(lo < hi)) break;
        s += gl_panel(f, lo, hi, g);
        hi = lo;
    }
    return s;
}

namespace {
double simpson(double fa, double fm, double fb, double h6) { return h6 * (fa + 4 * fm + fb); }

double adsim_rec(const std::function<double(double)>& f, double a, double b, double fa,
                 double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(fa, flm, fm, (m - a) / 6);
    double right = simpson(fm, frm, fb, (b - m) / 6);
    double err = left + right - whole;
    if (depth <= 0 || std::abs(err) <= 15 * tol) return left + right + err / 15.0;
    return adsim_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adsim_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = simpson(fa, fm, fb, (b - a) / 6);
    return adsim_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

} // namespace striplab
