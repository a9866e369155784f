#pragma once

#include <utility>
#include <vector>

namespace striplab {

/// Chord integral of dist(z, dG)^{-1/p} over G cap {Im z = t}, where G is the
/// unit disc centered at i (bottom tangent to the origin) and
/// dist(z, dG) = 1 - |z - i|. Tends to 0 as t -> 0 iff p > 2.
/// `panels` controls the composite quadrature (doubling it changes the value
/// by < 1e-7 relative at the defaults).
double lemma1_integral(double p, double t, int panels = 64);

/// Edge integral (1/ (sqrt(t)(sqrt(t)-x))^{1/p}) * (x^2+t^2)^{beta/(2p)} over
/// 0 < x < sqrt(t). The bound K t^{1/2 + beta/(2p) - 1/p} forces the
/// (sqrt(t))^{1/p} grouping in the denominator; tends to 0 iff p > 2 - beta.
double weighted_edge_integral(double p, double beta, double t, int panels = 64);

/// Least-squares slope of log(I) against log(t) over a geometric t-ladder.
double fitted_slope(const std::vector<double>& ts, const std::vector<double>& vals);

/// Geometric ladder of n points from t_lo to t_hi (inclusive).
std::vector<double> t_ladder(double t_lo, double t_hi, int n);

struct SlopePoint {
    double p, beta;
    double slope;          // fitted
    double predicted;      // 1/2 + beta/(2p) - 1/p
};

/// Runs the regression on the (p, beta) lattice.
std::vector<SlopePoint> slope_lattice(const std::vector<double>& ps,
                                      const std::vector<double>& betas, double t_lo, double t_hi,
                                      int n_ladder);

} // namespace striplab
