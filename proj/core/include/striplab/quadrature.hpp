#pragma once

#include <functional>
#include <vector>

namespace striplab {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendre(int n);
};

/// Integrate f over [a, b] with a composite fixed-order Gauss-Legendre rule
/// on `panels` equal panels.
double composite_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int order = 16);

/// Integrate f over [a, b] where f has an integrable singularity at the
/// endpoint a: panels shrink geometrically toward a (ratio 1/2) down to
/// width*2^-levels, with a fixed-order GL rule per panel. The leftover
/// [a, a + width*2^-levels] sliver is dropped; callers pick `levels` large
/// enough that its mass is below the target accuracy.
double graded_gl_toward(const std::function<double(double)>& f, double a, double b,
                        int levels = 120, int order = 16);

/// Adaptive Simpson with absolute/relative tolerance. Independent of the
/// composite rules above; used as the test-side oracle.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 60);

} // namespace striplab
