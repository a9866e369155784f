#pragma once

#include "striplab/geometry.hpp"

#include <functional>
#include <string>
#include <vector>

namespace striplab {

/// Separable per-circle annihilator datum h(t, theta) = phi(t) e^{i k theta}
/// with k >= 1, so the associated holomorphic function vanishes at the circle
/// center. phi is a smooth decaying real-variable profile.
struct AnnihilatorSpec {
    std::string id;
    std::function<double(double)> phi;
    int k = 1;
    std::string form;
};

/// Standard battery of annihilator specs (Gaussian-type profiles, k = 1..3).
std::vector<AnnihilatorSpec> annihilator_battery();

/// The strip annihilator h~(z) = phi(t1) e^{i k theta1} + phi(t2) e^{i k theta2}
/// with theta_i = arg(z - t_i), sampled on the grid. Requires alpha = 1/2
/// (the duality pairing lives in L^2(S, dx dy / sqrt(1-y^2))).
GridFunction make_annihilator(const AnnihilatorSpec& spec, std::shared_ptr<const StripGrid> grid);

/// Closed-form evaluator for the same function (used by quadrature oracles).
cplx annihilator_value(const AnnihilatorSpec& spec, cplx z);

/// Bilinear pairing int_S f(z) h~(z) dx dy / sqrt(1 - y^2) (no conjugation),
/// over the full padded grid. Vanishes for holomorphic decaying f.
cplx annihilation_pairing(const GridFunction& f, const GridFunction& h_tilde);

/// Nested-quadrature evaluation of the same pairing through the per-circle
/// form: int dt int f(t + e^{i theta}) h(t, theta) dtheta, with closed-form
/// evaluators; cross-checks the strip-side pairing via the coarea identity.
cplx annihilation_pairing_nested(const std::function<cplx(cplx)>& f, const AnnihilatorSpec& spec,
                                 double t_half_range, int n_t, int n_theta);

} // namespace striplab
