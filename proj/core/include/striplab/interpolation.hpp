#pragma once

#include "striplab/geometry.hpp"

#include <array>

namespace striplab {

/// Interpolation scheme ids (recorded in reports). The number is the stencil
/// width per direction; error order is h^width for smooth samples.
enum class InterpScheme { Bicubic = 4, Biquintic = 6, Biseptic = 8 };
const char* interp_name(InterpScheme s);
inline int interp_points(InterpScheme s) { return (int)s; }

inline constexpr int kMaxStencil = 8;

/// Lagrange weights on `npts` consecutive integer nodes for evaluation at
/// offset t from the node with index npts/2 - 1 (the centered convention:
/// t in [0,1) means the evaluation point lies in the middle cell).
std::array<double, kMaxStencil> lagrange_weights(double t, int npts);

/// Tensor-product Lagrange sampler for grid functions in (x, phi) space.
///
/// x direction: zero extension — stencil entries off the grid are dropped
/// (their weights zeroed); the evaluation offset is never shifted, so the
/// sampler never extrapolates. phi direction: mirror extension across
/// +-pi/2, which is exact for samples of functions of y = sin(phi).
class GridSampler {
  public:
    GridSampler(const StripGrid& grid, InterpScheme scheme)
        : g_(grid), npts_(interp_points(scheme)) {}

    int points() const { return npts_; }

    /// x-direction stencil; false means the point is outside (value 0).
    /// base is clamped into [0, nx - npts]; dropped entries carry weight 0.
    bool x_stencil(double x, int& base, std::array<double, kMaxStencil>& w) const;

    /// phi-direction stencil with mirror-folded row indices.
    void phi_stencil(double phi, std::array<int, kMaxStencil>& rows,
                     std::array<double, kMaxStencil>& w) const;

    /// Interpolated value of f at z = (x, y); zero outside the x-range.
    cplx sample(const Eigen::VectorXcd& f, double x, double y) const;

  private:
    const StripGrid& g_;
    int npts_;
};

} // namespace striplab
