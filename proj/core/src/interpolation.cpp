#include "striplab/interpolation.hpp"

#include <cmath>

namespace striplab {

const char* interp_name(InterpScheme s) {
    switch (s) {
        case InterpScheme::Bicubic: return "bicubic";
        case InterpScheme::Biquintic: return "biquintic";
        case InterpScheme::Biseptic: return "biseptic";
    }
    return "unknown";
}

namespace {
// 1 / prod_{j != i} (i - j) for stencil width n
template <int n>
constexpr std::array<double, n> lagrange_denoms() {
    std::array<double, n> d{};
    for (int i = 0; i < n; ++i) {
        double p = 1.0;
        for (int j = 0; j < n; ++j)
            if (i != j) p *= double(i - j);
        d[i] = 1.0 / p;
    }
    return d;
}

template <int n>
inline void lagrange_fill(double t, std::array<double, kMaxStencil>& w) {
    static constexpr std::array<double, n> inv = lagrange_denoms<n>();
    // offsets relative to the stencil start: node j sits at j - (n/2 - 1)
    double d[n];
    for (int j = 0; j < n; ++j) d[j] = t - (j - (n / 2 - 1));
    double pre[n], suf[n];
    pre[0] = 1.0;
    for (int j = 1; j < n; ++j) pre[j] = pre[j - 1] * d[j - 1];
    suf[n - 1] = 1.0;
    for (int j = n - 2; j >= 0; --j) suf[j] = suf[j + 1] * d[j + 1];
    for (int i = 0; i < n; ++i) w[i] = pre[i] * suf[i] * inv[i];
}
} // namespace

std::array<double, kMaxStencil> lagrange_weights(double t, int npts) {
    std::array<double, kMaxStencil> w{};
    switch (npts) {
        case 4: lagrange_fill<4>(t, w); break;
        case 6: lagrange_fill<6>(t, w); break;
        case 8: lagrange_fill<8>(t, w); break;
        default: {
            int center = npts / 2 - 1;
            for (int i = 0; i < npts; ++i) {
                double p = 1.0;
                for (int j = 0; j < npts; ++j) {
                    if (i == j) continue;
                    p *= (t - (j - center)) / double(i - j);
                }
                w[i] = p;
            }
        }
    }
    return w;
}

bool GridSampler::x_stencil(double x, int& base, std::array<double, kMaxStencil>& w) const {
    int nx = g_.nx();
    double s = (x - g_.x0()) / g_.dx();
    if (s < -0.5 || s > nx - 0.5) return false;
    int i0 = (int)std::floor(s);
    int b = i0 - (npts_ / 2 - 1);
    w = lagrange_weights(s - i0, npts_);
    for (int a = 0; a < npts_; ++a)
        if (b + a < 0 || b + a >= nx) w[a] = 0.0;
    // re-base into range so callers can use raw pointer arithmetic
    if (b < 0) {
        int shift = -b;
        for (int a = 0; a < npts_; ++a) w[a] = (a + shift < npts_) ? w[a + shift] : 0.0;
        b = 0;
    } else if (b > nx - npts_) {
        int shift = b - (nx - npts_);
        for (int a = npts_ - 1; a >= 0; --a) w[a] = (a - shift >= 0) ? w[a - shift] : 0.0;
        b = nx - npts_;
    }
    base = b;
    return true;
}

void GridSampler::phi_stencil(double phi, std::array<int, kMaxStencil>& rows,
                              std::array<double, kMaxStencil>& w) const {
    int ny = g_.ny();
    double s = (phi - g_.phis()[0]) / g_.dphi();
    int j0 = (int)std::floor(s);
    w = lagrange_weights(s - j0, npts_);
    for (int b = 0; b < npts_; ++b) {
        int idx = j0 - (npts_ / 2 - 1) + b;
        // mirror across +-pi/2; fold twice in case a wide stencil passes both
        for (int pass = 0; pass < 2; ++pass) {
            if (idx < 0) idx = -1 - idx;
            if (idx >= ny) idx = 2 * ny - 1 - idx;
        }
        rows[b] = idx;
    }
}

cplx GridSampler::sample(const Eigen::VectorXcd& f, double x, double y) const {
    int base;
    std::array<double, kMaxStencil> wx;
    if (!x_stencil(x, base, wx)) return 0.0;
    std::array<int, kMaxStencil> rows;
    std::array<double, kMaxStencil> wp;
    phi_stencil(std::asin(y), rows, wp);
    cplx acc = 0.0;
    for (int b = 0; b < npts_; ++b) {
        const cplx* rowbase = f.data() + (std::size_t)rows[b] * g_.nx() + base;
        cplx racc = 0.0;
        for (int a = 0; a < npts_; ++a) racc += wx[a] * rowbase[a];
        acc += wp[b] * racc;
    }
    return acc;
}

} // namespace striplab
