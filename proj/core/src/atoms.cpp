#include "striplab/atoms.hpp"

#include <stdexcept>

namespace striplab {

namespace {
cplx gauss(cplx z, double a) {
    cplx w = z - a;
    return std::exp(-w * w);
}
cplx cauchy(cplx z, cplx w0) {
    cplx d = z - w0;
    return 1.0 / (d * d);
}
} // namespace

std::vector<BatteryEntry> holomorphic_atoms() {
    std::vector<BatteryEntry> v;
    v.push_back({"gauss0", [](cplx z) { return gauss(z, 0.0); }, true, "gaussian", "exp(-z^2)"});
    v.push_back(
        {"gauss_p1", [](cplx z) { return gauss(z, 1.0); }, true, "gaussian", "exp(-(z-1)^2)"});
    v.push_back(
        {"gauss_m1", [](cplx z) { return gauss(z, -1.0); }, true, "gaussian", "exp(-(z+1)^2)"});
    v.push_back({"cauchy_up", [](cplx z) { return cauchy(z, cplx(0.0, 1.7)); }, true, "rational",
                 "(z-1.7i)^-2"});
    v.push_back({"cauchy_down", [](cplx z) { return cauchy(z, cplx(-0.4, -1.8)); }, true,
                 "rational", "(z+0.4+1.8i)^-2"});
    v.push_back({"gausscauchy",
                 [](cplx z) { return gauss(z, 0.0) * cauchy(z, cplx(0.0, 1.7)); }, true,
                 "gaussian", "exp(-z^2)(z-1.7i)^-2"});
    return v;
}

std::vector<BatteryEntry> nonholomorphic_battery() {
    std::vector<BatteryEntry> v;
    v.push_back({"conj_gauss",
                 [](cplx z) { return std::conj(z) * std::exp(-2.0 * z.real() * z.real()); },
                 false, "gaussian", "conj(z) exp(-2x^2)"});
    v.push_back({"conj_anti",
                 [](cplx z) {
                     cplx w = std::conj(z);
                     return w * std::exp(-2.0 * w * w);
                 },
                 false, "gaussian", "conj(z) exp(-2 conj(z)^2)"});
    v.push_back({"ybump",
                 [](cplx z) {
                     double y = z.imag();
                     return cplx(y + 0.3 * y * y, 0.0) * std::exp(-2.0 * z.real() * z.real());
                 },
                 false, "gaussian", "(y+0.3y^2) exp(-2x^2)"});
    v.push_back({"abs_gauss",
                 [](cplx z) { return std::conj(z) * z * std::exp(-2.0 * z.real() * z.real()); },
                 false, "gaussian", "|z|^2 exp(-2x^2)"});
    return v;
}

std::vector<BatteryEntry> mixed_battery() {
    std::vector<BatteryEntry> v;
    auto g0 = [](cplx z) { return gauss(z, 0.0); };
    v.push_back({"mix_conj", [](cplx z) { return std::conj(z) * std::exp(-2.0 * z.real() * z.real()); },
                 false, "gaussian", "conj(z) exp(-2x^2)"});
    v.push_back({"mix_atom_conj",
                 [g0](cplx z) {
                     return g0(z) + 0.5 * std::conj(z) * std::exp(-2.0 * z.real() * z.real());
                 },
                 false, "gaussian", "exp(-z^2) + 0.5 conj(z) exp(-2x^2)"});
    v.push_back({"mix_anti",
                 [](cplx z) {
                     cplx w = std::conj(z);
                     return w * std::exp(-2.0 * w * w);
                 },
                 false, "gaussian", "conj(z) exp(-2 conj(z)^2)"});
    v.push_back({"mix_ybump",
                 [g0](cplx z) {
                     double y = z.imag();
                     return 0.3 * g0(z) +
                            cplx(y + 0.3 * y * y, 0.0) * std::exp(-2.0 * z.real() * z.real());
                 },
                 false, "gaussian", "0.3 exp(-z^2) + (y+0.3y^2) exp(-2x^2)"});
    return v;
}

std::vector<BatteryEntry> disc_atoms() {
    std::vector<BatteryEntry> v;
    v.push_back({"disc_one", [](cplx) { return cplx(1.0, 0.0); }, true, "none", "1"});
    v.push_back({"disc_zeta", [](cplx z) { return z; }, true, "none", "zeta"});
    v.push_back({"disc_zeta2", [](cplx z) { return z * z; }, true, "none", "zeta^2"});
    v.push_back({"disc_cauchy", [](cplx z) { return 1.0 / (z - cplx(0.8, 0.0)); }, true,
                 "rational", "(zeta-0.8)^-1"});
    return v;
}

std::vector<BatteryEntry> disc_battery() {
    std::vector<BatteryEntry> v = disc_atoms();
    v.push_back({"disc_conj", [](cplx z) { return std::conj(z); }, false, "none", "conj(zeta)"});
    v.push_back({"disc_abs2", [](cplx z) { return cplx(std::norm(z), 0.0); }, false, "none",
                 "|zeta|^2"});
    v.push_back({"disc_mix",
                 [](cplx z) { return z + 0.5 * std::conj(z) * std::conj(z); }, false, "none",
                 "zeta + conj(zeta)^2/2"});
    return v;
}

std::vector<BatteryEntry> full_battery() {
    std::vector<BatteryEntry> all = holomorphic_atoms();
    for (auto& e : nonholomorphic_battery()) all.push_back(e);
    for (auto& e : mixed_battery()) all.push_back(e);
    for (auto& e : disc_battery()) all.push_back(e);
    return all;
}

BatteryEntry battery_entry(const std::string& id) {
    for (auto& e : full_battery())
        if (e.id == id) return e;
    throw std::invalid_argument("battery_entry: unknown id '" + id + "'");
}

std::vector<GridFunction> sample_all(std::shared_ptr<const StripGrid> grid,
                                     const std::vector<BatteryEntry>& entries) {
    std::vector<GridFunction> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(GridFunction::sample(grid, e.eval));
    return out;
}

} // namespace striplab
