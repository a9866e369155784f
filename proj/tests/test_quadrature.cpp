#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "striplab/quadrature.hpp"
#include "striplab/util.hpp"

#include <cmath>

using namespace striplab;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    GaussLegendre g(8);
    // degree 15 is exact for an 8-point rule
    auto poly = [](double x) { return 3 * std::pow(x, 15) - x * x * x + 2 * x * x + 1; };
    double s = 0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * poly(g.nodes[i]);
    // int_{-1}^{1}: odd terms drop, 2x^2 -> 4/3, 1 -> 2
    CHECK(s == doctest::Approx(4.0 / 3.0 + 2.0).epsilon(1e-13));
    double wsum = 0;
    for (double w : g.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("composite GL vs adaptive simpson on a smooth integrand") {
    auto f = [](double x) { return std::exp(-x * x) * std::cos(3 * x); };
    double a = composite_gl(f, -2.0, 2.0, 16);
    double b = adaptive_simpson(f, -2.0, 2.0, 1e-12);
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
}

TEST_CASE("graded rule handles an integrable endpoint singularity") {
    // int_0^1 x^{-1/2} dx = 2, singular at the graded end
    auto f = [](double x) { return 1.0 / std::sqrt(x); };
    CHECK(graded_gl_toward(f, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    // int_0^1 x^{-0.9} dx = 10 (worst case for the beta range)
    auto g = [](double x) { return std::pow(x, -0.9); };
    CHECK(graded_gl_toward(g, 0.0, 1.0, 400) == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("adaptive simpson hits tight tolerances") {
    auto f = [](double x) { return std::sin(x) / (1.0 + x * x); };
    double v = adaptive_simpson(f, 0.0, 3.0, 1e-12);
    double ref = composite_gl(f, 0.0, 3.0, 64, 24);
    CHECK(v == doctest::Approx(ref).epsilon(1e-10));
}
