#include <cmath>
#include <limits>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/coefficients.hpp"
#include "hoc/errors.hpp"
#include "hoc/grid.hpp"
#include "hoc/sv_model.hpp"
#include "support/manufactured.hpp"

namespace {

namespace ht = hoc::testing;

TEST_CASE("Coefficients.ConstantSetHasZeroDerivatives") {
    const auto c = ht::constant_heat()(0.3, 0.7);
    for (const hoc::Jet2* j : {&c.a1, &c.a2, &c.b12, &c.c1, &c.c2, &c.d}) {
        CHECK(j->d1 == 0.0);
        CHECK(j->d2 == 0.0);
        CHECK(j->d11 == 0.0);
        CHECK(j->d12 == 0.0);
        CHECK(j->d22 == 0.0);
    }
    CHECK(c.a1.v == -1.0);
    CHECK(c.d.v == 1.0);
}

TEST_CASE("Coefficients.SvModelWithoutCorrelationHasNoCrossTerm") {
    hoc::SVParams p;
    p.rho = 0.0;
    const hoc::SinhTransform t(7.5, std::log(p.S_min / p.strike), std::log(p.S_max / p.strike));
    const auto fn = hoc::sv_coefficients(p, t);
    for (double x : {0.0, 0.3, 0.77, 1.0}) {
        for (double y : {p.y_min(), 1.0, p.y_max()}) {
            const auto c = fn(x, y);
            CHECK(c.b12.v == 0.0);
            CHECK(c.b12.d1 == 0.0);
            CHECK(c.b12.d22 == 0.0);
        }
    }
}

// Analytic jets vs central differences of the values.
TEST_CASE("Coefficients.JetDerivativesMatchFiniteDifferences") {
    hoc::SVParams p;
    p.rho = -0.4;
    const hoc::SinhTransform t(7.5, std::log(p.S_min / p.strike), std::log(p.S_max / p.strike));
    const auto fn = hoc::sv_coefficients(p, t);
    const double x = 0.41, y = 1.3, e = 1e-4;
    auto get = [&](double xx, double yy, int which) {
        const auto c = fn(xx, yy);
        const hoc::Jet2* js[] = {&c.a1, &c.a2, &c.b12, &c.c1, &c.c2, &c.d};
        return js[which]->v;
    };
    const auto c = fn(x, y);
    const hoc::Jet2* js[] = {&c.a1, &c.a2, &c.b12, &c.c1, &c.c2, &c.d};
    for (int w = 0; w < 6; ++w) {
        const double fx = (get(x + e, y, w) - get(x - e, y, w)) / (2 * e);
        const double fy = (get(x, y + e, w) - get(x, y - e, w)) / (2 * e);
        const double fxx = (get(x + e, y, w) - 2 * get(x, y, w) + get(x - e, y, w)) / (e * e);
        const double fyy = (get(x, y + e, w) - 2 * get(x, y, w) + get(x, y - e, w)) / (e * e);
        const double fxy = (get(x + e, y + e, w) - get(x + e, y - e, w) - get(x - e, y + e, w) +
                            get(x - e, y - e, w)) /
                           (4 * e * e);
        const double s = 1.0 + std::abs(js[w]->v) + std::abs(js[w]->d1) + std::abs(js[w]->d11);
        CHECK_MESSAGE(std::abs(js[w]->d1 - fx) <= 1e-5 * s, w);
        CHECK_MESSAGE(std::abs(js[w]->d2 - fy) <= 1e-5 * s, w);
        CHECK_MESSAGE(std::abs(js[w]->d11 - fxx) <= 1e-3 * s, w);
        CHECK_MESSAGE(std::abs(js[w]->d22 - fyy) <= 1e-3 * s, w);
        CHECK_MESSAGE(std::abs(js[w]->d12 - fxy) <= 1e-3 * s, w);
    }
}

TEST_CASE("Coefficients.SampledField") {
    const auto g = hoc::Grid2D(8, 8, hoc::Bounds2D::unit_square());
    const auto cf = hoc::sample_coefficients(ht::variable_general(), g);
    CHECK(cf.size() == 81u);
    CHECK(cf.at(3, 5).a1.v == doctest::Approx(ht::variable_general()(g.x(3), g.y(5)).a1.v));
    CHECK(cf.max_diffusion() > 0.0);
    CHECK(cf.max_cross_ratio() < 1.0);
}

TEST_CASE("Coefficients.RejectsInvalidSamples") {
    const auto g = hoc::Grid2D(4, 4, hoc::Bounds2D::unit_square());
    auto with = [](auto mutate) {
        return [mutate](double x, double y) {
            auto c = ht::constant_heat()(x, y);
            mutate(c);
            return c;
        };
    };
    CHECK_THROWS_AS(hoc::sample_coefficients(with([](hoc::PdeCoefficients& c) { c.a1.v = 0.5; }), g), hoc::NumericalError);
    CHECK_THROWS_AS(hoc::sample_coefficients(with([](hoc::PdeCoefficients& c) { c.a2.v = 0.0; }), g), hoc::NumericalError);
    CHECK_THROWS_AS(hoc::sample_coefficients(with([](hoc::PdeCoefficients& c) { c.d.v = 0.0; }), g), hoc::NumericalError);
    CHECK_THROWS_AS(hoc::sample_coefficients(with([](hoc::PdeCoefficients& c) {
                     c.c1.d2 = std::numeric_limits<double>::quiet_NaN();
                 }),
                                          g), hoc::NumericalError);
}

}  // namespace
