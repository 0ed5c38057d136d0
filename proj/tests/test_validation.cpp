#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "trigfund/error.hpp"
#include "trigfund/validation.hpp"

using namespace trigfund;

namespace {
const GridKind kKinds[] = {GridKind::Type0, GridKind::Type1};
}

TEST_CASE("periodic_quadrature") {
    CHECK(std::abs(periodic_quadrature([](double t) { return std::cos(t); }, 256)) < 1e-12);
    CHECK(std::abs(periodic_quadrature([](double t) { return std::cos(t) * std::cos(t); }, 256) - kPi) < 1e-12);

    const auto g = make_grid(GridKind::Type0, 9);
    const double integral = periodic_quadrature(
        [&](double t) {
            const double v = tm_eval(g, 1, t);
            return v * v;
        },
        4096);
    CHECK(std::abs(integral - kTwoPi / 9) < 1e-10);

    CHECK_THROWS_AS((void)periodic_quadrature([](double) { return 1.0; }, 15), Error);
}

TEST_CASE("periodic_quadrature is exact for trig polynomials below P/2") {
    const int points = 64;
    for (int k = 0; k < points / 2; ++k) {
        for (int m = 0; m < points / 2; ++m) {
            const double got =
                periodic_quadrature([&](double t) { return std::cos(k * t) * std::cos(m * t); }, points);
            double expected = 0.0;
            if (k == m) {
                expected = k == 0 ? kTwoPi : kPi;
            }
            CHECK(std::abs(got - expected) < 1e-12 * kTwoPi);
        }
    }
}

TEST_CASE("continuous_gram") {
    for (auto kind : kKinds) {
        const auto g = make_grid(kind, 9);
        const auto tm = continuous_gram(g, InterpPoly{}, 4096);
        CHECK(tm.normalization() == GramNormalization::ContinuousScaled);
        CHECK(tm.max_deviation_from_identity() < 1e-10);
        CHECK(tm.max_asymmetry() < 1e-12);
    }
    const auto g = make_grid(GridKind::Type0, 9);
    const auto ls = continuous_gram(g, LSPoly{2}, 4096);
    CHECK(ls.max_off_diagonal() > 1e-3);
    // (N/2π)∫φ_i φ_j = φ_{i,q}(t_j) for the Dirichlet-type kernel.
    for (int i = 1; i <= 9; ++i) {
        for (int j = 1; j <= 9; ++j) {
            CHECK(std::abs(ls(i, j) - phi_ls_eval(g, i, 2, g.node(j))) < 1e-12);
        }
    }
    // Harmonics up to 100·9 + 4 < 2048 are integrated exactly.
    const auto ts = continuous_gram(g, InterpSpline{SplineShape{1, 100}}, 4096);
    CHECK(ts.max_off_diagonal() > 1e-4);
    CHECK(ts.max_asymmetry() < 1e-12);
}

TEST_CASE("discrete_gram") {
    for (auto kind : kKinds) {
        for (int n : {3, 9, 17}) {
            const auto g = make_grid(kind, n);
            CHECK(discrete_gram(g, InterpPoly{}).max_deviation_from_identity() < 1e-12);
            CHECK(discrete_gram(g, InterpSpline{SplineShape{2, 100}}).max_deviation_from_identity() < 1e-12);
        }
    }
    const auto g = make_grid(GridKind::Type0, 9);
    const auto ls = discrete_gram(g, LSPoly{1});
    CHECK(ls.normalization() == GramNormalization::Discrete);
    for (int i = 1; i <= 9; ++i) {
        CHECK(std::abs(ls(i, i) - 1.0 / 3) < 1e-12);
    }
    CHECK(ls.max_off_diagonal() > 1e-3);
    CHECK_THROWS_AS((void)ls(0, 1), Error);
}

TEST_CASE("ls_oracle") {
    const auto g = make_grid(GridKind::Type0, 9);
    const auto ones = ls_oracle(SampleSet(g, std::vector<double>(9, 1.0)), 2);
    CHECK(std::abs(ones.a0 - 2.0) < 1e-12);
    CHECK(ones.order() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(ones.a[k]) < 1e-12);
        CHECK(std::abs(ones.b[k]) < 1e-12);
    }

    for (auto kind : kKinds) {
        const auto grid = make_grid(kind, 9);
        const auto s3 = ls_oracle(SampleSet::from_function(grid, [](double t) { return std::sin(3 * t); }), 2);
        CHECK(std::abs(s3.a0) < 1e-12);
        for (int k = 0; k < 4; ++k) {
            CHECK(std::abs(s3.a[k]) < 1e-12);
            CHECK(std::abs(s3.b[k]) < 1e-12);
        }
    }

    std::mt19937_64 rng(59);
    for (auto kind : kKinds) {
        for (int n : {5, 9, 13}) {
            const auto grid = make_grid(kind, n);
            for (int set = 0; set < 10; ++set) {
                const SampleSet s(grid, oracle::random_values(rng, n));
                const auto full = fourier_coeffs(s);
                for (int q = 0; q <= grid.harmonic_order(); ++q) {
                    const auto c = ls_oracle(s, q);
                    CHECK(std::abs(c.a0 - full.a0) < 1e-9);
                    for (int k = 1; k <= grid.harmonic_order(); ++k) {
                        const double ea = k <= q ? full.a[k - 1] : 0.0;
                        const double eb = k <= q ? full.b[k - 1] : 0.0;
                        CHECK(std::abs(c.a[k - 1] - ea) < 1e-9);
                        CHECK(std::abs(c.b[k - 1] - eb) < 1e-9);
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS((void)ls_oracle(SampleSet(g, std::vector<double>(9, 1.0)), 5), Error);
}

TEST_CASE("collinearity_defect") {
    const auto g = make_grid(GridKind::Type0, 9);
    CHECK(collinearity_defect(g, 5, SplineShape{1, 5000}, 5) < 1e-3);
    CHECK(collinearity_defect(g, 5, SplineShape{3, 2000}, 5) > 1e-3);
    CHECK(collinearity_defect([](double t) { return 3.0 - 0.5 * t; }, 1.0, 1.7) < 1e-14);
    // Last interval wraps past 2π.
    CHECK_NOTHROW((void)collinearity_defect(g, 1, SplineShape{1, 10}, 9));
    CHECK_THROWS_AS((void)collinearity_defect(g, 1, SplineShape{1, 10}, 10), Error);
    CHECK_THROWS_AS((void)collinearity_defect(g, 0, SplineShape{1, 10}, 1), Error);
}
