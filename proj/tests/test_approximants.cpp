#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "trigfund/approximants.hpp"
#include "trigfund/error.hpp"
#include "trigfund/validation.hpp"

using namespace trigfund;

namespace {

const GridKind kKinds[] = {GridKind::Type0, GridKind::Type1};

std::vector<BasisSpec> all_bases(int q) {
    return {InterpPoly{}, InterpSpline{SplineShape{2, 50}}, LSPoly{q}, LSSpline{q, SplineShape{1, 50}}};
}

} // namespace

TEST_CASE("SampleSet validation") {
    const auto g = make_grid(GridKind::Type0, 5);
    CHECK_THROWS_AS(SampleSet(g, {1.0, 2.0}), Error);
    try {
        SampleSet(g, {1.0, 2.0, NAN, 4.0, 5.0});
        FAIL("expected NonFiniteInput");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonFiniteInput);
    }
    const SampleSet s(g, {1.0, 2.0, 3.0, 4.0, 5.0});
    CHECK(s.value(1) == 1.0);
    CHECK(s.value(5) == 5.0);
    CHECK_THROWS_AS((void)s.value(6), Error);
}

TEST_CASE("build: constants and in-span functions are reproduced") {
    for (auto kind : kKinds) {
        const auto g = make_grid(kind, 9);
        const auto ones = SampleSet::from_function(g, [](double) { return 1.0; });
        for (const auto& spec : all_bases(2)) {
            const auto approx = build(ones, spec);
            for (double t : {0.0, 0.77, 2.0, 4.5, 6.2}) {
                CHECK(std::abs(approx.evaluate(t) - 1.0) < 1e-12);
            }
        }
        const auto sin2 = SampleSet::from_function(g, [](double t) { return std::sin(2 * t); });
        const auto interp = build(sin2, InterpPoly{});
        for (int i = 0; i < 200; ++i) {
            const double t = kTwoPi * i / 200.0;
            CHECK(std::abs(interp.evaluate(t) - std::sin(2 * t)) < 1e-12);
        }
    }
}

TEST_CASE("LSPoly(q = n) equals InterpPoly") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (auto kind : kKinds) {
        const auto g = make_grid(kind, 9);
        const SampleSet s(g, oracle::random_values(rng, 9));
        const auto interp = build(s, InterpPoly{});
        const auto ls = build(s, LSPoly{4});
        for (int i = 0; i < 100; ++i) {
            const double t = angle(rng);
            CHECK(std::abs(interp.evaluate(t) - ls.evaluate(t)) < 1e-11);
        }
    }
}

TEST_CASE("evaluate at nodes") {
    std::mt19937_64 rng(37);
    for (auto kind : kKinds) {
        const auto g = make_grid(kind, 9);
        const SampleSet s(g, oracle::random_values(rng, 9));
        const auto coeffs = fourier_coeffs(s);
        for (const auto& spec : {BasisSpec{InterpPoly{}}, BasisSpec{InterpSpline{SplineShape{3, 100}}}}) {
            const auto approx = build(s, spec);
            for (int j = 1; j <= 9; ++j) {
                CHECK(std::abs(approx.evaluate(g.node(j)) - s.value(j)) < 1e-11);
                CHECK(std::abs(approx.evaluate(g.node(j) - 3 * kTwoPi) - s.value(j)) < 1e-11);
            }
        }
        for (int q = 0; q < 4; ++q) {
            const auto ls = build(s, LSPoly{q});
            const auto lss = build(s, LSSpline{q, SplineShape{1, 200}});
            for (int j = 1; j <= 9; ++j) {
                const double expected = partial_sum_eval(coeffs, q, g.node(j));
                CHECK(std::abs(ls.evaluate(g.node(j)) - expected) < 1e-11);
                CHECK(std::abs(lss.evaluate(g.node(j)) - expected) < 1e-11);
            }
        }
        const auto zero = build(SampleSet(g, std::vector<double>(9, 0.0)), LSSpline{2, SplineShape{}});
        CHECK(zero.evaluate(1.234) == 0.0);
    }
    const auto g = make_grid(GridKind::Type0, 9);
    const auto approx = build(SampleSet(g, std::vector<double>(9, 1.0)), InterpPoly{});
    CHECK_THROWS_AS((void)approx.evaluate(NAN), Error);
}

TEST_CASE("evaluation is linear in the samples for every basis") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (auto kind : kKinds) {
        const auto g = make_grid(kind, 9);
        const auto f = oracle::random_values(rng, 9);
        const auto h = oracle::random_values(rng, 9);
        const double alpha = 1.7;
        const double beta = -0.6;
        std::vector<double> combo(9);
        for (std::size_t i = 0; i < 9; ++i) {
            combo[i] = alpha * f[i] + beta * h[i];
        }
        for (const auto& spec : all_bases(3)) {
            const auto af = build(SampleSet(g, f), spec);
            const auto ah = build(SampleSet(g, h), spec);
            const auto ac = build(SampleSet(g, combo), spec);
            for (int i = 0; i < 20; ++i) {
                const double t = angle(rng);
                CHECK(std::abs(ac.evaluate(t) - (alpha * af.evaluate(t) + beta * ah.evaluate(t))) < 1e-11);
            }
        }
    }
}

TEST_CASE("fourier_coeffs") {
    const auto g0 = make_grid(GridKind::Type0, 9);
    const auto g1 = make_grid(GridKind::Type1, 9);

    const auto ones = fourier_coeffs(SampleSet::from_function(g0, [](double) { return 1.0; }));
    CHECK(std::abs(ones.a0 - 2.0) < 1e-13);
    CHECK(ones.order() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(ones.a[k]) < 1e-13);
        CHECK(std::abs(ones.b[k]) < 1e-13);
    }

    const auto s1 = fourier_coeffs(SampleSet::from_function(g0, [](double t) { return std::sin(t); }));
    CHECK(std::abs(s1.a0) < 1e-12);
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(s1.a[k]) < 1e-12);
        CHECK(std::abs(s1.b[k] - (k == 0 ? 1.0 : 0.0)) < 1e-12);
    }

    const auto c2 = fourier_coeffs(SampleSet::from_function(g1, [](double t) { return std::cos(2 * t); }));
    CHECK(std::abs(c2.a0) < 1e-12);
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(c2.a[k] - (k == 1 ? 1.0 : 0.0)) < 1e-12);
        CHECK(std::abs(c2.b[k]) < 1e-12);
    }
}

TEST_CASE("partial_sum_eval") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (auto kind : kKinds) {
        const auto g = make_grid(kind, 9);
        const auto c = fourier_coeffs(SampleSet(g, std::vector<double>(9, -2.5)));
        for (int q = 0; q <= 4; ++q) {
            CHECK(std::abs(partial_sum_eval(c, q, angle(rng)) + 2.5) < 1e-13);
        }
        const SampleSet s(g, oracle::random_values(rng, 9));
        const auto coeffs = fourier_coeffs(s);
        for (int j = 1; j <= 9; ++j) {
            CHECK(std::abs(partial_sum_eval(coeffs, 4, g.node(j)) - s.value(j)) < 1e-11);
        }
        for (int q = 0; q <= 4; ++q) {
            const auto ls = build(s, LSPoly{q});
            for (int i = 0; i < 25; ++i) {
                const double t = angle(rng);
                CHECK(std::abs(partial_sum_eval(coeffs, q, t) - ls.evaluate(t)) < 1e-11);
            }
        }
        CHECK_THROWS_AS((void)partial_sum_eval(coeffs, 5, 0.0), Error);
    }
}

TEST_CASE("residual_sse") {
    std::mt19937_64 rng(47);
    const auto g = make_grid(GridKind::Type0, 9);
    const SampleSet s(g, oracle::random_values(rng, 9));
    double energy = 0.0;
    for (double v : s.values()) {
        energy += v * v;
    }
    CHECK(residual_sse(s, build(s, InterpPoly{})) <= 1e-20 * energy);

    const SampleSet zero(g, std::vector<double>(9, 0.0));
    CHECK(residual_sse(zero, build(zero, LSPoly{1})) == 0.0);

    const auto other = make_grid(GridKind::Type1, 9);
    try {
        (void)residual_sse(SampleSet(other, std::vector<double>(9, 0.0)), build(s, InterpPoly{}));
        FAIL("expected GridMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GridMismatch);
    }
}

TEST_CASE("LS polynomial beats perturbed competitors and matches the oracle SSE") {
    std::mt19937_64 rng(53);
    std::normal_distribution<double> noise(0.0, 0.1);
    for (auto kind : kKinds) {
        const auto g = make_grid(kind, 9);
        for (int set = 0; set < 5; ++set) {
            const SampleSet s(g, oracle::random_values(rng, 9));
            const auto coeffs = fourier_coeffs(s);
            for (int q = 0; q < 4; ++q) {
                const double best = residual_sse(s, build(s, LSPoly{q}));
                const auto oracle_coeffs = ls_oracle(s, q);
                double oracle_sse = 0.0;
                for (int j = 1; j <= 9; ++j) {
                    const double r = s.value(j) - partial_sum_eval(oracle_coeffs, q, g.node(j));
                    oracle_sse += r * r;
                }
                CHECK(std::abs(best - oracle_sse) < 1e-9);
                for (int trial = 0; trial < 200; ++trial) {
                    auto competitor = truncate(coeffs, q);
                    competitor.a0 += noise(rng);
                    for (int k = 0; k < q; ++k) {
                        competitor.a[k] += noise(rng);
                        competitor.b[k] += noise(rng);
                    }
                    double sse = 0.0;
                    for (int j = 1; j <= 9; ++j) {
                        const double r = s.value(j) - partial_sum_eval(competitor, q, g.node(j));
                        sse += r * r;
                    }
                    CHECK(best <= sse);
                }
            }
        }
    }
}

TEST_CASE("LS bases reproduce their own span") {
    const auto f = [](double t) { return 0.3 - std::cos(t) + 0.25 * std::sin(2 * t); };
    for (auto kind : kKinds) {
        const auto g = make_grid(kind, 11);
        const auto s = SampleSet::from_function(g, f);
        for (int q = 2; q <= 5; ++q) {
            const auto ls = build(s, LSPoly{q});
            for (int i = 0; i < 50; ++i) {
                const double t = kTwoPi * i / 50.0;
                CHECK(std::abs(ls.evaluate(t) - f(t)) < 1e-11);
            }
            const auto lss = build(s, LSSpline{q, SplineShape{2, 100}});
            for (int j = 1; j <= 11; ++j) {
                CHECK(std::abs(lss.evaluate(g.node(j)) - s.value(j)) < 1e-11);
            }
        }
    }
}

TEST_CASE("build propagates parameter errors") {
    const auto g = make_grid(GridKind::Type0, 9);
    const SampleSet s(g, std::vector<double>(9, 1.0));
    CHECK_THROWS_AS((void)build(s, LSPoly{5}), Error);
    CHECK_THROWS_AS((void)build(s, LSSpline{5, SplineShape{}}), Error);
    CHECK_THROWS_AS((void)build(s, InterpSpline{SplineShape{40, 5}}), Error);
    CHECK_THROWS_AS((void)truncate(fourier_coeffs(s), 5), Error);
}

TEST_CASE("batch evaluation preserves order") {
    const auto g = make_grid(GridKind::Type1, 9);
    const auto s = SampleSet::from_function(g, [](double t) { return std::cos(t); });
    const auto approx = build(s, InterpSpline{SplineShape{3, 50}});
    const std::vector<double> ts{3.0, 0.5, 6.0, 0.5};
    const auto values = approx.evaluate(ts);
    REQUIRE(values.size() == ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        CHECK(values[i] == approx.evaluate(ts[i]));
    }
}
