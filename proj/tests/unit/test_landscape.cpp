#include <doctest.h>

#include <cmath>

#include "nlper/catalog.hpp"
#include "nlper/errors.hpp"
#include "nlper/landscape.hpp"
#include "nlper/perimeter.hpp"

using namespace nlper;

namespace {

// Perimeter on the L x L torus with wrapped axial distances, summed cell by
// cell over every empty site of the same row and column.
double torus_oracle(const Polyomino& p, int L, double lambda) {
    double v = 0.0;
    for (const auto& c : p.cells())
        for (int t = 0; t < L; ++t) {
            const int d = std::min(t, L - t);
            if (d == 0) continue;
            if (!p.contains((c.x + t) % L, c.y)) v += std::pow(double(d), -lambda);
            if (!p.contains(c.x, (c.y + t) % L)) v += std::pow(double(d), -lambda);
        }
    return v;
}

double second_difference(const ModelParams& params, double l, double step = 1e-3) {
    return (f_continuous(l + step, params) - 2 * f_continuous(l, params) + f_continuous(l - step, params)) /
           (step * step);
}

}  // namespace

TEST_SUITE("landscape") {

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((ModelParams{1.0, 0.1, {}}).validate(), InvalidArgument);
    CHECK_THROWS_AS((ModelParams{2.0, 0.0, {}}).validate(), InvalidArgument);
    CHECK_THROWS_AS((ModelParams{2.0, 0.1, 3}).validate(), InvalidArgument);
    CHECK_NOTHROW((ModelParams{2.0, 0.1, 4}).validate());
}

TEST_CASE("excitation energy on squares and quasi-squares") {
    const ModelParams params{2.4, 0.41, {}};
    ZetaEngine e(params.lambda);
    for (int l = 1; l <= 15; ++l) {
        const auto sq = delta_H(l * l, params, e);
        CHECK(std::abs(sq.delta_H - (8 * l * e.zeta_prefix(l) - 2 * params.h * l * l)) < 1e-9);
        const int n = l * (l + 1);
        const double quasi = 8 * l * e.zeta_prefix(l) + 4 * e.zeta_prefix(l) + 4 * l * e.zeta(l + 1) -
                             2 * params.h * n;
        CHECK(std::abs(delta_H(n, params, e).delta_H - quasi) < 1e-9);
    }
}

TEST_CASE("energy equals twice the minimal catalog perimeter minus the field term") {
    const ModelParams params{2.0, 0.3, {}};
    ZetaEngine e(params.lambda);
    for (int n = 1; n <= 200; ++n) {
        const auto pt = delta_H(n, params, e);
        const auto best = argmin_shape(n, e);
        CHECK(std::abs(pt.delta_H - (2 * best.front().nonlocal_perimeter - 2 * params.h * n)) < 1e-9);
        CHECK(pt.minimizing_specs.size() == best.size());
    }
}

TEST_CASE("wrong-side protuberance on the five by six body") {
    for (double lambda : {2.4, 5.0, 50.0}) {
        const ModelParams params{lambda, 0.41, {}};
        ZetaEngine e(lambda);
        const double right = 2 * perimeter_shape(ShapeSpec::quasi_square(5, 2), e) - 2 * params.h * 32;
        const double wrong = 2 * perimeter_shape(ShapeSpec::quasi_square(5, 2, Side::Longer), e) - 2 * params.h * 32;
        if (lambda >= 5) CHECK(std::abs(delta_H(32, params, e).delta_H - right) < 1e-9);
        // Each protuberance cell sees its row shortened from 7 to 6.
        CHECK(std::abs((wrong - right) - 8 * std::pow(6.0, -lambda)) < 1e-10);
        CHECK(wrong - right >= 0);
    }
}

TEST_CASE("landscape critical droplets") {
    const auto mid = landscape(ModelParams{2.4, 0.41, {}}, 260);
    CHECK(mid.points.size() == 260);
    CHECK(mid.n_c == 185);
    CHECK(mid.critical_side == 14);
    CHECK(mid.ties.empty());
    CHECK(mid.points[184].minimizing_specs.front().label() == "quasi(13)+3");

    const auto sharp = landscape(ModelParams{50.0, 0.41, {}}, 60);
    CHECK(sharp.n_c == 21);
    CHECK(sharp.critical_side == 5);
}

TEST_CASE("short-range landscape") {
    CHECK(std::abs(short_range_delta_H(4, 0.41) - 12.72) < 1e-12);
    CHECK(std::abs(short_range_delta_H(25, 0.41) - 19.5) < 1e-12);
    const auto sr = short_range_landscape(0.41, 60);
    CHECK(sr.n_c == 21);
    CHECK(sr.critical_side == 5);
    CHECK(sr.critical_side == static_cast<int>(2 / 0.41) + 1);
    // The sharp long-range landscape and its short-range counterpart agree.
    const auto lr = landscape(ModelParams{50.0, 0.41, {}}, 60);
    for (int n = 1; n <= 60; ++n) CHECK(std::abs(lr.points[n - 1].delta_H - sr.delta_H[n - 1]) < 1e-8);
}

TEST_CASE("sawtooth below the critical shell") {
    const ModelParams params{2.4, 0.41, {}};
    ZetaEngine e(params.lambda);
    for (int l = 1; l <= 20; ++l) CHECK(delta_H(l * l, params, e).delta_H < delta_H(l * l + 1, params, e).delta_H);
}

TEST_CASE("critical length of the square family") {
    CHECK(critical_length_square(ModelParams{1.8, 0.41, {}}, 200).l_c == 62);
    CHECK(critical_length_square(ModelParams{2.4, 0.41, {}}, 200).l_c == 13);
    CHECK(critical_length_square(ModelParams{50.0, 0.41, {}}, 200).l_c == 5);
    int previous = 1000;
    for (double lambda : {1.8, 2.0, 2.4, 3.0, 5.0, 50.0}) {
        const int lc = critical_length_square(ModelParams{lambda, 0.41, {}}, 300).l_c;
        CHECK(lc <= previous);
        previous = lc;
    }
}

TEST_CASE("ties in the critical length are reported") {
    // f(5) = f(6) for this field at lambda 2.4.
    const ModelParams params{2.4, 0.931434374609866, {}};
    CHECK_THROWS_AS(critical_length_square(params, 40), AmbiguousMax);
}

TEST_CASE("continued form agrees with the finite sums") {
    for (double lambda : {2.1, 2.4, 3.0, 5.0}) {
        const ModelParams params{lambda, 0.41, {}};
        ZetaEngine e(lambda);
        for (int l = 1; l <= 60; ++l) CHECK(std::abs(f_continuous(l, params) - f_square(l, params.h, e)) < 1e-8);
        const auto cl = critical_length_square(params, 60);
        REQUIRE(cl.f_continuous.size() == cl.f.size());
    }
    CHECK_THROWS_AS(f_continuous(3.0, ModelParams{2.0, 0.4, {}}), DivergentParameter);
    CHECK_THROWS_AS(d2f_dl2(ModelParams{1.9, 0.4, {}}, 3.0), DivergentParameter);
}

TEST_CASE("derivatives match finite differences") {
    for (double lambda : {2.5, 3.0, 4.0}) {
        const ModelParams params{lambda, 0.4, {}};
        for (int l = 2; l <= 50; ++l) {
            const double fd1 = (f_continuous(l + 1e-4, params) - f_continuous(l - 1e-4, params)) / 2e-4;
            CHECK(std::abs(df_dl(l, params) - fd1) <= 1e-4 * std::max(1.0, std::abs(fd1)));
            const double fd2 = second_difference(params, l);
            const double d2 = d2f_dl2(params, l);
            CAPTURE(lambda);
            CAPTURE(l);
            CHECK(std::abs(d2 - fd2) <= 1e-4 * std::abs(fd2));
        }
    }
}

TEST_CASE("second derivative plateau") {
    for (double lambda : {4.0, 5.0, 8.0})
        for (int l = 30; l <= 80; ++l) CHECK(std::abs(d2f_dl2(ModelParams{lambda, 0.4, {}}, l) + 1.6) < 0.02);
    // For exponents close to 2 the curvature stays above the plateau.
    for (int l = 2; l <= 50; ++l) CHECK(d2f_dl2(ModelParams{2.2, 0.4, {}}, l) > -1.6);
}

TEST_CASE("unit cell on the torus") {
    for (int L : {5, 6, 51, 100, 101})
        for (double lambda : {1.5, 2.0, 3.0}) {
            double expected = 0.0;
            if (L % 2 == 1) {
                for (int r = 1; r <= (L - 1) / 2; ++r) expected += 4 * std::pow(double(r), -lambda);
            } else {
                for (int r = 1; r <= (L - 2) / 2; ++r) expected += 4 * std::pow(double(r), -lambda);
                expected += 2 * std::pow(L / 2.0, -lambda);
            }
            CHECK(std::abs(unit_square_torus(L, lambda) - expected) < 1e-12);
            CHECK(std::abs(unit_square_torus(L, lambda) - torus_oracle(Polyomino({{0, 0}}), L, lambda)) < 1e-12);
        }
}

TEST_CASE("torus comparison") {
    const double lambda = 2.0;
    ZetaEngine e(lambda);
    for (int L : {20, 51, 100, 101})
        for (const auto& p : {Polyomino({{0, 0}}), realize(ShapeSpec::square(3)), realize(ShapeSpec::rect(2, 5, 1))}) {
            const auto t = torus_correction_bound(p, ModelParams{lambda, 0.1, L});
            CHECK(std::abs(t.torus - torus_oracle(p, L, lambda)) < 1e-10);
            CHECK(std::abs(t.infinite - perimeter(p, e).total) < 1e-12);
            CHECK(std::abs(t.exact_gap - (t.infinite - t.torus)) < 1e-10);
            const double unit_gap = 4 * e.riemann() - unit_square_torus(L, lambda);
            CHECK(std::abs(t.exact_gap - p.area() * unit_gap) < 1e-10);
            CHECK(t.exact_gap <= t.bound);
            CHECK(std::abs(t.bound - t.constant * p.area() * std::pow(double(L), 1 - lambda)) < 1e-12);
        }
    // On even sides the gap overshoots the half-side integral.
    const auto even = torus_correction_bound(Polyomino({{0, 0}}), ModelParams{lambda, 0.1, 100});
    CHECK(even.exact_gap > even.nominal_bound);
    CHECK(std::abs(even.nominal_bound - 0.08) < 1e-15);
    const auto odd = torus_correction_bound(Polyomino({{0, 0}}), ModelParams{lambda, 0.1, 101});
    CHECK(odd.exact_gap <= odd.nominal_bound);
}

TEST_CASE("torus errors") {
    CHECK_THROWS_AS(torus_correction_bound(realize(ShapeSpec::rect(1, 6)), ModelParams{2.0, 0.1, 10}),
                    PolyominoTooLargeForTorus);
    CHECK_THROWS_AS(torus_correction_bound(Polyomino({{0, 0}}), ModelParams{2.0, 0.1, {}}), InvalidArgument);
}

}  // TEST_SUITE
