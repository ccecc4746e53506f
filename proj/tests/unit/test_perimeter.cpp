#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "nlper/errors.hpp"
#include "nlper/perimeter.hpp"

using namespace nlper;

namespace {

const char* const kArea25 =
    "###....\n"
    "######.\n"
    "######.\n"
    "#######\n"
    "###....\n";

double area25_closed_form(const ZetaEngine& e) {
    return 24 * e.zeta(1) + 22 * (e.zeta(2) + e.zeta(3)) + 12 * (e.zeta(4) + e.zeta(5)) +
           6 * e.zeta(6) + 2 * e.zeta(7);
}

// Pair sum over two explicit cell ranges on a line.
double brute_pairs(int s1, int e1, int s2, int e2, double lambda) {
    double v = 0.0;
    for (int x = s1; x <= e1; ++x)
        for (int y = s2; y <= e2; ++y) v += std::pow(std::abs(double(x - y)), -lambda);
    return v;
}

}  // namespace

TEST_SUITE("perimeter") {

TEST_CASE("single cell") {
    for (double lambda : {1.8, 2.0, 3.0}) {
        ZetaEngine e(lambda);
        Polyomino cell({{0, 0}});
        CHECK(std::abs(perimeter(cell, e).total - 4 * e.riemann()) < 1e-12);
        CHECK(std::abs(perimeter_direct(cell, e, 50).total - 4 * e.riemann()) < 1e-10);
    }
}

TEST_CASE("area-25 example against its zeta expansion") {
    auto p = testing::grid(kArea25);
    CHECK(classical_perimeter(p) == 24);
    for (double lambda : {1.9, 2.0, 3.0, 5.0}) {
        ZetaEngine e(lambda);
        CHECK(std::abs(perimeter(p, e).total - area25_closed_form(e)) < 1e-9);
    }
}

TEST_CASE("two separated cells") {
    ZetaEngine e(2.0);
    Polyomino pair({{0, 0}, {2, 0}});
    const auto b = perimeter(pair, e);
    CHECK(std::abs(b.horizontal - (2 * e.riemann() + 2 * (e.riemann() - 0.25))) < 1e-12);
    CHECK(std::abs(b.total - perimeter_direct(pair, e, 10000).total) < 1e-9);
}

TEST_CASE("line contributions add up") {
    auto p = testing::grid(kArea25);
    ZetaEngine e(2.2);
    const auto b = perimeter(p, e);
    double h = 0, v = 0;
    for (int y = 0; y < p.height(); ++y) h += perimeter_line(p, Orientation::Horizontal, y, e);
    for (int x = 0; x < p.width(); ++x) v += perimeter_line(p, Orientation::Vertical, x, e);
    CHECK(std::abs(h - b.horizontal) < 1e-12);
    CHECK(std::abs(v - b.vertical) < 1e-12);
    CHECK(b.total == b.horizontal + b.vertical);
}

TEST_CASE("interval interaction equals the pair sum") {
    ZetaEngine e(2.3);
    for (int l1 = 1; l1 <= 5; ++l1)
        for (int l2 = 1; l2 <= 5; ++l2)
            for (int gap = 1; gap <= 4; ++gap) {
                const int s2 = l1 - 1 + gap;
                CHECK(std::abs(interval_interaction(0, l1 - 1, s2, s2 + l2 - 1, e) -
                               brute_pairs(0, l1 - 1, s2, s2 + l2 - 1, 2.3)) < 1e-13);
            }
}

TEST_CASE("strip formula matches the direct double sum") {
    const auto shapes = testing::corpus(7, 12, 25);
    for (double lambda : {1.8, 2.0, 3.0}) {
        ZetaEngine e(lambda);
        double worst = 0;
        for (const auto& p : shapes) {
            const auto fast = perimeter(p, e);
            const auto slow = perimeter_direct(p, e, 40);
            worst = std::max(worst, std::abs(fast.total - slow.total));
            CHECK(std::abs(fast.horizontal - slow.horizontal) < 1e-8);
        }
        CAPTURE(lambda);
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("direct sum rejects a window narrower than the shape") {
    ZetaEngine e(2.0);
    CHECK_THROWS_AS(perimeter_direct(realize(ShapeSpec::rect(1, 6)), e, 5), WindowTooSmall);
}

TEST_CASE("dihedral and translation invariance") {
    ZetaEngine e(1.9);
    for (const auto& p : testing::corpus(6, 9, 20)) {
        const double base = perimeter(p, e).total;
        for (const auto& q : symmetries(p)) CHECK(std::abs(perimeter(q, e).total - base) <= 1e-12);
        std::vector<Cell> moved;
        for (auto c : p.cells()) moved.push_back({c.x - 17, c.y + 4});
        CHECK(perimeter(Polyomino(moved), e).total == base);
    }
}

TEST_CASE("classical limit") {
    ZetaEngine e(50.0);
    for (const auto& p : testing::corpus(8, 12, 30))
        CHECK(std::abs(perimeter(p, e).total - classical_perimeter(p)) < 1e-10);
}

TEST_CASE("separating two cells raises the perimeter") {
    ZetaEngine e(2.0);
    double previous = perimeter(Polyomino({{0, 0}, {1, 0}}), e).total;
    for (int d = 2; d <= 30; ++d) {
        const double cur = perimeter(Polyomino({{0, 0}, {d, 0}}), e).total;
        CHECK(cur > previous);
        previous = cur;
    }
}

TEST_CASE("closed forms agree with the strip formula") {
    for (double lambda : {1.8, 2.4, 5.0}) {
        ZetaEngine e(lambda);
        for (int a = 1; a <= 8; ++a)
            for (int b = a; b <= 8; ++b)
                for (auto side : {Side::Shorter, Side::Longer}) {
                    const int side_len = side == Side::Shorter ? a : b;
                    for (int k = 0; k < side_len; ++k) {
                        const auto spec = ShapeSpec::rect(a, b, k, side);
                        const double closed = perimeter_shape(spec, e);
                        for (int off = 0; off + k <= side_len; ++off)
                            CHECK(std::abs(closed - perimeter(realize(spec, off), e).total) < 1e-9);
                        CHECK(classical_perimeter(spec) == classical_perimeter(realize(spec)));
                    }
                }
    }
}

TEST_CASE("closed form examples") {
    ZetaEngine e(2.0);
    CHECK(std::abs(perimeter_shape(ShapeSpec::square(2), e) - 8 * (2 * e.riemann() - 1)) < 1e-12);
    const double line = 2 * e.zeta_prefix(4) + 8 * e.riemann();
    CHECK(std::abs(perimeter_shape(ShapeSpec::rect(1, 4), e) - line) < 1e-12);
    CHECK(std::abs(perimeter_direct(realize(ShapeSpec::rect(1, 4)), e, 100).total - line) < 1e-9);
    CHECK(std::abs(perimeter_direct(realize(ShapeSpec::square(2)), e, 100).total -
                   perimeter(realize(ShapeSpec::square(2)), e).total) < 1e-9);
}

TEST_CASE("left-justified diagrams satisfy the cell identity") {
    // For a diagram with left-justified rows of non-increasing length, every
    // cell (x, y) contributes 2 zeta(x+1) + 2 zeta(y+1).
    ZetaEngine e(2.6);
    for (const auto& rows : std::vector<std::vector<int>>{{1}, {3, 1}, {4, 4, 2}, {5, 3, 3, 1}, {6, 6, 6}}) {
        std::vector<Cell> cells;
        double expected = 0;
        for (int y = 0; y < static_cast<int>(rows.size()); ++y)
            for (int x = 0; x < rows[static_cast<std::size_t>(y)]; ++x) {
                cells.push_back({x, y});
                expected += 2 * (e.zeta(x + 1) + e.zeta(y + 1));
            }
        CHECK(std::abs(perimeter(Polyomino(cells), e).total - expected) < 1e-11);
    }
}

TEST_CASE("classical perimeter") {
    CHECK(classical_perimeter(Polyomino({{0, 0}})) == 4);
    for (int a = 1; a <= 6; ++a)
        for (int b = a; b <= 6; ++b) CHECK(classical_perimeter(realize(ShapeSpec::rect(a, b))) == 2 * (a + b));
    CHECK(classical_perimeter(Polyomino({{0, 0}, {2, 0}})) == 8);
}

TEST_CASE("comparison margin") {
    CHECK(compare_perimeters(1.0, 1.0 + 1e-10) == 0);
    CHECK(compare_perimeters(1.0, 1.0 + 1e-8) == -1);
    CHECK(compare_perimeters(2.0, 1.0) == 1);
}

}  // TEST_SUITE
