#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "nlper/errors.hpp"
#include "nlper/lattice.hpp"

using namespace nlper;

TEST_SUITE("lattice") {

TEST_CASE("canonicalize translates to the origin") {
    CHECK(canonicalize({{5, 7}}).cells() == std::vector<Cell>{{0, 0}});
    CHECK(canonicalize({{1, 1}, {2, 1}}).cells() == std::vector<Cell>{{0, 0}, {1, 0}});
    // Disconnected input is allowed and keeps its gap.
    CHECK(canonicalize({{0, 0}, {0, 2}}).cells() == std::vector<Cell>{{0, 0}, {0, 2}});
    CHECK(canonicalize({{-3, 4}, {-2, 4}}).cells() == std::vector<Cell>{{0, 0}, {1, 0}});
}

TEST_CASE("construction rejects empty and repeated cells") {
    CHECK_THROWS_AS(Polyomino({}), EmptyPolyomino);
    CHECK_THROWS_AS(Polyomino({{0, 0}, {1, 0}, {0, 0}}), DuplicateCell);
}

TEST_CASE("bounding box and membership") {
    Polyomino p({{0, 0}, {3, 1}});
    CHECK(p.width() == 4);
    CHECK(p.height() == 2);
    CHECK(p.contains(3, 1));
    CHECK_FALSE(p.contains(1, 0));
    CHECK_FALSE(p.contains(-1, 0));
    CHECK_FALSE(p.contains(4, 1));
}

TEST_CASE("strips of simple shapes") {
    auto sq = realize(ShapeSpec::square(2));
    auto h = strips(sq, Orientation::Horizontal);
    REQUIRE(h.size() == 2);
    CHECK(h[0].length == 2);
    CHECK(h[1].line() == 1);

    Polyomino pair({{0, 0}, {2, 0}});
    auto hp = strips(pair, Orientation::Horizontal);
    REQUIRE(hp.size() == 2);
    CHECK(hp[0].line() == hp[1].line());
    CHECK(hp[1].start() - hp[0].end() == 2);
    CHECK(strips(pair, Orientation::Vertical).size() == 2);
}

TEST_CASE("strip lengths of the area-25 example shape") {
    auto p = testing::grid(
        "###....\n"
        "######.\n"
        "######.\n"
        "#######\n"
        "###....\n");
    CHECK(p.area() == 25);
    std::vector<int> rows, cols;
    for (auto& s : strips(p, Orientation::Horizontal)) rows.push_back(s.length);
    for (auto& s : strips(p, Orientation::Vertical)) cols.push_back(s.length);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    CHECK(rows == std::vector<int>{3, 3, 6, 6, 7});
    CHECK(cols == std::vector<int>{1, 3, 3, 3, 5, 5, 5});
}

TEST_CASE("strips partition the cells and are separated") {
    for (const auto& p : testing::corpus(6, 9, 40)) {
        for (auto o : {Orientation::Horizontal, Orientation::Vertical}) {
            int total = 0;
            for (const auto& line : strips_by_line(p, o)) {
                for (std::size_t i = 0; i < line.size(); ++i) {
                    total += line[i].length;
                    if (i > 0) CHECK(line[i].start() >= line[i - 1].end() + 2);
                }
            }
            CHECK(total == p.area());
        }
    }
}

TEST_CASE("classification examples") {
    CHECK(classify(realize(ShapeSpec::rect(2, 3))) == ShapeClass::CrossConvex);
    CHECK(classify(Polyomino({{0, 0}, {2, 0}})) == ShapeClass::Disconnected);
    CHECK(classify(Polyomino({{0, 0}, {1, 0}, {0, 1}})) == ShapeClass::CrossConvex);
    // U shape: the top row holds two strips.
    CHECK(classify(testing::grid("#.#\n###\n")) == ShapeClass::Concave);
    // Plus sign: every line is one strip and the middle row and column span the box.
    CHECK(classify(testing::grid(".#.\n###\n.#.\n")) == ShapeClass::CrossConvex);
    // Staircase: convex, yet no row spans the width.
    CHECK(classify(testing::grid("##.\n.##\n")) == ShapeClass::ConvexNotCross);
    for (int a = 1; a <= 6; ++a)
        for (int b = a; b <= 6; ++b) CHECK(classify(realize(ShapeSpec::rect(a, b))) == ShapeClass::CrossConvex);
}

TEST_CASE("classification is dihedrally invariant") {
    for (const auto& p : testing::corpus(7, 9, 30)) {
        const auto c = classify(p);
        for (const auto& q : symmetries(p)) CHECK(classify(q) == c);
    }
}

TEST_CASE("realize and specs") {
    CHECK(realize(ShapeSpec::square(2)).cells() == std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto line = realize(ShapeSpec::rect(1, 4));
    CHECK(line.area() == 4);
    CHECK(line.height() == 1);
    CHECK(realize(ShapeSpec::square(5, 2)).area() == 27);
    CHECK(realize(ShapeSpec::quasi_square(5, 2, Side::Longer)).area() == 32);
    CHECK_THROWS_AS(realize(ShapeSpec::rect(3, 2)), InvalidShapeSpec);
    CHECK_THROWS_AS(realize(ShapeSpec::rect(2, 5, 2, Side::Shorter)), InvalidShapeSpec);
    CHECK_FALSE(ShapeSpec::rect(2, 5, 2, Side::Shorter).valid());
    CHECK_NOTHROW(ShapeSpec::rect(2, 5, 4, Side::Longer).validate());
    CHECK_THROWS_AS(ShapeSpec::rect(2, 5, 5, Side::Longer).validate(), InvalidShapeSpec);
    CHECK(ShapeSpec::rect(3, 3).family == Family::Square);
    CHECK(ShapeSpec::rect(3, 4).family == Family::QuasiSquare);

    for (int a = 1; a <= 8; ++a)
        for (int b = a; b <= 8; ++b)
            for (auto side : {Side::Shorter, Side::Longer}) {
                const int side_len = side == Side::Shorter ? a : b;
                for (int k = 0; k < side_len; ++k) {
                    auto s = ShapeSpec::rect(a, b, k, side);
                    auto p = realize(s);
                    CHECK(p.area() == a * b + k);
                    CHECK(is_rect_with_protuberance(p));
                    CHECK(is_connected(p));
                }
            }
}

TEST_CASE("offsets slide the protuberance along its side") {
    auto s = ShapeSpec::rect(3, 5, 2, Side::Shorter);
    CHECK(realize(s, 0).contains(5, 0));
    CHECK(realize(s, 1).contains(5, 2));
    CHECK_FALSE(realize(s, 1).contains(5, 0));
    CHECK_THROWS_AS(realize(s, 2), InvalidShapeSpec);
}

TEST_CASE("orbit sizes") {
    CHECK(symmetries(realize(ShapeSpec::square(2))).size() == 1);
    CHECK(symmetries(realize(ShapeSpec::rect(1, 2))).size() == 2);
    CHECK(symmetries(Polyomino({{0, 0}, {1, 0}, {0, 1}})).size() == 4);
    CHECK(symmetries(testing::grid("#..\n###\n")).size() == 8);
}

TEST_CASE("congruence agrees with orbit representatives") {
    auto shapes = testing::corpus(5, 5, 0);
    for (const auto& p : shapes)
        for (const auto& q : shapes)
            CHECK(congruent(p, q) == (orbit_representative(p) == orbit_representative(q)));
}

TEST_CASE("rotations and reflections") {
    auto p = testing::grid("#..\n###\n");
    CHECK(rotate_quarter(rotate_quarter(rotate_quarter(rotate_quarter(p)))) == p);
    CHECK(transpose(transpose(p)) == p);
    CHECK(reflect_x(reflect_x(p)) == p);
    CHECK(rotate_quarter(p).width() == p.height());
}

TEST_CASE("rectangle with protuberance recognition") {
    CHECK(is_rect_with_protuberance(testing::grid("#..\n###\n")));
    CHECK(is_rect_with_protuberance(testing::grid(".#.\n###\n")));
    CHECK_FALSE(is_rect_with_protuberance(testing::grid(".#.\n###\n.#.\n")));
    CHECK_FALSE(is_rect_with_protuberance(testing::grid("##.\n.##\n")));
    // A full extra row is a bigger rectangle.
    CHECK(is_rect_with_protuberance(testing::grid("###\n###\n")));
}

}  // TEST_SUITE
