#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace nlper {

struct Cell {
    int x = 0;
    int y = 0;
    auto operator<=>(const Cell&) const = default;
};

// A finite, nonempty set of lattice cells kept in canonical translation
// (min x = min y = 0) and sorted by (x, y). An occupancy bitmap over the
// bounding box makes membership tests O(1).
class Polyomino {
public:
    // Translates the cells so the bounding box starts at the origin.
    // Throws EmptyPolyomino on empty input and DuplicateCell on repeats.
    explicit Polyomino(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    int area() const { return static_cast<int>(cells_.size()); }
    int width() const { return width_; }
    int height() const { return height_; }
    bool contains(int x, int y) const {
        return x >= 0 && y >= 0 && x < width_ && y < height_ &&
               grid_[static_cast<std::size_t>(y) * width_ + x] != 0;
    }

    std::string to_string() const;  // ASCII grid, top row first

    friend bool operator==(const Polyomino& a, const Polyomino& b) {
        return a.cells_ == b.cells_;
    }
    friend auto operator<=>(const Polyomino& a, const Polyomino& b) {
        return a.cells_ <=> b.cells_;
    }

private:
    std::vector<Cell> cells_;
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> grid_;
};

Polyomino canonicalize(const std::vector<Cell>& cells);
inline Polyomino canonicalize(const Polyomino& p) { return p; }

enum class Orientation { Horizontal, Vertical };

struct Strip {
    Orientation orientation = Orientation::Horizontal;
    Cell anchor;  // lexicographically least cell of the strip
    int length = 0;

    // Row index for horizontal strips, column index for vertical ones.
    int line() const { return orientation == Orientation::Horizontal ? anchor.y : anchor.x; }
    int start() const { return orientation == Orientation::Horizontal ? anchor.x : anchor.y; }
    int end() const { return start() + length - 1; }  // inclusive
    bool operator==(const Strip&) const = default;
};

// Maximal runs of cells. Horizontal strips are ordered by (row, start) and
// vertical strips by (column, start).
std::vector<Strip> strips(const Polyomino& p, Orientation o);

// Strips of each line, indexed by line (row or column) of the bounding box.
std::vector<std::vector<Strip>> strips_by_line(const Polyomino& p, Orientation o);

enum class ShapeClass { Disconnected, Concave, ConvexNotCross, CrossConvex };
std::string to_string(ShapeClass c);

bool is_connected(const Polyomino& p);
ShapeClass classify(const Polyomino& p);

enum class Family { Square, QuasiSquare, Rect };
enum class Side { Shorter, Longer };

// Rectangle of height a and width b (a <= b) with an optional k-cell strip
// attached flush along one side. The family tag is derived from (a, b): equal
// sides give Square, sides differing by one give QuasiSquare.
struct ShapeSpec {
    Family family = Family::Square;
    int a = 1;
    int b = 1;
    int k = 0;
    Side side = Side::Shorter;

    static ShapeSpec square(int l, int k = 0);
    static ShapeSpec quasi_square(int l, int k = 0, Side side = Side::Shorter);
    static ShapeSpec rect(int a, int b, int k = 0, Side side = Side::Shorter);

    int area() const { return a * b + k; }
    // Length of the side the protuberance is attached to.
    int attach_length() const { return side == Side::Shorter ? a : b; }
    bool valid() const;
    void validate() const;  // throws InvalidShapeSpec
    std::string label() const;

    bool operator==(const ShapeSpec&) const = default;
    auto operator<=>(const ShapeSpec&) const = default;
};

// Builds the spec with the body occupying rows [0, a) and columns [0, b).
// A shorter-side protuberance is a column at x = b covering rows
// [offset, offset + k); a longer-side one is a row at y = a.
Polyomino realize(const ShapeSpec& spec, int offset = 0);

// The 8 images under the dihedral group of the square, canonicalized.
std::set<Polyomino> symmetries(const Polyomino& p);
// Smallest element of the orbit; two shapes are congruent iff these match.
Polyomino orbit_representative(const Polyomino& p);
// Same orbit under the dihedral group, decided without canonicalizing.
bool congruent(const Polyomino& p, const Polyomino& q);

Polyomino rotate_quarter(const Polyomino& p);  // (x, y) -> (y, -x)
Polyomino transpose(const Polyomino& p);       // (x, y) -> (y, x)
Polyomino reflect_x(const Polyomino& p);       // (x, y) -> (-x, y)

// True iff p is a rectangle, or a rectangle with a single strip of length
// k < side attached flush along one side at any offset.
bool is_rect_with_protuberance(const Polyomino& p);

}  // namespace nlper
