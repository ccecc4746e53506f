#include "nlper/lattice.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "nlper/errors.hpp"

namespace nlper {

Polyomino::Polyomino(std::vector<Cell> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw EmptyPolyomino("polyomino must contain at least one cell");
    int min_x = std::numeric_limits<int>::max(), min_y = min_x;
    int max_x = std::numeric_limits<int>::min(), max_y = max_x;
    for (const Cell& c : cells_) {
        min_x = std::min(min_x, c.x);
        min_y = std::min(min_y, c.y);
        max_x = std::max(max_x, c.x);
        max_y = std::max(max_y, c.y);
    }
    for (Cell& c : cells_) {
        c.x -= min_x;
        c.y -= min_y;
    }
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw DuplicateCell("polyomino contains a repeated cell");
    width_ = max_x - min_x + 1;
    height_ = max_y - min_y + 1;
    grid_.assign(static_cast<std::size_t>(width_) * height_, 0);
    for (const Cell& c : cells_) grid_[static_cast<std::size_t>(c.y) * width_ + c.x] = 1;
}

std::string Polyomino::to_string() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(height_) * (width_ + 1));
    for (int y = height_ - 1; y >= 0; --y) {
        for (int x = 0; x < width_; ++x) out.push_back(contains(x, y) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

Polyomino canonicalize(const std::vector<Cell>& cells) { return Polyomino(cells); }

std::vector<std::vector<Strip>> strips_by_line(const Polyomino& p, Orientation o) {
    const bool horiz = o == Orientation::Horizontal;
    const int lines = horiz ? p.height() : p.width();
    const int span = horiz ? p.width() : p.height();
    std::vector<std::vector<Strip>> out(static_cast<std::size_t>(lines));
    for (int line = 0; line < lines; ++line) {
        int pos = 0;
        while (pos < span) {
            auto occupied = [&](int t) { return horiz ? p.contains(t, line) : p.contains(line, t); };
            if (!occupied(pos)) {
                ++pos;
                continue;
            }
            int start = pos;
            while (pos < span && occupied(pos)) ++pos;
            Strip s;
            s.orientation = o;
            s.anchor = horiz ? Cell{start, line} : Cell{line, start};
            s.length = pos - start;
            out[static_cast<std::size_t>(line)].push_back(s);
        }
    }
    return out;
}

std::vector<Strip> strips(const Polyomino& p, Orientation o) {
    std::vector<Strip> flat;
    for (auto& line : strips_by_line(p, o)) flat.insert(flat.end(), line.begin(), line.end());
    return flat;
}

std::string to_string(ShapeClass c) {
    switch (c) {
        case ShapeClass::Disconnected: return "disconnected";
        case ShapeClass::Concave: return "concave";
        case ShapeClass::ConvexNotCross: return "convex";
        case ShapeClass::CrossConvex: return "cross-convex";
    }
    return "?";
}

bool is_connected(const Polyomino& p) {
    const int w = p.width(), h = p.height();
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * h, 0);
    std::vector<Cell> stack{p.cells().front()};
    seen[static_cast<std::size_t>(stack[0].y) * w + stack[0].x] = 1;
    int reached = 0;
    constexpr std::array<Cell, 4> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        ++reached;
        for (const Cell& d : dirs) {
            int nx = c.x + d.x, ny = c.y + d.y;
            if (!p.contains(nx, ny)) continue;
            auto& s = seen[static_cast<std::size_t>(ny) * w + nx];
            if (s) continue;
            s = 1;
            stack.push_back({nx, ny});
        }
    }
    return reached == p.area();
}

ShapeClass classify(const Polyomino& p) {
    if (!is_connected(p)) return ShapeClass::Disconnected;
    auto rows = strips_by_line(p, Orientation::Horizontal);
    auto cols = strips_by_line(p, Orientation::Vertical);
    for (const auto& r : rows)
        if (r.size() >= 2) return ShapeClass::Concave;
    for (const auto& c : cols)
        if (c.size() >= 2) return ShapeClass::Concave;
    // Spanning sub-rectangles of width u >= 1 and height w >= 1 exist iff at
    // least one column is full height and one row is full width.
    bool full_row = false, full_col = false;
    for (const auto& r : rows) full_row = full_row || r.front().length == p.width();
    for (const auto& c : cols) full_col = full_col || c.front().length == p.height();
    return full_row && full_col ? ShapeClass::CrossConvex : ShapeClass::ConvexNotCross;
}

// ---------------------------------------------------------------------------

namespace {
Family family_for(int a, int b) {
    if (a == b) return Family::Square;
    if (b == a + 1) return Family::QuasiSquare;
    return Family::Rect;
}
}  // namespace

ShapeSpec ShapeSpec::square(int l, int k) { return rect(l, l, k, Side::Shorter); }

ShapeSpec ShapeSpec::quasi_square(int l, int k, Side side) { return rect(l, l + 1, k, side); }

ShapeSpec ShapeSpec::rect(int a, int b, int k, Side side) {
    ShapeSpec s;
    s.a = a;
    s.b = b;
    s.k = k;
    s.family = family_for(a, b);
    // The side only matters for a genuine protuberance on a non-square body.
    s.side = (k == 0 || a == b) ? Side::Shorter : side;
    return s;
}

bool ShapeSpec::valid() const {
    if (a < 1 || b < a || k < 0) return false;
    if (family != family_for(a, b)) return false;
    return k <= attach_length() - 1;
}

void ShapeSpec::validate() const {
    if (!valid()) throw InvalidShapeSpec("invalid shape spec " + label());
}

std::string ShapeSpec::label() const {
    std::string s;
    switch (family) {
        case Family::Square: s = "square(" + std::to_string(a) + ")"; break;
        case Family::QuasiSquare: s = "quasi(" + std::to_string(a) + ")"; break;
        case Family::Rect: s = "rect(" + std::to_string(a) + "," + std::to_string(b) + ")"; break;
    }
    if (k > 0) {
        s += "+" + std::to_string(k);
        if (side == Side::Longer) s += "@long";
    }
    return s;
}

Polyomino realize(const ShapeSpec& spec, int offset) {
    spec.validate();
    if (offset < 0 || (spec.k > 0 && offset + spec.k > spec.attach_length()))
        throw InvalidShapeSpec("protuberance offset out of range for " + spec.label());
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(spec.area()));
    for (int x = 0; x < spec.b; ++x)
        for (int y = 0; y < spec.a; ++y) cells.push_back({x, y});
    for (int i = 0; i < spec.k; ++i) {
        if (spec.side == Side::Shorter)
            cells.push_back({spec.b, offset + i});
        else
            cells.push_back({offset + i, spec.a});
    }
    return Polyomino(std::move(cells));
}

// ---------------------------------------------------------------------------

namespace {
template <class F>
Polyomino map_cells(const Polyomino& p, F f) {
    std::vector<Cell> out;
    out.reserve(p.cells().size());
    for (const Cell& c : p.cells()) out.push_back(f(c));
    return Polyomino(std::move(out));
}
}  // namespace

Polyomino rotate_quarter(const Polyomino& p) {
    return map_cells(p, [](Cell c) { return Cell{c.y, -c.x}; });
}
Polyomino transpose(const Polyomino& p) {
    return map_cells(p, [](Cell c) { return Cell{c.y, c.x}; });
}
Polyomino reflect_x(const Polyomino& p) {
    return map_cells(p, [](Cell c) { return Cell{-c.x, c.y}; });
}

std::set<Polyomino> symmetries(const Polyomino& p) {
    std::set<Polyomino> orbit;
    Polyomino r = p;
    for (int i = 0; i < 4; ++i) {
        orbit.insert(r);
        orbit.insert(reflect_x(r));
        r = rotate_quarter(r);
    }
    return orbit;
}

Polyomino orbit_representative(const Polyomino& p) { return *symmetries(p).begin(); }

bool congruent(const Polyomino& p, const Polyomino& q) {
    if (p.area() != q.area()) return false;
    const int w = p.width(), h = p.height();
    // The eight maps of the square group acting on q's bounding box; the
    // first four keep the axes, the last four swap them.
    for (int m = 0; m < 8; ++m) {
        const bool swap = m >= 4;
        if ((swap ? q.height() : q.width()) != w || (swap ? q.width() : q.height()) != h) continue;
        const bool fx = m & 1, fy = m & 2;
        bool ok = true;
        for (const Cell& c : q.cells()) {
            int x = swap ? c.y : c.x, y = swap ? c.x : c.y;
            if (fx) x = w - 1 - x;
            if (fy) y = h - 1 - y;
            if (!p.contains(x, y)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool is_rect_with_protuberance(const Polyomino& p) {
    const int w = p.width(), h = p.height();
    const int missing = w * h - p.area();
    if (missing == 0) return true;
    // Candidate boundary lines: bottom row, top row, left column, right column.
    struct Line {
        bool horizontal;
        int index;
    };
    const Line lines[4] = {{true, 0}, {true, h - 1}, {false, 0}, {false, w - 1}};
    for (const Line& line : lines) {
        const int len = line.horizontal ? w : h;
        const int body = line.horizontal ? h - 1 : w - 1;
        if (body < 1) continue;
        // Count cells on the line and check they form one contiguous run.
        int count = 0, runs = 0;
        bool prev = false;
        for (int t = 0; t < len; ++t) {
            bool in = line.horizontal ? p.contains(t, line.index) : p.contains(line.index, t);
            if (in) {
                ++count;
                if (!prev) ++runs;
            }
            prev = in;
        }
        if (runs != 1 || count >= len) continue;
        // Everything off the line must be present.
        if (p.area() - count == body * len) return true;
    }
    return false;
}

}  // namespace nlper
