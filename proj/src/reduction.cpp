#include "nlper/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlper/catalog.hpp"
#include "nlper/errors.hpp"

namespace nlper {

std::string to_string(TerminalClass c) {
    switch (c) {
        case TerminalClass::InExtendedCatalog: return "in-extended-catalog";
        case TerminalClass::ReducedStrictly: return "reduced-strictly";
        case TerminalClass::NotReduced: return "not-reduced";
    }
    return "?";
}

bool ReductionTrace::has_step(const std::string& label) const {
    return std::any_of(steps.begin(), steps.end(), [&](const TraceStep& s) { return s.label == label; });
}

// ---------------------------------------------------------------------------

Polyomino shift_strip(const Polyomino& p, const Strip& strip, int delta) {
    auto lines = strips_by_line(p, strip.orientation);
    const int line = strip.line();
    if (line < 0 || line >= static_cast<int>(lines.size())) throw StripNotFound("strip line outside polyomino");
    const auto& row = lines[static_cast<std::size_t>(line)];
    auto it = std::find(row.begin(), row.end(), strip);
    if (it == row.end()) throw StripNotFound("no such maximal strip in the polyomino");
    if (delta == 0) throw PreconditionViolated("shift must move the strip");
    const std::size_t idx = static_cast<std::size_t>(it - row.begin());
    int gap;  // empty sites between the strip and its neighbour on the moving side
    if (delta < 0) {
        if (idx == 0) throw PreconditionViolated("no neighbouring strip on the left");
        gap = it->start() - row[idx - 1].end() - 1;
    } else {
        if (idx + 1 == row.size()) throw PreconditionViolated("no neighbouring strip on the right");
        gap = row[idx + 1].start() - it->end() - 1;
    }
    if (std::abs(delta) > gap) throw CollisionWithOccupiedCells("shift runs into the neighbouring strip");

    const bool horiz = strip.orientation == Orientation::Horizontal;
    std::vector<Cell> cells;
    cells.reserve(p.cells().size());
    for (const Cell& c : p.cells()) {
        const int along = horiz ? c.x : c.y;
        const int across = horiz ? c.y : c.x;
        if (across == line && along >= it->start() && along <= it->end()) {
            cells.push_back(horiz ? Cell{c.x + delta, c.y} : Cell{c.x, c.y + delta});
        } else {
            cells.push_back(c);
        }
    }
    return Polyomino(std::move(cells));
}

FillResult fill_holes_step(const Polyomino& p, const ZetaEngine& e) {
    const int w = p.width(), h = p.height();
    std::vector<int> west_rows;
    for (int y = 0; y < h; ++y)
        if (p.contains(0, y)) west_rows.push_back(y);
    int k = -1;
    std::vector<int> holes;
    for (int col = 1; col < w && k < 0; ++col) {
        for (int y : west_rows)
            if (!p.contains(col, y)) holes.push_back(y);
        if (!holes.empty()) k = col;
    }
    if (k < 0) return {p, false, false, {}, -1};
    std::vector<Cell> cells;
    cells.reserve(p.cells().size());
    for (const Cell& c : p.cells()) {
        const bool moved = c.x == 0 && std::binary_search(holes.begin(), holes.end(), c.y);
        cells.push_back(moved ? Cell{k, c.y} : c);
    }
    Polyomino next(std::move(cells));
    const double before = perimeter(p, e).total;
    const double after = perimeter(next, e).total;
    return {next, true, after < before - kMargin, holes, k};
}

Polyomino compress_south(const Polyomino& p) {
    std::vector<int> count(static_cast<std::size_t>(p.width()), 0);
    for (const Cell& c : p.cells()) ++count[static_cast<std::size_t>(c.x)];
    std::vector<Cell> cells;
    for (int x = 0; x < p.width(); ++x)
        for (int y = 0; y < count[static_cast<std::size_t>(x)]; ++y) cells.push_back({x, y});
    return Polyomino(std::move(cells));
}

Polyomino compress_west(const Polyomino& p) {
    std::vector<int> count(static_cast<std::size_t>(p.height()), 0);
    for (const Cell& c : p.cells()) ++count[static_cast<std::size_t>(c.y)];
    std::vector<Cell> cells;
    for (int y = 0; y < p.height(); ++y)
        for (int x = 0; x < count[static_cast<std::size_t>(y)]; ++x) cells.push_back({x, y});
    return Polyomino(std::move(cells));
}

std::vector<int> young_rows(const Polyomino& p) {
    std::vector<int> rows(static_cast<std::size_t>(p.height()), 0);
    for (const Cell& c : p.cells()) ++rows[static_cast<std::size_t>(c.y)];
    for (int y = 0; y < p.height(); ++y) {
        const int len = rows[static_cast<std::size_t>(y)];
        if (len == 0 || (y > 0 && len > rows[static_cast<std::size_t>(y - 1)])) return {};
        for (int x = 0; x < len; ++x)
            if (!p.contains(x, y)) return {};
    }
    return rows;
}

Polyomino young_from_rows(const std::vector<int>& rows) {
    std::vector<Cell> cells;
    for (std::size_t y = 0; y < rows.size(); ++y)
        for (int x = 0; x < rows[y]; ++x) cells.push_back({x, static_cast<int>(y)});
    return Polyomino(std::move(cells));
}

// ---------------------------------------------------------------------------

namespace {

class Recorder {
public:
    Recorder(ReductionTrace& t, const ZetaEngine& e) : t_(t), e_(e) {}

    double current_perimeter() const { return t_.terminal_perimeter(); }
    const Polyomino& current() const { return t_.terminal(); }
    bool strictly_below_start() const { return current_perimeter() < t_.initial_perimeter - kMargin; }

    void push(const std::string& label, const Polyomino& shape) {
        const double per = perimeter(shape, e_).total;
        push(label, shape, per);
    }
    void push(const std::string& label, const Polyomino& shape, double per) {
        if (per > current_perimeter() + kMargin)
            throw std::logic_error("reduction step " + label + " increased the perimeter:\n" + shape.to_string());
        if (shape.area() != t_.initial.area())
            throw std::logic_error("reduction step " + label + " changed the area");
        t_.steps.push_back({label, shape, per});
    }

private:
    ReductionTrace& t_;
    const ZetaEngine& e_;
};

bool north_columns_full(const Polyomino& p) {
    const int top = p.height() - 1;
    for (int x = 0; x < p.width(); ++x) {
        if (!p.contains(x, top)) continue;
        for (int y = 0; y < top; ++y)
            if (!p.contains(x, y)) return false;
    }
    return true;
}

Polyomino rotate_north_to_west(const Polyomino& p) {
    std::vector<Cell> cells;
    for (const Cell& c : p.cells()) cells.push_back({-c.y, c.x});
    return Polyomino(std::move(cells));
}

bool has_multi_strip_line(const Polyomino& p, Orientation o) {
    for (const auto& line : strips_by_line(p, o))
        if (line.size() >= 2) return true;
    return false;
}

// Replaces the current shape by the best catalog shape when that is strictly
// smaller. Returns true on success.
bool catalog_step(Recorder& rec, const ZetaEngine& e, const std::string& label) {
    const auto best = argmin_shape(rec.current().area(), e);
    const Polyomino shape = realize(best.front().spec);
    const double per = perimeter(shape, e).total;
    if (per >= rec.current_perimeter() - kMargin) return false;
    rec.push(label, shape, per);
    return true;
}

// Young-diagram helpers. A diagram anchored at the origin has perimeter
// 2 * sum over cells of (zeta(x+1) + zeta(y+1)), so single-cell moves between
// corners have an exact closed-form effect.
double corner_weight(int x, int y, const ZetaEngine& e) { return e.zeta(x + 1) + e.zeta(y + 1); }

std::vector<Cell> addable_corners(const std::vector<int>& rows) {
    std::vector<Cell> out;
    for (std::size_t y = 0; y <= rows.size(); ++y) {
        const int x = y < rows.size() ? rows[y] : 0;
        if (y == 0 || rows[y - 1] > x) out.push_back({x, static_cast<int>(y)});
    }
    return out;
}

void add_cell(std::vector<int>& rows, const Cell& c) {
    if (static_cast<std::size_t>(c.y) == rows.size())
        rows.push_back(1);
    else
        ++rows[static_cast<std::size_t>(c.y)];
}

// Removes the top row and re-inserts its cells one at a time at the cheapest
// addable corner.
std::vector<int> greedy_refill(std::vector<int> rows, const ZetaEngine& e) {
    int cells = rows.back();
    rows.pop_back();
    while (cells-- > 0) {
        Cell best{-1, -1};
        double best_w = 0.0;
        for (const Cell& c : addable_corners(rows)) {
            const double w = corner_weight(c.x, c.y, e);
            if (best.x < 0 || w < best_w) {
                best = c;
                best_w = w;
            }
        }
        add_cell(rows, best);
    }
    return rows;
}

// Best single move of a removable corner cell to an addable corner.
std::vector<int> best_corner_move(const std::vector<int>& rows, const ZetaEngine& e, double& change) {
    change = 0.0;
    std::vector<int> best = rows;
    for (std::size_t y = 0; y < rows.size(); ++y) {
        const bool removable = y + 1 == rows.size() || rows[y + 1] < rows[y];
        if (!removable) continue;
        std::vector<int> cut = rows;
        const int x = --cut[y];
        if (cut[y] == 0) cut.pop_back();
        const double w_out = corner_weight(x, static_cast<int>(y), e);
        for (const Cell& c : addable_corners(cut)) {
            if (c.x == x && c.y == static_cast<int>(y)) continue;
            const double d = 2.0 * (corner_weight(c.x, c.y, e) - w_out);
            if (d < change) {
                change = d;
                best = cut;
                add_cell(best, c);
            }
        }
    }
    return best;
}

}  // namespace

double step7_f(int x, const ZetaEngine& e) {
    if (x < 1) throw InvalidArgument("step7_f requires x >= 1");
    double v = 0.0;
    for (int j = 1; j <= x; ++j) v += std::pow(static_cast<double>(j), 1.0 - e.lambda());
    return v - x * e.zeta(x + 2);
}

CrossConvexReport cross_convex_algorithm(const Polyomino& c, const ZetaEngine& e) {
    if (classify(c) != ShapeClass::CrossConvex)
        throw PreconditionViolated("cross-convex algorithm needs a cross-convex polyomino");
    if (in_extended_catalog(c))
        throw PreconditionViolated("input is already a rectangle with protuberance");

    CrossConvexReport r{ReductionTrace{c, perimeter(c, e).total, {}, TerminalClass::NotReduced, false, 0}};
    Recorder rec(r.trace, e);
    r.per_D = r.trace.initial_perimeter;

    rec.push("step1-2", compress_west(c));
    r.per_D1 = rec.current_perimeter();
    rec.push("step3-4", compress_south(rec.current()));
    r.per_D2 = rec.current_perimeter();

    Polyomino frame = rec.current();
    if (frame.height() > frame.width()) frame = transpose(frame);
    std::vector<int> rows = young_rows(frame);
    if (rows.empty()) throw std::logic_error("justified shape is not a Young diagram");
    auto last_column = [](const std::vector<int>& rs) {
        return static_cast<int>(std::count(rs.begin(), rs.end(), rs.front()));
    };
    // On a square box both frames are admissible; pick the one where the top
    // row fits against the last column.
    if (rows.size() == static_cast<std::size_t>(rows.front()) && rows.back() > last_column(rows)) {
        frame = transpose(frame);
        rows = young_rows(frame);
    }
    r.m_v = static_cast<int>(rows.size());
    r.m_h = rows.front();
    r.top_row = rows.back();
    r.last_column = last_column(rows);

    if (r.top_row <= r.last_column && r.m_v >= 2) {
        // Move the top row to a new column east of the box. Its cells land on
        // the full-length rows at the bottom.
        std::vector<int> next(rows.begin(), rows.end() - 1);
        for (int i = 0; i < r.top_row; ++i) ++next[static_cast<std::size_t>(i)];
        rec.push("step6", young_from_rows(next));
        r.final_move = "step6";
        r.bound = r.top_row * std::pow(static_cast<double>(r.m_v), -e.lambda());
    } else {
        const double base = rec.current_perimeter();
        std::vector<int> refill = greedy_refill(rows, e);
        const double per_refill = perimeter(young_from_rows(refill), e).total;
        double corner_change = 0.0;
        std::vector<int> corner = best_corner_move(rows, e, corner_change);
        const double per_corner = base + corner_change;
        if (per_refill < base - kMargin && per_refill <= per_corner) {
            rec.push("step7", young_from_rows(refill));
            r.final_move = "step7";
            r.bound = step7_f(r.top_row, e);
        } else if (per_corner < base - kMargin) {
            rec.push("step7", young_from_rows(corner));
            r.final_move = "step7";
        } else if (catalog_step(rec, e, "catalog")) {
            r.final_move = "catalog";
        }
    }
    r.trace.terminal_class =
        rec.strictly_below_start() ? TerminalClass::ReducedStrictly : TerminalClass::NotReduced;
    return r;
}

ReductionTrace main_algorithm(const Polyomino& p, const ZetaEngine& e) {
    ReductionTrace t{p, perimeter(p, e).total, {}, TerminalClass::NotReduced, false, 0};
    if (in_extended_catalog(p)) {
        t.terminal_class = TerminalClass::InExtendedCatalog;
        return t;
    }
    Recorder rec(t, e);
    const long cap = 16L * p.area() * p.area();
    auto finish = [&]() {
        t.terminal_class = rec.strictly_below_start() ? TerminalClass::ReducedStrictly : TerminalClass::NotReduced;
        return t;
    };

    for (;;) {
        // Steps 1-3: fill holes next to the west column until a strict gain.
        for (;;) {
            if (++t.iterations > cap)
                throw NonTermination("iteration cap reached on:\n" + rec.current().to_string());
            const Polyomino& cur = rec.current();
            FillResult r = fill_holes_step(cur, e);
            if (!r.changed) break;
            // A moved row that held a second strip makes the gain horizontal.
            bool several = false;
            auto rows = strips_by_line(cur, Orientation::Horizontal);
            for (int y : r.moved_rows) several = several || rows[static_cast<std::size_t>(y)].size() >= 2;
            rec.push(several ? "step3.1" : "step3.2", r.shape);
            if (rec.strictly_below_start()) return finish();
        }
        // Step 4: a single rotation brings the north side to the west.
        if (!t.rotated && !north_columns_full(rec.current())) {
            t.rotated = true;
            rec.push("step4", rotate_north_to_west(rec.current()));
            continue;
        }
        break;
    }

    // Step 5.
    const Polyomino cur = rec.current();
    const bool multi_col = has_multi_strip_line(cur, Orientation::Vertical);
    const bool multi_row = has_multi_strip_line(cur, Orientation::Horizontal);
    if (multi_col || multi_row) {
        const auto west = strips_by_line(cur, Orientation::Vertical).front().size();
        const auto north = strips_by_line(cur, Orientation::Horizontal).back().size();
        const bool chessboard = west != 1 || north != 1;
        // Gravity towards the side with several strips strictly shortens the
        // vertical (or horizontal) part and never lengthens the other one.
        const bool use_columns = west != 1 || (north == 1 && multi_col);
        rec.push(chessboard ? "step5.1" : "step5.2a", use_columns ? compress_south(cur) : compress_west(cur));
        if (rec.strictly_below_start()) return finish();
    }
    if (classify(rec.current()) != ShapeClass::CrossConvex) {
        const Polyomino s = compress_south(rec.current());
        if (!(s == rec.current())) rec.push("step5.2a", s);
        if (rec.strictly_below_start()) return finish();
        const Polyomino w = compress_west(rec.current());
        if (!(w == rec.current())) rec.push("step5.2a", w);
        if (rec.strictly_below_start()) return finish();
    }
    if (in_extended_catalog(rec.current())) {
        catalog_step(rec, e, "catalog");
        return finish();
    }
    rec.push("step5.2b", rec.current(), rec.current_perimeter());
    CrossConvexReport cc = cross_convex_algorithm(rec.current(), e);
    for (const TraceStep& s : cc.trace.steps) rec.push("cc:" + s.label, s.shape, s.perimeter);
    return finish();
}

}  // namespace nlper
