#include "nlper/perimeter.hpp"

#include <algorithm>
#include <cmath>

#include "nlper/errors.hpp"

namespace nlper {

double interval_interaction(int s1, int e1, int s2, int e2, const ZetaEngine& e) {
    const int l1 = e1 - s1 + 1, l2 = e2 - s2 + 1;
    const int dmin = s2 - e1, dmax = e2 - s1;
    const int cap = std::min(l1, l2);
    double sum = 0.0;
    for (int d = dmin; d <= dmax; ++d) {
        // Number of pairs at distance d: a trapezoid in d.
        int count = std::min({d - dmin + 1, dmax - d + 1, cap});
        sum += count * e.inv_pow(d);
    }
    return sum;
}

namespace {
double line_value(const std::vector<Strip>& line, const ZetaEngine& e) {
    double v = 0.0;
    for (const Strip& s : line) v += 2.0 * e.zeta_prefix(s.length);
    for (std::size_t i = 0; i < line.size(); ++i)
        for (std::size_t j = i + 1; j < line.size(); ++j)
            v -= 2.0 * interval_interaction(line[i].start(), line[i].end(), line[j].start(),
                                            line[j].end(), e);
    return v;
}
}  // namespace

double perimeter_line(const Polyomino& p, Orientation o, int line, const ZetaEngine& e) {
    auto lines = strips_by_line(p, o);
    if (line < 0 || line >= static_cast<int>(lines.size())) return 0.0;
    return line_value(lines[static_cast<std::size_t>(line)], e);
}

PerimeterBreakdown perimeter(const Polyomino& p, const ZetaEngine& e) {
    PerimeterBreakdown out;
    for (const auto& row : strips_by_line(p, Orientation::Horizontal)) out.horizontal += line_value(row, e);
    for (const auto& col : strips_by_line(p, Orientation::Vertical)) out.vertical += line_value(col, e);
    out.total = out.horizontal + out.vertical;
    return out;
}

PerimeterBreakdown perimeter_direct(const Polyomino& p, const ZetaEngine& e, int window) {
    if (window < std::max(p.width(), p.height()))
        throw WindowTooSmall("window " + std::to_string(window) + " does not cover the polyomino");
    const double lam = e.lambda();
    const double tail = e.zeta(static_cast<long>(window) + 1);
    PerimeterBreakdown out;
    for (const Cell& c : p.cells()) {
        double h = 2.0 * tail, v = 2.0 * tail;
        for (int d = 1; d <= window; ++d) {
            const double w = std::pow(static_cast<double>(d), -lam);
            if (!p.contains(c.x + d, c.y)) h += w;
            if (!p.contains(c.x - d, c.y)) h += w;
            if (!p.contains(c.x, c.y + d)) v += w;
            if (!p.contains(c.x, c.y - d)) v += w;
        }
        out.horizontal += h;
        out.vertical += v;
    }
    out.total = out.horizontal + out.vertical;
    return out;
}

double perimeter_shape(const ShapeSpec& spec, const ZetaEngine& e) {
    spec.validate();
    const int a = spec.a, b = spec.b, k = spec.k;
    double v = 2.0 * a * e.zeta_prefix(b) + 2.0 * b * e.zeta_prefix(a);
    if (k > 0) {
        // The k lines crossing the protuberance grow by one cell past the
        // opposite side of the body.
        const int grown = spec.side == Side::Shorter ? b : a;
        v += 2.0 * k * e.zeta(grown + 1) + 2.0 * e.zeta_prefix(k);
    }
    return v;
}

int classical_perimeter(const Polyomino& p) {
    int edges = 0;
    for (const Cell& c : p.cells()) {
        edges += !p.contains(c.x + 1, c.y);
        edges += !p.contains(c.x - 1, c.y);
        edges += !p.contains(c.x, c.y + 1);
        edges += !p.contains(c.x, c.y - 1);
    }
    return edges;
}

int classical_perimeter(const ShapeSpec& spec) {
    spec.validate();
    return 2 * (spec.a + spec.b + (spec.k > 0 ? 1 : 0));
}

int compare_perimeters(double a, double b, double margin) {
    if (a < b - margin) return -1;
    if (a > b + margin) return 1;
    return 0;
}

}  // namespace nlper
