#pragma once

#include "nlper/lattice.hpp"
#include "nlper/zeta.hpp"

namespace nlper {

// Comparison margin for strict inequalities between perimeters. It sits three
// orders above the default zeta tolerance so truncation error cannot flip a
// comparison at the scales exercised here.
inline constexpr double kMargin = 1e-9;

struct PerimeterBreakdown {
    double horizontal = 0.0;
    double vertical = 0.0;
    double total = 0.0;
};

// Strip formula: each strip of length L contributes 2 S(L), and every pair of
// distinct strips on a common line removes twice their mutual interaction
// sum_{x in S_a, y in S_b} |x - y|^{-lambda}.
PerimeterBreakdown perimeter(const Polyomino& p, const ZetaEngine& e);

// Contribution of a single row (Horizontal) or column (Vertical).
double perimeter_line(const Polyomino& p, Orientation o, int line, const ZetaEngine& e);

// Mutual interaction of two disjoint intervals [s1, e1] and [s2, e2] (s2 > e1)
// on one line, summed in closed trapezoid form.
double interval_interaction(int s1, int e1, int s2, int e2, const ZetaEngine& e);

// Literal double sum over cells and complement sites within `window` steps in
// each axial direction, plus the analytic half-line tails beyond. Throws
// WindowTooSmall when the window does not cover the polyomino, since the tail
// would then include occupied sites.
PerimeterBreakdown perimeter_direct(const Polyomino& p, const ZetaEngine& e, int window);

double perimeter_shape(const ShapeSpec& spec, const ZetaEngine& e);

int classical_perimeter(const Polyomino& p);
// Classical perimeter of a spec without realizing it.
int classical_perimeter(const ShapeSpec& spec);

// -1, 0, +1 with ties inside the margin reported as 0.
int compare_perimeters(double a, double b, double margin = kMargin);

}  // namespace nlper
