#pragma once

#include <string>
#include <vector>

#include "nlper/lattice.hpp"
#include "nlper/perimeter.hpp"

namespace nlper {

struct TraceStep {
    std::string label;
    Polyomino shape;
    double perimeter;
};

enum class TerminalClass {
    InExtendedCatalog,  // input already a rectangle with protuberance; no-op
    ReducedStrictly,
    NotReduced,         // no strict decrease found (only possible for a tie with a minimizer)
};
std::string to_string(TerminalClass c);

struct ReductionTrace {
    Polyomino initial;
    double initial_perimeter = 0.0;
    std::vector<TraceStep> steps;
    TerminalClass terminal_class = TerminalClass::NotReduced;
    bool rotated = false;
    int iterations = 0;

    const Polyomino& terminal() const { return steps.empty() ? initial : steps.back().shape; }
    double terminal_perimeter() const {
        return steps.empty() ? initial_perimeter : steps.back().perimeter;
    }
    bool has_step(const std::string& label) const;
};

// Moves every cell of `strip` by `delta` along its own axis. The move must
// shorten the gap to the neighbouring strip on that side without reaching
// past it. Throws StripNotFound, CollisionWithOccupiedCells or
// PreconditionViolated.
Polyomino shift_strip(const Polyomino& p, const Strip& strip, int delta);

struct FillResult {
    Polyomino shape;
    bool changed = false;
    bool strict_decrease = false;
    std::vector<int> moved_rows;  // rows whose west strip slid east
    int target_column = -1;       // column that received the cells
};

// One hole-filling move on the west column. Let U be the rows met by the
// west column and k the first column holding an empty cell in a row of U.
// For every such row the strip starting at the west edge slides one step
// east into the hole. Vertically this exchanges the two columns for their
// intersection and union, so the perimeter never grows.
FillResult fill_holes_step(const Polyomino& p, const ZetaEngine& e);

// Gravity compressions: every column slides to y = 0 (south) or every row
// slides to x = 0 (west), keeping cell counts per line.
Polyomino compress_south(const Polyomino& p);
Polyomino compress_west(const Polyomino& p);

// Row lengths bottom to top when p is a Young diagram anchored at the
// origin (rows left-justified, lengths non-increasing upwards); empty otherwise.
std::vector<int> young_rows(const Polyomino& p);
Polyomino young_from_rows(const std::vector<int>& rows);

ReductionTrace main_algorithm(const Polyomino& p, const ZetaEngine& e);

// Quantities reported by the cross-convex algorithm for inspection.
struct CrossConvexReport {
    ReductionTrace trace;
    double per_D = 0, per_D1 = 0, per_D2 = 0;  // D, D' and D''
    std::string final_move;  // "step6", "step7" or "catalog"
    int m_v = 0, m_h = 0;    // bounding box of D'' in the working frame (m_v <= m_h)
    int top_row = 0;         // length of the top row of D''
    int last_column = 0;     // height of the last column of D''
    double bound = 0.0;      // analytic lower bound on the decrease, when applicable
};

// Throws PreconditionViolated unless c is cross-convex and not a rectangle
// with protuberance.
CrossConvexReport cross_convex_algorithm(const Polyomino& c, const ZetaEngine& e);

// Auxiliary f(x) = sum_{j<=x} j^{1-lambda} - x zeta(lambda, x+2) used to bound
// the second cross-convex construction.
double step7_f(int x, const ZetaEngine& e);

}  // namespace nlper
