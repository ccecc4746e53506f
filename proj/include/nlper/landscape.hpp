#pragma once

#include <optional>
#include <vector>

#include "nlper/lattice.hpp"
#include "nlper/zeta.hpp"

namespace nlper {

struct ModelParams {
    double lambda = 2.0;       // interaction decay exponent, > 1
    double h = 0.1;            // external field, > 0
    std::optional<int> L;      // torus side, >= 4 when present
    void validate() const;     // throws InvalidArgument
};

struct LandscapePoint {
    int n = 0;
    std::vector<ShapeSpec> minimizing_specs;
    double delta_H = 0.0;  // 2 Per(minimizer) - 2 h n
};

// Excitation energy of the area-n minimizer on the infinite lattice. The
// engine must carry params.lambda.
LandscapePoint delta_H(int n, const ModelParams& params, const ZetaEngine& e);

struct Landscape {
    std::vector<LandscapePoint> points;  // n = 1..n_max in order
    int n_c = 0;                         // first argmax of delta_H
    std::vector<int> ties;               // further areas within kMargin of the max
    int critical_side = 0;               // long side of the body of the n_c minimizer
};

Landscape landscape(const ModelParams& params, int n_max);

// Nearest-neighbour analogue 2 p(n) - 2 h n with p(n) the minimal classical
// perimeter of area n.
double short_range_delta_H(int n, double h);

struct ShortRangeLandscape {
    std::vector<double> delta_H;  // index n - 1
    int n_c = 0;
    std::vector<int> ties;
    int critical_side = 0;
};
ShortRangeLandscape short_range_landscape(double h, int n_max);

// Energy of the l x l square droplet, 8 l S(l) - 2 h l^2, for integer l.
double f_square(int l, double h, const ZetaEngine& e);
// The same quantity continued to real l >= 1 through Hurwitz zeta values.
// Needs lambda > 2 (throws DivergentParameter otherwise).
double f_continuous(double l, const ModelParams& params);
double df_dl(double l, const ModelParams& params);
double d2f_dl2(const ModelParams& params, double l);

struct CriticalLength {
    int l_c = 0;
    std::vector<double> f;             // f[l-1] from the finite-sum path
    std::vector<double> f_continuous;  // same grid from the continued form, lambda > 2 only
};

// Argmax of f_square over l = 1..l_max. Throws AmbiguousMax when another l
// comes within kMargin of the maximum.
CriticalLength critical_length_square(const ModelParams& params, int l_max);

struct TorusComparison {
    double torus = 0.0;     // perimeter with wrapped axial distances on the L x L torus
    double infinite = 0.0;  // perimeter on the infinite lattice
    // Exact gap infinite - torus. Every cell loses the same far tail on each
    // axis, so the gap is area times the unit-cell gap.
    double exact_gap = 0.0;
    // Rigorous bound 4 area ((L-1)/2)^{1-lambda} / (lambda - 1) from the
    // midpoint comparison of the tail sum with its integral.
    double bound = 0.0;
    double constant = 0.0;  // C with bound = C area L^{1-lambda}
    // 4 area (L/2)^{1-lambda} / (lambda - 1). Slightly too small for even L,
    // where the gap exceeds it.
    double nominal_bound = 0.0;
};

// Throws PolyominoTooLargeForTorus when p does not fit in an L/2 box and
// InvalidArgument when params.L is missing or below 4.
TorusComparison torus_correction_bound(const Polyomino& p, const ModelParams& params);

// Closed forms for a single cell on the torus of side L.
double unit_square_torus(int L, double lambda);

}  // namespace nlper
