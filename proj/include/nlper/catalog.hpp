#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlper/lattice.hpp"
#include "nlper/perimeter.hpp"
#include "nlper/zeta.hpp"

namespace nlper {

struct RectForm {
    int a = 0, b = 0, k = 0;
    bool operator==(const RectForm&) const = default;
};

struct Decomposition {
    int n = 0;
    std::optional<std::pair<int, int>> square_form;  // (l, k1), n = l^2 + k1, 0 <= k1 <= l-1
    std::optional<std::pair<int, int>> quasi_form;   // (l, k2), n = l(l+1) + k2, 0 <= k2 <= l
    // Every (a, b, k) with a <= b, n = ab + k and 0 <= k <= b. A value k = b
    // is a full extra row along the longer side, i.e. another rectangle.
    std::vector<RectForm> rect_forms;

    // The square or quasi-square reference shape of this area.
    ShapeSpec reference() const;
    // Classical perimeter of the reference shape.
    int reference_classical() const;
};

Decomposition decompose(int n);

struct CatalogEntry {
    ShapeSpec spec;
    int classical_perimeter = 0;
    double nonlocal_perimeter = 0.0;
};

struct Catalog {
    std::vector<CatalogEntry> minimal;   // the minimizer candidates of area n
    std::vector<CatalogEntry> extended;  // every rectangle with protuberance of area n
};

// Candidates are deduplicated by dihedral orbit of their realization, keeping
// the first spec in (family, a, b, k, side) order. Perimeters are evaluated
// with `e`.
Catalog catalog(int n, const ZetaEngine& e);
// Specs only, no perimeter evaluation.
std::vector<ShapeSpec> minimal_specs(int n);
std::vector<ShapeSpec> extended_specs(int n);

std::vector<CatalogEntry> argmin_shape(int n, const ZetaEngine& e);

// True when p is congruent to some rectangle with a protuberance (any offset).
bool in_extended_catalog(const Polyomino& p);

// Bisection root in (lo, hi] of Per(s1) - Per(s2) to absolute precision `tol`;
// empty when the endpoint values do not change sign.
std::optional<double> crossover_between(const ShapeSpec& s1, const ShapeSpec& s2, double lo,
                                        double hi, double tol = 1e-6);

struct Crossover {
    int n = 0;
    ShapeSpec below;  // minimizer just above lo
    ShapeSpec above;  // minimizer at hi
    std::optional<double> lambda_star;
};
// Throws NoTwoShapes when the minimizer catalog has a single member. Compares
// the argmin at lo + 1e-9 with the argmin at hi.
Crossover crossover_lambda(int n, double lo = 1.8, double hi = 20.0, double tol = 1e-6);

// Auxiliary functions from the positivity arguments for squares against
// rectangles. Each throws HypothesisViolated naming the failed constraint.
double F1(int a, int l, double lambda);
double F2(int a, int l, int b, double lambda);
double F1_tilde(int a, int l, int k1, double lambda);
double F2_tilde(int a, int l, int k1, double lambda);
// Half the perimeter gap Per(R_{a,b}) - Per(Q_l) for ab = l^2, as a finite sum.
double delta_rect_square(int a, int b, int l, double lambda);
double Delta(int l, int alpha, int C, double lambda);
double Delta_tilde(int l, int alpha, int C, double lambda);
// Auxiliary function on x >= 2 whose positivity is claimed for lambda > 1.8.
double lemma_f(int x, double lambda);

struct PositivityReport {
    std::optional<double> F1, F2, F1_tilde, F2_tilde, delta, delta_tilde, f;
    std::vector<std::string> flags;  // names of quantities that are not positive
};
// Evaluates every quantity whose hypotheses hold for the given parameters.
PositivityReport positivity_diagnostics(int a, int b, int l, int k1, int k2, double lambda);

// Grid points on which the positivity claims are asserted.
struct DiagnosticPoint {
    int a, l, k1, b, k2, C;
};
std::vector<std::pair<int, int>> f1_grid(int l_max);  // (a, l) with a | l^2, a < l, l >= 4
// Points of the square-versus-rectangle case with k1 >= k2 and k1 - k2 <= a:
// l = a + alpha, b = l + alpha + C with C >= 1, 0 <= k1 <= l - 1, 0 <= k2 <= a - 1.
std::vector<DiagnosticPoint> tilde_grid(int l_max);

}  // namespace nlper
