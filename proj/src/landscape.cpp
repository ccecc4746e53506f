#include "nlper/landscape.hpp"

#include <algorithm>
#include <cmath>

#include "nlper/catalog.hpp"
#include "nlper/errors.hpp"
#include "nlper/parallel.hpp"
#include "nlper/perimeter.hpp"

namespace nlper {

void ModelParams::validate() const {
    if (!(lambda > 1.0)) throw InvalidArgument("lambda must exceed 1");
    if (!(h > 0.0)) throw InvalidArgument("h must be positive");
    if (L && *L < 4) throw InvalidArgument("torus side must be at least 4");
}

LandscapePoint delta_H(int n, const ModelParams& params, const ZetaEngine& e) {
    params.validate();
    LandscapePoint pt;
    pt.n = n;
    const auto best = argmin_shape(n, e);
    for (const CatalogEntry& c : best) pt.minimizing_specs.push_back(c.spec);
    pt.delta_H = 2.0 * best.front().nonlocal_perimeter - 2.0 * params.h * n;
    return pt;
}

namespace {
// First argmax and the other indices that tie with it inside the margin.
std::pair<std::size_t, std::vector<std::size_t>> argmax_with_ties(const std::vector<double>& v) {
    const std::size_t best = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != best && compare_perimeters(v[i], v[best]) == 0) ties.push_back(i);
    return {best, ties};
}
}  // namespace

Landscape landscape(const ModelParams& params, int n_max) {
    params.validate();
    if (n_max < 4) throw InvalidArgument("n_max must be at least 4");
    const ZetaEngine e(params.lambda);
    Landscape out;
    out.points.resize(static_cast<std::size_t>(n_max));
    parallel_for(out.points.size(), [&](std::size_t i) {
        out.points[i] = delta_H(static_cast<int>(i) + 1, params, e);
    });
    std::vector<double> values;
    for (const auto& p : out.points) values.push_back(p.delta_H);
    const auto [best, ties] = argmax_with_ties(values);
    out.n_c = static_cast<int>(best) + 1;
    for (std::size_t t : ties) out.ties.push_back(static_cast<int>(t) + 1);
    out.critical_side = out.points[best].minimizing_specs.front().b;
    return out;
}

double short_range_delta_H(int n, double h) {
    return 2.0 * decompose(n).reference_classical() - 2.0 * h * n;
}

ShortRangeLandscape short_range_landscape(double h, int n_max) {
    if (n_max < 4) throw InvalidArgument("n_max must be at least 4");
    ShortRangeLandscape out;
    for (int n = 1; n <= n_max; ++n) out.delta_H.push_back(short_range_delta_H(n, h));
    const auto [best, ties] = argmax_with_ties(out.delta_H);
    out.n_c = static_cast<int>(best) + 1;
    for (std::size_t t : ties) out.ties.push_back(static_cast<int>(t) + 1);
    out.critical_side = decompose(out.n_c).reference().b;
    return out;
}

double f_square(int l, double h, const ZetaEngine& e) {
    const double ld = l;
    return 8.0 * ld * e.zeta_prefix(l) - 2.0 * h * ld * ld;
}

namespace {
void require_continuation(const ModelParams& p) {
    p.validate();
    if (!(p.lambda > 2.0))
        throw DivergentParameter("the continued form needs zeta(lambda - 1), so lambda > 2");
}
}  // namespace

// S(l) = l zeta(lambda, l) + sum_{j<l} j^{1-lambda}, and the finite sum is the
// difference of two Hurwitz values at lambda - 1.
double f_continuous(double l, const ModelParams& p) {
    require_continuation(p);
    const double s = p.lambda;
    return -2.0 * p.h * l * l + 8.0 * l * l * hurwitz(s, l) +
           8.0 * l * (hurwitz(s - 1.0, 1.0) - hurwitz(s - 1.0, l));
}

double df_dl(double l, const ModelParams& p) {
    require_continuation(p);
    const double s = p.lambda;
    return -4.0 * p.h * l - 8.0 * l * l * s * hurwitz(s + 1.0, l) +
           8.0 * l * (s + 1.0) * hurwitz(s, l) - 8.0 * hurwitz(s - 1.0, l) +
           8.0 * hurwitz(s - 1.0, 1.0);
}

double d2f_dl2(const ModelParams& p, double l) {
    require_continuation(p);
    const double s = p.lambda;
    return -4.0 * p.h - 8.0 * l * s * (s + 3.0) * hurwitz(s + 1.0, l) +
           8.0 * s * (s + 1.0) * l * l * hurwitz(s + 2.0, l) + 16.0 * s * hurwitz(s, l);
}

CriticalLength critical_length_square(const ModelParams& params, int l_max) {
    params.validate();
    if (l_max < 2) throw InvalidArgument("l_max must be at least 2");
    const ZetaEngine e(params.lambda);
    CriticalLength out;
    for (int l = 1; l <= l_max; ++l) out.f.push_back(f_square(l, params.h, e));
    if (params.lambda > 2.0)
        for (int l = 1; l <= l_max; ++l) out.f_continuous.push_back(f_continuous(l, params));
    const auto [best, ties] = argmax_with_ties(out.f);
    if (!ties.empty())
        throw AmbiguousMax("critical length ties between l = " + std::to_string(best + 1) +
                           " and l = " + std::to_string(ties.front() + 1));
    out.l_c = static_cast<int>(best) + 1;
    return out;
}

double unit_square_torus(int L, double lambda) {
    double s = 0.0;
    if (L % 2 == 1) {
        for (int r = 1; r <= (L - 1) / 2; ++r) s += std::pow(r, -lambda);
        return 4.0 * s;
    }
    for (int r = 1; r <= (L - 2) / 2; ++r) s += std::pow(r, -lambda);
    return 4.0 * s + 2.0 * std::pow(L / 2.0, -lambda);
}

TorusComparison torus_correction_bound(const Polyomino& p, const ModelParams& params) {
    params.validate();
    if (!params.L) throw InvalidArgument("torus side L is required");
    const int L = *params.L;
    if (std::max(p.width(), p.height()) > L / 2)
        throw PolyominoTooLargeForTorus("polyomino does not fit in an L/2 box");
    const double lam = params.lambda;

    // Each cell sees every other site of its torus row and column once, at
    // wrapped distance. Occupied partners are removed; inside an L/2 box the
    // wrapped distance equals the plain one.
    double occupied = 0.0;
    const auto& cells = p.cells();
    for (const Cell& c : cells)
        for (const Cell& d : cells) {
            if (c == d) continue;
            if (c.y == d.y) occupied += std::pow(std::abs(c.x - d.x), -lam);
            if (c.x == d.x) occupied += std::pow(std::abs(c.y - d.y), -lam);
        }

    TorusComparison out;
    out.torus = p.area() * unit_square_torus(L, lam) - occupied;
    const ZetaEngine e(lam);
    out.infinite = perimeter(p, e).total;
    const double tail = L % 2 == 1 ? 4.0 * hurwitz(lam, (L + 1) / 2.0)
                                   : 4.0 * hurwitz(lam, L / 2.0) - 2.0 * std::pow(L / 2.0, -lam);
    out.exact_gap = p.area() * tail;
    out.bound = 4.0 * p.area() * std::pow((L - 1) / 2.0, 1.0 - lam) / (lam - 1.0);
    out.constant = out.bound / (p.area() * std::pow(static_cast<double>(L), 1.0 - lam));
    out.nominal_bound = 4.0 * p.area() * std::pow(L / 2.0, 1.0 - lam) / (lam - 1.0);
    return out;
}

}  // namespace nlper
