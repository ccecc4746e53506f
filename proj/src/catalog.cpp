#include "nlper/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nlper/errors.hpp"

namespace nlper {

namespace {
int isqrt(int n) {
    int l = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (l * l > n) --l;
    while ((l + 1) * (l + 1) <= n) ++l;
    return l;
}

double pw(long r, double lambda) { return std::pow(static_cast<double>(r), -lambda); }
}  // namespace

Decomposition decompose(int n) {
    if (n < 1) throw InvalidArgument("area must be >= 1");
    Decomposition d;
    d.n = n;
    const int l = isqrt(n);
    if (n - l * l <= l - 1)
        d.square_form = std::make_pair(l, n - l * l);
    else
        d.quasi_form = std::make_pair(l, n - l * (l + 1));
    for (int a = 1; a * a <= n; ++a)
        for (int b = std::max(a, n / (a + 1)); a * b <= n; ++b) {
            const int k = n - a * b;
            if (k <= b) d.rect_forms.push_back({a, b, k});
        }
    return d;
}

ShapeSpec Decomposition::reference() const {
    if (square_form) return ShapeSpec::square(square_form->first, square_form->second);
    const auto [l, k2] = *quasi_form;
    // With k2 = l the strip no longer fits along the short side.
    return ShapeSpec::quasi_square(l, k2, k2 == l ? Side::Longer : Side::Shorter);
}

int Decomposition::reference_classical() const {
    if (square_form) return 4 * square_form->first + (square_form->second > 0 ? 2 : 0);
    return 4 * quasi_form->first + 2 + (quasi_form->second > 0 ? 2 : 0);
}

namespace {
// All valid specs of area n, in the canonical (family, a, b, k, side) order.
std::vector<ShapeSpec> all_specs(int n) {
    std::vector<ShapeSpec> out;
    for (int a = 1; a * a <= n; ++a)
        for (int b = std::max(a, n / (a + 1)); a * b <= n; ++b) {
            const int k = n - a * b;
            for (Side side : {Side::Shorter, Side::Longer}) {
                ShapeSpec s = ShapeSpec::rect(a, b, k, side);
                if (s.valid() && s.side == side) out.push_back(s);
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Bounding box of a realized spec as (short side, long side).
std::pair<int, int> box_of(const ShapeSpec& s) {
    int w = s.b, h = s.a;
    if (s.k > 0) (s.side == Side::Shorter ? w : h) += 1;
    return {std::min(w, h), std::max(w, h)};
}

// Congruent shapes share their bounding box up to rotation, so the costly
// orbit comparison only runs between specs whose boxes agree.
std::vector<ShapeSpec> dedup_by_orbit(const std::vector<ShapeSpec>& specs) {
    std::vector<ShapeSpec> out;
    std::vector<std::optional<Polyomino>> shapes;
    auto shape_of = [](std::optional<Polyomino>& slot, const ShapeSpec& s) -> const Polyomino& {
        if (!slot) slot = realize(s);
        return *slot;
    };
    for (const ShapeSpec& s : specs) {
        std::optional<Polyomino> shape;
        bool duplicate = false;
        for (std::size_t i = 0; i < out.size() && !duplicate; ++i)
            if (box_of(out[i]) == box_of(s))
                duplicate = congruent(shape_of(shapes[i], out[i]), shape_of(shape, s));
        if (duplicate) continue;
        out.push_back(s);
        shapes.push_back(std::move(shape));
    }
    return out;
}
}  // namespace

std::vector<ShapeSpec> minimal_specs(int n) {
    Decomposition d = decompose(n);
    const int ref_per = d.reference_classical();
    std::vector<ShapeSpec> ordered{d.reference()};
    for (const ShapeSpec& s : all_specs(n))
        if (classical_perimeter(s) == ref_per) ordered.push_back(s);
    return dedup_by_orbit(ordered);
}

std::vector<ShapeSpec> extended_specs(int n) { return dedup_by_orbit(all_specs(n)); }

namespace {
std::vector<CatalogEntry> entries(const std::vector<ShapeSpec>& specs, const ZetaEngine& e) {
    std::vector<CatalogEntry> out;
    out.reserve(specs.size());
    for (const ShapeSpec& s : specs) out.push_back({s, classical_perimeter(s), perimeter_shape(s, e)});
    return out;
}
}  // namespace

Catalog catalog(int n, const ZetaEngine& e) {
    return {entries(minimal_specs(n), e), entries(extended_specs(n), e)};
}

std::vector<CatalogEntry> argmin_shape(int n, const ZetaEngine& e) {
    auto all = entries(minimal_specs(n), e);
    double best = all.front().nonlocal_perimeter;
    for (const auto& c : all) best = std::min(best, c.nonlocal_perimeter);
    std::vector<CatalogEntry> out;
    for (const auto& c : all)
        if (c.nonlocal_perimeter <= best + kMargin) out.push_back(c);
    return out;
}

bool in_extended_catalog(const Polyomino& p) { return is_rect_with_protuberance(p); }

std::optional<double> crossover_between(const ShapeSpec& s1, const ShapeSpec& s2, double lo,
                                        double hi, double tol) {
    auto gap = [&](double lam) {
        ZetaEngine e(lam);
        return perimeter_shape(s1, e) - perimeter_shape(s2, e);
    };
    double glo = gap(lo), ghi = gap(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0) == (ghi > 0)) return std::nullopt;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double g = gap(mid);
        if ((g > 0) == (glo > 0)) {
            lo = mid;
            glo = g;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Crossover crossover_lambda(int n, double lo, double hi, double tol) {
    auto specs = minimal_specs(n);
    if (specs.size() < 2) throw NoTwoShapes("area " + std::to_string(n) + " has a single candidate shape");
    auto winner = [&](double lam) {
        ZetaEngine e(lam);
        const ShapeSpec* best = &specs.front();
        double best_v = perimeter_shape(*best, e);
        for (const auto& s : specs) {
            double v = perimeter_shape(s, e);
            if (v < best_v) {
                best_v = v;
                best = &s;
            }
        }
        return *best;
    };
    Crossover c;
    c.n = n;
    c.below = winner(lo + 1e-9);
    c.above = winner(hi);
    if (!(c.below == c.above)) c.lambda_star = crossover_between(c.below, c.above, lo, hi, tol);
    return c;
}

// ---------------------------------------------------------------------------
// Positivity auxiliaries. Sums with an empty range are zero.

double F1(int a, int l, double lambda) {
    if (a < 1 || a >= l) throw HypothesisViolated("F1 requires 1 <= a < l");
    double s1 = 0.0, s2 = 0.0;
    for (int k = 1; k <= a - 1; ++k) s1 += pw(k, lambda - 1.0);
    for (int k = a; k <= l - 1; ++k) s2 += pw(k, lambda - 1.0);
    const double ad = a, ld = l;
    return (ad + ld * ld / ad - 2.0 * ld) * s1 - 2.0 * (ld - ad) * s2 + (ld * ld - ad * ad) * pw(a, lambda);
}

double F2(int a, int l, int b, double lambda) {
    if (a < 1 || a >= l) throw HypothesisViolated("F2 requires 1 <= a < l");
    if (b < l) throw HypothesisViolated("F2 requires b >= l");
    const double l2 = static_cast<double>(l) * l;
    double v = 0.0;
    for (int k = a + 1; k <= l - 1; ++k) v += (l2 - a * static_cast<double>(k)) * pw(k, lambda);
    for (int k = l; k <= b - 1; ++k) v -= (l2 - a * static_cast<double>(k)) * pw(k, lambda);
    return v;
}

double F1_tilde(int a, int l, int k1, double lambda) {
    if (k1 < 0) throw HypothesisViolated("F1_tilde requires k1 >= 0");
    double v = F1(a, l, lambda);
    double s = 0.0;
    for (int r = 1; r <= a - 1; ++r) s += (a - r) * pw(r, lambda);
    v -= static_cast<double>(k1) / a * s;
    v += k1 * pw(l, lambda);
    for (int r = 1; r <= k1 - 1; ++r) v += (k1 - r) * pw(r, lambda);
    return v;
}

double F2_tilde(int a, int l, int k1, double lambda) {
    if (a < 1 || a >= l) throw HypothesisViolated("F2_tilde requires 1 <= a < l");
    if (k1 < 0) throw HypothesisViolated("F2_tilde requires k1 >= 0");
    const long l2 = static_cast<long>(l) * l;
    const long upper = (l2 + k1) / a - 1;  // floor((l^2 + k1)/a - 1)
    double v = 0.0;
    for (long r = a + 1; r <= l - 1; ++r) v += static_cast<double>(l2 - a * r) * pw(r, lambda);
    for (long r = l; r <= upper; ++r) v -= static_cast<double>(l2 + k1 - a * r) * pw(r, lambda);
    return v;
}

double delta_rect_square(int a, int b, int l, double lambda) {
    if (a < 1 || b < a || static_cast<long>(a) * b != static_cast<long>(l) * l)
        throw HypothesisViolated("delta requires 1 <= a <= b and ab = l^2");
    double v = 0.0;
    for (int k = 1; k <= l - 1; ++k) v += 2.0 * l * (l - k) * pw(k, lambda);
    for (int k = 1; k <= b - 1; ++k) v -= static_cast<double>(a) * (b - k) * pw(k, lambda);
    for (int k = 1; k <= a - 1; ++k) v -= static_cast<double>(b) * (a - k) * pw(k, lambda);
    return v;
}

double Delta(int l, int alpha, int C, double lambda) {
    if (alpha < 1 || alpha >= l) throw HypothesisViolated("Delta requires 1 <= alpha < l");
    if (C < 0) throw HypothesisViolated("Delta requires C >= 0");
    const long m = -static_cast<long>(alpha) * alpha + static_cast<long>(1 + C) * (l - alpha);
    if (m < 0) throw HypothesisViolated("Delta requires a nonnegative protuberance length");
    const long top = l + alpha + C;
    double v = 0.0;
    for (long r = 1; r <= l; ++r) v += static_cast<double>(m) * pw(r, lambda);
    for (long r = 1; r <= top; ++r) v -= static_cast<double>(l - alpha) * (top + 1 - r) * pw(r, lambda);
    for (long r = 1; r <= l - alpha - 1; ++r)
        v -= static_cast<double>(top + 1) * (l - alpha - r) * pw(r, lambda);
    for (long r = 1; r <= l - 1; ++r) v += 2.0 * l * (l - r) * pw(r, lambda);
    for (long r = 1; r <= m - 1; ++r) v += static_cast<double>(m - r) * pw(r, lambda);
    return v;
}

double Delta_tilde(int l, int alpha, int C, double lambda) {
    if (C < 1) throw HypothesisViolated("Delta_tilde requires C >= 1");
    double v = Delta(l, alpha, C - 1, lambda);
    for (long r = l + 1; r <= l + alpha + C; ++r) v -= static_cast<double>(l - alpha) * pw(r, lambda);
    return v;
}

double lemma_f(int x, double lambda) {
    if (x < 2) throw HypothesisViolated("f requires x >= 2");
    const long x2 = static_cast<long>(x) * x;
    const long q = (static_cast<long>(x) + 1) * (x + 1);
    double s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;
    for (long r = 1; r <= x2 + x; ++r) s1 += pw(r, lambda);
    for (long r = 1; r <= q; ++r) s2 += static_cast<double>(q + 1 - r) * pw(r, lambda);
    for (long r = 1; r <= x2 - 1; ++r) s3 += static_cast<double>(x2 - r) * pw(r, lambda);
    for (long r = 1; r <= x2 + x - 1; ++r) s4 += static_cast<double>(x2 + x - r) * pw(r, lambda);
    for (long r = x2 + x + 1; r <= x2 + 2 * x + 2; ++r) s5 += pw(r, lambda);
    const double X2 = static_cast<double>(x2);
    return X2 * s1 - X2 * s2 - static_cast<double>(q) * s3 + 2.0 * static_cast<double>(x2 + x) * s4 - X2 * s5;
}

PositivityReport positivity_diagnostics(int a, int b, int l, int k1, int k2, double lambda) {
    if (a < 1 || l < 1) throw HypothesisViolated("requires a >= 1 and l >= 1");
    if (a >= l) throw HypothesisViolated("requires a < l");
    if (b < a) throw HypothesisViolated("requires a <= b");
    if (k1 < 0 || k2 < 0) throw HypothesisViolated("requires k1, k2 >= 0");
    PositivityReport r;
    r.F1 = F1(a, l, lambda);
    if (b >= l) r.F2 = F2(a, l, b, lambda);
    r.F1_tilde = F1_tilde(a, l, k1, lambda);
    r.F2_tilde = F2_tilde(a, l, k1, lambda);
    if (static_cast<long>(a) * b == static_cast<long>(l) * l) r.delta = delta_rect_square(a, b, l, lambda);
    const int alpha = l - a;
    const int C = b - l - alpha;
    if (C >= 1) {
        try {
            r.delta_tilde = Delta_tilde(l, alpha, C, lambda);
        } catch (const HypothesisViolated&) {
        }
    }
    if (l >= 2) r.f = lemma_f(l, lambda);
    auto flag = [&](const char* name, const std::optional<double>& v, bool allow_zero) {
        if (v && (allow_zero ? *v < 0.0 : *v <= 0.0)) r.flags.emplace_back(name);
    };
    flag("F1", r.F1, false);
    flag("F2", r.F2, true);
    flag("F1_tilde", r.F1_tilde, false);
    flag("F2_tilde", r.F2_tilde, false);
    flag("delta", r.delta, false);
    flag("delta_tilde", r.delta_tilde, false);
    flag("f", r.f, false);
    return r;
}

std::vector<std::pair<int, int>> f1_grid(int l_max) {
    std::vector<std::pair<int, int>> out;
    for (int l = 4; l <= l_max; ++l)
        for (int a = 1; a < l; ++a)
            if ((l * l) % a == 0) out.emplace_back(a, l);
    return out;
}

std::vector<DiagnosticPoint> tilde_grid(int l_max) {
    std::vector<DiagnosticPoint> out;
    for (int l = 2; l <= l_max; ++l)
        for (int alpha = 1; alpha < l; ++alpha) {
            const int a = l - alpha;
            // k1 - k2 grows with C, so the loop stops once it exceeds a.
            for (int C = 1;; ++C) {
                const int excess = -alpha * alpha + C * (l - alpha);  // k1 - k2
                if (excess > a) break;
                if (excess < 0) continue;
                const int b = l + alpha + C;
                for (int k2 = 0; k2 <= a - 1; ++k2) {
                    const int k1 = k2 + excess;
                    if (k1 <= l - 1) out.push_back({a, l, k1, b, k2, C});
                }
            }
        }
    return out;
}

}  // namespace nlper
