#include "nlper/enumerate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "nlper/catalog.hpp"
#include "nlper/errors.hpp"
#include "nlper/parallel.hpp"
#include "nlper/perimeter.hpp"
#include "nlper/reduction.hpp"

namespace nlper {

namespace {

void check_area(int n) {
    if (n < 1) throw InvalidArgument("area must be at least 1");
    if (n > kEnumerationCap)
        throw AreaTooLarge("exhaustive enumeration is capped at area " +
                           std::to_string(kEnumerationCap));
}

// State for Redelmeier's enumeration. Cells live on a (2n+1) x (n+1) board
// with the root at (n, 0); only cells above the root row, or on it to the
// right, may join, so each fixed polyomino is reached from its lowest-leftmost
// cell exactly once.
class Redelmeier {
public:
    Redelmeier(int n, const std::function<void(const Polyomino&)>& visit)
        : n_(n), w_(2 * n + 1), h_(n + 1), seen_(static_cast<std::size_t>(w_ * h_), 0),
          visit_(visit) {}

    void run() {
        std::vector<int> untried{index(n_, 0)};
        seen_[static_cast<std::size_t>(index(n_, 0))] = 1;
        recurse(untried);
    }

private:
    int index(int x, int y) const { return y * w_ + x; }

    bool allowed(int x, int y) const {
        if (x < 0 || x >= w_ || y < 0 || y >= h_) return false;
        return y > 0 || x >= n_;
    }

    void recurse(std::vector<int> untried) {
        while (!untried.empty()) {
            const int c = untried.back();
            untried.pop_back();
            current_.push_back(c);
            if (static_cast<int>(current_.size()) == n_) {
                emit();
            } else {
                std::vector<int> next = untried;
                std::vector<int> marked;
                const int cx = c % w_, cy = c / w_;
                const int nbr[4][2] = {{cx + 1, cy}, {cx - 1, cy}, {cx, cy + 1}, {cx, cy - 1}};
                for (const auto& q : nbr) {
                    if (!allowed(q[0], q[1])) continue;
                    const int id = index(q[0], q[1]);
                    if (seen_[static_cast<std::size_t>(id)]) continue;
                    seen_[static_cast<std::size_t>(id)] = 1;
                    marked.push_back(id);
                    next.push_back(id);
                }
                recurse(std::move(next));
                for (int id : marked) seen_[static_cast<std::size_t>(id)] = 0;
            }
            current_.pop_back();
        }
    }

    void emit() {
        std::vector<Cell> cells;
        cells.reserve(current_.size());
        for (int id : current_) cells.push_back({id % w_, id / w_});
        visit_(Polyomino(std::move(cells)));
    }

    int n_, w_, h_;
    std::vector<std::uint8_t> seen_;
    std::vector<int> current_;
    const std::function<void(const Polyomino&)>& visit_;
};

}  // namespace

void for_each_connected(int n, const std::function<void(const Polyomino&)>& visit) {
    check_area(n);
    Redelmeier(n, visit).run();
}

std::vector<Polyomino> enumerate_connected(int n) {
    std::vector<Polyomino> out;
    for_each_connected(n, [&](const Polyomino& p) { out.push_back(p); });
    return out;
}

std::vector<Polyomino> enumerate_by_growth(int n) {
    check_area(n);
    std::set<Polyomino> level{Polyomino({{0, 0}})};
    for (int size = 1; size < n; ++size) {
        std::set<Polyomino> next;
        for (const Polyomino& p : level) {
            for (const Cell& c : p.cells()) {
                const Cell nbr[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
                for (const Cell& q : nbr) {
                    if (p.contains(q.x, q.y)) continue;
                    std::vector<Cell> cells = p.cells();
                    cells.push_back(q);
                    next.insert(Polyomino(std::move(cells)));
                }
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

EnumerationReport verify_theorem(int n, const ZetaEngine& e, std::uint64_t seed, int samples) {
    check_area(n);
    EnumerationReport rep;
    rep.n = n;
    rep.lambda = e.lambda();

    const Catalog cat = catalog(n, e);
    std::set<Polyomino> catalog_orbits;
    rep.catalog_min = cat.minimal.front().nonlocal_perimeter;
    for (const CatalogEntry& c : cat.minimal) {
        // The perimeter does not see where the protuberance sits along its
        // side, so every placement belongs to the catalog.
        const int last = c.spec.k > 0 ? c.spec.attach_length() - c.spec.k : 0;
        for (int offset = 0; offset <= last; ++offset)
            catalog_orbits.insert(orbit_representative(realize(c.spec, offset)));
        rep.catalog_min = std::min(rep.catalog_min, c.nonlocal_perimeter);
    }

    const std::vector<Polyomino> shapes = enumerate_connected(n);
    rep.count_connected = shapes.size();
    std::vector<double> per(shapes.size());
    parallel_for(shapes.size(), [&](std::size_t i) { per[i] = perimeter(shapes[i], e).total; });

    rep.global_min = *std::min_element(per.begin(), per.end());
    std::set<Polyomino> argmin;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const bool at_min = compare_perimeters(per[i], rep.global_min) == 0;
        if (at_min) argmin.insert(orbit_representative(shapes[i]));
        // Anything tying with or undercutting the catalog must itself be a
        // catalog shape.
        if (compare_perimeters(per[i], rep.catalog_min) <= 0) {
            const Polyomino rep_i = orbit_representative(shapes[i]);
            if (!catalog_orbits.count(rep_i))
                throw TheoremViolation("connected shape outside the catalog reaches the minimum",
                                       shapes[i].to_string());
        }
    }
    rep.argmin_orbits.assign(argmin.begin(), argmin.end());
    rep.verified_against_catalog = std::includes(catalog_orbits.begin(), catalog_orbits.end(),
                                                 argmin.begin(), argmin.end());

    if (n >= 2 && samples > 0) {
        std::vector<std::vector<Polyomino>> pieces(static_cast<std::size_t>(n));
        for (int m = 1; m < n; ++m) pieces[static_cast<std::size_t>(m)] = enumerate_connected(m);
        std::mt19937_64 rng(seed);
        const int box = 3 * n;
        auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
        auto place = [&](const Polyomino& p, std::vector<Cell>& out) {
            const int dx = pick(0, box - p.width()), dy = pick(0, box - p.height());
            for (const Cell& c : p.cells()) out.push_back({c.x + dx, c.y + dy});
        };
        int drawn = 0;
        while (drawn < samples) {
            const int n1 = pick(1, n - 1);
            const auto& pa = pieces[static_cast<std::size_t>(n1)];
            const auto& pb = pieces[static_cast<std::size_t>(n - n1)];
            std::vector<Cell> cells;
            place(pa[static_cast<std::size_t>(pick(0, static_cast<int>(pa.size()) - 1))], cells);
            place(pb[static_cast<std::size_t>(pick(0, static_cast<int>(pb.size()) - 1))], cells);
            std::vector<Cell> sorted = cells;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            const Polyomino p(std::move(cells));
            if (is_connected(p)) continue;
            ++drawn;
            const double v = perimeter(p, e).total;
            rep.min_disconnected = rep.min_disconnected ? std::min(*rep.min_disconnected, v) : v;
            if (compare_perimeters(v, rep.catalog_min) <= 0)
                throw TheoremViolation("disconnected configuration reaches the minimum", p.to_string());
        }
        rep.disconnected_samples = static_cast<std::uint64_t>(drawn);
    }
    if (!rep.verified_against_catalog)
        throw TheoremViolation("argmin orbit missing from the catalog",
                               rep.argmin_orbits.front().to_string());
    return rep;
}

ReductionReport verify_reduction_consistency(int n, const ZetaEngine& e) {
    check_area(n);
    ReductionReport rep;
    rep.n = n;
    rep.lambda = e.lambda();
    const std::vector<Polyomino> shapes = enumerate_connected(n);

    struct Outcome {
        bool skipped = false, cap_hit = false, strict = false;
        double decrease = 0.0;
        std::vector<std::string> labels;
    };
    std::vector<Outcome> out(shapes.size());
    parallel_for(shapes.size(), [&](std::size_t i) {
        Outcome& o = out[i];
        if (in_extended_catalog(shapes[i])) {
            o.skipped = true;
            return;
        }
        try {
            const ReductionTrace t = main_algorithm(shapes[i], e);
            o.strict = t.terminal_class == TerminalClass::ReducedStrictly &&
                       compare_perimeters(t.terminal_perimeter(), t.initial_perimeter) < 0;
            o.decrease = t.initial_perimeter - t.terminal_perimeter();
            for (const TraceStep& s : t.steps) o.labels.push_back(s.label);
        } catch (const NonTermination&) {
            o.cap_hit = true;
        }
    });

    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const Outcome& o = out[i];
        if (o.skipped) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        if (o.cap_hit) ++rep.cap_hits;
        if (o.cap_hit || !o.strict) {
            rep.violations.push_back(shapes[i]);
            continue;
        }
        rep.max_decrease = rep.max_decrease ? std::max(*rep.max_decrease, o.decrease) : o.decrease;
        rep.min_decrease = rep.min_decrease ? std::min(*rep.min_decrease, o.decrease) : o.decrease;
        std::set<std::string> used(o.labels.begin(), o.labels.end());
        for (const auto& l : used) ++rep.step_counts[l];
    }
    return rep;
}

}  // namespace nlper
