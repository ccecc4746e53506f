#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlper/catalog.hpp"
#include "nlper/enumerate.hpp"
#include "nlper/errors.hpp"
#include "nlper/io.hpp"
#include "nlper/landscape.hpp"
#include "nlper/perimeter.hpp"
#include "nlper/reduction.hpp"
#include "nlper/zeta.hpp"

namespace py = pybind11;
using namespace nlper;

namespace {

using CellList = std::vector<std::pair<int, int>>;

Polyomino to_polyomino(const CellList& cells) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (auto [x, y] : cells) out.push_back({x, y});
    return Polyomino(std::move(out));
}

CellList to_cells(const Polyomino& p) {
    CellList out;
    for (const Cell& c : p.cells()) out.emplace_back(c.x, c.y);
    return out;
}

std::vector<std::string> labels(const std::vector<CatalogEntry>& entries) {
    std::vector<std::string> out;
    for (const auto& c : entries) out.push_back(c.spec.label());
    return out;
}

}  // namespace

PYBIND11_MODULE(_nlper, m) {
    m.doc() = "Nonlocal bi-axial perimeter of polyominoes";

    // Domain errors surface as ValueError subclasses.
    static py::exception<Error> error(m, "NlperError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("hurwitz", [](double s, double q) { return hurwitz(s, q); }, py::arg("s"), py::arg("q"));

    m.def("parse", [](const std::string& text) { return to_cells(parse_polyomino(text)); }, py::arg("text"),
          "Cells of a polyomino given as pairs or as a '#'/'.' grid.");
    m.def("to_grid", [](const CellList& cells) { return to_polyomino(cells).to_string(); }, py::arg("cells"));

    m.def(
        "perimeter",
        [](const CellList& cells, double lam) {
            const auto b = perimeter(to_polyomino(cells), ZetaEngine(lam));
            return py::dict(py::arg("horizontal") = b.horizontal, py::arg("vertical") = b.vertical,
                            py::arg("total") = b.total);
        },
        py::arg("cells"), py::arg("lam"));
    m.def("classical_perimeter", [](const CellList& cells) { return classical_perimeter(to_polyomino(cells)); },
          py::arg("cells"));
    m.def("classify", [](const CellList& cells) { return to_string(classify(to_polyomino(cells))); },
          py::arg("cells"));

    m.def("minimal_shapes", [](int n) {
        std::vector<std::string> out;
        for (const auto& s : minimal_specs(n)) out.push_back(s.label());
        return out;
    }, py::arg("n"));
    m.def("argmin", [](int n, double lam) { return labels(argmin_shape(n, ZetaEngine(lam))); }, py::arg("n"),
          py::arg("lam"));
    m.def(
        "crossover",
        [](int n, double lo, double hi, double tol) {
            const auto c = crossover_lambda(n, lo, hi, tol);
            return py::dict(py::arg("below") = c.below.label(), py::arg("above") = c.above.label(),
                            py::arg("lambda_star") = c.lambda_star);
        },
        py::arg("n"), py::arg("lo") = 1.8, py::arg("hi") = 20.0, py::arg("tol") = 1e-6);

    m.def("count_fixed", [](int n) {
        std::uint64_t count = 0;
        for_each_connected(n, [&](const Polyomino&) { ++count; });
        return count;
    }, py::arg("n"));
    m.def(
        "verify_theorem",
        [](int n, double lam, std::uint64_t seed, int samples) {
            const auto r = verify_theorem(n, ZetaEngine(lam), seed, samples);
            std::vector<CellList> orbits;
            for (const auto& p : r.argmin_orbits) orbits.push_back(to_cells(p));
            return py::dict(py::arg("count_connected") = r.count_connected, py::arg("global_min") = r.global_min,
                            py::arg("catalog_min") = r.catalog_min, py::arg("argmin_orbits") = orbits,
                            py::arg("disconnected_samples") = r.disconnected_samples,
                            py::arg("min_disconnected") = r.min_disconnected);
        },
        py::arg("n"), py::arg("lam"), py::arg("seed") = 0, py::arg("samples") = 1000);

    m.def(
        "reduce",
        [](const CellList& cells, double lam) {
            const auto t = main_algorithm(to_polyomino(cells), ZetaEngine(lam));
            py::list steps;
            for (const auto& s : t.steps)
                steps.append(py::dict(py::arg("label") = s.label, py::arg("perimeter") = s.perimeter,
                                      py::arg("cells") = to_cells(s.shape)));
            return py::dict(py::arg("initial_perimeter") = t.initial_perimeter, py::arg("steps") = steps,
                            py::arg("terminal") = to_cells(t.terminal()),
                            py::arg("terminal_class") = to_string(t.terminal_class));
        },
        py::arg("cells"), py::arg("lam"));

    m.def(
        "landscape",
        [](double lam, double h, int n_max) {
            const auto l = landscape(ModelParams{lam, h, {}}, n_max);
            std::vector<double> energy;
            std::vector<std::string> shapes;
            for (const auto& p : l.points) {
                energy.push_back(p.delta_H);
                shapes.push_back(p.minimizing_specs.front().label());
            }
            return py::dict(py::arg("delta_H") = energy, py::arg("shapes") = shapes, py::arg("n_c") = l.n_c,
                            py::arg("critical_side") = l.critical_side, py::arg("ties") = l.ties);
        },
        py::arg("lam"), py::arg("h"), py::arg("n_max"));
    m.def(
        "critical_length",
        [](double lam, double h, int l_max) { return critical_length_square(ModelParams{lam, h, {}}, l_max).l_c; },
        py::arg("lam"), py::arg("h"), py::arg("l_max") = 200);
    m.def("d2f", [](double lam, double h, double l) { return d2f_dl2(ModelParams{lam, h, {}}, l); },
          py::arg("lam"), py::arg("h"), py::arg("l"));
    m.def(
        "torus",
        [](const CellList& cells, double lam, int L) {
            const auto t = torus_correction_bound(to_polyomino(cells), ModelParams{lam, 0.1, L});
            return py::dict(py::arg("torus") = t.torus, py::arg("infinite") = t.infinite,
                            py::arg("exact_gap") = t.exact_gap, py::arg("bound") = t.bound);
        },
        py::arg("cells"), py::arg("lam"), py::arg("L"));
}
