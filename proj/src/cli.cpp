#include "nlper/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "nlper/catalog.hpp"
#include "nlper/enumerate.hpp"
#include "nlper/errors.hpp"
#include "nlper/io.hpp"
#include "nlper/landscape.hpp"
#include "nlper/perimeter.hpp"
#include "nlper/reduction.hpp"

namespace nlper::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "# nlper-csv schema 1";

// Twelve significant digits everywhere. JSON numbers are rounded through the
// same text so the serializer's shortest form never shows more digits.
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}
double round12(double v) { return std::stod(fmt(v)); }

json cells_json(const Polyomino& p) {
    json cells = json::array();
    for (const Cell& c : p.cells()) cells.push_back({c.x, c.y});
    return cells;
}

double default_tolerance() {
    if (const char* env = std::getenv("NLPER_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0.0) return v;
        } catch (const std::exception&) {
        }
    }
    return kDefaultTolerance;
}

CLI::Validator lambda_check() {
    return CLI::Validator(
        [](std::string& s) -> std::string {
            try {
                if (std::stod(s) > 1.0) return {};
            } catch (const std::exception&) {
            }
            return "lambda must be a number greater than 1";
        },
        "LAMBDA>1");
}

// Unwritable outputs are reported before any computation starts.
void check_writable(const std::string& path) {
    if (path.empty()) return;
    std::ofstream probe(path, std::ios::app);
    if (!probe) throw ParseError("cannot write " + path);
}

struct Options {
    double lambda = 2.0;
    double h = 0.41;
    double tol = 0.0;
    int n = 0;
    int n_max = 30;
    std::string input, output, trace, format = "csv";
    bool direct = false;
    int window = 0;
    std::uint64_t seed = 0;
    int samples = 1000;
    bool reduction = false;
    bool short_range = false;
    double lo = 1.8, hi = 20.0, bisect_tol = 1e-6;
    double lambda_min = 1.8, lambda_max = 4.0;
    int steps = 23;
    double h_min = 0.0, h_max = 0.0;
    int h_steps = 1;
    int l_min = 1, l_max = 200;
    std::optional<int> a, b, l, k1, k2;
};

int cmd_perimeter(const Options& o, std::ostream& out) {
    const Polyomino p = read_polyomino(o.input);
    const ZetaEngine e(o.lambda, o.tol);
    const PerimeterBreakdown r =
        o.direct ? perimeter_direct(p, e, o.window > 0 ? o.window : std::max(p.width(), p.height()))
                 : perimeter(p, e);
    json j;
    j["horizontal"] = round12(r.horizontal);
    j["vertical"] = round12(r.vertical);
    j["total"] = round12(r.total);
    j["classical"] = classical_perimeter(p);
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    check_writable(o.output);
    check_writable(o.trace);
    const Polyomino p = read_polyomino(o.input);
    const ZetaEngine e(o.lambda, o.tol);
    const ReductionTrace t = main_algorithm(p, e);
    if (o.output.empty())
        out << format_pairs(t.terminal());
    else
        write_polyomino(o.output, t.terminal());
    if (!o.trace.empty()) {
        json j;
        j["lambda"] = o.lambda;
        j["initial"] = cells_json(t.initial);
        j["initial_perimeter"] = round12(t.initial_perimeter);
        j["terminal_class"] = to_string(t.terminal_class);
        j["rotated"] = t.rotated;
        j["iterations"] = t.iterations;
        j["steps"] = json::array();
        for (const TraceStep& s : t.steps)
            j["steps"].push_back(
                {{"label", s.label}, {"perimeter", round12(s.perimeter)}, {"cells", cells_json(s.shape)}});
        j["terminal_perimeter"] = round12(t.terminal_perimeter());
        std::ofstream(o.trace) << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_minimizers(const Options& o, std::ostream& out) {
    const ZetaEngine e(o.lambda, o.tol);
    if (o.format == "json") {
        json rows = json::array();
        for (int n = 1; n <= o.n_max; ++n) {
            json row;
            row["n"] = n;
            row["candidates"] = json::array();
            for (const CatalogEntry& c : catalog(n, e).minimal)
                row["candidates"].push_back({{"shape", c.spec.label()},
                                             {"per_lambda", round12(c.nonlocal_perimeter)},
                                             {"classical", c.classical_perimeter}});
            row["argmin"] = json::array();
            for (const CatalogEntry& c : argmin_shape(n, e)) row["argmin"].push_back(c.spec.label());
            rows.push_back(row);
        }
        out << rows.dump(2) << "\n";
        return kExitOk;
    }
    out << kSchema << "\n";
    out << "n,shapes,argmin,per_lambda,classical\n";
    for (int n = 1; n <= o.n_max; ++n) {
        std::string shapes, winners;
        for (const CatalogEntry& c : catalog(n, e).minimal) shapes += (shapes.empty() ? "" : ";") + c.spec.label();
        const auto best = argmin_shape(n, e);
        for (const CatalogEntry& c : best) winners += (winners.empty() ? "" : ";") + c.spec.label();
        out << n << "," << shapes << "," << winners << "," << fmt(best.front().nonlocal_perimeter) << ","
            << best.front().classical_perimeter << "\n";
    }
    return kExitOk;
}

int cmd_crossover(const Options& o, std::ostream& out) {
    const Crossover c = crossover_lambda(o.n, o.lo, o.hi, o.bisect_tol);
    json j;
    j["n"] = c.n;
    j["shapes"] = json::array();
    for (const ShapeSpec& s : minimal_specs(o.n)) j["shapes"].push_back(s.label());
    j["below"] = c.below.label();
    j["above"] = c.above.label();
    j["lambda_star"] = c.lambda_star ? json(round12(*c.lambda_star)) : json(nullptr);
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const ZetaEngine e(o.lambda, o.tol);
    json j;
    int code = kExitOk;
    try {
        const EnumerationReport r = verify_theorem(o.n, e, o.seed, o.samples);
        j["n"] = r.n;
        j["lambda"] = r.lambda;
        j["count_connected"] = r.count_connected;
        j["global_min"] = round12(r.global_min);
        j["catalog_min"] = round12(r.catalog_min);
        j["argmin_orbits"] = json::array();
        for (const Polyomino& p : r.argmin_orbits) j["argmin_orbits"].push_back(cells_json(p));
        j["verified_against_catalog"] = r.verified_against_catalog;
        j["disconnected_samples"] = r.disconnected_samples;
        j["min_disconnected"] = r.min_disconnected ? json(round12(*r.min_disconnected)) : json(nullptr);
        j["seed"] = o.seed;
    } catch (const TheoremViolation& v) {
        j["n"] = o.n;
        j["lambda"] = o.lambda;
        j["violation"] = v.what();
        j["shape"] = v.shape();
        code = kExitViolation;
    }
    if (o.reduction) {
        const ReductionReport r = verify_reduction_consistency(o.n, e);
        json red;
        red["checked"] = r.checked;
        red["skipped"] = r.skipped;
        red["violations"] = json::array();
        for (const Polyomino& p : r.violations) red["violations"].push_back(cells_json(p));
        red["cap_hits"] = r.cap_hits;
        red["max_decrease"] = r.max_decrease ? json(round12(*r.max_decrease)) : json(nullptr);
        red["min_decrease"] = r.min_decrease ? json(round12(*r.min_decrease)) : json(nullptr);
        red["step_counts"] = r.step_counts;
        j["reduction"] = red;
        if (!r.violations.empty()) code = kExitViolation;
    }
    out << j.dump(2) << "\n";
    return code;
}

int cmd_landscape(const Options& o, std::ostream& out) {
    if (o.short_range) {
        const ShortRangeLandscape s = short_range_landscape(o.h, o.n_max);
        out << kSchema << "\n";
        out << "# n_c=" << s.n_c << " critical_side=" << s.critical_side << " ties=" << s.ties.size() << "\n";
        out << "n,shape,delta_H\n";
        for (int n = 1; n <= o.n_max; ++n)
            out << n << "," << decompose(n).reference().label() << ","
                << fmt(s.delta_H[static_cast<std::size_t>(n - 1)]) << "\n";
        return kExitOk;
    }
    const Landscape land = landscape({o.lambda, o.h, std::nullopt}, o.n_max);
    if (o.format == "json") {
        json j;
        j["lambda"] = o.lambda;
        j["h"] = o.h;
        j["n_c"] = land.n_c;
        j["critical_side"] = land.critical_side;
        j["ties"] = land.ties;
        j["points"] = json::array();
        for (const LandscapePoint& p : land.points) {
            json shapes = json::array();
            for (const ShapeSpec& s : p.minimizing_specs) shapes.push_back(s.label());
            j["points"].push_back({{"n", p.n}, {"shapes", shapes}, {"delta_H", round12(p.delta_H)}});
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << kSchema << "\n";
    out << "# n_c=" << land.n_c << " critical_side=" << land.critical_side << " ties=" << land.ties.size()
        << "\n";
    out << "n,shape,delta_H\n";
    for (const LandscapePoint& p : land.points) {
        std::string shapes;
        for (const ShapeSpec& s : p.minimizing_specs) shapes += (shapes.empty() ? "" : ";") + s.label();
        out << p.n << "," << shapes << "," << fmt(p.delta_H) << "\n";
    }
    return kExitOk;
}

std::vector<double> grid(double lo, double hi, int steps) {
    std::vector<double> v;
    if (steps <= 1) return {lo};
    for (int i = 0; i < steps; ++i) v.push_back(lo + (hi - lo) * i / (steps - 1));
    return v;
}

int cmd_critlen(const Options& o, std::ostream& out) {
    const double h_lo = o.h_min > 0 ? o.h_min : o.h;
    const double h_hi = o.h_max > 0 ? o.h_max : h_lo;
    out << kSchema << "\n";
    out << "lambda,h,l_c\n";
    for (double h : grid(h_lo, h_hi, o.h_steps))
        for (double lam : grid(o.lambda_min, o.lambda_max, o.steps)) {
            std::string value;
            try {
                value = std::to_string(critical_length_square({lam, h, std::nullopt}, o.l_max).l_c);
            } catch (const AmbiguousMax&) {
                value = "tie";
            }
            out << fmt(lam) << "," << fmt(h) << "," << value << "\n";
        }
    return kExitOk;
}

int cmd_d2(const Options& o, std::ostream& out) {
    out << kSchema << "\n";
    out << "lambda,l,d2f\n";
    for (double lam : grid(o.lambda_min, o.lambda_max, o.steps))
        for (int l = o.l_min; l <= o.l_max; ++l)
            out << fmt(lam) << "," << l << "," << fmt(d2f_dl2({lam, o.h, std::nullopt}, l)) << "\n";
    return kExitOk;
}

int cmd_diagnostics(const Options& o, std::ostream& out) {
    if (o.a && o.l) {
        const PositivityReport r =
            positivity_diagnostics(*o.a, o.b.value_or(*o.l), *o.l, o.k1.value_or(0), o.k2.value_or(0), o.lambda);
        json j;
        auto put = [&](const char* name, const std::optional<double>& v) {
            j[name] = v ? json(round12(*v)) : json(nullptr);
        };
        put("F1", r.F1);
        put("F2", r.F2);
        put("F1_tilde", r.F1_tilde);
        put("F2_tilde", r.F2_tilde);
        put("delta", r.delta);
        put("delta_tilde", r.delta_tilde);
        put("f", r.f);
        j["flags"] = r.flags;
        out << j.dump(2) << "\n";
        return r.flags.empty() ? kExitOk : kExitViolation;
    }
    const int l_max = std::min(o.l_max, 200);
    int violations = 0;
    out << kSchema << "\n";
    out << "quantity,a,l,k1,b,k2,C,value,holds\n";
    auto row = [&](const char* q, int a, int l, int k1, int b, int k2, int C, double v, bool holds) {
        violations += holds ? 0 : 1;
        out << q << "," << a << "," << l << "," << k1 << "," << b << "," << k2 << "," << C << "," << fmt(v)
            << "," << (holds ? 1 : 0) << "\n";
    };
    for (const auto& [a, l] : f1_grid(l_max)) {
        const int b = l * l / a;
        const double f1 = F1(a, l, o.lambda), f2 = F2(a, l, b, o.lambda);
        row("F1", a, l, 0, b, 0, 0, f1, f1 > 0);
        row("F2", a, l, 0, b, 0, 0, f2, f2 >= 0);
    }
    for (const DiagnosticPoint& p : tilde_grid(l_max)) {
        const double t1 = F1_tilde(p.a, p.l, p.k1, o.lambda), t2 = F2_tilde(p.a, p.l, p.k1, o.lambda);
        row("F1_tilde", p.a, p.l, p.k1, p.b, p.k2, p.C, t1, t1 > 0);
        row("F2_tilde", p.a, p.l, p.k1, p.b, p.k2, p.C, t2, t2 > 0);
    }
    for (int x = 2; x <= l_max; ++x) {
        const double f = lemma_f(x, o.lambda);
        row("f", 0, x, 0, 0, 0, 0, f, f > 0);
    }
    return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nonlocal bi-axial perimeter toolkit"};
    app.name("nlper");
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);
    Options o;
    o.tol = default_tolerance();
    app.add_option("--tol", o.tol, "Hurwitz zeta tolerance (env NLPER_TOL)")->check(CLI::PositiveNumber);

    auto add_lambda = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--lambda", o.lambda, "decay exponent, > 1")->check(lambda_check());
        if (required) opt->required();
    };

    auto* perimeter_cmd = app.add_subcommand("perimeter", "nonlocal perimeter of a polyomino file");
    add_lambda(perimeter_cmd, true);
    perimeter_cmd->add_option("--input", o.input, "polyomino file")->required();
    perimeter_cmd->add_flag("--direct", o.direct, "use the literal double sum");
    perimeter_cmd->add_option("--window", o.window, "window for --direct");

    auto* reduce_cmd = app.add_subcommand("reduce", "run the reduction algorithm on a polyomino file");
    add_lambda(reduce_cmd, true);
    reduce_cmd->add_option("--input", o.input, "polyomino file")->required();
    reduce_cmd->add_option("--output", o.output, "terminal polyomino file (stdout when absent)");
    reduce_cmd->add_option("--trace", o.trace, "JSON trace with per-step perimeters");

    auto* minimizers_cmd = app.add_subcommand("minimizers", "minimizer catalog for n = 1..n-max");
    add_lambda(minimizers_cmd, true);
    minimizers_cmd->add_option("--n-max", o.n_max)->check(CLI::PositiveNumber);
    minimizers_cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

    auto* crossover_cmd = app.add_subcommand("crossover", "exponent where the minimizer of area n changes");
    crossover_cmd->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    crossover_cmd->add_option("--lo", o.lo);
    crossover_cmd->add_option("--hi", o.hi);
    crossover_cmd->add_option("--bisect-tol", o.bisect_tol);

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive check of the minimizer catalog at area n");
    add_lambda(verify_cmd, true);
    verify_cmd->add_option("--n", o.n)->required()->check(CLI::Range(1, kEnumerationCap));
    verify_cmd->add_option("--seed", o.seed);
    verify_cmd->add_option("--samples", o.samples)->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--reduction", o.reduction, "also check that the reduction strictly decreases");

    auto* landscape_cmd = app.add_subcommand("landscape", "excitation energy of the minimizers");
    add_lambda(landscape_cmd, false);
    landscape_cmd->add_option("--h", o.h)->required()->check(CLI::PositiveNumber);
    landscape_cmd->add_option("--n-max", o.n_max)->required()->check(CLI::Range(4, 1000000));
    landscape_cmd->add_option("--out,--format", o.format)->check(CLI::IsMember({"csv", "json"}));
    landscape_cmd->add_flag("--short-range", o.short_range, "classical perimeter instead");

    auto* critlen_cmd = app.add_subcommand("critlen", "critical side of square droplets over a lambda grid");
    critlen_cmd->add_option("--h", o.h)->check(CLI::PositiveNumber);
    critlen_cmd->add_option("--h-min", o.h_min)->check(CLI::PositiveNumber);
    critlen_cmd->add_option("--h-max", o.h_max)->check(CLI::PositiveNumber);
    critlen_cmd->add_option("--h-steps", o.h_steps)->check(CLI::PositiveNumber);
    critlen_cmd->add_option("--lambda-min", o.lambda_min)->check(lambda_check());
    critlen_cmd->add_option("--lambda-max", o.lambda_max)->check(lambda_check());
    critlen_cmd->add_option("--steps", o.steps)->check(CLI::PositiveNumber);
    critlen_cmd->add_option("--l-max", o.l_max)->check(CLI::Range(2, 100000));

    auto* d2_cmd = app.add_subcommand("d2", "second derivative of the square droplet energy");
    d2_cmd->add_option("--h", o.h)->required()->check(CLI::PositiveNumber);
    d2_cmd->add_option("--lambda-min", o.lambda_min)->check(lambda_check());
    d2_cmd->add_option("--lambda-max", o.lambda_max)->check(lambda_check());
    d2_cmd->add_option("--steps", o.steps)->check(CLI::PositiveNumber);
    d2_cmd->add_option("--l-min", o.l_min)->check(CLI::PositiveNumber);
    d2_cmd->add_option("--l-max", o.l_max)->check(CLI::PositiveNumber);

    auto* diagnostics_cmd = app.add_subcommand("diagnostics", "positivity of the auxiliary functions");
    add_lambda(diagnostics_cmd, true);
    diagnostics_cmd->add_option("--l-max", o.l_max)->check(CLI::Range(2, 200));
    diagnostics_cmd->add_option("--a", o.a);
    diagnostics_cmd->add_option("--b", o.b);
    diagnostics_cmd->add_option("--l", o.l);
    diagnostics_cmd->add_option("--k1", o.k1);
    diagnostics_cmd->add_option("--k2", o.k2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitDomainError;
    }

    // Option defaults that depend on the subcommand.
    if (*d2_cmd) {
        if (d2_cmd->count("--lambda-min") == 0) o.lambda_min = 2.05;
        if (d2_cmd->count("--l-max") == 0) o.l_max = 50;
    }
    if (*diagnostics_cmd && diagnostics_cmd->count("--l-max") == 0) o.l_max = 20;

    try {
        if (*perimeter_cmd) return cmd_perimeter(o, out);
        if (*reduce_cmd) return cmd_reduce(o, out);
        if (*minimizers_cmd) return cmd_minimizers(o, out);
        if (*crossover_cmd) return cmd_crossover(o, out);
        if (*verify_cmd) return cmd_verify(o, out);
        if (*landscape_cmd) return cmd_landscape(o, out);
        if (*critlen_cmd) return cmd_critlen(o, out);
        if (*d2_cmd) return cmd_d2(o, out);
        if (*diagnostics_cmd) return cmd_diagnostics(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    err << app.help();
    return kExitDomainError;
}

}  // namespace nlper::cli
