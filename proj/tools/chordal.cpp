// chordal: exact Lucas/Fibonacci polynomial families, chord products on
// scaled roots of unity, and the radical solver, from the command line.

#include "chordal/chords.hpp"
#include "chordal/errors.hpp"
#include "chordal/families.hpp"
#include "chordal/radicals.hpp"
#include "chordal/serialize.hpp"
#include "chordal/svg.hpp"
#include "chordal/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using namespace chordal;

constexpr int kExitOk = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
    double rel_tol = 1e-9;
    std::string format = "text";
    std::uint64_t seed = 0xC0FFEE;
    bool golden = false;
    std::string out_path;
};

/// Primary output goes to stdout or, when --out is given, to that file.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::invalid_argument("cannot write to '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void finish() {
        if (file_) file_->flush();
        if (file_ && !*file_) throw std::invalid_argument("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

EllipseSpec resolve_spec(const CliConfig& cfg, std::optional<double> a, std::optional<double> b) {
    if (cfg.golden) {
        if (a || b) throw std::invalid_argument("--golden replaces the a and b arguments");
        return golden_spec();
    }
    if (!a || !b) throw std::invalid_argument("either give both a and b or pass --golden");
    return EllipseSpec(*a, *b);
}

// ---- chords / table rendering --------------------------------------------

void render_report_text(std::ostream& os, const ChordReport& r) {
    os << "n: " << r.n << "\n";
    os << "a: " << double_str(r.spec.a) << "\n";
    os << "b: " << double_str(r.spec.b) << "\n";
    os << "chord_lengths:";
    for (double len : r.chord_lengths) os << " " << double_str(len);
    os << "\n";
    os << "numeric_product: " << double_str(r.numeric_product) << "\n";
    os << "formula_value: " << double_str(r.formula_value) << "\n";
    os << "relative_discrepancy: " << double_str(r.relative_discrepancy) << "\n";
    os << "log_product: " << double_str(r.log_product) << "\n";
}

int cmd_chords(const CliConfig& cfg, int n, std::optional<double> a, std::optional<double> b) {
    const EllipseSpec spec = resolve_spec(cfg, a, b);
    const ChordReport report = chord_product_numeric(n, spec);

    OutputTarget out(cfg.out_path);
    if (cfg.format == "json") {
        out.stream() << to_json(report, cfg.rel_tol) << "\n";
    } else if (cfg.format == "csv") {
        out.stream() << "n,numeric_product,formula_value,relative_discrepancy,log_product\n"
                     << report.n << "," << double_str(report.numeric_product) << ","
                     << double_str(report.formula_value) << ","
                     << double_str(report.relative_discrepancy) << ","
                     << double_str(report.log_product) << "\n";
    } else {
        render_report_text(out.stream(), report);
    }
    out.finish();

    if (report.relative_discrepancy <= cfg.rel_tol) return kExitOk;
    std::cerr << "chords: relative discrepancy " << double_str(report.relative_discrepancy)
              << " exceeds tolerance " << double_str(cfg.rel_tol) << "\n";
    return kExitToleranceFailure;
}

int cmd_table(const CliConfig& cfg, int max_n, std::optional<double> a, std::optional<double> b) {
    if (max_n < 2) throw std::invalid_argument("table: max_n must be >= 2");
    const EllipseSpec spec = resolve_spec(cfg, a, b);

    bool all_within = true;
    std::vector<ChordReport> rows;
    rows.reserve(static_cast<std::size_t>(max_n) - 1);
    for (int n = 2; n <= max_n; ++n) {
        rows.push_back(chord_product_numeric(n, spec));
        if (rows.back().relative_discrepancy > cfg.rel_tol) all_within = false;
    }

    OutputTarget out(cfg.out_path);
    if (cfg.format == "json") {
        std::string doc = "{\"a\":" + double_str(spec.a) + ",\"b\":" + double_str(spec.b) + ",\"rows\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const ChordReport& r = rows[i];
            if (i) doc.push_back(',');
            doc += "{\"n\":" + std::to_string(r.n);
            doc += ",\"numeric_product\":" + double_str(r.numeric_product);
            doc += ",\"formula_value\":" + double_str(r.formula_value);
            doc += ",\"factor\":" + double_str(r.formula_value / r.n);
            const double nearest = std::round(r.formula_value);
            if (std::abs(r.formula_value - nearest) <=
                cfg.rel_tol * std::max(1.0, std::abs(r.formula_value)))
                doc += ",\"as_integer\":" + std::to_string(static_cast<long long>(nearest));
            doc += "}";
        }
        doc += "]}";
        out.stream() << doc << "\n";
    } else if (cfg.format == "csv") {
        out.stream() << "n,numeric_product,formula_value,factor\n";
        for (const ChordReport& r : rows)
            out.stream() << r.n << "," << double_str(r.numeric_product) << ","
                         << double_str(r.formula_value) << "," << double_str(r.formula_value / r.n)
                         << "\n";
    } else {
        out.stream() << "n\tnumeric_product\tformula_value\tfactor\n";
        for (const ChordReport& r : rows)
            out.stream() << r.n << "\t" << double_str(r.numeric_product) << "\t"
                         << double_str(r.formula_value) << "\t" << double_str(r.formula_value / r.n)
                         << "\n";
    }
    out.finish();

    if (all_within) return kExitOk;
    std::cerr << "table: at least one row exceeds tolerance " << double_str(cfg.rel_tol) << "\n";
    return kExitToleranceFailure;
}

// ---- poly -----------------------------------------------------------------

int cmd_poly(const CliConfig& cfg, const std::string& kind_str, int n) {
    if (kind_str.size() != 1) throw std::invalid_argument("poly: kind must be one of L, F, V, U");
    const Family kind = family_from_char(kind_str[0]);
    const BivarPoly p = family_poly(kind, n);

    OutputTarget out(cfg.out_path);
    if (cfg.format == "json") {
        out.stream() << poly_json(kind, n, p) << "\n";
    } else if (cfg.format == "csv") {
        out.stream() << "i,j,coeff\n";
        for (const auto& [m, c] : p.terms())
            out.stream() << m.x_deg << "," << m.y_deg << "," << c.str() << "\n";
    } else {
        out.stream() << p.str() << "\n";
    }
    out.finish();
    return kExitOk;
}

// ---- roots ----------------------------------------------------------------

void render_solution_text(std::ostream& os, const RadicalSolution& sol) {
    os << "n: " << sol.n << "\n";
    os << "p: " << rational_str(sol.p) << "\n";
    os << "q: " << rational_str(sol.q) << "\n";
    os << "omega: " << omega_poly(sol.n, sol.p, sol.q).str() << "\n";
    os << "a_n: " << double_str(sol.a_n.real()) << " " << double_str(sol.a_n.imag()) << "\n";
    os << "b_n: " << double_str(sol.b_n.real()) << " " << double_str(sol.b_n.imag()) << "\n";
    os << "a: " << double_str(sol.a.real()) << " " << double_str(sol.a.imag()) << "\n";
    os << "b: " << double_str(sol.b.real()) << " " << double_str(sol.b.imag()) << "\n";
    os << "twist: " << sol.twist << "\n";
    if (sol.degenerate_double_root) os << "degenerate_double_root: true\n";
    os << "roots:\n";
    for (std::size_t j = 0; j < sol.roots.size(); ++j)
        os << "  [" << j << "] " << double_str(sol.roots[j].real()) << " "
           << double_str(sol.roots[j].imag()) << "\n";
    os << "max_residual: " << double_str(sol.max_residual) << "\n";
}

int cmd_roots(const CliConfig& cfg, int n, const std::string& p_text, const std::string& q_text) {
    const Rational p = parse_rational(p_text);
    const Rational q = parse_rational(q_text);
    const RadicalSolution sol = solve_omega(n, p, q);

    OutputTarget out(cfg.out_path);
    if (cfg.format == "json") {
        out.stream() << to_json(sol) << "\n";
    } else if (cfg.format == "csv") {
        out.stream() << "index,re,im\n";
        for (std::size_t j = 0; j < sol.roots.size(); ++j)
            out.stream() << j << "," << double_str(sol.roots[j].real()) << ","
                         << double_str(sol.roots[j].imag()) << "\n";
    } else {
        render_solution_text(out.stream(), sol);
    }
    out.finish();

    const double allowed = cfg.rel_tol * std::max(1.0, std::abs(to_double(q)));
    if (sol.max_residual <= allowed) return kExitOk;
    std::cerr << "roots: max residual " << double_str(sol.max_residual) << " exceeds "
              << double_str(allowed) << "\n";
    return kExitToleranceFailure;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const CliConfig& cfg, const std::string& suite_arg) {
    std::vector<SuiteResult> results;
    if (suite_arg == "all") {
        results = run_all_suites(cfg.seed);
    } else {
        const auto which = suite_from_name(suite_arg);
        if (!which)
            throw std::invalid_argument("verify: unknown suite '" + suite_arg +
                                        "' (expected all, newton, hom, binet, chords, radicals, "
                                        "derivative)");
        results.push_back(run_suite(*which, cfg.seed));
    }

    bool all_passed = true;
    for (const SuiteResult& r : results)
        if (!r.passed()) all_passed = false;

    OutputTarget out(cfg.out_path);
    if (cfg.format == "json") {
        std::string doc = "{\"seed\":" + std::to_string(cfg.seed) + ",\"suites\":[";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const SuiteResult& r = results[i];
            if (i) doc.push_back(',');
            doc += "{\"name\":\"" + r.name + "\"";
            doc += ",\"cases\":" + std::to_string(r.cases);
            doc += ",\"failures\":" + std::to_string(r.failures);
            doc += ",\"worst_residual\":" + double_str(r.worst_residual);
            doc += ",\"worst_allowed\":" + double_str(r.worst_allowed);
            doc += ",\"worst_case\":\"" + json_escape(r.worst_case) + "\"";
            doc += ",\"passed\":" + std::string(r.passed() ? "true" : "false") + "}";
        }
        doc += "],\"passed\":" + std::string(all_passed ? "true" : "false") + "}";
        out.stream() << doc << "\n";
    } else if (cfg.format == "csv") {
        out.stream() << "suite,cases,failures,worst_residual,worst_allowed,passed\n";
        for (const SuiteResult& r : results)
            out.stream() << r.name << "," << r.cases << "," << r.failures << ","
                         << double_str(r.worst_residual) << "," << double_str(r.worst_allowed) << ","
                         << (r.passed() ? "true" : "false") << "\n";
    } else {
        for (const SuiteResult& r : results) {
            out.stream() << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " cases=" << r.cases
                         << " failures=" << r.failures << " worst=" << double_str(r.worst_residual)
                         << " allowed=" << double_str(r.worst_allowed) << "\n";
            if (!r.worst_case.empty()) out.stream() << "  worst case: " << r.worst_case << "\n";
        }
        out.stream() << (all_passed ? "verify: all suites passed" : "verify: FAILURES present") << "\n";
    }
    out.finish();
    return all_passed ? kExitOk : kExitToleranceFailure;
}

// ---- figure ---------------------------------------------------------------

int cmd_figure(const CliConfig& cfg, int n, std::optional<double> a, std::optional<double> b) {
    if (cfg.out_path.empty()) throw std::invalid_argument("figure: --out PATH is required");
    const EllipseSpec spec = resolve_spec(cfg, a, b);
    std::ofstream file(cfg.out_path);
    if (!file) throw std::invalid_argument("figure: cannot write to '" + cfg.out_path + "'");
    write_figure_svg(file, n, spec);
    file.flush();
    if (!file) throw std::invalid_argument("figure: write failed");
    if (cfg.format == "json") {
        std::cout << "{\"n\":" << n << ",\"a\":" << double_str(spec.a) << ",\"b\":" << double_str(spec.b)
                  << ",\"out\":\"" << json_escape(cfg.out_path) << "\"}\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lucas/Fibonacci polynomial families, chord products on scaled roots of unity, "
                 "and the generalized Cardano solver"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--rel-tol", cfg.rel_tol, "Relative tolerance for exit-code checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for the randomized verification sweeps")
        ->capture_default_str();
    app.add_flag("--golden", cfg.golden, "Use a = (1+sqrt 5)/2, b = (1-sqrt 5)/2");
    app.add_option("--out", cfg.out_path, "Write primary output to this path");

    std::string poly_kind;
    int poly_n = 0;
    auto* poly = app.add_subcommand("poly", "Print one family polynomial");
    poly->add_option("kind", poly_kind, "Family: L, F, V or U")->required();
    poly->add_option("n", poly_n, "Index n >= 0")->required();

    int chords_n = 0;
    std::optional<double> chords_a, chords_b;
    auto* chords = app.add_subcommand("chords", "Chord product for one n");
    chords->add_option("n", chords_n, "Number of lattice points, n >= 2")->required();
    chords->add_option("a", chords_a, "Semi-axis parameter a");
    chords->add_option("b", chords_b, "Semi-axis parameter b");

    int table_n = 0;
    std::optional<double> table_a, table_b;
    auto* table = app.add_subcommand("table", "Chord products for n = 2..max_n");
    table->add_option("max_n", table_n, "Largest n")->required();
    table->add_option("a", table_a, "Semi-axis parameter a");
    table->add_option("b", table_b, "Semi-axis parameter b");

    int roots_n = 0;
    std::string roots_p, roots_q;
    auto* roots = app.add_subcommand("roots", "Solve L_n(z,p) - q = 0 by radicals");
    roots->add_option("n", roots_n, "Degree n >= 2")->required();
    roots->add_option("p", roots_p, "Exact rational p (e.g. 2, -3/2, 0.25)")->required();
    roots->add_option("q", roots_q, "Exact rational q")->required();

    std::string verify_suite = "all";
    auto* verify = app.add_subcommand("verify", "Run the seeded verification sweeps");
    verify->add_option("suite", verify_suite,
                       "all, newton, hom, binet, chords, radicals or derivative");

    int figure_n = 0;
    std::optional<double> figure_a, figure_b;
    auto* figure = app.add_subcommand("figure", "Write an SVG of the points and chords");
    figure->add_option("n", figure_n, "Number of lattice points, n >= 2")->required();
    figure->add_option("a", figure_a, "Semi-axis parameter a");
    figure->add_option("b", figure_b, "Semi-axis parameter b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*poly) return cmd_poly(cfg, poly_kind, poly_n);
        if (*chords) return cmd_chords(cfg, chords_n, chords_a, chords_b);
        if (*table) return cmd_table(cfg, table_n, table_a, table_b);
        if (*roots) return cmd_roots(cfg, roots_n, roots_p, roots_q);
        if (*verify) return cmd_verify(cfg, verify_suite);
        if (*figure) return cmd_figure(cfg, figure_n, figure_a, figure_b);
        std::cerr << "no command given\n";
        return kExitUsage;
    } catch (const PairingFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitToleranceFailure;
    } catch (const OverflowToNonFinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitToleranceFailure;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitToleranceFailure;
    }
}
