// End-to-end checks of the command-line surface. Run as:
//   cli_tests <path-to-chordal-binary>

#include "subprocess.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

std::string g_cli;
int g_failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::printf("ok    %s\n", what.c_str());
    } else {
        std::printf("FAIL  %s\n", what.c_str());
        ++g_failures;
    }
}

subprocess::Result run(const std::string& args) { return subprocess::run("'" + g_cli + "' " + args); }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <chordal binary>\n");
        return 2;
    }
    g_cli = argv[1];

    {
        const auto r = run("poly L 3");
        check(r.exit_code == 0 && r.output == "X^3 - 3*X*Y\n", "poly L 3 prints the exact bytes");
    }
    {
        check(run("poly U 1").output == "1\n", "poly U 1");
        check(run("poly V 2").output == "X^2 + 2*Y\n", "poly V 2");
        check(run("poly L 0").output == "2\n", "poly L 0");
    }
    {
        const auto r = run("poly L 3 --format json");
        bool ok = r.exit_code == 0;
        if (ok) {
            const json doc = json::parse(r.output);
            ok = doc.at("kind") == "L" && doc.at("n") == 3 && doc.at("terms").size() == 2 &&
                 doc.at("terms")[0].at("i") == 3 && doc.at("terms")[0].at("coeff") == "1" &&
                 doc.at("terms")[1].at("j") == 1 && doc.at("terms")[1].at("coeff") == "-3";
        }
        check(ok, "poly L 3 --format json");
    }
    {
        const auto r = run("poly L 4 --format csv");
        check(r.exit_code == 0 && r.output == "i,j,coeff\n4,0,1\n2,1,-4\n0,2,2\n",
              "poly L 4 --format csv");
    }
    check(run("poly Z 3").exit_code == 2, "poly with a bad kind exits 2");
    check(run("poly L -1").exit_code == 2, "poly with negative n exits 2");

    {
        const auto r = run("chords 5 --golden --format json");
        bool ok = r.exit_code == 0;
        if (ok) {
            const json doc = json::parse(r.output);
            ok = std::abs(doc.at("formula_value").get<double>() - 25.0) <= 1e-9 * 25.0 &&
                 doc.at("as_integer") == 25 && doc.at("chord_lengths").size() == 4 &&
                 doc.contains("numeric_product") && doc.contains("relative_discrepancy") &&
                 doc.contains("log_product");
        }
        check(ok, "chords 5 --golden --format json is schema-valid with value 25");
    }
    check(run("chords 7 1 0").exit_code == 0, "chords 7 1 0 passes the tolerance gate");
    {
        const auto r = run("chords 2 1.5 0.5 --format json");
        const json doc = json::parse(r.output);
        check(std::abs(doc.at("formula_value").get<double>() - 4.0) <= 1e-12,
              "chords 2 1.5 0.5 formula is 2(a+b) = 4");
    }
    check(run("chords 3 1 5").exit_code == 2, "invalid spec exits 2");
    check(run("chords 3 --golden 1 0").exit_code == 2, "--golden together with a b exits 2");
    check(run("chords 1 1 0").exit_code == 2, "n < 2 exits 2");
    {
        // failing the gate still emits the JSON document on stdout
        const auto r = run("chords 9 --golden --rel-tol 1e-18 --format json");
        bool parsed = false;
        try {
            const json doc = json::parse(r.output);
            parsed = doc.is_object();
        } catch (...) {
        }
        check(r.exit_code == 1 && parsed, "tolerance failure exits 1 with JSON still on stdout");
    }

    {
        const auto r = run("table 7 --golden --format csv");
        std::istringstream lines(r.output);
        std::string line;
        std::getline(lines, line);
        bool ok = r.exit_code == 0 && line == "n,numeric_product,formula_value,factor";
        const double factors[6] = {1, 2, 3, 5, 8, 13};
        for (int i = 0; i < 6 && ok; ++i) {
            std::getline(lines, line);
            const auto last_comma = line.rfind(',');
            ok = std::abs(std::strtod(line.c_str() + last_comma + 1, nullptr) - factors[i]) <= 1e-9 * factors[i];
        }
        check(ok, "table 7 --golden factor column is 1,2,3,5,8,13");
    }
    {
        const auto r = run("table 2 1 0 --format csv");
        check(r.exit_code == 0 && r.output == "n,numeric_product,formula_value,factor\n2,2,2,1\n",
              "table 2 1 0 --format csv single row");
    }
    {
        const auto r = run("table 4 2 1 --format json");
        const json doc = json::parse(r.output);
        const double expect[3] = {6, 21, 60};  // n(2^n - 1)
        bool ok = doc.at("rows").size() == 3;
        for (int i = 0; i < 3 && ok; ++i)
            ok = std::abs(doc.at("rows")[i].at("formula_value").get<double>() - expect[i]) <=
                 1e-9 * expect[i];
        check(ok, "table 4 2 1 formula column n(2^n - 1)");
    }

    {
        const auto r = run("roots 3 1 2 --format json");
        const json doc = json::parse(r.output);
        int near_two = 0, near_minus_one = 0;
        for (const auto& root : doc.at("roots")) {
            const double re = root[0].get<double>(), im = root[1].get<double>();
            if (std::abs(re - 2) < 1e-9 && std::abs(im) < 1e-9) ++near_two;
            if (std::abs(re + 1) < 1e-9 && std::abs(im) < 1e-9) ++near_minus_one;
        }
        check(r.exit_code == 0 && near_two == 1 && near_minus_one == 2, "roots 3 1 2 gives 2, -1, -1");
    }
    {
        const auto r = run("roots 2 0 1 --format csv");
        check(r.exit_code == 0 && r.output.find("index,re,im\n") == 0, "roots csv header");
    }
    {
        const auto r = run("roots 3 2 9 --format json");
        const json doc = json::parse(r.output);
        check(r.exit_code == 0 && doc.at("p") == "2" && doc.at("q") == "9" &&
                  doc.at("max_residual").get<double>() <= 1e-9 * 9,
              "roots 3 2 9 passes its residual gate");
    }
    check(run("roots 3 x 2").exit_code == 2, "unparsable rational exits 2");
    check(run("roots 3 3/2 -5/4").exit_code == 0, "fractional p, q accepted");

    {
        const auto r1 = run("verify all --seed 1");
        const auto r2 = run("verify all --seed 1");
        check(r1.exit_code == 0, "verify all --seed 1 exits 0");
        check(r1.output == r2.output, "verify output is byte-identical for one seed");
    }
    {
        const auto r = run("verify newton --seed 5 --format json");
        const json doc = json::parse(r.output);
        check(r.exit_code == 0 && doc.at("passed") == true && doc.at("suites").size() == 1 &&
                  doc.at("suites")[0].at("name") == "newton",
              "verify newton --format json");
    }
    {
        const auto r = run("verify all --seed 2 --format csv");
        check(r.exit_code == 0 &&
                  r.output.find("suite,cases,failures,worst_residual,worst_allowed,passed") == 0,
              "verify csv header");
    }
    check(run("verify bogus").exit_code == 2, "unknown suite exits 2");

    {
        const auto dir = std::filesystem::temp_directory_path();
        const auto path = (dir / "chordal_cli_test_fig.svg").string();
        const auto r = run("figure 16 --golden --out '" + path + "'");
        std::ifstream in(path);
        std::string first;
        std::getline(in, first);
        check(r.exit_code == 0 && first.rfind("<svg ", 0) == 0, "figure writes an SVG file");
        std::filesystem::remove(path);
    }
    check(run("figure 2 1 0 --out /nonexistent-dir/x.svg").exit_code == 2,
          "unwritable figure path exits 2");
    check(run("figure 16 --golden").exit_code == 2, "figure without --out exits 2");
    check(run("nonsense 1 2").exit_code == 2, "unknown command exits 2");
    check(run("chords 5 --golden --rel-tol 0").exit_code == 2, "rel-tol must be positive");
    check(run("chords 5 --golden --rel-tol -1").exit_code == 2, "negative rel-tol exits 2");
    check(run("--help").exit_code == 0, "--help exits 0");

    if (g_failures) {
        std::printf("%d CLI check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
