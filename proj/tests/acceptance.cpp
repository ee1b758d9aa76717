// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Run as:  acceptance <path-to-chordal-binary>

#include "chordal/chords.hpp"
#include "chordal/families.hpp"
#include "chordal/radicals.hpp"
#include "chordal/symmetric.hpp"

#include "oracles.hpp"
#include "subprocess.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace chordal;

namespace {

int g_failed = 0;

void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (ok) {
        std::printf("PASS  %2d. %s\n", number, title.c_str());
    } else {
        std::printf("FAIL  %2d. %s%s%s\n", number, title.c_str(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        ++g_failed;
    }
}

constexpr std::uint64_t kSeed = 0xACCE97;

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <chordal binary>\n");
        return 2;
    }
    const std::string cli = argv[1];

    criterion(1, "golden-ratio products reproduce 2, 6, 12, 25, 48, 91", [](std::string& detail) {
        const EllipseSpec golden = golden_spec();
        const long long expected[6] = {2, 6, 12, 25, 48, 91};
        for (int n = 2; n <= 7; ++n) {
            const ChordReport r = chord_product_numeric(n, golden);
            if (std::llround(r.formula_value) != expected[n - 2] || r.relative_discrepancy > 1e-9) {
                detail = "n=" + std::to_string(n) + " formula=" + std::to_string(r.formula_value);
                return false;
            }
        }
        return true;
    });

    criterion(2, "unit-circle chord product equals n for n = 2..50", [](std::string& detail) {
        const EllipseSpec circle(1.0, 0.0);
        for (int n = 2; n <= 50; ++n) {
            const ChordReport r = chord_product_numeric(n, circle);
            if (std::abs(r.numeric_product - n) > 1e-10 * n) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(3, "recurrence equals the closed-form sum for n = 1..50", [](std::string& detail) {
        for (int n = 1; n <= 50; ++n) {
            if (!(family_poly(Family::L, n) == lucas_closed_form(n))) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(4, "both evaluation identities hold over 100 seeded pairs, n <= 30",
              [](std::string& detail) {
                  std::mt19937_64 rng(kSeed ^ 0x04);
                  for (int t = 0; t < 100; ++t) {
                      const Complex a = oracle::sample_annulus(rng, 0.1, 2.0);
                      Complex b = oracle::sample_annulus(rng, 0.1, 2.0);
                      while (std::abs(a - b) < 0.01) b = oracle::sample_annulus(rng, 0.1, 2.0);
                      const double mm = std::max({std::abs(a), std::abs(b), 1.0});
                      for (int n = 0; n <= 30; ++n) {
                          const double allowed = 1e-9 * std::pow(mm, n);
                          if (std::abs(binet_lucas_residual(n, a, b)) > allowed ||
                              std::abs(binet_fib_residual(n, a, b)) > allowed) {
                              detail = "pair#" + std::to_string(t) + " n=" + std::to_string(n);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(5, "dV_n/dX - n U_n is the zero polynomial for n = 1..50", [](std::string& detail) {
        for (int n = 1; n <= 50; ++n) {
            if (!derivative_identity_residual(n).is_zero()) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(6, "power-sum and complete-homogeneous relations over 200 seeded tuples each",
              [](std::string& detail) {
                  for (const bool hom : {false, true}) {
                      std::mt19937_64 rng(kSeed ^ (hom ? 0x6b : 0x6a));
                      for (int t = 0; t < 200; ++t) {
                          const int m = oracle::uniform_int(rng, 1, 6);
                          IndeterminateSet values;
                          for (int i = 0; i < m; ++i) values.push_back(oracle::sample_disk(rng, 2.0));
                          double mm = 0.0;
                          for (const Complex& v : values) mm = std::max(mm, std::abs(v));
                          for (int n = 1; n <= 12; ++n) {
                              const double res = std::abs(hom ? complete_hom_residual(values, n)
                                                              : newton_residual(values, n));
                              if (res > 1e-9 * m * std::pow(mm, n)) {
                                  detail = std::string(hom ? "hom" : "newton") + " tuple#" +
                                           std::to_string(t) + " n=" + std::to_string(n);
                                  return false;
                              }
                          }
                      }
                  }
                  return true;
              });

    criterion(7, "radical solver: residuals on 100 seeded inputs, lattice recovery on geometric ones",
              [](std::string& detail) {
                  std::mt19937_64 rng(kSeed ^ 0x07);
                  for (int t = 0; t < 100; ++t) {
                      const int n = oracle::uniform_int(rng, 2, 12);
                      const double pd = oracle::uniform(rng, -2.0, 2.0);
                      const double qd = oracle::uniform(rng, -5.0, 5.0);
                      const RadicalSolution sol =
                          solve_omega(n, exact_rational(pd), exact_rational(qd));
                      if (sol.max_residual > 1e-7 * std::max(1.0, std::abs(qd))) {
                          detail = "draw#" + std::to_string(t) + " n=" + std::to_string(n);
                          return false;
                      }
                  }
                  std::mt19937_64 rng2(kSeed ^ 0x72);
                  for (int t = 0; t < 40; ++t) {
                      const double a = oracle::uniform(rng2, 0.6, 2.5);
                      const double b = oracle::uniform(rng2, -0.9 * a, 0.9 * a);
                      const int n = oracle::uniform_int(rng2, 2, 12);
                      const Rational ra = exact_rational(a), rb = exact_rational(b);
                      const RadicalSolution sol = solve_omega(
                          n, Rational(ra * rb), Rational(rational_pow(ra, n) + rational_pow(rb, n)));
                      const auto points = lattice_points(n, EllipseSpec(a, b));
                      if (oracle::match_distance(sol.roots, points) > 1e-7 * a) {
                          detail = "geometric draw#" + std::to_string(t);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "cosine roots annihilate V_n for n <= 20, y in {1,-1,2,-2}", [](std::string& detail) {
        for (int n = 1; n <= 20; ++n) {
            const BivarPoly vn = family_poly(Family::V, n);
            for (const double y : {1.0, -1.0, 2.0, -2.0}) {
                const double allowed = 1e-8 * std::pow(2.0 * std::sqrt(std::abs(y)) + 1.0, n);
                for (const Complex& x : lucas_roots(n, y)) {
                    if (std::abs(vn.eval(x, Complex{y, 0.0})) > allowed) {
                        detail = "n=" + std::to_string(n) + " y=" + std::to_string(y);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    criterion(9, "interior-point product equals 1 - x^n for n <= 20", [](std::string& detail) {
        for (int n = 1; n <= 20; ++n) {
            for (const double x : {0.0, 0.25, 0.5, 0.9, 0.99}) {
                if (std::abs(cotes_product(n, x) - (1.0 - std::pow(x, n))) > 1e-10) {
                    detail = "n=" + std::to_string(n) + " x=" + std::to_string(x);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(10, "U_{2n} = U_n V_n exactly for n = 1..25", [](std::string& detail) {
        for (int n = 1; n <= 25; ++n) {
            if (!(family_poly(Family::U, 2 * n) ==
                  family_poly(Family::U, n) * family_poly(Family::V, n))) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(11, "rotated evaluation identity over seeded triples, n <= 20", [](std::string& detail) {
        std::mt19937_64 rng(kSeed ^ 0x0b);
        for (int t = 0; t < 100; ++t) {
            const Complex a = oracle::sample_annulus(rng, 0.1, 2.0);
            const Complex b = oracle::sample_annulus(rng, 0.1, 2.0);
            const double theta = oracle::uniform(rng, 0.0, 2.0 * pi);
            const double mm = std::max({std::abs(a), std::abs(b), 1.0});
            for (int n = 0; n <= 20; ++n) {
                if (std::abs(rotated_eval_residual(n, a, b, theta)) > 1e-9 * std::pow(mm, n)) {
                    detail = "triple#" + std::to_string(t) + " n=" + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(12, "CLI contract: verify exits 0, chords JSON is valid, poly prints exact bytes",
              [&cli](std::string& detail) {
                  const auto verify = subprocess::run("'" + cli + "' verify all --seed 1");
                  if (verify.exit_code != 0) {
                      detail = "verify all --seed 1 exited " + std::to_string(verify.exit_code);
                      return false;
                  }
                  const auto chords = subprocess::run("'" + cli + "' chords 5 --golden --format json");
                  try {
                      const nlohmann::json doc = nlohmann::json::parse(chords.output);
                      if (std::abs(doc.at("formula_value").get<double>() - 25.0) > 1e-9 * 25.0 ||
                          !doc.contains("chord_lengths") || !doc.contains("numeric_product") ||
                          !doc.contains("relative_discrepancy") || !doc.contains("log_product")) {
                          detail = "chords JSON schema or value mismatch";
                          return false;
                      }
                  } catch (const std::exception& e) {
                      detail = std::string("chords JSON did not parse: ") + e.what();
                      return false;
                  }
                  const auto poly = subprocess::run("'" + cli + "' poly L 3");
                  if (poly.exit_code != 0 || poly.output != "X^3 - 3*X*Y\n") {
                      detail = "poly L 3 printed: " + poly.output;
                      return false;
                  }
                  return true;
              });

    if (g_failed) {
        std::printf("%d criterion(s) failed\n", g_failed);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
