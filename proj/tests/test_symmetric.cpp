#include "chordal/errors.hpp"
#include "chordal/symmetric.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace chordal;

TEST_CASE("power sums") {
    const IndeterminateSet ones{{1, 0}, {1, 0}, {1, 0}};
    CHECK(power_sum(ones, 5) == Complex{3.0, 0.0});
    const IndeterminateSet two_one{{2, 0}, {1, 0}};
    CHECK(power_sum(two_one, 3) == Complex{9.0, 0.0});
    const IndeterminateSet single{{0.3, 0.7}};
    CHECK(std::abs(power_sum(single, 4) - complex_pow({0.3, 0.7}, 4)) <= 1e-15);
    CHECK_THROWS_AS(power_sum(two_one, 0), std::invalid_argument);
    CHECK_THROWS_AS(power_sum(IndeterminateSet{}, 1), std::invalid_argument);
}

TEST_CASE("elementary symmetric polynomials") {
    const IndeterminateSet two_one{{2, 0}, {1, 0}};
    CHECK(elem_sym(two_one, 2) == Complex{2.0, 0.0});
    CHECK(elem_sym(two_one, 0) == Complex{1.0, 0.0});
    CHECK(elem_sym(two_one, 3) == Complex{0.0, 0.0});  // vanishes past m
    CHECK_THROWS_AS(elem_sym(two_one, -1), std::invalid_argument);
}

TEST_CASE("complete homogeneous polynomials") {
    const IndeterminateSet two_one{{2, 0}, {1, 0}};
    CHECK(complete_hom(two_one, 2) == Complex{7.0, 0.0});  // a^2 + ab + b^2
    CHECK(complete_hom(two_one, 0) == Complex{1.0, 0.0});
    const Complex x{1.1, -0.4};
    const IndeterminateSet single{x};
    CHECK(std::abs(complete_hom(single, 5) - complex_pow(x, 5)) <= 1e-14);
}

TEST_CASE("symmetric functions match enumeration oracles") {
    std::mt19937_64 rng(0x5e11);
    for (int t = 0; t < 60; ++t) {
        const int m = oracle::uniform_int(rng, 1, 6);
        IndeterminateSet values;
        for (int i = 0; i < m; ++i) values.push_back(oracle::sample_disk(rng, 1.5));
        for (int k = 0; k <= 8; ++k) {
            const Complex es = elem_sym(values, k);
            const Complex eo = oracle::elem_sym_enum(values, k);
            CHECK(std::abs(es - eo) <= 1e-12 * std::max(1.0, std::abs(eo)));
            const Complex hs = complete_hom(values, k);
            const Complex ho = oracle::complete_hom_enum(values, k);
            CHECK(std::abs(hs - ho) <= 1e-12 * std::max(1.0, std::abs(ho)));
        }
    }
}

TEST_CASE("power-sum alternating relation vanishes") {
    const IndeterminateSet two_one{{2, 0}, {1, 0}};
    // s2 - s1*sigma1 + 2*sigma2 = 5 - 9 + 4
    CHECK(std::abs(newton_residual(two_one, 2)) <= 1e-9);

    const IndeterminateSet ones(4, Complex{1, 0});
    CHECK(std::abs(newton_residual(ones, 1)) == 0.0);  // s1 = sigma1 exactly

    std::mt19937_64 rng(0x5e12);
    IndeterminateSet five;
    for (int i = 0; i < 5; ++i) five.push_back(oracle::sample_disk(rng, 1.0));
    CHECK(std::abs(newton_residual(five, 8)) <= 1e-9);

    // n > m regime: only the first m+1 terms contribute
    CHECK(std::abs(newton_residual(two_one, 9)) <= 1e-9);
}

TEST_CASE("complete-homogeneous alternating relation vanishes") {
    const IndeterminateSet two_one{{2, 0}, {1, 0}};
    // h2 - h1*sigma1 + sigma2 = 7 - 9 + 2
    CHECK(std::abs(complete_hom_residual(two_one, 2)) <= 1e-9);

    const IndeterminateSet single{{0.6, 0.2}};
    CHECK(std::abs(complete_hom_residual(single, 1)) == 0.0);  // h1 = sigma1 exactly

    std::mt19937_64 rng(0x5e13);
    IndeterminateSet four;
    for (int i = 0; i < 4; ++i) four.push_back(oracle::sample_disk(rng, 1.0));
    CHECK(std::abs(complete_hom_residual(four, 7)) <= 1e-9);
}

TEST_CASE("generating function truncation residuals") {
    const IndeterminateSet half{{0.5, 0.0}};
    CHECK(std::abs(generating_fn_check(half, {0.5, 0.0}, 30)) <= std::ldexp(1.0, -29));
    CHECK(std::abs(generating_fn_check(half, {0.0, 0.0}, 10)) == 0.0);  // both sides are 1
    const IndeterminateSet pair{{0.3, 0.0}, {0.2, 0.0}};
    CHECK(std::abs(generating_fn_check(pair, {0.5, 0.0}, 40)) <= 1e-9);
}

TEST_CASE("generating function domain guard") {
    const IndeterminateSet pair{{2.0, 0.0}, {0.1, 0.0}};
    CHECK_THROWS_AS(generating_fn_check(pair, {0.5, 0.0}, 10), ConvergenceDomainError);
    CHECK_THROWS_AS(generating_fn_check(pair, {0.0, 0.0}, 0), std::invalid_argument);
    // all-zero values put no constraint on t
    const IndeterminateSet zeros{{0.0, 0.0}, {0.0, 0.0}};
    CHECK(std::abs(generating_fn_check(zeros, {123.0, 0.0}, 3)) == 0.0);
}

TEST_CASE("residual sweeps stay inside the scaled tolerance") {
    std::mt19937_64 rng(0x5e14);
    for (int t = 0; t < 200; ++t) {
        const int m = oracle::uniform_int(rng, 1, 6);
        IndeterminateSet values;
        for (int i = 0; i < m; ++i) values.push_back(oracle::sample_disk(rng, 2.0));
        double mm = 0.0;
        for (const Complex& v : values) mm = std::max(mm, std::abs(v));
        for (int n = 1; n <= 12; ++n) {
            const double allowed = 1e-9 * m * std::pow(mm, n);
            CHECK(std::abs(newton_residual(values, n)) <= allowed);
            CHECK(std::abs(complete_hom_residual(values, n)) <= allowed);
        }
    }
}

TEST_CASE("two indeterminates reduce to the three-term relation") {
    std::mt19937_64 rng(0x5e15);
    for (int t = 0; t < 50; ++t) {
        const Complex a = oracle::sample_disk(rng, 2.0);
        const Complex b = oracle::sample_disk(rng, 2.0);
        const IndeterminateSet values{a, b};
        const double mm = std::max({1.0, std::abs(a), std::abs(b)});
        for (int n = 2; n <= 30; ++n) {
            const Complex direct = (complex_pow(a, n) + complex_pow(b, n)) -
                                   (complex_pow(a, n - 1) + complex_pow(b, n - 1)) * (a + b) +
                                   (complex_pow(a, n - 2) + complex_pow(b, n - 2)) * (a * b);
            const double allowed = 2e-9 * std::pow(mm, n);
            CHECK(std::abs(direct) <= allowed);
            CHECK(std::abs(newton_residual(values, n) - direct) <= allowed);
        }
    }
}

TEST_CASE("power-difference quotients are complete homogeneous values") {
    std::mt19937_64 rng(0x5e16);
    for (int t = 0; t < 50; ++t) {
        const Complex a = oracle::sample_disk(rng, 2.0);
        Complex b = oracle::sample_disk(rng, 2.0);
        while (std::abs(a - b) < 0.05) b = oracle::sample_disk(rng, 2.0);
        const IndeterminateSet values{a, b};
        const double mm = std::max({1.0, std::abs(a), std::abs(b)});
        for (int k = 1; k <= 20; ++k) {
            const Complex lhs = (complex_pow(a, k) - complex_pow(b, k)) / (a - b);
            const Complex rhs = complete_hom(values, k - 1);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(std::abs(lhs), k * std::pow(mm, k - 1)));
        }
    }
}
