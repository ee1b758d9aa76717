#include "chordal/chords.hpp"

#include "chordal/errors.hpp"
#include "chordal/families.hpp"

#include <algorithm>
#include <string>

namespace chordal {

EllipseSpec::EllipseSpec(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("EllipseSpec: non-finite semi-axis parameter");
    if (!(a > std::abs(b)))
        throw std::invalid_argument("EllipseSpec: requires a > |b| >= 0, got a=" + std::to_string(a) +
                                    " b=" + std::to_string(b));
}

EllipseSpec golden_spec() {
    const double s5 = std::sqrt(5.0);
    return EllipseSpec((1.0 + s5) / 2.0, (1.0 - s5) / 2.0);
}

std::vector<Complex> lattice_points(int n, const EllipseSpec& spec) {
    if (n < 2) throw std::invalid_argument("lattice_points: n must be >= 2");
    std::vector<Complex> points;
    points.reserve(static_cast<std::size_t>(n));
    const double rx = spec.a + spec.b;
    const double ry = spec.a - spec.b;
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
        points.emplace_back(rx * std::cos(theta), ry * std::sin(theta));
    }
    return points;
}

double price_formula(int n, const EllipseSpec& spec) {
    if (n < 2) throw std::invalid_argument("price_formula: n must be >= 2");
    // complete-homogeneous expansion of (a^n - b^n)/(a - b)
    std::vector<double> a_pow(static_cast<std::size_t>(n), 1.0);
    std::vector<double> b_pow(static_cast<std::size_t>(n), 1.0);
    for (int k = 1; k < n; ++k) {
        a_pow[static_cast<std::size_t>(k)] = a_pow[static_cast<std::size_t>(k - 1)] * spec.a;
        b_pow[static_cast<std::size_t>(k)] = b_pow[static_cast<std::size_t>(k - 1)] * spec.b;
    }
    double sum = 0.0;
    for (int k = 0; k < n; ++k)
        sum += a_pow[static_cast<std::size_t>(n - 1 - k)] * b_pow[static_cast<std::size_t>(k)];
    return static_cast<double>(n) * sum;
}

ChordReport chord_product_numeric(int n, const EllipseSpec& spec) {
    const auto points = lattice_points(n, spec);
    const Complex anchor = points.front();  // the image of 1, i.e. a + b

    std::vector<double> lengths;
    lengths.reserve(static_cast<std::size_t>(n) - 1);
    double log_sum = 0.0;
    for (int j = 1; j < n; ++j) {
        const double len = std::abs(anchor - points[static_cast<std::size_t>(j)]);
        lengths.push_back(len);
        log_sum += std::log(len);
    }

    // direct product for small n; log space past 64 chords to delay overflow
    double product;
    if (n <= 64) {
        product = 1.0;
        for (double len : lengths) product *= len;
    } else {
        product = std::exp(log_sum);
    }
    if (!std::isfinite(product))
        throw OverflowToNonFinite("chord_product_numeric: product exceeds floating range");

    const double formula = price_formula(n, spec);
    if (!std::isfinite(formula))
        throw OverflowToNonFinite("chord_product_numeric: formula value exceeds floating range");

    return ChordReport{n,       spec,    std::move(lengths), product,
                       formula, std::abs(product - formula) / formula, log_sum};
}

Complex circle_poly_eval(int n, Complex z) {
    if (n < 2) throw std::invalid_argument("circle_poly_eval: n must be >= 2");
    Complex acc{1.0, 0.0};
    for (int k = 1; k < n; ++k) acc = acc * z + 1.0;
    return acc;
}

double cotes_product(int n, double x) {
    if (n < 1) throw std::invalid_argument("cotes_product: n must be >= 1");
    if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("cotes_product: x must lie in [0, 1)");
    double product = 1.0;
    for (int j = 0; j < n; ++j) product *= std::abs(x - unit_root(n, j));
    return product;
}

double omega_root_check(int n, const EllipseSpec& spec) {
    const auto points = lattice_points(n, spec);
    const Rational ra = exact_rational(spec.a);
    const Rational rb = exact_rational(spec.b);
    const UnivarPoly omega = omega_poly(n, Rational(ra * rb), Rational(rational_pow(ra, n) + rational_pow(rb, n)));
    double worst = 0.0;
    for (const Complex& z : points) worst = std::max(worst, std::abs(omega.eval(z)));
    return worst;
}

}  // namespace chordal
