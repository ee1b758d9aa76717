#pragma once

#include "chordal/numeric.hpp"

#include <vector>

namespace chordal {

/// Semi-axis parameters of the scaled circle: a + b is the horizontal
/// semi-axis, a - b the vertical one. Requires a > |b| >= 0; b may be
/// negative (the golden spec has b < 0).
struct EllipseSpec {
    double a;
    double b;
    EllipseSpec(double a_, double b_);  // validates, throws std::invalid_argument
};

/// The golden-ratio spec (phi, phihat) built from sqrt(5) at full float
/// precision, never from decimal literals.
EllipseSpec golden_spec();

/// The n points zeta^j a + zeta^{-j} b for j = 0..n-1, computed in the
/// real parametrization ((a+b)cos, (a-b)sin) to avoid accumulating
/// argument error.
std::vector<Complex> lattice_points(int n, const EllipseSpec& spec);

/// Everything measured about one chord product.
struct ChordReport {
    int n;
    EllipseSpec spec;
    std::vector<double> chord_lengths;  // n-1 distances from the anchor a+b
    double numeric_product;
    double formula_value;
    double relative_discrepancy;  // |numeric - formula| / formula
    double log_product;           // sum of log chord lengths, always finite
};

/// Product of distances from the anchor point a + b to the other n-1
/// lattice points, cross-checked against price_formula. Accumulates in
/// log space for n > 64; throws OverflowToNonFinite when even the
/// exponentiated log leaves the double range.
ChordReport chord_product_numeric(int n, const EllipseSpec& spec);

/// n * (a^n - b^n)/(a - b), expanded as n * sum_k a^(n-1-k) b^k so that
/// b close to a costs no cancellation.
double price_formula(int n, const EllipseSpec& spec);

/// z^(n-1) + ... + z + 1 by Horner; exactly n at z = 1.
Complex circle_poly_eval(int n, Complex z);

/// prod_j |x - zeta^j| over all n roots of unity; equals 1 - x^n.
double cotes_product(int n, double x);

/// max_j |Omega_n(point_j)| with p = ab, q = a^n + b^n taken exactly from
/// the spec's doubles; near zero because the points are the roots.
double omega_root_check(int n, const EllipseSpec& spec);

}  // namespace chordal
