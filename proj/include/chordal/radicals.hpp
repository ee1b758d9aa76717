#pragma once

#include "chordal/numeric.hpp"

#include <vector>

namespace chordal {

/// Output of the radical solver for L_n(z, p) - q = 0.
struct RadicalSolution {
    int n;
    Rational p, q;
    Complex a_n, b_n;  // roots of the resolvent quadratic X^2 - qX + p^n
    Complex a, b;      // the chosen n-th roots with a*b = p
    int twist = 0;     // j with a = zeta^j * principal root of a_n
    bool degenerate_double_root = false;  // q^2 == 4 p^n exactly
    std::vector<Complex> roots;           // zeta^j a + zeta^{-j} b
    double max_residual = 0.0;            // max |Omega_n(root)|
};

/// Solves L_n(z, p) - q = 0 by radicals: a^n, b^n come from the resolvent
/// quadratic (+ branch for a, - for b; swapping them only relabels the
/// roots), then a keeps the first twist zeta^j that restores a*b = p.
/// When p = 0 the pairing constraint is vacuous and the twist stays 0.
/// Square and n-th roots use principal branches (argument in (-pi, pi]),
/// so output is reproducible up to libm differences.
/// Throws PairingFailure when no twist meets tolerance 1e-6*max(1,|p|).
RadicalSolution solve_omega(int n, const Rational& p, const Rational& q);

/// Recomputes max_j |Omega_n(roots[j])|, stores it in sol.max_residual
/// and returns it.
double verify_solution(RadicalSolution& sol);

/// The n roots of V_n(X, y): 2*sqrt(-y)*cos((1+2j)pi/(2n)), j = 0..n-1,
/// with the principal square root (purely imaginary for y > 0).
///
/// Where the cosines come from: V_n(X, Y) is the p = -Y, q = 0 case of
/// the radical solution, whose resolvent roots are +-sqrt(-(-Y)^n), i.e.
/// a = xi*sqrt(-Y) and b = xi^{-1}*sqrt(-Y) for an n-th root xi of i.
/// Substituting into zeta^j a + zeta^{-j} b gives
/// sqrt(-Y)*(zeta^j xi + zeta^{-j} xi^{-1}) = 2*sqrt(-Y)*cos((1+4j)pi/2n),
/// and folding the angles in [pi, 2pi) onto their mirror images leaves
/// the odd multiples (1+2j)pi/2n. The xi bookkeeping cancels, so only the
/// simplified cosine form appears below.
std::vector<Complex> lucas_roots(int n, double y);

}  // namespace chordal
