#pragma once

#include "chordal/bivar_poly.hpp"
#include "chordal/univar_poly.hpp"

#include <shared_mutex>
#include <vector>

namespace chordal {

/// The four two-term recurrence families. L and F run X*prev - Y*prev2,
/// V and U run X*prev + Y*prev2; seeds are 2, X for L/V and 0, 1 for F/U.
/// L_n(X,Y) = V_n(X,-Y) and F_n(X,Y) = U_n(X,-Y) hold as theorems, not by
/// construction: each family is materialized from its own recurrence so
/// the sign relation stays independently checkable.
enum class Family { L, F, V, U };

char family_char(Family kind);
Family family_from_char(char c);  // throws std::invalid_argument

/// Growable memo of one family's polynomials. Reads are concurrent;
/// extension takes the writer lock. Returned polynomials are value copies
/// and safe to keep.
class FamilyCache {
public:
    explicit FamilyCache(Family kind);

    Family kind() const noexcept { return kind_; }

    /// The n-th polynomial, n >= 0.
    BivarPoly at(int n) const;

private:
    Family kind_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<BivarPoly> entries_;
};

/// Cached lookup through process-wide per-family caches.
BivarPoly family_poly(Family kind, int n);

/// The explicit sum  sum_r (-1)^r * n/(n-r) * C(n-r,r) * X^(n-2r) Y^r for
/// the L family, built with integer-only arithmetic via
/// n/(n-r)*C(n-r,r) = C(n-r,r) + C(n-r-1,r-1). Returns 2 for n = 0.
/// Throws NonIntegerCoefficient if the defensive integrality check fails
/// (indicates a bug, never bad input).
BivarPoly lucas_closed_form(int n);

/// Parameters of the monic degree-n polynomial L_n(z, p) - q.
struct OmegaSpec {
    int n;       // >= 2
    Rational p;  // = a*b
    Rational q;  // = a^n + b^n
};

/// L_n specialized at Y = p, minus the constant q; monic of degree n.
UnivarPoly omega_poly(const OmegaSpec& spec);
UnivarPoly omega_poly(int n, const Rational& p, const Rational& q);

/// L_n(a+b, ab) - (a^n + b^n); mathematically zero.
Complex binet_lucas_residual(int n, Complex a, Complex b);

/// F_n(a+b, ab) - (a^n - b^n)/(a - b); mathematically zero. Throws
/// DegenerateEqualRoots when |a - b| is below working precision.
Complex binet_fib_residual(int n, Complex a, Complex b);

/// d/dX V_n - n*U_n as an exact polynomial; identically zero.
BivarPoly derivative_identity_residual(int n);

/// L_n(a e^{i theta} + b e^{-i theta}, ab) - (a^n e^{in theta} +
/// b^n e^{-in theta}); mathematically zero for every rotation angle.
Complex rotated_eval_residual(int n, Complex a, Complex b, double theta);

}  // namespace chordal
