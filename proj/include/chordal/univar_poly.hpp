#pragma once

#include "chordal/numeric.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace chordal {

/// Exact univariate polynomial in z with rational coefficients, stored
/// densely in ascending degree. The trailing coefficient of a nonzero
/// polynomial is never zero.
class UnivarPoly {
public:
    UnivarPoly() = default;  // zero polynomial: empty coefficient vector
    explicit UnivarPoly(std::vector<Rational> ascending_coeffs);

    static UnivarPoly constant(Rational c);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading_coeff() const;

    UnivarPoly operator-() const;
    UnivarPoly& operator+=(const UnivarPoly& rhs);
    UnivarPoly& operator-=(const UnivarPoly& rhs);
    friend UnivarPoly operator+(UnivarPoly lhs, const UnivarPoly& rhs) { return lhs += rhs; }
    friend UnivarPoly operator-(UnivarPoly lhs, const UnivarPoly& rhs) { return lhs -= rhs; }
    friend UnivarPoly operator*(const UnivarPoly& lhs, const UnivarPoly& rhs);

    friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

    /// Horner evaluation; quad-precision inner arithmetic, one final
    /// rounding. Throws OverflowToNonFinite when the result leaves the
    /// double range.
    Complex eval(Complex z) const;

    /// Renders in descending degree, e.g. "z^3 - 6*z - 9".
    std::string str() const;

    /// Inverse of str(); accepts rational coefficients ("3/2*z + 1/2").
    static UnivarPoly parse(std::string_view text);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UnivarPoly& p);

}  // namespace chordal
