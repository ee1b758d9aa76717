#pragma once

#include "chordal/numeric.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace chordal {

class UnivarPoly;

/// Exponent pair of one term; X carries weight 1, Y weight 2.
struct Monomial {
    int x_deg = 0;
    int y_deg = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: descending X-degree, then ascending Y-degree.
/// This is the order of the textual rendering and of evaluation.
struct TermOrder {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const noexcept {
        if (lhs.x_deg != rhs.x_deg) return lhs.x_deg > rhs.x_deg;
        return lhs.y_deg < rhs.y_deg;
    }
};

/// Exact bivariate polynomial in X and Y over unbounded integers, stored
/// as a sparse term map. Zero coefficients are never stored, so equal
/// polynomials have identical maps. Immutable in practice: all operations
/// return new values.
class BivarPoly {
public:
    using TermMap = std::map<Monomial, Int, TermOrder>;

    BivarPoly() = default;  // zero polynomial: empty map
    explicit BivarPoly(Int constant);
    explicit BivarPoly(long long constant) : BivarPoly(Int(constant)) {}

    static BivarPoly term(Int coeff, int x_deg, int y_deg);
    static BivarPoly var_x() { return term(1, 1, 0); }
    static BivarPoly var_y() { return term(1, 0, 1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const TermMap& terms() const noexcept { return terms_; }
    Int coeff(int x_deg, int y_deg) const;

    /// Degree in X alone; -1 for the zero polynomial.
    int degree_x() const noexcept;

    /// max(i + 2j) over stored terms; the zero polynomial has no degree.
    std::optional<int> weighted_degree() const noexcept;

    /// True when every term has the same i + 2j (vacuously for zero).
    bool is_weighted_homogeneous() const noexcept;

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& rhs);
    BivarPoly& operator-=(const BivarPoly& rhs);
    BivarPoly& operator*=(const BivarPoly& rhs);
    BivarPoly& operator*=(const Int& scalar);

    friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
    friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
    friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs);
    friend BivarPoly operator*(BivarPoly lhs, const Int& scalar) { return lhs *= scalar; }
    friend BivarPoly operator*(const Int& scalar, BivarPoly rhs) { return rhs *= scalar; }

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    /// Formal partial derivative with respect to X.
    BivarPoly derivative_x() const;

    /// Value at (x, y). Horner in X with Y-polynomial coefficients; the
    /// inner arithmetic runs in quad precision and rounds once at the
    /// end. Throws OverflowToNonFinite when the result leaves the double
    /// range, std::invalid_argument on non-finite inputs.
    Complex eval(Complex x, Complex y) const;

    /// Substitutes the exact value y for Y; X becomes the variable z.
    UnivarPoly specialize_y(const Rational& y) const;

    /// Renders terms in descending X-degree, e.g. "X^3 - 3*X*Y".
    std::string str() const;

    /// Inverse of str(); accepts any sum of integer-coefficient X/Y
    /// monomials. Throws ParseError.
    static BivarPoly parse(std::string_view text);

private:
    void add_term(const Monomial& m, const Int& c);
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BivarPoly& p);

}  // namespace chordal
