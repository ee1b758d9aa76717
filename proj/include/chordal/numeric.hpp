#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chordal {

// Exact coefficient arithmetic is backed by Boost.Multiprecision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Carrier for numeric evaluation. Polynomial evaluation runs its inner
// loops in quad precision (see Quad below) and rounds once at the end, so
// Complex results carry full double accuracy even when the expanded
// polynomial has heavy cancellation.
using Complex = std::complex<double>;

// 113-bit float used internally by the evaluators.
using Quad = boost::multiprecision::cpp_bin_float_quad;

inline constexpr double pi = std::numbers::pi;

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

/// Exact rational value of a finite double.
Rational exact_rational(double v);

/// p^e for exact rationals, e >= 0.
Rational rational_pow(const Rational& base, int exponent);

/// Integer power by repeated squaring; |z|^e stays exact for exact inputs.
Complex complex_pow(Complex base, int exponent);

/// e^{2*pi*i*j/n}, reduced mod n before the trig calls.
Complex unit_root(int n, long long j);

/// Parses "7", "-3/2", "1.25" or "2.5e-3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Decimal rendering: integers plain, otherwise "num/den".
std::string rational_str(const Rational& v);

}  // namespace chordal
