#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A floating-point evaluation left the finite range; the caller must
/// shrink the degree or the inputs.
class OverflowToNonFinite : public Error {
public:
    using Error::Error;
};

/// Generating-function check asked for a point outside the series'
/// convergence disk.
class ConvergenceDomainError : public Error {
public:
    using Error::Error;
};

/// a and b coincide to working precision; the (a^n - b^n)/(a - b) form is
/// meaningless there and the complete-homogeneous form must be used.
class DegenerateEqualRoots : public Error {
public:
    using Error::Error;
};

/// Guards the integer-only closed-form coefficients. Firing indicates an
/// arithmetic bug, never a bad input.
class NonIntegerCoefficient : public Error {
public:
    using Error::Error;
};

/// No twist of the principal n-th root reproduced a*b = p within
/// tolerance; a numerical-conditioning problem, not a mathematical one.
class PairingFailure : public Error {
public:
    using Error::Error;
};

/// Malformed polynomial or number text.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace chordal
