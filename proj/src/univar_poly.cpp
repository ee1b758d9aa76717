#include "chordal/univar_poly.hpp"

#include "chordal/errors.hpp"

#include <ostream>
#include <utility>

namespace chordal {

UnivarPoly::UnivarPoly(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

UnivarPoly UnivarPoly::constant(Rational c) {
    UnivarPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

void UnivarPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivarPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational UnivarPoly::leading_coeff() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

UnivarPoly UnivarPoly::operator-() const {
    UnivarPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UnivarPoly operator*(const UnivarPoly& lhs, const UnivarPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return UnivarPoly(std::move(out));
}

Complex UnivarPoly::eval(Complex z) const {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("UnivarPoly::eval: non-finite input");
    if (coeffs_.empty()) return {0.0, 0.0};

    const Quad zr(z.real()), zi(z.imag());
    Quad ar(0), ai(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        // acc = acc*z + c
        const Quad nr = ar * zr - ai * zi + it->convert_to<Quad>();
        ai = ar * zi + ai * zr;
        ar = nr;
    }
    const Complex out{ar.convert_to<double>(), ai.convert_to<double>()};
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
        throw OverflowToNonFinite("UnivarPoly::eval: result exceeds floating range");
    return out;
}

std::ostream& operator<<(std::ostream& os, const UnivarPoly& p) {
    return os << p.str();
}

}  // namespace chordal
