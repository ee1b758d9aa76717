#include "chordal/bivar_poly.hpp"

#include "chordal/errors.hpp"
#include "chordal/univar_poly.hpp"

#include <ostream>
#include <utility>
#include <vector>

namespace chordal {

BivarPoly::BivarPoly(Int constant) {
    if (constant != 0) terms_.emplace(Monomial{0, 0}, std::move(constant));
}

BivarPoly BivarPoly::term(Int coeff, int x_deg, int y_deg) {
    if (x_deg < 0 || y_deg < 0) throw std::invalid_argument("BivarPoly::term: negative exponent");
    BivarPoly p;
    if (coeff != 0) p.terms_.emplace(Monomial{x_deg, y_deg}, std::move(coeff));
    return p;
}

Int BivarPoly::coeff(int x_deg, int y_deg) const {
    auto it = terms_.find(Monomial{x_deg, y_deg});
    return it == terms_.end() ? Int(0) : it->second;
}

int BivarPoly::degree_x() const noexcept {
    // first term has the largest X-degree
    return terms_.empty() ? -1 : terms_.begin()->first.x_deg;
}

std::optional<int> BivarPoly::weighted_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x_deg + 2 * m.y_deg);
    return d;
}

bool BivarPoly::is_weighted_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.x_deg + 2 * terms_.begin()->first.y_deg;
    for (const auto& [m, c] : terms_)
        if (m.x_deg + 2 * m.y_deg != d) return false;
    return true;
}

void BivarPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
    BivarPoly out;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.add_term(Monomial{ma.x_deg + mb.x_deg, ma.y_deg + mb.y_deg}, ca * cb);
    return out;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

BivarPoly& BivarPoly::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

BivarPoly BivarPoly::derivative_x() const {
    BivarPoly out;
    for (const auto& [m, c] : terms_)
        if (m.x_deg > 0) out.add_term(Monomial{m.x_deg - 1, m.y_deg}, c * m.x_deg);
    return out;
}

namespace {

struct QComplex {
    Quad re, im;
};

QComplex qmul(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

QComplex qadd(const QComplex& a, const QComplex& b) {
    return {a.re + b.re, a.im + b.im};
}

QComplex qpow(QComplex base, int e) {
    QComplex r{Quad(1), Quad(0)};
    while (e != 0) {
        if (e & 1) r = qmul(r, base);
        base = qmul(base, base);
        e >>= 1;
    }
    return r;
}

Complex qround(const QComplex& v) {
    return {v.re.convert_to<double>(), v.im.convert_to<double>()};
}

}  // namespace

Complex BivarPoly::eval(Complex x, Complex y) const {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) || !std::isfinite(y.real()) ||
        !std::isfinite(y.imag()))
        throw std::invalid_argument("BivarPoly::eval: non-finite input");
    if (terms_.empty()) return {0.0, 0.0};

    const QComplex qx{Quad(x.real()), Quad(x.imag())};
    const QComplex qy{Quad(y.real()), Quad(y.imag())};

    QComplex acc{Quad(0), Quad(0)};
    bool first_group = true;
    int prev_x_deg = 0;
    auto it = terms_.begin();
    while (it != terms_.end()) {
        const int xd = it->first.x_deg;
        // gather this X-degree's coefficient polynomial in Y (ascending j)
        std::vector<std::pair<int, const Int*>> ys;
        for (; it != terms_.end() && it->first.x_deg == xd; ++it)
            ys.emplace_back(it->first.y_deg, &it->second);
        // sparse Horner in Y over descending j
        QComplex cy{Quad(0), Quad(0)};
        int prev_j = -1;
        for (auto r = ys.rbegin(); r != ys.rend(); ++r) {
            if (prev_j >= 0) cy = qmul(cy, qpow(qy, prev_j - r->first));
            cy = qadd(cy, QComplex{Quad(*r->second), Quad(0)});
            prev_j = r->first;
        }
        if (prev_j > 0) cy = qmul(cy, qpow(qy, prev_j));
        // Horner step in X
        acc = first_group ? cy : qadd(qmul(acc, qpow(qx, prev_x_deg - xd)), cy);
        first_group = false;
        prev_x_deg = xd;
    }
    if (prev_x_deg > 0) acc = qmul(acc, qpow(qx, prev_x_deg));

    const Complex out = qround(acc);
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
        throw OverflowToNonFinite("BivarPoly::eval: result exceeds floating range");
    return out;
}

UnivarPoly BivarPoly::specialize_y(const Rational& y) const {
    if (terms_.empty()) return UnivarPoly{};
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree_x()) + 1, Rational(0));
    for (const auto& [m, c] : terms_)
        coeffs[static_cast<std::size_t>(m.x_deg)] += Rational(c) * rational_pow(y, m.y_deg);
    return UnivarPoly(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const BivarPoly& p) {
    return os << p.str();
}

}  // namespace chordal
