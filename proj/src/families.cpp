#include "chordal/families.hpp"

#include "chordal/errors.hpp"

#include <mutex>
#include <utility>

namespace chordal {

char family_char(Family kind) {
    switch (kind) {
        case Family::L: return 'L';
        case Family::F: return 'F';
        case Family::V: return 'V';
        case Family::U: return 'U';
    }
    throw std::invalid_argument("family_char: bad enum value");
}

Family family_from_char(char c) {
    switch (c) {
        case 'L': return Family::L;
        case 'F': return Family::F;
        case 'V': return Family::V;
        case 'U': return Family::U;
        default: throw std::invalid_argument(std::string("unknown polynomial family '") + c + "'");
    }
}

namespace {

bool subtracts_y(Family kind) { return kind == Family::L || kind == Family::F; }

BivarPoly seed(Family kind, int n) {
    const bool lucas_seeds = kind == Family::L || kind == Family::V;  // 2, X vs 0, 1
    if (n == 0) return lucas_seeds ? BivarPoly(2) : BivarPoly();
    return lucas_seeds ? BivarPoly::var_x() : BivarPoly(1);
}

}  // namespace

FamilyCache::FamilyCache(Family kind) : kind_(kind) {
    entries_.push_back(seed(kind, 0));
    entries_.push_back(seed(kind, 1));
}

BivarPoly FamilyCache::at(int n) const {
    if (n < 0) throw std::invalid_argument("family polynomial index must be >= 0");
    const auto idx = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(mutex_);
        if (idx < entries_.size()) return entries_[idx];
    }
    std::unique_lock lock(mutex_);
    const BivarPoly x = BivarPoly::var_x();
    const BivarPoly y_step = subtracts_y(kind_) ? -BivarPoly::var_y() : BivarPoly::var_y();
    while (entries_.size() <= idx) {
        const std::size_t m = entries_.size();
        entries_.push_back(x * entries_[m - 1] + y_step * entries_[m - 2]);
    }
    return entries_[idx];
}

BivarPoly family_poly(Family kind, int n) {
    static FamilyCache caches[4] = {FamilyCache(Family::L), FamilyCache(Family::F),
                                    FamilyCache(Family::V), FamilyCache(Family::U)};
    return caches[static_cast<int>(kind)].at(n);
}

namespace {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact at every step
    }
    return c;
}

}  // namespace

BivarPoly lucas_closed_form(int n) {
    if (n < 0) throw std::invalid_argument("lucas_closed_form: n must be >= 0");
    if (n == 0) return BivarPoly(2);  // the displayed sum starts at n = 1
    BivarPoly out;
    for (int r = 0; r <= n / 2; ++r) {
        // n/(n-r) * C(n-r,r) as a pure-integer sum of two binomials
        Int c = binomial(n - r, r) + binomial(n - r - 1, r - 1);
        if (c * (n - r) != Int(n) * binomial(n - r, r))
            throw NonIntegerCoefficient("lucas_closed_form: coefficient identity violated");
        if (r % 2 == 1) c = -c;
        out += BivarPoly::term(std::move(c), n - 2 * r, r);
    }
    return out;
}

UnivarPoly omega_poly(const OmegaSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("omega_poly: n must be >= 2");
    UnivarPoly omega = family_poly(Family::L, spec.n).specialize_y(spec.p);
    omega -= UnivarPoly::constant(spec.q);
    return omega;
}

UnivarPoly omega_poly(int n, const Rational& p, const Rational& q) {
    return omega_poly(OmegaSpec{n, p, q});
}

Complex binet_lucas_residual(int n, Complex a, Complex b) {
    if (n < 0) throw std::invalid_argument("binet_lucas_residual: n must be >= 0");
    const Complex lhs = family_poly(Family::L, n).eval(a + b, a * b);
    return lhs - (complex_pow(a, n) + complex_pow(b, n));
}

Complex binet_fib_residual(int n, Complex a, Complex b) {
    if (n < 0) throw std::invalid_argument("binet_fib_residual: n must be >= 0");
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a - b) <= 1e-12 * scale)
        throw DegenerateEqualRoots("binet_fib_residual: a and b coincide; use the h_{n-1} form");
    const Complex lhs = family_poly(Family::F, n).eval(a + b, a * b);
    return lhs - (complex_pow(a, n) - complex_pow(b, n)) / (a - b);
}

BivarPoly derivative_identity_residual(int n) {
    if (n < 1) throw std::invalid_argument("derivative_identity_residual: n must be >= 1");
    return family_poly(Family::V, n).derivative_x() - family_poly(Family::U, n) * Int(n);
}

Complex rotated_eval_residual(int n, Complex a, Complex b, double theta) {
    if (n < 0) throw std::invalid_argument("rotated_eval_residual: n must be >= 0");
    const Complex rot{std::cos(theta), std::sin(theta)};         // e^{i theta}
    const Complex rot_n{std::cos(n * theta), std::sin(n * theta)};
    const Complex lhs = family_poly(Family::L, n).eval(a * rot + b * std::conj(rot), a * b);
    return lhs - (complex_pow(a, n) * rot_n + complex_pow(b, n) * std::conj(rot_n));
}

}  // namespace chordal
