#include "chordal/symmetric.hpp"

#include "chordal/errors.hpp"

#include <algorithm>
#include <vector>

namespace chordal {

namespace {

void require_set(std::span<const Complex> values) {
    if (values.empty()) throw std::invalid_argument("indeterminate set must have m >= 1 entries");
    for (const Complex& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("indeterminate set contains a non-finite entry");
}

// sigma_0..sigma_kmax via the coefficient recurrence of prod (1 + a_j t);
// O(m*kmax) instead of subset enumeration.
std::vector<Complex> elem_sym_table(std::span<const Complex> values, int kmax) {
    std::vector<Complex> e(static_cast<std::size_t>(kmax) + 1, Complex{0.0, 0.0});
    e[0] = 1.0;
    int seen = 0;
    for (const Complex& a : values) {
        ++seen;
        for (int j = std::min(kmax, seen); j >= 1; --j) e[j] += a * e[j - 1];
    }
    return e;
}

// h_0..h_kmax by dynamic programming over prefix/degree.
std::vector<Complex> complete_hom_table(std::span<const Complex> values, int kmax) {
    std::vector<Complex> h(static_cast<std::size_t>(kmax) + 1, Complex{0.0, 0.0});
    h[0] = 1.0;
    for (const Complex& a : values)
        for (int j = 1; j <= kmax; ++j) h[j] += a * h[j - 1];
    return h;
}

// s_1..s_nmax, one incremental power pass per indeterminate.
std::vector<Complex> power_sum_table(std::span<const Complex> values, int nmax) {
    std::vector<Complex> s(static_cast<std::size_t>(nmax) + 1, Complex{0.0, 0.0});
    std::vector<Complex> pw(values.begin(), values.end());
    for (int k = 1; k <= nmax; ++k) {
        Complex total{0.0, 0.0};
        for (Complex& p : pw) total += p;
        s[static_cast<std::size_t>(k)] = total;
        if (k < nmax)
            for (std::size_t j = 0; j < pw.size(); ++j) pw[j] *= values[j];
    }
    return s;
}

}  // namespace

Complex power_sum(std::span<const Complex> values, int k) {
    require_set(values);
    if (k < 1) throw std::invalid_argument("power_sum: k must be >= 1");
    Complex total{0.0, 0.0};
    for (const Complex& a : values) total += complex_pow(a, k);
    return total;
}

Complex elem_sym(std::span<const Complex> values, int k) {
    require_set(values);
    if (k < 0) throw std::invalid_argument("elem_sym: k must be >= 0");
    if (k == 0) return {1.0, 0.0};
    if (k > static_cast<int>(values.size())) return {0.0, 0.0};
    return elem_sym_table(values, k)[static_cast<std::size_t>(k)];
}

Complex complete_hom(std::span<const Complex> values, int k) {
    require_set(values);
    if (k < 0) throw std::invalid_argument("complete_hom: k must be >= 0");
    if (k == 0) return {1.0, 0.0};
    return complete_hom_table(values, k)[static_cast<std::size_t>(k)];
}

Complex newton_residual(std::span<const Complex> values, int n) {
    require_set(values);
    if (n < 1) throw std::invalid_argument("newton_residual: n must be >= 1");
    const auto sigma = elem_sym_table(values, n);
    const auto s = power_sum_table(values, n);
    Complex acc{0.0, 0.0};
    double sign = 1.0;
    for (int k = 0; k <= n - 1; ++k, sign = -sign)
        acc += sign * sigma[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(n - k)];
    acc += sign * static_cast<double>(n) * sigma[static_cast<std::size_t>(n)];
    return acc;
}

Complex complete_hom_residual(std::span<const Complex> values, int n) {
    require_set(values);
    if (n < 1) throw std::invalid_argument("complete_hom_residual: n must be >= 1");
    const auto sigma = elem_sym_table(values, n);
    const auto h = complete_hom_table(values, n);
    Complex acc{0.0, 0.0};
    double sign = 1.0;
    for (int k = 0; k <= n - 1; ++k, sign = -sign)
        acc += sign * sigma[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(n - k)];
    acc += sign * sigma[static_cast<std::size_t>(n)];
    return acc;
}

Complex generating_fn_check(std::span<const Complex> values, Complex t, int truncation_order) {
    require_set(values);
    if (truncation_order < 1) throw std::invalid_argument("generating_fn_check: K must be >= 1");
    double max_mod = 0.0;
    for (const Complex& a : values) max_mod = std::max(max_mod, std::abs(a));
    if (max_mod > 0.0 && std::abs(t) >= 1.0 / max_mod)
        throw ConvergenceDomainError("generating_fn_check: |t| outside the convergence disk");

    Complex product{1.0, 0.0};
    for (const Complex& a : values) product /= Complex{1.0, 0.0} - a * t;

    const auto h = complete_hom_table(values, truncation_order);
    Complex partial{0.0, 0.0};
    for (int k = truncation_order; k >= 0; --k) partial = partial * t + h[static_cast<std::size_t>(k)];

    return product - partial;
}

}  // namespace chordal
