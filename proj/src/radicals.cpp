#include "chordal/radicals.hpp"

#include "chordal/errors.hpp"
#include "chordal/families.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace chordal {

namespace {

/// Principal n-th root: modulus via real pow, argument divided from the
/// principal branch (-pi, pi].
Complex nth_root_principal(Complex w, int n) {
    const double mod = std::abs(w);
    if (mod == 0.0) return {0.0, 0.0};
    return std::polar(std::pow(mod, 1.0 / static_cast<double>(n)), std::arg(w) / static_cast<double>(n));
}

}  // namespace

RadicalSolution solve_omega(int n, const Rational& p, const Rational& q) {
    if (n < 2) throw std::invalid_argument("solve_omega: n must be >= 2");

    RadicalSolution sol;
    sol.n = n;
    sol.p = p;
    sol.q = q;

    const Rational p_n = rational_pow(p, n);
    const Rational disc = q * q - 4 * p_n;  // exact, so the degenerate case is detected exactly
    sol.degenerate_double_root = disc == 0;

    const double qd = to_double(q);
    const double p_n_d = to_double(p_n);
    if (disc >= 0) {
        // Real branch. The quadratic formula cancels badly for the root
        // opposite in sign to q, so compute the large root directly and
        // the other from Vieta's product.
        const double s = std::sqrt(to_double(disc));
        if (qd >= 0.0) {
            sol.a_n = Complex{(qd + s) / 2.0, 0.0};
            sol.b_n = sol.a_n == Complex{0.0, 0.0} ? Complex{0.0, 0.0}
                                                   : Complex{p_n_d / sol.a_n.real(), 0.0};
        } else {
            sol.b_n = Complex{(qd - s) / 2.0, 0.0};
            sol.a_n = Complex{p_n_d / sol.b_n.real(), 0.0};
        }
    } else {
        const double s = std::sqrt(to_double(Rational(-disc)));
        sol.a_n = Complex{qd / 2.0, s / 2.0};
        sol.b_n = std::conj(sol.a_n);
    }
    if (!std::isfinite(sol.a_n.real()) || !std::isfinite(sol.b_n.real()))
        throw OverflowToNonFinite("solve_omega: resolvent roots exceed floating range");

    const Complex a_principal = nth_root_principal(sol.a_n, n);
    const Complex b_principal = nth_root_principal(sol.b_n, n);

    if (p == 0) {
        // b (or a) vanishes; nothing to pair
        sol.twist = 0;
        sol.a = a_principal;
        sol.b = b_principal;
    } else {
        const double pd = to_double(p);
        const double tol = 1e-6 * std::max(1.0, std::abs(pd));
        int chosen = -1;
        double best_err = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            const double err = std::abs(unit_root(n, j) * a_principal * b_principal - pd);
            best_err = std::min(best_err, err);
            if (err <= tol) {
                chosen = j;
                break;  // smallest j wins ties by construction
            }
        }
        if (chosen < 0)
            throw PairingFailure("solve_omega: no twist reached a*b = p; best |a*b - p| = " +
                                 std::to_string(best_err));
        sol.twist = chosen;
        sol.a = unit_root(n, chosen) * a_principal;
        sol.b = b_principal;
    }

    sol.roots.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const Complex zj = unit_root(n, j);
        sol.roots.push_back(zj * sol.a + std::conj(zj) * sol.b);
    }

    verify_solution(sol);
    return sol;
}

double verify_solution(RadicalSolution& sol) {
    const UnivarPoly omega = omega_poly(sol.n, sol.p, sol.q);
    double worst = 0.0;
    for (const Complex& z : sol.roots) worst = std::max(worst, std::abs(omega.eval(z)));
    sol.max_residual = worst;
    return worst;
}

std::vector<Complex> lucas_roots(int n, double y) {
    if (n < 1) throw std::invalid_argument("lucas_roots: n must be >= 1");
    const Complex two_sqrt = 2.0 * std::sqrt(Complex{-y, 0.0});
    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double angle = static_cast<double>(1 + 2 * j) * pi / (2.0 * static_cast<double>(n));
        roots.push_back(two_sqrt * std::cos(angle));
    }
    return roots;
}

}  // namespace chordal
