#pragma once

#include "chordal/numeric.hpp"

#include <span>
#include <vector>

namespace chordal {

/// The m indeterminates a_1..a_m of a symmetric-function identity, m >= 1.
using IndeterminateSet = std::vector<Complex>;

/// s_k = sum of k-th powers, k >= 1.
Complex power_sum(std::span<const Complex> values, int k);

/// sigma_k = sum over k-subsets of products; 1 for k = 0, 0 for k > m.
Complex elem_sym(std::span<const Complex> values, int k);

/// h_k = sum of all degree-k monomials; h_0 = 1.
Complex complete_hom(std::span<const Complex> values, int k);

/// Full alternating sum s_n - s_{n-1}*sigma_1 + ... -+ n*sigma_n.
/// Mathematically zero; the returned value is pure rounding noise.
Complex newton_residual(std::span<const Complex> values, int n);

/// Alternating sum h_n - h_{n-1}*sigma_1 + ... -+ sigma_n; also
/// mathematically zero.
Complex complete_hom_residual(std::span<const Complex> values, int n);

/// prod_j 1/(1 - a_j t) minus the degree-K partial sum of sum h_k t^k.
/// Requires |t| < 1/max|a_j|; throws ConvergenceDomainError otherwise.
/// The magnitude is bounded by the geometric tail of the series.
Complex generating_fn_check(std::span<const Complex> values, Complex t, int truncation_order);

}  // namespace chordal
