#pragma once

// Canned verification runs shared by the CLI, the acceptance driver and the
// Python module. Every report is reproducible from (alpha, p, seed).

#include <cstdint>
#include <vector>

#include "bergman/analytic_function.hpp"
#include "bergman/bounds.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

/// Bloch-normalized catalog functions followed by `n_random` normalized random
/// polynomials of degree 6 drawn from `seed`.
std::vector<AnalyticFunction> default_sample(std::uint64_t seed, int n_random = 4);

/// Hardy-Stein identity against a central difference of M_p^p on zero-free
/// polynomials (p = 2, 3, 4), the mean-derivative inequality
///   d/dr M_p^p(r, f) <= p M_p^(p-1)(r, f) M_p(r, f')
/// on random polynomials, and Chebyshev's integral inequality for 50 random
/// increasing piecewise-linear pairs under d sigma_alpha.
std::vector<BoundReport> verify_identity_suite(double alpha, std::uint64_t seed, const QuadratureScheme& scheme = {});

}  // namespace bergman
