#pragma once

// Space-level norms: Bergman (via quadrature), Besov in both normalizations,
// the atomic B^1 upper bound, and the weighted Parseval identities for A^2_alpha.

#include "bergman/analytic_function.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

enum class BesovVariant { norm1, norm2 };

/// norm1: |f(0)| + ||f'||_{A^q_{q-2}}.  norm2: (|f(0)|^q + ||f'||^q)^(1/q).  q > 1.
NormResult besov_norm(const AnalyticFunction& f, double q, BesovVariant variant, const QuadratureScheme& scheme = {});

/// sum |b_k| over the supplied decomposition; ArgumentError unless f is AtomicB1.
double b1_atomic_upper_bound(const AnalyticFunction& f);

/// Weight n! Gamma(alpha + 2) / Gamma(n + alpha + 2) = ||z^n||^2 in A^2_alpha.
double a2_weight(int n, double alpha);

/// sqrt(sum_{n <= N} |a_n|^2 a2_weight(n, alpha)). ConvergenceError when the
/// estimated tail beyond N exceeds rel_tol times the partial sum.
double a2_norm_parseval(const AnalyticFunction& f, double alpha, int N, double rel_tol = 1e-8);

/// Parseval norm with N grown until the estimated tail is below rel_tol of the
/// partial sum; the tail estimate is then added in. Exact for polynomials.
double a2_norm_series(const AnalyticFunction& f, double alpha, double rel_tol = 1e-7);

struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// lhs: (alpha+1)(alpha+2) sum_{n>=1} n/(n+alpha+2) a2_weight(n) |a_n|^2 over n <= N.
/// rhs: integral of |f'|^2 (1 - |z|^2)^2 d mu_alpha by quadrature.
IdentitySides parseval_weighted_identity(const AnalyticFunction& f, double alpha, int N,
                                         const QuadratureScheme& scheme = {});

/// For f vanishing to order k at 0: lhs = ||f||^2_{A^2_alpha},
/// rhs = (k+alpha+2)/((alpha+1)(alpha+2)k) * integral |f'|^2 (1 - |z|^2)^2 d mu_alpha.
IdentitySides vanishing_order_bound(const AnalyticFunction& f, double alpha, int k,
                                    const QuadratureScheme& scheme = {});

/// integral of |f'|^2 (1 - |z|^2)^2 d mu_alpha.
double derivative_energy(const AnalyticFunction& f, double alpha, const QuadratureScheme& scheme = {});

}  // namespace bergman
