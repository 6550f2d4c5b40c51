#include "bergman/norms.hpp"

#include <cmath>
#include <string>

#include "bergman/errors.hpp"
#include "bergman/special_fn.hpp"

namespace bergman {

namespace {

struct Tail {
    double partial = 0.0;
    double tail = 0.0;
};

// Partial sum plus a tail estimate from the last two dyadic blocks: if block
// sums shrink by a factor q, the remaining blocks add up to q / (1 - q) times
// the last one. Covers both power-law and geometric decay.
Tail weighted_sum(const std::vector<cplx>& a, double alpha) {
    const int N = static_cast<int>(a.size()) - 1;
    double partial = 0.0, b1 = 0.0, b2 = 0.0;
    for (int n = 0; n <= N; ++n) {
        const double t = std::norm(a[n]) * a2_weight(n, alpha);
        partial += t;
        if (n > N / 4 && n <= N / 2) b1 += t;
        if (n > N / 2) b2 += t;
    }
    Tail out{partial, 0.0};
    if (b2 == 0.0) return out;
    if (b1 == 0.0) {
        out.tail = HUGE_VAL;
        return out;
    }
    const double q = b2 / b1;
    out.tail = q < 1.0 ? b2 * q / (1.0 - q) : HUGE_VAL;
    return out;
}

void check_alpha(double alpha) {
    if (!(alpha > -1.0) || !std::isfinite(alpha)) throw DomainError("norms: alpha must be > -1");
}

}  // namespace

double a2_weight(int n, double alpha) {
    check_alpha(alpha);
    if (n == 0) return 1.0;
    return gamma(PositiveReal(alpha + 2.0)) * gamma_delta_ratio(n + 1.0, alpha + 1.0);
}

NormResult besov_norm(const AnalyticFunction& f, double q, BesovVariant variant, const QuadratureScheme& scheme) {
    if (!(q > 1.0) || !std::isfinite(q)) throw DomainError("besov_norm: q must be > 1 (B^1 has its own bound)");
    const double f0 = std::abs(f.derivative_at(cplx{0.0, 0.0}, 0));
    NormResult d = bergman_norm(AnalyticFunction::derivative(f), q, q - 2.0, scheme);
    NormResult out = d;
    if (variant == BesovVariant::norm1) {
        out.value = f0 + d.value;
    } else {
        out.value = std::pow(std::pow(f0, q) + std::pow(d.value, q), 1.0 / q);
    }
    return out;
}

double b1_atomic_upper_bound(const AnalyticFunction& f) {
    const auto* b1 = std::get_if<model::AtomicB1>(&f.model());
    if (!b1) throw ArgumentError("b1_atomic_upper_bound: model is '" + f.kind() + "', not an atomic B^1 decomposition");
    double s = 0.0;
    for (const auto& atom : b1->atoms) s += std::abs(atom.b);
    return s;
}

double a2_norm_parseval(const AnalyticFunction& f, double alpha, int N, double rel_tol) {
    check_alpha(alpha);
    if (N < 0) throw ArgumentError("a2_norm_parseval: N must be >= 0");
    const auto t = weighted_sum(f.coefficients(static_cast<std::size_t>(N)), alpha);
    const bool exact = f.is_polynomial() && f.polynomial_degree() <= N;
    if (!exact && t.tail > rel_tol * t.partial) {
        throw ConvergenceError("a2_norm_parseval: tail beyond N = " + std::to_string(N) + " is not negligible",
                               std::sqrt(t.partial), std::sqrt(t.partial + t.tail));
    }
    return std::sqrt(t.partial);
}

double a2_norm_series(const AnalyticFunction& f, double alpha, double rel_tol) {
    check_alpha(alpha);
    if (f.is_polynomial()) return a2_norm_parseval(f, alpha, std::max(0, f.polynomial_degree()), rel_tol);
    const bool cheap = !std::holds_alternative<model::MoebiusShift>(f.model());
    const int n_max = cheap ? (1 << 22) : 4096;
    double last = 0.0, prev = 0.0;
    for (int N = 256; N <= n_max; N *= 4) {
        const auto t = weighted_sum(f.coefficients(static_cast<std::size_t>(N)), alpha);
        prev = last;
        // the tail estimate is added back; what remains is its own O(1/N) error
        last = std::sqrt(t.partial + t.tail);
        if (t.tail <= rel_tol * t.partial) return last;
    }
    throw ConvergenceError("a2_norm_series: coefficient tail did not become negligible", prev, last);
}

double derivative_energy(const AnalyticFunction& f, double alpha, const QuadratureScheme& scheme) {
    QuadratureScheme s = scheme;
    s.alpha = alpha;
    const auto res = integrate_disk<double>(
        [&](const DiskPoint& pt) { return std::norm(f.derivative_at(pt.z, 1)) * pt.u * pt.u; }, geometry_for(f, 2.0),
        s);
    if (!res.converged) {
        throw ConvergenceError("derivative_energy: refinement did not reach rel_tol", res.value - res.abs_error,
                               res.value);
    }
    return res.value;
}

IdentitySides parseval_weighted_identity(const AnalyticFunction& f, double alpha, int N,
                                         const QuadratureScheme& scheme) {
    check_alpha(alpha);
    if (N < 0) throw ArgumentError("parseval_weighted_identity: N must be >= 0");
    const auto a = f.coefficients(static_cast<std::size_t>(N));
    double s = 0.0;
    for (int n = 1; n <= N; ++n) s += double(n) / (n + alpha + 2.0) * a2_weight(n, alpha) * std::norm(a[n]);
    return {(alpha + 1.0) * (alpha + 2.0) * s, derivative_energy(f, alpha, scheme)};
}

IdentitySides vanishing_order_bound(const AnalyticFunction& f, double alpha, int k, const QuadratureScheme& scheme) {
    check_alpha(alpha);
    if (k < 1) throw ArgumentError("vanishing_order_bound: k must be >= 1");
    const auto a = f.coefficients(static_cast<std::size_t>(k - 1));
    for (int j = 0; j < k; ++j) {
        if (std::abs(a[j]) > 1e-12) {
            throw ArgumentError("vanishing_order_bound: coefficient a_" + std::to_string(j) + " does not vanish");
        }
    }
    const double norm = bergman_norm(f, 2.0, alpha, scheme).value;
    const double factor = (k + alpha + 2.0) / ((alpha + 1.0) * (alpha + 2.0) * k);
    return {norm * norm, factor * derivative_energy(f, alpha, scheme)};
}

}  // namespace bergman
