#pragma once

// Evaluable models of analytic functions on the unit disk.
//
// An AnalyticFunction is an immutable handle to one of the catalog models below.
// Copies share the underlying node. All derivatives are closed-form; there is no
// numeric differentiation anywhere in the library.

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

/// Coefficients a_0..a_N of a polynomial sum a_n z^n.
class TaylorSeries {
public:
    TaylorSeries() : coeffs_{cplx{0.0, 0.0}} {}
    explicit TaylorSeries(std::vector<cplx> coeffs);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::span<const cplx> coefficients() const noexcept { return coeffs_; }
    const cplx& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// k-th derivative at z by Horner's scheme on the differentiated coefficients.
    cplx derivative_at(cplx z, int k) const;
    cplx operator()(cplx z) const { return derivative_at(z, 0); }

private:
    std::vector<cplx> coeffs_;
};

namespace detail {
struct Node;
}

class AnalyticFunction;

namespace model {

struct Taylor {
    TaylorSeries series;
};

/// phi_a(z) = (a - z) / (1 - conj(a) z), |a| < 1.
struct Moebius {
    cplx a;
};

/// k(z) = (1 - conj(zeta) z)^(-exponent). Built from (zeta, p, alpha) the exponent is
/// 2 (alpha + 2) / p, the extremal function for point evaluation in A^p_alpha.
struct Kernel {
    cplx zeta;
    double p;
    double alpha;
    double exponent;
};

/// scale * log(1 - z).
struct LogOneSided {
    double scale;
};

/// scale * log((1 + z) / (1 - z)).
struct LogTwoSided {
    double scale;
};

/// slope * z + offset.
struct ExtremalF0 {
    cplx slope;
    cplx offset;
};

/// gamma * ((1 - |zeta|^2) / conj(zeta)) / (1 - conj(zeta) z) + delta, 0 < |zeta| < 1.
struct ExtremalFzeta {
    cplx gamma;
    cplx delta;
    cplx zeta;
};

/// c * z^n.
struct Monomial {
    int n;
    cplx c;
};

struct Atom {
    cplx b;
    cplx a;
};

/// sum_k b_k phi_{a_k}(z).
struct AtomicB1 {
    std::vector<Atom> atoms;
};

struct Sum {
    std::vector<AnalyticFunction> terms;
};

/// scale * base(z) + shift.
struct Affine {
    std::shared_ptr<const detail::Node> base;
    cplx scale;
    cplx shift;
};

/// base'(z).
struct Derivative {
    std::shared_ptr<const detail::Node> base;
};

/// base(phi_a(z)) - base(a): the conformal shift used in the extremality argument.
struct MoebiusShift {
    std::shared_ptr<const detail::Node> base;
    cplx a;
};

using Variant = std::variant<Taylor, Moebius, Kernel, LogOneSided, LogTwoSided, ExtremalF0,
                             ExtremalFzeta, Monomial, AtomicB1, Sum, Affine, Derivative, MoebiusShift>;

}  // namespace model

class AnalyticFunction {
public:
    /// The zero function.
    AnalyticFunction();

    static AnalyticFunction taylor(TaylorSeries series);
    static AnalyticFunction taylor(std::vector<cplx> coeffs) { return taylor(TaylorSeries(std::move(coeffs))); }
    static AnalyticFunction moebius(cplx a);
    static AnalyticFunction kernel(cplx zeta, double p, double alpha);
    /// (1 - conj(zeta) z)^(-exponent) with an arbitrary positive exponent.
    static AnalyticFunction power_kernel(cplx zeta, double exponent);
    static AnalyticFunction log_one_sided(double scale);
    static AnalyticFunction log_two_sided(double scale);
    static AnalyticFunction extremal_f0(cplx slope, cplx offset);
    static AnalyticFunction extremal_fzeta(cplx gamma, cplx delta, cplx zeta);
    static AnalyticFunction monomial(int n, cplx c);
    static AnalyticFunction constant(cplx c) { return monomial(0, c); }
    static AnalyticFunction atomic_b1(std::vector<model::Atom> atoms);
    static AnalyticFunction sum(std::vector<AnalyticFunction> terms);
    static AnalyticFunction affine(const AnalyticFunction& base, cplx scale, cplx shift);
    static AnalyticFunction derivative(const AnalyticFunction& base);
    static AnalyticFunction moebius_shift(const AnalyticFunction& base, cplx a);

    const model::Variant& model() const;
    std::string kind() const;

    /// k-th derivative at z, k >= 0. Supports every k for catalog models and
    /// k <= 3 through a MoebiusShift. No domain check beyond |z| < 1 being assumed.
    cplx derivative_at(cplx z, int k) const;

    /// Arguments of singular points on, or within 0.5 of, the unit circle.
    std::vector<double> singular_directions() const;

    /// Distance from the nearest singular point to the unit circle (0 for
    /// boundary singularities, +inf for polynomials).
    double boundary_distance() const;

    /// True for polynomial models (Taylor, Monomial, F0 and their sums/affine images).
    bool is_polynomial() const;

    /// Polynomial degree when is_polynomial(), otherwise -1.
    int polynomial_degree() const;

    /// Taylor coefficients a_0..a_N without the public size cap.
    std::vector<cplx> coefficients(std::size_t N) const;

    const std::shared_ptr<const detail::Node>& node() const noexcept { return node_; }
    explicit AnalyticFunction(std::shared_ptr<const detail::Node> node);

private:
    std::shared_ptr<const detail::Node> node_;
};

namespace detail {
struct Node {
    model::Variant value;
};
}  // namespace detail

/// Value (order 0) or derivative (order 1, 2) of f at z, |z| < 1.
cplx eval(const AnalyticFunction& f, cplx z, int order = 0);

/// First N + 1 Taylor coefficients at 0, N <= 4096.
TaylorSeries taylor_coefficients(const AnalyticFunction& f, int N);

enum class BlochMode { closed_form, numeric };

/// Bloch seminorm sup |f'(z)| (1 - |z|^2). Numeric mode returns a lower bound
/// located to within kBlochRefineTol in (r, theta).
double bloch_seminorm(const AnalyticFunction& f, BlochMode mode);

inline constexpr double kBlochRefineTol = 1e-8;

struct BlochSupremum {
    double value = 0.0;
    cplx argmax{0.0, 0.0};
};

/// Grid search plus local refinement; exposes where the supremum was found.
BlochSupremum bloch_supremum_numeric(const AnalyticFunction& f);

/// Closed form when available, numeric otherwise.
double bloch_seminorm(const AnalyticFunction& f);

/// |f(0)| + bloch_seminorm(f).
double bloch_norm(const AnalyticFunction& f);

/// (f - f(0)) / bloch_seminorm(f); DegenerateInputError for constants.
AnalyticFunction normalize_bloch(const AnalyticFunction& f);

}  // namespace bergman
