#include "bergman/analytic_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNearBoundary = 0.5;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double factorial(int k) {
    double out = 1.0;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

// n (n-1) ... (n-k+1)
double falling(int n, int k) {
    double out = 1.0;
    for (int i = 0; i < k; ++i) out *= (n - i);
    return out;
}

cplx ipow(cplx z, int k) {
    cplx out{1.0, 0.0};
    for (int i = 0; i < k; ++i) out *= z;
    return out;
}

void require_in_disk(cplx a, const char* what) {
    if (!(std::abs(a) < 1.0) || !std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw DomainError(std::string("func_model: ") + what + " must lie in the open unit disk");
    }
}

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw ArgumentError(std::string("func_model: ") + what + " must be finite");
}

void require_finite(cplx x, const char* what) {
    require_finite(x.real(), what);
    require_finite(x.imag(), what);
}

const AnalyticFunction wrap(const std::shared_ptr<const detail::Node>& node) { return AnalyticFunction(node); }

// phi_a and its derivatives, k >= 0.
cplx moebius_derivative(cplx a, cplx z, int k) {
    const cplx ac = std::conj(a);
    const cplx w = 1.0 - ac * z;
    if (k == 0) return (a - z) / w;
    return (std::norm(a) - 1.0) * factorial(k) * ipow(ac, k - 1) / ipow(w, k + 1);
}

cplx derivative_impl(const model::Variant& m, cplx z, int k);

cplx node_derivative(const std::shared_ptr<const detail::Node>& n, cplx z, int k) {
    return derivative_impl(n->value, z, k);
}

cplx derivative_impl(const model::Variant& m, cplx z, int k) {
    return std::visit(
        overloaded{
            [&](const model::Taylor& t) { return t.series.derivative_at(z, k); },
            [&](const model::Moebius& mb) { return moebius_derivative(mb.a, z, k); },
            [&](const model::Kernel& kr) {
                const cplx zc = std::conj(kr.zeta);
                const cplx w = 1.0 - zc * z;
                double poch = 1.0;
                for (int i = 0; i < k; ++i) poch *= kr.exponent + i;
                return poch * ipow(zc, k) * std::exp(-(kr.exponent + k) * std::log(w));
            },
            [&](const model::LogOneSided& l) {
                if (k == 0) return l.scale * std::log(1.0 - z);
                return -l.scale * factorial(k - 1) / ipow(1.0 - z, k);
            },
            [&](const model::LogTwoSided& l) {
                if (k == 0) return l.scale * (std::log(1.0 + z) - std::log(1.0 - z));
                const double sign = (k % 2 == 1) ? 1.0 : -1.0;
                return l.scale * factorial(k - 1) * (sign / ipow(1.0 + z, k) + 1.0 / ipow(1.0 - z, k));
            },
            [&](const model::ExtremalF0& f) {
                if (k == 0) return f.slope * z + f.offset;
                if (k == 1) return f.slope;
                return cplx{0.0, 0.0};
            },
            [&](const model::ExtremalFzeta& f) {
                const cplx zc = std::conj(f.zeta);
                const double mass = 1.0 - std::norm(f.zeta);
                const cplx w = 1.0 - zc * z;
                if (k == 0) return f.gamma * mass / zc / w + f.delta;
                return f.gamma * mass * factorial(k) * ipow(zc, k - 1) / ipow(w, k + 1);
            },
            [&](const model::Monomial& mn) {
                if (k > mn.n) return cplx{0.0, 0.0};
                return mn.c * falling(mn.n, k) * ipow(z, mn.n - k);
            },
            [&](const model::AtomicB1& b) {
                cplx acc{0.0, 0.0};
                for (const auto& atom : b.atoms) acc += atom.b * moebius_derivative(atom.a, z, k);
                return acc;
            },
            [&](const model::Sum& s) {
                cplx acc{0.0, 0.0};
                for (const auto& term : s.terms) acc += term.derivative_at(z, k);
                return acc;
            },
            [&](const model::Affine& a) {
                cplx v = a.scale * node_derivative(a.base, z, k);
                if (k == 0) v += a.shift;
                return v;
            },
            [&](const model::Derivative& d) { return node_derivative(d.base, z, k + 1); },
            [&](const model::MoebiusShift& s) {
                const cplx w = moebius_derivative(s.a, z, 0);
                if (k == 0) return node_derivative(s.base, w, 0) - node_derivative(s.base, s.a, 0);
                const cplx d1 = moebius_derivative(s.a, z, 1);
                const cplx f1 = node_derivative(s.base, w, 1);
                if (k == 1) return f1 * d1;
                const cplx d2 = moebius_derivative(s.a, z, 2);
                const cplx f2 = node_derivative(s.base, w, 2);
                if (k == 2) return f2 * d1 * d1 + f1 * d2;
                if (k == 3) {
                    const cplx d3 = moebius_derivative(s.a, z, 3);
                    const cplx f3 = node_derivative(s.base, w, 3);
                    return f3 * d1 * d1 * d1 + 3.0 * f2 * d1 * d2 + f1 * d3;
                }
                throw UnsupportedError("func_model: MoebiusShift supports derivatives up to order 3");
            },
        },
        m);
}

// Singular points on or outside the closed disk (finite ones only).
std::vector<cplx> singular_points(const model::Variant& m);

std::vector<cplx> node_points(const std::shared_ptr<const detail::Node>& n) { return singular_points(n->value); }

std::vector<cplx> singular_points(const model::Variant& m) {
    return std::visit(
        overloaded{
            [](const model::Taylor&) { return std::vector<cplx>{}; },
            [](const model::Moebius& mb) {
                if (mb.a == 0.0) return std::vector<cplx>{};
                return std::vector<cplx>{1.0 / std::conj(mb.a)};
            },
            [](const model::Kernel& kr) {
                if (kr.zeta == 0.0) return std::vector<cplx>{};
                return std::vector<cplx>{1.0 / std::conj(kr.zeta)};
            },
            [](const model::LogOneSided&) { return std::vector<cplx>{cplx{1.0, 0.0}}; },
            [](const model::LogTwoSided&) { return std::vector<cplx>{cplx{1.0, 0.0}, cplx{-1.0, 0.0}}; },
            [](const model::ExtremalF0&) { return std::vector<cplx>{}; },
            [](const model::ExtremalFzeta& f) { return std::vector<cplx>{1.0 / std::conj(f.zeta)}; },
            [](const model::Monomial&) { return std::vector<cplx>{}; },
            [](const model::AtomicB1& b) {
                std::vector<cplx> out;
                for (const auto& atom : b.atoms)
                    if (atom.a != 0.0) out.push_back(1.0 / std::conj(atom.a));
                return out;
            },
            [](const model::Sum& s) {
                std::vector<cplx> out;
                for (const auto& t : s.terms) {
                    auto pts = singular_points(t.model());
                    out.insert(out.end(), pts.begin(), pts.end());
                }
                return out;
            },
            [](const model::Affine& a) { return node_points(a.base); },
            [](const model::Derivative& d) { return node_points(d.base); },
            [](const model::MoebiusShift& s) {
                std::vector<cplx> out;
                const cplx ac = std::conj(s.a);
                for (const cplx p : node_points(s.base)) {
                    const cplx w = 1.0 - ac * p;
                    if (std::abs(w) < 1e-300) continue;
                    out.push_back((s.a - p) / w);
                }
                const bool constant_base = wrap(s.base).is_polynomial() && wrap(s.base).polynomial_degree() <= 0;
                if (s.a != 0.0 && !constant_base) out.push_back(1.0 / ac);
                return out;
            },
        },
        m);
}

std::optional<double> closed_form_seminorm(const model::Variant& m);

std::optional<double> node_closed(const std::shared_ptr<const detail::Node>& n) {
    return closed_form_seminorm(n->value);
}

std::optional<double> closed_form_seminorm(const model::Variant& m) {
    return std::visit(
        overloaded{
            [](const model::Taylor& t) -> std::optional<double> {
                if (t.series.degree() == 0) return 0.0;
                if (t.series.degree() == 1) return std::abs(t.series[1]);
                return std::nullopt;
            },
            [](const model::Moebius&) -> std::optional<double> { return 1.0; },
            [](const model::Kernel& kr) -> std::optional<double> {
                const double s = std::abs(kr.zeta);
                if (s == 0.0) return 0.0;
                const double g = kr.exponent;
                // The maximum lies on the ray through zeta; t solves
                // (1 - g) s t^2 - 2 t + (g + 1) s = 0 in [0, 1).
                const double c = (g + 1.0) * s;
                const double t = c / (1.0 + std::sqrt(1.0 - (1.0 - g * g) * s * s));
                return g * s * (1.0 - t * t) / std::pow(1.0 - s * t, g + 1.0);
            },
            [](const model::LogOneSided& l) -> std::optional<double> { return 2.0 * std::abs(l.scale); },
            [](const model::LogTwoSided& l) -> std::optional<double> { return 2.0 * std::abs(l.scale); },
            [](const model::ExtremalF0& f) -> std::optional<double> { return std::abs(f.slope); },
            [](const model::ExtremalFzeta& f) -> std::optional<double> { return std::abs(f.gamma); },
            [](const model::Monomial& mn) -> std::optional<double> {
                if (mn.n == 0) return 0.0;
                if (mn.n == 1) return std::abs(mn.c);
                const double n = mn.n;
                return std::abs(mn.c) * 2.0 * n / (n + 1.0) * std::pow((n - 1.0) / (n + 1.0), (n - 1.0) / 2.0);
            },
            [](const model::AtomicB1& b) -> std::optional<double> {
                if (b.atoms.empty()) return 0.0;
                if (b.atoms.size() == 1) return std::abs(b.atoms.front().b);
                return std::nullopt;
            },
            [](const model::Sum& s) -> std::optional<double> {
                if (s.terms.empty()) return 0.0;
                if (s.terms.size() == 1) return closed_form_seminorm(s.terms.front().model());
                return std::nullopt;
            },
            [](const model::Affine& a) -> std::optional<double> {
                auto base = node_closed(a.base);
                if (!base) return std::nullopt;
                return std::abs(a.scale) * *base;
            },
            [](const model::Derivative&) -> std::optional<double> { return std::nullopt; },
            // rho(f o phi_a) = rho(f): the Bloch seminorm is conformally invariant.
            [](const model::MoebiusShift& s) -> std::optional<double> { return node_closed(s.base); },
        },
        m);
}

}  // namespace

// ---------------------------------------------------------------------------
// TaylorSeries

TaylorSeries::TaylorSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx{0.0, 0.0});
    for (const auto& c : coeffs_) require_finite(c, "Taylor coefficient");
}

cplx TaylorSeries::derivative_at(cplx z, int k) const {
    const int N = static_cast<int>(coeffs_.size()) - 1;
    if (k > N) return cplx{0.0, 0.0};
    cplx acc{0.0, 0.0};
    for (int n = N; n >= k; --n) acc = acc * z + coeffs_[n] * falling(n, k);
    return acc;
}

// ---------------------------------------------------------------------------
// AnalyticFunction

AnalyticFunction::AnalyticFunction()
    : node_(std::make_shared<const detail::Node>(detail::Node{model::Monomial{0, cplx{0.0, 0.0}}})) {}

AnalyticFunction::AnalyticFunction(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

namespace {
AnalyticFunction make(model::Variant v) {
    return AnalyticFunction(std::make_shared<const detail::Node>(detail::Node{std::move(v)}));
}
}  // namespace

AnalyticFunction AnalyticFunction::taylor(TaylorSeries series) { return make(model::Taylor{std::move(series)}); }

AnalyticFunction AnalyticFunction::moebius(cplx a) {
    require_in_disk(a, "Moebius parameter a");
    return make(model::Moebius{a});
}

AnalyticFunction AnalyticFunction::kernel(cplx zeta, double p, double alpha) {
    require_in_disk(zeta, "kernel point zeta");
    if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("func_model: kernel exponent p must be > 0");
    if (!(alpha > -1.0) || !std::isfinite(alpha)) throw DomainError("func_model: kernel weight alpha must be > -1");
    return make(model::Kernel{zeta, p, alpha, 2.0 * (alpha + 2.0) / p});
}

AnalyticFunction AnalyticFunction::power_kernel(cplx zeta, double exponent) {
    require_in_disk(zeta, "kernel point zeta");
    if (!(exponent > 0.0) || !std::isfinite(exponent)) throw DomainError("func_model: kernel exponent must be > 0");
    // Stored as the (p, alpha = 0) kernel with the same exponent.
    return make(model::Kernel{zeta, 4.0 / exponent, 0.0, exponent});
}

AnalyticFunction AnalyticFunction::log_one_sided(double scale) {
    require_finite(scale, "log scale");
    return make(model::LogOneSided{scale});
}

AnalyticFunction AnalyticFunction::log_two_sided(double scale) {
    require_finite(scale, "log scale");
    return make(model::LogTwoSided{scale});
}

AnalyticFunction AnalyticFunction::extremal_f0(cplx slope, cplx offset) {
    require_finite(slope, "slope");
    require_finite(offset, "offset");
    return make(model::ExtremalF0{slope, offset});
}

AnalyticFunction AnalyticFunction::extremal_fzeta(cplx gamma, cplx delta, cplx zeta) {
    require_in_disk(zeta, "f_zeta point zeta");
    if (zeta == 0.0) throw DomainError("func_model: f_zeta needs 0 < |zeta| < 1");
    require_finite(gamma, "gamma");
    require_finite(delta, "delta");
    return make(model::ExtremalFzeta{gamma, delta, zeta});
}

AnalyticFunction AnalyticFunction::monomial(int n, cplx c) {
    if (n < 0) throw ArgumentError("func_model: monomial degree must be >= 0");
    require_finite(c, "monomial coefficient");
    return make(model::Monomial{n, c});
}

AnalyticFunction AnalyticFunction::atomic_b1(std::vector<model::Atom> atoms) {
    for (const auto& atom : atoms) {
        require_in_disk(atom.a, "atom point a");
        require_finite(atom.b, "atom weight b");
    }
    return make(model::AtomicB1{std::move(atoms)});
}

AnalyticFunction AnalyticFunction::sum(std::vector<AnalyticFunction> terms) { return make(model::Sum{std::move(terms)}); }

AnalyticFunction AnalyticFunction::affine(const AnalyticFunction& base, cplx scale, cplx shift) {
    require_finite(scale, "affine scale");
    require_finite(shift, "affine shift");
    return make(model::Affine{base.node(), scale, shift});
}

AnalyticFunction AnalyticFunction::derivative(const AnalyticFunction& base) { return make(model::Derivative{base.node()}); }

AnalyticFunction AnalyticFunction::moebius_shift(const AnalyticFunction& base, cplx a) {
    require_in_disk(a, "shift point a");
    return make(model::MoebiusShift{base.node(), a});
}

const model::Variant& AnalyticFunction::model() const { return node_->value; }

std::string AnalyticFunction::kind() const {
    static constexpr const char* names[] = {"taylor", "moebius", "kernel", "log1",  "log2",
                                            "f0",     "fzeta",   "mono",   "b1",    "sum",
                                            "affine", "derivative", "moebius_shift"};
    return names[model().index()];
}

cplx AnalyticFunction::derivative_at(cplx z, int k) const { return derivative_impl(model(), z, k); }

std::vector<double> AnalyticFunction::singular_directions() const {
    std::vector<double> out;
    for (const cplx p : singular_points(model())) {
        if (std::abs(p) - 1.0 < kNearBoundary) out.push_back(std::arg(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-13; }),
              out.end());
    return out;
}

double AnalyticFunction::boundary_distance() const {
    double d = std::numeric_limits<double>::infinity();
    for (const cplx p : singular_points(model())) d = std::min(d, std::max(0.0, std::abs(p) - 1.0));
    return d;
}

bool AnalyticFunction::is_polynomial() const { return polynomial_degree() >= 0; }

int AnalyticFunction::polynomial_degree() const {
    return std::visit(
        overloaded{
            [](const model::Taylor& t) { return static_cast<int>(t.series.degree()); },
            [](const model::ExtremalF0&) { return 1; },
            [](const model::Monomial& m) { return m.n; },
            [](const model::Sum& s) {
                int deg = 0;
                for (const auto& t : s.terms) {
                    const int d = t.polynomial_degree();
                    if (d < 0) return -1;
                    deg = std::max(deg, d);
                }
                return deg;
            },
            [](const model::Affine& a) { return wrap(a.base).polynomial_degree(); },
            [](const model::Derivative& d) {
                const int deg = wrap(d.base).polynomial_degree();
                return deg < 0 ? -1 : std::max(0, deg - 1);
            },
            [](const auto&) { return -1; },
        },
        model());
}

std::vector<cplx> AnalyticFunction::coefficients(std::size_t N) const {
    std::vector<cplx> c(N + 1, cplx{0.0, 0.0});
    std::visit(
        overloaded{
            [&](const model::Taylor& t) {
                const auto src = t.series.coefficients();
                for (std::size_t n = 0; n <= N && n < src.size(); ++n) c[n] = src[n];
            },
            [&](const model::Moebius& mb) {
                const cplx ac = std::conj(mb.a);
                c[0] = mb.a;
                cplx pw{1.0, 0.0};
                for (std::size_t n = 1; n <= N; ++n) {
                    c[n] = (std::norm(mb.a) - 1.0) * pw;
                    pw *= ac;
                }
            },
            [&](const model::Kernel& kr) {
                const cplx zc = std::conj(kr.zeta);
                c[0] = 1.0;
                for (std::size_t n = 1; n <= N; ++n) c[n] = c[n - 1] * zc * ((kr.exponent + double(n) - 1.0) / double(n));
            },
            [&](const model::LogOneSided& l) {
                for (std::size_t n = 1; n <= N; ++n) c[n] = -l.scale / double(n);
            },
            [&](const model::LogTwoSided& l) {
                for (std::size_t n = 1; n <= N; n += 2) c[n] = 2.0 * l.scale / double(n);
            },
            [&](const model::ExtremalF0& f) {
                c[0] = f.offset;
                if (N >= 1) c[1] = f.slope;
            },
            [&](const model::ExtremalFzeta& f) {
                const cplx zc = std::conj(f.zeta);
                const double mass = 1.0 - std::norm(f.zeta);
                c[0] = f.gamma * mass / zc + f.delta;
                cplx pw{1.0, 0.0};
                for (std::size_t n = 1; n <= N; ++n) {
                    c[n] = f.gamma * mass * pw;
                    pw *= zc;
                }
            },
            [&](const model::Monomial& m) {
                if (static_cast<std::size_t>(m.n) <= N) c[m.n] = m.c;
            },
            [&](const model::AtomicB1& b) {
                for (const auto& atom : b.atoms) {
                    const auto ca = AnalyticFunction::moebius(atom.a).coefficients(N);
                    for (std::size_t n = 0; n <= N; ++n) c[n] += atom.b * ca[n];
                }
            },
            [&](const model::Sum& s) {
                for (const auto& t : s.terms) {
                    const auto ct = t.coefficients(N);
                    for (std::size_t n = 0; n <= N; ++n) c[n] += ct[n];
                }
            },
            [&](const model::Affine& a) {
                const auto cb = wrap(a.base).coefficients(N);
                for (std::size_t n = 0; n <= N; ++n) c[n] = a.scale * cb[n];
                c[0] += a.shift;
            },
            [&](const model::Derivative& d) {
                const auto cb = wrap(d.base).coefficients(N + 1);
                for (std::size_t n = 0; n <= N; ++n) c[n] = double(n + 1) * cb[n + 1];
            },
            [&](const model::MoebiusShift&) {
                // No closed recursion: Cauchy integral on an interior circle, trapezoid rule.
                const double rho = std::max(0.5, 1.0 - 1.0 / double(N + 1));
                std::size_t M = 64;
                while (M < 8 * (N + 1)) M *= 2;
                std::vector<cplx> samples(M);
                for (std::size_t j = 0; j < M; ++j)
                    samples[j] = derivative_at(std::polar(rho, 2.0 * kPi * double(j) / double(M)), 0);
                for (std::size_t n = 0; n <= N; ++n) {
                    cplx acc{0.0, 0.0};
                    for (std::size_t j = 0; j < M; ++j)
                        acc += samples[j] * std::polar(1.0, -2.0 * kPi * double((j * n) % M) / double(M));
                    c[n] = acc / double(M) / std::pow(rho, double(n));
                }
            },
        },
        model());
    return c;
}

// ---------------------------------------------------------------------------
// Free operations

cplx eval(const AnalyticFunction& f, cplx z, int order) {
    if (order < 0 || order > 2) throw ArgumentError("func_model: eval order must be 0, 1 or 2");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(std::abs(z) < 1.0)) {
        throw DomainError("func_model: eval needs |z| < 1");
    }
    return f.derivative_at(z, order);
}

TaylorSeries taylor_coefficients(const AnalyticFunction& f, int N) {
    if (N < 0 || N > 4096) throw ArgumentError("func_model: taylor_coefficients needs 0 <= N <= 4096");
    return TaylorSeries(f.coefficients(static_cast<std::size_t>(N)));
}

namespace {

constexpr int kBlochRadii = 256;
constexpr int kBlochAngles = 512;
constexpr int kBlochRounds = 40;
constexpr int kBlochStarts = 32;
// Closer to the circle, rounding in 1 - z dominates the boundary-singular models.
constexpr double kMinOneMinusR = 1e-8;

// |f'(z)| (1 - |z|^2) with the radius given through s = log(1 - r).
double bloch_quantity(const AnalyticFunction& f, double s, double t) {
    const double one_minus_r = std::exp(s);
    const double r = 1.0 - one_minus_r;
    const cplx z = std::polar(r, t);
    return std::abs(f.derivative_at(z, 1)) * one_minus_r * (1.0 + r);
}

template <class F>
double golden_max(F&& g, double lo, double hi, double tol, double& arg) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double g1 = g(x1), g2 = g(x2);
    while (b - a > tol) {
        if (g1 < g2) {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + inv_phi * (b - a);
            g2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - inv_phi * (b - a);
            g1 = g(x1);
        }
    }
    if (g1 >= g2) {
        arg = x1;
        return g1;
    }
    arg = x2;
    return g2;
}

}  // namespace

BlochSupremum bloch_supremum_numeric(const AnalyticFunction& f) {
    // Radii as s = log(1 - r): Chebyshev-spaced r = sin(theta), clustered toward r = 1,
    // plus a geometric ladder down to the evaluation cutoff.
    std::vector<double> s_grid;
    s_grid.push_back(0.0);
    for (int i = 1; i < kBlochRadii; ++i) {
        const double half = 0.25 * kPi * (1.0 - double(i) / kBlochRadii);
        s_grid.push_back(std::log(2.0 * std::sin(half) * std::sin(half)));
    }
    for (int e = 5; e <= 8; ++e) s_grid.push_back(std::log(std::pow(10.0, -e)));
    std::sort(s_grid.begin(), s_grid.end(), std::greater<>());
    s_grid.erase(std::unique(s_grid.begin(), s_grid.end()), s_grid.end());

    std::vector<double> t_grid;
    for (int j = 0; j < kBlochAngles; ++j) t_grid.push_back(-kPi + 2.0 * kPi * double(j) / kBlochAngles);
    for (double d : f.singular_directions()) t_grid.push_back(d);
    std::sort(t_grid.begin(), t_grid.end());

    struct Cell {
        double value;
        std::size_t i, j;
    };
    const std::size_t ni = s_grid.size(), nj = t_grid.size();
    std::vector<double> grid(ni * nj);
    for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t j = 0; j < nj; ++j) grid[i * nj + j] = bloch_quantity(f, s_grid[i], t_grid[j]);

    // Starts are discrete local maxima, so near-equal peaks far apart all get refined.
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < ni; ++i) {
        for (std::size_t j = 0; j < nj; ++j) {
            const double v = grid[i * nj + j];
            bool peak = true;
            for (int di = -1; di <= 1 && peak; ++di) {
                if ((di < 0 && i == 0) || (di > 0 && i + 1 == ni)) continue;
                for (int dj = -1; dj <= 1; ++dj) {
                    const std::size_t jj = dj < 0 ? (j + nj - 1) % nj : (j + static_cast<std::size_t>(dj)) % nj;
                    if (grid[(i + di) * nj + jj] > v) {
                        peak = false;
                        break;
                    }
                }
            }
            if (peak) cells.push_back({v, i, j});
        }
    }
    if (cells.empty()) cells.push_back({grid[0], 0, 0});

    const std::size_t starts = std::min<std::size_t>(kBlochStarts, cells.size());
    std::partial_sort(cells.begin(), cells.begin() + starts, cells.end(),
                      [](const Cell& a, const Cell& b) { return a.value > b.value; });

    BlochSupremum best{cells.front().value, std::polar(1.0 - std::exp(s_grid[cells.front().i]), t_grid[cells.front().j])};
    const double s_min = std::log(kMinOneMinusR);
    for (std::size_t c = 0; c < starts; ++c) {
        const auto [v0, i, j] = cells[c];
        double s = s_grid[i], t = t_grid[j];
        double ds = std::max(std::abs(s_grid[std::min(i + 1, s_grid.size() - 1)] - s),
                             std::abs(s_grid[i > 0 ? i - 1 : 0] - s));
        double dt = 2.0 * kPi / kBlochAngles;
        double value = v0;
        for (int round = 0; round < kBlochRounds; ++round) {
            const double before = value;
            double s_new = s, t_new = t;
            const double lo = std::max(s_min, s - ds), hi = std::min(0.0, s + ds);
            const double vs = golden_max([&](double x) { return bloch_quantity(f, x, t); }, lo, hi, kBlochRefineTol, s_new);
            if (vs > value) {
                value = vs;
                s = s_new;
            }
            const double vt = golden_max([&](double x) { return bloch_quantity(f, s, x); }, t - dt, t + dt,
                                         kBlochRefineTol, t_new);
            if (vt > value) {
                value = vt;
                t = t_new;
            }
            const double gain = std::max(vs, vt) - before;
            if (round >= 3 && gain <= 1e-15 * value) break;
            ds *= 0.7;
            dt *= 0.7;
        }
        if (value > best.value) best = {value, std::polar(1.0 - std::exp(s), t)};
    }
    return best;
}

double bloch_seminorm(const AnalyticFunction& f, BlochMode mode) {
    if (mode == BlochMode::closed_form) {
        auto v = closed_form_seminorm(f.model());
        if (!v) throw UnsupportedError("func_model: no closed-form Bloch seminorm for model '" + f.kind() + "'");
        return *v;
    }
    return bloch_supremum_numeric(f).value;
}

double bloch_seminorm(const AnalyticFunction& f) {
    if (auto v = closed_form_seminorm(f.model())) return *v;
    return bloch_supremum_numeric(f).value;
}

double bloch_norm(const AnalyticFunction& f) { return std::abs(f.derivative_at(cplx{0.0, 0.0}, 0)) + bloch_seminorm(f); }

AnalyticFunction normalize_bloch(const AnalyticFunction& f) {
    const double rho = bloch_seminorm(f);
    if (!(rho > 1e-14)) throw DegenerateInputError("func_model: cannot normalize a function with zero Bloch seminorm");
    const cplx f0 = f.derivative_at(cplx{0.0, 0.0}, 0);
    return std::visit(
        overloaded{
            [&](const model::Monomial& m) { return AnalyticFunction::monomial(m.n, m.c / rho); },
            [&](const model::Taylor& t) {
                std::vector<cplx> c(t.series.coefficients().begin(), t.series.coefficients().end());
                c[0] = 0.0;
                for (auto& x : c) x /= rho;
                return AnalyticFunction::taylor(std::move(c));
            },
            [&](const model::LogOneSided& l) { return AnalyticFunction::log_one_sided(l.scale / rho); },
            [&](const model::LogTwoSided& l) { return AnalyticFunction::log_two_sided(l.scale / rho); },
            [&](const model::ExtremalF0& g) { return AnalyticFunction::extremal_f0(g.slope / rho, 0.0); },
            [&](const model::ExtremalFzeta& g) {
                const cplx pole_part = g.gamma * (1.0 - std::norm(g.zeta)) / std::conj(g.zeta);
                return AnalyticFunction::extremal_fzeta(g.gamma / rho, -pole_part / rho, g.zeta);
            },
            [&](const auto&) { return AnalyticFunction::affine(f, 1.0 / rho, -f0 / rho); },
        },
        f.model());
}

}  // namespace bergman
