#include "bergman/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "bergman/errors.hpp"
#include "bergman/special_fn.hpp"

namespace bergman {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinT = 1e-15;  // no node closer than this to the unit circle
constexpr int kMaxLevels = 50;
constexpr int kFinalNodes = 32;

// Neumaier summation; results do not depend on how many terms came before in
// any way that the naive sum would amplify.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

template <class T>
struct Acc;

template <>
struct Acc<double> {
    Accumulator a;
    void add(double x) { a.add(x); }
    double value() const { return a.value(); }
};

template <>
struct Acc<cplx> {
    Accumulator re, im;
    void add(cplx x) {
        re.add(x.real());
        im.add(x.imag());
    }
    cplx value() const { return {re.value(), im.value()}; }
};

double magnitude(double x) { return std::abs(x); }
double magnitude(cplx x) { return std::abs(x); }

// ---------------------------------------------------------------------------
// Angular rules

struct Arc {
    double start;
    double length;
    bool periodized;
    int n;
};

// Sidi-type sin^6 map of [0, 1] onto itself; psi' vanishes to sixth order at both ends.
double psi(double u) {
    const double s = kTwoPi * u;
    return (s - 1.5 * std::sin(s) + 0.3 * std::sin(2.0 * s) - std::sin(3.0 * s) / 30.0) / kTwoPi;
}

double psi_prime(double u) {
    const double h = std::sin(kPi * u);
    const double h3 = h * h * h;
    return 3.2 * h3 * h3;
}

std::vector<Arc> make_arcs(const std::vector<double>& directions, int n_total) {
    if (directions.empty()) return {Arc{0.0, kTwoPi, false, n_total}};
    std::vector<double> d = directions;
    std::sort(d.begin(), d.end());
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double a = d[i];
        const double b = (i + 1 < d.size()) ? d[i + 1] : d.front() + kTwoPi;
        const double len = b - a;
        if (len <= 1e-12) continue;
        int n = static_cast<int>(std::lround(n_total * len / kTwoPi));
        n = std::max(16, n + (n % 2));
        arcs.push_back({a, len, true, n});
    }
    if (arcs.empty()) return {Arc{d.front(), kTwoPi, true, n_total}};
    return arcs;
}

template <class T>
struct AngularMean {
    T mean{};
    T previous{};
    double abs_mean = 0.0;
    bool converged = false;
};

// Nested trapezoid on each arc; every doubling adds the midpoints only.
template <class T, class G>
AngularMean<T> angular_mean(G&& g, const std::vector<Arc>& arcs, int max_refinements, double tol,
                            double abs_floor = 0.0) {
    const std::size_t na = arcs.size();
    std::vector<Acc<T>> sums(na);
    std::vector<Accumulator> abs_sums(na);
    std::vector<int> count(na);

    auto visit = [&](std::size_t i, double u) {
        const Arc& arc = arcs[i];
        if (arc.periodized) {
            const double w = psi_prime(u);
            if (w == 0.0) return;
            const T v = g(arc.start + arc.length * psi(u));
            sums[i].add(w * v);
            abs_sums[i].add(w * magnitude(v));
        } else {
            const T v = g(arc.start + arc.length * u);
            sums[i].add(v);
            abs_sums[i].add(magnitude(v));
        }
    };
    auto combine = [&](T& mean, double& abs_mean) {
        Acc<T> m;
        Accumulator am;
        for (std::size_t i = 0; i < na; ++i) {
            const double scale = arcs[i].length / (kTwoPi * count[i]);
            m.add(scale * sums[i].value());
            am.add(scale * abs_sums[i].value());
        }
        mean = m.value();
        abs_mean = am.value();
    };

    for (std::size_t i = 0; i < na; ++i) {
        count[i] = arcs[i].n;
        for (int j = 0; j < arcs[i].n; ++j) visit(i, double(j) / arcs[i].n);
    }
    AngularMean<T> out;
    combine(out.mean, out.abs_mean);
    for (int level = 0; level < max_refinements; ++level) {
        for (std::size_t i = 0; i < na; ++i) {
            const int n = count[i];
            for (int j = 0; j < n; ++j) visit(i, (double(j) + 0.5) / n);
            count[i] = 2 * n;
        }
        out.previous = out.mean;
        combine(out.mean, out.abs_mean);
        if (magnitude(out.mean - out.previous) <= std::max(tol * out.abs_mean, abs_floor)) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gauss rules

GaussRule golub_welsch(int n, double a, double b) {
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        if (k == 0)
            diag(k) = (b - a) / (ab + 2.0);
        else
            diag(k) = (b * b - a * a) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double v;
        if (k == 1) {
            v = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            const double s = 2.0 * k + ab;
            v = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        sub(k - 1) = std::sqrt(v);
    }
    GaussRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + ln_beta(PositiveReal(a + 1.0), PositiveReal(b + 1.0)));
    if (n == 1) {
        rule.x[0] = diag(0);
        rule.w[0] = mu0;
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    for (int i = 0; i < n; ++i) {
        rule.x[i] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        rule.w[i] = mu0 * v0 * v0;
    }
    return rule;
}

std::mutex cache_mutex;

double one_minus(double x) { return 1.0 - x; }

// ---------------------------------------------------------------------------
// Radial rules

std::vector<RadialNode> build_bergman_rule(double alpha, int m, int levels, const std::vector<double>& breaks) {
    const GaussRule& leg = gauss_jacobi(m, 0.0, 0.0);
    // The last panel gets at most kFinalNodes nodes and its width does not depend
    // on m, so refinement compares rules over the same panel layout.
    const int mj = std::min(m, kFinalNodes);
    const GaussRule& jac = gauss_jacobi(mj, alpha, 0.0);

    // keep the closest node at least kMinT from the circle
    const GaussRule& widest = gauss_jacobi(kFinalNodes, alpha, 0.0);
    const double x_max = *std::max_element(widest.x.begin(), widest.x.end());
    while (levels > 1 && std::ldexp(1.0, -levels) * one_minus(x_max) / 2.0 < kMinT) --levels;

    std::vector<RadialNode> nodes;
    nodes.reserve(static_cast<std::size_t>(m) * (levels + 1));
    // panels [0, 1/2], [1/2, 3/4], ..., [1 - 2^-(levels-1), 1 - 2^-levels], in t = 1 - r
    const double h = std::ldexp(1.0, -levels);
    std::vector<double> edges{1.0};
    for (int k = 1; k <= levels; ++k) edges.push_back(std::ldexp(1.0, -k));
    for (double b : breaks) {
        const double tb = 1.0 - b;
        if (!(tb > h && tb < 1.0)) continue;
        auto it = std::lower_bound(edges.begin(), edges.end(), tb, std::greater<>());
        const double hi = *std::prev(it), lo = *it;
        const double gap = 1e-3 * (hi - lo);
        if (hi - tb > gap && tb - lo > gap) edges.insert(it, tb);
    }
    for (std::size_t k = 1; k < edges.size(); ++k) {
        const double left_t = edges[k - 1], right_t = edges[k];
        const double half = (left_t - right_t) / 2.0;
        for (int i = 0; i < m; ++i) {
            const double t = right_t + half * one_minus(leg.x[i]);
            const double r = 1.0 - t;
            const double u = t * (2.0 - t);
            nodes.push_back({r, t, (alpha + 1.0) * 2.0 * r * std::pow(u, alpha) * half * leg.w[i]});
        }
    }
    // final panel [1 - h, 1] with (1 - r)^alpha folded into the Jacobi weight
    const double scale = (alpha + 1.0) * std::pow(h / 2.0, alpha + 1.0);
    for (int i = 0; i < mj; ++i) {
        const double t = h * one_minus(jac.x[i]) / 2.0;
        const double r = 1.0 - t;
        nodes.push_back({r, t, scale * 2.0 * r * std::pow(1.0 + r, alpha) * jac.w[i]});
    }
    return nodes;
}

int initial_m(const QuadratureScheme& s) { return std::max(8, s.n_radial / 8); }

void check_alpha(double alpha) {
    if (!(alpha > -1.0) || !std::isfinite(alpha)) throw DomainError("quadrature: alpha must be > -1");
}

void check_p(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("quadrature: p must be > 0");
}

template <class T, class G>
DiskIntegral<T> integrate_disk_impl(G&& g, const DiskGeometry& geometry, const QuadratureScheme& scheme) {
    scheme.validate();
    check_alpha(scheme.alpha);
    const auto arcs = make_arcs(geometry.directions, scheme.n_angular);
    const double ang_tol = 0.25 * scheme.rel_tol;

    // Angular doubling stops at each radius once the change is small relative to
    // that circle or, after the first level, negligible against the whole integral.
    double floor = 0.0;
    auto level = [&](int m, bool& ang_ok, int max_ref) {
        const auto rule = bergman_radial_rule(scheme.alpha, m, geometry.levels, geometry.radii);
        Acc<T> total;
        Accumulator total_abs, ang_err;
        for (const auto& node : rule) {
            const double u = node.t * (2.0 - node.t);
            auto at = [&](double theta) { return g(DiskPoint{std::polar(node.r, theta), node.r, node.t, u}); };
            const auto am = angular_mean<T>(at, arcs, max_ref, ang_tol, floor);
            total.add(node.w * am.mean);
            total_abs.add(node.w * am.abs_mean);
            if (!am.converged) ang_err.add(node.w * magnitude(am.mean - am.previous));
        }
        ang_ok = ang_err.value() <= ang_tol * total_abs.value();
        floor = ang_tol * total_abs.value();
        return std::pair<T, double>{total.value(), total_abs.value()};
    };

    int m = initial_m(scheme);
    bool ang_ok = false;
    level(m, ang_ok, 0);  // sets the scale for the floor
    auto [prev, prev_abs] = level(m, ang_ok, scheme.max_refinements);
    DiskIntegral<T> out;
    out.value = prev;
    out.abs_value = prev_abs;
    for (int ref = 0; ref < scheme.max_refinements; ++ref) {
        m *= 2;
        auto [cur, cur_abs] = level(m, ang_ok, scheme.max_refinements);
        out.value = cur;
        out.abs_value = cur_abs;
        out.abs_error = magnitude(cur - prev);
        out.radial_nodes = static_cast<int>(bergman_radial_rule(scheme.alpha, m, geometry.levels, geometry.radii).size());
        if (out.abs_error <= scheme.rel_tol * cur_abs) {
            out.converged = ang_ok;
            return out;
        }
        prev = cur;
    }
    return out;
}

double safe_pow(double x, double e) { return x == 0.0 ? (e > 0.0 ? 0.0 : (e == 0.0 ? 1.0 : HUGE_VAL)) : std::pow(x, e); }

}  // namespace

// ---------------------------------------------------------------------------

void QuadratureScheme::validate() const {
    if (n_radial < 8) throw ArgumentError("quadrature: n_radial must be >= 8");
    if (n_angular < 16 || n_angular % 2 != 0) throw ArgumentError("quadrature: n_angular must be even and >= 16");
    if (max_refinements < 0) throw ArgumentError("quadrature: max_refinements must be >= 0");
    if (!(rel_tol > 0.0)) throw ArgumentError("quadrature: rel_tol must be > 0");
}

const GaussRule& gauss_jacobi(int n, double a, double b) {
    if (n < 1) throw ArgumentError("quadrature: Gauss rule needs n >= 1");
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("quadrature: Jacobi exponents must be > -1");
    static std::map<std::tuple<int, double, double>, GaussRule> cache;
    std::lock_guard lock(cache_mutex);
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, golub_welsch(n, a, b)).first;
    return it->second;
}

std::vector<RadialNode> bergman_radial_rule(double alpha, int m, int levels, std::span<const double> breaks) {
    check_alpha(alpha);
    if (m < 1 || levels < 1) throw ArgumentError("quadrature: radial rule needs m >= 1 and levels >= 1");
    using Key = std::tuple<double, int, int, std::vector<double>>;
    static std::map<Key, std::vector<RadialNode>> cache;
    std::vector<double> b(breaks.begin(), breaks.end());
    std::sort(b.begin(), b.end());
    Key key{alpha, m, levels, b};
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto nodes = build_bergman_rule(alpha, m, levels, b);
    std::lock_guard lock(cache_mutex);
    if (cache.size() > 4096) cache.clear();
    return cache.emplace(std::move(key), std::move(nodes)).first->second;
}

namespace {

std::vector<cplx> interior_zeros(const AnalyticFunction& f) {
    std::vector<cplx> out;
    if (const auto* m = std::get_if<model::Moebius>(&f.model())) {
        out.push_back(m->a);
        return out;
    }
    if (!f.is_polynomial()) return out;
    const int deg = f.polynomial_degree();
    if (deg < 1) return out;
    auto c = f.coefficients(deg);
    double big = 0.0;
    for (const auto& x : c) big = std::max(big, std::abs(x));
    int n = deg;
    while (n > 0 && std::abs(c[n]) <= 1e-14 * big) --n;
    if (n < 1) return out;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    for (int i = 0; i < n; ++i) {
        const cplx z = solver.eigenvalues()(i);
        if (std::abs(z) < 1.0) out.push_back(z);
    }
    return out;
}

}  // namespace

std::vector<AngularNode> periodized_circle_rule(std::span<const double> directions, int n_total) {
    if (n_total < 2) throw ArgumentError("quadrature: circle rule needs at least 2 nodes");
    std::vector<AngularNode> out;
    for (const Arc& arc : make_arcs(std::vector<double>(directions.begin(), directions.end()), n_total)) {
        for (int j = 0; j < arc.n; ++j) {
            const double u = double(j) / arc.n;
            const double scale = arc.length / (kTwoPi * arc.n);
            if (arc.periodized) {
                const double w = psi_prime(u);
                if (w > 0.0) out.push_back({arc.start + arc.length * psi(u), scale * w});
            } else {
                out.push_back({arc.start + arc.length * u, scale});
            }
        }
    }
    return out;
}

DiskGeometry geometry_for(const AnalyticFunction& f, double p) {
    DiskGeometry geo;
    geo.directions = f.singular_directions();
    double scale;
    if (f.is_polynomial()) {
        scale = 1.0 / (std::max(1, f.polynomial_degree()) * std::max(1.0, p));
        geo.levels = static_cast<int>(std::ceil(std::log2(1.0 / scale))) + 2;
    } else {
        scale = f.boundary_distance();
        geo.levels = scale > 0.0 ? static_cast<int>(std::ceil(std::log2(1.0 / scale))) + 3 : kMaxLevels;
    }
    geo.levels = std::clamp(geo.levels, 4, kMaxLevels);
    const bool smooth = std::fmod(p, 2.0) == 0.0;
    if (!smooth) {
        for (const cplx z : interior_zeros(f)) {
            const double r = std::abs(z);
            if (r > 1e-6) {
                geo.radii.push_back(r);
                geo.directions.push_back(std::arg(z));
            }
        }
    }
    return geo;
}

template <class T>
DiskIntegral<T> integrate_disk(const std::function<T(const DiskPoint&)>& g, const DiskGeometry& geometry,
                               const QuadratureScheme& scheme) {
    return integrate_disk_impl<T>(g, geometry, scheme);
}

template DiskIntegral<double> integrate_disk<double>(const std::function<double(const DiskPoint&)>&,
                                                     const DiskGeometry&, const QuadratureScheme&);
template DiskIntegral<cplx> integrate_disk<cplx>(const std::function<cplx(const DiskPoint&)>&, const DiskGeometry&,
                                                 const QuadratureScheme&);

double circle_mean_pow(const AnalyticFunction& f, double p, double r, const QuadratureScheme& scheme) {
    check_p(p);
    scheme.validate();
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("circle_mean: r must lie in [0, 1)");
    const auto arcs = make_arcs(f.singular_directions(), scheme.n_angular);
    const auto am = angular_mean<double>(
        [&](double theta) { return safe_pow(std::abs(f.derivative_at(std::polar(r, theta), 0)), p); }, arcs,
        scheme.max_refinements, scheme.rel_tol);
    if (!am.converged) {
        throw ConvergenceError("circle_mean: angular doubling did not reach rel_tol", am.previous, am.mean);
    }
    return am.mean;
}

double circle_mean(const AnalyticFunction& f, double p, double r, const QuadratureScheme& scheme) {
    try {
        return std::pow(circle_mean_pow(f, p, r, scheme), 1.0 / p);
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(e.what(), std::pow(e.previous(), 1.0 / p), std::pow(e.last(), 1.0 / p));
    }
}

NormResult bergman_norm(const AnalyticFunction& f, double p, double alpha, const QuadratureScheme& scheme) {
    check_p(p);
    check_alpha(alpha);
    QuadratureScheme s = scheme;
    s.alpha = alpha;
    s.validate();
    // the p-th root divides the relative error by p; for p < 1 it multiplies it
    QuadratureScheme inner = s;
    inner.rel_tol = s.rel_tol * std::min(1.0, p);
    const auto geo = geometry_for(f, p);
    const auto res = integrate_disk_impl<double>(
        [&](const DiskPoint& pt) { return safe_pow(std::abs(f.derivative_at(pt.z, 0)), p); }, geo, inner);
    NormResult out;
    out.scheme_used = s;
    out.value = std::pow(res.value, 1.0 / p);
    out.abs_error_estimate = res.value > 0.0 ? out.value * res.abs_error / (p * res.value) : 0.0;
    out.converged = res.converged;
    if (!out.converged) {
        const double prev = std::pow(std::max(0.0, res.value - res.abs_error), 1.0 / p);
        throw ConvergenceError("bergman_norm: refinement did not reach rel_tol (p = " + std::to_string(p) +
                                   ", alpha = " + std::to_string(alpha) + ")",
                               prev, out.value);
    }
    return out;
}

cplx disk_moment(const AnalyticFunction& f, double p, double alpha, MomentKind kind, const QuadratureScheme& scheme) {
    check_p(p);
    check_alpha(alpha);
    if (kind == MomentKind::f_weighted && !(p > 1.0)) throw DomainError("disk_moment: f_weighted needs p > 1");
    QuadratureScheme s = scheme;
    s.alpha = alpha;
    const auto geo = geometry_for(f, p);
    DiskIntegral<cplx> res;
    if (kind == MomentKind::z_weighted) {
        res = integrate_disk_impl<cplx>(
            [&](const DiskPoint& pt) { return safe_pow(std::abs(f.derivative_at(pt.z, 0)), p) * pt.z; }, geo, s);
    } else {
        res = integrate_disk_impl<cplx>(
            [&](const DiskPoint& pt) {
                const cplx v = f.derivative_at(pt.z, 0);
                const double a = std::abs(v);
                return a == 0.0 ? cplx{0.0, 0.0} : std::pow(a, p - 2.0) * v;
            },
            geo, s);
    }
    if (!res.converged) {
        throw ConvergenceError("disk_moment: refinement did not reach rel_tol", std::abs(res.value) + res.abs_error,
                               std::abs(res.value));
    }
    return res.value;
}

HardySteinResult hardy_stein_rhs(const AnalyticFunction& f, double p, double r, const QuadratureScheme& scheme) {
    if (!(p > 1.0)) throw DomainError("hardy_stein_rhs: p must be > 1");
    if (!(r > 0.0 && r < 1.0)) throw DomainError("hardy_stein_rhs: r must lie in (0, 1)");
    scheme.validate();
    const auto arcs = make_arcs(f.singular_directions(), scheme.n_angular);
    constexpr int kPanels = 4;
    double min_abs = HUGE_VAL;
    auto level = [&](int m, bool& ok) {
        const GaussRule& leg = gauss_jacobi(m, 0.0, 0.0);
        Accumulator total;
        ok = true;
        const double width = r / kPanels;
        for (int k = 0; k < kPanels; ++k) {
            for (int i = 0; i < m; ++i) {
                const double rho = width * (k + (1.0 + leg.x[i]) / 2.0);
                const auto am = angular_mean<double>(
                    [&](double theta) {
                        const cplx z = std::polar(rho, theta);
                        const double a = std::abs(f.derivative_at(z, 0));
                        min_abs = std::min(min_abs, a);
                        const double d = std::abs(f.derivative_at(z, 1));
                        if (d == 0.0) return 0.0;
                        return d * d * safe_pow(a, p - 2.0);
                    },
                    arcs, scheme.max_refinements, 0.25 * scheme.rel_tol);
                ok = ok && am.converged;
                total.add(rho * am.mean * leg.w[i] * width / 2.0);
            }
        }
        return total.value();
    };
    int m = initial_m(scheme);
    bool ok = false;
    double prev = level(m, ok);
    for (int ref = 0; ref < scheme.max_refinements; ++ref) {
        m *= 2;
        const double cur = level(m, ok);
        if (std::abs(cur - prev) <= scheme.rel_tol * std::abs(cur) && ok) {
            return {p * p / r * cur, min_abs < 1e-8};
        }
        prev = cur;
    }
    throw ConvergenceError("hardy_stein_rhs: refinement did not reach rel_tol", p * p / r * prev, p * p / r * prev);
}

double m_alpha_integral(double alpha) {
    check_alpha(alpha);
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto integrand = [alpha](double t) {
        const double c = 2.0 * std::abs(std::cos(t));
        return alpha < 0.0 ? std::pow(c, alpha) : std::pow(std::max(0.0, c - 1.0), alpha);
    };
    return integrator.integrate(integrand, 2.0 * kPi / 3.0, kPi) / kPi;
}

namespace {

std::vector<double> sigma_breaks(std::span<const double> breakpoints) {
    std::vector<double> b{0.0};
    double last = 0.0;
    for (double x : breakpoints) {
        if (x > 0.0 && x < 1.0) {
            b.push_back(x);
            last = std::max(last, x);
        }
    }
    for (int k = 1; k <= 40 && 1.0 - std::ldexp(1.0, -k) < last; ++k) b.push_back(1.0 - std::ldexp(1.0, -k));
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

template <class H>
std::pair<double, double> sigma_sums(H&& h, double alpha, std::span<const double> breakpoints, int m) {
    check_alpha(alpha);
    const auto b = sigma_breaks(breakpoints);
    const GaussRule& leg = gauss_jacobi(m, 0.0, 0.0);
    const GaussRule& jac = gauss_jacobi(m, alpha, 0.0);
    Accumulator num, mass;
    for (std::size_t k = 0; k + 1 < b.size(); ++k) {
        const double a = b[k], c = b[k + 1];
        const double half = (c - a) / 2.0;
        for (int i = 0; i < m; ++i) {
            const double r = a + half * (1.0 + leg.x[i]);
            const double t = (1.0 - c) + half * (1.0 - leg.x[i]);
            const double w = 2.0 * std::pow(t * (1.0 + r), alpha) * half * leg.w[i];
            num.add(w * h(r));
            mass.add(w);
        }
    }
    const double a = b.back();
    const double len = 1.0 - a;
    for (int i = 0; i < m; ++i) {
        const double t = len * (1.0 - jac.x[i]) / 2.0;
        const double r = 1.0 - t;
        const double w = 2.0 * std::pow(len / 2.0, alpha + 1.0) * std::pow(1.0 + r, alpha) * jac.w[i];
        num.add(w * h(r));
        mass.add(w);
    }
    return {num.value(), mass.value()};
}

}  // namespace

double radial_expectation(const std::function<double(double)>& h, double alpha, std::span<const double> breakpoints,
                          int m) {
    const auto [num, mass] = sigma_sums(h, alpha, breakpoints, m);
    return num / mass;
}

double radial_sigma_mass(double alpha, std::span<const double> breakpoints, int m) {
    return sigma_sums([](double) { return 1.0; }, alpha, breakpoints, m).second;
}

}  // namespace bergman
