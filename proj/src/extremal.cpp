#include "bergman/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "bergman/bounds.hpp"
#include "bergman/csv.hpp"
#include "bergman/errors.hpp"

namespace bergman {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Grid sizes for the fast objective.
constexpr int kGridNodesPerPanel = 8;
constexpr int kDerivRadii = 40;
constexpr int kDerivAngles = 128;
constexpr double kDerivMinT = 1e-8;
constexpr int kRefineCells = 3;
constexpr double kInitialStep = 0.1;
constexpr int kRandomPolls = 8;
constexpr double kMaxShift = 0.75;
// Moves that gain less than this are rounding noise: log((1 + z) / (1 - z)) is
// invariant up to a constant under real automorphisms, so F is flat there.
constexpr double kPolishGain = 1e-10;
constexpr double kKernelZeta = 0.7;

// A point of the disk kept as (t = 1 - r, theta), with 1 - z and 1 + z formed
// without cancellation.
struct PolarPoint {
    double t;
    double theta;
    cplx z;
    cplx one_minus;
    cplx one_plus;
};

cplx one_minus_rotated(double t, double theta) {
    const double h = std::sin(theta / 2.0);
    return {2.0 * h * h + t * std::cos(theta), -(1.0 - t) * std::sin(theta)};
}

PolarPoint polar_point(double t, double theta) {
    return {t, theta, std::polar(1.0 - t, theta), one_minus_rotated(t, theta), one_minus_rotated(t, theta - kPi)};
}

// Parameters are (u, v, c_1, ..., c_N): K = N + 2 complex numbers.
int n_params(int n_coeffs) { return n_coeffs + 2; }

// Basis values at a point: log(1 - z), log((1 + z) / (1 - z)), z^n.
void basis_values(const PolarPoint& q, int n_coeffs, cplx* out) {
    const cplx lm = std::log(q.one_minus);
    out[0] = lm;
    out[1] = std::log(q.one_plus) - lm;
    cplx zn = 1.0;
    for (int n = 1; n <= n_coeffs; ++n) {
        zn *= q.z;
        out[1 + n] = zn;
    }
}

// Derivatives of the basis: -1/(1 - z), 2/(1 - z^2), n z^(n-1).
void basis_derivatives(const PolarPoint& q, int n_coeffs, cplx* out) {
    out[0] = -1.0 / q.one_minus;
    out[1] = 2.0 / (q.one_minus * q.one_plus);
    cplx zn = 1.0;
    for (int n = 1; n <= n_coeffs; ++n) {
        out[1 + n] = double(n) * zn;
        zn *= q.z;
    }
}

cplx derivative_at(const std::vector<cplx>& theta, const PolarPoint& q) {
    const int n_coeffs = static_cast<int>(theta.size()) - 2;
    cplx acc = 0.0;
    for (int n = n_coeffs; n >= 1; --n) acc = acc * q.z + double(n) * theta[1 + n];
    return acc - theta[0] / q.one_minus + 2.0 * theta[1] / (q.one_minus * q.one_plus);
}

cplx value_at(const std::vector<cplx>& theta, cplx z) {
    const int n_coeffs = static_cast<int>(theta.size()) - 2;
    cplx acc = 0.0;
    for (int n = n_coeffs; n >= 1; --n) acc = (acc + theta[1 + n]) * z;
    const cplx lm = std::log(1.0 - z);
    return acc + theta[0] * lm + theta[1] * (std::log(1.0 + z) - lm);
}

// Radial reach for |f|^p with log singularities: the mass sits near
// log(1/t) ~ p / (alpha + 2) with spread sqrt(p) / (alpha + 2).
int grid_levels(double alpha, double p) {
    const double depth = (p + 6.0 * std::sqrt(p)) / (alpha + 2.0) + 5.0;
    return std::clamp(static_cast<int>(std::ceil(depth / std::numbers::ln2)), 6, 50);
}

int grid_angles(double p) {
    const int n = std::min(512, 64 + static_cast<int>(std::ceil(8.0 * p)));
    return n + (n % 2);
}

struct Grid {
    std::vector<double> w;
    std::vector<PolarPoint> pts;
    Eigen::MatrixXcd basis;  // rows: points, columns: parameters
};

Grid make_value_grid(double alpha, double p, int n_coeffs) {
    Grid g;
    const auto radial = bergman_radial_rule(alpha, kGridNodesPerPanel, grid_levels(alpha, p));
    const std::vector<double> dirs{0.0, kPi};
    const auto angular = periodized_circle_rule(dirs, grid_angles(p));
    const int K = n_params(n_coeffs);
    g.basis.resize(static_cast<Eigen::Index>(radial.size() * angular.size()), K);
    std::vector<cplx> row(K);
    for (const auto& rn : radial) {
        for (const auto& an : angular) {
            const auto q = polar_point(rn.t, an.theta);
            basis_values(q, n_coeffs, row.data());
            const auto i = static_cast<Eigen::Index>(g.pts.size());
            for (int k = 0; k < K; ++k) g.basis(i, k) = row[k];
            g.pts.push_back(q);
            g.w.push_back(rn.w * an.w);
        }
    }
    return g;
}

Grid make_derivative_grid(int n_coeffs) {
    Grid g;
    std::vector<double> ts;
    for (int i = 0; i < kDerivRadii; ++i) {
        // Chebyshev-like radii in (0, 1 - 1e-3), denser toward the circle
        const double x = std::sin(0.5 * kPi * (i + 0.5) / kDerivRadii);
        ts.push_back(1.0 - x * (1.0 - 1e-3));
    }
    for (int e = 3; e <= 8; ++e) ts.push_back(std::pow(10.0, -e));
    const int K = n_params(n_coeffs);
    g.basis.resize(static_cast<Eigen::Index>(ts.size()) * kDerivAngles, K);
    std::vector<cplx> row(K);
    for (double t : ts) {
        for (int j = 0; j < kDerivAngles; ++j) {
            const auto q = polar_point(t, 2.0 * kPi * j / kDerivAngles);
            basis_derivatives(q, n_coeffs, row.data());
            const auto i = static_cast<Eigen::Index>(g.pts.size());
            for (int k = 0; k < K; ++k) g.basis(i, k) = row[k];
            g.pts.push_back(q);
            g.w.push_back(t * (2.0 - t));  // 1 - |z|^2
        }
    }
    return g;
}

double bloch_quantity(const std::vector<cplx>& theta, double s, double th) {
    const double t = std::exp(s);
    return t * (2.0 - t) * std::abs(derivative_at(theta, polar_point(t, th)));
}

// Compass refinement of (1 - |z|^2)|f'| around a grid cell, in (log t, theta).
double refine_bloch(const std::vector<cplx>& theta, double t0, double th0) {
    double s = std::log(t0), th = th0;
    double best = bloch_quantity(theta, s, th);
    double ds = 0.5, dth = kPi / kDerivAngles;
    const double s_min = std::log(kDerivMinT);
    for (int round = 0; round < 14; ++round) {
        bool moved = true;
        while (moved) {
            moved = false;
            const double cand[4][2] = {{s + ds, th}, {s - ds, th}, {s, th + dth}, {s, th - dth}};
            for (const auto& c : cand) {
                const double cs = std::clamp(c[0], s_min, -1e-12);
                const double v = bloch_quantity(theta, cs, c[1]);
                if (v > best) {
                    best = v;
                    s = cs;
                    th = c[1];
                    moved = true;
                    break;
                }
            }
        }
        ds /= 2.0;
        dth /= 2.0;
    }
    return best;
}

// Objective J = ||f||_grid / rho_fast, with f values held per grid point so a
// single-coordinate move costs one column update.
class Objective {
public:
    Objective(const Grid& values, const Grid& derivs, double p) : vg_(values), dg_(derivs), p_(p) {}

    void set(const std::vector<cplx>& theta) {
        theta_ = theta;
        const Eigen::Map<const Eigen::VectorXcd> th(theta_.data(), static_cast<Eigen::Index>(theta_.size()));
        f_ = vg_.basis * th;
        d_ = dg_.basis * th;
    }

    const std::vector<cplx>& theta() const { return theta_; }

    // Value after theta_k += delta, without committing.
    double trial(int k, cplx delta) {
        ++evals_;
        tmp_theta_ = theta_;
        tmp_theta_[k] += delta;
        tmp_f_ = f_ + delta * vg_.basis.col(k);
        tmp_d_ = d_ + delta * dg_.basis.col(k);
        return value(tmp_theta_, tmp_f_, tmp_d_);
    }

    // Value after theta += delta for a full direction.
    double trial(const Eigen::VectorXcd& delta) {
        ++evals_;
        tmp_theta_ = theta_;
        for (Eigen::Index k = 0; k < delta.size(); ++k) tmp_theta_[static_cast<std::size_t>(k)] += delta(k);
        tmp_f_ = f_ + vg_.basis * delta;
        tmp_d_ = d_ + dg_.basis * delta;
        return value(tmp_theta_, tmp_f_, tmp_d_);
    }

    void commit() {
        theta_.swap(tmp_theta_);
        f_.swap(tmp_f_);
        d_.swap(tmp_d_);
    }

    double current() {
        return value(theta_, f_, d_);
    }

    double rho() const { return rho_of(theta_, d_); }
    double norm() const { return norm_of(f_); }
    const Eigen::VectorXcd& f_values() const { return f_; }
    int evaluations() const { return evals_; }
    void reset_evaluations() { evals_ = 0; }

private:
    double norm_of(const Eigen::VectorXcd& f) const {
        double s = 0.0, c = 0.0;
        const double half = p_ / 2.0;
        for (Eigen::Index i = 0; i < f.size(); ++i) {
            const double a = std::norm(f(i));
            const double x = a == 0.0 ? 0.0 : vg_.w[static_cast<std::size_t>(i)] * std::pow(a, half);
            const double y = x - c;
            const double t = s + y;
            c = (t - s) - y;
            s = t;
        }
        return std::pow(s, 1.0 / p_);
    }

    double rho_of(const std::vector<cplx>& theta, const Eigen::VectorXcd& d) const {
        std::vector<std::pair<double, Eigen::Index>> top;
        for (Eigen::Index i = 0; i < d.size(); ++i) {
            const double v = dg_.w[static_cast<std::size_t>(i)] * std::abs(d(i));
            if (top.size() < kRefineCells) {
                top.emplace_back(v, i);
                std::sort(top.begin(), top.end(), std::greater<>());
            } else if (v > top.back().first) {
                top.back() = {v, i};
                std::sort(top.begin(), top.end(), std::greater<>());
            }
        }
        double best = std::max(2.0 * std::abs(theta[1] - theta[0]), 2.0 * std::abs(theta[1]));
        for (const auto& [v, i] : top) {
            const auto& q = dg_.pts[static_cast<std::size_t>(i)];
            best = std::max(best, refine_bloch(theta, q.t, q.theta));
        }
        return best;
    }

    double value(const std::vector<cplx>& theta, const Eigen::VectorXcd& f, const Eigen::VectorXcd& d) const {
        const double rho = rho_of(theta, d);
        if (!(rho > 1e-300)) return 0.0;
        return norm_of(f) / rho;
    }

    const Grid& vg_;
    const Grid& dg_;
    double p_;
    std::vector<cplx> theta_, tmp_theta_;
    Eigen::VectorXcd f_, d_, tmp_f_, tmp_d_;
    int evals_ = 0;
};

std::vector<cplx> scaled(std::vector<cplx> theta, double s) {
    for (auto& x : theta) x *= s;
    return theta;
}

struct LocalResult {
    std::vector<cplx> theta;
    double value;
    int evaluations;
};

// Opportunistic compass search on real and imaginary parts. When no coordinate
// move helps, a few random directions are polled before the step is halved: the
// denominator is a supremum, and at its kinks every coordinate move can fail.
// The iterate is rescaled to rho = 1 after each sweep that moved, so step sizes
// keep their meaning.
LocalResult compass_search(Objective& obj, std::vector<cplx> theta, const SearchConfig& cfg, std::mt19937_64& rng) {
    obj.reset_evaluations();
    const double rho0 = [&] {
        obj.set(theta);
        return obj.rho();
    }();
    if (!(rho0 > 1e-300)) throw DegenerateInputError("search: initial candidate is constant");
    obj.set(scaled(theta, 1.0 / rho0));
    double best = obj.current();
    const int K = static_cast<int>(obj.theta().size());
    std::normal_distribution<double> N(0.0, 1.0);
    double step = kInitialStep;
    while (step > cfg.step_tol && obj.evaluations() < cfg.max_iters) {
        bool moved = false;
        for (int k = 0; k < K && obj.evaluations() < cfg.max_iters; ++k) {
            for (const cplx dir : {cplx{1.0, 0.0}, cplx{-1.0, 0.0}, cplx{0.0, 1.0}, cplx{0.0, -1.0}}) {
                if (obj.evaluations() >= cfg.max_iters) break;
                const double v = obj.trial(k, step * dir);
                if (v > best) {
                    obj.commit();
                    best = v;
                    moved = true;
                    break;
                }
            }
        }
        for (int r = 0; !moved && r < kRandomPolls && obj.evaluations() < cfg.max_iters; ++r) {
            Eigen::VectorXcd d(K);
            for (int k = 0; k < K; ++k) d(k) = cplx{N(rng), N(rng)};
            d *= step / d.norm();
            for (const double sign : {1.0, -1.0}) {
                const double v = obj.trial(sign * d);
                if (v > best) {
                    obj.commit();
                    best = v;
                    moved = true;
                    break;
                }
            }
        }
        if (moved) {
            const double rho = obj.rho();
            obj.set(scaled(obj.theta(), 1.0 / rho));
            best = obj.current();
        } else {
            step /= 2.0;
        }
    }
    return {obj.theta(), best, obj.evaluations()};
}

double pochhammer_ratio_step(double gamma_, int k) { return (gamma_ + k) / (k + 1.0); }

std::vector<std::pair<std::string, std::vector<cplx>>> initializations(double alpha, double p, const SearchConfig& cfg,
                                                                       const std::vector<cplx>* warm) {
    const int K = n_params(cfg.n_coeffs);
    std::vector<std::pair<std::string, std::vector<cplx>>> out;
    if (warm != nullptr && !warm->empty()) {
        std::vector<cplx> w(K, 0.0);
        std::copy_n(warm->begin(), std::min<std::size_t>(warm->size(), K), w.begin());
        out.emplace_back("warm_start", w);
    }
    std::vector<cplx> a(K, 0.0);
    a[0] = -0.5;
    out.emplace_back("log_one_sided", a);
    std::vector<cplx> b(K, 0.0);
    b[1] = 0.5;
    out.emplace_back("log_two_sided", b);
    // primitive of the point-evaluation kernel (1 - zeta z)^(-2(alpha+2)/p)
    std::vector<cplx> c(K, 0.0);
    const double gamma_ = 2.0 * (alpha + 2.0) / p;
    double coef = 1.0;  // (gamma)_k zeta^k / (k+1)!
    for (int k = 0; k < cfg.n_coeffs; ++k) {
        c[2 + k] = coef;
        coef *= pochhammer_ratio_step(gamma_, k) * kKernelZeta / (k + 2.0) * (k + 1.0);
    }
    out.emplace_back("kernel_primitive", c);

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> N(0.0, 1.0);
    for (int i = 0; static_cast<int>(out.size()) < cfg.restarts; ++i) {
        std::vector<cplx> r(K);
        r[0] = 0.3 * cplx{N(rng), N(rng)};
        r[1] = 0.3 * cplx{N(rng), N(rng)};
        for (int n = 1; n <= cfg.n_coeffs; ++n) r[1 + n] = (0.3 / n) * cplx{N(rng), N(rng)};
        out.emplace_back("random_" + std::to_string(i), r);
    }
    if (static_cast<int>(out.size()) > cfg.restarts) out.resize(static_cast<std::size_t>(cfg.restarts));
    return out;
}

AnalyticFunction build_candidate(const std::vector<cplx>& theta) {
    const int n_coeffs = static_cast<int>(theta.size()) - 2;
    std::vector<cplx> c(static_cast<std::size_t>(n_coeffs) + 1, 0.0);
    for (int n = 1; n <= n_coeffs; ++n) c[n] = theta[1 + n];
    std::vector<AnalyticFunction> terms;
    if (theta[0] != 0.0) terms.push_back(AnalyticFunction::affine(AnalyticFunction::log_one_sided(1.0), theta[0], 0.0));
    if (theta[1] != 0.0) terms.push_back(AnalyticFunction::affine(AnalyticFunction::log_two_sided(1.0), theta[1], 0.0));
    terms.push_back(AnalyticFunction::taylor(c));
    return terms.size() == 1 ? terms.front() : AnalyticFunction::sum(std::move(terms));
}

// log(1 - z) = -sum z^n / n and log((1 + z) / (1 - z)) = sum_{n odd} 2 z^n / n.
TaylorSeries exact_coefficients(const std::vector<cplx>& theta) {
    const int n_coeffs = static_cast<int>(theta.size()) - 2;
    std::vector<cplx> c(static_cast<std::size_t>(n_coeffs) + 1, 0.0);
    for (int n = 1; n <= n_coeffs; ++n) {
        c[n] = theta[1 + n] - theta[0] / double(n);
        if (n % 2 == 1) c[n] += 2.0 * theta[1] / double(n);
    }
    return TaylorSeries(std::move(c));
}

// Both searches return lower bounds for the supremum; taking the larger keeps
// c_tilde on the safe side.
double precise_rho(const std::vector<cplx>& theta, Objective& obj) {
    const double numeric = bloch_supremum_numeric(build_candidate(theta)).value;
    obj.set(theta);
    return std::max(numeric, obj.rho());
}

// max over |b| <= kMaxShift of || f o phi_b - f(b) ||, by the change of variables
// w = phi_b(z): d mu_alpha(z) = |phi_b'(w)|^(alpha + 2) d mu_alpha(w).
cplx moebius_polish(const Grid& g, const Eigen::VectorXcd& f, const std::vector<cplx>& theta, double alpha,
                    double p) {
    const double half = p / 2.0;
    auto F = [&](cplx b) {
        const cplx fb = value_at(theta, b);
        const double s = 1.0 - std::norm(b);
        double acc = 0.0, comp = 0.0;
        for (Eigen::Index i = 0; i < f.size(); ++i) {
            const auto& q = g.pts[static_cast<std::size_t>(i)];
            const double a = std::norm(f(i) - fb);
            if (a == 0.0) continue;
            const double jac = std::pow(s / std::norm(1.0 - std::conj(b) * q.z), alpha + 2.0);
            const double x = g.w[static_cast<std::size_t>(i)] * std::pow(a, half) * jac - comp;
            const double t = acc + x;
            comp = (t - acc) - x;
            acc = t;
        }
        return acc;
    };
    cplx b = 0.0;
    double best = F(b);
    for (double step = 0.05; step > 1e-8; step /= 2.0) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (const cplx dir : {cplx{1.0, 0.0}, cplx{-1.0, 0.0}, cplx{0.0, 1.0}, cplx{0.0, -1.0}}) {
                const cplx c = b + step * dir;
                if (std::abs(c) > kMaxShift) continue;
                const double v = F(c);
                if (v > best * (1.0 + kPolishGain)) {
                    best = v;
                    b = c;
                    moved = true;
                    break;
                }
            }
        }
    }
    return b;
}

double residual_given_norm(const AnalyticFunction& f, double p, double alpha, const QuadratureScheme& scheme,
                           double norm) {
    const double norm_p = std::pow(norm, p);
    if (!(norm_p > 0.0)) throw DegenerateInputError("functional_equation_residual: f is identically zero");
    const cplx Z = disk_moment(f, p, alpha, MomentKind::z_weighted, scheme);
    const cplx W = disk_moment(f, p, alpha, MomentKind::f_weighted, scheme);
    const cplx d0 = f.derivative_at(0.0, 1);
    return std::abs(Z - p / (2.0 * (alpha + 2.0)) * std::conj(d0) * W) / std::max(norm_p, 1e-30);
}

void check_search_args(double alpha, double p) {
    if (!(alpha > -1.0) || !std::isfinite(alpha)) throw DomainError("search_c_tilde: alpha must be > -1");
    if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("search_c_tilde: p must be > 0");
}

struct Candidate {
    std::size_t restart;
    std::vector<cplx> theta;
    double value;
};

ExtremalEstimate run_search(double alpha, double p, const SearchConfig& cfg, const QuadratureScheme& scheme,
                            const std::vector<cplx>* warm, bool with_residual = true) {
    check_search_args(alpha, p);
    cfg.validate();
    scheme.validate();

    const Grid vg = make_value_grid(alpha, p, cfg.n_coeffs);
    const Grid dg = make_derivative_grid(cfg.n_coeffs);
    Objective obj(vg, dg, p);

    ExtremalEstimate est;
    est.alpha = alpha;
    est.p = p;
    est.config = cfg;
    est.truncation_delta = kNaN;

    std::vector<Candidate> found;
    std::mt19937_64 poll_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    for (const auto& [name, init] : initializations(alpha, p, cfg, warm)) {
        RestartRecord rec;
        rec.init = name;
        try {
            const auto res = compass_search(obj, init, cfg, poll_rng);
            rec.evaluations = res.evaluations;
            rec.objective = res.value;
            rec.status = "ok";
            found.push_back({est.restarts.size(), res.theta, res.value});
        } catch (const std::exception& e) {
            rec.evaluations = obj.evaluations();
            rec.objective = kNaN;
            rec.status = e.what();
        }
        est.restarts.push_back(rec);
    }
    std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) { return a.value > b.value; });

    // Precise evaluation in order of grid value; a quadrature failure drops that candidate.
    for (const auto& cand : found) {
        try {
            const double rho = precise_rho(cand.theta, obj);
            if (!(rho > 1e-14)) throw DegenerateInputError("search: candidate has zero Bloch seminorm");
            const auto theta = scaled(cand.theta, 1.0 / rho);
            const auto base = build_candidate(theta);

            obj.set(theta);
            const cplx b = moebius_polish(vg, obj.f_values(), theta, alpha, p);
            double value = bergman_norm(base, p, alpha, scheme).value;
            AnalyticFunction incumbent = base;
            cplx used = 0.0;
            if (b != 0.0) {
                const auto shifted = AnalyticFunction::moebius_shift(base, b);
                const double vs = bergman_norm(shifted, p, alpha, scheme).value;
                if (vs > value * (1.0 + kPolishGain)) {
                    value = vs;
                    incumbent = shifted;
                    used = b;
                }
            }
            est.c_tilde = value;
            est.function = incumbent;
            est.moebius_point = used;
            est.log_one_sided_weight = theta[0];
            est.log_two_sided_weight = theta[1];
            est.parameters = theta;
            if (used == 0.0) {
                est.coefficients = exact_coefficients(theta);
            } else {
                // f o phi_b - f(b) vanishes at 0 exactly; drop the numerical c_0
                const auto num = taylor_coefficients(incumbent, cfg.n_coeffs).coefficients();
                std::vector<cplx> c(num.begin(), num.end());
                c[0] = 0.0;
                est.coefficients = TaylorSeries(std::move(c));
            }
            est.residual = p > 1.0 && with_residual ? residual_given_norm(incumbent, p, alpha, scheme, value) : kNaN;
            break;
        } catch (const ConvergenceError& e) {
            est.restarts[cand.restart].status = std::string("final evaluation: ") + e.what();
        }
    }
    if (est.parameters.empty()) throw SearchError("search_c_tilde: every restart failed");

    if (cfg.truncation_check) {
        SearchConfig wide = cfg;
        wide.n_coeffs = 2 * cfg.n_coeffs;
        wide.restarts = 1;
        wide.truncation_check = false;
        const auto again = run_search(alpha, p, wide, scheme, &est.parameters);
        est.truncation_delta = again.c_tilde - est.c_tilde;
    }
    return est;
}

}  // namespace

void SearchConfig::validate() const {
    if (n_coeffs < 2) throw ArgumentError("search: n_coeffs must be >= 2");
    if (restarts < 1) throw ArgumentError("search: restarts must be >= 1");
    if (max_iters < 1) throw ArgumentError("search: max_iters must be >= 1");
    if (!(step_tol > 0.0)) throw ArgumentError("search: step_tol must be > 0");
}

ExtremalEstimate search_c_tilde(double alpha, double p, const SearchConfig& config, const QuadratureScheme& scheme) {
    return run_search(alpha, p, config, scheme, nullptr);
}

ExtremalEstimate search_c_tilde(double alpha, double p, const SearchConfig& config, const QuadratureScheme& scheme,
                                const std::vector<cplx>& warm_start) {
    return run_search(alpha, p, config, scheme, &warm_start);
}

double functional_equation_residual(const AnalyticFunction& f, double p, double alpha, const QuadratureScheme& scheme) {
    if (!(p > 1.0)) throw DomainError("functional_equation_residual: p must be > 1");
    return residual_given_norm(f, p, alpha, scheme, bergman_norm(f, p, alpha, scheme).value);
}

BracketResult p_alpha_bracket(double alpha, double p_lo, double p_hi, const SearchConfig& config,
                              const QuadratureScheme& scheme) {
    if (!(alpha >= 0.0)) throw DomainError("p_alpha_bracket: alpha must be >= 0");
    if (!(p_lo > 0.0) || !(p_hi > p_lo)) throw ArgumentError("p_alpha_bracket: need 0 < p_lo < p_hi");
    BracketResult out;
    // only the predicate matters here, so the residual is skipped
    auto lo = run_search(alpha, p_lo, config, scheme, nullptr, false);
    auto hi = run_search(alpha, p_hi, config, scheme, &lo.parameters, false);
    out.searches = 2;
    if (!(lo.c_tilde < 1.0 && hi.c_tilde > 1.0)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "p_alpha_bracket: no crossing of 1 between p = " << p_lo << " (c_tilde " << lo.c_tilde << ") and p = " << p_hi
            << " (c_tilde " << hi.c_tilde << ")";
        throw BracketError(msg.str(), lo.c_tilde, hi.c_tilde);
    }
    out.lo = p_lo;
    out.hi = p_hi;
    while (out.hi - out.lo > 0.1) {
        const double mid = 0.5 * (out.lo + out.hi);
        auto m = run_search(alpha, mid, config, scheme, &hi.parameters, false);
        ++out.searches;
        if (m.c_tilde > 1.0) {
            out.hi = mid;
            hi = std::move(m);
        } else {
            out.lo = mid;
            lo = std::move(m);
        }
    }
    out.c_tilde_lo = lo.c_tilde;
    out.c_tilde_hi = hi.c_tilde;
    return out;
}

std::vector<ScanRow> asymptotic_scan(double alpha, const std::vector<double>& p_grid, const SearchConfig& config,
                                     const QuadratureScheme& scheme) {
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (!(p_grid[i] >= 1.0)) throw ArgumentError("asymptotic_scan: every p must be >= 1");
        if (i > 0 && !(p_grid[i] > p_grid[i - 1])) throw ArgumentError("asymptotic_scan: p_grid must increase");
    }
    const auto ab = asymptotic_bounds(alpha);
    std::vector<ScanRow> rows;
    std::vector<cplx> warm;
    for (double p : p_grid) {
        const auto est = warm.empty() ? search_c_tilde(alpha, p, config, scheme)
                                      : search_c_tilde(alpha, p, config, scheme, warm);
        warm = est.parameters;
        rows.push_back({alpha, p, est.c_tilde, est.c_tilde / p, ab.liminf_bound, ab.limsup_bound, growth_lower(alpha, p),
                        growth_upper(alpha, p)});
    }
    return rows;
}

std::string estimate_csv_header() { return "alpha,p,c_tilde,residual,n_coeffs,restarts,seed"; }

std::string estimate_csv_row(const ExtremalEstimate& e) {
    return csv::join({csv::num(e.alpha), csv::num(e.p), csv::num(e.c_tilde), csv::num(e.residual),
                      std::to_string(e.config.n_coeffs), std::to_string(e.config.restarts),
                      std::to_string(e.config.seed)});
}

std::string coefficients_csv(const ExtremalEstimate& e) {
    std::string out = "n,re,im\n";
    const auto c = e.coefficients.coefficients();
    for (std::size_t n = 0; n < c.size(); ++n)
        out += csv::join({std::to_string(n), csv::num(c[n].real()), csv::num(c[n].imag())}) + "\n";
    return out;
}

std::string bracket_csv_header() { return "alpha,lo,hi,c_tilde_lo,c_tilde_hi,hi_certified,searches"; }

std::string bracket_csv_row(double alpha, const BracketResult& b) {
    return csv::join({csv::num(alpha), csv::num(b.lo), csv::num(b.hi), csv::num(b.c_tilde_lo), csv::num(b.c_tilde_hi),
                      b.hi_certified ? "true" : "false", std::to_string(b.searches)});
}

std::string scan_csv_header() {
    return "alpha,p,c_tilde,c_tilde_over_p,liminf_bound,limsup_bound,growth_lower,growth_upper";
}

std::string scan_csv_row(const ScanRow& r) {
    return csv::join({csv::num(r.alpha), csv::num(r.p), csv::num(r.c_tilde), csv::num(r.c_tilde_over_p), csv::num(r.liminf_bound),
                      csv::num(r.limsup_bound), csv::num(r.growth_lower), csv::num(r.growth_upper)});
}

}  // namespace bergman
