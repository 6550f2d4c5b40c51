#include "bergman/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "bergman/csv.hpp"

namespace bergman {

namespace {

constexpr double kFdStep = 1e-5;
constexpr double kHardySteinTol = 1e-5;
constexpr double kMeanDerivativeTol = 1e-6;
constexpr double kChebyshevTol = 1e-9;

AnalyticFunction random_poly(std::mt19937_64& rng, int deg, cplx c0) {
    std::normal_distribution<double> N(0.0, 1.0);
    std::vector<cplx> c(static_cast<std::size_t>(deg) + 1);
    c[0] = c0;
    for (int n = 1; n <= deg; ++n) c[n] = {N(rng) / (n * n), N(rng) / (n * n)};
    return AnalyticFunction::taylor(c);
}

double fd_mean_pow(const AnalyticFunction& f, double p, double r, const QuadratureScheme& s) {
    return (circle_mean_pow(f, p, r + kFdStep, s) - circle_mean_pow(f, p, r - kFdStep, s)) / (2.0 * kFdStep);
}

struct PiecewiseLinear {
    std::vector<double> x, y;
    double operator()(double r) const {
        auto k = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), r) - x.begin());
        k = std::clamp<std::size_t>(k, 1, x.size() - 1);
        return y[k - 1] + (y[k] - y[k - 1]) * (r - x[k - 1]) / (x[k] - x[k - 1]);
    }
};

PiecewiseLinear random_increasing(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    PiecewiseLinear f;
    f.x = {0.0};
    for (int k = 0; k < 6; ++k) f.x.push_back(U(rng));
    f.x.push_back(1.0);
    std::sort(f.x.begin(), f.x.end());
    f.y = {U(rng)};
    for (std::size_t k = 1; k < f.x.size(); ++k) f.y.push_back(f.y.back() + 3.0 * U(rng));
    return f;
}

}  // namespace

std::vector<AnalyticFunction> default_sample(std::uint64_t seed, int n_random) {
    using AF = AnalyticFunction;
    std::vector<AF> out{normalize_bloch(AF::moebius({0.3, 0.4})),
                        normalize_bloch(AF::log_one_sided(-0.5)),
                        normalize_bloch(AF::log_two_sided(0.5)),
                        normalize_bloch(AF::kernel({0.5, 0.2}, 2.0, 0.0)),
                        normalize_bloch(AF::extremal_fzeta(1.0, 0.0, {0.0, 0.6})),
                        normalize_bloch(AF::monomial(3, {1.0, 1.0}))};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n_random; ++i) out.push_back(normalize_bloch(random_poly(rng, 6, 0.0)));
    return out;
}

std::vector<BoundReport> verify_identity_suite(double alpha, std::uint64_t seed, const QuadratureScheme& scheme) {
    std::vector<BoundReport> out;
    std::mt19937_64 rng(seed);

    // Hardy-Stein on polynomials 1 + g with sum |g_n| < 0.95, hence zero-free on 0.9 D
    for (int made = 0, tries = 0; made < 3 && tries < 1000; ++tries) {
        const auto f = random_poly(rng, 5, 1.0);
        double tail = 0.0;
        for (const auto& c : f.coefficients(5)) tail += std::abs(c);
        if (tail - 1.0 >= 0.95) continue;
        const std::string tag = "hardy_stein poly" + std::to_string(made);
        for (double p : {2.0, 3.0, 4.0}) {
            for (double r : {0.3, 0.6, 0.85}) {
                try {
                    const auto hs = hardy_stein_rhs(f, p, r, scheme);
                    const double fd = fd_mean_pow(f, p, r, scheme);
                    out.push_back(make_report(tag, alpha, p, fd, hs.value, Relation::eq,
                                              kHardySteinTol * std::max(1.0, hs.value), "r=" + csv::num(r)));
                } catch (const std::exception& e) {
                    out.push_back(failed_report(tag, alpha, p, e.what()));
                }
            }
        }
        ++made;
    }

    for (int i = 0; i < 4; ++i) {
        const auto f = random_poly(rng, 6, {0.5, 0.1});
        const auto df = AnalyticFunction::derivative(f);
        const std::string tag = "mean_derivative poly" + std::to_string(i);
        for (double p : {1.5, 2.0, 4.0}) {
            for (double r : {0.2, 0.5, 0.8}) {
                try {
                    const double fd = fd_mean_pow(f, p, r, scheme);
                    const double rhs =
                        p * std::pow(circle_mean(f, p, r, scheme), p - 1.0) * circle_mean(df, p, r, scheme);
                    out.push_back(
                        make_report(tag, alpha, p, fd, rhs, Relation::le, kMeanDerivativeTol, "r=" + csv::num(r)));
                } catch (const std::exception& e) {
                    out.push_back(failed_report(tag, alpha, p, e.what()));
                }
            }
        }
    }

    for (int i = 0; i < 50; ++i) {
        const auto f = random_increasing(rng);
        const auto g = random_increasing(rng);
        std::vector<double> bp = f.x;
        bp.insert(bp.end(), g.x.begin(), g.x.end());
        const double efg = radial_expectation([&](double r) { return f(r) * g(r); }, alpha, bp);
        const double ef = radial_expectation(f, alpha, bp);
        const double eg = radial_expectation(g, alpha, bp);
        out.push_back(make_report("chebyshev pair" + std::to_string(i), alpha, 0.0, efg, ef * eg, Relation::ge,
                                  kChebyshevTol, "E[fg] vs E[f]E[g]"));
    }
    return out;
}

}  // namespace bergman
