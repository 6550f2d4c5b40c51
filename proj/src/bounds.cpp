#include "bergman/bounds.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "bergman/csv.hpp"
#include "bergman/errors.hpp"
#include "bergman/norms.hpp"
#include "bergman/special_fn.hpp"

namespace bergman {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > -1.0) || !std::isfinite(alpha)) throw DomainError("bounds: alpha must be > -1");
}

void check_p_ge1(double p, const char* op) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError(std::string(op) + ": p must be >= 1");
}

double beta_half(double alpha) { return beta(PositiveReal(0.5), PositiveReal(alpha + 1.0)); }

}  // namespace

BoundReport make_report(std::string name, double alpha, double p, double lhs, double rhs, Relation relation,
                        double tolerance, std::string note) {
    BoundReport r;
    r.name = std::move(name);
    r.alpha = alpha;
    r.p = p;
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = relation;
    r.tolerance = tolerance;
    r.note = std::move(note);
    switch (relation) {
        case Relation::le: r.margin = rhs - lhs; break;
        case Relation::ge: r.margin = lhs - rhs; break;
        case Relation::eq: r.margin = -std::abs(lhs - rhs); break;
    }
    r.passed = std::isfinite(r.margin) && r.margin >= -tolerance;
    return r;
}

BoundReport failed_report(std::string name, double alpha, double p, std::string reason) {
    BoundReport r;
    r.name = std::move(name);
    r.alpha = alpha;
    r.p = p;
    r.lhs = r.rhs = r.margin = std::nan("");
    r.passed = false;
    r.note = std::move(reason);
    return r;
}

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::le: return "<=";
        case Relation::ge: return ">=";
        case Relation::eq: return "=";
    }
    return "?";
}

double pointwise_bound(double norm, double p, double alpha, cplx zeta) {
    check_alpha(alpha);
    if (!(p > 0.0)) throw DomainError("pointwise_bound: p must be > 0");
    if (!(std::abs(zeta) < 1.0)) throw DomainError("pointwise_bound: zeta must lie in the open unit disk");
    return norm * std::exp(-(alpha + 2.0) / p * std::log1p(-std::norm(zeta)));
}

double contractivity_threshold(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw DomainError("contractivity_threshold: only established for alpha >= 0");
    }
    return 2.0 / beta_half(alpha);
}

double growth_upper(double alpha, double p) {
    check_alpha(alpha);
    check_p_ge1(p, "growth_upper");
    return std::max(beta_half(alpha) / 2.0, 1.0) * p;
}

double growth_lower(double alpha, double p) {
    check_alpha(alpha);
    check_p_ge1(p, "growth_lower");
    const double log_pow = std::log(m_alpha_integral(alpha)) + ln_gamma(PositiveReal(p + 1.0)) -
                           (p - 1.0) * std::numbers::ln2 - (p + 1.0) * std::log(alpha + 2.0);
    return std::exp(log_pow / p);
}

double bound_2n(double alpha, int n, double c2) {
    check_alpha(alpha);
    if (n < 2) throw DomainError("bound_2n: n must be >= 2");
    if (!(c2 > 0.0)) throw DomainError("bound_2n: c2 must be > 0");
    const double ab = (alpha + 1.0) * (alpha + 2.0);
    const double inner = std::log(ab) + ln_gamma(PositiveReal(n + alpha + 3.0)) + ln_gamma(PositiveReal(n + 1.0)) -
                         ln_gamma(PositiveReal(alpha + 4.0)) + 2.0 * std::log(c2);
    return std::exp(-0.5 * std::log(ab) + inner / (2.0 * n));
}

double upper_bound_via_2n(double alpha, double p, double c2) {
    if (!(p > 2.0)) throw DomainError("upper_bound_via_2n: p must be > 2");
    return bound_2n(alpha, static_cast<int>(std::ceil(p / 2.0)), c2);
}

AsymptoticBounds asymptotic_bounds(double alpha) {
    check_alpha(alpha);
    const double e = std::numbers::e;
    return {1.0 / (2.0 * e * (alpha + 2.0)), 1.0 / (2.0 * e * std::sqrt((alpha + 1.0) * (alpha + 2.0)))};
}

double c_from_c_tilde(double c_tilde, double p) {
    check_p_ge1(p, "c_from_c_tilde");
    if (!(c_tilde >= 0.0)) throw DomainError("c_from_c_tilde: c_tilde must be >= 0");
    return std::max(1.0, c_tilde);
}

std::vector<BoundReport> verify_inclusion_suite(double alpha, double p, const std::vector<AnalyticFunction>& sample,
                                                const QuadratureScheme& scheme, std::uint64_t seed) {
    check_alpha(alpha);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<BoundReport> out;
    const bool contractive = alpha >= 0.0 && (p <= contractivity_threshold(alpha) || p == 2.0);

    for (std::size_t i = 0; i < sample.size(); ++i) {
        const auto& f = sample[i];
        const std::string tag = "f" + std::to_string(i) + "[" + f.kind() + "]";
        double norm = 0.0, bnorm = 0.0;
        try {
            norm = bergman_norm(f, p, alpha, scheme).value;
            bnorm = bloch_norm(f);
        } catch (const std::exception& e) {
            out.push_back(failed_report("bergman_norm " + tag, alpha, p, e.what()));
            continue;
        }
        if (contractive) {
            out.push_back(make_report("contractive " + tag, alpha, p, norm, bnorm, Relation::le, kQuadratureTol,
                                      "A^p norm vs Bloch norm"));
        }
        if (p >= 1.0) {
            out.push_back(make_report("growth_upper " + tag, alpha, p, norm, growth_upper(alpha, p) * bnorm,
                                      Relation::le, kQuadratureTol, "A^p norm vs growth_upper * Bloch norm"));
        }
        {
            // the worst of 20 random points
            double worst = HUGE_VAL, lhs = 0.0, rhs = 0.0;
            cplx at{0.0, 0.0};
            for (int k = 0; k < 20; ++k) {
                const double rad = 0.95 * std::sqrt(U(rng));
                const double th = 2.0 * std::numbers::pi * U(rng);
                const cplx z = std::polar(rad, th);
                const double v = std::abs(f.derivative_at(z, 0));
                const double b = pointwise_bound(norm, p, alpha, z);
                if (b - v < worst) {
                    worst = b - v;
                    lhs = v;
                    rhs = b;
                    at = z;
                }
            }
            out.push_back(make_report("pointwise " + tag, alpha, p, lhs, rhs, Relation::le, kQuadratureTol,
                                      "zeta=" + csv::num(at.real()) + (at.imag() < 0 ? "" : "+") +
                                          csv::num(at.imag()) + "i"));
        }
        if (p > 1.0 && f.boundary_distance() > 0.0) {
            const double q = p;
            try {
                const double b1 = besov_norm(f, q, BesovVariant::norm1, scheme).value;
                const double b2 = besov_norm(f, q, BesovVariant::norm2, scheme).value;
                out.push_back(make_report("bloch_le_besov1 " + tag, alpha, q, bnorm, b1, Relation::le, kQuadratureTol,
                                          "q = p"));
                out.push_back(make_report("besov2_le_besov1 " + tag, alpha, q, b2, b1, Relation::le, kQuadratureTol,
                                          "q = p"));
                out.push_back(make_report("besov1_le_scaled_besov2 " + tag, alpha, q, b1,
                                          std::pow(2.0, (q - 1.0) / q) * b2, Relation::le, kQuadratureTol, "q = p"));
            } catch (const std::exception& e) {
                out.push_back(failed_report("besov " + tag, alpha, q, e.what()));
            }
        }
    }
    return out;
}

std::string report_csv_header() { return "name,alpha,p,lhs,relation,rhs,margin,passed,tolerance,note"; }

std::string report_csv_row(const BoundReport& r) {
    return csv::join({r.name, csv::num(r.alpha), csv::num(r.p), csv::num(r.lhs), relation_symbol(r.relation),
                      csv::num(r.rhs), csv::num(r.margin), r.passed ? "true" : "false", csv::num(r.tolerance),
                      r.note});
}

}  // namespace bergman
