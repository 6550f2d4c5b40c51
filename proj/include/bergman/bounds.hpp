#pragma once

// Closed-form constants and two-sided bounds for the inclusion B -> A^p_alpha,
// plus margin reports that check them against computed norms.

#include <cstdint>
#include <string>
#include <vector>

#include "bergman/analytic_function.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

enum class Relation { le, ge, eq };

struct BoundReport {
    std::string name;
    double alpha = 0.0;
    double p = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    Relation relation = Relation::le;
    double margin = 0.0;  // rhs - lhs for <=, lhs - rhs for >=, -|lhs - rhs| for =
    bool passed = false;
    double tolerance = 0.0;
    std::string note;
};

inline constexpr double kClosedFormTol = 1e-8;
inline constexpr double kQuadratureTol = 1e-6;

BoundReport make_report(std::string name, double alpha, double p, double lhs, double rhs, Relation relation,
                        double tolerance, std::string note = {});

/// A report that could not be evaluated; passed = false, reason in note.
BoundReport failed_report(std::string name, double alpha, double p, std::string reason);

const char* relation_symbol(Relation r);

/// norm / (1 - |zeta|^2)^((alpha + 2) / p).
double pointwise_bound(double norm, double p, double alpha, cplx zeta);

/// 2 / B(1/2, alpha + 1), alpha >= 0.
double contractivity_threshold(double alpha);

/// max{B(1/2, alpha + 1) / 2, 1} * p, p >= 1.
double growth_upper(double alpha, double p);

/// [M_alpha Gamma(p + 1) / (2^(p-1) (alpha + 2)^(p+1))]^(1/p), p >= 1.
double growth_lower(double alpha, double p);

/// Upper bound for C~_alpha(2n) from an upper bound c2 for C~_alpha(2), n >= 2.
double bound_2n(double alpha, int n, double c2);

/// bound_2n at n = ceil(p / 2), valid for any p > 2 since C~ is non-decreasing in p.
double upper_bound_via_2n(double alpha, double p, double c2);

struct AsymptoticBounds {
    double liminf_bound = 0.0;
    double limsup_bound = 0.0;
};

/// (1 / (2e(alpha + 2)), 1 / (2e sqrt((alpha + 1)(alpha + 2)))).
AsymptoticBounds asymptotic_bounds(double alpha);

/// max{1, c_tilde}.
double c_from_c_tilde(double c_tilde, double p);

/// Reports per sample function: contractivity (alpha >= 0 and p <= threshold or p = 2), the
/// growth upper bound, the pointwise estimate at 20 random points, and the
/// Bloch-versus-Besov inclusion with q = p (p > 1, f in B^q).
std::vector<BoundReport> verify_inclusion_suite(double alpha, double p, const std::vector<AnalyticFunction>& sample,
                                                const QuadratureScheme& scheme = {}, std::uint64_t seed = 1);

/// Columns: name,alpha,p,lhs,relation,rhs,margin,passed,tolerance,note
std::string report_csv_header();
std::string report_csv_row(const BoundReport& r);

}  // namespace bergman
