#pragma once

// Integration on circles and on the weighted disk (D, mu_alpha).
//
// Radial direction: composite Gauss-Legendre panels graded geometrically toward
// r = 1, closed by one Gauss-Jacobi panel carrying the (1 - r)^alpha factor
// exactly. Angular direction: nested trapezoid rule, periodized by a sin^6
// change of variables on each arc between singular directions of f.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "bergman/analytic_function.hpp"

namespace bergman {

struct QuadratureScheme {
    double alpha = 0.0;
    int n_radial = 128;
    int n_angular = 512;
    int max_refinements = 6;
    double rel_tol = 1e-9;

    /// ArgumentError unless n_radial >= 8, n_angular >= 16 and even, rel_tol > 0.
    void validate() const;
};

struct NormResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    QuadratureScheme scheme_used;
    bool converged = false;
};

/// Nodes and weights of the n-point Gauss-Jacobi rule for (1 - x)^a (1 + x)^b on [-1, 1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_jacobi(int n, double a, double b);

/// A point handed to disk integrands. t = 1 - r and u = 1 - r^2 are carried
/// separately so the weight near the boundary keeps full relative precision.
struct DiskPoint {
    cplx z;
    double r;
    double t;
    double u;
};

/// Where the integrand needs resolution: angular singular directions and the
/// number of geometric radial levels toward r = 1.
struct DiskGeometry {
    std::vector<double> directions;
    int levels = 4;
    std::vector<double> radii;  // extra radial panel breaks, e.g. moduli of interior zeros
};

/// Geometry suited to |f|^p and its relatives: grading follows the distance of
/// the nearest singularity, or 1 / (degree * p) for polynomials. Unless p is an
/// even integer, known interior zeros of f (polynomials, Moebius maps) add a radial
/// break and an angular direction, since |f|^p has a kink there.
DiskGeometry geometry_for(const AnalyticFunction& f, double p);

template <class T>
struct DiskIntegral {
    T value{};
    double abs_value = 0.0;  // integral of |g|, the scale for the convergence test
    double abs_error = 0.0;  // |last - previous| under doubling of the radial rule
    bool converged = false;
    int radial_nodes = 0;
};

/// Integral of g against d mu_alpha over the disk.
template <class T>
DiskIntegral<T> integrate_disk(const std::function<T(const DiskPoint&)>& g, const DiskGeometry& geometry,
                               const QuadratureScheme& scheme);

/// Radial rule for d mu_alpha integrated over angles: sum of weights is 1.
struct RadialNode {
    double r;
    double t;
    double w;
};
/// Breaks in (0, 1) split the graded panels; breaks inside the last panel are ignored.
std::vector<RadialNode> bergman_radial_rule(double alpha, int m, int levels, std::span<const double> breaks = {});

/// Fixed angular rule on the circle, weights summing to 1, periodized around the
/// given directions exactly as the adaptive rules are.
struct AngularNode {
    double theta;
    double w;
};
std::vector<AngularNode> periodized_circle_rule(std::span<const double> directions, int n_total);

/// M_p(r, f). ConvergenceError carrying the last two p-means if angular doubling stalls.
double circle_mean(const AnalyticFunction& f, double p, double r, const QuadratureScheme& scheme = {});

/// M_p(r, f)^p; same rule as circle_mean without the final root.
double circle_mean_pow(const AnalyticFunction& f, double p, double r, const QuadratureScheme& scheme = {});

/// ||f||_{A^p_alpha}. scheme.alpha is overridden by alpha. Throws ConvergenceError.
NormResult bergman_norm(const AnalyticFunction& f, double p, double alpha, const QuadratureScheme& scheme = {});

enum class MomentKind { z_weighted, f_weighted };

/// z_weighted: int |f|^p z d mu_alpha. f_weighted: int |f|^(p-2) f d mu_alpha (p > 1).
cplx disk_moment(const AnalyticFunction& f, double p, double alpha, MomentKind kind,
                 const QuadratureScheme& scheme = {});

struct HardySteinResult {
    double value = 0.0;
    bool singular_warning = false;  // min |f| on the grid fell below 1e-8
};

/// (p^2 / (2r)) * integral over r D of |f'|^2 |f|^(p-2) dA.
HardySteinResult hardy_stein_rhs(const AnalyticFunction& f, double p, double r, const QuadratureScheme& scheme = {});

/// (1/pi) * integral over [2pi/3, pi] of min{(2|cos t|)^alpha, (2|cos t| - 1)^alpha}.
double m_alpha_integral(double alpha);

/// Expectation of h under d sigma = 2 (1 - r^2)^alpha dr / B(1/2, alpha + 1) on (0, 1).
/// Panels split at the given breakpoints, so piecewise polynomial h of low degree is exact.
double radial_expectation(const std::function<double(double)>& h, double alpha, std::span<const double> breakpoints,
                          int m = 16);

/// Total mass of the discrete rule behind radial_expectation before normalization,
/// i.e. its approximation of B(1/2, alpha + 1).
double radial_sigma_mass(double alpha, std::span<const double> breakpoints, int m = 16);

}  // namespace bergman
