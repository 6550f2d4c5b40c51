#pragma once

// Numerical lower bounds for the inclusion constant
//   C~_alpha(p) = max { ||f||_{A^p_alpha} : rho_B(f) <= 1, f(0) = 0 }
// by derivative-free search, the stationarity residual of the extremal
// functional equation, and the bracket search for p_alpha.
//
// Candidates are  u log(1 - z) + v log((1 + z) / (1 - z)) + sum_{n=1..N} c_n z^n
// with complex u, v, c_n, so f(0) = 0 holds exactly. The two log atoms carry the
// boundary behaviour a truncated series cannot reach at large p.

#include <cstdint>
#include <string>
#include <vector>

#include "bergman/analytic_function.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

struct SearchConfig {
    int n_coeffs = 24;
    int restarts = 16;
    int max_iters = 2000;  // objective evaluations per restart
    double step_tol = 1e-7;
    std::uint64_t seed = 1;
    bool truncation_check = false;  // re-run the incumbent with 2 n_coeffs

    /// ArgumentError unless n_coeffs >= 2, restarts >= 1, max_iters >= 1, step_tol > 0.
    void validate() const;
};

struct RestartRecord {
    std::string init;
    int evaluations = 0;
    double objective = 0.0;  // fast-grid value at the end of the local search
    std::string status;      // "ok" or the error that aborted the restart
};

struct ExtremalEstimate {
    double alpha = 0.0;
    double p = 0.0;
    double c_tilde = 0.0;  // lower bound for C~_alpha(p)
    double residual = 0.0;  // NaN for p <= 1
    TaylorSeries coefficients;
    AnalyticFunction function;  // the incumbent: f(0) = 0, rho_B = 1
    cplx log_one_sided_weight{0.0, 0.0};
    cplx log_two_sided_weight{0.0, 0.0};
    cplx moebius_point{0.0, 0.0};  // the incumbent is the base composed with this automorphism
    double truncation_delta = 0.0;  // c_tilde(2N) - c_tilde(N) when checked, else NaN
    std::vector<RestartRecord> restarts;
    SearchConfig config;
    // Unnormalized search parameters (u, v, c_1..c_N), kept for warm starts.
    std::vector<cplx> parameters;
};

/// Maximizes ||f||_{A^p_alpha} / rho_B(f) over the candidate family. The final
/// value is recomputed with bergman_norm under `scheme`. SearchError if every restart fails.
ExtremalEstimate search_c_tilde(double alpha, double p, const SearchConfig& config = {},
                                const QuadratureScheme& scheme = {});

/// Same search with an extra first initialization (u, v, c_1..c_M), e.g. a previous incumbent.
ExtremalEstimate search_c_tilde(double alpha, double p, const SearchConfig& config, const QuadratureScheme& scheme,
                                const std::vector<cplx>& warm_start);

/// |int |f|^p z d mu - p / (2 (alpha + 2)) conj(f'(0)) int |f|^(p-2) f d mu| / max(||f||^p, 1e-30).
double functional_equation_residual(const AnalyticFunction& f, double p, double alpha,
                                    const QuadratureScheme& scheme = {});

struct BracketResult {
    double lo = 0.0;
    double hi = 0.0;
    double c_tilde_lo = 0.0;
    double c_tilde_hi = 0.0;
    int searches = 0;
    // c_tilde is a lower bound, so c_tilde_hi > 1 proves C~(hi) > 1; lo is heuristic.
    bool hi_certified = true;
};

/// Bisection on p of c_tilde(p) > 1 until hi - lo <= 0.1. BracketError with both
/// endpoint values unless c_tilde(p_lo) < 1 < c_tilde(p_hi).
BracketResult p_alpha_bracket(double alpha, double p_lo, double p_hi, const SearchConfig& config = {},
                              const QuadratureScheme& scheme = {});

struct ScanRow {
    double alpha = 0.0;
    double p = 0.0;
    double c_tilde = 0.0;
    double c_tilde_over_p = 0.0;
    double liminf_bound = 0.0;
    double limsup_bound = 0.0;
    double growth_lower = 0.0;
    double growth_upper = 0.0;
};

/// One search per p (increasing, each >= 1), warm-started from the previous row.
std::vector<ScanRow> asymptotic_scan(double alpha, const std::vector<double>& p_grid, const SearchConfig& config = {},
                                     const QuadratureScheme& scheme = {});

/// Columns: alpha,p,c_tilde,residual,n_coeffs,restarts,seed
std::string estimate_csv_header();
std::string estimate_csv_row(const ExtremalEstimate& e);
/// Sidecar: n,re,im for the Taylor coefficients of the incumbent.
std::string coefficients_csv(const ExtremalEstimate& e);

std::string bracket_csv_header();
std::string bracket_csv_row(double alpha, const BracketResult& b);

/// Columns: alpha,p,c_tilde,c_tilde_over_p,liminf_bound,limsup_bound,growth_lower,growth_upper
std::string scan_csv_header();
std::string scan_csv_row(const ScanRow& r);

}  // namespace bergman
