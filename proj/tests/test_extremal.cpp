#include <cmath>
#include <numbers>

#include "bergman/bounds.hpp"
#include "bergman/csv.hpp"
#include "bergman/errors.hpp"
#include "bergman/extremal.hpp"
#include "bergman/norms.hpp"
#include "doctest.h"

using namespace bergman;
using AF = AnalyticFunction;

namespace {

SearchConfig small_config() {
    SearchConfig c;
    c.n_coeffs = 4;
    c.restarts = 3;
    c.max_iters = 300;
    c.seed = 7;
    return c;
}

QuadratureScheme loose() {
    QuadratureScheme s;
    s.rel_tol = 1e-7;
    return s;
}

// Dense sampling of (1 - |z|^2)|f'| with local polishing of the best cells.
// Independent of the library's Bloch search: plain grid plus coordinate bisection.
double brute_bloch(const AF& f) {
    const int nr = 600, nt = 1024;
    double best = 0.0, bs = 0.0, bt = 0.0;
    auto q = [&](double s, double t) {
        const double d = std::exp(s);
        const cplx z = std::polar(1.0 - d, t);
        return std::abs(eval(f, z, 1)) * d * (2.0 - d);
    };
    for (int i = 0; i < nr; ++i) {
        const double s = -18.0 * (i + 0.5) / nr;
        for (int j = 0; j < nt; ++j) {
            const double t = 2.0 * std::numbers::pi * j / nt;
            const double v = q(s, t);
            if (v > best) {
                best = v;
                bs = s;
                bt = t;
            }
        }
    }
    double hs = 0.02, ht = 0.01;
    for (int k = 0; k < 60; ++k) {
        for (const auto [a, b] : {std::pair{hs, 0.0}, {-hs, 0.0}, {0.0, ht}, {0.0, -ht}}) {
            const double s = std::min(bs + a, -1e-12);
            const double v = q(s, bt + b);
            if (v > best) {
                best = v;
                bs = s;
                bt += b;
            }
        }
        hs *= 0.8;
        ht *= 0.8;
    }
    return best;
}

}  // namespace

TEST_CASE("search incumbent is feasible and beats the log models") {
    const auto est = search_c_tilde(0.0, 4.0, small_config(), loose());
    CHECK(std::abs(eval(est.function, 0.0)) <= 1e-12);
    CHECK(std::abs(brute_bloch(est.function) - 1.0) <= 1e-6);
    // boundary limits of (1 - |z|^2)|f'| at z -> +1 and z -> -1
    CHECK(2.0 * std::abs(est.log_two_sided_weight - est.log_one_sided_weight) <= 1.0 + 1e-12);
    CHECK(2.0 * std::abs(est.log_two_sided_weight) <= 1.0 + 1e-12);

    const double log1 = bergman_norm(AF::log_one_sided(-0.5), 4.0, 0.0).value;
    const double log2 = bergman_norm(AF::log_two_sided(0.5), 4.0, 0.0).value;
    CHECK(est.c_tilde >= log1 - 1e-9);
    CHECK(est.c_tilde >= log2 - 1e-9);
    CHECK(est.c_tilde >= growth_lower(0.0, 4.0) - 1e-6);
    CHECK(est.c_tilde <= growth_upper(0.0, 4.0) + 1e-6);
    CHECK(est.c_tilde <= bound_2n(0.0, 2, 1.0));
    CHECK(est.residual <= 1e-3);

    // the reported value is the norm of the reported function
    CHECK(std::abs(bergman_norm(est.function, 4.0, 0.0, loose()).value - est.c_tilde) <= 1e-12);
    CHECK(est.coefficients.coefficients().size() == 5);
    CHECK(std::abs(est.coefficients.coefficients()[0]) <= 1e-12);
    REQUIRE(est.restarts.size() == 3);
    CHECK(est.restarts[0].init == "log_one_sided");
    CHECK(est.restarts[1].init == "log_two_sided");
    CHECK(est.restarts[2].init == "kernel_primitive");
    for (const auto& r : est.restarts) {
        CHECK(r.status == "ok");
        CHECK(r.evaluations <= 300);
    }
}

TEST_CASE("search at p = 1 clears the growth floor") {
    const auto est = search_c_tilde(0.0, 1.0, small_config(), loose());
    CHECK(est.c_tilde >= 1.0 / 12.0);
    CHECK(std::isnan(est.residual));
}

TEST_CASE("search is deterministic for a fixed seed") {
    auto cfg = small_config();
    cfg.restarts = 4;  // includes one random draw
    const auto a = search_c_tilde(1.0, 3.0, cfg, loose());
    const auto b = search_c_tilde(1.0, 3.0, cfg, loose());
    CHECK(estimate_csv_row(a) == estimate_csv_row(b));
    CHECK(coefficients_csv(a) == coefficients_csv(b));
    CHECK(a.restarts.back().init == "random_0");
}

TEST_CASE("warm start is tried first") {
    const std::vector<cplx> warm{0.0, 0.5};
    const auto est = search_c_tilde(0.0, 3.0, small_config(), loose(), warm);
    CHECK(est.restarts.front().init == "warm_start");
    CHECK(est.c_tilde >= bergman_norm(AF::log_two_sided(0.5), 3.0, 0.0).value - 1e-9);
}

TEST_CASE("search argument errors") {
    CHECK_THROWS_AS(search_c_tilde(-1.0, 4.0), DomainError);
    CHECK_THROWS_AS(search_c_tilde(0.0, 0.0), DomainError);
    SearchConfig c;
    c.n_coeffs = 1;
    CHECK_THROWS_AS(search_c_tilde(0.0, 4.0, c), ArgumentError);
    c = {};
    c.restarts = 0;
    CHECK_THROWS_AS(search_c_tilde(0.0, 4.0, c), ArgumentError);
    c = {};
    c.step_tol = 0.0;
    CHECK_THROWS_AS(c.validate(), ArgumentError);
}

TEST_CASE("functional equation residual") {
    // Monomial(1, 1): both moments vanish by rotation
    const auto z = AF::monomial(1, 1.0);
    CHECK(std::abs(disk_moment(z, 4.0, 0.0, MomentKind::z_weighted)) <= 1e-12);
    CHECK(std::abs(disk_moment(z, 4.0, 0.0, MomentKind::f_weighted)) <= 1e-12);
    CHECK(functional_equation_residual(z, 4.0, 0.0) <= 1e-12);

    // f = z + c z^2 at p = 2, alpha = 0: only conj(c) |z|^4 survives in |f|^2 z, so
    // Z = conj(c) / 3; W is the mean of f, which is f(0) = 0; ||f||^2 = 1/2 + |c|^2 / 3.
    const cplx c{0.3, -0.2};
    const auto g = AF::taylor(std::vector<cplx>{0.0, 1.0, c});
    const cplx Z = disk_moment(g, 2.0, 0.0, MomentKind::z_weighted);
    CHECK(std::abs(Z - std::conj(c) / 3.0) <= 1e-12);
    CHECK(std::abs(disk_moment(g, 2.0, 0.0, MomentKind::f_weighted)) <= 1e-12);
    CHECK(functional_equation_residual(g, 2.0, 0.0) ==
          doctest::Approx(std::abs(c) / 3.0 / (0.5 + std::norm(c) / 3.0)).epsilon(1e-10));

    // negative control, reported only
    const double control = functional_equation_residual(AF::taylor(std::vector<cplx>{0.0, 1.0, 5.0}), 4.0, 0.0);
    MESSAGE("residual of Taylor([0, 1, 5]) at p = 4: " << control);
    CHECK(control > 0.0);

    CHECK_THROWS_AS(functional_equation_residual(z, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(functional_equation_residual(AF::constant(0.0), 4.0, 0.0), DegenerateInputError);
}

TEST_CASE("bracket errors") {
    try {
        p_alpha_bracket(0.0, 0.5, 1.0, small_config(), loose());
        FAIL("expected BracketError");
    } catch (const BracketError& e) {
        CHECK(e.value_lo() < 1.0);
        CHECK(e.value_hi() < 1.0);
    }
    CHECK_THROWS_AS(p_alpha_bracket(-0.5, 2.0, 6.0), DomainError);
    CHECK_THROWS_AS(p_alpha_bracket(0.0, 6.0, 2.0), ArgumentError);
}

TEST_CASE("scan rows are monotone and inside the proven sandwich") {
    const auto rows = asymptotic_scan(0.0, {2.0, 3.0, 4.0}, small_config(), loose());
    REQUIRE(rows.size() == 3);
    // Parseval value of -1/2 log(1 - z) at p = 2: (1/2) sqrt(sum 1 / (n^2 (n + 1)))
    CHECK(rows[0].c_tilde >= 0.5 * std::sqrt(std::numbers::pi * std::numbers::pi / 6.0 - 1.0) - 1e-9);
    CHECK(rows[0].c_tilde <= 1.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].c_tilde >= rows[i].growth_lower - 1e-6);
        CHECK(rows[i].c_tilde <= rows[i].growth_upper + 1e-6);
        CHECK(rows[i].c_tilde_over_p == doctest::Approx(rows[i].c_tilde / rows[i].p).epsilon(1e-15));
        if (i > 0) CHECK(rows[i].c_tilde >= rows[i - 1].c_tilde - 1e-6);
    }
    CHECK_THROWS_AS(asymptotic_scan(0.0, {2.0, 2.0}), ArgumentError);
    CHECK_THROWS_AS(asymptotic_scan(0.0, {0.5, 2.0}), ArgumentError);

    const auto fields = csv::parse(scan_csv_row(rows[1]));
    REQUIRE(fields.size() == 1);
    CHECK(std::stod(fields[0][2]) == rows[1].c_tilde);
    CHECK(csv::parse(scan_csv_header())[0].size() == fields[0].size());
}
