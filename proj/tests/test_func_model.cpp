#include <cmath>
#include <random>

#include "bergman/analytic_function.hpp"
#include "bergman/errors.hpp"
#include "bergman/function_spec.hpp"
#include "doctest.h"

using namespace bergman;
using AF = AnalyticFunction;

namespace {

std::vector<AF> catalog() {
    return {
        AF::moebius({0.5, 0.2}),
        AF::moebius({-0.3, 0.0}),
        AF::kernel({0.4, -0.3}, 3.0, 0.5),
        AF::kernel({0.0, 0.7}, 1.5, -0.5),
        AF::log_one_sided(-0.5),
        AF::log_two_sided(0.5),
        AF::extremal_f0({2.0, 1.0}, {0.5, 0.0}),
        AF::extremal_fzeta({1.0, 0.5}, {0.2, 0.0}, {0.3, 0.4}),
        AF::monomial(3, {1.0, -2.0}),
        AF::taylor({{1.0, 0.0}, {0.5, 0.5}, {0.0, -1.0}, {0.25, 0.0}}),
        AF::atomic_b1({{{0.5, 0.0}, {0.3, 0.1}}, {{-0.25, 0.5}, {-0.6, 0.2}}}),
        AF::sum({AF::monomial(2, 1.0), AF::log_one_sided(0.3)}),
        AF::affine(AF::kernel({0.2, 0.1}, 2.0, 0.0), {2.0, 0.0}, {1.0, 1.0}),
        AF::moebius_shift(AF::taylor({0.0, 1.0, 0.5}), {0.3, -0.2}),
        AF::moebius_shift(AF::log_two_sided(0.5), {0.4, 0.1}),
    };
}

cplx random_point(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    return std::polar(rmax * std::sqrt(U(rng)), 2.0 * M_PI * U(rng));
}

}  // namespace

TEST_CASE("eval examples") {
    CHECK(eval(AF::monomial(1, 1.0), {0.3, 0.0}, 1) == cplx(1.0, 0.0));
    CHECK(eval(AF::moebius(0.5), 0.0, 0) == cplx(0.5, 0.0));
    CHECK(std::abs(eval(AF::log_one_sided(-0.5), 0.0, 1) - 0.5) < 1e-15);
    CHECK_THROWS_AS(eval(AF::moebius(0.5), {1.0, 0.0}, 0), DomainError);
    CHECK_THROWS_AS(eval(AF::moebius(0.5), 0.0, 3), ArgumentError);
    CHECK_THROWS_AS(AF::moebius(1.0), DomainError);
}

TEST_CASE("Taylor model returns a0 exactly at the origin") {
    const auto f = AF::taylor({{0.123456789, -2.0}, {1.0, 1.0}});
    CHECK(eval(f, 0.0, 0) == cplx(0.123456789, -2.0));
}

TEST_CASE("taylor_coefficients examples") {
    const auto c = taylor_coefficients(AF::log_one_sided(-0.5), 3);
    CHECK(c.degree() == 3);
    CHECK(std::abs(c[0]) == 0.0);
    CHECK(std::abs(c[1] - 0.5) < 1e-16);
    CHECK(std::abs(c[2] - 0.25) < 1e-16);
    CHECK(std::abs(c[3] - 1.0 / 6.0) < 1e-16);

    const cplx cc{0.3, -0.7};
    const auto m = taylor_coefficients(AF::monomial(2, cc), 4);
    for (int n = 0; n <= 4; ++n) CHECK(m[n] == (n == 2 ? cc : cplx{0.0, 0.0}));

    const auto k = taylor_coefficients(AF::kernel(0.0, 3.0, 1.0), 2);
    CHECK(k[0] == cplx(1.0, 0.0));
    CHECK(k[1] == cplx(0.0, 0.0));
    CHECK(k[2] == cplx(0.0, 0.0));

    CHECK_THROWS_AS(taylor_coefficients(AF::monomial(1, 1.0), 4097), ArgumentError);
}

TEST_CASE("first and second derivatives match central differences") {
    std::mt19937_64 rng(7);
    const double h = 1e-6;
    for (const auto& f : catalog()) {
        CAPTURE(f.kind());
        for (int i = 0; i < 20; ++i) {
            const cplx z = random_point(rng, 0.8);
            for (int order : {1, 2}) {
                const cplx fd = (eval(f, z + h, order - 1) - eval(f, z - h, order - 1)) / (2.0 * h);
                const cplx ex = eval(f, z, order);
                CHECK(std::abs(fd - ex) <= 1e-6 * std::max(1.0, std::abs(ex)));
            }
        }
    }
}

TEST_CASE("truncated Taylor series reproduces catalog values") {
    std::mt19937_64 rng(11);
    for (const auto& f : catalog()) {
        CAPTURE(f.kind());
        const auto g = AF::taylor(taylor_coefficients(f, 128));
        for (int i = 0; i < 20; ++i) {
            const cplx z = random_point(rng, 0.5);
            const cplx a = eval(f, z, 0), b = eval(g, z, 0);
            CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("closed-form Bloch seminorms") {
    for (int k : {2, 4, 8, 100}) {
        const auto phi = AF::moebius(1.0 - 1.0 / k);
        CHECK(bloch_seminorm(phi, BlochMode::closed_form) == 1.0);
        CHECK(bloch_norm(phi) == 2.0 - 1.0 / k);
    }
    CHECK(bloch_seminorm(AF::log_one_sided(-0.5), BlochMode::closed_form) == 1.0);
    CHECK(bloch_seminorm(AF::log_two_sided(0.5), BlochMode::closed_form) == 1.0);
    CHECK(bloch_seminorm(AF::monomial(1, 3.0), BlochMode::closed_form) == 3.0);
    CHECK(bloch_norm(AF::moebius(0.5)) == 1.5);
    CHECK(bloch_norm(AF::monomial(1, 1.0)) == 1.0);
    CHECK(bloch_norm(AF::log_two_sided(0.5)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(bloch_seminorm(AF::taylor({0.0, 1.0, 1.0}), BlochMode::closed_form), UnsupportedError);
}

TEST_CASE("numeric Bloch seminorm agrees with closed forms") {
    const std::vector<AF> fs{AF::moebius({0.5, 0.2}),       AF::moebius({0.9, 0.0}),  AF::log_one_sided(-0.5),
                             AF::log_two_sided(0.5),        AF::monomial(1, 2.0),     AF::monomial(5, 1.0),
                             AF::kernel({0.4, -0.3}, 3.0, 0.5), AF::kernel({0.6, 0.0}, 1.0, 2.0),
                             AF::extremal_fzeta(1.0, 0.0, {0.3, 0.4})};
    for (const auto& f : fs) {
        CAPTURE(f.kind());
        const double cf = bloch_seminorm(f, BlochMode::closed_form);
        const double nu = bloch_seminorm(f, BlochMode::numeric);
        CHECK(std::abs(cf - nu) <= 1e-6 * cf);
        // a sup over sample points undershoots, up to rounding near the circle
        CHECK(nu <= cf * (1.0 + 1e-7));
    }
}

TEST_CASE("Bloch seminorm is Moebius invariant") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> N(0.0, 1.0);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<cplx> c(6);
        for (int n = 1; n < 6; ++n) c[n] = {N(rng) / n, N(rng) / n};
        const auto f = AF::taylor(c);
        const double base = bloch_seminorm(f, BlochMode::numeric);
        const cplx a = random_point(rng, 0.7);
        const double shifted = bloch_seminorm(AF::moebius_shift(f, a), BlochMode::numeric);
        CHECK(std::abs(base - shifted) <= 1e-6 * base);
    }
}

TEST_CASE("normalize_bloch") {
    const auto m = normalize_bloch(AF::monomial(1, 5.0));
    REQUIRE(std::holds_alternative<model::Monomial>(m.model()));
    CHECK(std::get<model::Monomial>(m.model()).n == 1);
    CHECK(std::get<model::Monomial>(m.model()).c == cplx(1.0, 0.0));

    const cplx a{0.3, 0.4};
    const auto g = normalize_bloch(AF::moebius(a));
    for (cplx z : {cplx{0.0, 0.0}, cplx{0.2, -0.5}, cplx{-0.7, 0.1}}) {
        CHECK(std::abs(eval(g, z) - (eval(AF::moebius(a), z) - a)) < 1e-15);
    }
    CHECK(bloch_seminorm(g) == 1.0);

    const auto fz = normalize_bloch(AF::extremal_fzeta({2.0, 0.0}, {1.0, 1.0}, {0.5, 0.0}));
    CHECK(std::abs(eval(fz, 0.0)) < 1e-15);
    CHECK(bloch_seminorm(fz) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(normalize_bloch(AF::constant({2.0, 1.0})), DegenerateInputError);
}

TEST_CASE("singular directions and boundary distance") {
    CHECK(AF::log_one_sided(1.0).boundary_distance() == 0.0);
    CHECK(AF::log_two_sided(1.0).singular_directions().size() == 2);
    CHECK(AF::monomial(4, 1.0).singular_directions().empty());
    CHECK(std::isinf(AF::monomial(4, 1.0).boundary_distance()));
    CHECK(AF::moebius({0.0, 0.8}).boundary_distance() == doctest::Approx(0.25));
    CHECK(AF::moebius({0.0, 0.8}).singular_directions().at(0) == doctest::Approx(M_PI / 2));
    // phi_a sends 1 to -1 for real a, so the log singularity moves to the opposite point
    const auto s = AF::moebius_shift(AF::log_one_sided(1.0), 0.5);
    CHECK(s.boundary_distance() == doctest::Approx(0.0).epsilon(1e-15));
    bool at_minus_one = false;
    for (double d : s.singular_directions()) at_minus_one |= std::abs(std::abs(d) - M_PI) < 1e-12;
    CHECK(at_minus_one);
}

TEST_CASE("function spec grammar") {
    CHECK(eval(parse_function_spec("mono:1,1,0"), {0.3, 0.0}) == cplx(0.3, 0.0));
    CHECK(std::holds_alternative<model::Moebius>(parse_function_spec("moebius:0.5,0").model()));
    CHECK(std::holds_alternative<model::Kernel>(parse_function_spec("kernel:0.1,0.2,2,0").model()));
    CHECK(std::holds_alternative<model::LogOneSided>(parse_function_spec("log1:-0.5").model()));
    CHECK(std::holds_alternative<model::LogTwoSided>(parse_function_spec("log2:0.5").model()));
    const auto t = parse_function_spec("taylor:0,0,1,0,0.5,0");
    CHECK(eval(t, {0.5, 0.0}) == cplx(0.5 + 0.125, 0.0));
    const auto b = parse_function_spec("b1:0.5,0,0.3,0;0.5,0,-0.2,0.1");
    CHECK(std::get<model::AtomicB1>(b.model()).atoms.size() == 2);
    CHECK(std::get<model::AtomicB1>(parse_function_spec("b1:").model()).atoms.empty());
    CHECK_THROWS_AS(parse_function_spec("mono:1,1"), ArgumentError);
    CHECK_THROWS_AS(parse_function_spec("nope:1"), ArgumentError);
    CHECK_THROWS_AS(parse_function_spec("log1:abc"), ArgumentError);
    CHECK_THROWS_AS(parse_function_spec("moebius:1.5,0"), DomainError);
}
