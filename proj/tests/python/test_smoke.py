import math

import pytest

import bergman as bg


def test_special_functions():
    assert bg.gamma(5.0) == pytest.approx(24.0, rel=1e-14)
    assert bg.beta(2.0, 3.0) == pytest.approx(1.0 / 12.0, rel=1e-14)
    with pytest.raises(bg.DomainError):
        bg.gamma(-1.0)


def test_norm_of_z():
    z = bg.Function.monomial(1)
    assert bg.bergman_norm(z, 2.0, 0.0) == pytest.approx(math.sqrt(0.5), rel=1e-12)
    assert z(0.5j) == pytest.approx(0.5j)
    assert z.kind == "mono"


def test_parse_and_bloch():
    f = bg.Function.parse("moebius:0.5,0")
    assert bg.bloch_norm(f) == pytest.approx(1.5, rel=1e-12)
    with pytest.raises(bg.ArgumentError):
        bg.Function.parse("nonsense:1")


def test_kernel_attains_pointwise_bound():
    zeta, p, alpha = 0.3 + 0.4j, 3.0, 0.5
    k = bg.Function.kernel(zeta, p, alpha)
    n = bg.bergman_norm(k, p, alpha, rel_tol=1e-10)
    assert abs(k(zeta)) == pytest.approx(bg.pointwise_bound(n, p, alpha, zeta), rel=1e-8)


def test_closed_forms():
    assert bg.contractivity_threshold(1.0) == pytest.approx(1.5, rel=1e-14)
    assert bg.growth_lower(0.0, 1.0) == pytest.approx(1.0 / 12.0, rel=1e-12)
    assert bg.bound_2n(0.0, 2, 1.0) == pytest.approx(math.sqrt(2.0), rel=1e-12)


def test_verify_inclusion_passes():
    reports = bg.verify_inclusion(0.0, 1.0)
    assert reports
    assert all(r["passed"] for r in reports)


def test_small_search():
    e = bg.search_c_tilde(0.0, 3.0, n_coeffs=4, restarts=2, max_iters=150, rel_tol=1e-7)
    assert e["c_tilde"] >= bg.growth_lower(0.0, 3.0) - 1e-6
    assert e["c_tilde"] <= bg.growth_upper(0.0, 3.0) + 1e-6
    assert abs(e["coefficients"][0]) < 1e-12


def test_cli_in_process():
    code, out, _ = bg.run_cli(["norm", "--f", "mono:1,1,0", "--p", "2"])
    assert code == 0
    assert float(out) == pytest.approx(math.sqrt(0.5), rel=1e-14)
    assert bg.run_cli(["frobnicate"])[0] == 2
