import math

import pytest

import primroot as pr


def test_prime_engine_basics():
    assert pr.is_prime(3329)
    assert pr.is_prime(2**64 - 2**32 + 1)
    assert not pr.is_prime(1)
    assert pr.factorize(3328) == [(2, 8), (13, 1)]
    assert pr.prime_count(10**6) == 78498
    assert pr.primorial(4) == "210"
    assert pr.primorial_index(100) == 3
    assert pr.least_prime_in_progression(30, 1, 10_000) == 31


def test_certified_evaluation():
    rec = pr.certify_c(3329, digits=6)
    assert rec["prefix"] == "0.461399"
    assert rec["depth_J"] == 2
    num, den = pr.totient_ratio(3328)
    assert (num, den) == ("6", "13")
    assert pr.choose_depth(3, 1) == 3
    assert abs(pr.matrix_product(5, 40) - 0.7603) < 5e-5


def test_bounds_and_overhead():
    assert abs(pr.bound_B(10) - 0.0884704) < 1e-6
    rep = pr.overhead(3329)
    assert rep["overhead_2dp"] == "2.17"
    assert rep["omega"] == 2
    assert pr.coarse_lower_bound(3329) is None
    assert pr.coarse_lower_bound(2**31 + 11) == pytest.approx(
        0.56 / math.log(2**31 + 11)
    )


def test_limit_law():
    values, masses = pr.exact_atoms(2)
    assert len(values) == 4
    assert values[-1] == 0.5
    assert masses[-1] == pytest.approx(3 / 8)
    assert sum(masses) == pytest.approx(1.0, abs=1e-12)

    a = pr.sample_truncated(3, 1000, seed=7)
    b = pr.sample_truncated(3, 1000, seed=7)
    assert a == b
    assert all(0 < v <= 0.5 for v in a)

    assert pr.q_product(10) == pytest.approx(0.3125)
    assert pr.smooth_kernel_density(2, 5) == pytest.approx(3 / 8)
    partial, rem = pr.tail_mean(104743, 10**7)
    assert partial + rem < 1e-5
    assert pr.wasserstein_bound(10_000) < 5e-6


def test_analytic_products():
    assert pr.charfun_sq(0.0, 10**5) == 1.0
    value, tail = pr.moment(1.0, 10**6)
    assert 0.37 < value < 0.38
    assert tail > 0
    zero = pr.mellin(complex(0.0, math.pi / math.log(1.5)), 101)
    assert abs(zero) < 1e-10
    ec = pr.endpoint_constants(10**6)
    assert ec["kappa"] == pytest.approx(0.7413, abs=5e-4)
    assert ec["singular_series"] == pytest.approx(1.3203, abs=5e-4)


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        pr.jump_weight(4)
    with pytest.raises(RuntimeError):
        pr.exact_atoms(21)


def test_scan_and_witness():
    r = pr.scan_min_c(1000)
    assert pr.is_prime(r["argmin_p"])
    assert 0 < r["min_c"] < 0.5
    w = pr.witness(3, 10**6)
    assert w["p_star"] == 31
    missing = pr.witness(2, 5)
    assert missing["p_star"] is None
