import csv
import io
import math

import mpmath
import numpy as np
import pytest
from scipy import special

from diskscatter.errors import DomainError, ParameterError
from diskscatter.quotients import phi
from diskscatter.resonance import (broadband_set, eta_max, exclusion_intervals, find_quasi_resonances,
                                   measure_bound, n0_large, n0_small, n0_thresholds, omega01_bounds,
                                   resonances_to_csv, tail_measure_bound, write_exclusions)
from diskscatter.scatter import ScatterConfig, reflection_coeff
from diskscatter.specfun import first_zero_ratio, zeros


def _length(ivs):
    return sum(iv.length for iv in ivs)


def test_order_thirty_contrast_two():
    recs = find_quasi_resonances(30, 2.0)
    assert [r.branch for r in recs] == list(range(1, 9))
    assert recs[0].location == pytest.approx(17.421168203137952, rel=1e-14)
    assert recs[-1].location == pytest.approx(31.46832268568569, rel=1e-14)
    for r in recs:
        assert r.u_lo < r.location < r.u_hi
        assert r.residual <= 1e-8


def test_no_resonances_below_the_threshold():
    t = zeros(5, 1)
    assert t.j(1) / t.y1 > 1.01
    assert find_quasi_resonances(5, 1.01) == []
    assert find_quasi_resonances(5, 0.5) == []


def test_negative_order_mirrors():
    a = find_quasi_resonances(-7, 3.0)
    b = find_quasi_resonances(7, 3.0)
    assert [r.location for r in a] == [r.location for r in b]


def test_window_filter():
    recs = find_quasi_resonances(30, 2.0, window=(20.0, 25.0))
    assert recs and all(20 <= r.location <= 25 for r in recs)


def test_resonance_against_mpmath_root():
    # order 3, contrast 12: the first root of F from mpmath findroot
    r = find_quasi_resonances(3, 12.0)[0]
    lam = mpmath.mpf(12)
    with mpmath.workdps(40):
        f = lambda x: (mpmath.bessely(3, x, derivative=1) * mpmath.besselj(3, lam * x)
                       - lam * mpmath.besselj(3, lam * x, derivative=1) * mpmath.bessely(3, x))
        ref = mpmath.findroot(f, (r.u_lo * (1 + 1e-12), r.u_hi * (1 - 1e-12)), solver="anderson")
    assert r.location + r.correction == pytest.approx(float(ref), rel=1e-13)


@pytest.mark.parametrize("n,lam", [(1, 8.0), (4, 3.0), (12, 1.5), (0, 20.0)])
def test_uniqueness_on_each_branch(n, lam):
    # independent fine scan of F with scipy
    for r in find_quasi_resonances(n, lam):
        x = np.linspace(r.u_lo, r.u_hi, 20001)[1:-1]
        f = (special.yvp(n, x) * special.jv(n, lam * x)
             - lam * special.jvp(n, lam * x) * special.yv(n, x))
        assert np.count_nonzero(np.sign(f[:-1]) != np.sign(f[1:])) == 1


# ----------------------------------------------------------- omega_{0,1}


def test_omega01_bounds_at_e_squared():
    lam = math.exp(2)
    lo, hi = omega01_bounds(lam)
    assert lo == pytest.approx(math.exp(-2) * (1 - 1 / (2 * math.sqrt(2))), rel=1e-14)
    assert (lo, hi) == pytest.approx((0.0875, 0.1832), abs=5e-5)
    w = find_quasi_resonances(0, lam)[0].location
    assert lo < w < hi


def test_omega01_bounds_large_contrast():
    lo, hi = omega01_bounds(100.0)
    assert lo < find_quasi_resonances(0, 100.0)[0].location < hi
    assert hi < omega01_bounds(math.exp(2))[0]


def test_omega01_domain():
    with pytest.raises(DomainError):
        omega01_bounds(7.0)


# ------------------------------------------------------------ exclusions


@pytest.mark.parametrize("n,lam,tau", [(1, 8.0, 0.25), (0, 10.0, 0.1), (5, 20.0, 0.05)])
def test_interval_measure_bounds(n, lam, tau):
    ivs = exclusion_intervals(n, lam, tau)
    assert ivs
    assert _length(ivs) <= measure_bound(n, lam, tau)


def test_example_bound_value():
    assert measure_bound(1, 8.0, 0.25) == pytest.approx(6 * 0.25 * math.log(8) / 8)
    assert measure_bound(1, 8.0, 0.25) == pytest.approx(0.39, abs=5e-3)


@pytest.mark.parametrize("n,lam", [(1, 8.0), (3, 20.0), (0, 10.0)])
def test_intervals_contain_resonances(n, lam):
    ivs = exclusion_intervals(n, lam, 0.1)
    for iv in ivs:
        assert iv.alpha_end < iv.resonance < iv.beta_end
        assert phi(n, lam, iv.resonance) == pytest.approx(-1.0, abs=1e-8)
    locs = {r.branch: r.location for r in find_quasi_resonances(n, lam)}
    for iv in ivs:
        if iv.branch in locs:
            assert iv.resonance == pytest.approx(locs[iv.branch], rel=1e-12)


def test_interval_endpoints_solve_phi():
    n, lam, tau = 2, 9.0, 0.2
    for iv in exclusion_intervals(n, lam, tau):
        assert phi(n, lam, iv.alpha_end) == pytest.approx(-1 + tau, abs=1e-8)
        assert phi(n, lam, iv.beta_end) == pytest.approx(-1 - tau, abs=1e-8)


def test_intervals_sorted_disjoint():
    ivs = exclusion_intervals(2, 40.0, 0.25)
    assert len(ivs) > 3
    assert all(a.beta_end < b.alpha_end for a, b in zip(ivs, ivs[1:]))


def test_n0_intervals_inside_window():
    from diskscatter.quotients import zeta0
    from diskscatter.scatter import m_lambda

    for iv in exclusion_intervals(0, 30.0, 0.25):
        assert m_lambda(30.0) <= iv.alpha_end and iv.beta_end <= zeta0()


@pytest.mark.parametrize("n,lam", [(1, 8.0), (0, 12.0), (6, 25.0)])
def test_measure_monotone_in_tau(n, lam):
    ms = [_length(exclusion_intervals(n, lam, t)) for t in (0.01, 0.05, 0.1, 0.2, 0.25)]
    assert all(a <= b for a, b in zip(ms, ms[1:]))


def test_exclusion_parameter_errors():
    with pytest.raises(ParameterError):
        exclusion_intervals(1, 8.0, 0.3)
    with pytest.raises(ParameterError):
        exclusion_intervals(1, 8.0, 0.0)
    with pytest.raises(DomainError):
        exclusion_intervals(1, 7.0, 0.1)


# ------------------------------------------------------------- broadband


def test_broadband_measure():
    cfg = ScatterConfig.from_dimensionless(20.0, 1.0, eps=0.05)
    eta = eta_max(20.0)
    ex = broadband_set(cfg, alpha=1.0, eta=eta, window=(0.0, 3.0))
    assert ex.intervals
    assert ex.measure_one <= eta / cfg.eps
    assert ex.total_measure <= ex.measure_one + ex.measure_zero + 1e-15
    mid = 0.5 * (ex.intervals[0].alpha_end + ex.intervals[0].beta_end) / cfg.eps
    assert ex.contains(mid)


def test_broadband_high_contrast_corollary():
    eps, beta = 0.1, 0.5
    lam = 1 / eps
    cfg = ScatterConfig.from_dimensionless(lam, 1.0, eps=eps)
    ex = broadband_set(cfg, alpha=1.0, eta=eps ** beta * eta_max(lam), window=(0.0, 4.0),
                       include_zero=False)
    assert ex.measure_one <= eps ** beta * abs(math.log(eps))


def test_broadband_empty_window():
    lam = 10.0
    cfg = ScatterConfig.from_dimensionless(lam, 0.01, eps=1.0)
    top = 0.9 * zeros(1, 1).jp(1) / lam
    ex = broadband_set(cfg, alpha=1.0, eta=0.1, window=(0.0, top), include_zero=False)
    assert ex.intervals == () and ex.total_measure == 0


def test_broadband_parameter_errors():
    cfg = ScatterConfig.from_dimensionless(10.0, 1.0)
    with pytest.raises(ParameterError):
        broadband_set(cfg, alpha=1.0, eta=10.0, window=(0.0, 1.0))
    with pytest.raises(ParameterError):
        broadband_set(cfg, alpha=1.0, eta=0.01, window=(1.0, 0.5))
    with pytest.raises(DomainError):
        broadband_set(ScatterConfig.from_dimensionless(5.0, 1.0), alpha=1.0, eta=0.01,
                      window=(0.0, 1.0))


def test_tail_measure_bound():
    eta, alpha = 0.3, 1.0
    direct = sum(eta * alpha * n / (1 + n) ** (2 + alpha) for n in range(11, 200001))
    assert tail_measure_bound(eta, alpha, 10) == pytest.approx(direct, rel=1e-4)
    assert tail_measure_bound(eta, alpha, 100) < tail_measure_bound(eta, alpha, 10)


def test_exclusion_csv():
    cfg = ScatterConfig.from_dimensionless(20.0, 1.0, eps=0.5)
    ex = broadband_set(cfg, alpha=1.0, eta=0.05, window=(0.0, 2.0))
    buf = io.StringIO()
    write_exclusions(buf, ex)
    lines = buf.getvalue().splitlines()
    head = [l for l in lines if l.startswith("#")]
    assert any("total_measure" in l for l in head)
    rows = list(csv.DictReader([l for l in lines if not l.startswith("#")]))
    assert len(rows) == len(ex.intervals)
    assert float(rows[0]["alpha_end"]) == ex.intervals[0].alpha_end / ex.eps


# ------------------------------------------------------------ thresholds


def test_n0_small_limit():
    assert n0_small(1e-9) == 13
    assert math.ceil((49 / 9) ** 1.5) == 13


def test_n0_small_definition():
    for lam in (0.1, 0.5, 0.9):
        n = n0_small(lam)
        ok = lambda m: lam ** 2 <= 1 - 49 / (9 * m ** (2 / 3))
        assert ok(n) and not ok(n - 1)


def test_n0_large():
    n = n0_large(2.0)
    assert n <= 30
    assert 2.0 > first_zero_ratio(n)
    assert n == 0 or 2.0 <= first_zero_ratio(n - 1)
    big = n0_large(1 + 1e-9)
    assert 0 < big < 10 ** 20
    assert n0_thresholds(0.5) == (n0_small(0.5), None)
    assert n0_thresholds(1.0) == (None, None)


def test_threshold_domains():
    with pytest.raises(DomainError):
        n0_small(1.0)
    with pytest.raises(DomainError):
        n0_large(1.0)


def test_resonance_csv(tmp_path):
    recs = find_quasi_resonances(30, 2.0)
    p = tmp_path / "r.csv"
    resonances_to_csv(recs, p, header={"lambda": 2.0})
    lines = p.read_text().splitlines()
    rows = list(csv.DictReader([l for l in lines if not l.startswith("#")]))
    assert len(rows) == 8
    assert [float(r["omega_nk"]) for r in rows] == [r.location for r in recs]
    assert abs(complex(reflection_coeff(30, float(rows[3]["omega_nk"]), 2.0)) + 1) <= 1e-8
