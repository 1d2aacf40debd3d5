"""Acceptance criteria 1-10, each at its stated tolerance.

Every criterion records a PASS/FAIL line that is printed in the terminal
summary.  Parts that cannot be met as stated are strict xfails; see the
decision ledger for the analysis.
"""

from __future__ import annotations

import json
import math
import os
import subprocess
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import mpmath
import numpy as np
import pytest

from conftest import record
from diskscatter.cli import figure_qr_profile
from diskscatter.resonance import (exclusion_intervals, find_quasi_resonances, measure_bound,
                                   omega01_bounds)
from diskscatter.scatter import reflection_coeff
from diskscatter.specfun import (clear_zero_cache, cylinder_arrays, landau_bounds, sup_abs_jn,
                                 zeros)
from diskscatter.verify import check
from diskscatter.verify.core import BoundCheck
from diskscatter.verify.statements import (PROPSG_ITEMS, _merged_length, propsg_domain,
                                           propsg_values)

# ------------------------------------------------------------------ 1

W30_1 = 17.4211682
W30_8 = 31.4683226


def test_c1_resonance_count_and_locations():
    clear_zero_cache()
    t0 = time.perf_counter()
    recs = find_quasi_resonances(30, 2.0)
    elapsed = time.perf_counter() - t0
    t = zeros(30, 1)
    lo, hi = t.jp(1) / 2, t.y1
    inside = all(lo < r.location < hi for r in recs)
    d1 = abs(recs[0].location - W30_1)
    d8 = abs(recs[-1].location - W30_8)
    ok = len(recs) == 8 and inside and d1 <= 1e-6 and d8 <= 1e-6 and elapsed < 1.0
    record(1, ok, f"{len(recs)} resonances, |w1-{W30_1}|={d1:.1e}, |w8-{W30_8}|={d8:.1e}, "
                  f"{elapsed:.2f} s")
    assert len(recs) == 8 and inside
    assert d1 <= 1e-6 and d8 <= 1e-6
    assert elapsed < 1.0


def test_c1_interval_upper_endpoint():
    assert abs(zeros(30, 1).y1 - 32.98) <= 0.01


@pytest.mark.xfail(strict=True, reason="j'_{30,1}/2 = 16.2671, 0.013 below the quoted 16.28")
def test_c1_interval_lower_endpoint():
    lo = zeros(30, 1).jp(1) / 2
    # mpmath oracle for the same quantity
    ref = float(mpmath.besseljzero(30, 1, derivative=1)) / 2
    assert abs(lo - ref) < 1e-12
    ok = abs(lo - 16.28) <= 0.01
    record(1, ok, f"lower endpoint {lo:.4f} vs 16.28")
    assert ok


# ------------------------------------------------------------------ 2


def test_c2_residuals_at_all_resonances():
    worst, count = 0.0, 0
    for lam in (1.5, 2.0, 5.0, 10.0):
        for n in range(1, 41):
            for r in find_quasi_resonances(n, lam):
                worst = max(worst, r.residual)
                count += 1
    ok = worst <= 1e-8 and count > 0
    record(2, ok, f"{count} resonances, max |R+1| = {worst:.2e}")
    assert ok


# ------------------------------------------------------------------ 3

J01_ORACLE = 2.404825557695773  # bisection on the power series, see test_specfun


def test_c3_special_functions():
    t0 = time.perf_counter()
    xs = np.logspace(-4, 3, 2000)
    worst = 0.0
    for n in range(201):
        j, y, jp, yp = cylinder_arrays(n, xs, strict=False)
        with np.errstate(all="ignore"):
            ok = np.isfinite(y) & np.isfinite(yp) & (np.abs(y) < 1e290) & (np.abs(j) > 1e-290)
            w = np.abs((j * yp - jp * y) * np.pi * xs / 2 - 1)
        worst = max(worst, float(w[ok].max()))
    t = zeros(0, 1)
    approx = max(abs(t.j(1) - 2.40), abs(t.y1 - 0.894), abs(t.yp1 - 2.20))
    exact = abs(t.j(1) - J01_ORACLE)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-12 and approx <= 5e-3 and exact <= 1e-12 and t.jp(1) == 0 and elapsed < 10
    record(3, ok, f"Wronskian {worst:.1e}, quoted zeros within {approx:.1e}, "
                  f"oracle {exact:.1e}, {elapsed:.2f} s")
    assert ok


# ------------------------------------------------------------------ 4


def test_c4_landau():
    bad = []
    for n in range(1, 201):
        lo, hi = landau_bounds(n)
        s = sup_abs_jn(n)
        if not lo <= s <= hi:
            bad.append(n)
    record(4, not bad, f"violations at n = {bad}" if bad else "n = 1..200 inside")
    assert not bad


# ------------------------------------------------------------------ 5


def _holds(lhs, rhs, rel):
    return BoundCheck.build("x", {}, lhs, rhs, rel).passed


def test_c5_appendix_suite():
    fails = []
    for n in (1, 2, 5, 10, 30, 100):
        for item in PROPSG_ITEMS:
            lo, hi = propsg_domain(item, n)
            # 500 interior points: several items hold on open intervals ending at a pole
            xs = lo + (hi - lo) * np.arange(1, 501) / 501
            lhs, rhs, rel = propsg_values(item, n, xs)
            for a, b, x in zip(lhs, rhs, xs):
                if not _holds(a, b, rel):
                    fails.append((item, n, float(x)))
    for item in ("zeta0-value", "zeta0-ratio"):
        if not check("prop-logyn", item=item).passed:
            fails.append((item,))
    for y in (2.0, 10.0, 100.0):
        for x in np.logspace(-3, 1.5, 500):
            for item in ("upper", "lower"):
                if not check("lemma-logconcave", item=item, oeps=float(x), y=y).passed:
                    fails.append(("logconcave", item, y, float(x)))
    record(5, not fails, f"{len(fails)} violations")
    assert not fails, fails[:10]


# ------------------------------------------------------------------ 6 and 10

B3_ITEMS = {("prop-lleq1", "b3"), ("lemma-firstcase", "b3")}


def _verify_all(path):
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "diskscatter.cli", "verify", "all",
                           "--seed", "42", "--out", str(path)],
                          capture_output=True, env={**os.environ, "PYTHONHASHSEED": "0"})
    return proc, time.perf_counter() - t0


@pytest.fixture(scope="module")
def verify_runs(tmp_path_factory):
    d = tmp_path_factory.mktemp("verify")
    paths = [d / "run1.jsonl", d / "run2.jsonl"]
    with ThreadPoolExecutor(2) as pool:
        out = list(pool.map(_verify_all, paths))
    return paths, out


def _load(path):
    with open(path) as fh:
        return [json.loads(line) for line in fh]


def test_c6_theorem_sweeps(verify_runs):
    paths, out = verify_runs
    elapsed = out[0][1]
    rows = _load(paths[0])
    checks = [r for r in rows if "statement" in r]
    summaries = {r["summary"]: r for r in rows if "summary" in r}
    assert len(summaries) == 25
    failing = {(c["statement"], c["params"].get("item")) for c in checks if not c["pass"]}
    n_fail = sum(not c["pass"] for c in checks)
    upper_counts = {s: r["count"] for s, r in summaries.items()}
    record(6, n_fail == 0 and elapsed < 300,
           f"{len(checks)} checks, {n_fail} failures in {sorted(failing)}, {elapsed:.0f} s")
    # everything except the b3 items of the two S_n(n) statements holds
    assert failing <= B3_ITEMS
    assert elapsed < 300
    lower = {"thm-ob-ls-lower", "thm-ob-lr", "thm-ob-lb-lower"}
    assert all(c >= 1000 for s, c in upper_counts.items() if s not in lower)
    assert all(summaries[s]["grid_sup"] for s in lower)


@pytest.mark.xfail(strict=True, reason="|S_n(n)| dips below 1/2 for 13 <= n <= 48 "
                                       "at admissible contrasts; see the ledger")
def test_c6_zero_failures_literal(verify_runs):
    paths, _ = verify_runs
    rows = _load(paths[0])
    assert all(c["pass"] for c in rows if "statement" in c)


def test_c10_determinism(verify_runs):
    paths, out = verify_runs
    a, b = paths[0].read_bytes(), paths[1].read_bytes()
    codes = [p.returncode for p, _ in out]
    ok = a == b and len(a) > 0
    record(10, ok, f"{len(a)} bytes, identical={a == b}, exit codes {codes}")
    assert ok
    # exit status reflects the b3 failures
    assert codes == [1, 1]


# ------------------------------------------------------------------ 7


def test_c7_exclusion_measures_and_ito_bound():
    worst_measure, worst_bound, samples = -math.inf, -math.inf, 0
    for lam in (8.0, 20.0, 100.0):
        for n in range(31):
            for tau in (0.05, 0.1, 0.25):
                ivs = exclusion_intervals(n, lam, tau)
                m = _merged_length([(iv.alpha_end, iv.beta_end) for iv in ivs])
                worst_measure = max(worst_measure, m / measure_bound(n, lam, tau))
                worst_bound = max(worst_bound, _ito_ratio(n, lam, tau, ivs))
                samples += 1
    ok = worst_measure <= 1 and worst_bound <= 1
    record(7, ok, f"{samples} (lambda, n, tau) cases, max measure/bound {worst_measure:.3f}, "
                  f"max |S|/bound {worst_bound:.3f}")
    assert ok


def _ito_ratio(n, lam, tau, ivs):
    """max over a dense grid outside the intervals of |R H| / (bound |J|)."""
    from diskscatter.quotients import zeta0

    top = zeros(n, 1).y1 if n >= 1 else zeta0()
    lo = 1e-3 * top
    xs = np.concatenate([np.linspace(lo, top, 2000, endpoint=False),
                         [x for iv in ivs for x in (iv.alpha_end * (1 - 1e-9),
                                                    iv.beta_end * (1 + 1e-9))]])
    xs = xs[(xs > 0) & (xs < top)]
    keep = np.ones(xs.shape, bool)
    for iv in ivs:
        keep &= ~((xs >= iv.alpha_end) & (xs <= iv.beta_end))
    xs = xs[keep]
    j, y, _, _ = cylinder_arrays(n, xs, strict=False)
    r = np.asarray(reflection_coeff(n, xs, lam))
    with np.errstate(all="ignore"):
        lhs = np.abs(r) * np.hypot(j, y)
    c = 4.5 / tau if n >= 1 else 5.0 / (3.0 * tau)
    rhs = c * np.abs(j)
    ok = np.isfinite(lhs) & (rhs > 0)
    return float(np.max(lhs[ok] / rhs[ok]))


# ------------------------------------------------------------------ 8


def test_c8_muzeroone():
    rows = []
    for lam in (math.e ** 2, 10.0, 100.0):
        lo, hi = omega01_bounds(lam)
        w = find_quasi_resonances(0, lam)[0].location
        rows.append((lam, lo < w < hi))
    ok = all(flag for _, flag in rows)
    record(8, ok, ", ".join(f"lambda={lam:.3g}: {'inside' if f else 'outside'}"
                            for lam, f in rows))
    assert ok


# ------------------------------------------------------------------ 9

QR2_RATIO = 597588218.47378087  # frozen from the first run
QR3_RATIO = 0.681802070182154


def test_c9_figures():
    qr2 = figure_qr_profile(30, 2.0, 1, 400)
    qr3 = figure_qr_profile(30, 2.0, None, 400)
    r2, r3 = qr2["meta"]["ratio_at_eps"], qr3["meta"]["ratio_at_eps"]
    rows = np.array(qr2["rows"], dtype=float)
    at2 = rows[rows[:, 0] == 2.0][0]
    far = at2[1] / at2[2]
    # blow-up is localized near r = eps: the full field peaks there
    peak = rows[np.argmax(rows[:, 1]), 0]
    ok = r2 > 1e4 and r3 <= 1e2 and 1e-2 <= far <= 1e2 and 0.5 <= peak <= 1.5
    record(9, ok, f"qr2 ratio at eps {r2:.3e}, qr3 ratio {r3:.3f}, qr2 ratio at 2eps {far:.3f}")
    assert ok
    assert r2 == pytest.approx(QR2_RATIO, rel=1e-6)
    assert r3 == pytest.approx(QR3_RATIO, rel=1e-9)
