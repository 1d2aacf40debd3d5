"""Executable forms of the scattering estimates and the special-function lemmas.

Every statement registers an evaluator (hypothesis checks, left and right
sides) and a sampler that draws parameters inside its hypotheses.

Conventions shared by all evaluators:

* ``oeps`` is x = sqrt(q0) omega eps, ``lam`` the contrast and
  ``rho = R/eps >= 1`` the observation radius in units of eps.
* ``modes`` is a list of ``[n, re(a_n), im(a_n)]`` (or a mapping, or an
  explicit ModeCoefficients); only finitely many modes are supported.
* |R_n H_n(x)| at the boundary is evaluated as |S_n(x)| |J_n(x)|, which is
  the same quantity written without overflowing factors.
* Suprema over frequency on the left of a lower bound are taken over a
  log grid with 512 points per decade, joined with the quasi-resonant
  frequencies and the points oeps = n (and n/lambda); the grid maximiser is
  then re-evaluated through the trace and norm pipeline.  Suprema on the
  left of an upper bound are checked pointwise at sampled frequencies,
  which is equivalent.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize_scalar

from ..errors import DomainError, HypothesisError
from ..norms import SQRT_2PI, h_sigma, h_sigma_star, n_bold, n_script
from ..quotients import KAPPA_PLUS, critical_constants, g_values, k_values
from ..resonance import (broadband_set, eta_max, eta_zero, exclusion_intervals,
                         find_quasi_resonances, measure_bound, n0_large, n0_small,
                         omega01_bounds, tail_measure_bound, _merged_length)
from ..scatter import (ModeCoefficients, ScatterConfig, field_trace, m_lambda,
                       reflection_coeff, s_ratio_values)
from ..specfun import cylinder_arrays, j_ratio, zeros
from .core import BoundCheck, Statement, register

GRID_PER_DECADE = 512
SET_ORDER_CAP = 6  # orders kept in sampled exclusion sets (= max mode order there)
TWO_PI = 2.0 * math.pi
ARG_CAP = 5000.0  # samplers keep Bessel arguments below this


# --------------------------------------------------------------- small tools


def _req(cond: bool, hypothesis: str) -> None:
    if not cond:
        raise HypothesisError(hypothesis)


@lru_cache(maxsize=None)
def _y01() -> float:
    return zeros(0, 1).y1


@lru_cache(maxsize=None)
def _zeta0() -> float:
    return critical_constants(0).zeta_n


def _abs_j(n: int, x: float) -> float:
    return abs(float(cylinder_arrays(abs(n), np.array([x]), strict=False)[0][0]))


def _abs_h(n: int, z: float) -> float:
    j, y, _, _ = cylinder_arrays(abs(n), np.array([z]), strict=False)
    return math.hypot(float(j[0]), float(y[0]))


def _abs_s(n: int, x: float, lam: float) -> float:
    return abs(complex(np.atleast_1d(s_ratio_values(n, np.array([x]), lam))[0]))


def _rh_boundary(n: int, x: float, lam: float) -> float:
    """|R_n(x) H_n(x)| computed as |S_n(x) J_n(x)|."""
    return _abs_s(n, x, lam) * _abs_j(n, x)


def _r0h0(x: float, lam: float, rho: float) -> float:
    """|R_0(x) H_0(x rho)|."""
    return abs(complex(reflection_coeff(0, x, lam))) * _abs_h(0, x * rho)


def _modes_obj(modes) -> ModeCoefficients:
    if isinstance(modes, ModeCoefficients):
        if modes.is_plane_wave:
            raise DomainError("statements are checked for finitely many incident modes")
        return modes
    if isinstance(modes, dict):
        return ModeCoefficients.explicit(modes)
    return ModeCoefficients.explicit({int(n): complex(re, im) for n, re, im in modes})


def _modes_list(modes) -> list:
    m = _modes_obj(modes)
    return [[int(n), float(a.real), float(a.imag)] for n, a in m.entries.items()]


def _pack(**kw) -> dict:
    out = {}
    for key, val in kw.items():
        if val is None:
            continue
        if key == "modes":
            val = _modes_list(val)
        elif isinstance(val, (np.floating, float)):
            val = float(val)
        elif isinstance(val, (np.integer, int)) and not isinstance(val, bool):
            val = int(val)
        out[key] = val
    return out


def _config(lam: float, oeps: float, eps: float) -> ScatterConfig:
    return ScatterConfig.from_dimensionless(lam, oeps, eps=eps)


def _scattered_norm(cfg: ScatterConfig, modes: ModeCoefficients, rho: float, sigma: float,
                    star: bool = False) -> float:
    tr = field_trace("scattered", cfg, modes, rho * cfg.eps, truncation=_support(modes))
    return (h_sigma_star if star else h_sigma)(tr, sigma).value


def _incident_star(cfg: ScatterConfig, modes: ModeCoefficients, sigma: float) -> float:
    tr = field_trace("incident", cfg, modes, cfg.eps, truncation=_support(modes))
    return h_sigma_star(tr, sigma).value


@lru_cache(maxsize=None)
def _sup_incident_cached(key: tuple, sigma: float) -> float:
    def f(xs):
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        return sum(w * cylinder_arrays(n, xs, strict=False)[0] ** 2 for n, w in key)

    top = max(n for n, _ in key) + 30.0
    step = 0.05
    xs = np.arange(step, top, step)
    i = int(np.argmax(f(xs)))
    res = minimize_scalar(lambda x: -f(x)[0], bounds=(max(xs[i] - step, 1e-12), xs[i] + step),
                          method="bounded", options={"xatol": 1e-10})
    best = max(float(f(xs[i])[0]), -float(res.fun))
    return SQRT_2PI * math.sqrt(best)


def _sup_incident_star(modes: ModeCoefficients, sigma: float) -> float:
    """sup over oeps of the H^sigma_* norm of the incident trace at |x| = eps (grid maximum)."""
    weight: dict[int, float] = {}
    for n, a in modes.entries.items():
        if n != 0:
            weight[abs(n)] = weight.get(abs(n), 0.0) + abs(a) ** 2 * (1.0 + abs(n)) ** (2 * sigma)
    if not weight:
        return 0.0
    return _sup_incident_cached(tuple(sorted(weight.items())), float(sigma))


def _a0(modes: ModeCoefficients) -> float:
    return abs(modes.coefficient(0))


def _support(modes: ModeCoefficients) -> int:
    return modes.support() or 0


def _inside(x: float, ivs) -> bool:
    return any(a <= x <= b for a, b in ivs)


# ------------------------------------------------------------------ sampling


def _u(rng, lo: float, hi: float) -> float:
    return float(rng.uniform(lo, hi))


def _logu(rng, lo: float, hi: float) -> float:
    return float(10.0 ** rng.uniform(math.log10(lo), math.log10(hi)))


def _open01(rng) -> float:
    return float(rng.uniform(1e-6, 1.0))


def _pick(rng, seq):
    return seq[int(rng.integers(len(seq)))]


def _draw_modes(rng, top: int = 8, skip_below: int = 0, single_lo: int | None = None) -> list:
    """A single mode, a truncated plane wave, or random |a_n| <= (1+|n|)^-2.

    Orders |n| < skip_below are zero; a single mode has |n| >= single_lo.
    """
    kind = int(rng.integers(3))
    lo = skip_below if single_lo is None else max(single_lo, skip_below)
    if kind == 0:
        m = int(rng.integers(lo, top + 1)) * (1 if rng.random() < 0.5 else -1)
        d = {m: complex(np.exp(1j * rng.uniform(0, TWO_PI)))}
    else:
        top_p = int(rng.integers(max(skip_below, 1), top + 1))
        ns = [n for n in range(-top_p, top_p + 1) if abs(n) >= skip_below]
        if kind == 1:
            phi = rng.uniform(0, TWO_PI)
            d = {n: complex(1j ** (n % 4) * np.exp(-1j * n * phi)) for n in ns}
        else:
            mod = rng.uniform(0, 1, len(ns))
            ph = rng.uniform(0, TWO_PI, len(ns))
            d = {n: complex(mod[i] * (1 + abs(n)) ** -2.0 * np.exp(1j * ph[i]))
                 for i, n in enumerate(ns)}
    return _modes_list(d)


def _draw_common(rng) -> dict:
    return {"sigma": _u(rng, -2.0, 2.0), "eps": _logu(rng, 0.03, 1.0)}


# ------------------------------------------------------- resonances and sets


@lru_cache(maxsize=None)
def _first_resonance(n: int, lam: float) -> float | None:
    """omega_{n,1} when it exists (first admissible branch only)."""
    if not lam > 1:
        return None
    hi = zeros(n, 1).j(1) / lam
    recs = find_quasi_resonances(n, lam, window=(0.0, hi), polish=False)
    return recs[0].location if recs and recs[0].branch == 1 else None


@lru_cache(maxsize=None)
def _all_resonances(n: int, lam: float) -> tuple:
    if not lam > 1:
        return ()
    return tuple(r.location for r in find_quasi_resonances(n, lam, polish=False))


@lru_cache(maxsize=None)
def _intervals(n: int, lam: float, tau: float) -> tuple:
    return tuple((iv.alpha_end, iv.beta_end) for iv in exclusion_intervals(n, lam, tau))


@lru_cache(maxsize=None)
def _one_set(lam: float, alpha: float, eta: float) -> tuple:
    """Intervals (x units) of I_1 for orders 1..SET_ORDER_CAP and their merged length."""
    cfg = ScatterConfig.from_dimensionless(lam, 1.0)
    ex = broadband_set(cfg, alpha, eta, (0.0, 1e6), include_zero=False, max_order=SET_ORDER_CAP)
    ivs = tuple((iv.alpha_end, iv.beta_end) for iv in ex.intervals)
    return ivs, ex.measure_one


@lru_cache(maxsize=None)
def _zero_set(lam: float, eta0: float) -> tuple:
    ivs = _intervals(0, lam, eta0 / (4.0 * eta_zero(lam)))
    return ivs, _merged_length(ivs)


def _tail_one(eta: float, alpha: float, cap: int = SET_ORDER_CAP) -> float:
    return tail_measure_bound(eta, alpha, cap)


def _draw_outside(rng, ivs, lo: float, hi: float) -> float:
    """Log-uniform frequency outside the intervals, often just outside an endpoint."""
    for _ in range(200):
        if ivs and rng.random() < 0.4:
            a, b = ivs[int(rng.integers(len(ivs)))]
            d = (b - a) * 10.0 ** rng.uniform(-6, 0)
            x = a - d if rng.random() < 0.5 else b + d
        else:
            x = _logu(rng, lo, hi)
        if x > 0 and not _inside(x, ivs):
            return float(x)
    raise DomainError("could not draw a frequency outside the exclusion set")


# ----------------------------------------------------------- grid suprema


def frequency_grid(lo: float, hi: float, extra=()) -> np.ndarray:
    """Log grid on [lo, hi] with GRID_PER_DECADE points per decade, plus extras."""
    count = max(2, int(math.ceil(GRID_PER_DECADE * math.log10(hi / lo))) + 1)
    pts = np.concatenate([np.logspace(math.log10(lo), math.log10(hi), count),
                          np.asarray([e for e in extra if lo <= e <= hi], dtype=float)])
    return np.unique(pts)


def scattered_norm_grid(modes: ModeCoefficients, lam: float, xs, rho: float, sigma: float,
                        star: bool) -> np.ndarray:
    """H^sigma (or H^sigma_*) norm of the scattered trace at R = rho eps on a grid of oeps."""
    xs = np.asarray(xs, dtype=float)
    weight: dict[int, float] = {}
    for n, a in modes.entries.items():
        weight[abs(n)] = weight.get(abs(n), 0.0) + abs(a) ** 2 * (1.0 + abs(n)) ** (2 * sigma)
    total = np.zeros(xs.shape)
    for m, w in weight.items():
        if star and m == 0:
            continue
        r = np.asarray(reflection_coeff(m, xs, lam))
        j, y, _, _ = cylinder_arrays(m, xs * rho, strict=False)
        with np.errstate(all="ignore"):
            v = np.abs(r) ** 2 * (j * j + y * y)
        v[~np.isfinite(v)] = 0.0
        total += w * v
    return SQRT_2PI * np.sqrt(total)


def _grid_sup(modes, lam, eps, xs, rho, sigma, star) -> tuple[float, float]:
    vals = scattered_norm_grid(modes, lam, xs, rho, sigma, star)
    i = int(np.argmax(vals))
    x = float(xs[i])
    return _scattered_norm(_config(lam, x, eps), modes, rho, sigma, star), x


# ============================================================ field estimates


def _ev_os_ls(lam, oeps, rho, sigma, modes, eps=1.0, item="main", p=None):
    m = _modes_obj(modes)
    _req(rho >= 1, "eps <= R")
    _req(0 < lam <= 1, "lambda <= 1")
    if item == "main":
        _req(0 < oeps < _y01(), "oeps < y_{0,1}")
    elif item == "p":
        _req(p is not None and p > 0, "p > 0")
        _req(all(abs(n) >= p for n in m.entries), "a_n = 0 for |n| < p")
        _req(0 < oeps < p, "oeps < p")
    else:
        raise DomainError(f"unknown item {item!r}")
    cfg = _config(lam, oeps, eps)
    lhs = _scattered_norm(cfg, m, rho, sigma)
    inc = _incident_star(cfg, m, sigma - 1.0 / 3.0)
    if item == "main":
        rhs = (1 - lam) * oeps * (3 / math.sqrt(rho) * inc + 9 * oeps * _a0(m) * _abs_h(0, oeps * rho))
    else:
        rhs = 3 * (1 - lam) * oeps / math.sqrt(rho) * inc
    return BoundCheck.build("thm-os-ls", _pack(item=item, lam=lam, oeps=oeps, rho=rho, sigma=sigma,
                                                eps=eps, p=p, modes=m), lhs, rhs)


def _sm_os_ls(rng):
    d = _draw_common(rng)
    d.update(lam=_u(rng, 1e-3, 1.0), rho=_logu(rng, 1.0, 30.0))
    if rng.random() < 0.7:
        d.update(item="main", oeps=_open01(rng) * _y01(), modes=_draw_modes(rng))
    else:
        p = int(rng.integers(1, 9))
        d.update(item="p", p=p, oeps=_open01(rng) * p,
                 modes=_draw_modes(rng, top=p + 6, skip_below=p))
    return d


def _ev_sosl(lam, oeps, rho, sigma, modes, eps=1.0):
    m = _modes_obj(modes)
    _req(rho >= 1, "eps <= R")
    _req(0 < lam <= 1, "lambda <= 1")
    _req(0 < oeps < _y01(), "oeps < y_{0,1}")
    cfg = _config(lam, oeps, eps)
    lhs = _scattered_norm(cfg, m, rho, sigma)
    nn = n_script(m, sigma=sigma - 1.0 / 3.0).value
    rhs = 9 * (1 - lam) * oeps ** 2 * (_a0(m) * _abs_h(0, oeps * rho) + nn / math.sqrt(rho))
    return BoundCheck.build("cor-sosl", _pack(lam=lam, oeps=oeps, rho=rho, sigma=sigma, eps=eps,
                                              modes=m), lhs, rhs)


def _sm_sosl(rng):
    d = _draw_common(rng)
    d.update(lam=_u(rng, 1e-3, 1.0), rho=_logu(rng, 1.0, 30.0), oeps=_open01(rng) * _y01(),
             modes=_draw_modes(rng))
    return d


def _ev_ob_ls_upper(lam, oeps, rho, sigma, modes, eps=1.0):
    m = _modes_obj(modes)
    _req(rho >= 1, "eps <= R")
    _req(0 < lam <= 1, "lambda <= 1")
    _req(oeps > 0, "omega > 0")
    cfg = _config(lam, oeps, eps)
    lhs = _scattered_norm(cfg, m, rho, sigma)
    rhs = (2.5 / math.sqrt(rho) * n_script(m, sigma=sigma).value
           + SQRT_2PI * _a0(m) * _abs_h(0, _y01() * rho))
    return BoundCheck.build("thm-ob-ls-upper", _pack(lam=lam, oeps=oeps, rho=rho, sigma=sigma,
                                                     eps=eps, modes=m), lhs, rhs)


def _sm_ob_ls_upper(rng):
    d = _draw_common(rng)
    d.update(lam=_u(rng, 1e-3, 1.0), rho=_logu(rng, 1.0, 30.0), oeps=_logu(rng, 1e-3, 40.0),
             modes=_draw_modes(rng))
    return d


def _ev_ob_ls_lower(lam, sigma, modes, eps=1.0):
    m = _modes_obj(modes)
    _req(0 < lam < 1, "lambda < 1")
    n0 = n0_small(lam)
    top = _support(m)
    xs = frequency_grid(1e-2, top + 25.0, extra=range(1, top + 21))
    lhs, xstar = _grid_sup(m, lam, eps, xs, 1.0, sigma, star=True)
    rhs = n_bold(m, sigma=sigma, p=n0).value / math.sqrt(10.0)
    return BoundCheck.build("thm-ob-ls-lower", _pack(lam=lam, sigma=sigma, eps=eps, n0=n0,
                                                     argmax_oeps=xstar, modes=m),
                            lhs, rhs, ">=", grid_sup=True)


def _sm_ob_ls_lower(rng):
    d = _draw_common(rng)
    lam = _u(rng, 0.01, 0.6)
    n0 = n0_small(lam)
    d.update(lam=lam, modes=_draw_modes(rng, top=n0 + int(rng.integers(0, 9)), single_lo=n0))
    return d


def _ev_lleq1(item, n, lam, oeps, rho=1.0):
    _req(0 < lam <= 1, "lambda <= 1")
    if item in ("b1", "b2", "b3"):
        _req(n >= 1, "n >= 1")
        if item == "b1":
            _req(0 < oeps < zeros(n, 1).y1, "oeps < y_{n,1}")
            lhs, rhs, rel = _rh_boundary(n, oeps, lam), 2.5 * _abs_j(n, oeps), "<="
        elif item == "b2":
            _req(0 < oeps < n, "oeps < n")
            lhs = _rh_boundary(n, oeps, lam)
            rhs, rel = 2 * (1 - lam) * oeps / n ** (1 / 3) * _abs_j(n, oeps), "<="
        else:
            _req(lam ** 2 < 1 - (7 / (3 * n ** (1 / 3))) ** 2, "lambda^2 < 1 - (7/(3 n^(1/3)))^2")
            _req(oeps == n, "oeps = n")
            lhs, rhs, rel = _rh_boundary(n, float(n), lam), 0.5 * _abs_j(n, float(n)), ">"
    elif item in ("z1", "z2"):
        _req(n == 0, "n = 0")
        _req(rho >= 1, "eps <= R")
        _req(oeps > 0, "oeps > 0")
        lhs = _r0h0(oeps, lam, rho)
        if item == "z1":
            rhs = _abs_h(0, _y01() * rho)
        else:
            _req(oeps < _y01(), "oeps < y_{0,1}")
            rhs = math.pi ** 2 / (2 * math.sqrt(2)) * (1 - lam) * oeps ** 2 * _abs_h(0, oeps * rho)
        rel = "<="
    else:
        raise DomainError(f"unknown item {item!r}")
    return BoundCheck.build("prop-lleq1", _pack(item=item, n=n, lam=lam, oeps=oeps, rho=rho),
                            lhs, rhs, rel)


def _sm_lleq1(rng):
    item = _pick(rng, ("b1", "b1", "b2", "b2", "b3", "z1", "z2"))
    lam = _u(rng, 1e-3, 1.0)
    if item == "b1":
        n = int(rng.integers(1, 61))
        return {"item": item, "n": n, "lam": lam, "oeps": _open01(rng) * zeros(n, 1).y1}
    if item == "b2":
        n = int(rng.integers(1, 61))
        return {"item": item, "n": n, "lam": lam, "oeps": _open01(rng) * n}
    if item == "b3":
        n = int(rng.integers(13, 101))
        cap = math.sqrt(1 - (7 / (3 * n ** (1 / 3))) ** 2)
        return {"item": item, "n": n, "lam": _u(rng, 1e-3, cap * (1 - 1e-9)), "oeps": float(n)}
    rho = _logu(rng, 1.0, 100.0)
    x = _logu(rng, 1e-3, 50.0) if item == "z1" else _open01(rng) * _y01()
    return {"item": item, "n": 0, "lam": lam, "oeps": x, "rho": rho}


def _ev_os_lb(lam, oeps, rho, sigma, modes, eps=1.0, item="main", p=None):
    m = _modes_obj(modes)
    _req(rho >= 1, "R >= eps")
    _req(lam >= 1, "lambda >= 1")
    if item == "main":
        _req(0 < oeps < min(0.5, m_lambda(lam)), "oeps < min(1/2, m_lambda)")
    elif item == "p":
        _req(p is not None and p > 0, "p > 0")
        _req(all(abs(n) >= p for n in m.entries), "a_n = 0 for |n| < p")
        _req(0 < oeps < p / lam, "oeps < p/lambda")
    else:
        raise DomainError(f"unknown item {item!r}")
    cfg = _config(lam, oeps, eps)
    lhs = _scattered_norm(cfg, m, rho, sigma)
    inc = _incident_star(cfg, m, sigma - 1.0 / 3.0)
    c = abs(lam - 1) * oeps  # the contrast factor enters as |1 - lambda|
    if item == "main":
        rhs = c * (3 / math.sqrt(rho) * inc + 23 * oeps * lam * _a0(m) * _abs_h(0, oeps * rho))
    else:
        rhs = 3 * c / math.sqrt(rho) * inc
    return BoundCheck.build("thm-os-lb", _pack(item=item, lam=lam, oeps=oeps, rho=rho, sigma=sigma,
                                                eps=eps, p=p, modes=m), lhs, rhs)


def _sm_os_lb(rng):
    d = _draw_common(rng)
    lam = _logu(rng, 1.0, 100.0)
    d.update(lam=lam, rho=_logu(rng, 1.0, 30.0))
    if rng.random() < 0.7:
        d.update(item="main", oeps=_open01(rng) * min(0.5, m_lambda(lam)), modes=_draw_modes(rng))
    else:
        p = int(rng.integers(1, 9))
        d.update(item="p", p=p, oeps=_open01(rng) * p / lam,
                 modes=_draw_modes(rng, top=p + 6, skip_below=p))
    return d


def _ev_lgeq1(item, n, lam, oeps, rho=1.0):
    _req(lam >= 1, "lambda >= 1")
    if item in ("b1", "b2"):
        _req(n >= 1, "n >= 1")
        lhs = _rh_boundary(n, oeps, lam)
        if item == "b1":
            _req(0 < oeps <= zeros(n, 1).y1 / lam, "oeps <= y_{n,1}/lambda")
            rhs = 2.5 * _abs_j(n, oeps)
        else:
            _req(0 < oeps < n / lam, "oeps < n/lambda")
            rhs = 2 * abs(lam - 1) * oeps / n ** (1 / 3) * _abs_j(n, oeps)
    elif item in ("z1", "z2"):
        _req(n == 0, "n = 0")
        _req(rho >= 1, "R >= eps")
        _req(oeps > 0, "oeps > 0")
        lhs = _r0h0(oeps, lam, rho)
        ml = min(0.5, m_lambda(lam))
        if item == "z1":
            _req(oeps < ml, "oeps < min(1/2, m_lambda)")
            rhs = 5 * math.pi ** 2 / 4 * (lam - 1) * lam * oeps ** 2 * _abs_h(0, oeps * rho)
        else:
            rhs = math.sqrt(5) * _abs_h(0, ml * rho)
    else:
        raise DomainError(f"unknown item {item!r}")
    return BoundCheck.build("prop-lgeq1", _pack(item=item, n=n, lam=lam, oeps=oeps, rho=rho),
                            lhs, rhs)


def _sm_lgeq1(rng):
    item = _pick(rng, ("b1", "b2", "z1", "z2"))
    lam = _logu(rng, 1.0, 100.0)
    if item == "b1":
        n = int(rng.integers(1, 61))
        return {"item": item, "n": n, "lam": lam, "oeps": _open01(rng) * zeros(n, 1).y1 / lam}
    if item == "b2":
        n = int(rng.integers(1, 61))
        return {"item": item, "n": n, "lam": lam, "oeps": _open01(rng) * n / lam}
    rho = _logu(rng, 1.0, 100.0)
    x = _open01(rng) * min(0.5, m_lambda(lam)) if item == "z1" else _logu(rng, 1e-4, 50.0)
    return {"item": item, "n": 0, "lam": lam, "oeps": x, "rho": rho}


def _ev_ob_lr(lam, rho, sigma, modes, eps=1.0, item="orders", p=None):
    m = _modes_obj(modes)
    _req(lam > 1, "lambda > 1")
    _req(rho >= 1, "R >= eps")
    if item == "orders":
        n0 = n0_large(lam)
        _req(p is not None and p >= n0, "p >= n_0")
        top = zeros(p, 1).j(1) / lam
        res = [r for n in range(n0, p + 1) if (r := _first_resonance(n, lam)) is not None]
        ns = np.arange(1, p + 1)
        xs = frequency_grid(1e-3, top, extra=list(res) + list(ns / lam))
        lhs, xstar = _grid_sup(m, lam, eps, xs, rho, sigma, star=False)
        rhs = max(abs(m.coefficient(n)) * (1 + n) ** sigma * _abs_h(n, zeros(n, 1).j(1) / lam * rho)
                  for n in range(n0, p + 1))
        extra = {"n0": n0, "p": p}
    elif item == "zero":
        _req(lam > math.exp(2), "lambda > e^2")
        fplus = omega01_bounds(lam)[1]
        w = _first_resonance(0, lam)
        xs = frequency_grid(1e-4 * fplus, fplus * (1 - 1e-12), extra=[w] if w else [])
        lhs, xstar = _grid_sup(m, lam, eps, xs, rho, sigma, star=False)
        rhs = _a0(m) * _abs_h(0, fplus * rho)
        extra = {}
    else:
        raise DomainError(f"unknown item {item!r}")
    return BoundCheck.build("thm-ob-lr", _pack(item=item, lam=lam, rho=rho, sigma=sigma, eps=eps,
                                               argmax_oeps=xstar, modes=m, **extra),
                            lhs, rhs, ">=", grid_sup=True)


def _sm_ob_lr(rng):
    d = _draw_common(rng)
    d["rho"] = _logu(rng, 1.0, 5.0)
    if rng.random() < 0.7:
        lam = _pick(rng, (1.5, 2.0, 3.0, 5.0))
        n0 = n0_large(lam)
        p = int(rng.integers(max(n0, 1), 31))
        d.update(item="orders", lam=lam, p=p,
                 modes=_draw_modes(rng, top=p, single_lo=n0))
    else:
        d.update(item="zero", lam=_pick(rng, (8.0, 20.0, 100.0)),
                 modes=_modes_list({0: complex(np.exp(1j * rng.uniform(0, TWO_PI)))}))
    return d


def _ev_ob_lb_upper(lam, oeps, rho, sigma, modes, eps=1.0):
    m = _modes_obj(modes)
    _req(lam >= 1, "1 <= lambda")
    _req(rho > lam, "eps lambda < R")
    _req(oeps > 0, "omega > 0")
    cfg = _config(lam, oeps, eps)
    lhs = _scattered_norm(cfg, m, rho, sigma)
    inc = _sup_incident_star(m, sigma)
    far = sum(abs(a) ** 2 * (1 + abs(n)) ** (2 * sigma)
              / ((zeros(abs(n), 1).j(1) * rho) ** 2 - n * n)
              for n, a in m.entries.items() if n != 0)
    rhs = (2.5 * math.sqrt(lam / rho) * inc + 2 * math.sqrt(far)
           + math.sqrt(10 * math.pi) * _a0(m) * _abs_h(0, min(0.5, m_lambda(lam)) * rho))
    return BoundCheck.build("thm-ob-lb-upper", _pack(lam=lam, oeps=oeps, rho=rho, sigma=sigma,
                                                     eps=eps, modes=m), lhs, rhs)


def _sm_ob_lb_upper(rng):
    d = _draw_common(rng)
    lam = _logu(rng, 1.0, 50.0)
    modes = _draw_modes(rng)
    rho = lam * _logu(rng, 1.0 + 1e-9, 10.0)
    d.update(lam=lam, rho=rho, modes=modes)
    x = _logu(rng, 1e-3, min(40.0, ARG_CAP / rho))
    if rng.random() < 0.3:
        res = _all_resonances(abs(_pick(rng, [n for n, _, _ in modes])), lam)
        if res:
            x = _pick(rng, res)
    d["oeps"] = x
    return d


def _ev_ob_lb_lower(lam, rho, sigma, modes, eps=1.0):
    m = _modes_obj(modes)
    _req(lam >= 1, "1 <= lambda")
    _req(rho > lam, "eps lambda < R")
    top = _support(m)
    orders = range(1, top + 1)
    res = [r for n in orders if (r := _first_resonance(n, lam)) is not None]
    hi = 2.0 * max([zeros(n, 1).j(1) / lam for n in orders] + [1.0])
    xs = frequency_grid(1e-3, hi, extra=res + [n / lam for n in orders] + list(orders))
    lhs, xstar = _grid_sup(m, lam, eps, xs, rho, sigma, star=True)
    rhs = 0.4 * math.sqrt(lam / rho) * n_bold(m, sigma=sigma - 1.0 / 6.0, p=1).value
    return BoundCheck.build("thm-ob-lb-lower", _pack(lam=lam, rho=rho, sigma=sigma, eps=eps,
                                                     argmax_oeps=xstar, modes=m),
                            lhs, rhs, ">=", grid_sup=True)


def _sm_ob_lb_lower(rng):
    d = _draw_common(rng)
    lam = _pick(rng, (1.2, 1.5, 2.0, 5.0, 10.0))
    d.update(lam=lam, rho=lam * _logu(rng, 1.0 + 1e-6, 3.0),
             modes=_draw_modes(rng, top=10, single_lo=1))
    return d


# ---------------------------------------------------------- high contrast


_ITO_LAMBDAS = (8.0, 20.0, 100.0)
_ITO_TAUS = (0.05, 0.1, 0.25)


def _ev_ito_one(item, n, lam, tau, oeps=None):
    _req(lam > 7, "lambda > 7")
    _req(0 < tau <= 0.25, "0 < tau <= 1/4")
    _req(n >= 0, "n >= 0")
    ivs = _intervals(n, lam, tau)
    if item == "measure":
        lhs, rhs = _merged_length(ivs), measure_bound(n, lam, tau)
    elif item == "bound":
        top = zeros(n, 1).y1 if n >= 1 else _zeta0()
        _req(oeps is not None and 0 < oeps < top,
             "oeps in (0, y_{n,1})" if n >= 1 else "oeps in (0, zeta_0)")
        _req(not _inside(oeps, ivs), "oeps outside every I_{n,k}(tau)")
        if n >= 1:
            lhs, rhs = _rh_boundary(n, oeps, lam), 4.5 / tau * _abs_j(n, oeps)
        else:
            lhs, rhs = _r0h0(oeps, lam, 1.0), 5.0 / (3.0 * tau) * _abs_j(0, oeps)
    else:
        raise DomainError(f"unknown item {item!r}")
    return BoundCheck.build("prop-ito-one", _pack(item=item, n=n, lam=lam, tau=tau, oeps=oeps),
                            lhs, rhs)


def _sm_ito_one(rng):
    n = int(rng.integers(0, 31))
    lam, tau = _pick(rng, _ITO_LAMBDAS), _pick(rng, _ITO_TAUS)
    if rng.random() < 0.1:
        return {"item": "measure", "n": n, "lam": lam, "tau": tau}
    top = zeros(n, 1).y1 if n >= 1 else _zeta0()
    ivs = _intervals(n, lam, tau)
    x = None
    for _ in range(200):
        if ivs and rng.random() < 0.5:
            a, b = ivs[int(rng.integers(len(ivs)))]
            d = (b - a) * 10.0 ** rng.uniform(-6, 0)
            x = a - d if rng.random() < 0.5 else b + d
        else:
            x = top * _open01(rng)
        if 0 < x < top and not _inside(x, ivs):
            break
    return {"item": "bound", "n": n, "lam": lam, "tau": tau, "oeps": float(x)}


def _ev_ink(n, lam, tau):
    _req(lam >= 7, "lambda >= 7")
    _req(0 < tau <= 0.25, "tau <= 1/4")
    ivs = _intervals(n, lam, tau)
    return BoundCheck.build("prop-ink", _pack(n=n, lam=lam, tau=tau), _merged_length(ivs),
                            measure_bound(n, lam, tau))


def _sm_ink(rng):
    return {"n": int(rng.integers(0, 31)), "lam": _pick(rng, _ITO_LAMBDAS),
            "tau": _pick(rng, _ITO_TAUS)}


def _norm_bound_one(modes, lam, oeps, rho, sigma, eps, ivs):
    _req(_support(modes) <= SET_ORDER_CAP, f"modes supported in |n| <= {SET_ORDER_CAP}")
    _req(rho >= 1, "R >= eps")
    _req(oeps > 0 and not _inside(oeps, ivs), "frequency outside I_1")
    return _scattered_norm(_config(lam, oeps, eps), modes, rho, sigma, star=True)


def _mean_bound_zero(modes, lam, oeps, rho, ivs):
    _req(rho >= 1, "R >= eps")
    _req(oeps > 0 and not _inside(oeps, ivs), "frequency outside I_0")
    return abs(modes.coefficient(0)) * _r0h0(oeps, lam, rho)


_HC_LAMBDAS = (8.0, 20.0, 100.0)
_HC_ALPHAS = (0.5, 1.0, 2.0)
_HC_FRACTIONS = (0.25, 1.0)


def _ev_highcontrast(item, lam, alpha=None, eta=None, eta0=None, oeps=None, rho=1.0,
                     sigma=0.0, modes=None, eps=1.0):
    _req(lam > 7, "lambda > 7")
    if item in ("measure-one", "bound-one"):
        _req(alpha is not None and alpha > 0, "alpha > 0")
        _req(eta is not None and 0 < eta <= eta_max(lam) / alpha * (1 + 1e-12),
             "eta <= eta_max/alpha")
        ivs, meas = _one_set(lam, alpha, eta)
        if item == "measure-one":
            lhs, rhs, rel = (meas + _tail_one(eta, alpha)) / eps, eta / eps, "<"
        else:
            m = _modes_obj(modes)
            lhs = _norm_bound_one(m, lam, oeps, rho, sigma, eps, ivs)
            rhs = 18 / math.sqrt(rho) * eta_max(lam) / (eta * alpha) * n_script(
                m, sigma=sigma + 2 + alpha).value
            rel = "<="
    elif item in ("measure-zero", "bound-zero"):
        _req(eta0 is not None and 0 < eta0 <= eta_zero(lam) * (1 + 1e-12), "eta <= eta_0")
        ivs, meas = _zero_set(lam, eta0)
        if item == "measure-zero":
            _req(all(b <= _zeta0() for _, b in ivs), "I_0 inside (0, zeta_0)")
            lhs, rhs, rel = meas / eps, eta0 / eps, "<"
        else:
            m = _modes_obj(modes)
            lhs = _mean_bound_zero(m, lam, oeps, rho, ivs)
            ml = m_lambda(lam)
            rhs = _a0(m) * 7 * eta_zero(lam) / eta0 * _abs_h(0, ml * rho) / _abs_h(0, ml)
            rel = "<="
    else:
        raise DomainError(f"unknown item {item!r}")
    return BoundCheck.build("lemma-highcontrast",
                            _pack(item=item, lam=lam, alpha=alpha, eta=eta, eta0=eta0, oeps=oeps,
                                  rho=rho, sigma=sigma, eps=eps,
                                  modes=modes if modes is not None else None), lhs, rhs, rel)


def _sm_highcontrast(rng):
    item = _pick(rng, ("measure-one", "bound-one", "bound-one", "measure-zero", "bound-zero",
                       "bound-zero"))
    lam, alpha, f = _pick(rng, _HC_LAMBDAS), _pick(rng, _HC_ALPHAS), _pick(rng, _HC_FRACTIONS)
    d = _draw_common(rng)
    d.update(item=item, lam=lam)
    if item.endswith("one"):
        eta = f * eta_max(lam) / alpha
        d.update(alpha=alpha, eta=eta)
        if item == "bound-one":
            ivs, _ = _one_set(lam, alpha, eta)
            d.update(oeps=_draw_outside(rng, ivs, 1e-3, 20.0), rho=_logu(rng, 1.0, 30.0),
                     modes=_draw_modes(rng, top=SET_ORDER_CAP, skip_below=1))
    else:
        eta0 = f * eta_zero(lam)
        d.update(eta0=eta0)
        if item == "bound-zero":
            ivs, _ = _zero_set(lam, eta0)
            d.update(oeps=_draw_outside(rng, ivs, 1e-4, 10.0), rho=_logu(rng, 1.0, 100.0),
                     modes=_modes_list({0: complex(np.exp(1j * rng.uniform(0, TWO_PI)))}))
    if "modes" not in d:
        d.pop("sigma")
    return d


_CB_EPS = (1.0 / 8.0, 1.0 / 20.0, 1.0 / 50.0)
_CB_BETAS = (0.25, 0.5, 1.0)


def _ev_cor_broadband(item, eps, beta, alpha=None, oeps=None, rho=1.0, sigma=0.0, modes=None):
    _req(0 < eps < 1 / 7, "eps < 1/7")
    _req(beta > 0, "beta > 0")
    lam = 1.0 / eps
    L = abs(math.log(eps))
    R = rho * eps
    if item in ("measure-one", "bound-one"):
        _req(alpha is not None and alpha > 0, "alpha > 0")
        eta = eps ** beta * eta_max(lam)
        _req(eta <= eta_max(lam) / alpha, "alpha <= eps^(-beta)")
        ivs, meas = _one_set(lam, alpha, eta)
        if item == "measure-one":
            lhs, rhs = (meas + _tail_one(eta, alpha)) / eps, eps ** beta * L
        else:
            m = _modes_obj(modes)
            lhs = _norm_bound_one(m, lam, oeps, rho, sigma, eps, ivs)
            rhs = 18 / alpha * math.sqrt(eps ** (1 - 2 * beta) / R) * n_script(
                m, sigma=sigma + 2 + alpha).value
    elif item in ("measure-zero", "bound-zero"):
        eta0 = (L + 1) ** (-beta) * eta_zero(lam)
        ivs, meas = _zero_set(lam, eta0)
        if item == "measure-zero":
            lhs, rhs = meas / eps, math.log(L) / (L + 1) ** beta
        else:
            m = _modes_obj(modes)
            lhs = _mean_bound_zero(m, lam, oeps, rho, ivs)
            rhs = _a0(m) * 12 / math.sqrt((L + 1) ** (1.5 - 2 * beta) * R)
    else:
        raise DomainError(f"unknown item {item!r}")
    return BoundCheck.build("cor-broadband",
                            _pack(item=item, eps=eps, beta=beta, alpha=alpha, oeps=oeps, rho=rho,
                                  sigma=sigma, modes=modes if modes is not None else None),
                            lhs, rhs)


def _sm_cor_broadband(rng):
    item = _pick(rng, ("measure-one", "bound-one", "bound-one", "measure-zero", "bound-zero",
                       "bound-zero"))
    eps, beta = _pick(rng, _CB_EPS), _pick(rng, _CB_BETAS)
    d = {"item": item, "eps": eps, "beta": beta}
    lam = 1.0 / eps
    if item.endswith("one"):
        alphas = [a for a in _HC_ALPHAS if a <= eps ** (-beta)]
        alpha = _pick(rng, alphas)
        d["alpha"] = alpha
        if item == "bound-one":
            ivs, _ = _one_set(lam, alpha, eps ** beta * eta_max(lam))
            d.update(oeps=_draw_outside(rng, ivs, 1e-3, 20.0), rho=_logu(rng, 1.0, 30.0),
                     sigma=_u(rng, -2.0, 2.0),
                     modes=_draw_modes(rng, top=SET_ORDER_CAP, skip_below=1))
    elif item == "bound-zero":
        L = abs(math.log(eps))
        ivs, _ = _zero_set(lam, (L + 1) ** (-beta) * eta_zero(lam))
        d.update(oeps=_draw_outside(rng, ivs, 1e-4, 10.0), rho=_logu(rng, 1.0, 100.0),
                 modes=_modes_list({0: complex(np.exp(1j * rng.uniform(0, TWO_PI)))}))
    return d


_TB_CASES = {
    1.0 / 16.0: (0.3, 2.0, 10.0, 12.0, 20.0),
    1.0 / 30.0: (0.5, 5.0, 15.0, 25.0, 40.0),
    1.0 / 100.0: (0.3, 3.0, 40.0, 100.0, 150.0),
}


def _tb_one_eta(eps, lam):
    """eta of the I_1 construction, or None when I_1 is empty."""
    if lam <= eps ** -0.75:
        return None
    return 8.0 / 9.0 * eps ** 0.375 * eta_max(lam)


def _tb_zero_eta(eps, lam):
    """eta of the I_0 construction, or None when I_0 is empty."""
    L = abs(math.log(eps))
    if lam < 1 or m_lambda(lam) > 0.5:
        return None
    lam0 = 1.0 / (eps * (L + 1) ** (7.0 / 12.0))
    if lam <= lam0:
        return None
    if lam < (L + 1) ** (1.0 / 12.0) / eps:
        return 4.0 / 7.0 * (1 + L) ** (-2.0 / 3.0) * eta_zero(lam)
    return 6.0 / 11.0 * eta_zero(lam)


def _ev_thm_broadband(item, eps, lam, alpha=None, oeps=None, rho=1.0, sigma=0.0, modes=None):
    _req(0 < eps < 1 / 15, "0 < eps < 1/15")
    _req(lam > 0, "lambda > 0")
    L = abs(math.log(eps))
    R = rho * eps
    if item in ("measure-one", "bound-one"):
        _req(alpha is not None and alpha > 0, "alpha > 0")
        eta = _tb_one_eta(eps, lam)
        if eta is None:
            ivs, meas, tail = (), 0.0, 0.0
        else:
            _req(eta <= eta_max(lam) / alpha, "alpha <= (9/8) eps^(-3/8)")
            ivs, meas = _one_set(lam, alpha, eta)
            tail = _tail_one(eta, alpha)
        if item == "measure-one":
            lhs, rhs = (meas + tail) / eps, eps ** 0.125 * L
        else:
            _req(R >= eps ** 0.25, "R >= eps^(1/4)")
            m = _modes_obj(modes)
            lhs = _norm_bound_one(m, lam, oeps, rho, sigma, eps, ivs)
            rhs = 21 / alpha * math.sqrt(eps ** 0.25 / R) * n_script(
                m, sigma=sigma + 2 + alpha).value
    elif item in ("measure-zero", "bound-zero"):
        eta0 = _tb_zero_eta(eps, lam)
        ivs, meas = ((), 0.0) if eta0 is None else _zero_set(lam, eta0)
        if item == "measure-zero":
            lhs, rhs = meas / eps, (math.log(L) + 2) / (L + 1)
        else:
            _req(eps <= R and (L + 1) ** (1 / 12) * R <= 1, "eps <= R <= (|ln eps| + 1)^(-1/12)")
            m = _modes_obj(modes)
            lhs = _mean_bound_zero(m, lam, oeps, rho, ivs)
            cand = [math.sqrt(2 / ((L + 1) ** (1 / 12) * R))]
            if math.log(lam) + 1 > 0:
                ml = 1.0 / (lam * math.sqrt(math.log(lam) + 1))
                cand.append(_abs_h(0, ml * rho) / _abs_h(0, ml))
            rhs = _a0(m) * 21 * max(cand)
    else:
        raise DomainError(f"unknown item {item!r}")
    return BoundCheck.build("thm-broadband",
                            _pack(item=item, eps=eps, lam=lam, alpha=alpha, oeps=oeps, rho=rho,
                                  sigma=sigma, modes=modes if modes is not None else None),
                            lhs, rhs)


def _sm_thm_broadband(rng):
    item = _pick(rng, ("measure-one", "bound-one", "bound-one", "measure-zero", "bound-zero",
                       "bound-zero"))
    eps = _pick(rng, tuple(_TB_CASES))
    lam = _pick(rng, _TB_CASES[eps])
    d = {"item": item, "eps": eps, "lam": lam}
    L = abs(math.log(eps))
    if item.endswith("one"):
        alpha = _pick(rng, _HC_ALPHAS)
        d["alpha"] = alpha
        if item == "bound-one":
            eta = _tb_one_eta(eps, lam)
            ivs = () if eta is None else _one_set(lam, alpha, eta)[0]
            rho = eps ** -0.75 * _logu(rng, 1.0, 10.0)
            d.update(oeps=_draw_outside(rng, ivs, 1e-3, 20.0), rho=rho, sigma=_u(rng, -2.0, 2.0),
                     modes=_draw_modes(rng, top=SET_ORDER_CAP, skip_below=1))
    elif item == "bound-zero":
        eta0 = _tb_zero_eta(eps, lam)
        ivs = () if eta0 is None else _zero_set(lam, eta0)[0]
        rmax = (L + 1) ** (-1 / 12)
        d.update(oeps=_draw_outside(rng, ivs, 1e-4, 10.0),
                 rho=_logu(rng, 1.0, rmax / eps),
                 modes=_modes_list({0: complex(np.exp(1j * rng.uniform(0, TWO_PI)))}))
    return d


# ================================================= quotient-level statements


def _ev_firstcase(item, n, lam, oeps):
    _req(lam > 0, "lambda > 0")
    _req(n >= 1, "n >= 1")
    s = _abs_s(n, oeps, lam)
    if item == "b1":
        t = zeros(n, 1)
        _req(0 < oeps <= min(t.jp(1) / lam, t.y1), "x <= min(j'_{n,1}/lambda, y_{n,1})")
        return BoundCheck.build("lemma-firstcase", _pack(item=item, n=n, lam=lam, oeps=oeps), s, 2.5)
    if item == "b2":
        _req(0 < oeps <= min(n / lam, n), "x <= min(n/lambda, n)")
        rhs = 2 * abs(lam - 1) * oeps / n ** (1 / 3)
        return BoundCheck.build("lemma-firstcase", _pack(item=item, n=n, lam=lam, oeps=oeps), s, rhs)
    if item == "b3":
        _req(lam ** 2 < 1 - (7 / (3 * n ** (1 / 3))) ** 2, "lambda^2 < 1 - (7/(3 n^(1/3)))^2")
        _req(oeps == n, "x = n")
        return BoundCheck.build("lemma-firstcase", _pack(item=item, n=n, lam=lam, oeps=oeps),
                                s, 0.5, ">")
    raise DomainError(f"unknown item {item!r}")


def _sm_firstcase(rng):
    item = _pick(rng, ("b1", "b1", "b2", "b2", "b3"))
    if item == "b3":
        n = int(rng.integers(13, 101))
        cap = math.sqrt(1 - (7 / (3 * n ** (1 / 3))) ** 2)
        return {"item": item, "n": n, "lam": _u(rng, 1e-3, cap * (1 - 1e-9)), "oeps": float(n)}
    n = int(rng.integers(1, 61))
    lam = _logu(rng, 0.01, 100.0)
    if item == "b1":
        t = zeros(n, 1)
        top = min(t.jp(1) / lam, t.y1)
    else:
        top = min(n / lam, n)
    return {"item": item, "n": n, "lam": lam, "oeps": top * _open01(rng)}


def _ratio_5half(n: int, x: float) -> float:
    """(1 + Y^2/J^2)/(1 + Y'^2/J'^2), written as (g/k)^2 (1 + (J/Y)^2)/(1 + (J'/Y')^2)."""
    j, y, jp, yp = (float(v[0]) for v in cylinder_arrays(n, np.array([x]), strict=False))
    gk = g_values(n, x) / k_values(n, x)
    with np.errstate(all="ignore"):
        a = (j / y) ** 2 if math.isfinite(y) else 0.0
        b = (jp / yp) ** 2 if math.isfinite(yp) else 0.0
    return gk * gk * (1 + a) / (1 + b)


def _ev_5half(item, n, oeps):
    _req(n >= 1, "n >= 1")
    _req(0 < oeps <= n, "0 < x <= n")
    r = _ratio_5half(n, oeps)
    if item == "upper":
        return BoundCheck.build("prop-estimate5half", _pack(item=item, n=n, oeps=oeps), r, 6.25)
    if item == "lower":
        return BoundCheck.build("prop-estimate5half", _pack(item=item, n=n, oeps=oeps), r, 0.36, ">")
    raise DomainError(f"unknown item {item!r}")


def _sm_5half(rng):
    n = int(rng.integers(1, 101))
    return {"item": _pick(rng, ("upper", "lower")), "n": n, "oeps": n * _open01(rng)}


def _ev_ntoyn1(n, lam, oeps):
    _req(n >= 1, "n >= 1")
    _req(lam > 0, "lambda > 0")
    _req(n <= oeps <= zeros(n, 1).y1, "x in [n, y_{n,1}]")
    return BoundCheck.build("prop-ntoyn1", _pack(n=n, lam=lam, oeps=oeps), _abs_s(n, oeps, lam),
                            math.sqrt(5), "<")


def _sm_ntoyn1(rng):
    n = int(rng.integers(1, 101))
    y1 = zeros(n, 1).y1
    return {"n": n, "lam": _logu(rng, 0.01, min(100.0, ARG_CAP / y1)),
            "oeps": n + (y1 - n) * float(rng.uniform())}


def _ev_n0(item, lam, oeps):
    s = _abs_s(0, oeps, lam)
    log_term = oeps ** 2 * abs(math.log(oeps / 2))
    if item == "small":
        _req(0 < lam <= 1, "lambda <= 1")
        _req(0 < oeps < _y01(), "0 < x < y_{0,1}")
        rhs = math.pi / (2 * math.sqrt(2)) * min(1.0, 2 - 2 * lam) * log_term
    elif item == "large":
        _req(lam >= 1, "lambda >= 1")
        _req(0 < oeps <= min(0.5, m_lambda(lam)), "0 < x <= min(1/2, m_lambda)")
        rhs = math.pi * min(1.0, 2.5 * (lam - 1) / lam) * lam ** 2 * log_term
    else:
        raise DomainError(f"unknown item {item!r}")
    return BoundCheck.build("prop-n0", _pack(item=item, lam=lam, oeps=oeps), s, rhs)


def _sm_n0(rng):
    if rng.random() < 0.5:
        return {"item": "small", "lam": _u(rng, 1e-3, 1.0), "oeps": _open01(rng) * _y01()}
    lam = _logu(rng, 1.0, 1e3)
    return {"item": "large", "lam": lam, "oeps": _open01(rng) * min(0.5, m_lambda(lam))}


def _ev_r0(item, lam, oeps, rho):
    _req(rho >= 1, "R >= eps")
    _req(lam > 0 and oeps > 0, "lambda > 0, x > 0")
    lhs = _r0h0(oeps, lam, rho)
    if item == "all":
        return BoundCheck.build("prop-r0", _pack(item=item, lam=lam, oeps=oeps, rho=rho),
                                lhs * lhs, 2 / (math.pi * oeps) / rho)
    if item in ("small-all", "small-low"):
        _req(lam < 1, "lambda < 1")
        if item == "small-all":
            rhs = _abs_h(0, _y01() * rho)
        else:
            _req(oeps < _y01(), "x < y_{0,1}")
            rhs = math.pi ** 2 / (2 * math.sqrt(2)) * (1 - lam) * oeps ** 2 * _abs_h(0, oeps * rho)
    elif item in ("large-all", "large-low"):
        _req(lam >= 1, "lambda >= 1")
        ml = min(0.5, m_lambda(lam))
        if item == "large-all":
            rhs = math.sqrt(5) * _abs_h(0, ml * rho)
        else:
            _req(oeps < ml, "x < min(1/2, m_lambda)")
            rhs = (5 * math.pi ** 2 / 4 * (lam - 1) / lam * oeps ** 2 * lam ** 2
                   * _abs_h(0, oeps * rho))
    else:
        raise DomainError(f"unknown item {item!r}")
    return BoundCheck.build("prop-r0", _pack(item=item, lam=lam, oeps=oeps, rho=rho), lhs, rhs)


def _sm_r0(rng):
    item = _pick(rng, ("all", "small-all", "small-low", "large-all", "large-low"))
    rho = _logu(rng, 1.0, 100.0)
    if item == "all":
        lam = _logu(rng, 1e-3, 1e3)
    elif item.startswith("small"):
        lam = _u(rng, 1e-3, 1.0 - 1e-12)
    else:
        lam = _logu(rng, 1.0, 1e3)
    x = _logu(rng, 1e-4, min(50.0, ARG_CAP / max(lam, rho)))
    if item == "small-low":
        x = _open01(rng) * _y01()
    elif item == "large-low":
        x = _open01(rng) * min(0.5, m_lambda(lam))
    return {"item": item, "lam": lam, "oeps": x, "rho": rho}


def _ev_r0plus(lam, oeps, rho):
    _req(rho >= 1, "R >= eps")
    _req(lam >= 7, "lambda >= 7")
    ml = m_lambda(lam)
    _req(0 < oeps <= ml, "0 < x <= m_lambda")
    rhs = 4 * _abs_h(0, ml * rho) / _abs_h(0, ml)
    return BoundCheck.build("prop-r0plus", _pack(lam=lam, oeps=oeps, rho=rho),
                            _r0h0(oeps, lam, rho), rhs)


def _sm_r0plus(rng):
    lam = _logu(rng, 7.0, 1e4)
    return {"lam": lam, "oeps": _logu(rng, 1e-4, 1.0) * m_lambda(lam), "rho": _logu(rng, 1.0, 100.0)}


# --------------------------------------------------------- propsg (vectorized)


def _g_ratio(n: int, xs: np.ndarray) -> np.ndarray:
    """J_{n+1}/J_n, by continued fraction below the turning point."""
    out = np.empty(xs.shape)
    lo = xs < n
    if np.any(lo):
        out[lo] = j_ratio(n, xs[lo])
    if np.any(~lo):
        a = cylinder_arrays(n, xs[~lo], strict=False)[0]
        b = cylinder_arrays(n + 1, xs[~lo], strict=False)[0]
        with np.errstate(all="ignore"):
            out[~lo] = b / a
    return out


def g_derivatives(n: int, xs) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """g_n, g_n' and g_n'' through r = J_{n+1}/J_n (no cancellation at small x).

    g = 1 - x r/n, g' = -(x - 2 n r + x r^2)/n and
    r' = 1 - (2n+1) r/x + r^2.
    """
    xs = np.asarray(xs, dtype=float)
    r = _g_ratio(n, xs)
    with np.errstate(all="ignore"):
        rp = 1 - (2 * n + 1) * r / xs + r * r
        g = 1 - xs * r / n
        gp = -(xs - 2 * n * r + xs * r * r) / n
        gpp = -(1 - 2 * n * rp + r * r + 2 * xs * r * rp) / n
    return g, gp, gpp


PROPSG_ITEMS = (
    "i-decreasing", "ii-concave", "iii-lower", "iii-upper", "iii-cn-lower", "iii-cn-upper",
    "iv-dup", "iv-k-positive", "iv-kappa-lower", "iv-kappa-upper", "v-lower", "v-upper",
    "v-refined-lower", "v-refined-upper", "v-outer-lower", "v-outer-upper", "vi-lower",
    "vi-upper", "boyd-dunster",
)


def propsg_domain(item: str, n: int) -> tuple[float, float]:
    """Closed x-range on which an item is asserted (ignored by the constant items)."""
    cc = critical_constants(n)
    t = zeros(n, 1)
    if item == "i-decreasing":
        return 0.0, 3.0 * n + 10.0
    if item == "ii-concave":
        return 0.0, t.j(1)
    if item == "iv-k-positive":
        return 0.0, t.y1
    if item in ("v-refined-lower", "v-refined-upper"):
        return 0.0, cc.kappa_n
    if item in ("v-outer-lower", "v-outer-upper"):
        return cc.kappa_n, float(n)
    return 0.0, float(n)


def propsg_values(item: str, n: int, xs) -> tuple[np.ndarray, np.ndarray, str]:
    """Left sides, right sides and relation of one item at the points xs."""
    xs = np.asarray(xs, dtype=float)
    cc = critical_constants(n)
    ones = np.ones(xs.shape)
    if item == "iii-cn-lower":
        return cc.c_n * ones, ones / math.sqrt(2), ">"
    if item == "iii-cn-upper":
        return cc.c_n * ones, 13 / 14 * ones, "<"
    if item == "iv-kappa-lower":
        return cc.kappa_n * ones, (n - 0.8 * n ** (1 / 3)) * ones, ">"
    if item == "iv-kappa-upper":
        return cc.kappa_n * ones, n * ones, "<"
    g, gp, gpp = g_derivatives(n, xs)
    q = np.sqrt(np.maximum(0.0, 1 - (xs / n) ** 2))
    if item == "i-decreasing":
        return gp, 0 * ones, "<"
    if item == "ii-concave":
        return gpp, 0 * ones, "<"
    if item == "iii-lower":
        return g, q, ">"
    if item == "iii-upper":
        return g, np.sqrt(q * q + cc.c_n ** 2 / n ** (2 / 3) * xs / n), "<"
    if item == "iv-dup":
        return -gp, g_values(n, float(n)) ** 2 * ones, "<="
    k = np.asarray(k_values(n, xs))
    if item == "iv-k-positive":
        return k, 0 * ones, ">"
    low, high = 0.6 / n ** (1 / 3), 7 / 6 / n ** (1 / 3)
    if item == "v-lower":
        return k, low * ones, ">="
    if item == "v-upper":
        return k, np.maximum(q, high), "<="
    if item == "v-refined-lower":
        return k, KAPPA_PLUS * q - g, ">="
    if item == "v-refined-upper":
        return k, q, "<="
    if item == "v-outer-lower":
        return k, low * ones, ">="
    if item == "v-outer-upper":
        return k, high * ones, "<="
    if item == "vi-lower":
        return k / g, 0.4 * ones, ">"
    if item == "vi-upper":
        return k / g, 5 / 3 * ones, "<"
    if item == "boyd-dunster":
        j, y, _, _ = cylinder_arrays(n, xs, strict=False)
        with np.errstate(all="ignore"):
            prod = -j * y
        alt = 2.0 / (math.pi * n * (k + g))  # Wronskian form where J or Y leave the range
        prod = np.where(np.isfinite(prod) & (np.abs(j) > 1e-250), prod, alt)
        return TWO_PI * prod * np.sqrt(np.maximum(0.0, n * n - xs * xs)), 2.09 * ones, "<="
    raise DomainError(f"unknown item {item!r}")


def _ev_propsg(item, n, oeps=None):
    _req(n >= 1, "n >= 1")
    if item not in PROPSG_ITEMS:
        raise DomainError(f"unknown item {item!r}")
    x = float(n) if oeps is None else oeps
    lo, hi = propsg_domain(item, n)
    _req(lo <= x <= hi and x > 0, f"x in [{lo:.17g}, {hi:.17g}]")
    lhs, rhs, rel = propsg_values(item, n, np.array([x]))
    return BoundCheck.build("prop-propsg", _pack(item=item, n=n, oeps=oeps), lhs[0], rhs[0], rel)


def _sm_propsg(rng):
    item = _pick(rng, PROPSG_ITEMS)
    n = int(_pick(rng, (1, 2, 3, 5, 10, 20, 30, 50, 100)))
    lo, hi = propsg_domain(item, n)
    x = lo + (hi - lo) * _open01(rng)
    if item == "i-decreasing":
        # keep away from the poles of g at the zeros of J_n
        for _ in range(100):
            j = cylinder_arrays(n, np.array([x]), strict=False)[0][0]
            if abs(j) > 1e-6:
                break
            x = lo + (hi - lo) * _open01(rng)
    return {"item": item, "n": n, "oeps": float(x)}


# ----------------------------------------------------------- logYn, logconcave


LOGYN_ITEMS = ("bdkn", "zeta-kappa", "zeta-max", "monotone", "zero-monotone", "zeta0-value",
               "zeta0-ratio")


def _x_over_k(n: int, x) -> np.ndarray:
    return np.asarray(x) / np.asarray(k_values(n, x))


def _ev_logyn(item, n=None, oeps=None):
    if item in ("zeta0-value", "zeta0-ratio", "zero-monotone"):
        z0 = _zeta0()
        if item == "zeta0-value":
            return BoundCheck.build("prop-logyn", _pack(item=item), abs(z0 - 0.3135), 5e-4)
        if item == "zeta0-ratio":
            return BoundCheck.build("prop-logyn", _pack(item=item),
                                    abs(z0 / k_values(0, z0) - 0.3524), 5e-4)
        _req(oeps is not None and 0 < oeps < z0, "x in (0, zeta_0)")
        k0 = k_values(0, oeps)
        return BoundCheck.build("prop-logyn", _pack(item=item, oeps=oeps),
                                1 + k0 * (k0 - 1) / oeps ** 2, 0.0, "<")
    _req(n is not None and n >= 1, "n >= 1")
    cc = critical_constants(n)
    if item == "zeta-kappa":
        return BoundCheck.build("prop-logyn", _pack(item=item, n=n), cc.zeta_n, cc.kappa_n, ">")
    _req(oeps is not None and 0 < oeps <= n, "x in (0, n]")
    x = oeps
    if item == "bdkn":
        chi = cc.chi_n
        ref = x if x <= chi else chi
        rhs = (n * n / ref ** 2 - 1) ** -0.5
        return BoundCheck.build("prop-logyn", _pack(item=item, n=n, oeps=x),
                                x / (n * k_values(n, x)), rhs, ">=")
    if item == "zeta-max":
        return BoundCheck.build("prop-logyn", _pack(item=item, n=n, oeps=x),
                                float(_x_over_k(n, x)), float(_x_over_k(n, cc.zeta_n)))
    if item == "monotone":
        _req(x < cc.zeta_n, "x in (0, zeta_n)")
        kk = k_values(n, x)
        return BoundCheck.build("prop-logyn", _pack(item=item, n=n, oeps=x),
                                n * kk * (1 - n * kk) + n * n - x * x, 0.0, ">")
    raise DomainError(f"unknown item {item!r}")


def _sm_logyn(rng):
    item = _pick(rng, ("bdkn", "bdkn", "zeta-kappa", "zeta-max", "zeta-max", "monotone",
                       "monotone", "zero-monotone", "zero-monotone", "zeta0-value", "zeta0-ratio"))
    if item in ("zeta0-value", "zeta0-ratio"):
        return {"item": item}
    if item == "zero-monotone":
        return {"item": item, "oeps": _zeta0() * float(rng.uniform(1e-6, 1 - 1e-6))}
    n = int(rng.integers(1, 101))
    if item == "zeta-kappa":
        return {"item": item, "n": n}
    top = critical_constants(n).zeta_n * (1 - 1e-6) if item == "monotone" else float(n)
    return {"item": item, "n": n, "oeps": top * _open01(rng)}


def _ev_logconcave(item, oeps, y, step=None):
    _req(oeps > 0, "x > 0")
    _req(y > 1, "y > 1")
    ratio = _abs_h(0, oeps * y) / _abs_h(0, oeps)
    params = _pack(item=item, oeps=oeps, y=y, step=step)
    if item == "upper":
        return BoundCheck.build("lemma-logconcave", params, ratio, 1.0)
    if item == "lower":
        return BoundCheck.build("lemma-logconcave", params, ratio, 1 / math.sqrt(y), ">=")
    if item == "decreasing":
        _req(step is not None and step > 0, "step > 0")
        x2 = oeps * (1 + step)
        return BoundCheck.build("lemma-logconcave", params,
                                _abs_h(0, x2 * y) / _abs_h(0, x2), ratio)
    if item == "convex":
        _req(step is not None and step > 0, "step > 0")
        x1, x3 = oeps, oeps * (1 + step)
        mid = math.log(_abs_h(0, 0.5 * (x1 + x3)))
        return BoundCheck.build("lemma-logconcave", params, mid,
                                0.5 * (math.log(_abs_h(0, x1)) + math.log(_abs_h(0, x3))))
    raise DomainError(f"unknown item {item!r}")


def _sm_logconcave(rng):
    item = _pick(rng, ("upper", "lower", "decreasing", "convex"))
    y = _logu(rng, 1.0 + 1e-6, 1e3)
    d = {"item": item, "oeps": _logu(rng, 1e-4, min(100.0, ARG_CAP / (2 * y))), "y": y}
    if item in ("decreasing", "convex"):
        d["step"] = _logu(rng, 1e-2, 1.0)
    return d


def _ev_muzeroone(item, lam):
    _req(lam >= math.exp(2) * (1 - 1e-15), "lambda >= e^2")
    lo, hi = omega01_bounds(lam)
    w = _first_resonance(0, lam)
    if w is None:
        raise DomainError(f"no order-0 quasi-resonance found for lambda = {lam!r}")
    if item == "lower":
        return BoundCheck.build("lemma-muzeroone", _pack(item=item, lam=lam), w, lo, ">")
    if item == "upper":
        return BoundCheck.build("lemma-muzeroone", _pack(item=item, lam=lam), w, hi, "<")
    raise DomainError(f"unknown item {item!r}")


def _sm_muzeroone(rng):
    item = _pick(rng, ("lower", "upper"))
    if rng.random() < 0.3:
        return {"item": item, "lam": _pick(rng, (math.exp(2), 10.0, 100.0))}
    return {"item": item, "lam": _logu(rng, math.exp(2), 1e3)}


# ------------------------------------------------------------------ registry

_LOWER_SAMPLES = 12

for _s in (
    Statement("thm-os-ls", "upper", "near field, lambda <= 1, oeps < y_{0,1}",
              _ev_os_ls, _sm_os_ls),
    Statement("cor-sosl", "upper", "second-order form of the lambda <= 1 near-field bound",
              _ev_sosl, _sm_sosl),
    Statement("thm-ob-ls-upper", "upper", "frequency-independent bound, lambda <= 1",
              _ev_ob_ls_upper, _sm_ob_ls_upper),
    Statement("thm-ob-ls-lower", "lower", "sup over frequency at R = eps, lambda < 1",
              _ev_ob_ls_lower, _sm_ob_ls_lower, _LOWER_SAMPLES),
    Statement("prop-lleq1", "upper", "mode bounds |R_n H_n| for lambda <= 1",
              _ev_lleq1, _sm_lleq1),
    Statement("thm-os-lb", "upper", "near field, lambda >= 1, oeps < min(1/2, m_lambda)",
              _ev_os_lb, _sm_os_lb),
    Statement("prop-lgeq1", "upper", "mode bounds |R_n H_n| for lambda >= 1",
              _ev_lgeq1, _sm_lgeq1),
    Statement("thm-ob-lr", "lower", "quasi-resonant lower bounds, lambda > 1",
              _ev_ob_lr, _sm_ob_lr, _LOWER_SAMPLES),
    Statement("thm-ob-lb-upper", "upper", "far field, lambda eps < R",
              _ev_ob_lb_upper, _sm_ob_lb_upper),
    Statement("thm-ob-lb-lower", "lower", "far-field lower bound through omega_{n,1}",
              _ev_ob_lb_lower, _sm_ob_lb_lower, _LOWER_SAMPLES),
    Statement("prop-ito-one", "upper", "|R_n H_n| outside the exclusion intervals, lambda > 7",
              _ev_ito_one, _sm_ito_one),
    Statement("lemma-highcontrast", "upper", "exclusion sets I_1, I_0 and the bounds outside them",
              _ev_highcontrast, _sm_highcontrast),
    Statement("cor-broadband", "upper", "broadband sets for lambda = 1/eps",
              _ev_cor_broadband, _sm_cor_broadband),
    Statement("thm-broadband", "upper", "broadband estimate for every contrast",
              _ev_thm_broadband, _sm_thm_broadband),
    Statement("lemma-firstcase", "upper", "|S_n| bounds below the first extremum",
              _ev_firstcase, _sm_firstcase),
    Statement("prop-estimate5half", "two-sided", "(3/5)^2 < (1+Y^2/J^2)/(1+Y'^2/J'^2) <= (5/2)^2",
              _ev_5half, _sm_5half),
    Statement("prop-ntoyn1", "upper", "|S_n| < sqrt 5 on [n, y_{n,1}]", _ev_ntoyn1, _sm_ntoyn1),
    Statement("prop-n0", "upper", "|S_0| bounds at low frequency", _ev_n0, _sm_n0),
    Statement("prop-r0", "upper", "bounds on |R_0 H_0(x R/eps)|", _ev_r0, _sm_r0),
    Statement("prop-r0plus", "upper", "|R_0 H_0| <= 4 |H_0(m R/eps)/H_0(m)| for lambda >= 7",
              _ev_r0plus, _sm_r0plus),
    Statement("prop-ink", "upper", "measure of the exclusion intervals", _ev_ink, _sm_ink),
    Statement("prop-propsg", "two-sided", "properties of g_n and k_n", _ev_propsg, _sm_propsg),
    Statement("prop-logyn", "two-sided", "x/k_n and the constants zeta_n", _ev_logyn, _sm_logyn),
    Statement("lemma-logconcave", "two-sided", "|H_0(xy)|/|H_0(x)| in [1/sqrt y, 1]",
              _ev_logconcave, _sm_logconcave),
    Statement("lemma-muzeroone", "two-sided", "bracket of omega_{0,1} for lambda >= e^2",
              _ev_muzeroone, _sm_muzeroone),
):
    register(_s)

