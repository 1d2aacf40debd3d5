"""Quasi-resonances, exclusion intervals and broadband exclusion sets.

A triplet (n, x, lambda) with 0 < x < y_{n,1} is quasi-resonant when
R_n(x, lambda) = -1, i.e. when

    F(x) = Y'_n(x) J_n(lambda x) - lambda J'_n(lambda x) Y_n(x) = 0.

Roots are located on G(x) = -x F(x)/(n+ Y_n(x)) = J_n(lambda x)(k_n(x) + g_n(lambda x)),
which has the same zeros on (0, y_{n,1}), no poles, and stays finite where
Y_n overflows.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import mpmath
import numpy as np
from scipy.special import zeta as hurwitz_zeta

from . import __version__
from .errors import DomainError, NumericError, ParameterError
from .quotients import critical_constants, k_values
from .scatter import ScatterConfig, fmt17, m_lambda, reflection_coeff
from .specfun import N_MAX, cylinder_arrays, first_zero_ratio, zeros

ROOT_XTOL = 1e-14
# above this float64 residual the root is polished in extended precision
_POLISH_ABOVE = 1e-10
_POLISH_DPS = 40


def _nplus(n):
    return max(n, 1)


def _g_fun(n: int, lam: float, c: float = 1.0):
    """x -> J_n(lam x) (g_n(lam x) + c k_n(x)), smooth on (0, y_{n,1})."""
    npl = _nplus(n)

    def f(x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        jl, _, jpl, _ = cylinder_arrays(n, lam * x, strict=False)
        return (lam * x / npl) * jpl + c * k_values(n, x) * jl

    return f


@dataclass(frozen=True)
class ResonanceRecord:
    """One quasi-resonant triplet (n, omega_{n,k}, lambda).

    ``location`` is the nearest double to the root.  Near low branches R_n
    is so sensitive to x (condition number of order |Y_n/J_n|) that no
    double reaches |R_n + 1| <= 1e-8; ``correction`` then holds root - location
    from an extended-precision polish and ``residual`` is |R_n + 1| at
    location + correction.  ``residual_double`` is |R_n + 1| at ``location``
    in float64.
    """

    order: int
    branch: int
    location: float
    residual: float
    u_lo: float
    u_hi: float
    contrast: float
    correction: float = 0.0
    residual_double: float = float("nan")


def _mp_parts(n, lam, x):
    j = mpmath.besselj(n, x)
    y = mpmath.bessely(n, x)
    jp = mpmath.besselj(n, x, derivative=1)
    yp = mpmath.bessely(n, x, derivative=1)
    jl = mpmath.besselj(n, lam * x)
    jpl = mpmath.besselj(n, lam * x, derivative=1)
    return j, y, jp, yp, jl, jpl


def _polish(n: int, lam: float, x0: float, a: float, b: float):
    """Extended-precision root of F near x0 and |R_n + 1| there.

    |R_n + 1| amplifies a root error by about |Y_n/J_n|, so the working
    precision grows with the decimal size of that ratio.
    """
    with mpmath.workdps(15):
        scale = abs(mpmath.bessely(n, x0) / mpmath.besselj(n, x0))
    dps = _POLISH_DPS + max(0, int(mpmath.log10(scale)) if scale > 1 else 0)
    with mpmath.workdps(dps):
        L = mpmath.mpf(lam)

        # F / Y_n: same roots on (0, y_{n,1}), magnitude of order one
        def f(x):
            y = mpmath.bessely(n, x)
            yp = mpmath.bessely(n, x, derivative=1)
            return yp / y * mpmath.besselj(n, L * x) - L * mpmath.besselj(n, L * x, derivative=1)

        lo, hi = mpmath.mpf(a), mpmath.mpf(b)
        tol = mpmath.mpf(10) ** (4 - dps)
        # the float root is already close: a secant step pair usually suffices
        start = mpmath.mpf(x0)
        try:
            root = mpmath.findroot(f, (start, start * (1 + mpmath.mpf(2) ** -40)),
                                   solver="secant", tol=tol, verify=False)
        except (ValueError, ZeroDivisionError):
            root = None
        if root is None or not (lo <= root <= hi) or abs(f(root)) > mpmath.sqrt(tol):
            try:
                root = mpmath.findroot(f, (lo, hi), solver="anderson", tol=tol, verify=False)
            except (ValueError, ZeroDivisionError):
                root = None
        if root is None or not (lo <= root <= hi):
            try:
                root = mpmath.findroot(f, (lo, hi), solver="bisect", tol=tol, verify=False)
            except (ValueError, ZeroDivisionError) as exc:
                raise NumericError(
                    f"polish failed for n={n}, lambda={lam}, bracket=({a}, {b})") from exc
        j, y, jp, yp, jl, jpl = _mp_parts(n, L, root)
        A = jp * jl - L * jpl * j
        B = yp * jl - L * jpl * y
        res = abs(-A / (A + 1j * B) + 1)
        loc = float(root)
        return loc, float(root - loc), float(res)


def admissible_branches(n: int, lam: float) -> list[tuple[int, float, float]]:
    """Branches k with U_{n,k} = (j'_{n,k}/lam, j_{n,k}/lam) inside (j'_{n,1}/lam, y_{n,1})."""
    y1 = zeros(n, 1).y1
    out = []
    K = 4
    while True:
        t = zeros(n, K)
        for k in range(1, K + 1):
            lo, hi = t.jp(k) / lam, t.j(k) / lam
            if hi > y1:
                return out
            if len(out) < k:
                out.append((k, float(lo), float(hi)))
        K *= 2


def _grid(lo, hi, lam, points: int | None = None):
    """Per-row grids of max(32, ceil(8 lam |U|)) cells on (lo_i, hi_i).

    The endpoints are exact zeros of J'_n(lam x) or J_n(lam x) (or x = 0),
    so the outer nodes are nudged inside.
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    m = points or max(32, math.ceil(8 * lam * float(np.max(hi - lo, initial=0.0))))
    t = np.linspace(0.0, 1.0, m + 1)
    xs = lo[:, None] + (hi - lo)[:, None] * t[None, :]
    width = np.maximum(1.0, hi - lo)
    xs[:, 0] = np.where(lo > 0, lo + 1e-13 * width, hi * 1e-12)
    xs[:, -1] = hi - 1e-13 * width
    return xs


def _sign_changes(v):
    return np.sign(v[:, :-1]) * np.sign(v[:, 1:]) <= 0


def _vec_root(f, a, b, fa, fb, xtol: float = ROOT_XTOL, maxiter: int = 200):
    """Vectorized Illinois iteration on sign-change brackets (a_i, b_i)."""
    a, b = np.array(a, dtype=float), np.array(b, dtype=float)
    fa, fb = np.array(fa, dtype=float), np.array(fb, dtype=float)
    if np.any(np.sign(fa) * np.sign(fb) > 0):
        raise NumericError("bracket without sign change passed to the root finder")
    x = b.copy()
    active = (fa != 0) & (fb != 0)
    x[fa == 0] = a[fa == 0]
    for _ in range(maxiter):
        if not np.any(active):
            return x
        ia = np.flatnonzero(active)
        aa, bb, ffa, ffb = a[ia], b[ia], fa[ia], fb[ia]
        with np.errstate(divide="ignore", invalid="ignore"):
            c = bb - ffb * (bb - aa) / (ffb - ffa)
        left, right = np.minimum(aa, bb), np.maximum(aa, bb)
        bad = ~np.isfinite(c) | (c <= left) | (c >= right)
        c = np.where(bad, 0.5 * (aa + bb), c)
        fc = f(c)
        flip = np.sign(fc) * np.sign(ffb) < 0
        # Illinois: halve the retained endpoint's value when it is kept twice
        new_a = np.where(flip, bb, aa)
        new_fa = np.where(flip, ffb, 0.5 * ffa)
        a[ia], fa[ia], b[ia], fb[ia] = new_a, new_fa, c, fc
        x[ia] = c
        tol = xtol * np.maximum(1.0, np.abs(c))
        done = (fc == 0) | (np.abs(c - new_a) <= tol)
        active[ia[done]] = False
    raise NumericError("vectorized root refinement did not converge")


def find_quasi_resonances(n: int, lam: float, window: tuple[float, float] | None = None,
                          polish: bool = True) -> list[ResonanceRecord]:
    """All quasi-resonances of order n, one per admissible U_{n,k}.

    Parameters
    ----------
    n : int
        Order (negative orders are identical to |n|).
    lam : float
        Contrast.
    window : (float, float), optional
        Keep only locations inside this range of x = oeps.
    polish : bool
        Refine in extended precision where the float64 residual exceeds 1e-10.

    Returns
    -------
    list of ResonanceRecord
        Sorted by branch.  Empty when lambda <= j_{n,1}/y_{n,1}.

    Raises
    ------
    NumericError
        If some U_{n,k} does not show exactly one sign change of F.
    """
    n = abs(int(n))
    if not lam > 0:
        raise DomainError("contrast must be positive")
    if lam <= 1.0:
        return []
    branches = admissible_branches(n, lam)
    if window is not None:
        branches = [b for b in branches if b[2] > window[0] and b[1] < window[1]]
    if not branches:
        return []
    ks = np.array([b[0] for b in branches])
    lo = np.array([b[1] for b in branches])
    hi = np.array([b[2] for b in branches])
    f = _g_fun(n, lam)
    xs = _grid(lo, hi, lam)
    v = f(xs.ravel()).reshape(xs.shape)
    ch = _sign_changes(v)
    counts = ch.sum(axis=1)
    if np.any(counts != 1):
        i = int(np.flatnonzero(counts != 1)[0])
        raise NumericError(
            f"expected one sign change of F on U_{{{n},{ks[i]}}} = ({lo[i]:.17g}, {hi[i]:.17g}), "
            f"found {counts[i]}")
    col = np.argmax(ch, axis=1)
    rows = np.arange(len(ks))
    x = _vec_root(f, xs[rows, col], xs[rows, col + 1], v[rows, col], v[rows, col + 1])
    res_d = np.abs(np.asarray(reflection_coeff(n, x, lam)) + 1.0)
    records = []
    for i in range(len(ks)):
        loc, corr, res, rd = float(x[i]), 0.0, float(res_d[i]), float(res_d[i])
        if polish and rd > _POLISH_ABOVE:
            loc, corr, res = _polish(n, lam, loc, float(xs[i, col[i]]), float(xs[i, col[i] + 1]))
            rd = abs(complex(reflection_coeff(n, loc, lam)) + 1.0)
        if window is not None and not (window[0] <= loc <= window[1]):
            continue
        records.append(ResonanceRecord(n, int(ks[i]), loc, res, float(lo[i]), float(hi[i]),
                                       float(lam), corr, rd))
    return records


def resonances_to_csv(records, path, header: dict | None = None) -> None:
    """CSV (n, k, omega_nk, residual, u_lo, u_hi) with a provenance header."""
    with open(path, "w", newline="") as fh:
        write_resonances(fh, records, header)


def write_resonances(fh, records, header: dict | None = None) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow([f"# library = diskscatter {__version__}"])
    for key, val in (header or {}).items():
        w.writerow([f"# {key} = {val}"])
    w.writerow(["n", "k", "omega_nk", "residual", "u_lo", "u_hi"])
    for r in records:
        w.writerow([r.order, r.branch, fmt17(r.location), fmt17(r.residual),
                    fmt17(r.u_lo), fmt17(r.u_hi)])


def omega01_bounds(lam: float) -> tuple[float, float]:
    """Bracket (sqrt2/(lam sqrt ln lam))(1 -+ 1/(2 sqrt ln lam)) of omega_{0,1}.

    Raises
    ------
    DomainError
        If lambda < e^2.
    """
    if lam < math.exp(2.0) * (1 - 1e-15):
        raise DomainError("omega01_bounds requires lambda >= e^2")
    s = math.sqrt(math.log(lam))
    c = math.sqrt(2.0) / (lam * s)
    return c * (1 - 0.5 / s), c * (1 + 0.5 / s)


# ------------------------------------------------------------- exclusion sets


@dataclass(frozen=True)
class ExclusionInterval:
    """I_{n,k}(tau) = [alpha_end, beta_end], in units of x = oeps."""

    order: int
    branch: int
    tau: float
    alpha_end: float
    beta_end: float
    resonance: float

    @property
    def length(self) -> float:
        return self.beta_end - self.alpha_end


def branch_set(n: int, lam: float) -> list[int]:
    """K(lambda, n): k with j'_{n,k} < n lambda (zeta_0 lambda when n = 0)."""
    bound = n * lam if n >= 1 else critical_constants(0).zeta_n * lam
    K = 4
    while True:
        t = zeros(n, K)
        ks = [k for k in range(1, K + 1) if t.jp(k) < bound]
        if len(ks) < K:
            return ks
        K *= 2


def exclusion_intervals(n: int, lam: float, tau: float) -> list[ExclusionInterval]:
    """Intervals I_{n,k}(tau) for k in K(lambda, n).

    Endpoints solve phi_n = -1 +- tau: alpha is the crossing of -1 + tau
    nearest to the resonance on its left, beta the crossing of -1 - tau
    nearest on its right.  U_{n,k} is cut at y_{n,1}; a branch without a
    resonance below y_{n,1} contributes nothing.  For n = 0 the intervals
    are clipped to (m_lambda, zeta_0).

    Raises
    ------
    ParameterError
        If tau is outside (0, 1/4].
    DomainError
        If lambda <= 7.
    """
    n = abs(int(n))
    if not (0 < tau <= 0.25):
        raise ParameterError(f"tau must lie in (0, 1/4], got {tau!r}")
    if not lam > 7:
        raise DomainError("exclusion intervals require lambda > 7")
    y1 = zeros(n, 1).y1
    if n == 0:
        clip_lo, clip_hi = m_lambda(lam), critical_constants(0).zeta_n
    else:
        clip_lo, clip_hi = 0.0, y1
    ks = branch_set(n, lam)
    if not ks:
        return []
    t = zeros(n, ks[-1])
    ks = np.array(ks)
    lo = np.array([t.jp(k) for k in ks]) / lam
    hi = np.minimum(np.array([t.j(k) for k in ks]) / lam, y1)
    keep = lo < clip_hi
    ks, lo, hi = ks[keep], lo[keep], hi[keep]
    if ks.size == 0:
        return []
    f0 = _g_fun(n, lam)
    xs = _grid(lo, hi, lam)
    v = f0(xs.ravel()).reshape(xs.shape)
    ch = _sign_changes(v)
    has = ch.any(axis=1)
    ks, lo, hi, xs, v, ch = ks[has], lo[has], hi[has], xs[has], v[has], ch[has]
    if ks.size == 0:
        return []
    rows = np.arange(ks.size)
    col = np.argmax(ch, axis=1)
    w = _vec_root(f0, xs[rows, col], xs[rows, col + 1], v[rows, col], v[rows, col + 1])
    alpha = _nearest_crossing(_g_fun(n, lam, 1.0 - tau), lo, w, lam, side="left")
    beta = _nearest_crossing(_g_fun(n, lam, 1.0 + tau), w, hi, lam, side="right")
    alpha, beta = np.maximum(alpha, clip_lo), np.minimum(beta, clip_hi)
    return [ExclusionInterval(n, int(k), float(tau), float(a), float(b), float(r))
            for k, a, b, r in zip(ks, alpha, beta, w) if b > a]


def _nearest_crossing(f, a, b, lam, side: str):
    """Root of f in (a_i, b_i) nearest to b_i (side='left') or to a_i (side='right').

    Rows without a sign change return the far endpoint.
    """
    xs = _grid(a, b, lam)
    if side == "left":
        xs[:, -1] = b  # the resonance itself, where f is nonzero
    else:
        xs[:, 0] = a
    v = f(xs.ravel()).reshape(xs.shape)
    ch = _sign_changes(v)
    has = ch.any(axis=1)
    out = np.where(has, 0.0, a if side == "left" else b).astype(float)
    if np.any(has):
        rows = np.flatnonzero(has)
        c = ch[rows]
        if side == "left":
            col = c.shape[1] - 1 - np.argmax(c[:, ::-1], axis=1)
        else:
            col = np.argmax(c, axis=1)
        out[rows] = _vec_root(f, xs[rows, col], xs[rows, col + 1], v[rows, col], v[rows, col + 1])
    return out


def measure_bound(n: int, lam: float, tau: float) -> float:
    """6 tau n ln(lam)/lam for n >= 1 and 7 tau ln(ln lam)/lam for n = 0."""
    if n == 0:
        return 7.0 * tau * math.log(math.log(lam)) / lam
    return 6.0 * tau * abs(n) * math.log(lam) / lam


def eta_max(lam: float) -> float:
    return 1.5 * math.log(lam) / lam


def eta_zero(lam: float) -> float:
    return 1.75 * math.log(math.log(lam)) / lam


def tau_schedule(n: int, lam: float, eta: float, alpha: float) -> float:
    """tau_n = eta alpha/((1+n)^(2+alpha)) / (4 eta_max)."""
    return eta * alpha / ((1.0 + abs(n)) ** (2.0 + alpha)) / (4.0 * eta_max(lam))


@dataclass(frozen=True)
class ExclusionSet:
    """Union of exclusion intervals, stored in physical frequency sqrt(q0) omega = x/eps."""

    contrast: float
    eps: float
    intervals: tuple
    total_measure: float
    eta: float
    eta_max: float
    eta_zero: float
    alpha: float
    tau_by_order: dict = field(default_factory=dict)
    tau_zero: float | None = None
    branch_sets: dict = field(default_factory=dict)
    measure_one: float = 0.0
    measure_zero: float = 0.0

    def contains(self, freq: float) -> bool:
        """True if the physical frequency lies in some excluded interval."""
        return any(iv.alpha_end / self.eps <= freq <= iv.beta_end / self.eps for iv in self.intervals)

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            write_exclusions(fh, self)


def write_exclusions(fh, ex: ExclusionSet) -> None:
    """CSV (n, k, alpha_end, beta_end, tau_n) below a header; endpoints in x/eps."""
    w = csv.writer(fh, lineterminator="\n")
    for key, val in (("library", f"diskscatter {__version__}"), ("lambda", fmt17(ex.contrast)),
                     ("eps", fmt17(ex.eps)), ("eta", fmt17(ex.eta)), ("alpha", fmt17(ex.alpha)),
                     ("total_measure", fmt17(ex.total_measure))):
        w.writerow([f"# {key} = {val}"])
    w.writerow(["n", "k", "alpha_end", "beta_end", "tau_n"])
    for iv in ex.intervals:
        w.writerow([iv.order, iv.branch, fmt17(iv.alpha_end / ex.eps),
                    fmt17(iv.beta_end / ex.eps), fmt17(iv.tau)])


def tail_measure_bound(eta: float, alpha: float, max_order: int) -> float:
    """Sum over n > max_order of the interval-measure bounds of the tau schedule.

    With tau_n = eta alpha / (4 eta_max (1+n)^(2+alpha)) each order contributes
    at most eta alpha n/(1+n)^(2+alpha); the sum is a difference of Hurwitz
    zeta values (in units of x = oeps).
    """
    q = max_order + 2.0
    return eta * alpha * float(hurwitz_zeta(1.0 + alpha, q) - hurwitz_zeta(2.0 + alpha, q))


def _merged_length(pairs):
    total, cur_lo, cur_hi = 0.0, None, None
    for lo, hi in sorted(pairs):
        if cur_hi is None or lo > cur_hi:
            if cur_hi is not None:
                total += cur_hi - cur_lo
            cur_lo, cur_hi = lo, hi
        else:
            cur_hi = max(cur_hi, hi)
    if cur_hi is not None:
        total += cur_hi - cur_lo
    return total


def broadband_set(config: ScatterConfig, alpha: float, eta: float,
                  window: tuple[float, float], eta0: float | None = None,
                  include_zero: bool = True, max_order: int | None = None) -> ExclusionSet:
    """Exclusion sets I_1 (orders n >= 1) and I_0 (order 0) for one contrast.

    Parameters
    ----------
    config : ScatterConfig
        Supplies lambda (> 7) and eps.
    alpha, eta : float
        Schedule parameters, eta <= eta_max/alpha.
    window : (float, float)
        Range of x = oeps in which intervals are assembled.
    eta0 : float, optional
        Parameter of the order-0 set, at most eta_0; defaults to eta capped at eta_0.
    include_zero : bool
        Build the order-0 set as well.
    max_order : int, optional
        Largest order n >= 1 included in I_1 (for incident fields with
        finite support only those orders matter).

    Raises
    ------
    ParameterError
        If the schedule gives tau > 1/4 or eta exceeds its cap.
    """
    lam, eps = config.lam, config.eps
    if not lam > 7:
        raise DomainError("broadband sets require lambda > 7")
    if not (alpha > 0 and eta > 0):
        raise ParameterError("alpha and eta must be positive")
    emax, ez = eta_max(lam), eta_zero(lam)
    if eta > emax / alpha * (1 + 1e-12):
        raise ParameterError(f"eta = {eta:g} exceeds eta_max/alpha = {emax / alpha:g}")
    lo_w, hi_w = window
    if not (0 <= lo_w < hi_w and math.isfinite(hi_w)):
        raise ParameterError("window must be a finite increasing pair")
    intervals, taus, ksets = [], {}, {}
    # I_{n,k} lies above j'_{n,1}/lam > n/lam
    n = 1
    top = N_MAX if max_order is None else min(int(max_order), N_MAX)
    while n <= top and zeros(n, 1).jp(1) / lam < hi_w:
        tau_n = tau_schedule(n, lam, eta, alpha)
        if tau_n > 0.25:
            raise ParameterError(f"tau_{n} = {tau_n:g} exceeds 1/4")
        taus[n] = tau_n
        ksets[n] = branch_set(n, lam)
        for iv in exclusion_intervals(n, lam, tau_n):
            if iv.beta_end > lo_w and iv.alpha_end < hi_w:
                intervals.append(iv)
        n += 1
    m1 = _merged_length([(iv.alpha_end, iv.beta_end) for iv in intervals]) / eps
    tau0 = None
    m0 = 0.0
    if include_zero:
        e0 = min(eta, ez) if eta0 is None else eta0
        if e0 > ez * (1 + 1e-12):
            raise ParameterError(f"eta0 = {e0:g} exceeds eta_0 = {ez:g}")
        tau0 = e0 / (4.0 * ez)
        ksets[0] = branch_set(0, lam)
        zero_ivs = [iv for iv in exclusion_intervals(0, lam, tau0)
                    if iv.beta_end > lo_w and iv.alpha_end < hi_w]
        m0 = _merged_length([(iv.alpha_end, iv.beta_end) for iv in zero_ivs]) / eps
        intervals.extend(zero_ivs)
    intervals.sort(key=lambda iv: (iv.alpha_end, iv.order, iv.branch))
    total = _merged_length([(iv.alpha_end, iv.beta_end) for iv in intervals]) / eps
    return ExclusionSet(lam, eps, tuple(intervals), total, eta, emax, ez, alpha,
                        taus, tau0, ksets, m1, m0)


# ----------------------------------------------------------------- thresholds


def n0_small(lam: float) -> int:
    """Smallest n >= 1 with lam^2 <= 1 - 49/(9 n^(2/3)), for 0 < lam < 1."""
    if not (0 < lam < 1):
        raise DomainError("n0_small requires 0 < lambda < 1")
    ok = lambda m: lam * lam <= 1.0 - 49.0 / (9.0 * m ** (2.0 / 3.0))
    n = max(1, math.ceil((49.0 / (9.0 * (1.0 - lam * lam))) ** 1.5))
    while n > 1 and ok(n - 1):
        n -= 1
    while not ok(n):
        n += 1
    return n


def n0_large(lam: float) -> int:
    """Smallest n >= 0 with lam > j_{n,1}/y_{n,1}, for lam > 1.

    The ratio decreases to 1 like n^(-2/3); beyond the tabulated orders its
    large-order expansion is used.
    """
    if not lam > 1:
        raise DomainError("n0_large requires lambda > 1")
    if lam > first_zero_ratio(0):
        return 0
    hi = 1
    while not lam > first_zero_ratio(hi):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if lam > first_zero_ratio(mid):
            hi = mid
        else:
            lo = mid
    return hi


def n0_thresholds(lam: float) -> tuple[int | None, int | None]:
    """(n0 for contrasts below 1, n0 for contrasts above 1); the other is None."""
    if lam < 1:
        return n0_small(lam), None
    if lam > 1:
        return None, n0_large(lam)
    return None, None


__all__ = [
    "ExclusionInterval",
    "ExclusionSet",
    "ResonanceRecord",
    "admissible_branches",
    "branch_set",
    "broadband_set",
    "eta_max",
    "eta_zero",
    "exclusion_intervals",
    "find_quasi_resonances",
    "measure_bound",
    "n0_large",
    "n0_small",
    "n0_thresholds",
    "omega01_bounds",
    "resonances_to_csv",
    "tail_measure_bound",
    "tau_schedule",
    "write_exclusions",
    "write_resonances",
]
