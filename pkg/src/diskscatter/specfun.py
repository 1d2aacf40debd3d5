"""Cylinder functions of integer order, Hankel modulus/phase and Bessel zeros.

J_n is taken from :func:`scipy.special.jv`.  Y_n is built by forward
recurrence from ``y0``/``y1``, which is stable for Y at every argument and
avoids the loss of relative accuracy of ``yv`` at high order and small
argument.  Derivatives come from the standard recurrences.

Arguments where Y_n overflows or J_n drops into the subnormal range are
rejected with :class:`~diskscatter.errors.DomainError` instead of returning
degraded values.
"""

from __future__ import annotations

import csv
import threading
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np
from scipy import special

from .errors import DomainError, NumericError

N_MAX = 500
# relative accuracy decays like x * 2^-52 for large arguments: about 1e-11 at the cap
X_MAX = 1.0e5
ZERO_TOL = 1e-12

# beyond these magnitudes Y_n overflows or J_n is subnormal
_HUGE = 1e290
_TINY = 1e-290

# first-zero expansions nu + c1 nu^(1/3) + c2 nu^(-1/3) + c3/nu + c4 nu^(-5/3)
_FIRST_ZERO_COEFFS = {
    "j": (1.8557571, 1.033150, -0.00397, -0.0908),
    "jp": (0.8086165, 0.072490, -0.05097, 0.0094),
    "y": (0.9315768, 0.260351, 0.01198, -0.0060),
    "yp": (1.8210980, 0.940319, -0.05808, -0.0540),
}

# limits of a_{n,1}, a'_{n,1}, b_{n,1}, b'_{n,1}: Airy zeros scaled by 2^(-1/3)
AIRY_LIMITS = {
    "j": 2.338107410459767 / 2 ** (1 / 3),
    "jp": 1.018792971647471 / 2 ** (1 / 3),
    "y": 1.173713222709128 / 2 ** (1 / 3),
    "yp": 2.294439682614123 / 2 ** (1 / 3),
}


@dataclass(frozen=True)
class CylinderValues:
    """J_n, Y_n and their derivatives at one point."""

    order: int
    argument: float
    j: float
    y: float
    jp: float
    yp: float

    @property
    def h(self) -> complex:
        """Hankel function of the first kind H_n = J_n + iY_n."""
        return complex(self.j, self.y)

    @property
    def hp(self) -> complex:
        return complex(self.jp, self.yp)


@dataclass(frozen=True)
class HankelPolar:
    """Polar form H_n(x) = M_n(x) exp(i theta_n(x))."""

    order: int
    argument: float
    modulus: float
    phase: float


@dataclass(frozen=True)
class ZeroTable:
    """Leading zeros of J_n, J'_n, Y_n and Y'_n.

    ``first_jp_zeros[0]`` is 0 for n = 0, following the convention that
    x = 0 counts as the first extremum of J_0.
    """

    order: int
    first_j_zeros: tuple[float, ...]
    first_jp_zeros: tuple[float, ...]
    y1: float
    yp1: float

    @property
    def size(self) -> int:
        return len(self.first_j_zeros)

    def j(self, k: int) -> float:
        return self.first_j_zeros[k - 1]

    def jp(self, k: int) -> float:
        return self.first_jp_zeros[k - 1]


def _check_order(n) -> int:
    if isinstance(n, (bool, np.bool_)) or int(n) != n or n < 0:
        raise DomainError(f"order must be a non-negative integer, got {n!r}")
    n = int(n)
    if n > N_MAX:
        raise DomainError(f"order {n} exceeds supported maximum {N_MAX}")
    return n


def cylinder_arrays(n: int, x, strict: bool = True):
    """Vectorized J_n, Y_n, J'_n, Y'_n for a fixed order.

    Parameters
    ----------
    n : int
        Order, 0 <= n <= N_MAX.
    x : array_like
        Positive arguments no larger than X_MAX.
    strict : bool, optional
        If True, raise :class:`DomainError` when any value leaves the
        representable range.  Otherwise overflowing Y entries are returned
        as ``-inf`` (with Y' = ``+inf``) and the caller deals with them.

    Returns
    -------
    j, y, jp, yp : ndarray
    """
    n = _check_order(n)
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)) or np.any(x <= 0.0):
        raise DomainError("argument must be positive and finite")
    if np.any(x > X_MAX):
        raise DomainError(f"argument exceeds supported maximum {X_MAX:g}")

    j = special.jv(n, x)
    if n == 0:
        jp = -special.j1(x)
    else:
        jp = special.jv(n - 1, x) - (n / x) * j

    with np.errstate(over="ignore", invalid="ignore"):
        y_prev = special.y0(x)
        y_cur = special.y1(x)
        if n == 0:
            y, yp = y_prev, -y_cur
        else:
            two_over_x = 2.0 / x
            for m in range(1, n):
                y_prev, y_cur = y_cur, (m * two_over_x) * y_cur - y_prev
            # |Y_m| grows monotonically once past overflow, so inf/nan only
            # appear after a genuine overflow: pin those entries to -inf
            bad = ~np.isfinite(y_cur) | ~np.isfinite(y_prev) | (np.abs(y_cur) > _HUGE)
            y = np.where(bad, -np.inf, y_cur)
            yp = np.where(bad, np.inf, y_prev - (n / x) * y_cur)

    if strict:
        out = ~np.isfinite(y) | (np.abs(y) > _HUGE) | (np.abs(yp) > _HUGE)
        # J_n only underflows below its turning point; exact zeros elsewhere are fine
        under = (np.abs(j) < _TINY) & (x < n)
        if np.any(out | under):
            bad = np.asarray(x)[out | under].ravel()
            raise DomainError(
                f"J_{n}/Y_{n} not representable at x = {bad[0]:.17g} "
                "(overflow/underflow regime)"
            )
    return j, y, jp, yp


def eval_cylinder(n: int, x: float) -> CylinderValues:
    """Evaluate J_n, Y_n, J'_n and Y'_n at a single point.

    Raises
    ------
    DomainError
        For x <= 0, order or argument beyond the supported caps, or when the
        values overflow or underflow double precision.
    """
    j, y, jp, yp = cylinder_arrays(n, np.array([float(x)]))
    return CylinderValues(int(n), float(x), float(j[0]), float(y[0]), float(jp[0]), float(yp[0]))


def _debye_phase(n: int, x):
    """Leading-order phase of H_n used to pick the continuous branch."""
    x = np.asarray(x, dtype=float)
    est = np.full_like(x, -np.pi / 2)
    big = x > n
    xb = x[big]
    if n == 0:
        est[big] = xb - np.pi / 4
    else:
        est[big] = np.sqrt(xb * xb - n * n) - n * np.arccos(n / xb) - np.pi / 4
    return est


def phase_from_values(n: int, x, j, y):
    """Continuous phase theta_n given precomputed J_n and Y_n values."""
    x = np.asarray(x, dtype=float)
    principal = np.arctan2(y, j)
    est = _debye_phase(n, x)
    # below the turning point J > 0 > Y and the principal value is correct
    shift = np.where(x > n, np.round((est - principal) / (2 * np.pi)), 0.0)
    return principal + 2 * np.pi * shift


def hankel_polar_arrays(n: int, x):
    """Vectorized modulus M_n and continuous phase theta_n."""
    j, y, _, _ = cylinder_arrays(n, x)
    return np.hypot(j, y), phase_from_values(n, x, j, y)


def eval_hankel_polar(n: int, x: float) -> HankelPolar:
    """Modulus and continuous phase of H_n at a single point.

    The branch is fixed by theta_n(0+) = -pi/2: below x = n the phase lies in
    (-pi/2, 0); beyond it the multiple of 2 pi is chosen closest to the
    Debye estimate sqrt(x^2 - n^2) - n arccos(n/x) - pi/4.
    """
    m, th = hankel_polar_arrays(n, np.array([float(x)]))
    return HankelPolar(int(n), float(x), float(m[0]), float(th[0]))


def first_zero_asymptotic(n: float, kind: str) -> float:
    """Large-order expansion of the first zero of J, J', Y or Y'."""
    c1, c2, c3, c4 = _FIRST_ZERO_COEFFS[kind]
    t = n ** (1.0 / 3.0)
    return n + c1 * t + c2 / t + c3 / n + c4 / (n * t * t)


def _safeguarded_newton(fdf, a: float, b: float, guess: float, xtol: float = 1e-15,
                        maxiter: int = 200) -> float:
    """Newton iteration kept inside a sign-change bracket [a, b]."""
    fa = fdf(a)[0]
    fb = fdf(b)[0]
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if np.sign(fa) == np.sign(fb):
        raise NumericError(f"no sign change on bracket [{a:.17g}, {b:.17g}]")
    if fa > 0:
        a, b = b, a  # orient so that f(a) < 0 < f(b)
    x = guess if min(a, b) < guess < max(a, b) else 0.5 * (a + b)
    for _ in range(maxiter):
        f, df = fdf(x)
        if f == 0.0:
            return x
        if f < 0:
            a = x
        else:
            b = x
        step_ok = df != 0.0 and np.isfinite(df)
        xn = x - f / df if step_ok else None
        if xn is None or not (min(a, b) < xn < max(a, b)):
            xn = 0.5 * (a + b)
        if abs(xn - x) <= xtol * max(1.0, abs(x)) or abs(b - a) <= xtol * max(1.0, abs(x)):
            return xn
        x = xn
    raise NumericError(f"safeguarded Newton did not converge in [{a:.17g}, {b:.17g}]")


def _theta_fdf(n: int, target: float):
    def fdf(x):
        j, y, _, _ = cylinder_arrays(n, np.array([x]))
        th = phase_from_values(n, np.array([x]), j, y)[0]
        m2 = j[0] ** 2 + y[0] ** 2
        return th - target, 2.0 / (np.pi * x * m2)
    return fdf


def _phase_zero(n: int, target: float, lo: float, guess: float) -> float:
    """Solve theta_n(x) = target for x > lo, with theta_n(lo) < target."""
    fdf = _theta_fdf(n, target)
    hi = max(guess, lo) + 0.5
    while fdf(hi)[0] < 0:
        hi = lo + 2.0 * (hi - lo)
        if hi > X_MAX:
            raise NumericError(f"zero of phase {target} for n={n} beyond {X_MAX:g}")
    return _safeguarded_newton(fdf, lo, hi, guess)


def _derivative_zero(n: int, a: float, b: float, which: str) -> float:
    """Zero of J'_n or Y'_n in (a, b) using the Bessel equation for f''."""

    def fdf(x):
        j, y, jp, yp = cylinder_arrays(n, np.array([x]))
        v, dv = (j[0], jp[0]) if which == "j" else (y[0], yp[0])
        return dv, -dv / x - (1.0 - (n / x) ** 2) * v

    return _safeguarded_newton(fdf, a, b, 0.5 * (a + b))


def _derivative_zeros_vec(n: int, a, b, which: str = "j", maxiter: int = 100):
    """Zeros of J'_n (or Y'_n) in the brackets (a_i, b_i), all at once.

    Vectorized safeguarded Newton: a Newton step is taken only when it stays
    inside the current bracket, otherwise the bracket is bisected.
    """
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)

    def fdf(x):
        j, y, jp, yp = cylinder_arrays(n, x)
        v, dv = (j, jp) if which == "j" else (y, yp)
        return dv, -dv / x - (1.0 - (n / x) ** 2) * v

    fa = fdf(a)[0]
    fb = fdf(b)[0]
    if np.any(np.sign(fa) == np.sign(fb)):
        raise NumericError(f"derivative-zero brackets without sign change for n={n}")
    # orient so that f(lo) < 0 < f(hi)
    lo = np.where(fa < 0, a, b)
    hi = np.where(fa < 0, b, a)
    x = 0.5 * (a + b)
    for _ in range(maxiter):
        f, df = fdf(x)
        neg = f < 0
        lo = np.where(neg, x, lo)
        hi = np.where(neg, hi, x)
        with np.errstate(divide="ignore", invalid="ignore"):
            xn = x - f / df
        left, right = np.minimum(lo, hi), np.maximum(lo, hi)
        bad = ~np.isfinite(xn) | (xn <= left) | (xn >= right)
        xn = np.where(bad, 0.5 * (lo + hi), xn)
        done = (np.abs(xn - x) <= 1e-15 * np.maximum(1.0, np.abs(x))) | (f == 0)
        x = np.where(f == 0, x, xn)
        if np.all(done):
            return x
    raise NumericError(f"vectorized derivative-zero search did not converge for n={n}")


_SEQUENTIAL_ZEROS = 3


def _debye_inverse(n: int, target):
    """Solve sqrt(x^2-n^2) - n arccos(n/x) - pi/4 = target for x > n."""
    x = np.asarray(target, dtype=float) + np.pi / 4 + n * np.pi / 2
    for _ in range(60):
        r = np.sqrt(np.maximum(x * x - n * n, 0.0))
        h = r - n * np.arccos(np.minimum(n / x, 1.0)) - np.pi / 4 - target
        xn = x - h * x / np.maximum(r, 1e-300)
        xn = np.maximum(xn, 0.5 * (x + n))  # stay right of the turning point
        if np.all(np.abs(xn - x) <= 1e-14 * xn):
            return xn
        x = xn
    return x


def _phase_zeros_vec(n: int, ks, prev: float):
    """j_{n,k} for the given k (all beyond the turning point) by vectorized Newton on theta_n."""
    target = np.pi / 2 + (ks - 1) * np.pi
    x = _debye_inverse(n, target) if n > 0 else target + np.pi / 4
    for _ in range(50):
        j, y, _, _ = cylinder_arrays(n, x)
        th = phase_from_values(n, x, j, y)
        step = (th - target) * np.pi * x * (j * j + y * y) / 2.0
        x = x - step
        if np.all(np.abs(step) <= 1e-15 * x):
            break
    else:
        raise NumericError(f"vectorized zero search for n={n} did not converge")
    # validation: strictly increasing, spaced by more than pi, sign change of J
    seq = np.concatenate(([prev], x))
    min_gap = np.pi * (1 - 1e-9) if n > 0 else 3.0
    if np.any(np.diff(seq) <= min_gap):
        raise NumericError(f"vectorized zeros for n={n} fail the spacing check")
    return [float(v) for v in x]


def _compute_zero_table(n: int, K: int, base: ZeroTable | None = None) -> ZeroTable:
    """Zero table with K entries, extending ``base`` when given."""
    if base is None:
        lo = n if n > 0 else 1e-6
        # theta_n = 0 at y_{n,1}; theta_n = pi/2 + (k-1) pi at j_{n,k}
        guess_y = first_zero_asymptotic(n, "y") if n > 0 else 0.8936
        y1 = _phase_zero(n, 0.0, lo, guess_y)
        jz, jpz, prev, yp1 = [], [], y1, None
    else:
        y1, yp1 = base.y1, base.yp1
        jz, jpz = list(base.first_j_zeros), list(base.first_jp_zeros)
        prev = jz[-1]
    k0 = len(jz)
    # the first zeros sit near the turning point: solve them one by one
    for k in range(k0 + 1, min(K, _SEQUENTIAL_ZEROS) + 1):
        if k == 1:
            guess = first_zero_asymptotic(n, "j") if n > 0 else 2.4048
        else:
            guess = prev + np.pi
        prev = _phase_zero(n, np.pi / 2 + (k - 1) * np.pi, prev, guess)
        jz.append(prev)
    if K > len(jz):
        jz.extend(_phase_zeros_vec(n, np.arange(len(jz) + 1, K + 1), jz[-1]))
    ks = np.arange(k0 + 1, K + 1)
    if ks.size:
        a = np.array([jz[k - 2] if k >= 2 else float(n) for k in ks])
        b = np.array([jz[k - 1] for k in ks])
        if n == 0 and ks[0] == 1:
            new = [0.0] + list(_derivative_zeros_vec(n, a[1:], b[1:])) if ks.size > 1 else [0.0]
        else:
            new = list(_derivative_zeros_vec(n, a, b))
        jpz.extend(float(v) for v in new)
    if yp1 is None:
        yp1 = _derivative_zero(n, y1, jz[0], "y")
    return ZeroTable(n, tuple(jz), tuple(jpz), y1, yp1)


_ZERO_CACHE: dict[int, ZeroTable] = {}
_ZERO_LOCK = threading.Lock()


def zeros(n: int, K: int = 1) -> ZeroTable:
    """Leading zeros of the cylinder functions of order n.

    Parameters
    ----------
    n : int
        Order.
    K : int
        Number of zeros of J_n and J'_n to return.

    Returns
    -------
    ZeroTable
        Zeros refined to absolute error below 1e-12.  Tables are cached per
        order; a request for fewer zeros than cached is served by slicing.
    """
    n = _check_order(n)
    if int(K) != K or K < 1:
        raise DomainError(f"K must be a positive integer, got {K!r}")
    K = int(K)
    with _ZERO_LOCK:
        table = _ZERO_CACHE.get(n)
    if table is None or table.size < K:
        # grow geometrically so repeated small extensions stay cheap
        target = K if table is None else max(K, 2 * table.size)
        table = _compute_zero_table(n, target, table)
        with _ZERO_LOCK:
            cur = _ZERO_CACHE.get(n)
            if cur is None or cur.size < table.size:
                _ZERO_CACHE[n] = table
    if table.size == K:
        return table
    return ZeroTable(n, table.first_j_zeros[:K], table.first_jp_zeros[:K], table.y1, table.yp1)


def j_zeros_below(n: int, bound: float) -> tuple[float, ...]:
    """All zeros j_{n,k} with j_{n,k} < bound, in increasing order."""
    K = max(1, int((bound - n) / np.pi) + 2)
    while True:
        table = zeros(n, K)
        if table.first_j_zeros[-1] >= bound:
            return tuple(z for z in table.first_j_zeros if z < bound)
        K *= 2


def save_zero_cache(path) -> int:
    """Write cached zero tables to CSV; returns the number of rows written."""
    with _ZERO_LOCK:
        tables = sorted(_ZERO_CACHE.values(), key=lambda t: t.order)
    rows = 0
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "kind", "k", "value", "tol"])
        for t in tables:
            entries = [("y", 1, t.y1), ("yp", 1, t.yp1)]
            entries += [("j", k + 1, v) for k, v in enumerate(t.first_j_zeros)]
            entries += [("jp", k + 1, v) for k, v in enumerate(t.first_jp_zeros)]
            for kind, k, v in entries:
                w.writerow([t.order, kind, k, f"{v:.17g}", f"{ZERO_TOL:.1e}"])
                rows += 1
    return rows


def load_zero_cache(path) -> int:
    """Populate the in-memory cache from a CSV written by :func:`save_zero_cache`.

    Rows with a tolerance looser than ``ZERO_TOL`` are ignored.  Returns the
    number of orders loaded.
    """
    data: dict[int, dict] = {}
    with open(Path(path), newline="") as fh:
        for row in csv.DictReader(fh):
            if float(row["tol"]) > ZERO_TOL:
                continue
            d = data.setdefault(int(row["n"]), {"j": {}, "jp": {}, "y": {}, "yp": {}})
            d[row["kind"]][int(row["k"])] = float(row["value"])
    loaded = 0
    for n, d in data.items():
        K = min(len(d["j"]), len(d["jp"]))
        if K == 0 or 1 not in d["y"] or 1 not in d["yp"]:
            continue
        table = ZeroTable(
            n,
            tuple(d["j"][k] for k in range(1, K + 1)),
            tuple(d["jp"][k] for k in range(1, K + 1)),
            d["y"][1],
            d["yp"][1],
        )
        with _ZERO_LOCK:
            cur = _ZERO_CACHE.get(n)
            if cur is None or cur.size < K:
                _ZERO_CACHE[n] = table
        loaded += 1
    return loaded


def clear_zero_cache() -> None:
    with _ZERO_LOCK:
        _ZERO_CACHE.clear()


@lru_cache(maxsize=None)
def sup_abs_jn(n: int) -> float:
    """sup over x > 0 of |J_n(x)|, attained at j'_{n,1} (at 0 for n = 0)."""
    n = _check_order(n)
    if n == 0:
        return 1.0
    return abs(eval_cylinder(n, zeros(n, 1).jp(1)).j)


def landau_bounds(n: int) -> tuple[float, float]:
    """Lower and upper Landau constants times (n+1)^(-1/3)."""
    s = (n + 1) ** (-1.0 / 3.0)
    return 4.0 / 7.0 * s, 6.0 / 7.0 * s


def j_ratio(n: int, z):
    """J_{n+1}(z)/J_n(z) from the backward continued fraction.

    Stays finite where both Bessel values underflow.  Accurate for z
    below the turning point, which is where it is needed.
    """
    z = np.asarray(z, dtype=float)
    r = np.zeros_like(z)
    top = n + 60 + int(np.ceil(np.max(z, initial=0.0)))
    for m in range(top, n, -1):
        r = 1.0 / (2.0 * m / z - r)
    return r


def y_ratio(n: int, x):
    """Y_{n-1}(x)/Y_n(x) for n >= 1 by forward recurrence on ratios.

    Stays finite where Y_n overflows.
    """
    if n < 1:
        raise DomainError("y_ratio needs n >= 1")
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        rho = special.y0(x) / special.y1(x)  # Y_0/Y_1
        for m in range(1, n):
            # Y_{m+1}/Y_m = 2m/x - Y_{m-1}/Y_m
            rho = 1.0 / (2.0 * m / x - rho)
    return rho


def first_zero_ratio(n: int) -> float:
    """j_{n,1}/y_{n,1}; large-order expansion beyond the supported order cap."""
    if n <= N_MAX:
        t = zeros(n, 1)
        return t.j(1) / t.y1
    return first_zero_asymptotic(n, "j") / first_zero_asymptotic(n, "y")


__all__ = [
    "AIRY_LIMITS",
    "CylinderValues",
    "HankelPolar",
    "N_MAX",
    "X_MAX",
    "ZeroTable",
    "clear_zero_cache",
    "cylinder_arrays",
    "eval_cylinder",
    "eval_hankel_polar",
    "first_zero_asymptotic",
    "first_zero_ratio",
    "hankel_polar_arrays",
    "j_ratio",
    "j_zeros_below",
    "landau_bounds",
    "load_zero_cache",
    "phase_from_values",
    "save_zero_cache",
    "sup_abs_jn",
    "y_ratio",
    "zeros",
]
