"""Logarithmic-derivative quotients of J_n and Y_n.

For n >= 1::

    g_n(x) = (x/n) J'_n(x)/J_n(x)        k_n(x) = -(x/n) Y'_n(x)/Y_n(x)

and for n = 0 the factor 1/n is dropped.  Quasi-resonances are the solutions
of g_n(lambda x) = -k_n(x), and phi_n = g_n(lambda x)/k_n(x) measures the
distance to them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, PoleError
from .specfun import cylinder_arrays, j_ratio, y_ratio, zeros

POLE_RADIUS = 1e-10
# lower constant in the Boyd-Dunster form of the Wronskian bound: 4/2.09
KAPPA_PLUS = 4.0 / 2.09
EULER_GAMMA = float(np.euler_gamma)


def _nplus(n: int) -> int:
    return max(n, 1)


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def g_values(n: int, x):
    """g_n without pole checks (vectorized); infinite or huge near zeros of J_n.

    Below the turning point, where J_n may underflow, the value comes from
    the continued fraction for J_{n+1}/J_n.
    """
    xa, scalar = _as_array(x)
    x1 = np.atleast_1d(xa)
    j, _, jp, _ = cylinder_arrays(n, x1, strict=False)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = x1 * jp / (_nplus(n) * j)
    tiny = (np.abs(j) < 1e-250) & (x1 < n)
    if np.any(tiny):
        out[tiny] = 1.0 - (x1[tiny] / n) * j_ratio(n, x1[tiny])
    return float(out[0]) if scalar else out.reshape(xa.shape)


def k_values(n: int, x):
    """k_n without pole checks (vectorized); finite where Y_n overflows."""
    xa, scalar = _as_array(x)
    x1 = np.atleast_1d(xa)
    _, y, _, yp = cylinder_arrays(n, x1, strict=False)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = -x1 * yp / (_nplus(n) * y)
    huge = ~np.isfinite(y) | (np.abs(y) > 1e250)
    if n >= 1 and np.any(huge):
        out[huge] = 1.0 - (x1[huge] / n) * y_ratio(n, x1[huge])
    return float(out[0]) if scalar else out.reshape(xa.shape)


def _nearest_pole(x: float, v: float, dv: float) -> float:
    # one Newton step lands on the zero to within O(step^2)
    return x - v / dv


def g(n: int, x):
    """Normalized logarithmic derivative of J_n.

    Parameters
    ----------
    n : int
        Order.
    x : float or array_like
        Positive argument(s).

    Raises
    ------
    PoleError
        If some x lies within a relative distance 1e-10 of a zero j_{n,k}.
    """
    xa, _ = _as_array(x)
    x1 = np.atleast_1d(xa)
    j, _, jp, _ = cylinder_arrays(n, x1, strict=False)
    near = (np.abs(j) <= POLE_RADIUS * x1 * np.abs(jp)) & (x1 >= n)
    if np.any(near):
        i = int(np.flatnonzero(near)[0])
        z = _nearest_pole(x1[i], j[i], jp[i])
        raise PoleError(f"g_{n} evaluated within {POLE_RADIUS:g} of the zero j = {z:.17g}", z)
    return g_values(n, x)


def k(n: int, x):
    """Normalized logarithmic derivative of Y_n (with a minus sign).

    Positive on (0, y_{n,1}).

    Raises
    ------
    PoleError
        If some x lies within a relative distance 1e-10 of a zero of Y_n.
    """
    xa, _ = _as_array(x)
    x1 = np.atleast_1d(xa)
    _, y, _, yp = cylinder_arrays(n, x1, strict=False)
    with np.errstate(invalid="ignore"):
        near = np.isfinite(y) & (np.abs(y) <= POLE_RADIUS * x1 * np.abs(yp))
    if np.any(near):
        i = int(np.flatnonzero(near)[0])
        z = _nearest_pole(x1[i], y[i], yp[i])
        raise PoleError(f"k_{n} evaluated within {POLE_RADIUS:g} of the zero y = {z:.17g}", z)
    return k_values(n, x)


def g_ode_rhs(n: int, x, gx):
    """Right-hand side n/x - x/n+ - (n+/x) g^2 of the Riccati equation for g_n."""
    npl = _nplus(n)
    x = np.asarray(x, dtype=float)
    return n / x - x / npl - (npl / x) * np.asarray(gx) ** 2


def k_ode_rhs(n: int, x, kx):
    """Right-hand side of the Riccati equation for k_n.

    (n/x)(k^2 - 1 + x^2/n^2) for n >= 1 and (k^2 + x^2)/x for n = 0.
    """
    npl = _nplus(n)
    x = np.asarray(x, dtype=float)
    return (npl / x) * np.asarray(kx) ** 2 - n * n / (npl * x) + x / npl


def phi(n: int, lam: float, x):
    """Ratio phi_n(x) = g_n(lambda x)/k_n(x) on (0, y_{n,1}).

    Equals -1 exactly at quasi-resonances.

    Raises
    ------
    DomainError
        If x is outside (0, y_{n,1}) or lambda <= 0.
    PoleError
        If lambda x is within 1e-10 (relative) of a zero of J_n.
    """
    if not lam > 0:
        raise DomainError(f"contrast must be positive, got {lam!r}")
    xa, scalar = _as_array(x)
    y1 = zeros(n, 1).y1
    if np.any(xa <= 0) or np.any(xa >= y1):
        raise DomainError(f"phi_{n} is defined on (0, y_{{n,1}}) = (0, {y1:.17g})")
    out = g(n, lam * xa) / k(n, xa)
    return float(out) if scalar else out


@dataclass(frozen=True)
class CriticalConstants:
    """Calibration constants of the quotient bounds for one order.

    For n = 0 only ``zeta_n`` (holding zeta_0) and the universal constants
    are defined; the order-dependent fields are None.
    """

    order: int
    c_n: float | None
    kappa_n: float | None
    chi_n: float | None
    zeta_n: float
    kappa_plus: float = KAPPA_PLUS
    euler_gamma: float = EULER_GAMMA


def chi(n: int) -> float:
    """chi_n = n - (4/5) n^(1/3), with chi_1 = 1/2."""
    if n < 1:
        raise DomainError("chi_n is defined for n >= 1")
    return 0.5 if n == 1 else n - 0.8 * n ** (1.0 / 3.0)


def _kappa(n: int) -> float:
    # k_n - sqrt(1 - x^2/n^2) is negative near 0 and positive at n
    f = lambda t: k_values(n, t) - np.sqrt(max(0.0, 1.0 - (t / n) ** 2))
    xs = n * np.linspace(0.02, 1.0, 400)
    vals = np.array([f(t) for t in xs])
    change = np.flatnonzero((vals[:-1] < 0) & (vals[1:] >= 0))
    if change.size == 0:
        raise DomainError(f"no crossing for kappa_{n}")
    i = change[-1]
    return brentq(f, xs[i], xs[i + 1], xtol=1e-15, rtol=1e-15)


def _zeta_positive(n: int, kappa_n: float) -> float:
    # derivative of x/k_n has the sign of n k (1 - n k) + n^2 - x^2
    def f(t):
        kk = k_values(n, t)
        return n * kk * (1.0 - n * kk) + n * n - t * t

    return brentq(f, kappa_n, float(n), xtol=1e-15, rtol=1e-15)


def zeta0() -> float:
    """Unique solution of k_0(z) = 1/2 + sqrt(1 - 4 z^2)/2 on (0, 1/2)."""
    f = lambda t: k_values(0, t) - 0.5 - 0.5 * np.sqrt(1.0 - 4.0 * t * t)
    return brentq(f, 1e-3, 0.45, xtol=1e-15, rtol=1e-15)


@lru_cache(maxsize=None)
def critical_constants(n: int) -> CriticalConstants:
    """Compute c_n, kappa_n, chi_n and zeta_n for order n.

    Examples
    --------
    >>> round(critical_constants(1).kappa_n, 2)
    0.52
    """
    if n == 0:
        return CriticalConstants(0, None, None, None, zeta0())
    c_n = n ** (1.0 / 3.0) * g(n, float(n))
    kap = _kappa(n)
    return CriticalConstants(n, c_n, kap, chi(n), _zeta_positive(n, kap))


__all__ = [
    "CriticalConstants",
    "EULER_GAMMA",
    "KAPPA_PLUS",
    "chi",
    "critical_constants",
    "g",
    "g_ode_rhs",
    "g_values",
    "k",
    "k_ode_rhs",
    "k_values",
    "phi",
    "zeta0",
]
