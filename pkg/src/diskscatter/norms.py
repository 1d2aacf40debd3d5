"""Sobolev-type norms of Fourier traces and incident-field norms.

For a trace with coefficients c_n on a circle::

    H^s      sqrt(2 pi) sqrt(sum_n |c_n|^2 (1+|n|)^(2s))
    H^s_*    the same sum without n = 0

and for an incident field with coefficients a_n::

    N^s      sqrt(2 pi) sqrt(sum_{n != 0} |a_n|^2 sup|J_n|^2 (1+|n|)^(2s))
    N_p^s    sqrt(2 pi) sup_{|n| >= p} |a_n| sup|J_n| (1+|n|)^s
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError
from .scatter import FieldTrace, ModeCoefficients, ScatterConfig
from .specfun import N_MAX, sup_abs_jn

SQRT_2PI = math.sqrt(2.0 * math.pi)
DEFAULT_RTOL = 1e-6


@dataclass(frozen=True)
class NormValue:
    """A norm value with its truncation metadata.

    ``kind`` is one of 'H', 'H_star', 'N_script' or 'N_bold(p)'.
    """

    value: float
    kind: str
    sigma: float
    truncation: int | None = None
    tail_bound: float = 0.0

    def __float__(self) -> float:
        return self.value


def _weights(orders, sigma):
    return (1.0 + np.abs(orders)) ** (2.0 * sigma)


def _trace_norm(trace: FieldTrace, sigma: float, star: bool, rtol: float) -> NormValue:
    if not math.isfinite(sigma):
        raise DomainError("sigma must be finite")
    c = trace.coeffs
    n = trace.orders
    if star:
        keep = n != 0
        c, n = c[keep], n[keep]
    if not np.all(np.isfinite(c)):
        raise AccuracyError("trace has non-finite coefficients")
    total = float(np.sum(np.abs(c) ** 2 * _weights(n, sigma)))
    value = SQRT_2PI * math.sqrt(total)
    tail = SQRT_2PI * trace.tail(sigma)
    if tail > 0:
        if not math.isfinite(tail) or tail > rtol * value:
            raise AccuracyError(
                f"truncation tail {tail:.3e} exceeds {rtol:g} of the norm {value:.3e}; "
                "increase the truncation")
    kind = "H_star" if star else "H"
    return NormValue(value, kind, float(sigma), trace.truncation, tail)


def h_sigma(trace: FieldTrace, sigma: float, rtol: float = DEFAULT_RTOL) -> NormValue:
    """H^sigma norm of a trace.

    Raises
    ------
    AccuracyError
        If the reported truncation tail is not below ``rtol`` times the value.
    """
    return _trace_norm(trace, sigma, False, rtol)


def h_sigma_star(trace: FieldTrace, sigma: float, rtol: float = DEFAULT_RTOL) -> NormValue:
    """H^sigma norm with the mean (n = 0 coefficient) removed."""
    return _trace_norm(trace, sigma, True, rtol)


def _mode_orders(modes: ModeCoefficients, truncation: int | None):
    if modes.is_plane_wave:
        if truncation is None:
            raise DomainError("plane-wave modes need an explicit truncation for incident norms")
        return np.arange(-truncation, truncation + 1)
    return np.array(sorted(modes.entries), dtype=int)


def _sup_j(orders):
    return np.array([sup_abs_jn(abs(int(n))) for n in orders])


def n_script(modes: ModeCoefficients, config: ScatterConfig | None = None, sigma: float = 0.0,
             truncation: int | None = None) -> NormValue:
    """Radius-independent norm of the incident field (mean excluded).

    ``config`` is accepted for interface symmetry; the value does not depend
    on it.  Plane waves need ``truncation``; for them the sum diverges when
    sigma >= -1/6 and the truncated value is a lower bound.
    """
    orders = _mode_orders(modes, truncation)
    orders = orders[orders != 0]
    if orders.size and np.max(np.abs(orders)) > N_MAX:
        raise DomainError(f"orders beyond {N_MAX} are not supported")
    a = modes.coefficients(orders)
    terms = np.abs(a) ** 2 * _sup_j(orders) ** 2 * _weights(orders, sigma)
    return NormValue(SQRT_2PI * math.sqrt(float(np.sum(terms))), "N_script", float(sigma),
                     truncation if modes.is_plane_wave else modes.support())


def n_bold(modes: ModeCoefficients, config: ScatterConfig | None = None, sigma: float = 0.0,
           p: int = 1, truncation: int | None = None) -> NormValue:
    """Semi-norm sqrt(2 pi) sup_{|n| >= p} |a_n| sup|J_n| (1+|n|)^sigma."""
    if int(p) != p or p < 1:
        raise DomainError(f"p must be a positive integer, got {p!r}")
    orders = _mode_orders(modes, truncation)
    orders = orders[np.abs(orders) >= p]
    if orders.size == 0:
        return NormValue(0.0, f"N_bold({p})", float(sigma))
    a = modes.coefficients(orders)
    vals = np.abs(a) * _sup_j(orders) * (1.0 + np.abs(orders)) ** sigma
    return NormValue(SQRT_2PI * float(np.max(vals)), f"N_bold({p})", float(sigma),
                     truncation if modes.is_plane_wave else modes.support())


def landau_sum(modes: ModeCoefficients, sigma: float, truncation: int | None = None) -> float:
    """sum_{n != 0} |a_n|^2 (1+|n|)^(2 sigma - 2/3), bracketing N^sigma squared."""
    orders = _mode_orders(modes, truncation)
    orders = orders[orders != 0]
    a = modes.coefficients(orders)
    return float(np.sum(np.abs(a) ** 2 * (1.0 + np.abs(orders)) ** (2 * sigma - 2.0 / 3.0)))


__all__ = [
    "NormValue",
    "h_sigma",
    "h_sigma_star",
    "landau_sum",
    "n_bold",
    "n_script",
]
