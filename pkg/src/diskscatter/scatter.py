"""Reflection/transmission coefficients and Fourier traces of the fields.

A disk of radius eps and index q sits in a background of index q0.  With
x = sqrt(q0) omega eps (``oeps``) and lambda = sqrt(q/q0), mode n of the
incident field a_n J_n(sqrt(q0) omega r) e^{in theta} produces

* a scattered wave a_n R_n H_n(sqrt(q0) omega r) outside the disk,
* a transmitted wave a_n T_n J_n(sqrt(q) omega r) inside it,

where R_n, T_n solve the 2x2 transmission system on r = eps.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

import numpy as np

from . import __version__
from .errors import DegeneracyError, DomainError, PreconditionError
from .quotients import g_values, k_values
from .specfun import N_MAX, cylinder_arrays, j_zeros_below

S_POLE_RADIUS = 1e-8
TRACE_KINDS = ("incident", "scattered", "transmitted", "total", "resonant-mode")
# omitted orders covered by the explicit tail envelope
_TAIL_ORDERS = 80


@dataclass(frozen=True)
class ScatterConfig:
    """Physical setup.  ``lam``, ``oeps`` and ``m_lambda`` are derived.

    Parameters
    ----------
    q0, q : float
        Background and inclusion indices, both positive.
    eps : float
        Inclusion radius.
    omega : float
        Frequency.
    """

    q0: float
    q: float
    eps: float
    omega: float

    def __post_init__(self):
        for name in ("q0", "q", "eps", "omega"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be a positive finite real, got {v!r}")

    @classmethod
    def from_dimensionless(cls, lam: float, oeps: float, eps: float = 1.0, q0: float = 1.0):
        """Build a configuration from contrast and rescaled frequency."""
        if not (lam > 0 and oeps > 0):
            raise DomainError("lambda and oeps must be positive")
        return cls(q0=float(q0), q=float(lam * lam * q0), eps=float(eps),
                   omega=float(oeps / (math.sqrt(q0) * eps)))

    @property
    def lam(self) -> float:
        return math.sqrt(self.q / self.q0)

    @property
    def oeps(self) -> float:
        return math.sqrt(self.q0) * self.omega * self.eps

    @property
    def m_lambda(self) -> float | None:
        """1/(lambda sqrt(ln lambda + 1)) for lambda >= 1, else None."""
        return m_lambda(self.lam) if self.lam >= 1 else None

    def with_oeps(self, oeps: float) -> "ScatterConfig":
        """Same medium and radius at another rescaled frequency."""
        return ScatterConfig(self.q0, self.q, self.eps, oeps / (math.sqrt(self.q0) * self.eps))

    def as_dict(self) -> dict:
        return {"q0": self.q0, "q": self.q, "eps": self.eps, "omega": self.omega,
                "lambda": self.lam, "oeps": self.oeps}


def m_lambda(lam: float) -> float:
    """Threshold 1/(lambda sqrt(ln lambda + 1)) ending the perturbative regime."""
    if lam < 1:
        raise DomainError("m_lambda is defined for lambda >= 1")
    return 1.0 / (lam * math.sqrt(math.log(lam) + 1.0))


@dataclass(frozen=True)
class ModeCoefficients:
    """Fourier coefficients a_n of the incident field.

    Use :meth:`explicit` for a finite list and :meth:`plane_wave` for
    amplitude * exp(i k x.d) with d = (cos phi, sin phi), whose
    coefficients are amplitude * i^n * exp(-i n phi).
    """

    entries: Mapping[int, complex] = field(default_factory=dict)
    generator: str = "explicit"
    direction: float = 0.0
    amplitude: complex = 1.0

    @classmethod
    def explicit(cls, entries: Mapping[int, complex]) -> "ModeCoefficients":
        clean = {int(n): complex(a) for n, a in entries.items() if a != 0}
        return cls(MappingProxyType(dict(sorted(clean.items()))), "explicit")

    @classmethod
    def plane_wave(cls, direction: float = 0.0, amplitude: complex = 1.0) -> "ModeCoefficients":
        return cls(MappingProxyType({}), "plane-wave", float(direction), complex(amplitude))

    @property
    def is_plane_wave(self) -> bool:
        return self.generator == "plane-wave"

    def support(self) -> int | None:
        """Largest |n| with a_n != 0, or None for an infinite sequence."""
        if self.is_plane_wave:
            return None
        return max((abs(n) for n in self.entries), default=0)

    def coefficient(self, n: int) -> complex:
        if self.is_plane_wave:
            return self.amplitude * (1j ** (n % 4)) * np.exp(-1j * n * self.direction)
        return self.entries.get(int(n), 0j)

    def coefficients(self, orders) -> np.ndarray:
        orders = np.asarray(orders, dtype=int)
        if self.is_plane_wave:
            return self.amplitude * (1j ** (orders % 4)) * np.exp(-1j * orders * self.direction)
        return np.array([self.entries.get(int(n), 0j) for n in orders], dtype=complex)

    def scaled(self, t: complex) -> "ModeCoefficients":
        if self.is_plane_wave:
            return ModeCoefficients.plane_wave(self.direction, self.amplitude * t)
        return ModeCoefficients.explicit({n: t * a for n, a in self.entries.items()})


@dataclass(frozen=True)
class CoefficientPair:
    """R_n, T_n and S_n for one order and configuration."""

    order: int
    R: complex
    T: complex
    S: complex


def _x_array(x):
    x = np.asarray(x, dtype=float)
    return x, x.ndim == 0


def _unwrap(out, scalar):
    return complex(out.reshape(-1)[0]) if scalar else out


def _normalized_parts(n, x, lam):
    """g_n(x), g_n(lam x), k_n(x) and tan theta = Y_n(x)/J_n(x)."""
    j, y, _, _ = cylinder_arrays(n, x, strict=False)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        t = y / j
    return g_values(n, x), g_values(n, lam * x), k_values(n, x), t


def reflection_coeff(n: int, x, lam: float):
    """R_n(x, lambda) = -Re D/D with D = A + iB (vectorized in x).

    A = J'_n(x)J_n(lam x) - lam J'_n(lam x)J_n(x) and
    B = Y'_n(x)J_n(lam x) - lam J'_n(lam x)Y_n(x).  Where A or B leave the
    floating-point range the equivalent quotient form is used, which tends
    to 0 as Y_n(x) overflows.
    """
    n = abs(int(n))
    x, scalar = _x_array(x)
    x1 = np.atleast_1d(x)
    j, y, jp, yp = cylinder_arrays(n, x1, strict=False)
    jl, _, jpl, _ = cylinder_arrays(n, lam * x1, strict=False)
    with np.errstate(all="ignore"):
        a = jp * jl - lam * jpl * j
        b = yp * jl - lam * jpl * y
        r = -a / (a + 1j * b)
    bad = ~np.isfinite(r) | (np.abs(jl) < 1e-250)
    if np.any(bad):
        gx, gl, kx, t = _normalized_parts(n, x1[bad], lam)
        with np.errstate(all="ignore"):
            alt = -(gx - gl) / ((gx - gl) - 1j * t * (kx + gl))
        alt = np.where(np.isinf(t), 0.0, alt)
        r[bad] = alt
    if lam == 1.0:
        r = np.zeros_like(r)
    return _unwrap(r.reshape(x.shape) if not scalar else r, scalar)


def transmission_coeff(n: int, x, lam: float):
    """T_n = 2i/(pi x D), the solution of the 2x2 transmission system."""
    n = abs(int(n))
    x, scalar = _x_array(x)
    x1 = np.atleast_1d(x)
    j, y, jp, yp = cylinder_arrays(n, x1, strict=False)
    jl, _, jpl, _ = cylinder_arrays(n, lam * x1, strict=False)
    with np.errstate(all="ignore"):
        d = (jp * jl - lam * jpl * j) + 1j * (yp * jl - lam * jpl * y)
        t = 2j / (np.pi * x1 * d)
    if lam == 1.0:
        t = np.ones_like(t)
    return _unwrap(t.reshape(x.shape) if not scalar else t, scalar)


def _s_pole(n, lam, x1):
    """Mask of points where lam*x lies within S_POLE_RADIUS of some j_{n,k}."""
    top = float(np.max(lam * x1)) * (1 + S_POLE_RADIUS) + 1.0
    js = np.asarray(j_zeros_below(n, top))
    if js.size == 0:
        return np.zeros(x1.shape, dtype=bool)
    d = np.min(np.abs(lam * x1[:, None] - js[None, :]), axis=1)
    return d <= S_POLE_RADIUS


def s_ratio_formula1(n: int, x, lam: float):
    """S_n from the quotient form.

    ((g(lam x) - g(x))(1 + i tan t)) / ((g(lam x) - g(x)) + i tan t (g(lam x) + k(x)))
    with tan t = Y_n(x)/J_n(x).  Finite where Y_n overflows.
    """
    n = abs(int(n))
    x, scalar = _x_array(x)
    x1 = np.atleast_1d(x)
    gx, gl, kx, t = _normalized_parts(n, x1, lam)
    with np.errstate(all="ignore"):
        d = gl - gx
        s = d * (1 + 1j * t) / (d + 1j * t * (gl + kx))
    inf_t = np.isinf(t)
    if np.any(inf_t):
        s[inf_t] = (d / (gl + kx))[inf_t]
    return _unwrap(s.reshape(x.shape) if not scalar else s, scalar)


def s_ratio_formula2(n: int, x, lam: float):
    """S_n = x A H/(x A H + i (2/pi) J_n(lam x)) with A = Re D."""
    n = abs(int(n))
    x, scalar = _x_array(x)
    x1 = np.atleast_1d(x)
    j, y, jp, _ = cylinder_arrays(n, x1, strict=False)
    jl, _, jpl, _ = cylinder_arrays(n, lam * x1, strict=False)
    with np.errstate(all="ignore"):
        u = x1 * (jp * jl - lam * jpl * j) * (j + 1j * y)
        s = u / (u + 1j * (2.0 / np.pi) * jl)
    return _unwrap(s.reshape(x.shape) if not scalar else s, scalar)


def s_ratio_values(n: int, x, lam: float):
    """S_n = -R_n H_n(x)/J_n(x) (vectorized, no degeneracy checks).

    Equal to 1 where lam*x is within 1e-8 of a zero of J_n, the continuous
    limit there.
    """
    n = abs(int(n))
    x, scalar = _x_array(x)
    x1 = np.atleast_1d(x)
    if lam == 1.0:
        s = np.zeros(x1.shape, dtype=complex)
        return _unwrap(s.reshape(x.shape) if not scalar else s, scalar)
    s = np.atleast_1d(s_ratio_formula2(n, x1, lam))
    bad = ~np.isfinite(s) | (np.abs(cylinder_arrays(n, x1, strict=False)[0]) < 1e-250)
    if np.any(bad):
        s[bad] = np.atleast_1d(s_ratio_formula1(n, x1[bad], lam))
    s[_s_pole(n, lam, x1)] = 1.0
    return _unwrap(s.reshape(x.shape) if not scalar else s, scalar)


def s_ratio_coeff(n: int, x: float, lam: float) -> complex:
    """S_n at a single point with degeneracy checks.

    Raises
    ------
    DegeneracyError
        If J_n(x) vanishes (x within 1e-10 of a zero j_{n,k}) while lam*x is
        not at a zero of J_n.
    """
    n = abs(int(n))
    x1 = np.atleast_1d(float(x))
    if lam != 1.0 and not _s_pole(n, lam, x1)[0]:
        j, _, jp, _ = cylinder_arrays(n, x1, strict=False)
        if x1[0] >= n and abs(j[0]) <= 1e-10 * x1[0] * abs(jp[0]):
            raise DegeneracyError(f"J_{n}({x!r}) vanishes; S_{n} = -R H/J is undefined there")
    return complex(np.atleast_1d(s_ratio_values(n, x1, lam))[0])


def reflection(n: int, config: ScatterConfig) -> complex:
    """R_n at the configuration's (oeps, lambda)."""
    return reflection_coeff(n, config.oeps, config.lam)


def transmission(n: int, config: ScatterConfig) -> complex:
    """T_n at the configuration's (oeps, lambda)."""
    return transmission_coeff(n, config.oeps, config.lam)


def s_ratio(n: int, config: ScatterConfig) -> complex:
    """S_n = -R_n H_n(oeps)/J_n(oeps); see :func:`s_ratio_coeff`."""
    return s_ratio_coeff(n, config.oeps, config.lam)


def coefficients(n: int, config: ScatterConfig) -> CoefficientPair:
    """All three coefficients for one order."""
    try:
        s = s_ratio(n, config)
    except DegeneracyError:
        s = complex("nan")
    return CoefficientPair(int(n), reflection(n, config), transmission(n, config), s)


# ----------------------------------------------------------------------- traces


@dataclass(frozen=True)
class FieldTrace:
    """Complex Fourier coefficients c_n of a field on the circle |x| = radius.

    ``tail_envelope[i]`` bounds |c_n| and |c_-n| for n = truncation + 1 + i;
    :meth:`tail` turns it into a bound on the weighted l2 norm of all
    omitted coefficients.  ``tail_bound`` is that bound for weight 1.
    """

    kind: str
    radius: float
    orders: np.ndarray
    coeffs: np.ndarray
    config: ScatterConfig | None = None
    truncation: int = 0
    tail_bound: float = 0.0
    tail_envelope: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in TRACE_KINDS:
            raise DomainError(f"unknown trace kind {self.kind!r}")
        orders = np.asarray(self.orders, dtype=int)
        coeffs = np.asarray(self.coeffs, dtype=complex)
        if orders.shape != coeffs.shape:
            raise DomainError("orders and coefficients differ in length")
        orders.setflags(write=False)
        coeffs.setflags(write=False)
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "coeffs", coeffs)
        if self.tail_envelope is not None:
            env = np.asarray(self.tail_envelope, dtype=float)
            env.setflags(write=False)
            object.__setattr__(self, "tail_envelope", env)
            object.__setattr__(self, "tail_bound", self.tail(0.0))

    def tail(self, sigma: float) -> float:
        """Bound on sqrt(sum over omitted n of |c_n|^2 (1+|n|)^(2 sigma)).

        Past the last tabulated order the envelope decays faster than any
        geometric sequence, so the last weighted term is doubled to cover the
        rest; an envelope that does not decay gives ``inf``.
        """
        env = self.tail_envelope
        if env is None or env.size == 0:
            return self.tail_bound if sigma == 0 else (0.0 if self.tail_bound == 0 else math.inf)
        orders = self.truncation + 1 + np.arange(env.size)
        terms = (env * (1.0 + orders) ** sigma) ** 2
        if terms[-1] > 1e-3 * max(terms[0], 1e-300) and terms[-1] > 0:
            return math.inf
        return float(math.sqrt(2.0 * (np.sum(terms) + terms[-1])))

    @classmethod
    def from_mapping(cls, coeffs: Mapping[int, complex], kind: str = "incident",
                     radius: float = 1.0) -> "FieldTrace":
        items = sorted(coeffs.items())
        return cls(kind, float(radius), [n for n, _ in items], [c for _, c in items],
                   truncation=max((abs(n) for n, _ in items), default=0))

    def as_dict(self) -> dict[int, complex]:
        return {int(n): complex(c) for n, c in zip(self.orders, self.coeffs)}

    def coefficient(self, n: int) -> complex:
        hit = np.flatnonzero(self.orders == n)
        return complex(self.coeffs[hit[0]]) if hit.size else 0j

    def to_csv(self, path) -> None:
        """Write (n, re_c, im_c) rows below a provenance header."""
        with open(path, "w", newline="") as fh:
            _write_trace(fh, self)

    @classmethod
    def from_csv(cls, path) -> "FieldTrace":
        meta: dict[str, str] = {}
        orders, coeffs = [], []
        with open(path, newline="") as fh:
            for row in csv.reader(fh):
                if not row:
                    continue
                if row[0].startswith("#"):
                    key, _, val = row[0][1:].strip().partition("=")
                    meta[key.strip()] = val.strip()
                    continue
                if row[0] == "n":
                    continue
                orders.append(int(row[0]))
                coeffs.append(complex(float(row[1]), float(row[2])))
        config = None
        if all(k in meta for k in ("q0", "q", "eps", "omega")):
            config = ScatterConfig(float(meta["q0"]), float(meta["q"]),
                                   float(meta["eps"]), float(meta["omega"]))
        return cls(meta.get("kind", "incident"), float(meta.get("R", "nan")), orders, coeffs,
                   config, int(meta.get("truncation", "0")), float(meta.get("tail_bound", "0")))


def fmt17(v: float) -> str:
    """Locale-independent repr with 17 significant digits."""
    return format(float(v), ".17g")


def _write_trace(fh, tr: FieldTrace) -> None:
    w = csv.writer(fh, lineterminator="\n")
    header = {"library": f"diskscatter {__version__}", "kind": tr.kind, "R": fmt17(tr.radius)}
    if tr.config is not None:
        for key in ("q0", "q", "eps", "omega"):
            header[key] = fmt17(getattr(tr.config, key))
    header["truncation"] = str(tr.truncation)
    header["tail_bound"] = fmt17(tr.tail_bound)
    for key, val in header.items():
        w.writerow([f"# {key} = {val}"])
    w.writerow(["n", "re_c", "im_c"])
    for n, c in zip(tr.orders, tr.coeffs):
        w.writerow([int(n), fmt17(c.real), fmt17(c.imag)])


def default_truncation(config: ScatterConfig, radius: float, modes: ModeCoefficients) -> int:
    """Order cutoff past the turning point of every Bessel factor in the trace."""
    arg = max(math.sqrt(config.q), math.sqrt(config.q0)) * config.omega * max(radius, config.eps)
    cut = math.ceil(arg) + 12 + 2 * math.ceil(arg ** (1.0 / 3.0))
    support = modes.support()
    return max(cut, support or 0)


def _radial_factor(kind, n, config, radius):
    """Per-order radial multiplier of a_n (vectorized over orders)."""
    x, lam = config.oeps, config.lam
    rho = radius / config.eps
    out = np.zeros(n.shape, dtype=complex)
    for i, m in enumerate(np.abs(n)):
        if kind == "incident":
            out[i] = _bessel_j(m, x * rho) if radius > 0 else float(m == 0)
        elif kind == "scattered":
            out[i] = _scattered_factor(m, x, lam, rho)
        elif kind == "transmitted":
            out[i] = _transmitted_factor(m, x, lam, rho)
        else:  # total exterior
            out[i] = _bessel_j(m, x * rho) + _scattered_factor(m, x, lam, rho)
    return out


def _bessel_j(m, z):
    if z <= 0:
        return float(m == 0)
    return float(cylinder_arrays(m, np.array([z]), strict=False)[0][0])


def _scattered_factor(m, x, lam, rho):
    if lam == 1.0:
        return 0j
    r = reflection_coeff(m, x, lam)
    if r == 0:
        return 0j
    j, y, _, _ = cylinder_arrays(m, np.array([x * rho]), strict=False)
    with np.errstate(all="ignore"):
        v = r * (j[0] + 1j * y[0])
    # Y overflow only happens where R H is far below J, i.e. negligible
    return v if np.isfinite(v) else 0j


def _transmitted_factor(m, x, lam, rho):
    if rho <= 0:
        return complex(transmission_coeff(m, x, lam)) if m == 0 else 0j
    t = transmission_coeff(m, x, lam)
    with np.errstate(all="ignore"):
        v = t * _bessel_j(m, lam * x * rho)
    return v if np.isfinite(v) else 0j


_TAIL_FACTOR = {"incident": 1.0, "scattered": 2.5, "transmitted": 3.5, "total": 3.5}


def _tail_envelope(kind, config, modes, radius, cut):
    """Bounds on |c_n| for the first omitted orders n > cut.

    Beyond the turning point |S_n| <= 5/2 and |H_n| decreases, so scattered,
    transmitted and total coefficients are at most 5/2, 7/2 and 7/2 times
    |a_n| J_n at the larger of the two arguments.
    """
    if not modes.is_plane_wave:
        return None
    if kind == "incident":
        z = math.sqrt(config.q0) * config.omega * radius
    else:
        z = math.sqrt(config.q0) * config.omega * max(radius, config.eps)
    orders = np.arange(cut + 1, min(cut + _TAIL_ORDERS, N_MAX) + 1)
    if z <= 0:
        return np.zeros(orders.size)
    vals = np.array([abs(_bessel_j(int(m), z)) for m in orders])
    return _TAIL_FACTOR[kind] * abs(modes.amplitude) * vals


def field_trace(kind: str, config: ScatterConfig, modes: ModeCoefficients, radius: float,
                truncation: int | None = None) -> FieldTrace:
    """Fourier trace of a field on the circle of the given radius.

    Parameters
    ----------
    kind : {'incident', 'scattered', 'transmitted', 'total'}
        'total' is incident plus scattered and lives outside the disk.
    config : ScatterConfig
    modes : ModeCoefficients
    radius : float
        Circle radius; at least eps for exterior kinds and at most eps for
        the transmitted field.
    truncation : int, optional
        Largest |n| kept.  Defaults to :func:`default_truncation`.

    Raises
    ------
    DomainError
        Radius on the wrong side of eps, or truncation below the support.
    """
    if kind not in ("incident", "scattered", "transmitted", "total"):
        raise DomainError(f"unsupported trace kind {kind!r}")
    if radius < 0:
        raise DomainError("radius must be non-negative")
    if kind in ("scattered", "total") and radius < config.eps:
        raise DomainError(f"{kind} trace needs radius >= eps")
    if kind == "transmitted" and radius > config.eps:
        raise DomainError("transmitted trace needs radius <= eps")
    support = modes.support()
    if truncation is None:
        truncation = default_truncation(config, radius, modes)
    if support is not None and truncation < support:
        raise DomainError(f"truncation {truncation} below the mode support {support}")
    if truncation > N_MAX:
        raise DomainError(f"truncation {truncation} exceeds the supported order {N_MAX}")
    if modes.is_plane_wave:
        orders = np.arange(-truncation, truncation + 1)
    else:
        orders = np.array([n for n in modes.entries if abs(n) <= truncation], dtype=int)
    a = modes.coefficients(orders)
    c = a * _radial_factor(kind, orders, config, radius)
    env = _tail_envelope(kind, config, modes, radius, truncation)
    return FieldTrace(kind, float(radius), orders, c, config, int(truncation), 0.0, env)


def resonant_profile(n: int, config: ScatterConfig, rho):
    """Radial profile of the quasi-resonant solution at r = rho * eps.

    (Y_n(x)/J_n(lam x)) J_n(lam x rho) for rho <= 1 and Y_n(x rho) outside.
    """
    n = abs(int(n))
    x, lam = config.oeps, config.lam
    rho = np.atleast_1d(np.asarray(rho, dtype=float))
    _, yx, _, _ = cylinder_arrays(n, np.array([x]))
    jl = cylinder_arrays(n, np.array([lam * x]))[0][0]
    out = np.empty(rho.shape)
    inside = rho <= 1.0
    if np.any(inside):
        ri = rho[inside]
        vals = np.zeros(ri.shape)
        pos = ri > 0
        if np.any(pos):
            vals[pos] = cylinder_arrays(n, lam * x * ri[pos], strict=False)[0]
        vals[~pos] = float(n == 0)
        out[inside] = yx[0] / jl * vals
    if np.any(~inside):
        out[~inside] = cylinder_arrays(n, x * rho[~inside], strict=False)[1]
    return out


def resonance_residual(n: int, config: ScatterConfig) -> float:
    """|R_n + 1| at the configuration."""
    return abs(reflection(n, config) + 1.0)


def resonant_mode(n: int, config: ScatterConfig, radius: float, tol: float = 1e-8) -> FieldTrace:
    """Single-mode trace of the quasi-resonant solution at the given radius.

    Raises
    ------
    PreconditionError
        If |R_n + 1| exceeds ``tol`` at the configuration.
    """
    res = resonance_residual(n, config)
    if not res <= tol:
        raise PreconditionError(
            f"(n={n}, oeps={config.oeps:.17g}, lambda={config.lam:.17g}) is not quasi-resonant "
            f"(|R+1| = {res:.3e} > {tol:g})")
    val = resonant_profile(n, config, radius / config.eps)[0]
    return FieldTrace("resonant-mode", float(radius), [int(n)], [complex(val)], config, abs(int(n)), 0.0)


__all__ = [
    "CoefficientPair",
    "FieldTrace",
    "ModeCoefficients",
    "ScatterConfig",
    "TRACE_KINDS",
    "coefficients",
    "default_truncation",
    "field_trace",
    "fmt17",
    "m_lambda",
    "reflection",
    "reflection_coeff",
    "resonance_residual",
    "resonant_mode",
    "resonant_profile",
    "s_ratio",
    "s_ratio_coeff",
    "s_ratio_formula1",
    "s_ratio_formula2",
    "s_ratio_values",
    "transmission",
    "transmission_coeff",
]
