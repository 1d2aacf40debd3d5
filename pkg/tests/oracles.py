"""Independent reference implementations used by the tests.

Everything here is written directly from power series in mpmath and
shares no code with the package.
"""

from __future__ import annotations

import mpmath

DPS = 50
TERMS = 200


def j_series(n: int, x) -> mpmath.mpf:
    """J_n(x) from the ascending series."""
    with mpmath.workdps(DPS):
        x = mpmath.mpf(x)
        h = x / 2
        term = h ** n / mpmath.factorial(n)
        total = term
        for k in range(1, TERMS):
            term *= -h * h / (k * (n + k))
            total += term
        return +total


def y_series(n: int, x) -> mpmath.mpf:
    """Y_n(x) for integer n >= 0 from the logarithmic series."""
    with mpmath.workdps(DPS):
        x = mpmath.mpf(x)
        h = x / 2
        out = 2 / mpmath.pi * j_series(n, x) * mpmath.log(h)
        finite = mpmath.mpf(0)
        for k in range(n):
            finite += mpmath.factorial(n - k - 1) / mpmath.factorial(k) * h ** (2 * k - n)
        out -= finite / mpmath.pi
        s = mpmath.mpf(0)
        term = h ** n / mpmath.factorial(n)
        for k in range(TERMS):
            if k:
                term *= -h * h / (k * (n + k))
            s += (mpmath.digamma(k + 1) + mpmath.digamma(n + k + 1)) * term
        out -= s / mpmath.pi
        return +out


def jp_series(n: int, x) -> mpmath.mpf:
    """J'_n(x) = (J_{n-1} - J_{n+1})/2, with J'_0 = -J_1."""
    if n == 0:
        return -j_series(1, x)
    return (j_series(n - 1, x) - j_series(n + 1, x)) / 2


def yp_series(n: int, x) -> mpmath.mpf:
    if n == 0:
        return -y_series(1, x)
    return (y_series(n - 1, x) - y_series(n + 1, x)) / 2


def bisect(f, a: float, b: float) -> float:
    """Plain bisection on a sign change of f in [a, b], down to adjacent doubles."""
    fa = f(a)
    assert fa * f(b) < 0
    while True:
        m = 0.5 * (a + b)
        if m in (a, b):
            break
        fm = f(m)
        if fm == 0:
            return m
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def reflection_mp(n: int, x, lam) -> mpmath.mpc:
    """R_n = -A/(A + iB) with A = J'J(lam x) - lam J'(lam x) J and B the Y analogue."""
    with mpmath.workdps(DPS):
        x, lam = mpmath.mpf(x), mpmath.mpf(lam)
        jl, jpl = j_series(n, lam * x), jp_series(n, lam * x)
        a = jp_series(n, x) * jl - lam * jpl * j_series(n, x)
        b = yp_series(n, x) * jl - lam * jpl * y_series(n, x)
        return -a / (a + 1j * b)
