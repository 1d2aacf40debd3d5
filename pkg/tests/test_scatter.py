import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diskscatter.errors import DegeneracyError, DomainError, PreconditionError
from diskscatter.resonance import find_quasi_resonances
from diskscatter.scatter import (FieldTrace, ModeCoefficients, ScatterConfig, coefficients,
                                 field_trace, m_lambda, reflection, reflection_coeff,
                                 resonant_mode, s_ratio, s_ratio_coeff, s_ratio_formula1,
                                 s_ratio_formula2, transmission, transmission_coeff)
from diskscatter.specfun import cylinder_arrays, eval_cylinder, sup_abs_jn, zeros

from oracles import reflection_mp


def cfg(lam, oeps, eps=1.0):
    return ScatterConfig.from_dimensionless(lam, oeps, eps=eps)


def values(n, x):
    v = eval_cylinder(n, x)
    return v.j, v.y, v.jp, v.yp


# ------------------------------------------------------------ config


def test_config_derived_quantities():
    c = ScatterConfig(q0=4.0, q=16.0, eps=0.5, omega=3.0)
    assert c.lam == 2.0
    assert c.oeps == pytest.approx(3.0)
    assert c.m_lambda == pytest.approx(1 / (2 * math.sqrt(math.log(2) + 1)))
    assert ScatterConfig(1.0, 0.25, 1.0, 1.0).m_lambda is None
    assert c.with_oeps(1.5).omega == pytest.approx(1.5)


@pytest.mark.parametrize("kw", [dict(q0=0.0), dict(q=-1.0), dict(eps=math.inf),
                                dict(omega=math.nan)])
def test_config_rejects_bad_values(kw):
    base = dict(q0=1.0, q=2.0, eps=1.0, omega=1.0)
    base.update(kw)
    with pytest.raises(DomainError):
        ScatterConfig(**base)


def test_m_lambda_domain():
    assert m_lambda(1.0) == 1.0
    with pytest.raises(DomainError):
        m_lambda(0.5)


# ------------------------------------------------------- R, T and S


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 60), st.floats(0.01, 100.0))
def test_no_contrast(n, x):
    c = cfg(1.0, x)
    assert reflection(n, c) == 0
    assert transmission(n, c) == 1
    assert s_ratio_coeff(n, x, 1.0) == 0


def test_reflection_oracle():
    r = complex(reflection_coeff(2, 0.7, 0.5))
    ref = complex(reflection_mp(2, 0.7, 0.5))
    assert abs(r - ref) <= 1e-12 * abs(ref)


@pytest.mark.parametrize("n,x,lam", [(0, 0.3, 2.0), (3, 5.0, 0.4), (12, 9.0, 3.0),
                                     (30, 12.0, 2.0)])
def test_reflection_against_mpmath(n, x, lam):
    ref = complex(reflection_mp(n, x, lam))
    assert abs(complex(reflection_coeff(n, x, lam)) - ref) <= 1e-9 * max(abs(ref), 1e-3)


def test_refined_resonance_is_minus_one():
    rec = find_quasi_resonances(30, 2.0)[0]
    with mpmath.workdps(60):
        r = reflection_mp(30, mpmath.mpf(rec.location) + rec.correction, 2)
    assert abs(r + 1) <= 1e-8


@pytest.mark.xfail(strict=True, reason="8 digits of omega_{30,1} leave |R+1| near 0.9: "
                                       "R moves by O(|Y/J|) per unit of x there")
def test_quoted_resonance_digits():
    assert abs(reflection(30, cfg(2.0, 17.4211682)) + 1) <= 1e-6


def test_transmission_system_residuals():
    for n, x, lam in ((0, 0.3, 2.0), (4, 2.0, 0.6), (10, 8.0, 3.0), (2, 40.0, 1.5)):
        r = complex(reflection_coeff(n, x, lam))
        t = complex(transmission_coeff(n, x, lam))
        j, y, jp, yp = values(n, x)
        jl, _, jpl, _ = values(n, lam * x)
        h, hp = complex(j, y), complex(jp, yp)
        e1 = abs(t * jl - (j + r * h)) / max(abs(j + r * h), abs(t * jl))
        e2 = abs(lam * t * jpl - (jp + r * hp)) / max(abs(jp + r * hp), abs(lam * t * jpl))
        assert e1 <= 1e-10 and e2 <= 1e-10


def test_transmission_at_resonance_matches_mode_amplitude():
    rec = find_quasi_resonances(30, 2.0)[0]
    with mpmath.workdps(60):
        x = mpmath.mpf(rec.location) + rec.correction
        ratio = abs(mpmath.bessely(30, x) / mpmath.besselj(30, 2 * x))
        j, y = mpmath.besselj(30, x), mpmath.bessely(30, x)
        a = (mpmath.besselj(30, x, 1) * mpmath.besselj(30, 2 * x)
             - 2 * mpmath.besselj(30, 2 * x, 1) * j)
        b = (mpmath.bessely(30, x, 1) * mpmath.besselj(30, 2 * x)
             - 2 * mpmath.besselj(30, 2 * x, 1) * y)
        t = 2j / (mpmath.pi * x * (a + 1j * b))
    # at R = -1 the matching gives T J_n(lam x) = -i Y_n(x)
    assert float(abs(t)) == pytest.approx(float(ratio), rel=1e-12)
    # the float implementation agrees where |R+1| is small in double precision
    assert abs(transmission_coeff(30, float(x), 2.0)) == pytest.approx(float(ratio), rel=1e-6)


def test_s_ratio_limits():
    assert s_ratio_coeff(3, 1.7, 1.0) == 0
    j1 = zeros(2, 1).j(1)
    assert s_ratio_coeff(2, j1 / 3.0, 3.0) == 1


def test_s_ratio_two_formulas():
    s1 = complex(s_ratio_formula1(4, 2.0, 0.6))
    s2 = complex(s_ratio_formula2(4, 2.0, 0.6))
    assert abs(s1 - s2) <= 1e-10 * abs(s1)


def test_s_ratio_definition():
    n, x, lam = 5, 3.3, 2.5
    j, y, _, _ = values(n, x)
    ref = -complex(reflection_coeff(n, x, lam)) * complex(j, y) / j
    assert abs(s_ratio(n, cfg(lam, x)) - ref) <= 1e-12 * abs(ref)


def test_s_ratio_degeneracy():
    j1 = zeros(3, 1).j(1)
    with pytest.raises(DegeneracyError):
        s_ratio_coeff(3, j1, 1.7)
    assert math.isnan(coefficients(3, cfg(1.7, j1)).S.real)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 60), st.floats(0.05, 1.0), st.floats(0.01, 50.0))
def test_dual_formulas_agree(n, frac, lam):
    x = frac * 0.999 * zeros(n, 1).y1
    s1 = complex(s_ratio_formula1(n, x, lam))
    s2 = complex(s_ratio_formula2(n, x, lam))
    if not (np.isfinite(s1) and np.isfinite(s2)):
        return
    assert abs(s1 - s2) <= 1e-7 * max(abs(s1), 1e-12)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 100), st.floats(0.01, 100.0), st.floats(1e-3, 200.0))
def test_reflection_bounded(n, lam, x):
    r = complex(reflection_coeff(n, x, lam))
    assert abs(r) <= 1 + 1e-12


def test_reflection_bounded_vectorized(rng):
    n = rng.integers(0, 101, 200)
    lam = np.exp(rng.uniform(math.log(0.01), math.log(100.0), 200))
    for m, l in zip(n, lam):
        xs = rng.uniform(1e-3, 200.0, 500)
        assert np.max(np.abs(reflection_coeff(int(m), xs, float(l)))) <= 1 + 1e-12


def test_even_in_order():
    c = cfg(1.8, 4.2)
    for n in (1, 2, 7):
        assert reflection(-n, c) == reflection(n, c)
        assert transmission(-n, c) == transmission(n, c)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 80), st.floats(1.0, 20.0))
def test_hankel_bound_beyond_first_y_zero(n, f):
    x = zeros(n, 1).y1 * f
    j, y, _, _ = cylinder_arrays(n, np.array([x]))
    assert math.hypot(j[0], y[0]) <= 7 / 5 * sup_abs_jn(n)


# -------------------------------------------------------------- traces


def test_scattered_trace_vanishes_without_contrast():
    tr = field_trace("scattered", cfg(1.0, 3.0), ModeCoefficients.plane_wave(), 1.0)
    assert np.all(tr.coeffs == 0)


def test_plane_wave_incident_moduli():
    c = cfg(2.0, 3.0)
    tr = field_trace("incident", c, ModeCoefficients.plane_wave(0.7, 2.0), c.eps)
    for n, cn in zip(tr.orders, tr.coeffs):
        assert abs(cn) == pytest.approx(2.0 * abs(eval_cylinder(abs(int(n)), 3.0).j), rel=1e-14)


def test_plane_wave_coefficients_unit_phase():
    m = ModeCoefficients.plane_wave(1.1, 1.0)
    a = m.coefficients(np.arange(-5, 6))
    assert np.allclose(np.abs(a), 1.0)
    # Jacobi-Anger: sum a_n J_n(r) e^{i n t} = exp(i r cos(t - phi))
    r, t = 1.3, 0.4
    s = sum(m.coefficient(n) * eval_cylinder(abs(n), r).j * (-1) ** (n if n < 0 else 0)
            * np.exp(1j * n * t) for n in range(-30, 31))
    assert abs(s - np.exp(1j * r * math.cos(t - 1.1))) < 1e-13


def test_total_matches_transmitted_at_boundary():
    c = cfg(2.5, 4.0)
    modes = ModeCoefficients.plane_wave(0.3)
    tot = field_trace("total", c, modes, c.eps)
    tra = field_trace("transmitted", c, modes, c.eps, truncation=tot.truncation)
    assert np.array_equal(tot.orders, tra.orders)
    assert np.max(np.abs(tot.coeffs - tra.coeffs)) <= 1e-9 * np.max(np.abs(tot.coeffs))


@pytest.mark.parametrize("kind,radius", [("scattered", 0.5), ("total", 0.9),
                                         ("transmitted", 1.5), ("resonant-mode", 1.0)])
def test_trace_radius_domain(kind, radius):
    with pytest.raises(DomainError):
        field_trace(kind, cfg(2.0, 1.0), ModeCoefficients.explicit({1: 1}), radius)


def test_truncation_below_support():
    with pytest.raises(DomainError):
        field_trace("incident", cfg(2.0, 1.0), ModeCoefficients.explicit({5: 1}), 1.0,
                    truncation=3)


def test_explicit_modes_coefficients():
    c = cfg(0.5, 0.8)
    modes = ModeCoefficients.explicit({0: 1, -2: 1j, 3: 0})
    assert modes.support() == 2
    tr = field_trace("scattered", c, modes, 2.0)
    assert sorted(tr.as_dict()) == [-2, 0]
    ref = 1j * complex(reflection_coeff(2, 0.8, 0.5)) * eval_cylinder(2, 1.6).h
    assert tr.coefficient(-2) == pytest.approx(ref, rel=1e-14)
    assert tr.coefficient(7) == 0


def test_plane_wave_tail_bound_is_small():
    c = cfg(2.0, 5.0)
    tr = field_trace("scattered", c, ModeCoefficients.plane_wave(), 1.0)
    assert 0 < tr.tail_bound < 1e-8


def test_trace_csv_roundtrip(tmp_path):
    c = cfg(2.0, 1.5, eps=0.5)
    tr = field_trace("total", c, ModeCoefficients.explicit({1: 1 + 2j, -3: 0.5}), 0.75)
    path = tmp_path / "trace.csv"
    tr.to_csv(path)
    back = FieldTrace.from_csv(path)
    assert back.kind == "total" and back.radius == 0.75
    assert np.array_equal(back.coeffs, tr.coeffs)
    assert back.config == c
    text = path.read_text()
    assert text.startswith("# library = diskscatter")
    assert "n,re_c,im_c" in text


def test_trace_is_immutable():
    tr = FieldTrace.from_mapping({0: 1.0, 2: 1j})
    with pytest.raises(ValueError):
        tr.coeffs[0] = 5


# ------------------------------------------------------------ resonant mode


def test_resonant_mode_continuity_and_amplitude():
    rec = find_quasi_resonances(30, 2.0)[0]
    c = cfg(2.0, rec.location)
    inner = resonant_mode(30, c, c.eps * (1 - 1e-12), tol=1.0)
    outer = resonant_mode(30, c, c.eps * (1 + 1e-12), tol=1.0)
    assert inner.coefficient(30) == pytest.approx(outer.coefficient(30), rel=1e-9)
    amp = abs(resonant_mode(30, c, c.eps, tol=1.0).coefficient(30))
    y = abs(eval_cylinder(30, rec.location).y)
    assert amp == pytest.approx(y, rel=1e-14)
    # amplitude ratio over the incident J_30 is large
    assert amp / abs(eval_cylinder(30, rec.location).j) > 1e4


def test_last_resonance_profile_is_moderate():
    rec = find_quasi_resonances(30, 2.0)[-1]
    c = cfg(2.0, rec.location)
    # default tolerance: this branch is quasi-resonant in double precision
    vals = [abs(resonant_mode(30, c, r).coefficient(30)) for r in np.linspace(0.05, 3.0, 60)]
    # no interior blow-up: the profile stays within a small factor of sup|J_30|
    assert max(vals) <= 2 * sup_abs_jn(30)


def test_resonant_mode_precondition():
    with pytest.raises(PreconditionError):
        resonant_mode(30, cfg(2.0, 20.0), 1.0)
