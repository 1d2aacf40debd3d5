"""Command-line front end.

Exit codes: 0 success, 1 numeric failure or bound violation, 2 usage error.
Settings are taken from flags, then from a ``key = value`` config file
(``--config``), then from built-in defaults; ``--show-config`` prints the
resolved values of a subcommand without running it.
"""

from __future__ import annotations

import contextlib
import csv
import json
import math
import sys

import click
import numpy as np

from . import __version__
from .errors import (DiskScatterError, DomainError, HypothesisError, ParameterError,
                     PreconditionError)
from .norms import h_sigma, h_sigma_star, n_bold, n_script
from .quotients import g_values, k_values
from .resonance import (ExclusionSet, broadband_set, eta_max, eta_zero, exclusion_intervals,
                        find_quasi_resonances, measure_bound, tail_measure_bound, _merged_length,
                        write_exclusions,
                        write_resonances)
from .scatter import (ModeCoefficients, ScatterConfig, field_trace, fmt17, reflection_coeff,
                      transmission_coeff, _write_trace)
from .specfun import cylinder_arrays, zeros

USAGE_ERRORS = (DomainError, ParameterError, PreconditionError, HypothesisError)


# ------------------------------------------------------------------ config


def _read_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, val = line.partition("=")
            if not sep:
                raise click.UsageError(f"{path}:{lineno}: expected 'key = value'")
            key = key.strip().lstrip("-").replace("-", "_")
            out["lam" if key == "lambda" else key] = val.strip()
    return out


def _default_map(group: click.Group, values: dict[str, str]) -> dict:
    known = {p.name for cmd in group.commands.values() for p in cmd.params}
    unknown = sorted(set(values) - known)
    if unknown:
        raise click.UsageError(f"unknown config keys: {', '.join(unknown)}")
    return {name: {k: v for k, v in values.items() if k in {p.name for p in cmd.params}}
            for name, cmd in group.commands.items()}


_SOURCES = {"COMMANDLINE": "flag", "DEFAULT_MAP": "config", "DEFAULT": "default",
            "ENVIRONMENT": "environment", "PROMPT": "prompt"}


def _show_config(ctx: click.Context) -> None:
    click.echo(f"# diskscatter {__version__} {ctx.info_name}")
    for p in ctx.command.params:
        if p.name == "show_config":
            continue
        src = ctx.get_parameter_source(p.name)
        val = ctx.params.get(p.name)
        origin = _SOURCES.get(src.name if src else "DEFAULT", "default")
        click.echo(f"{p.name} = {_fmt_value(val)}  # {origin}")
    ctx.exit(0)


def _fmt_value(v) -> str:
    if isinstance(v, float):
        return fmt17(v)
    if isinstance(v, tuple):
        return " ".join(_fmt_value(x) for x in v) if v else ""
    return "" if v is None else str(v)


# ---------------------------------------------------------- shared options


def physical_options(f):
    opts = [
        click.option("--q0", type=float, default=1.0, show_default=True,
                     help="Exterior index q0."),
        click.option("--q", type=float, default=None, help="Interior index q."),
        click.option("--lambda", "lam", type=float, default=None,
                     help="Contrast sqrt(q/q0); excludes --q."),
        click.option("--eps", type=float, default=1.0, show_default=True, help="Disk radius."),
        click.option("--omega", type=float, default=None, help="Frequency omega."),
        click.option("--oeps", type=float, default=None,
                     help="Rescaled frequency sqrt(q0) omega eps; excludes --omega."),
        click.option("--sigma", type=float, default=0.0, show_default=True,
                     help="Sobolev index."),
        click.option("--truncation", type=int, default=None, help="Largest |n| kept."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return output_options(f)


def output_options(f):
    opts = [
        click.option("--out", type=click.Path(dir_okay=False, writable=True), default="-",
                     show_default=True, help="Output file ('-' for stdout)."),
        click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
                     show_default=True),
        click.option("--seed", type=int, default=0, show_default=True, help="Random seed."),
        click.option("--show-config", is_flag=True, help="Print resolved settings and exit."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


def mode_options(f):
    opts = [
        click.option("--mode", "mode_specs", multiple=True, metavar="N:RE[:IM]",
                     help="Incident coefficient a_N (repeatable)."),
        click.option("--plane-wave", is_flag=True, help="Plane-wave incident field (default)."),
        click.option("--direction", type=float, default=0.0, show_default=True,
                     help="Plane-wave direction angle."),
        click.option("--amplitude", type=float, default=1.0, show_default=True,
                     help="Plane-wave amplitude."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


def _contrast(q0, q, lam) -> float | None:
    if q is not None and lam is not None:
        raise click.UsageError("--lambda and --q are mutually exclusive")
    if q0 is None or not q0 > 0:
        raise click.UsageError("--q0 must be positive")
    if q is not None:
        if not q > 0:
            raise click.UsageError("--q must be positive")
        return math.sqrt(q / q0)
    return lam


def _config(q0, q, lam, eps, omega, oeps, need_freq: bool = True) -> ScatterConfig:
    lam = _contrast(q0, q, lam)
    if lam is None:
        raise click.UsageError("give the contrast with --lambda or --q")
    if not lam > 0:
        raise click.UsageError("the contrast must be positive")
    if not eps > 0:
        raise click.UsageError("--eps must be positive")
    if omega is not None and oeps is not None:
        raise click.UsageError("--omega and --oeps are mutually exclusive")
    if omega is None and oeps is None:
        if need_freq:
            raise click.UsageError("give the frequency with --omega or --oeps")
        oeps = 1.0
    if oeps is None:
        oeps = math.sqrt(q0) * omega * eps
    if not oeps > 0:
        raise click.UsageError("the frequency must be positive")
    return ScatterConfig(q0, lam * lam * q0, eps, oeps / (math.sqrt(q0) * eps))


def _modes(mode_specs, plane_wave, direction, amplitude) -> ModeCoefficients:
    if mode_specs and plane_wave:
        raise click.UsageError("--mode and --plane-wave are mutually exclusive")
    if not mode_specs:
        return ModeCoefficients.plane_wave(direction, amplitude)
    entries: dict[int, complex] = {}
    for spec in mode_specs:
        parts = spec.split(":")
        try:
            n = int(parts[0])
            re_ = float(parts[1]) if len(parts) > 1 else 1.0
            im_ = float(parts[2]) if len(parts) > 2 else 0.0
        except (ValueError, IndexError):
            raise click.UsageError(f"bad --mode {spec!r}; expected N:RE[:IM]") from None
        if len(parts) > 3:
            raise click.UsageError(f"bad --mode {spec!r}; expected N:RE[:IM]")
        entries[n] = entries.get(n, 0j) + complex(re_, im_)
    return ModeCoefficients.explicit(entries)


def _radius(text: str, eps: float) -> float:
    """A radius given as a number or as a multiple of eps ('eps', '2eps', '2*eps')."""
    t = text.strip().lower().replace("*", "")
    try:
        if t.endswith("eps"):
            head = t[:-3]
            return (float(head) if head else 1.0) * eps
        return float(t)
    except ValueError:
        raise click.UsageError(f"bad radius {text!r}") from None


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _header_rows(w, items: dict) -> None:
    w.writerow([f"# library = diskscatter {__version__}"])
    for key, val in items.items():
        w.writerow([f"# {key} = {_fmt_value(val)}"])


def _run(fn):
    """Map library errors onto the exit-code contract."""
    try:
        return fn()
    except USAGE_ERRORS as exc:
        raise click.UsageError(str(exc)) from None
    except DiskScatterError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(1)


# ------------------------------------------------------------------- group


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (ArithmeticError, FloatingPointError) as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(1)


@click.group(cls=_Group)
@click.version_option(__version__, prog_name="diskscatter")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="key = value settings file (flags take precedence).")
@click.pass_context
def main(ctx: click.Context, config_path: str | None) -> None:
    """Scattering by a small disk inclusion: fields, quasi-resonances, exclusion sets and
    numerical verification of the scattering estimates."""
    if config_path:
        ctx.default_map = _default_map(main, _read_config(config_path))


# ------------------------------------------------------------------- field


@main.command()
@click.option("--kind", type=click.Choice(["incident", "scattered", "transmitted", "total"]),
              default="scattered", show_default=True)
@click.option("--radius", default="eps", show_default=True,
              help="Circle radius: a number or a multiple of eps such as '2eps'.")
@mode_options
@physical_options
@click.pass_context
def field(ctx, kind, radius, mode_specs, plane_wave, direction, amplitude, q0, q, lam, eps,
          omega, oeps, sigma, truncation, out, fmt, seed, show_config):
    """Fourier coefficients of a field on the circle |x| = radius."""
    if show_config:
        _show_config(ctx)

    def go():
        cfg = _config(q0, q, lam, eps, omega, oeps)
        modes = _modes(mode_specs, plane_wave, direction, amplitude)
        tr = field_trace(kind, cfg, modes, _radius(radius, eps), truncation)
        with _open_out(out) as fh:
            if fmt == "csv":
                _write_trace(fh, tr)
            else:
                doc = {"library": f"diskscatter {__version__}", "kind": tr.kind, "R": tr.radius,
                       "config": cfg.as_dict(), "truncation": tr.truncation,
                       "tail_bound": tr.tail_bound,
                       "coefficients": [[int(n), c.real, c.imag]
                                        for n, c in zip(tr.orders, tr.coeffs)]}
                fh.write(json.dumps(doc, sort_keys=True) + "\n")

    _run(go)


# -------------------------------------------------------------- resonances


@main.command()
@click.option("--n", "order", type=int, required=True, help="Mode order.")
@click.option("--window", type=(float, float), default=None, help="Range of oeps to keep.")
@click.option("--polish/--no-polish", default=True, show_default=True,
              help="Extended-precision refinement of ill-conditioned roots.")
@click.option("--q0", type=float, default=1.0, show_default=True)
@click.option("--q", type=float, default=None)
@click.option("--lambda", "lam", type=float, default=None)
@click.option("--eps", type=float, default=1.0, show_default=True)
@output_options
@click.pass_context
def resonances(ctx, order, window, polish, q0, q, lam, eps, out, fmt, seed, show_config):
    """Quasi-resonant frequencies of one order (rows n, k, omega_nk, residual, u_lo, u_hi).

    omega_nk, u_lo and u_hi are rescaled frequencies oeps."""
    if show_config:
        _show_config(ctx)

    def go():
        contrast = _contrast(q0, q, lam)
        if contrast is None:
            raise click.UsageError("give the contrast with --lambda or --q")
        if not contrast > 0:
            raise click.UsageError("the contrast must be positive")
        recs = find_quasi_resonances(order, contrast, window=window, polish=polish)
        with _open_out(out) as fh:
            if fmt == "csv":
                write_resonances(fh, recs, {"n": order, "lambda": fmt17(contrast),
                                            "eps": fmt17(eps)})
            else:
                doc = {"library": f"diskscatter {__version__}", "n": order, "lambda": contrast,
                       "eps": eps,
                       "resonances": [{"n": r.order, "k": r.branch, "omega_nk": r.location,
                                       "residual": r.residual, "u_lo": r.u_lo, "u_hi": r.u_hi}
                                      for r in recs]}
                fh.write(json.dumps(doc, sort_keys=True) + "\n")

    _run(go)


# ----------------------------------------------------------------- figures


def figure_qr1(n: int, lam: float, points: int) -> dict:
    """Columns x, g_n(lam x), -k_n(x) and the resonance flag on (j'_{n,1}/lam, y_{n,1}).

    g_n(lam x) = -k_n(x) is the normalized form of
    lam J'_n(lam x)/J_n(lam x) = Y'_n(x)/Y_n(x).
    """
    t = zeros(n, 1)
    lo, hi = t.jp(1) / lam, t.y1
    recs = find_quasi_resonances(n, lam)
    res = np.array([r.location for r in recs])
    xs = np.unique(np.concatenate([np.linspace(lo, hi, points), res]))
    with np.errstate(all="ignore"):
        g = np.asarray(g_values(n, lam * xs), dtype=float)
    kc = -np.asarray(k_values(n, xs), dtype=float)
    flag = np.isin(xs, res).astype(int)
    return {"columns": ("x", "g_lambda_x", "k_curve", "is_resonance"),
            "rows": list(zip(xs, g, kc, flag)),
            "meta": {"n": n, "lambda": lam, "x_lo": lo, "x_hi": hi,
                     "resonances": len(recs)}}


def radial_profile(n: int, lam: float, oeps: float, rho) -> tuple[np.ndarray, np.ndarray]:
    """|full field| and |incident field| of the single mode a_n = 1 at r = rho eps."""
    rho = np.asarray(rho, dtype=float)
    r = complex(reflection_coeff(n, oeps, lam))
    t = complex(transmission_coeff(n, oeps, lam))
    inc = np.abs(cylinder_arrays(n, oeps * rho, strict=False)[0])
    full = np.empty(rho.shape)
    inside = rho <= 1.0
    if np.any(inside):
        full[inside] = np.abs(t * cylinder_arrays(n, lam * oeps * rho[inside], strict=False)[0])
    if np.any(~inside):
        j, y, _, _ = cylinder_arrays(n, oeps * rho[~inside], strict=False)
        full[~inside] = np.abs(j + r * (j + 1j * y))
    return full, inc


def figure_qr_profile(n: int, lam: float, branch: int | None, points: int) -> dict:
    """Columns r/eps, |full field| and |incident field| on (0, 3] at omega_{n,branch}.

    ``branch=None`` picks the last quasi-resonance.
    """
    recs = find_quasi_resonances(n, lam)
    if not recs:
        raise PreconditionError(f"no quasi-resonance for n = {n}, lambda = {lam!r}")
    rec = recs[-1] if branch is None else next((r for r in recs if r.branch == branch), None)
    if rec is None:
        raise PreconditionError(f"branch {branch} not found")
    x = rec.location + rec.correction
    rho = np.unique(np.concatenate([np.logspace(-3, math.log10(3.0), points), [1.0, lam, 2.0]]))
    rho = rho[rho <= 3.0]
    full, inc = radial_profile(n, lam, x, rho)
    one = int(np.flatnonzero(rho == 1.0)[0])
    return {"columns": ("r_over_eps", "full", "incident"),
            "rows": list(zip(rho, full, inc)),
            "meta": {"n": n, "lambda": lam, "k": rec.branch, "omega": x,
                     "ratio_at_eps": float(full[one] / inc[one])}}


@main.command()
@click.argument("name", type=click.Choice(["qr1", "qr2", "qr3"]))
@click.option("--n", "order", type=int, default=30, show_default=True)
@click.option("--lambda", "lam", type=float, default=2.0, show_default=True)
@click.option("--points", type=int, default=400, show_default=True)
@output_options
@click.pass_context
def figure(ctx, name, order, lam, points, out, fmt, seed, show_config):
    """Data behind the quasi-resonance figures (qr1 crossings, qr2 first and qr3 last
    resonant profile)."""
    if show_config:
        _show_config(ctx)

    def go():
        if points < 2:
            raise click.UsageError("--points must be at least 2")
        if name == "qr1":
            data = figure_qr1(order, lam, points)
        else:
            data = figure_qr_profile(order, lam, 1 if name == "qr2" else None, points)
        with _open_out(out) as fh:
            if fmt == "csv":
                w = csv.writer(fh, lineterminator="\n")
                _header_rows(w, {"figure": name, **data["meta"]})
                w.writerow(data["columns"])
                for row in data["rows"]:
                    w.writerow([int(v) if isinstance(v, (int, np.integer)) else fmt17(v)
                                for v in row])
            else:
                doc = {"library": f"diskscatter {__version__}", "figure": name,
                       "meta": data["meta"], "columns": list(data["columns"]),
                       "rows": [[v.item() if hasattr(v, "item") else v for v in row]
                                for row in data["rows"]]}
                fh.write(json.dumps(doc, sort_keys=True) + "\n")

    _run(go)


# -------------------------------------------------------------- exclusions


def _tau_set(lam: float, eps: float, tau: float, max_order: int) -> tuple[ExclusionSet, dict]:
    ivs, per = [], {}
    for n in range(0, max_order + 1):
        got = exclusion_intervals(n, lam, tau)
        ivs.extend(got)
        per[n] = {"measure": _merged_length([(i.alpha_end, i.beta_end) for i in got]) / eps,
                  "bound": measure_bound(n, lam, tau) / eps}
    ivs.sort(key=lambda iv: (iv.alpha_end, iv.order, iv.branch))
    total = _merged_length([(i.alpha_end, i.beta_end) for i in ivs]) / eps
    ex = ExclusionSet(lam, eps, tuple(ivs), total, math.nan, eta_max(lam), eta_zero(lam),
                      math.nan, {n: tau for n in per}, tau)
    summary = {"mode": "tau", "lambda": lam, "eps": eps, "tau": tau, "total_measure": total,
               "orders": {str(n): v for n, v in per.items()},
               "pass": all(v["measure"] <= v["bound"] for v in per.values())}
    return ex, summary


@main.command()
@click.option("--tau", type=float, default=None, help="One tau for every order.")
@click.option("--alpha", type=float, default=None, help="Schedule exponent alpha.")
@click.option("--eta", type=float, default=None, help="Measure parameter eta of I_1.")
@click.option("--eta0", type=float, default=None, help="Measure parameter of I_0.")
@click.option("--beta", type=float, default=None,
              help="Use lambda = 1/eps, eta = eps^beta eta_max and eta0 = (|ln eps|+1)^-beta eta_0.")
@click.option("--max-order", type=int, default=30, show_default=True)
@click.option("--window", type=(float, float), default=(0.0, 50.0), show_default=True,
              help="Range of oeps covered.")
@click.option("--summary", "summary_path", type=click.Path(dir_okay=False), default=None,
              help="Summary JSON file (default: stderr, or stdout when --out is a file).")
@click.option("--q0", type=float, default=1.0, show_default=True)
@click.option("--q", type=float, default=None)
@click.option("--lambda", "lam", type=float, default=None)
@click.option("--eps", type=float, default=1.0, show_default=True)
@output_options
@click.pass_context
def exclusions(ctx, tau, alpha, eta, eta0, beta, max_order, window, summary_path, q0, q, lam,
               eps, out, fmt, seed, show_config):
    """Exclusion intervals around quasi-resonances, as CSV (n, k, alpha_end, beta_end, tau_n)
    in units of sqrt(q0) omega, with a summary comparing measures to their bounds."""
    if show_config:
        _show_config(ctx)

    def go():
        contrast = _contrast(q0, q, lam)
        if not eps > 0:
            raise click.UsageError("--eps must be positive")
        if beta is not None:
            if contrast is not None:
                raise click.UsageError("--beta fixes lambda = 1/eps; drop --lambda/--q")
            if eta is not None or eta0 is not None or tau is not None:
                raise click.UsageError("--beta fixes eta and eta0; drop --eta/--eta0/--tau")
            if not 0 < eps < 1 / 7:
                raise click.UsageError("--beta needs eps < 1/7")
            contrast = 1.0 / eps
        if contrast is None:
            raise click.UsageError("give the contrast with --lambda or --q")
        if tau is not None:
            if alpha is not None or eta is not None:
                raise click.UsageError("--tau excludes the --alpha/--eta schedule")
            if not 0 < tau <= 0.25:
                raise ParameterError(f"tau = {tau!r} must lie in (0, 1/4]")
            ex, summary = _tau_set(contrast, eps, tau, max_order)
        else:
            a = 1.0 if alpha is None else alpha
            if beta is not None:
                L = abs(math.log(eps))
                e1 = eps ** beta * eta_max(contrast)
                e0 = (L + 1) ** (-beta) * eta_zero(contrast)
                bound_one, bound_zero = eps ** beta * L, math.log(L) / (L + 1) ** beta
            else:
                e1 = eta_max(contrast) / a if eta is None else eta
                e0 = min(e1, eta_zero(contrast)) if eta0 is None else eta0
                bound_one, bound_zero = e1 / eps, e0 / eps
            cfg = ScatterConfig.from_dimensionless(contrast, 1.0, eps=eps, q0=q0)
            ex = broadband_set(cfg, a, e1, window, eta0=e0, max_order=max_order)
            # orders above max_order enter through their measure bounds
            tail = tail_measure_bound(e1, a, max_order)
            summary = {"mode": "broadband" if beta is not None else "schedule",
                       "lambda": contrast, "eps": eps, "alpha": a, "eta": e1, "eta0": e0,
                       "beta": beta, "window": list(window), "max_order": max_order,
                       "tau_by_order": {str(n): t for n, t in ex.tau_by_order.items()},
                       "tau_zero": ex.tau_zero, "measure_one": ex.measure_one,
                       "tail_one": tail / eps, "bound_one": bound_one,
                       "measure_zero": ex.measure_zero, "bound_zero": bound_zero,
                       "total_measure": ex.total_measure,
                       "pass": ex.measure_one + tail / eps < bound_one
                       and ex.measure_zero < bound_zero}
        summary["library"] = f"diskscatter {__version__}"
        with _open_out(out) as fh:
            if fmt == "csv":
                write_exclusions(fh, ex)
            else:
                doc = {"library": f"diskscatter {__version__}", "lambda": ex.contrast,
                       "eps": ex.eps, "intervals": [
                           {"n": iv.order, "k": iv.branch, "alpha_end": iv.alpha_end / ex.eps,
                            "beta_end": iv.beta_end / ex.eps, "tau_n": iv.tau}
                           for iv in ex.intervals]}
                fh.write(json.dumps(doc, sort_keys=True, allow_nan=True) + "\n")
        text = json.dumps(summary, sort_keys=True, allow_nan=True) + "\n"
        if summary_path:
            with open(summary_path, "w") as fh:
                fh.write(text)
        elif out == "-":
            click.echo(text, err=True, nl=False)
        else:
            click.echo(text, nl=False)
        if not summary["pass"]:
            sys.exit(1)

    _run(go)


# ------------------------------------------------------------------ verify


@main.command()
@click.argument("statement", required=False)
@click.option("--samples", type=click.IntRange(1), default=None,
              help="Samples per statement [default: 1000].")
@click.option("--workers", type=click.IntRange(1), default=1, show_default=True)
@click.option("--list", "list_ids", is_flag=True, help="List statement ids and exit.")
@output_options
@click.pass_context
def verify(ctx, statement, samples, workers, list_ids, out, fmt, seed, show_config):
    """Seeded sweep of one statement id, or of 'all', as a JSON-lines report.

    Exits 1 when any check fails."""
    from .verify import DEFAULT_SAMPLES, REGISTRY, SamplingPlan, sweep, write_report

    if show_config:
        _show_config(ctx)
    if list_ids:
        for sid, st in REGISTRY.items():
            click.echo(f"{sid}\t{st.kind}\t{st.summary}")
        return
    if statement is None:
        raise click.UsageError("give a statement id or 'all' (see --list)")
    ids = list(REGISTRY) if statement == "all" else [statement]
    unknown = [s for s in ids if s not in REGISTRY]
    if unknown:
        raise click.UsageError(f"unknown statement id {unknown[0]!r}")
    n = DEFAULT_SAMPLES if samples is None else samples
    plan = SamplingPlan(seed=seed, samples=n, workers=workers)

    def go():
        results = {sid: sweep(sid, plan) for sid in ids}
        with _open_out(out) as fh:
            ok = write_report(fh, results, seed, n)
        for sid, res in results.items():
            s = res.summary
            click.echo(f"{'PASS' if s.passed else 'FAIL'} {sid} count={s.count} "
                       f"failures={s.failures} min_relative_margin={s.min_relative_margin:.3e}",
                       err=True)
        if not ok:
            sys.exit(1)

    _run(go)


# ------------------------------------------------------------------- norms


@main.command()
@click.option("--kind", type=click.Choice(["incident", "scattered", "transmitted", "total"]),
              default="scattered", show_default=True)
@click.option("--radius", default="eps", show_default=True)
@click.option("--p", "p_order", type=int, default=1, show_default=True,
              help="Lowest order in N_bold.")
@mode_options
@physical_options
@click.pass_context
def norms(ctx, kind, radius, p_order, mode_specs, plane_wave, direction, amplitude, q0, q, lam,
          eps, omega, oeps, sigma, truncation, out, fmt, seed, show_config):
    """H^sigma and H^sigma_* norms of a trace, and the incident norms N^sigma and N_bold_p^sigma."""
    if show_config:
        _show_config(ctx)

    def go():
        cfg = _config(q0, q, lam, eps, omega, oeps)
        modes = _modes(mode_specs, plane_wave, direction, amplitude)
        tr = field_trace(kind, cfg, modes, _radius(radius, eps), truncation)
        inc_trunc = tr.truncation if modes.is_plane_wave else None
        vals = {"H": h_sigma(tr, sigma).value, "H_star": h_sigma_star(tr, sigma).value,
                "N_script": n_script(modes, sigma=sigma, truncation=inc_trunc).value,
                "N_bold": n_bold(modes, sigma=sigma, p=p_order, truncation=inc_trunc).value}
        meta = {"kind": kind, "R": tr.radius, "sigma": sigma, "p": p_order,
                "truncation": tr.truncation, **cfg.as_dict()}
        with _open_out(out) as fh:
            if fmt == "csv":
                w = csv.writer(fh, lineterminator="\n")
                _header_rows(w, meta)
                w.writerow(["norm", "value"])
                for k, v in vals.items():
                    w.writerow([k, fmt17(v)])
            else:
                doc = {"library": f"diskscatter {__version__}", **meta, "norms": vals}
                fh.write(json.dumps(doc, sort_keys=True) + "\n")

    _run(go)


if __name__ == "__main__":  # pragma: no cover
    main()
