"""Bound checks, the statement registry, seeded sweeps and JSON-lines reports."""

from __future__ import annotations

import json
import math
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .. import __version__
from ..errors import DomainError

TOL_REL = 1e-9
DEFAULT_SAMPLES = 1000


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated inequality.

    ``margin`` is the slack in the direction of the inequality: rhs - lhs
    for upper bounds and lhs - rhs for lower bounds, so a positive margin
    always means the inequality holds.  ``grid_sup`` marks a left side that
    is a supremum approximated on a finite frequency grid; such values can
    only under-estimate the true supremum.
    """

    statement: str
    params: dict
    lhs: float
    rhs: float
    relation: str
    margin: float
    passed: bool
    grid_sup: bool = False

    @classmethod
    def build(cls, statement: str, params: dict, lhs: float, rhs: float,
              relation: str = "<=", grid_sup: bool = False) -> "BoundCheck":
        lhs, rhs = float(lhs), float(rhs)
        if relation in ("<=", "<"):
            margin = rhs - lhs
        elif relation in (">=", ">"):
            margin = lhs - rhs
        else:
            raise DomainError(f"unknown relation {relation!r}")
        ok = math.isfinite(margin) and margin >= -TOL_REL * abs(rhs)
        if relation in ("<", ">") and rhs != 0:
            ok = ok and margin > -TOL_REL * abs(rhs)
        return cls(statement, params, lhs, rhs, relation, margin, bool(ok), grid_sup)

    def as_dict(self) -> dict:
        return {"statement": self.statement, "params": self.params, "lhs": self.lhs,
                "rhs": self.rhs, "relation": self.relation, "margin": self.margin,
                "pass": self.passed, "grid_sup": self.grid_sup}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, allow_nan=True)


@dataclass(frozen=True)
class Statement:
    """A registered inequality.

    ``evaluate(**params)`` checks hypotheses and returns a BoundCheck;
    ``sample(rng)`` draws one parameter set inside the hypotheses.
    ``kind`` is 'upper', 'lower' or 'two-sided'; lower-bound statements use
    grid suprema and run ``max_samples`` samples at most.
    """

    id: str
    kind: str
    summary: str
    evaluate: Callable[..., BoundCheck]
    sample: Callable[[np.random.Generator], dict]
    max_samples: int | None = None


REGISTRY: dict[str, Statement] = {}


def register(stmt: Statement) -> Statement:
    if stmt.id in REGISTRY:
        raise DomainError(f"duplicate statement id {stmt.id!r}")
    REGISTRY[stmt.id] = stmt
    return stmt


def statement_ids() -> list[str]:
    return list(REGISTRY)


def get_statement(statement_id: str) -> Statement:
    try:
        return REGISTRY[statement_id]
    except KeyError:
        raise DomainError(f"unknown statement id {statement_id!r}") from None


def check(statement_id: str, **params: Any) -> BoundCheck:
    """Evaluate one statement at the given parameters.

    Raises
    ------
    HypothesisError
        If the parameters violate a hypothesis of the statement.
    DomainError
        If the statement id is unknown.
    """
    return get_statement(statement_id).evaluate(**params)


@dataclass(frozen=True)
class SamplingPlan:
    """Seed and sample count of a sweep.

    Each statement draws from its own generator seeded with
    ``(seed, crc32(statement_id))``, so results do not depend on which
    other statements run.
    """

    seed: int = 0
    samples: int = DEFAULT_SAMPLES
    workers: int = 1

    def generator(self, statement_id: str) -> np.random.Generator:
        return np.random.default_rng([int(self.seed), zlib.crc32(statement_id.encode())])


@dataclass(frozen=True)
class SweepSummary:
    statement: str
    count: int
    failures: int
    min_margin: float
    min_relative_margin: float
    argmin: dict
    grid_sup: bool

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {"summary": self.statement, "count": self.count, "failures": self.failures,
                "min_margin": self.min_margin, "min_relative_margin": self.min_relative_margin,
                "argmin": self.argmin, "grid_sup": self.grid_sup, "pass": self.passed}


@dataclass(frozen=True)
class SweepResult:
    checks: list = field(default_factory=list)
    summary: SweepSummary | None = None


def _evaluate_one(args):
    statement_id, params = args
    return check(statement_id, **params)


def _relative(c: BoundCheck) -> float:
    scale = max(abs(c.rhs), abs(c.lhs), 1e-300)
    return c.margin / scale


def summarize(statement_id: str, checks: list[BoundCheck]) -> SweepSummary:
    if not checks:
        return SweepSummary(statement_id, 0, 0, math.inf, math.inf, {}, False)
    rel = [_relative(c) for c in checks]
    i = int(np.argmin(rel))
    return SweepSummary(statement_id, len(checks), sum(not c.passed for c in checks),
                        min(c.margin for c in checks), rel[i], checks[i].params,
                        any(c.grid_sup for c in checks))


def sweep(statement_id: str, plan: SamplingPlan | None = None) -> SweepResult:
    """Draw parameter sets and check each one.

    Samples are drawn sequentially from the statement's generator, then
    evaluated (optionally across worker processes); the output order is
    the draw order, so equal seeds give identical results.
    """
    plan = plan or SamplingPlan()
    stmt = get_statement(statement_id)
    count = plan.samples if stmt.max_samples is None else min(plan.samples, stmt.max_samples)
    rng = plan.generator(statement_id)
    params = [stmt.sample(rng) for _ in range(count)]
    if plan.workers > 1 and count > 1:
        with ProcessPoolExecutor(plan.workers) as pool:
            checks = list(pool.map(_evaluate_one, [(statement_id, p) for p in params],
                                   chunksize=max(1, count // (4 * plan.workers))))
    else:
        checks = [stmt.evaluate(**p) for p in params]
    return SweepResult(checks, summarize(statement_id, checks))


def write_report(fh, results: dict[str, SweepResult], seed: int, samples: int) -> bool:
    """Write JSON lines: a header, every check, then one summary per statement.

    Returns True when every check passed.
    """
    fh.write(json.dumps({"library": f"diskscatter {__version__}", "seed": int(seed),
                         "samples": int(samples), "tol_rel": TOL_REL,
                         "statements": list(results)}, sort_keys=True) + "\n")
    for res in results.values():
        for c in res.checks:
            fh.write(c.to_json() + "\n")
    ok = True
    for res in results.values():
        fh.write(json.dumps(res.summary.as_dict(), sort_keys=True) + "\n")
        ok = ok and res.summary.passed
    return ok


__all__ = [
    "BoundCheck",
    "DEFAULT_SAMPLES",
    "REGISTRY",
    "SamplingPlan",
    "Statement",
    "SweepResult",
    "SweepSummary",
    "TOL_REL",
    "check",
    "get_statement",
    "register",
    "statement_ids",
    "summarize",
    "sweep",
    "write_report",
]
