"""Numerical verification of the scattering estimates.

Importing this package registers every statement; use :func:`check` for a
single evaluation and :func:`sweep` for a seeded random sweep.
"""

from . import statements  # noqa: F401  (registers the statements)
from .core import (DEFAULT_SAMPLES, REGISTRY, TOL_REL, BoundCheck, SamplingPlan, Statement,
                   SweepResult, SweepSummary, check, get_statement, register, statement_ids,
                   summarize, sweep, write_report)

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
