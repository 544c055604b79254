"""Tautology hierarchy, derivative checks on classical tautologies, and
argument-sensitivity reports."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .core import PROB_TOL
from .derivative import diff
from .evaluate import (VariableCapError, binary_assignments, equivalent,
                       eval_scalar, probabilistic_grid)
from .formula import (BOTTOM, TOP, Formula, Not, Var, parse, render, substitute,
                      substitute_many, variables)

SENSITIVITY_MAX_VARS = 12
_GRID_VAR_LIMIT = 4
_SAMPLES = 256


class TautologyId(str, enum.Enum):
    EM = "EM"
    MP = "MP"
    HS = "HS"
    ST = "ST"

    @property
    def formula(self) -> Formula:
        return TAUTOLOGIES[self]


TAUTOLOGIES: dict[TautologyId, Formula] = {
    TautologyId.EM: parse("p | !p"),
    TautologyId.MP: parse("(p & (p -> q)) -> q"),
    TautologyId.HS: parse("((p -> q) & (q -> r)) -> (p -> r)"),
    TautologyId.ST: parse("(p & q) -> p"),
}


def em(u: Formula) -> Formula:
    return u | Not(u)


def mp(u: Formula, v: Formula) -> Formula:
    return substitute_many(TAUTOLOGIES[TautologyId.MP], {"p": u, "q": v})


def hs(u: Formula, v: Formula, w: Formula) -> Formula:
    return substitute_many(TAUTOLOGIES[TautologyId.HS], {"p": u, "q": v, "r": w})


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class Check:
    name: str
    lhs: Formula
    rhs: Formula
    holds: bool
    numeric: bool | None = None  # grid agreement of the vector evaluations, where asserted

    @property
    def ok(self) -> bool:
        return self.holds and self.numeric is not False


def _numeric_agree(f: Formula, g: Formula, step: float) -> bool:
    names = tuple(dict.fromkeys(variables(f) + variables(g)))
    return all(abs(eval_scalar(f, pt) - eval_scalar(g, pt)) <= PROB_TOL
               for pt in probabilistic_grid(names, step))


def _check(name: str, lhs: Formula, rhs: Formula, numeric_step: float | None = None) -> Check:
    numeric = None if numeric_step is None else _numeric_agree(lhs, rhs, numeric_step)
    return Check(name, lhs, rhs, equivalent(lhs, rhs), numeric)


@dataclass(frozen=True)
class Report:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __iter__(self):
        return iter(self.checks)


def hierarchy_check(numeric_step: float | None = 0.25) -> Report:
    """Walk HS -> MP -> EM -> ⊤ by negated differentiation.

    Each step differentiates the *previous step's output*, so the chain is
    verified end to end, not just pairwise.
    """
    p, q, r = Var("p"), Var("q"), Var("r")
    step1 = Not(diff(hs(p, q, r), "p").derivative)
    step2 = Not(diff(step1, "q").derivative)
    step3 = Not(diff(step2, "r").derivative)
    return Report((
        _check("!dHS/dp == MP(q,r)", step1, mp(q, r), numeric_step),
        _check("!dMP/dq == EM(r)", step2, em(r), numeric_step),
        _check("!dEM/dr == 1", step3, TOP, numeric_step),
    ))


def pivot_derivative() -> Formula:
    """The closed form given for ∂HS/∂q: ``(r -> (p -> r)) ^ (!p -> (!r -> !p))``."""
    return parse("(r -> (p -> r)) ^ (!p -> (!r -> !p))")


def hs_auxiliary_checks(numeric_step: float | None = 0.25) -> Report:
    p, q, r = Var("p"), Var("q"), Var("r")
    hs_f = hs(p, q, r)
    pivot = diff(hs_f, "q").derivative
    st = TAUTOLOGIES[TautologyId.ST]  # (w & u) -> w with w = p, u = q
    return Report((
        # binary-only: with probabilistic inputs the arguments must be swapped
        _check("dHS/dr == !MP(!p,!q)", diff(hs_f, "r").derivative, Not(mp(Not(p), Not(q)))),
        _check("dHS/dr == !MP(!q,!p)", diff(hs_f, "r").derivative, Not(mp(Not(q), Not(p))),
               numeric_step),
        _check("dHS/dq == closed form", pivot, pivot_derivative(), numeric_step),
        _check("F(1,r) == !EM(r)", substitute(pivot, "p", TOP), Not(em(r)), numeric_step),
        _check("F(p,1) == 0", substitute(pivot, "r", TOP), BOTTOM, numeric_step),
        _check("F(0,r) == 0", substitute(pivot, "p", BOTTOM), BOTTOM, numeric_step),
        _check("F(p,0) == !EM(p)", substitute(pivot, "r", BOTTOM), Not(em(p)), numeric_step),
        _check("dST/dq == !(p -> p)", diff(st, "q").derivative, Not(p >> p), numeric_step),
        _check("dST/dp == 0", diff(st, "p").derivative, BOTTOM, numeric_step),
    ))


# ---------------------------------------------------------------- sensitivity


class Sensitivity(str, enum.Enum):
    SENSITIVE = "sensitive"
    INSENSITIVE = "insensitive"
    MIXED = "mixed"


@dataclass(frozen=True)
class SensitivityEntry:
    variable: str
    derivative: Formula
    binary_min: float
    binary_max: float
    classification: Sensitivity
    prob_min: float
    prob_max: float


@dataclass(frozen=True)
class SensitivityReport:
    formula: Formula
    entries: tuple[SensitivityEntry, ...]
    collapse: Formula | None = None
    notes: tuple[str, ...] = field(default=())

    def entry(self, name: str) -> SensitivityEntry:
        for e in self.entries:
            if e.variable == name:
                return e
        raise KeyError(name)


def _classify(lo: float, hi: float) -> Sensitivity:
    if lo == 1.0:
        return Sensitivity.SENSITIVE
    if hi == 0.0:
        return Sensitivity.INSENSITIVE
    return Sensitivity.MIXED


def _prob_points(names: tuple[str, ...], step: float, rng: random.Random):
    if len(names) <= _GRID_VAR_LIMIT:
        return probabilistic_grid(names, step)
    return ({n: rng.random() for n in names} for _ in range(_SAMPLES))


def sensitivity_report(f: Formula, step: float = 0.25, seed: int = 0,
                       max_vars: int = SENSITIVITY_MAX_VARS) -> SensitivityReport:
    """Per-variable derivative, its projection range and a crisp classification.

    Classification uses binary corners only: sensitive when the derivative
    is 1 everywhere, insensitive when it is 0 everywhere.  The projection
    range over probabilistic inputs (a grid, or seeded random samples for
    more than four remaining variables) is reported alongside.
    """
    names = variables(f)
    if len(names) > max_vars:
        raise VariableCapError(len(names), max_vars)
    rng = random.Random(seed)
    entries = []
    for x in names:
        d = diff(f, x).derivative
        rest = tuple(n for n in names if n != x)
        corners = [eval_scalar(d, a) for a in binary_assignments(rest)]
        probs = [eval_scalar(d, a) for a in _prob_points(rest, step, rng)]
        lo, hi = min(corners), max(corners)
        entries.append(SensitivityEntry(x, d, lo, hi, _classify(lo, hi), min(probs), max(probs)))

    collapse, notes = None, []
    sensitive = [e for e in entries if e.classification is Sensitivity.SENSITIVE]
    if len(sensitive) == 1 and all(
            e.classification is Sensitivity.INSENSITIVE for e in entries if e not in sensitive):
        x = Var(sensitive[0].variable)
        collapse = x if equivalent(f, x) else Not(x)
        notes.append(f"≈ {render(collapse)} (exact for binary values of "
                     f"{', '.join(e.variable for e in entries if e not in sensitive) or 'no other variable'})")
    return SensitivityReport(f, tuple(entries), collapse, tuple(notes))


# ---------------------------------------------------------------- bounds


def tautology_bound_scan(tid: TautologyId | str, step: float = 0.05) -> tuple[float, dict[str, float]]:
    """Minimum scalar projection of a library tautology over a probabilistic grid."""
    if not 0 < step <= 0.25:
        raise ValueError("step must be in (0, 0.25]")
    f = TAUTOLOGIES[TautologyId(tid)]
    best, arg = float("inf"), {}
    for pt in probabilistic_grid(variables(f), step):
        val = eval_scalar(f, pt)
        if val < best:
            best, arg = val, pt
    return best, arg
