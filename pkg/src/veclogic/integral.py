"""Antiderivatives of formulas with respect to a fresh variable.

A formula ``Y`` is an integral of ``f`` in ``t`` when ``∂Y/∂t ≡ f``.  Four
general integrals exist for every ``f``; particular integrals are found by
replacing variable occurrences ``x`` with templates ``B(x, t)`` chosen so
that differentiation in ``t`` detaches ``f`` again.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .core import PROB_TOL
from .derivative import diff
from .evaluate import MAX_VARS, equivalent, eval_scalar, probabilistic_grid, union_variables
from .formula import (BOTTOM, TOP, And, Equiv, Formula, Impl, Not, Or, Var, Binary,
                      render, substitute, variables)

NUMERIC_VAR_LIMIT = 4
DEFAULT_MAX_CANDIDATES = 10_000


class IntegralError(ValueError):
    pass


class IntegralVersion(enum.Enum):
    """``H L(f ⊗ H' t)`` for ``H, H'`` in {I, N}; values are ``(H, H')``."""

    V1 = ("I", "I")
    V2 = ("N", "I")
    V3 = ("N", "N")
    V4 = ("I", "N")

    @property
    def number(self) -> int:
        return list(IntegralVersion).index(self) + 1

    @classmethod
    def from_number(cls, k: int) -> IntegralVersion:
        members = list(cls)
        if not 1 <= k <= len(members):
            raise IntegralError(f"integral version must be 1-4, got {k}")
        return members[k - 1]


def _check_fresh(f: Formula, tau: str) -> None:
    Var(tau)  # validates the name
    if tau in variables(f):
        raise IntegralError(f"integration variable {tau!r} already occurs in the formula")


def general_integral(f: Formula, tau: str, version: IntegralVersion = IntegralVersion.V1,
                     operator_form: bool = False) -> Formula:
    """General integral of ``f``.

    By default the four versions are returned in their reduced shapes
    ``f -> t``, ``!(f -> t)``, ``f & t`` and ``!(f & t)``; with
    ``operator_form`` the literal ``H L(f ⊗ H't)`` is built instead.
    """
    _check_fresh(f, tau)
    t = Var(tau)
    if operator_form:
        h, h_prime = version.value
        body: Formula = Impl(f, Not(t) if h_prime == "N" else t)
        return Not(body) if h == "N" else body
    if version is IntegralVersion.V1:
        return Impl(f, t)
    if version is IntegralVersion.V2:
        return Not(Impl(f, t))
    if version is IntegralVersion.V3:
        return And(f, t)
    return Not(And(f, t))


def verify_integral(candidate: Formula, f: Formula, tau: str, step: float = 0.25,
                    tol: float = PROB_TOL, max_vars: int = MAX_VARS) -> bool:
    """``∂candidate/∂tau ≡ f`` by truth table, and numerically on a grid for small formulas."""
    d = diff(candidate, tau).derivative
    if not equivalent(d, f, max_vars=max_vars):
        return False
    names = union_variables(f, d)
    if len(variables(f)) <= NUMERIC_VAR_LIMIT and len(variables(candidate)) <= NUMERIC_VAR_LIMIT:
        for point in probabilistic_grid(names, step):
            if abs(eval_scalar(d, point) - eval_scalar(f, point)) > tol:
                return False
    return True


# ---------------------------------------------------------------- templates


@dataclass(frozen=True)
class SubstitutionTemplate:
    """A rule ``x -> B(x, t)`` for a variable occurrence ``x``."""

    name: str
    builder: Callable[[Formula, Formula], Formula]

    def __post_init__(self) -> None:
        probe = self.builder(Var("v"), Var("t"))
        names = set(variables(probe))
        if "v" not in names or not names <= {"v", "t"}:
            raise IntegralError(
                f"template {self.name!r} must be built from v and t only, got {sorted(names)}")

    def __call__(self, x: Formula, tau: Formula) -> Formula:
        return self.builder(x, tau)

    def reduces_to_identity(self, at: bool) -> bool:
        x = Var("v")
        return equivalent(self.builder(x, TOP if at else BOTTOM), x)


DEFAULT_LIBRARY: tuple[SubstitutionTemplate, ...] = (
    SubstitutionTemplate("v&t", lambda v, t: And(v, t)),
    SubstitutionTemplate("t&v", lambda v, t: And(t, v)),
    SubstitutionTemplate("v|t", lambda v, t: Or(v, t)),
    SubstitutionTemplate("t->v", lambda v, t: Impl(t, v)),
    SubstitutionTemplate("v->t", lambda v, t: Impl(v, t)),
    SubstitutionTemplate("t<->(t&v)", lambda v, t: Equiv(t, And(t, v))),
    SubstitutionTemplate("t&(t<->v)", lambda v, t: And(t, Equiv(t, v))),
)

IDENTITY_TEMPLATE = SubstitutionTemplate("v", lambda v, t: v)


@dataclass(frozen=True)
class Position:
    """A labelled variable occurrence.  ``negated`` marks an occurrence ``!x``."""

    index: int
    name: str
    negated: bool

    @property
    def literal(self) -> Formula:
        return Not(Var(self.name)) if self.negated else Var(self.name)


@dataclass(frozen=True)
class TemplateChoice:
    """Template for one position.

    With ``literal`` set, a negated occurrence ``!x`` is replaced as a whole
    by ``B(!x, t)``; otherwise the bare variable is replaced, giving
    ``!B(x, t)``.
    """

    template: SubstitutionTemplate
    literal: bool = False

    def label(self) -> str:
        return f"{self.template.name}{'[lit]' if self.literal else ''}"


def positions(f: Formula) -> list[Position]:
    """Variable occurrences in left-to-right order, numbered from 1."""
    out: list[Position] = []

    def walk(node: Formula) -> None:
        if isinstance(node, Var):
            out.append(Position(len(out) + 1, node.name, False))
        elif isinstance(node, Not) and isinstance(node.child, Var):
            out.append(Position(len(out) + 1, node.child.name, True))
        elif isinstance(node, Not):
            walk(node.child)
        elif isinstance(node, Binary):
            walk(node.left)
            walk(node.right)

    walk(f)
    return out


def apply_templates(f: Formula, choices: Sequence[TemplateChoice], tau: Formula) -> Formula:
    """Replace the k-th position of ``f`` using ``choices[k]``."""
    counter = itertools.count()

    def rebuild(node: Formula) -> Formula:
        if isinstance(node, Var):
            ch = choices[next(counter)]
            return ch.template(node, tau)
        if isinstance(node, Not) and isinstance(node.child, Var):
            ch = choices[next(counter)]
            if ch.literal:
                return ch.template(node, tau)
            return Not(ch.template(node.child, tau))
        if isinstance(node, Not):
            return Not(rebuild(node.child))
        if isinstance(node, Binary):
            return type(node)(rebuild(node.left), rebuild(node.right))
        return node

    n = len(positions(f))
    if len(choices) != n:
        raise IntegralError(f"{len(choices)} template choices for {n} positions")
    return rebuild(f)


def _as_choices(f: Formula, templates) -> list[TemplateChoice]:
    n = len(positions(f))
    items = [t if isinstance(t, TemplateChoice) else TemplateChoice(t) for t in templates]
    if len(items) == 1:
        items = items * n
    return items


def check_detachment(f: Formula, templates, tau: str = "t") -> str | None:
    """Classify the template assignment as detachment case ``"c1"``, ``"c2"`` or None.

    c1: every template reduces to its argument at ``t = 1`` and ``f`` becomes
    false at ``t = 0``; c2 swaps the roles of the two poles.  ``templates``
    is one template/choice per position, or a single one used everywhere.
    """
    choices = _as_choices(f, templates)
    substituted = apply_templates(f, choices, Var(tau))
    for case, pole in (("c1", True), ("c2", False)):
        if not all(ch.template.reduces_to_identity(pole) for ch in choices):
            continue
        other = substitute(substituted, tau, BOTTOM if pole else TOP)
        if equivalent(other, BOTTOM):
            return case
    return None


@dataclass(frozen=True)
class ParticularIntegral:
    original: Formula
    tau: str
    choices: tuple[TemplateChoice, ...]
    result: Formula
    condition: str

    def describe(self) -> list[str]:
        return [f"{p.index}:{render(p.literal)}->{c.label()}"
                for p, c in zip(positions(self.original), self.choices)]


def _position_options(pos: Position, library: Sequence[SubstitutionTemplate]) -> list[TemplateChoice]:
    opts = []
    for tmpl in library:
        opts.append(TemplateChoice(tmpl, False))
        if pos.negated:
            opts.append(TemplateChoice(tmpl, True))
    return opts


def candidate_assignments(f: Formula, library: Sequence[SubstitutionTemplate]
                          ) -> Iterator[tuple[TemplateChoice, ...]]:
    """Every per-position template assignment, in deterministic order."""
    options = [_position_options(p, library) for p in positions(f)]
    return itertools.product(*options)


def particular_integral_search(f: Formula, tau: str,
                               library: Sequence[SubstitutionTemplate] = DEFAULT_LIBRARY,
                               max_results: int | None = None,
                               max_candidates: int = DEFAULT_MAX_CANDIDATES,
                               step: float = 0.25) -> list[ParticularIntegral]:
    """Bounded search for particular integrals of ``f``.

    Candidates are enumerated position by position over ``library`` (negated
    occurrences additionally try the literal mode), pre-filtered by the
    detachment conditions and accepted only if ``verify_integral`` holds.
    """
    _check_fresh(f, tau)
    if not library:
        raise IntegralError("template library is empty")
    t = Var(tau)
    found: list[ParticularIntegral] = []
    seen: set[Formula] = set()
    for choices in itertools.islice(candidate_assignments(f, library), max_candidates):
        condition = check_detachment(f, choices, tau)
        if condition is None:
            continue
        result = apply_templates(f, choices, t)
        if result in seen or not verify_integral(result, f, tau, step=step):
            continue
        seen.add(result)
        found.append(ParticularIntegral(f, tau, tuple(choices), result, condition))
        if max_results is not None and len(found) >= max_results:
            break
    return found
