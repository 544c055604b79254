"""Binary, vector and scalar evaluation, plus the truth-table oracle.

``eval_binary`` uses Python booleans directly and is the ground truth every
symbolic result is checked against.  ``eval_vector`` is the matrix route:
each connective is realised by applying its gate matrix to Kronecker
products of truth vectors.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .core import FALSE, TRUE, TruthVector, apply, scalar_project
from .formula import _BOOL_OPS, BINARY_TYPES, Binary, Const, Formula, Not, Var, variables
from .operators import GateName, build_gate

MAX_VARS = 20

Assignment = Mapping[str, float]


class MissingVariableError(KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self) -> str:
        return f"no value assigned to variable {self.name!r}"


class VariableCapError(ValueError):
    def __init__(self, count: int, cap: int):
        self.count, self.cap = count, cap
        super().__init__(f"{count} variables exceeds the cap of {cap}")


def _weight(a: Assignment, name: str) -> float:
    try:
        w = a[name]
    except KeyError:
        raise MissingVariableError(name) from None
    w = float(w)
    if not 0.0 <= w <= 1.0:
        raise ValueError(f"weight {w!r} for {name!r} outside [0, 1]")
    return w


# ---------------------------------------------------------------- binary


def _eval_bool(f: Formula, env: Mapping[str, bool]) -> bool:
    if isinstance(f, Var):
        return env[f.name]
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not _eval_bool(f.child, env)
    return _BOOL_OPS[type(f)](_eval_bool(f.left, env), _eval_bool(f.right, env))


def eval_binary(f: Formula, a: Assignment) -> bool:
    env = {}
    for name in variables(f):
        w = _weight(a, name)
        if w not in (0.0, 1.0):
            raise ValueError(f"non-binary weight {w!r} for {name!r}")
        env[name] = w == 1.0
    return _eval_bool(f, env)


# ---------------------------------------------------------------- vector

_NOT = build_gate(GateName.N)
_GATE_FOR = {cls: build_gate(cls.gate) for cls in BINARY_TYPES}


def _eval_vec(f: Formula, env: Mapping[str, TruthVector]) -> TruthVector:
    if isinstance(f, Var):
        return env[f.name]
    if isinstance(f, Const):
        return TRUE if f.value else FALSE
    if isinstance(f, Not):
        return apply(_NOT, _eval_vec(f.child, env))
    if isinstance(f, Binary):
        return apply(_GATE_FOR[type(f)], _eval_vec(f.left, env), _eval_vec(f.right, env))
    raise TypeError(f"not a formula: {f!r}")


def eval_vector(f: Formula, a: Assignment) -> TruthVector:
    env = {name: TruthVector(_weight(a, name)) for name in variables(f)}
    return _eval_vec(f, env)


def eval_scalar(f: Formula, a: Assignment) -> float:
    return scalar_project(eval_vector(f, a))


# ---------------------------------------------------------------- tables


@dataclass(frozen=True)
class TruthTable:
    """Exhaustive valuation of a formula.

    Rows run from all-true to all-false with the first variable most
    significant, i.e. ``(1,1), (1,0), (0,1), (0,0)`` for two variables.
    """

    variables: tuple[str, ...]
    bits: tuple[bool, ...]

    def rows(self) -> Iterator[tuple[tuple[bool, ...], bool]]:
        return zip(binary_rows(len(self.variables)), self.bits)

    def __len__(self) -> int:
        return len(self.bits)


def binary_rows(n: int) -> Iterator[tuple[bool, ...]]:
    return itertools.product((True, False), repeat=n)


def _check_cap(names: Sequence[str], max_vars: int) -> None:
    if len(names) > max_vars:
        raise VariableCapError(len(names), max_vars)


def truth_table(f: Formula, max_vars: int = MAX_VARS,
                names: Sequence[str] | None = None) -> TruthTable:
    names = tuple(variables(f) if names is None else names)
    _check_cap(names, max_vars)
    missing = set(variables(f)) - set(names)
    if missing:
        raise MissingVariableError(sorted(missing)[0])
    bits = tuple(_eval_bool(f, dict(zip(names, row))) for row in binary_rows(len(names)))
    return TruthTable(names, bits)


def union_variables(*fs: Formula) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for f in fs:
        for name in variables(f):
            seen.setdefault(name)
    return tuple(seen)


def equivalent(f: Formula, g: Formula, max_vars: int = MAX_VARS) -> bool:
    names = union_variables(f, g)
    _check_cap(names, max_vars)
    return all(_eval_bool(f, env) == _eval_bool(g, env) for env in _envs(names))


def is_tautology(f: Formula, max_vars: int = MAX_VARS) -> bool:
    names = variables(f)
    _check_cap(names, max_vars)
    return all(_eval_bool(f, env) for env in _envs(names))


def is_contradiction(f: Formula, max_vars: int = MAX_VARS) -> bool:
    names = variables(f)
    _check_cap(names, max_vars)
    return not any(_eval_bool(f, env) for env in _envs(names))


def _envs(names: Sequence[str]) -> Iterator[dict[str, bool]]:
    for row in binary_rows(len(names)):
        yield dict(zip(names, row))


# ---------------------------------------------------------------- grids


def grid_values(step: float) -> list[float]:
    """``0, step, 2*step, ..., 1`` with 1 always included."""
    if not 0 < step <= 1:
        raise ValueError("grid step must be in (0, 1]")
    k = int(math.floor(1.0 / step + 1e-9))
    vals = [round(i * step, 12) for i in range(k + 1)]
    if vals[-1] < 1.0:
        vals.append(1.0)
    return vals


def probabilistic_grid(names: Sequence[str], step: float) -> Iterator[dict[str, float]]:
    vals = grid_values(step)
    for combo in itertools.product(vals, repeat=len(names)):
        yield dict(zip(names, combo))


def binary_assignments(names: Sequence[str]) -> Iterator[dict[str, float]]:
    for row in binary_rows(len(names)):
        yield {n: 1.0 if b else 0.0 for n, b in zip(names, row)}
