"""Basis vectors, probabilistic truth vectors and gate application.

Truth values live in a two-dimensional real space spanned by the
orthonormal pair ``s`` (true) and ``n`` (false).  A probabilistic truth
value is ``alpha*s + (1 - alpha)*n`` with ``alpha`` in [0, 1]; the set of
such vectors is closed under every logical gate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

EXACT_TOL = 1e-12
PROB_TOL = 1e-9


class ArityError(ValueError):
    """Raised when a gate is applied to the wrong number of arguments."""


@dataclass(frozen=True)
class Basis:
    dimension: int
    s: np.ndarray
    n: np.ndarray

    def __post_init__(self) -> None:
        if self.dimension != 2:
            raise ValueError("only two-dimensional truth values are supported")
        for vec in (self.s, self.n):
            if vec.shape != (self.dimension,):
                raise ValueError(f"basis vector has shape {vec.shape}")
            vec.setflags(write=False)
        if not self.is_orthonormal():
            raise ValueError("basis vectors must be orthonormal")

    def is_orthonormal(self, tol: float = EXACT_TOL) -> bool:
        s, n = self.s, self.n
        return (abs(s @ s - 1.0) <= tol and abs(n @ n - 1.0) <= tol
                and abs(s @ n) <= tol)

    @classmethod
    def canonical(cls) -> Basis:
        return cls(2, np.array([1.0, 0.0]), np.array([0.0, 1.0]))


BASIS = Basis.canonical()


@dataclass(frozen=True)
class TruthVector:
    """A member of the probabilistic set: ``alpha*s + (1 - alpha)*n``."""

    alpha: float

    def __post_init__(self) -> None:
        a = float(self.alpha)
        if not 0.0 <= a <= 1.0:  # also rejects NaN
            raise ValueError(f"truth weight {self.alpha!r} outside [0, 1]")
        object.__setattr__(self, "alpha", a)

    @property
    def vector(self) -> np.ndarray:
        return self.alpha * BASIS.s + (1.0 - self.alpha) * BASIS.n

    @property
    def coefficients(self) -> tuple[float, float]:
        return self.alpha, 1.0 - self.alpha

    @property
    def is_binary(self) -> bool:
        return self.alpha in (0.0, 1.0)

    @classmethod
    def from_vector(cls, vec, tol: float = EXACT_TOL) -> TruthVector:
        vec = np.asarray(vec, dtype=float)
        a, b = float(BASIS.s @ vec), float(BASIS.n @ vec)
        if abs(a + b - 1.0) > tol or min(a, b) < -tol:
            raise ValueError(f"vector {vec.tolist()} is not a probabilistic truth value")
        return cls(_snap(a, tol))

    def __repr__(self) -> str:
        if self.alpha == 1.0:
            return "TruthVector(s)"
        if self.alpha == 0.0:
            return "TruthVector(n)"
        return f"TruthVector({self.alpha!r})"


TRUE = TruthVector(1.0)
FALSE = TruthVector(0.0)


def _snap(a: float, tol: float) -> float:
    # absorbs rounding only; genuine excursions are rejected by TruthVector
    if -tol <= a < 0.0:
        return 0.0
    if 1.0 < a <= 1.0 + tol:
        return 1.0
    return a


@dataclass(frozen=True)
class LogicMatrix:
    """Real matrix realising a monadic (2x2) or dyadic (2x4) gate."""

    name: str
    entries: np.ndarray
    _rows: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        m = np.array(self.entries, dtype=float)
        if m.shape not in ((2, 2), (2, 4)):
            raise ValueError(f"gate {self.name} has unsupported shape {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)
        # s- and n-rows in the canonical basis, as plain floats for the hot path
        rows = (tuple(float(x) for x in BASIS.s @ m),
                tuple(float(x) for x in BASIS.n @ m))
        object.__setattr__(self, "_rows", rows)

    @property
    def arity(self) -> int:
        return 1 if self.entries.shape[1] == 2 else 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogicMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())


def kron(a, b) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=float), np.asarray(b, dtype=float))


def apply(m: LogicMatrix, *args: TruthVector) -> TruthVector:
    """Compute ``M u`` or ``M (u ⊗ v)`` and return the result as a truth vector."""
    if len(args) != m.arity:
        raise ArityError(f"gate {m.name} takes {m.arity} argument(s), got {len(args)}")
    if m.arity == 1:
        a = args[0].alpha
        x = (a, 1.0 - a)
    else:
        a, b = args[0].alpha, args[1].alpha
        # u ⊗ v expressed in the (s⊗s, s⊗n, n⊗s, n⊗n) basis
        x = (a * b, a * (1.0 - b), (1.0 - a) * b, (1.0 - a) * (1.0 - b))
    row_s, row_n = m._rows
    phi_s = sum(r * xi for r, xi in zip(row_s, x))
    phi_n = sum(r * xi for r, xi in zip(row_n, x))
    if abs(phi_s + phi_n - 1.0) > EXACT_TOL:
        raise ValueError(f"gate {m.name} left the probabilistic set ({phi_s}, {phi_n})")
    return TruthVector(_snap(phi_s, EXACT_TOL))


def scalar_project(u: TruthVector) -> float:
    """Weight of truth, ``sᵀu``."""
    return float(BASIS.s @ u.vector)


def vec_eq(u: TruthVector, v: TruthVector, tol: float = EXACT_TOL) -> bool:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return abs(u.alpha - v.alpha) <= tol
