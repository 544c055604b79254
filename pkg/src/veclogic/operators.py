"""The named monadic and dyadic gate matrices and their operator identities.

Every gate is assembled from outer products of basis vectors, e.g.
``N = n sᵀ + s nᵀ`` or ``C = s(s⊗s)ᵀ + n(s⊗n)ᵀ + n(n⊗s)ᵀ + n(n⊗n)ᵀ``, so
the truth tables are produced by the construction rather than typed in.
"""

from __future__ import annotations

import enum
from typing import Callable

import numpy as np

from .core import BASIS, EXACT_TOL, LogicMatrix, kron


class GateName(str, enum.Enum):
    I = "I"
    N = "N"
    K = "K"
    M = "M"
    C = "C"
    D = "D"
    L = "L"
    S = "S"
    P = "P"
    E = "E"
    X = "X"

    @property
    def arity(self) -> int:
        return 1 if self.value in "INKM" else 2


MONADIC = (GateName.I, GateName.N, GateName.K, GateName.M)
DYADIC = tuple(g for g in GateName if g.arity == 2)


def _outer(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.outer(a, b)


def _monadic(on_s: np.ndarray, on_n: np.ndarray) -> np.ndarray:
    s, n = BASIS.s, BASIS.n
    return _outer(on_s, s) + _outer(on_n, n)


def _dyadic(ss: np.ndarray, sn: np.ndarray, ns: np.ndarray, nn: np.ndarray) -> np.ndarray:
    s, n = BASIS.s, BASIS.n
    return (_outer(ss, kron(s, s)) + _outer(sn, kron(s, n))
            + _outer(ns, kron(n, s)) + _outer(nn, kron(n, n)))


def _build_all() -> dict[GateName, LogicMatrix]:
    s, n = BASIS.s, BASIS.n
    raw = {
        GateName.I: _monadic(s, n),
        GateName.N: _monadic(n, s),
        GateName.K: _monadic(s, s),
        GateName.M: _monadic(n, n),
        GateName.C: _dyadic(s, n, n, n),
        GateName.D: _dyadic(s, s, s, n),
        GateName.L: _dyadic(s, n, s, s),
        GateName.S: _dyadic(n, s, s, s),
        GateName.P: _dyadic(n, n, n, s),
        GateName.E: _dyadic(s, n, n, s),
        GateName.X: _dyadic(n, s, s, n),
    }
    return {name: LogicMatrix(name.value, m) for name, m in raw.items()}


_GATES = _build_all()


def build_gate(name: GateName | str) -> LogicMatrix:
    return _GATES[GateName(name)]


def _m(name: str) -> np.ndarray:
    return _GATES[GateName(name)].entries


def _identities() -> dict[str, tuple[Callable[[], np.ndarray], Callable[[], np.ndarray]]]:
    I, N, C, D, L, S, P, E, X = (_m(g) for g in "INCDLSPEX")
    return {
        "C=ND(NxN)": (lambda: C, lambda: N @ D @ kron(N, N)),
        "L=D(NxI)": (lambda: L, lambda: D @ kron(N, I)),
        "S=NC": (lambda: S, lambda: N @ C),
        "P=ND": (lambda: P, lambda: N @ D),
        "X=NE": (lambda: X, lambda: N @ E),
        "N^2=I": (lambda: N @ N, lambda: I),
        "X=X(NxN)": (lambda: X, lambda: X @ kron(N, N)),
        "L(IxL)=L(CxI)": (lambda: L @ kron(I, L), lambda: L @ kron(C, I)),
        "NL(IxD)=C(IxND)": (lambda: N @ L @ kron(I, D), lambda: C @ kron(I, N @ D)),
    }


IDENTITIES = _identities()


def _normalize(name: str) -> str:
    return (name.replace(" ", "").replace("⊗", "x").replace("²", "^2")
            .replace("**2", "^2"))


def identity_sides(name: str) -> tuple[np.ndarray, np.ndarray]:
    key = _normalize(name)
    if key not in IDENTITIES:
        raise KeyError(f"unknown operator identity {name!r}")
    lhs, rhs = IDENTITIES[key]
    return lhs(), rhs()


def check_identity(name: str, tol: float = EXACT_TOL) -> bool:
    """Check a registered identity between gate matrices, entrywise."""
    lhs, rhs = identity_sides(name)
    return lhs.shape == rhs.shape and bool(np.all(np.abs(lhs - rhs) <= tol))
