"""Boolean partial, cross and successive derivatives.

The symbolic derivative of ``f`` with respect to ``x`` is the exclusive-or
of its two cofactors, ``f[x:=1] ^ f[x:=0]``; the variable disappears from
the result.  The numeric derivative computes the same thing on truth
vectors, ``X(f(s) ⊗ f(n))``, with the remaining variables possibly
probabilistic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TruthVector, apply
from .evaluate import Assignment, eval_vector
from .formula import BOTTOM, TOP, Binary, Formula, Not, Var, Xor, fold, substitute, variables
from .operators import GateName, build_gate

_XOR = build_gate(GateName.X)


@dataclass(frozen=True)
class DerivativeResult:
    formula: Formula
    wrt: tuple[str, ...]
    derivative: Formula

    @property
    def simplified(self) -> Formula:
        return fold(self.derivative)


def cofactors(f: Formula, name: str) -> tuple[Formula, Formula]:
    return substitute(f, name, TOP), substitute(f, name, BOTTOM)


def diff(f: Formula, name: str) -> DerivativeResult:
    """Symbolic derivative.

    Differentiating with respect to a variable that does not occur yields
    ``f ^ f``: the expression is treated as a silent function ``C(Ku ⊗ f)``
    of that variable, which is ``⊥`` for binary inputs but not for
    probabilistic ones.
    """
    hi, lo = cofactors(f, name)
    return DerivativeResult(f, (name,), Xor(hi, lo))


def diff_literal(f: Formula, name: str) -> DerivativeResult:
    """Derivative with respect to the literal ``!name``, via ``f[name := !name]``."""
    flipped = substitute(f, name, Not(Var(name)))
    hi, lo = cofactors(flipped, name)
    return DerivativeResult(f, (name,), Xor(hi, lo))


def diff_numeric(f: Formula, name: str, others: Assignment) -> TruthVector:
    env = {k: v for k, v in others.items() if k != name}
    hi = eval_vector(f, {**env, name: 1.0})
    lo = eval_vector(f, {**env, name: 0.0})
    return apply(_XOR, hi, lo)


def cross_diff(f: Formula, first: str, second: str) -> DerivativeResult:
    """Mixed second derivative; the alphabetically-first variable is taken first."""
    if first == second:
        raise ValueError("cross derivative needs two distinct variables")
    a, b = sorted((first, second))
    inner = diff(f, a).derivative
    return DerivativeResult(f, (a, b), diff(inner, b).derivative)


def second_diff_numeric(f: Formula, name: str, others: Assignment) -> TruthVector:
    # z ⊗ z with z the first derivative: weight 2φ(1-φ)
    phi = diff_numeric(f, name, others).alpha
    return TruthVector(2.0 * phi * (1.0 - phi))


def derivative_orbit(eps0: float, k: int) -> list[float]:
    """``[ε0, ε1, ..., εk]`` under ``ε' = 2ε(1-ε)``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if not 0.0 <= eps0 <= 1.0:
        raise ValueError("ε0 must lie in [0, 1]")
    out = [float(eps0)]
    for _ in range(k):
        e = out[-1]
        out.append(2.0 * e * (1.0 - e))
    return out


def chain_rule_product(f: Formula, inner: Formula, name: str,
                       fresh: str = "chain_") -> tuple[Formula, Formula]:
    """Return ``(∂f/∂name, ∂f/∂g ∧ ∂g/∂name)`` for the inner subformula ``g``.

    ``∂f/∂g`` is obtained by abstracting every occurrence of ``inner`` as a
    fresh variable.  The two sides agree only for some formulas.
    """
    if fresh in variables(f):
        raise ValueError(f"fresh name {fresh!r} already used")
    hole = Var(fresh)

    def cut(node: Formula) -> Formula:
        if node == inner:
            return hole
        if isinstance(node, Not):
            return Not(cut(node.child))
        if isinstance(node, Binary):
            return type(node)(cut(node.left), cut(node.right))
        return node

    outer = cut(f)
    if fresh not in variables(outer):
        raise ValueError("inner formula does not occur in f")
    direct = diff(f, name).derivative
    chained = diff(outer, fresh).derivative & diff(inner, name).derivative
    return direct, chained
