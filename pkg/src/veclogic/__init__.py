"""Differential and integral calculus for propositional formulas in vector logic."""

from .core import FALSE, TRUE, LogicMatrix, TruthVector, apply, kron, scalar_project, vec_eq
from .derivative import (DerivativeResult, cross_diff, derivative_orbit, diff, diff_numeric,
                         second_diff_numeric)
from .evaluate import (TruthTable, equivalent, eval_binary, eval_scalar, eval_vector,
                       is_tautology, truth_table)
from .formula import (BOTTOM, TOP, And, Const, Equiv, Formula, Impl, Nand, Nor, Not, Or, Var,
                      Xor, parse, render, substitute, variables)
from .integral import (IntegralVersion, general_integral, particular_integral_search,
                       verify_integral)
from .operators import GateName, build_gate, check_identity

__version__ = "0.1.0"
