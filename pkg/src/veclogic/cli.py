"""Command-line front end: ``veclogic <command> ...``.

Exit status is 0 on success, 1 for usage or input errors and 2 when a
verification performed by the command fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import analysis
from .core import PROB_TOL
from .derivative import cross_diff, diff, diff_numeric, second_diff_numeric
from .evaluate import (MAX_VARS, MissingVariableError, VariableCapError, equivalent,
                       eval_binary, eval_scalar, is_contradiction, is_tautology,
                       probabilistic_grid, truth_table)
from .formula import Formula, FormulaError, fold, parse, render, variables
from .integral import (IntegralError, IntegralVersion, general_integral,
                       particular_integral_search, verify_integral)

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def num(x: float) -> str:
    return format(float(x), ".12g")


def formula_doc(f: Formula) -> dict[str, str]:
    return {"infix": render(f), "polish": render(f, "polish")}


def _read_formula(text: str) -> Formula:
    if text == "-":
        text = sys.stdin.read()
    return parse(text)


def _parse_assignment(items: Sequence[str]) -> dict[str, float]:
    out: dict[str, float] = {}
    for item in items:
        name, sep, raw = item.partition("=")
        if not sep or not name:
            raise UsageError(f"assignment {item!r} is not of the form name=value")
        raw = raw.strip().lower()
        if raw in ("true", "false"):
            value = 1.0 if raw == "true" else 0.0
        else:
            try:
                value = float(raw)
            except ValueError:
                raise UsageError(f"value {raw!r} for {name!r} is not a number") from None
        if not 0.0 <= value <= 1.0:
            raise UsageError(f"value {value!r} for {name!r} outside [0, 1]")
        out[name.strip()] = value
    return out


# ---------------------------------------------------------------- commands
# each returns (payload, verified)


def cmd_parse(args) -> tuple[dict, bool]:
    f = _read_formula(args.formula)
    return {"formula": formula_doc(f), "variables": list(variables(f))}, True


def cmd_table(args) -> tuple[dict, bool]:
    f = _read_formula(args.formula)
    table = truth_table(f, max_vars=args.max_vars)
    rows = [[int(b) for b in row] + [int(bit)] for row, bit in table.rows()]
    return {
        "formula": formula_doc(f),
        "columns": list(table.variables) + ["value"],
        "rows": rows,
        "tautology": all(table.bits),
    }, True


def cmd_eval(args) -> tuple[dict, bool]:
    f = _read_formula(args.formula)
    a = _parse_assignment(args.assignment)
    value = eval_scalar(f, a)
    names = variables(f)
    binary = None
    if all(a[n] in (0.0, 1.0) for n in names):
        binary = int(eval_binary(f, a))
    return {
        "formula": formula_doc(f),
        "assignment": {n: num(a[n]) for n in names},
        "value": num(value),
        "binary": binary,
    }, True


def cmd_diff(args) -> tuple[dict, bool]:
    f = _read_formula(args.formula)
    a = _parse_assignment(args.assignment)
    payload: dict[str, Any] = {"formula": formula_doc(f)}
    if args.cross:
        res = cross_diff(f, args.variable, args.cross)
        other = diff(diff(f, res.wrt[1]).derivative, res.wrt[0]).derivative
        payload.update(order="cross", variables=list(res.wrt),
                       derivative=formula_doc(res.simplified),
                       raw=formula_doc(res.derivative),
                       symmetric=equivalent(res.derivative, other))
        if a:
            payload["numeric"] = num(eval_scalar(res.derivative, a))
        return payload, payload["symmetric"]
    res = diff(f, args.variable)
    if args.order == 1:
        payload.update(order=1, variables=[args.variable],
                       derivative=formula_doc(res.simplified),
                       raw=formula_doc(res.derivative))
        if a:
            payload["numeric"] = num(diff_numeric(f, args.variable, a).alpha)
        return payload, True
    twice = diff(res.derivative, args.variable)
    payload.update(order=2, variables=[args.variable],
                   derivative=formula_doc(twice.simplified),
                   raw=formula_doc(twice.derivative),
                   bottom_equivalent=is_contradiction(twice.derivative, max_vars=args.max_vars))
    if a:
        payload["numeric"] = num(second_diff_numeric(f, args.variable, a).alpha)
    return payload, True


def cmd_integrate(args) -> tuple[dict, bool]:
    f = _read_formula(args.formula)
    if args.mode == "general":
        version = IntegralVersion.from_number(args.version)
        y = general_integral(f, args.tau, version)
        ok = verify_integral(y, f, args.tau, step=args.grid_step, tol=args.tol,
                             max_vars=args.max_vars)
        return {"formula": formula_doc(f), "mode": "general", "version": version.number,
                "integral": formula_doc(y), "verified": ok}, ok
    found = particular_integral_search(f, args.tau, max_results=args.max_results,
                                       step=args.grid_step)
    return {
        "formula": formula_doc(f),
        "mode": "particular",
        "count": len(found),
        "integrals": [{"integral": formula_doc(pi.result), "condition": pi.condition,
                       "substitutions": pi.describe(), "verified": True} for pi in found],
    }, True


def _checks_doc(report: analysis.Report) -> list[dict]:
    return [{"name": c.name, "lhs": render(c.lhs), "rhs": render(c.rhs), "holds": c.holds,
             "numeric": c.numeric} for c in report]


def cmd_hierarchy(args) -> tuple[dict, bool]:
    report = analysis.hierarchy_check(numeric_step=args.grid_step)
    payload: dict[str, Any] = {"steps": _checks_doc(report)}
    ok = report.ok
    if args.aux:
        aux = analysis.hs_auxiliary_checks(numeric_step=args.grid_step)
        payload["auxiliary"] = _checks_doc(aux)
        ok = ok and aux.ok
    payload["ok"] = ok
    return payload, ok


def cmd_sensitivity(args) -> tuple[dict, bool]:
    f = _read_formula(args.formula)
    rep = analysis.sensitivity_report(f, step=args.grid_step, seed=args.seed,
                                      max_vars=min(args.max_vars, analysis.SENSITIVITY_MAX_VARS))
    return {
        "formula": formula_doc(f),
        "variables": [{
            "variable": e.variable,
            "derivative": formula_doc(fold(e.derivative)),
            "raw": formula_doc(e.derivative),
            "classification": e.classification.value,
            "binary_min": num(e.binary_min), "binary_max": num(e.binary_max),
            "prob_min": num(e.prob_min), "prob_max": num(e.prob_max),
        } for e in rep.entries],
        "collapse": None if rep.collapse is None else formula_doc(rep.collapse),
        "notes": list(rep.notes),
    }, True


def cmd_tautology(args) -> tuple[dict, bool]:
    f = _read_formula(args.formula)
    payload: dict[str, Any] = {"formula": formula_doc(f),
                               "tautology": is_tautology(f, max_vars=args.max_vars)}
    names = variables(f)
    if len(names) <= 4:
        payload["grid_min"] = num(min(eval_scalar(f, pt)
                                      for pt in probabilistic_grid(names, args.grid_step)))
    return payload, True


# ---------------------------------------------------------------- text output


def _text(command: str, p: dict) -> str:
    lines: list[str] = []
    f = p.get("formula")
    if f:
        lines.append(f"formula: {f['infix']}")
        lines.append(f"polish:  {f['polish']}")
    if command == "table":
        lines.append("  ".join(p["columns"]))
        lines.extend("  ".join(str(v).rjust(len(c)) for v, c in zip(row, p["columns"]))
                     for row in p["rows"])
    elif command == "eval":
        lines.append(f"value: {p['value']}")
    elif command == "diff":
        lines.append(f"d/d{','.join(p['variables'])} (order {p['order']}): {p['derivative']['infix']}")
        for key in ("symmetric", "bottom_equivalent", "numeric"):
            if key in p:
                lines.append(f"{key}: {p[key]}")
    elif command == "integrate":
        if p["mode"] == "general":
            lines.append(f"integral (version {p['version']}): {p['integral']['infix']}")
            lines.append(f"verified: {p['verified']}")
        else:
            lines.append(f"{p['count']} particular integral(s)")
            lines.extend(f"  {i['integral']['infix']}   [{i['condition']}]" for i in p["integrals"])
    elif command == "hierarchy":
        for c in p["steps"] + p.get("auxiliary", []):
            lines.append(f"{'ok ' if c['holds'] and c['numeric'] is not False else 'FAIL'} {c['name']}")
    elif command == "sensitivity":
        for e in p["variables"]:
            lines.append(f"{e['variable']}: {e['classification']}  d = {e['derivative']['infix']}"
                         f"  prob range [{e['prob_min']}, {e['prob_max']}]")
        lines.extend(p["notes"])
    elif command == "tautology":
        lines.append(f"tautology: {p['tautology']}")
        if "grid_min" in p:
            lines.append(f"grid minimum: {p['grid_min']}")
    elif command == "parse":
        lines.append(f"variables: {' '.join(p['variables'])}")
    return "\n".join(lines)


# ---------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a machine-readable JSON document")
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help=f"numeric tolerance (default {PROB_TOL})")
    common.add_argument("--grid-step", type=float, default=argparse.SUPPRESS,
                        help="probabilistic grid step (default 0.25)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for random sampling (default 0)")
    common.add_argument("--max-vars", type=int, default=argparse.SUPPRESS,
                        help=f"truth-table variable cap (default {MAX_VARS})")

    parser = _Parser(prog="veclogic", parents=[common],
                     description="Vector-logic derivatives and integrals of propositional formulas.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("parse", cmd_parse, "parse and echo a formula")
    p.add_argument("formula", help="formula text, or - for stdin")
    p = add("table", cmd_table, "print the truth table")
    p.add_argument("formula")
    p = add("eval", cmd_eval, "scalar projection under an assignment")
    p.add_argument("formula")
    p.add_argument("assignment", nargs="*", metavar="name=value")
    p = add("diff", cmd_diff, "Boolean derivative")
    p.add_argument("formula")
    p.add_argument("variable")
    p.add_argument("assignment", nargs="*", metavar="name=value")
    p.add_argument("--order", type=int, choices=(1, 2), default=1)
    p.add_argument("--cross", metavar="VAR2", help="mixed derivative with respect to VAR2")
    p = add("integrate", cmd_integrate, "general or particular integrals")
    p.add_argument("formula")
    p.add_argument("tau", help="fresh integration variable")
    p.add_argument("--mode", choices=("general", "particular"), default="general")
    p.add_argument("--version", type=int, default=1, choices=(1, 2, 3, 4))
    p.add_argument("--max-results", type=int, default=None)
    p = add("hierarchy", cmd_hierarchy, "verify the HS -> MP -> EM -> 1 hierarchy")
    p.add_argument("--aux", action="store_true", help="include the auxiliary HS/ST checks")
    p = add("sensitivity", cmd_sensitivity, "per-variable sensitivity report")
    p.add_argument("formula")
    p = add("tautology", cmd_tautology, "tautology test and probabilistic lower bound")
    p.add_argument("formula")
    return parser


def _error_doc(exc: Exception) -> dict:
    if isinstance(exc, FormulaError):
        err = {"kind": exc.kind, "message": exc.message}
        if exc.line is not None:
            err["position"] = {"line": exc.line, "column": exc.column}
        return err
    if isinstance(exc, MissingVariableError):
        return {"kind": "missing_variable", "message": str(exc), "variable": exc.name}
    if isinstance(exc, VariableCapError):
        return {"kind": "variable_cap", "message": str(exc)}
    if isinstance(exc, IntegralError):
        return {"kind": "integral", "message": str(exc)}
    return {"kind": "usage", "message": str(exc)}


def _command_echo(args) -> dict:
    skip = {"func", "json", "command"}
    return {"name": args.command,
            "args": {k: num(v) if isinstance(v, float) else v
                     for k, v in sorted(vars(args).items()) if k not in skip}}


DEFAULTS = {"json": False, "tol": PROB_TOL, "grid_step": 0.25, "seed": 0, "max_vars": MAX_VARS}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    # common flags may appear before or after the subcommand
    for key, value in DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        payload, verified = args.func(args)
    except (FormulaError, MissingVariableError, VariableCapError, IntegralError,
            UsageError, ValueError) as exc:
        err = _error_doc(exc)
        if args.json:
            doc = {"command": _command_echo(args), "status": "error", "error": err}
            print(json.dumps(doc, indent=2, ensure_ascii=False))
        else:
            print(f"error ({err['kind']}): {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        doc = {"command": _command_echo(args), "status": "ok", "result": payload}
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(_text(args.command, payload))
    return EXIT_OK if verified else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
