"""Command line front end.

Expression grammar:  sig ("x" | "⊗" sig)* ("->" sig)?   with
sig = "(" int ("," int)* ")".  Exit codes: 0 success, 1 usage error,
2 expression/parse error, 3 failed internal self-check.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations_with_replacement, product as iproduct

from . import invariants, weyl_calculus
from .cg_coefficients import cg_coefficient
from .contragredient import lowest_weight_vector_check
from .errors import (
    CalculusError,
    ExpressionSyntaxError,
    MixedSigns,
    NotDominant,
    SelfCheckError,
)
from .invariants import TensorProblem, invariant_basis
from .polynomials import MultiPoly, zvar
from .signatures import normalize


def _boff(text: str, i: int) -> int:
    """Byte offset of character index i."""
    return len(text[:i].encode("utf-8"))


def parse_expression(text: str):
    """Parse a product expression; returns (factors, target-or-None)."""
    i = 0
    n = len(text)

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def parse_sig():
        nonlocal i
        skip_ws()
        if i >= n or text[i] != "(":
            raise ExpressionSyntaxError("expected '('", _boff(text, i))
        i += 1
        skip_ws()
        if i < n and text[i] == ")":
            i += 1
            return normalize(())
        entries = []
        while True:
            skip_ws()
            j = i
            if i < n and text[i] in "+-":
                i += 1
            while i < n and text[i].isdigit():
                i += 1
            if not text[j:i].lstrip("+-"):
                raise ExpressionSyntaxError("expected integer", _boff(text, j))
            entries.append(int(text[j:i]))
            skip_ws()
            if i < n and text[i] == ",":
                i += 1
                continue
            if i < n and text[i] == ")":
                i += 1
                return normalize(entries)
            raise ExpressionSyntaxError("expected ',' or ')'", _boff(text, i))

    factors = [parse_sig()]
    target = None
    while True:
        skip_ws()
        if i >= n:
            break
        if text[i] in "xX⊗":
            i += 1
            factors.append(parse_sig())
            continue
        if text.startswith("->", i):
            i += 2
            target = parse_sig()
            skip_ws()
            if i < n:
                raise ExpressionSyntaxError("unexpected trailing input", _boff(text, i))
            break
        raise ExpressionSyntaxError("expected 'x', '⊗' or '->'", _boff(text, i))
    return factors, target


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    p = _Parser(prog="tameprod", description="Tensor product calculus for unitary groups")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="decompose a tensor product at rank k")
    d.add_argument("expr")
    d.add_argument("--k", type=int, default=None)
    d.add_argument("--json", action="store_true")

    m = sub.add_parser("multiplicity", help="stable multiplicity of the target")
    m.add_argument("expr")
    m.add_argument("--json", action="store_true")

    s = sub.add_parser("stabilize", help="least rank at which the spectrum stabilizes")
    s.add_argument("expr")
    s.add_argument("--json", action="store_true")

    v = sub.add_parser("invariants", help="basis of covariants for the target")
    v.add_argument("expr")
    v.add_argument("--k", type=int, default=None)
    v.add_argument("--json", action="store_true")
    v.add_argument("--show-polynomials", action="store_true")

    c = sub.add_parser("cgc", help="Clebsch-Gordan coefficient table")
    c.add_argument("expr")
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--json", action="store_true")
    return p


def _require_target(target):
    if target is None:
        raise _UsageError("this command needs a '-> (target)' clause")


def _mono_label(poly: MultiPoly) -> str:
    return str(poly)


def _factor_state_monomials(problem: TensorProblem):
    """Per factor, the monomial spanning set with the factor's row degrees,
    in columns 1..max(1, q)."""
    cmax = max(1, problem.q)
    per_factor = []
    for i, f in enumerate(problem.factors):
        off = problem.row_offsets[i]
        row_choices = []
        for j, deg in enumerate(f.entries, start=1):
            monos = []
            for combo in combinations_with_replacement(range(1, cmax + 1), deg):
                counts: dict = {}
                for c in combo:
                    v = zvar(off + j, c)
                    counts[v] = counts.get(v, 0) + 1
                monos.append(tuple(sorted(counts.items())))
            row_choices.append(monos)
        states = []
        for pick in iproduct(*row_choices):
            merged: dict = {}
            for mono in pick:
                for v, e in mono:
                    merged[v] = merged.get(v, 0) + e
            states.append(MultiPoly({tuple(sorted(merged.items())): 1}))
        per_factor.append(states)
    return per_factor


def _cmd_decompose(args):
    factors, target = parse_expression(args.expr)
    if target is not None:
        raise _UsageError("decompose takes no target; use multiplicity")
    k = args.k if args.k is not None else sum(f.length for f in factors)
    spec = weyl_calculus.tensor_decompose(factors, k)
    if args.json:
        print(json.dumps(spec.to_json_obj()))
    else:
        print(f"k = {k}")
        print(spec.text(pad_to=k))
    return 0


def _cmd_multiplicity(args):
    factors, target = parse_expression(args.expr)
    _require_target(target)
    m = weyl_calculus.multiplicity(factors, target)
    print(json.dumps({"multiplicity": m}) if args.json else m)
    return 0


def _cmd_stabilize(args):
    factors, target = parse_expression(args.expr)
    if target is not None:
        raise _UsageError("stabilize takes no target")
    k = weyl_calculus.stabilization_index(factors)
    print(json.dumps({"stabilization_index": k}) if args.json else k)
    return 0


def _cmd_invariants(args):
    factors, target = parse_expression(args.expr)
    _require_target(target)
    problem = TensorProblem.build(factors, target, k=args.k)
    basis = invariant_basis(problem)
    obj = basis.to_json_obj()
    kx = max(1, problem.q)
    if args.show_polynomials:
        obj["polynomials"] = [str(basis.element(i, kx)) for i in range(basis.dimension)]
    if args.json:
        print(json.dumps(obj))
        return 0
    print(f"dimension: {basis.dimension}")
    print("monomials:")
    for j, m in enumerate(basis.monomials):
        print(f"  [{j}] {m.label()}")
    print("basis:")
    for i in range(basis.dimension):
        print(f"  I{i + 1} = {basis.combination_label(i)}")
    if args.show_polynomials:
        print(f"expanded at k = {kx}:")
        for i, text in enumerate(obj["polynomials"]):
            print(f"  I{i + 1} = {text}")
    return 0


def _cmd_cgc(args):
    factors, target = parse_expression(args.expr)
    _require_target(target)
    problem = TensorProblem.build(factors, target, k=args.k)
    basis = invariant_basis(problem)
    kx = max(1, problem.q)
    f_star = lowest_weight_vector_check(target, problem.q)
    per_factor = _factor_state_monomials(problem)
    rows = []
    for i in range(basis.dimension):
        inv = basis.element(i, kx)
        for pick in iproduct(*per_factor):
            value = cg_coefficient(problem, inv, list(pick), f_star)
            rows.append(
                {
                    "invariant": i + 1,
                    "state": [_mono_label(s) for s in pick],
                    "value": str(value),
                }
            )
    if args.json:
        print(json.dumps(rows))
        return 0
    print(f"dual state: {f_star}")
    for r in rows:
        print(f"I{r['invariant']} | {' ; '.join(r['state'])} | {r['value']}")
    return 0


_COMMANDS = {
    "decompose": _cmd_decompose,
    "multiplicity": _cmd_multiplicity,
    "stabilize": _cmd_stabilize,
    "invariants": _cmd_invariants,
    "cgc": _cmd_cgc,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except (ExpressionSyntaxError, NotDominant, MixedSigns) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except SelfCheckError as e:
        print(f"self-check failed: {e}", file=sys.stderr)
        return 3
    except CalculusError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
