"""Command-line front end.

Every command prints its result on stdout.  Domain errors are reported on
stderr as ``ErrorName: message`` with exit status 1; malformed input (bad
JSON, bad flags) exits with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Poly, RatFunc
from .eqring import EqClass
from .errors import DomainError
from .exprlang import ExprError


class InputError(Exception):
    """Malformed command-line input; maps to exit status 2."""


def _load_json(text: str):
    """Inline JSON, or ``@path`` to read it from a file."""
    try:
        if text.startswith("@"):
            with open(text[1:], encoding="utf-8") as fh:
                return json.load(fh)
        return json.loads(text)
    except OSError as exc:
        raise InputError(f"cannot read {text[1:]}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg} at position {exc.pos}") from None


def _parse(kind, text: str):
    try:
        return kind.from_json(_load_json(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed {kind.__name__}: {exc}") from None


def _render(value, fmt: str) -> str:
    if value is None:
        return "null" if fmt == "json" else "unavailable"
    if fmt == "json":
        if isinstance(value, (EqClass, RatFunc, Poly)):
            return json.dumps(value.to_json())
        return json.dumps(value)
    if isinstance(value, (EqClass, RatFunc)):
        return value.to_str(latex=fmt == "latex")
    if isinstance(value, Poly):
        return value.to_str(latex=fmt == "latex")
    return str(value)


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")


# --- commands ------------------------------------------------------------------
def cmd_eq(args) -> int:
    a = _parse(EqClass, args.a)
    op = args.op
    if op in ("add", "sub", "mul", "divide", "inner"):
        if args.b is None:
            raise InputError(f"operation {op} needs --b")
        b = _parse(EqClass, args.b)
        result = {
            "add": lambda: a + b,
            "sub": lambda: a - b,
            "mul": lambda: a * b,
            "divide": lambda: a.divide(b),
            "inner": lambda: a.inner(b),
        }[op]()
    elif op == "induce":
        result = a.induce(_need(args.target, "--target"))
    elif op == "restrict":
        result = a.restrict(_need(args.index, "--index"))
    elif op == "quotient":
        result = a.quotient_class(args.index if args.index is not None else 1)
    elif op == "plain":
        result = a.plain()
    elif op == "fixed":
        result = a.fixed_part()
    else:  # "show": canonicalize and echo
        result = a
    print(_render(result, args.format))
    return 0


def _need(value, flag: str):
    if value is None:
        raise InputError(f"this operation needs {flag}")
    return value


def cmd_per(args) -> int:
    from .perops import per

    xi = _parse(EqClass, args.class_json)
    if xi.order != args.base_order:
        raise InputError(f"class has order {xi.order} but --base-order is {args.base_order}")
    print(_render(per(xi, args.extension), args.format))
    return 0


def cmd_conj(args) -> int:
    from .varieties import OrbitBlocks, conj_quotient

    if args.blocks is not None:
        blocks = _parse(OrbitBlocks, args.blocks)
    else:
        if args.order is None or not args.block:
            raise InputError("give --blocks JSON or --order with one or more --block LAMBDA:ELL")
        pairs = []
        for spec in args.block:
            try:
                lam, ell = (int(x) for x in spec.split(":"))
            except ValueError:
                raise InputError(f"block {spec!r} is not of the form LAMBDA:ELL") from None
            pairs.append((lam, ell))
        try:
            blocks = OrbitBlocks(args.order, tuple(pairs))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    print(_render(conj_quotient(blocks), args.format))
    return 0


def cmd_vclass(args) -> int:
    from .varieties import RankProfile, vclass

    prof = _parse(RankProfile, args.profile)
    cls = vclass(prof)
    if args.at is not None:
        print(_render(cls(args.at), "text" if args.format == "latex" else args.format))
    else:
        print(_render(cls, args.format))
    return 0


def cmd_torusknot(args) -> int:
    from .torusknot import assemble, load_baseline

    baseline = None
    if args.sl4_baseline:
        try:
            baseline = load_baseline(args.sl4_baseline)
        except OSError as exc:
            raise InputError(f"cannot read {args.sl4_baseline}: {exc.strerror}") from None
        except (json.JSONDecodeError, ValueError) as exc:
            raise InputError(f"malformed baseline: {exc}") from None
    rep = assemble(args.n, args.m, args.rank, baseline)
    fmt = args.format
    if fmt == "json":
        data = rep.to_json()
        if args.check:
            data["checks"] = [{"anchor": c.anchor, "passed": c.passed} for c in _checks(args, baseline, rep)]
        print(json.dumps(data, indent=2))
        return _check_status(data.get("checks"))
    print(f"R_irr = {_render(rep.repMotive, fmt)}")
    if args.rank > 1:
        print(f"M_irr = {_render(rep.charMotive, fmt)}")
        print(f"delta = {_render(rep.deltaVsSL, fmt)}")
        print(f"equivariant = {_render(rep.rIrrEquivariant, fmt)}")
        if rep.swapped:
            print(f"note: computed as ({rep.m}, {rep.n}) so that the divisible parameter comes first")
        if rep.conjectural:
            print("note: the character-variety class depends on an unproven quotient formula in rank 4")
        for note in rep.notes:
            print(f"note: {note}")
    if args.check:
        results = _checks(args, baseline, rep)
        for c in results:
            print(c.line())
        return _check_status([{"passed": c.passed} for c in results])
    return 0


def _checks(args, baseline, rep):
    from .torusknot.checks import run_checks

    return run_checks(args.n, args.m, args.rank, baseline, rep)


def _check_status(checks) -> int:
    if checks and not all(c["passed"] for c in checks):
        failed = sum(not c["passed"] for c in checks)
        print(f"CheckFailed: {failed} of {len(checks)} checks failed", file=sys.stderr)
        return 1
    return 0


def cmd_oracle(args) -> int:
    from . import oracle
    from .varieties import RankProfile, vclass

    if args.oracle_cmd == "perm":
        mult = oracle.perm_character_bruteforce(oracle.FiniteActionSpec(args.h, args.N))
        result = EqClass(args.h * args.N, mult)
        print(_render(result, args.format))
    elif args.oracle_cmd == "count":
        prof = _parse(RankProfile, args.profile)
        print(oracle.point_count(prof, args.prime))
    else:  # census
        rows = []
        for prof, cnt in sorted(oracle.realizable_profiles(args.n, args.m, args.prime).items(), key=lambda kv: oracle.profile_key(kv[0])):
            predicted = vclass(prof)(args.prime)
            rows.append({"ranks": list(oracle.profile_key(prof)), "count": cnt, "vclass": int(predicted), "ok": predicted == cnt})
        if args.format == "json":
            print(json.dumps(rows))
        else:
            for row in rows:
                print(f"{'PASS' if row['ok'] else 'FAIL'} ranks={row['ranks']} count={row['count']} vclass={row['vclass']}")
        if not all(row["ok"] for row in rows):
            return 1
    return 0


# --- parser ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eqmotive", description="Exact classes of varieties with cyclic group actions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eq", help="arithmetic on equivariant classes")
    p.add_argument("--op", required=True, choices=("show", "add", "sub", "mul", "divide", "inner", "induce", "restrict", "quotient", "plain", "fixed"))
    p.add_argument("--a", required=True, help="class JSON (inline or @file)")
    p.add_argument("--b", help="second class JSON")
    p.add_argument("--target", type=int, help="target group order for induce")
    p.add_argument("--index", type=int, help="subgroup index for restrict and quotient")
    _add_format(p)
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("per", help="power with the permutation-of-factors action")
    p.add_argument("--base-order", type=int, required=True)
    p.add_argument("--extension", type=int, required=True)
    p.add_argument("--class", dest="class_json", required=True, help="class JSON (inline or @file)")
    _add_format(p)
    p.set_defaults(func=cmd_per)

    p = sub.add_parser("conj", help="equivariant class of a conjugacy-class quotient")
    p.add_argument("--blocks", help='OrbitBlocks JSON, e.g. {"order":2,"blocks":[{"lambda":1,"ell":2}]}')
    p.add_argument("--order", type=int)
    p.add_argument("--block", action="append", help="LAMBDA:ELL (repeatable)")
    _add_format(p)
    p.set_defaults(func=cmd_conj)

    p = sub.add_parser("vclass", help="class of a rank-profile matrix variety")
    p.add_argument("--profile", required=True, help="RankProfile JSON (inline or @file)")
    p.add_argument("--at", type=int, help="evaluate at this integer")
    _add_format(p)
    p.set_defaults(func=cmd_vclass)

    p = sub.add_parser("torusknot", help="GL_r representation and character varieties of torus knots")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--sl4-baseline", help="JSON polynomial for the SL_4 character variety class")
    p.add_argument("--check", action="store_true", help="run closed-form and structural checks")
    _add_format(p)
    p.set_defaults(func=cmd_torusknot)

    p = sub.add_parser("oracle", help="brute-force validators")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    o = osub.add_parser("perm", help="permutation character by enumeration")
    o.add_argument("--h", type=int, required=True)
    o.add_argument("--N", type=int, required=True)
    _add_format(o)
    o = osub.add_parser("count", help="count matrices with a rank profile")
    o.add_argument("--profile", required=True)
    o.add_argument("--prime", type=int, required=True)
    _add_format(o)
    o = osub.add_parser("census", help="compare vclass with counts for all realizable profiles")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--m", type=int, required=True)
    o.add_argument("--prime", type=int, required=True)
    _add_format(o)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"{exc.name}: {exc}", file=sys.stderr)
        return 1
    except (InputError, ExprError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # constructor validation (bad orders, out-of-range parameters)
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
