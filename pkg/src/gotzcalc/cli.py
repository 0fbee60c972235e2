"""Batch command-line front end.

Every subcommand wraps one library operation or pipeline.  Polynomials on the
command line use the comma-separated constant-first coefficient format of
:mod:`gotzcalc.polys` ("2,3" is 3d + 2); module files are YAML documents

    vars: 2
    components:
    - twist: 0
      gens: [x0^2, x0 x1]

Output goes to stdout; ``--format yaml`` emits one structured document per
invocation with the inputs echoed, ``--format human`` (the default) prints a
terse line.  Library errors exit 1 with a diagnostic naming the error class
on stderr; usage errors exit 2.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import asdict
from fractions import Fraction

import yaml

from . import chern as chern_ops
from . import monomial as monomial_ops
from . import quotdim
from .errors import GotzcalcError
from .gotzmann import (
    gotzmann_hilbert_function,
    gotzmann_rep,
    rep_to_poly,
)
from .monomial import MonomialModule
from .polys import RationalPoly


def _plain(value):
    """Map result values onto YAML-safe plain types, exactly and readably."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, RationalPoly):
        return value.to_text()
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


def _load_module(path: str) -> MonomialModule:
    with open(path, "r", encoding="utf-8") as handle:
        doc = yaml.safe_load(handle)
    return MonomialModule.from_dict(doc)


def _poly(text: str) -> RationalPoly:
    try:
        return RationalPoly.from_text(text)
    except ValueError as exc:
        raise GotzcalcError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gotzcalc",
        description="Exact Gotzmann/Macaulay calculus for Hilbert polynomials, "
        "monomial modules, Quot-scheme dimensions and Chern bounds.",
    )
    parser.add_argument(
        "--format",
        choices=("human", "yaml"),
        default="human",
        help="human: terse line; yaml: structured document with inputs echoed",
    )
    top = parser.add_subparsers(dest="group", required=True)

    mac = top.add_parser("macaulay", help="Macaulay representations and transforms")
    mac_sub = mac.add_subparsers(dest="action", required=True)
    for name in ("rep", "transform"):
        sub = mac_sub.add_parser(name)
        sub.add_argument("a", type=int)
        sub.add_argument("d", type=int)

    got = top.add_parser("gotzmann", help="Gotzmann representations of polynomials")
    got_sub = got.add_subparsers(dest="action", required=True)
    got_sub.add_parser("rep").add_argument("poly")
    got_sub.add_parser("number").add_argument("poly")
    hf = got_sub.add_parser("hf")
    hf.add_argument("poly")
    hf.add_argument("--upto", type=int, required=True)

    hilb = top.add_parser("hilbert", help="Hilbert data of a monomial module file")
    hilb.add_argument("module_file")
    mode = hilb.add_mutually_exclusive_group()
    mode.add_argument("--polynomial", action="store_true")
    mode.add_argument("--function", nargs=2, type=int, metavar=("D0", "D1"))

    top.add_parser("lexify", help="componentwise lexification").add_argument(
        "module_file"
    )
    top.add_parser(
        "regcheck", help="Gotzmann regularity check for a module file"
    ).add_argument("module_file")

    quot = top.add_parser("quot", help="Quot-scheme dimension data")
    quot_sub = quot.add_subparsers(dest="action", required=True)
    p1 = quot_sub.add_parser("p1")
    p1.add_argument("k", type=int)
    p1.add_argument("m", type=int)
    embed = quot_sub.add_parser("embed")
    embed.add_argument("poly")
    embed.add_argument("n", type=int)
    embed.add_argument("r", type=int)
    embed.add_argument("--level", type=int, default=None)
    lemma = quot_sub.add_parser("lemma")
    lemma.add_argument("m_count", type=int)
    lemma.add_argument("n_sum", type=int)

    ch = top.add_parser("chern", help="rank-2 on P^3 Chern data and bounds")
    ch_sub = ch.add_subparsers(dest="action", required=True)
    ch_sub.add_parser("from-hp").add_argument("poly")
    tohp = ch_sub.add_parser("to-hp")
    for name in ("c1", "c2", "c3"):
        tohp.add_argument(name, type=int)
    ch_sub.add_parser("bounds").add_argument("c1", type=int)

    return parser


def _dispatch(args) -> tuple[str, dict, dict, str]:
    """Returns (command, echoed inputs, result document, human line)."""
    if args.group == "macaulay":
        command = f"macaulay {args.action}"
        inputs = {"a": args.a, "d": args.d}
        from .macaulay import macaulay_rep, macaulay_transform

        if args.action == "rep":
            rep = macaulay_rep(args.a, args.d)
            result = {"tops": list(rep.tops), "bottoms": list(rep.bottoms)}
            human = " + ".join(
                f"binom({k},{j})" for k, j in zip(rep.tops, rep.bottoms)
            ) or "0"
        else:
            value = macaulay_transform(args.a, args.d)
            result = {"transform": value}
            human = str(value)
        return command, inputs, result, human

    if args.group == "gotzmann":
        command = f"gotzmann {args.action}"
        inputs = {"poly": args.poly}
        P = _poly(args.poly)
        if args.action == "rep":
            rep = gotzmann_rep(P)
            result = {"rep": list(rep.entries), "s": rep.s}
            human = f"[{','.join(str(a) for a in rep.entries)}]"
        elif args.action == "number":
            s = gotzmann_rep(P).s
            result = {"gotzmann_number": s}
            human = str(s)
        else:
            inputs["upto"] = args.upto
            rep = gotzmann_rep(P)
            values = [gotzmann_hilbert_function(rep, d) for d in range(args.upto + 1)]
            result = {"s": rep.s, "values": values}
            human = " ".join(str(v) for v in values)
        return command, inputs, result, human

    if args.group in ("hilbert", "lexify", "regcheck"):
        mod = _load_module(args.module_file)
        inputs = {"module_file": args.module_file, "module": mod.to_dict()}
        if args.group == "hilbert":
            if args.function:
                d0, d1 = args.function
                command = "hilbert function"
                inputs["range"] = [d0, d1]
                values = {d: monomial_ops.hf_enumerate(mod, d) for d in range(d0, d1 + 1)}
                result = {"values": values}
                human = " ".join(str(v) for v in values.values())
            else:
                command = "hilbert polynomial"
                P = monomial_ops.hilbert_polynomial(mod)
                result = {"polynomial": P}
                human = P.to_text()
        elif args.group == "lexify":
            command = "lexify"
            out = monomial_ops.lexify(mod)
            result = {"module": out.to_dict()}
            human = yaml.safe_dump(out.to_dict(), sort_keys=False).strip()
        else:
            command = "regcheck"
            report = monomial_ops.check_gotzmann_regularity(mod)
            result = asdict(report)
            result["component_regs"] = list(report.component_regs)
            human = f"s={report.s} reg_proxy={report.reg_proxy} ok={str(report.ok).lower()}"
        return command, inputs, result, human

    if args.group == "quot":
        command = f"quot {args.action}"
        if args.action == "p1":
            inputs = {"k": args.k, "m": args.m}
            s = quotdim.gotzmann_number_p1(args.k, args.m)
            result = {"gotzmann_number": s}
            human = str(s)
        elif args.action == "embed":
            inputs = {"poly": args.poly, "n": args.n, "r": args.r}
            if args.level is not None:
                inputs["level"] = args.level
            emb = quotdim.quot_embedding(_poly(args.poly), args.n, args.r, args.level)
            result = asdict(emb)
            human = (
                f"s={emb.s} Gr({emb.ambient_dim},{emb.codim}) "
                f"next codim {emb.next_codim} in dim {emb.next_ambient_dim}"
            )
        else:
            inputs = {"m_count": args.m_count, "n_sum": args.n_sum}
            res = quotdim.min_aut_dim(args.m_count, args.n_sum)
            result = {
                "min": res.minimum,
                "argmin": {int(k): v for k, v in sorted(res.argmin.items())},
                "unique": res.unique,
            }
            human = f"min={res.minimum} argmin={result['argmin']} unique={str(res.unique).lower()}"
        return command, inputs, result, human

    if args.group == "chern":
        command = f"chern {args.action}"
        if args.action == "from-hp":
            inputs = {"poly": args.poly}
            P = _poly(args.poly)
            data = chern_ops.chern_from_hp(P)
            bound = chern_ops.c2_upper_bound(data.c1) if data.c1 >= 0 else None
            chi12 = chern_ops.chi12_bound(data.c1) if data.c1 >= 4 else None
            result = {
                "c1": data.c1,
                "c2": data.c2,
                "c3": data.c3,
                "c2_bound": bound,
                "bound_ok": None if bound is None else data.c2 <= bound,
                "chi12_bound": chi12,
                "chi12_ok": None if chi12 is None else data.c2 <= chi12,
            }
            human = (
                f"c1={data.c1} c2={data.c2} c3={data.c3} "
                f"bound_ok={_tf(result['bound_ok'])} chi12_ok={_tf(result['chi12_ok'])}"
            )
        elif args.action == "to-hp":
            inputs = {"c1": args.c1, "c2": args.c2, "c3": args.c3}
            P = chern_ops.hp_from_chern(chern_ops.ChernData(args.c1, args.c2, args.c3))
            result = {"polynomial": P}
            human = P.to_text()
        else:
            inputs = {"c1": args.c1}
            bound = chern_ops.c2_upper_bound(args.c1)
            chi12 = chern_ops.chi12_bound(args.c1) if args.c1 >= 4 else None
            result = {"c2_bound": bound, "chi12_bound": chi12}
            human = f"c2_bound={bound} chi12_bound={chi12 if chi12 is not None else 'n/a'}"
        return command, inputs, result, human

    raise AssertionError(f"unhandled group {args.group}")


def _tf(value) -> str:
    return "n/a" if value is None else str(value).lower()


def run(argv, stdout=None, stderr=None) -> int:
    """Parse argv and execute; returns the exit status (0 ok, 1 domain error)."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        command, inputs, result, human = _dispatch(args)
    except GotzcalcError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    except (OSError, ValueError, yaml.YAMLError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if args.format == "yaml":
        doc = {"command": command, "input": _plain(inputs), "result": _plain(result)}
        stdout.write(yaml.safe_dump(doc, sort_keys=False, default_flow_style=False))
    else:
        print(human, file=stdout)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
