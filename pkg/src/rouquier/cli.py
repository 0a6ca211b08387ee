"""Command line interface: rouquier <command> <group> [options].

Exit status: 0 on success, 1 on a domain error (unknown group, bad
parameters, failed validation, p not dividing |W|), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from importlib import resources
from typing import Optional, Sequence

from . import blockengine as be
from .grouprepo import (
    DATA_DIR_ENV,
    GroupData,
    ParseError,
    UnknownGroup,
    ValidationError,
    InconsistentLink,
    dump_schur_row,
    load_group,
    validation_report,
)
from .numfield import NumFieldError

__all__ = ["main", "parse_params", "BadParameterShape", "NonCyclotomicParameter"]


class BadParameterShape(ValueError):
    pass


class NonCyclotomicParameter(ValueError):
    pass


class NotCertified(RuntimeError):
    pass


# -- Hecke parameter grammar ------------------------------------------------------

_FACTOR = re.compile(
    r"""^(?:
        (?P<int>[+-]?\d+)
      | E\(?(?P<e>\d+)\)?(?:\^\(?(?P<ej>[+-]?\d+)\)?)?
      | x(?:\^\(?(?P<xk>[+-]?\d+)\)?)?
    )$""",
    re.X,
)


def parse_term(text: str) -> tuple[Fraction, int]:
    """'E3^2*x^2' -> (2/3, 2): the parameter exp(2 pi i r) * x^k as (r, k)."""
    t = text.strip().replace(" ", "")
    if not t:
        raise BadParameterShape("empty parameter")
    r, k = Fraction(0), 0
    if t[0] == "-":
        r, t = Fraction(1, 2), t[1:]
    for f in t.split("*"):
        m = _FACTOR.match(f)
        if not m:
            raise NonCyclotomicParameter(f"{text!r} is not a root of unity times a power of x")
        if m.group("int") is not None:
            v = int(m.group("int"))
            if v not in (1, -1):
                raise NonCyclotomicParameter(f"{text!r}: coefficient {v} is not a root of unity")
            if v == -1:
                r += Fraction(1, 2)
        elif m.group("e") is not None:
            e = int(m.group("e"))
            if e < 1:
                raise NonCyclotomicParameter(f"{text!r}: E({e}) is undefined")
            r += Fraction(int(m.group("ej") or 1), e)
        else:
            k += int(m.group("xk") or 1)
    return r % 1, k


def parse_params(spec: str, G: GroupData) -> tuple[int, ...]:
    """Exponent vector n from a parameter list.

    Orbits are separated by ';', the parameters of one orbit by ','.  A single
    value q for an orbit of size e stands for q, E(e), ..., E(e)^(e-1).  A
    single orbit entry is replicated to every orbit.  Within an orbit the
    roots of unity must be exactly E(e)^0, ..., E(e)^(e-1), in any order; if
    none is written, parameter j is taken to carry E(e)^j.
    """
    groups = [g for g in spec.split(";")]
    if any(not g.strip() for g in groups):
        raise BadParameterShape(f"empty orbit entry in {spec!r}")
    if len(groups) == 1 and len(G.orbits) > 1:
        groups = groups * len(G.orbits)
    if len(groups) != len(G.orbits):
        raise BadParameterShape(f"{G.name} has {len(G.orbits)} parameter orbits, got {len(groups)}")
    n: list[int] = []
    for (letter, e), g in zip(G.orbits, groups):
        terms = [parse_term(x) for x in g.split(",")]
        if len(terms) == 1 and e > 1:
            r0, k0 = terms[0]
            if r0 != 0:
                raise BadParameterShape(f"single value for orbit {letter} must have trivial root of unity")
            terms = [(Fraction(0), k0)] + [(Fraction(j, e), 0) for j in range(1, e)]
        if len(terms) != e:
            raise BadParameterShape(f"orbit {letter} takes {e} parameters, got {len(terms)}")
        if all(r == 0 for r, _ in terms):
            terms = [(Fraction(j, e), k) for j, (_, k) in enumerate(terms)]
        slot = [None] * e
        for r, k in terms:
            j = r * e
            if j.denominator != 1 or slot[int(j)] is not None:
                raise BadParameterShape(
                    f"orbit {letter}: roots of unity must be E({e})^0..E({e})^{e - 1}, each once"
                )
            slot[int(j)] = k
        n.extend(slot)
    return tuple(n)


# -- rendering ----------------------------------------------------------------------

def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def label_parts(G: GroupData, P: be.Partition) -> list[list[str]]:
    return [[G.labels[i] for i in p] for p in P.parts]


def heading(G: GroupData, h) -> str:
    return "No essential hyperplane" if h is None else be.format_hyperplane(h, G.var_names)


def _published() -> dict:
    path = resources.files("rouquier") / "data" / "published" / "blocks.json"
    return json.loads(path.read_text())


def certify(G: GroupData, records: Sequence[be.HyperplaneBlocks]) -> None:
    """Raise NotCertified unless every record equals the published table."""
    table = _published().get(G.name)
    if table is None:
        raise NotCertified(f"no published table for {G.name}; results are candidate blocks only")
    want = {h: [sorted(p) for p in parts] for h, parts in table}
    got = {heading(G, r.hyperplane): [sorted(p) for p in label_parts(G, r.partition) if len(p) > 1] for r in records}
    if got.keys() != want.keys():
        raise NotCertified(f"{G.name}: hyperplane set differs from the published table")
    for h in want:
        if sorted(want[h]) != sorted(got[h]):
            raise NotCertified(f"{G.name}: blocks for {h} differ from the published table")


# -- commands -------------------------------------------------------------------------

def cmd_all_blocks(G: GroupData, args, out) -> int:
    records = be.all_blocks(G, args.budget)
    if args.certified:
        certify(G, records)
    if args.format == "json":
        out.write(_compact([
            {"cond": None if r.hyperplane is None else list(r.hyperplane), "block": r.partition.to_list()}
            for r in records
        ]) + "\n")
        return 0
    for r in records:
        out.write(heading(G, r.hyperplane) + "\n")
        out.write(_compact(label_parts(G, r.partition)) + "\n")
    return 0


def cmd_rouquier_blocks(G: GroupData, args, out) -> int:
    if (args.params is None) == (args.n is None):
        raise BadParameterShape("give exactly one of --params or --n")
    if args.params is not None:
        n = parse_params(args.params, G)
    else:
        try:
            n = tuple(int(x) for x in args.n.replace(" ", "").split(","))
        except ValueError:
            raise BadParameterShape(f"--n expects comma separated integers, got {args.n!r}") from None
        if len(n) != G.nvars:
            raise BadParameterShape(f"{G.name} has {G.nvars} parameters, got {len(n)}")
    P = be.rouquier_blocks(G, n, args.budget)
    if args.certified:
        certify(G, be.all_blocks(G, args.budget))
    if args.format == "json":
        out.write(_compact({"n": list(n), "block": P.to_list(), "labels": label_parts(G, P)}) + "\n")
        return 0
    out.write(_compact(P.to_list()) + "\n")
    out.write(_compact(label_parts(G, P)) + "\n")
    return 0


def cmd_essential_hyperplanes(G: GroupData, args, out) -> int:
    hyps = be.essential_hyperplanes(G, args.p)
    if args.format == "json":
        out.write(_compact([list(h) for h in hyps]) + "\n")
        return 0
    for h in hyps:
        out.write(be.format_hyperplane(h, G.var_names) + "\n")
    return 0


def cmd_validate(G: GroupData, args, out) -> int:
    report = validation_report(G)
    if args.format == "json":
        out.write(_compact([{"ok": ok, "check": msg} for ok, msg in report]) + "\n")
    else:
        for ok, msg in report:
            out.write(("PASS " if ok else "FAIL ") + msg + "\n")
    return 0 if all(ok for ok, _ in report) else 1


def _schur_text(G: GroupData, label: str, s) -> str:
    parts = [f"{label}:", f"xi = {s.xi}", f"N = {list(s.n0)}"]
    for f in s.factors:
        parts.append(f"{f.psi.label()}(v^{list(f.M)})" + (f"^{f.mult}" if f.mult > 1 else ""))
    return "  ".join(parts)


def cmd_show_schur(G: GroupData, args, out) -> int:
    idx = range(G.nchars) if args.char is None else [G.index_of(args.char)]
    if args.format == "json":
        out.write(_compact([dump_schur_row(G.labels[i], G.schur[i]) for i in idx]) + "\n")
        return 0
    out.write("variables: " + " ".join(G.var_names) + "\n")
    for i in idx:
        out.write(_schur_text(G, G.labels[i], G.schur[i]) + "\n")
    return 0


COMMANDS = {
    "all-blocks": cmd_all_blocks,
    "rouquier-blocks": cmd_rouquier_blocks,
    "essential-hyperplanes": cmd_essential_hyperplanes,
    "validate": cmd_validate,
    "show-schur": cmd_show_schur,
}


def _budget(text: str) -> int:
    k = int(text)
    if k < 1:
        raise argparse.ArgumentTypeError("budget must be at least 1")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--data-dir", default=argparse.SUPPRESS,
                        help=f"directory of group packs (default: ${DATA_DIR_ENV} or the bundled data)")
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--budget", type=_budget, default=argparse.SUPPRESS,
                        help="specialisation vectors tried per refinement step")
    common.add_argument("--certified", action="store_true", default=argparse.SUPPRESS,
                        help="fail unless the blocks match the published table")

    p = argparse.ArgumentParser(prog="rouquier", parents=[common],
                                description="Rouquier blocks of cyclotomic Hecke algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("all-blocks", parents=[common], help="blocks for every essential hyperplane")
    s.add_argument("group")
    s = sub.add_parser("rouquier-blocks", parents=[common], help="blocks of one cyclotomic specialisation")
    s.add_argument("group")
    s.add_argument("--params", help='e.g. "1,E3*x,E3^2*x^2"; orbits separated by ";"')
    s.add_argument("--n", help="raw exponent vector, e.g. 0,1,2")
    s = sub.add_parser("essential-hyperplanes", parents=[common], help="(p-)essential hyperplanes")
    s.add_argument("group")
    s.add_argument("p", type=int, help="0 or a prime dividing the group order")
    s = sub.add_parser("validate", parents=[common], help="check a pack and its Schur elements")
    s.add_argument("group")
    s = sub.add_parser("show-schur", parents=[common], help="print factored Schur elements")
    s.add_argument("group")
    s.add_argument("--char", help="a single character label")
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    for name, default in (("data_dir", None), ("format", "text"), ("budget", be.DEFAULT_BUDGET), ("certified", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        G = load_group(args.group, args.data_dir, validate=args.command != "validate")
        return COMMANDS[args.command](G, args, out)
    except be.PrimeDoesNotDivideOrder as e:
        err.write(f"Error, {e}\n")
    except (UnknownGroup, KeyError) as e:
        err.write(f"Error, {e.args[0]}\n")
    except (BadParameterShape, NonCyclotomicParameter, NotCertified, ValidationError, ParseError,
            InconsistentLink, NumFieldError, be.SizeMismatch, be.NoVectorFound) as e:
        err.write(f"Error, {type(e).__name__}: {e}\n")
    except FileNotFoundError as e:
        err.write(f"Error, {e}\n")
    except BrokenPipeError:
        return 0
    return 1


if __name__ == "__main__":
    sys.exit(main())
