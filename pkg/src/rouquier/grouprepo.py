"""Group data packs: loading, validation, Clifford-derived subgroups, p-blocks.

A pack is a JSON document with keys ``name``, ``order``, ``conductor``,
``mu_order``, ``orbits``, ``characters``, ``classes`` and either ``schur`` or
``clifford`` (or both).  Packs derived through ``clifford`` obtain their Schur
elements by specialising the parent's; an inline ``schur`` table is then
checked against the derived one up to units.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable, Optional, Sequence

from .monlattice import canonicalize_hyperplane
from .numfield import (
    CycNum,
    NotIntegral,
    PrimeIdeal,
    in_prime_ideal,
    is_integral,
    lcm,
    parse_cycnum,
    dump_cycnum,
)
from .polyalg import k_cyc_poly, k_cyc_poly_from_coeffs
from .schur import (
    Factor,
    FactoredSchur,
    clifford_derive,
    equal_up_to_units,
    validate_schur,
    value_at_one,
)

__all__ = [
    "GroupData",
    "CliffordLink",
    "ParseError",
    "ValidationError",
    "UnknownGroup",
    "InconsistentLink",
    "load_group",
    "load_pack",
    "derive_subgroup",
    "p_blocks_of_group",
    "central_characters",
    "validation_report",
    "default_data_dir",
    "DATA_DIR_ENV",
]

DATA_DIR_ENV = "ROUQUIER_DATA_DIR"

TOP_KEYS = {"name", "order", "conductor", "mu_order", "orbits", "characters", "schur", "classes", "clifford"}


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class UnknownGroup(LookupError):
    pass


class InconsistentLink(ValueError):
    pass


@dataclass(frozen=True)
class CliffordLink:
    """How a pack's Hecke algebra sits inside its parent's.

    ``spec[i] = (r, t)`` sends parent variable i to exp(2 pi i r) times the
    child's variable t (or to the constant when t is None).  Row c of
    ``induction`` lists the parent characters inducing from child character c.
    """

    parent: str
    spec: tuple
    orbit_size: int
    induction: tuple


@dataclass(frozen=True, eq=False)
class GroupData:
    name: str
    order: int
    conductor: int
    mu_order: int
    orbits: tuple  # ((letter, e), ...)
    labels: tuple
    degrees: tuple
    bvals: tuple
    schur: tuple  # FactoredSchur per character
    class_sizes: tuple
    char_values: tuple  # per character, per class
    clifford: Optional[CliffordLink] = None
    parent: Optional["GroupData"] = field(default=None, repr=False)

    @property
    def nchars(self) -> int:
        return len(self.labels)

    @property
    def orbit_sizes(self) -> tuple:
        return tuple(e for _, e in self.orbits)

    @property
    def nvars(self) -> int:
        return sum(self.orbit_sizes)

    @property
    def var_names(self) -> list[str]:
        return [f"{letter}_{j}" for letter, e in self.orbits for j in range(e)]

    @property
    def work_conductor(self) -> int:
        m = self.conductor
        for row in self.char_values:
            for x in row:
                m = lcm(m, x.order)
        return m

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{self.name} has no character {label!r}") from None


# -- parsing -----------------------------------------------------------------

def _req(d: dict, k: str, where: str):
    if k not in d:
        raise ParseError(f"{where}: missing key {k!r}")
    return d[k]


def _parse_psi(obj, m: int):
    if not isinstance(obj, dict):
        raise ParseError(f"bad psi entry {obj!r}")
    keys = set(obj)
    if not keys <= {"d", "k", "coeffs"}:
        raise ParseError(f"unknown keys in psi entry: {sorted(keys - {'d', 'k', 'coeffs'})}")
    P = None
    if "d" in obj:
        P = k_cyc_poly(int(obj["d"]), int(obj.get("k", 1)), m)
    if "coeffs" in obj:
        Q = k_cyc_poly_from_coeffs([parse_cycnum(c) for c in obj["coeffs"]], m)
        if P is not None and P != Q:
            raise ParseError(f"psi entry {obj!r}: (d, k) and coeffs disagree")
        P = Q
    if P is None:
        raise ParseError(f"psi entry {obj!r} has neither (d, k) nor coeffs")
    return P


def _parse_schur_row(row: dict, m: int, nvars: int) -> tuple[str, FactoredSchur]:
    extra = set(row) - {"char", "xi", "N", "factors"}
    if extra:
        raise ParseError(f"unknown keys in schur row: {sorted(extra)}")
    label = _req(row, "char", "schur row")
    xi = parse_cycnum(_req(row, "xi", label))
    n0 = tuple(int(x) for x in _req(row, "N", label))
    factors = []
    for f in _req(row, "factors", label):
        extra = set(f) - {"psi", "M", "mult"}
        if extra:
            raise ParseError(f"{label}: unknown factor keys {sorted(extra)}")
        P = _parse_psi(_req(f, "psi", label), m)
        M = tuple(int(x) for x in _req(f, "M", label))
        factors.append(Factor(P, M, int(f.get("mult", 1))))
    if len(n0) != nvars:
        raise ParseError(f"{label}: N has length {len(n0)}, expected {nvars}")
    return label, FactoredSchur(xi, n0, tuple(factors))


def dump_schur_row(label: str, s: FactoredSchur) -> dict:
    return {
        "char": label,
        "xi": dump_cycnum(s.xi),
        "N": list(s.n0),
        "factors": [
            {"psi": {"d": f.psi.root_order, "k": f.psi.root_exp}, "M": list(f.M), "mult": f.mult}
            for f in s.factors
        ],
    }


def _parse_spec(spec, nvars_child: int):
    out = []
    for entry in spec:
        extra = set(entry) - {"zeta", "to"}
        if extra:
            raise ParseError(f"unknown keys in clifford spec entry: {sorted(extra)}")
        d, k = entry.get("zeta", [1, 0])
        t = entry.get("to")
        if t is not None and not (0 <= int(t) < nvars_child):
            raise ParseError(f"clifford spec target {t} out of range")
        out.append((Fraction(int(k), int(d)), None if t is None else int(t)))
    return tuple(out)


def load_pack(
    doc: dict | bytes | str,
    resolver: Callable[[str], "GroupData"] | None = None,
    validate: bool = True,
) -> GroupData:
    """Parse and validate one pack.  ``resolver`` loads a Clifford parent by name.

    With ``validate=False`` the semantic checks are skipped (structural parse
    errors still raise); ``validation_report`` can then list what fails.
    """
    if isinstance(doc, (bytes, str)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ParseError("a pack must be a JSON object")
    extra = set(doc) - TOP_KEYS
    if extra:
        raise ParseError(f"unknown top-level keys: {sorted(extra)}")
    name = str(_req(doc, "name", "pack"))
    try:
        order = int(_req(doc, "order", name))
        m = int(_req(doc, "conductor", name))
        mu = int(_req(doc, "mu_order", name))
        orbits = tuple((str(o["letter"]), int(o["e"])) for o in _req(doc, "orbits", name))
        chars = _req(doc, "characters", name)
        labels = tuple(str(c["label"]) for c in chars)
        degrees = tuple(int(c["degree"]) for c in chars)
        bvals = tuple(int(c["b"]) for c in chars)
        classes = _req(doc, "classes", name)
        extra = set(classes) - {"sizes", "values"}
        if extra:
            raise ParseError(f"unknown keys in classes: {sorted(extra)}")
        sizes = tuple(int(x) for x in classes["sizes"])
        values = tuple(tuple(parse_cycnum(v) for v in row) for row in classes["values"])
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"{name}: malformed pack ({e})") from None
    nvars = sum(e for _, e in orbits)

    inline = None
    if "schur" in doc and doc["schur"] is not None:
        rows = [_parse_schur_row(r, m, nvars) for r in doc["schur"]]
        if [lab for lab, _ in rows] != list(labels):
            raise ValidationError([f"{name}: schur rows are not in character order"])
        inline = tuple(s for _, s in rows)

    link = None
    parent = None
    if doc.get("clifford") is not None:
        c = doc["clifford"]
        extra = set(c) - {"parent", "spec", "orbit_size", "induction"}
        if extra:
            raise ParseError(f"unknown keys in clifford: {sorted(extra)}")
        link = CliffordLink(
            parent=str(c["parent"]),
            spec=_parse_spec(c["spec"], nvars),
            orbit_size=int(c["orbit_size"]),
            induction=tuple(tuple(str(x) for x in row) for row in c["induction"]),
        )
        if resolver is None:
            raise ParseError(f"{name}: a Clifford parent {link.parent!r} is required but no resolver given")
        parent = resolver(link.parent)

    base = GroupData(name, order, m, mu, orbits, labels, degrees, bvals, inline or (), sizes, values, link, parent)
    if validate:
        failures = [msg for ok, msg in _table_report(base) if not ok]
        if failures:
            raise ValidationError(failures)
    if link is not None:
        derived = derive_subgroup(parent, base)
        if inline is not None:
            bad = [lab for lab, a, b in zip(labels, inline, derived.schur) if not equal_up_to_units(a, b)]
            if bad:
                raise ValidationError([f"inline schur rows differ from derived ones: {bad}"])
        base = derived
    elif inline is None:
        raise ParseError(f"{name}: pack has neither schur nor clifford data")

    if not validate:
        return base
    problems = _schur_report(base)
    failures = [msg for ok, msg in problems if not ok]
    if failures:
        raise ValidationError(failures)
    return base


def derive_subgroup(parent: GroupData, child: GroupData) -> GroupData:
    """Fill in ``child.schur`` from the parent through the Clifford link."""
    link = child.clifford
    if link is None:
        return child
    if len(link.spec) != parent.nvars:
        raise InconsistentLink(
            f"spec has {len(link.spec)} entries, parent {parent.name} has {parent.nvars} variables"
        )
    if len(link.induction) != child.nchars:
        raise InconsistentLink("induction table must have one row per character")
    seen = [lab for row in link.induction for lab in row]
    if sorted(seen) != sorted(parent.labels) or len(seen) != len(set(seen)):
        raise InconsistentLink("induction rows must partition the parent characters")
    schur = []
    for label, row in zip(child.labels, link.induction):
        if parent.order * child.degrees[child.labels.index(label)] != child.order * sum(
            parent.degrees[parent.index_of(x)] for x in row
        ):
            raise InconsistentLink(f"degrees in induction row of {label} do not match the index")
        cands = [
            clifford_derive(parent.schur[parent.index_of(x)], link.spec, link.orbit_size, child.nvars, child.conductor)
            for x in row
        ]
        first = cands[0]
        for other in cands[1:]:
            if not equal_up_to_units(first, other):
                raise InconsistentLink(f"parent characters over {label} specialise differently")
        schur.append(first)
    return GroupData(
        child.name, child.order, child.conductor, child.mu_order, child.orbits, child.labels,
        child.degrees, child.bvals, tuple(schur), child.class_sizes, child.char_values,
        child.clifford, parent,
    )


# -- validation --------------------------------------------------------------

def _table_report(G: GroupData) -> list[tuple[bool, str]]:
    """Checks on the character table alone (no Schur elements needed)."""
    out: list[tuple[bool, str]] = []

    def check(ok: bool, msg: str):
        out.append((bool(ok), msg))

    n = G.nchars
    check(len(G.degrees) == n and len(G.bvals) == n, "character metadata complete")
    check(len(set(G.labels)) == n, "character labels distinct")
    check(sum(d * d for d in G.degrees) == G.order,
          f"sum of squared degrees {sum(d * d for d in G.degrees)} = |W| = {G.order}")
    check(sum(G.class_sizes) == G.order, f"class sizes sum to {sum(G.class_sizes)}")
    check(len(G.char_values) == n and all(len(r) == len(G.class_sizes) for r in G.char_values),
          "character table shape")
    if out and not all(ok for ok, _ in out):
        return out
    check(len(G.class_sizes) == n, "as many classes as characters")
    ident = [i for i, s in enumerate(G.class_sizes) if s == 1 and all(
        G.char_values[c][i] == G.degrees[c] for c in range(n))]
    check(bool(ident), "identity class present with values chi(1)")
    ortho_ok = True
    conj = [[y.conjugate() * s for s, y in zip(G.class_sizes, row)] for row in G.char_values]
    for a in range(n):
        for b in range(a, n):
            tot = CycNum.rational(0)
            for x, y in zip(G.char_values[a], conj[b]):
                tot = tot + x * y
            if tot != (G.order if a == b else 0):
                ortho_ok = False
                check(False, f"orthogonality fails for {G.labels[a]}, {G.labels[b]}")
    check(ortho_ok, "row orthogonality of the character table")
    try:
        central_characters(G)
        check(True, "central characters are algebraic integers")
    except NotIntegral as e:
        check(False, f"central characters: {e}")
    return out


def validation_report(G: GroupData) -> list[tuple[bool, str]]:
    """Every load-time check as (passed, description)."""
    out = _table_report(G)
    if not all(ok for ok, _ in out):
        return out
    return out + _schur_report(G)


def _schur_report(G: GroupData) -> list[tuple[bool, str]]:
    out: list[tuple[bool, str]] = []

    def check(ok: bool, msg: str):
        out.append((bool(ok), msg))

    n = G.nchars
    check(len(G.schur) == n, "one Schur element per character")
    total = Fraction(0)
    for label, d, s in zip(G.labels, G.degrees, G.schur):
        problems = validate_schur(s, G.orbit_sizes)
        check(not problems, f"{label}: essential form" + ("" if not problems else " (" + "; ".join(problems) + ")"))
        v = value_at_one(s)
        target = Fraction(G.order, d)
        check(v == target, f"{label}: value at 1 = {target}" + ("" if v == target else f" (got {v!r})"))
        if v.is_rational() and not v.is_zero():
            total += Fraction(d) / v.coeffs[0]
    check(total == 1, "sum of chi(1)/s_chi(1) equals 1")
    return out


# -- p-blocks ----------------------------------------------------------------

def central_characters(G: GroupData) -> list[list[CycNum]]:
    rows = []
    for d, vals in zip(G.degrees, G.char_values):
        row = [x * s / d for x, s in zip(vals, G.class_sizes)]
        for x in row:
            if not is_integral(x):
                raise NotIntegral(f"central character value {x!r} is not integral")
        rows.append(row)
    return rows


def p_blocks_of_group(G: GroupData, P: PrimeIdeal) -> list[list[int]]:
    """Blocks of the group algebra modulo P as lists of 0-based indices."""
    n = G.nchars
    if G.order % P.p:
        return [[i] for i in range(n)]
    omega = central_characters(G)
    parts: list[list[int]] = []
    for i in range(n):
        for part in parts:
            j = part[0]
            if all(in_prime_ideal(a - b, P) for a, b in zip(omega[i], omega[j])):
                part.append(i)
                break
        else:
            parts.append([i])
    return parts


# -- locating packs ----------------------------------------------------------

def default_data_dir() -> Path:
    env = os.environ.get(DATA_DIR_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "data"


_CACHE: dict = {}


def load_group(name: str, data_dir: str | os.PathLike | None = None, validate: bool = True) -> GroupData:
    """Load ``<data_dir>/<name>.json`` (and its Clifford ancestors), cached.

    Ancestors are always validated; ``validate`` applies to the named pack.
    """
    root = Path(data_dir) if data_dir is not None else default_data_dir()
    path = root / f"{name}.json"
    key = (str(path.resolve()), path.stat().st_mtime_ns if path.exists() else None, validate)
    if key in _CACHE:
        return _CACHE[key]
    if not path.exists():
        available = sorted(p.stem for p in root.glob("*.json")) if root.exists() else []
        raise UnknownGroup(f"unknown group {name!r}; available: {', '.join(available) or 'none'}")
    doc = path.read_bytes()
    G = load_pack(doc, resolver=lambda parent: load_group(parent, root), validate=validate)
    _CACHE[key] = G
    return G
