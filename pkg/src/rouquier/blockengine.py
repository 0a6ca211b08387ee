"""Rouquier blocks of cyclotomic Hecke algebras from factored Schur elements.

For a prime ideal P the blocks "with no essential hyperplane" are obtained by
successive refinement:

1. characters whose coefficient xi lies outside P are singletons, the rest
   form one part;
2. intersect with the P-blocks of the group algebra;
3. intersect with the level sets of a+A at cyclotomic specialisations lying
   on no P-essential hyperplane.

For a P-essential hyperplane H the same steps run with the big part of step 1
replaced by the characters having H among their P-essential monomials and the
specialisations of step 3 taken on H only; the result is then joined with the
no-hyperplane partition.

Step 3 is driven by a deterministic enumeration of integer vectors.  Because
a+A is linear in the specialisation vector (a+A = L.n / mu with L read off the
factored form), the partition it can ultimately reach is known in advance, so
the enumeration stops as soon as it gets there.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

from .grouprepo import GroupData, p_blocks_of_group
from .monlattice import canonicalize_hyperplane, dot, vec_gcd
from .numfield import PrimeIdeal, factorint, in_prime_ideal, primes_above
from .schur import FactoredSchur, a_plus_A, essential_monomials, specialize

__all__ = [
    "Partition",
    "SizeMismatch",
    "NoVectorFound",
    "PrimeDoesNotDivideOrder",
    "HyperplaneBlocks",
    "OffAll",
    "OnExactly",
    "join",
    "meet",
    "join_all",
    "galois_invariant",
    "exact_a_plus_A",
    "find_spec_vectors",
    "essential_hyperplanes",
    "blocks_no_hyperplane",
    "blocks_on_hyperplane",
    "all_blocks",
    "rouquier_blocks",
    "format_hyperplane",
    "linear_a_plus_A",
    "prime_for",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 64
BOX_CAP = 12


class SizeMismatch(ValueError):
    pass


class NoVectorFound(RuntimeError):
    pass


class PrimeDoesNotDivideOrder(ValueError):
    def __init__(self, p: int, order: int):
        self.p, self.order = p, order
        super().__init__("The number p should divide the order of the group")


# -- partitions ---------------------------------------------------------------

class Partition:
    """A set partition of {0, ..., n-1}, stored canonically.

    Parts are sorted tuples ordered by their least element.  ``to_list``
    gives the 1-based form used for display and JSON.
    """

    __slots__ = ("n", "parts")

    def __init__(self, parts: Iterable[Iterable[int]], n: Optional[int] = None):
        ps = [tuple(sorted(set(p))) for p in parts]
        ps = [p for p in ps if p]
        flat = [i for p in ps for i in p]
        if n is None:
            n = len(flat)
        if len(flat) != len(set(flat)) or sorted(flat) != list(range(n)):
            raise ValueError(f"parts do not partition range({n}): {ps}")
        self.n = n
        self.parts = tuple(sorted(ps))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls([[i] for i in range(n)], n)

    @classmethod
    def whole(cls, n: int) -> "Partition":
        return cls([range(n)], n)

    @classmethod
    def from_list(cls, parts: Iterable[Iterable[int]]) -> "Partition":
        """From 1-based parts."""
        return cls([[i - 1 for i in p] for p in parts])

    @classmethod
    def from_key(cls, keys: Sequence) -> "Partition":
        groups: dict = {}
        for i, k in enumerate(keys):
            groups.setdefault(k, []).append(i)
        return cls(groups.values(), len(keys))

    def to_list(self) -> list[list[int]]:
        return [[i + 1 for i in p] for p in self.parts]

    def block_of(self) -> list[int]:
        out = [0] * self.n
        for b, p in enumerate(self.parts):
            for i in p:
                out[i] = b
        return out

    def nontrivial(self) -> tuple:
        return tuple(p for p in self.parts if len(p) > 1)

    def is_coarser_or_equal(self, finer: "Partition") -> bool:
        """Every part of ``finer`` lies inside a part of self."""
        _same_size(self, finer)
        owner = self.block_of()
        return all(len({owner[i] for i in p}) == 1 for p in finer.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.n == other.n and self.parts == other.parts

    def __hash__(self):
        return hash((self.n, self.parts))

    def __repr__(self):
        return f"Partition({self.to_list()})"


def _same_size(a: Partition, b: Partition):
    if a.n != b.n:
        raise SizeMismatch(f"partitions of {a.n} and {b.n} elements")


def join(a: Partition, b: Partition) -> Partition:
    """Finest partition coarser than both (union-find over the parts)."""
    _same_size(a, b)
    parent = list(range(a.n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p in a.parts + b.parts:
        r = find(p[0])
        for i in p[1:]:
            s = find(i)
            if s != r:
                parent[s] = r
    return Partition.from_key([find(i) for i in range(a.n)])


def meet(a: Partition, b: Partition) -> Partition:
    _same_size(a, b)
    ka, kb = a.block_of(), b.block_of()
    return Partition.from_key(list(zip(ka, kb)))


def join_all(parts: Iterable[Partition], n: int) -> Partition:
    out = Partition.singletons(n)
    for p in parts:
        out = join(out, p)
    return out


# -- hyperplanes and specialisation vectors ------------------------------------

Hyperplane = tuple


@dataclass(frozen=True)
class OffAll:
    """Vectors on none of the hyperplanes."""


@dataclass(frozen=True)
class OnExactly:
    """Vectors on ``h`` and on none of the other hyperplanes."""

    h: Hyperplane


def format_hyperplane(h: Sequence[int], names: Sequence[str]) -> str:
    """E.g. (1, -2, 1) with names c_0, c_1, c_2 -> 'c_0-2c_1+c_2=0'."""
    out = ""
    for c, name in zip(h, names):
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        out += f"{sign}{mag}{name}"
    return (out or "0") + "=0"


def _free_slots(orbit_sizes: Sequence[int]) -> list[int]:
    # the first slot of every orbit is pinned to 0: adding a constant to all
    # exponents of an orbit leaves a degree-0 Schur element's blocks unchanged
    slots, pos = [], 0
    for e in orbit_sizes:
        slots.extend(range(pos + 1, pos + e))
        pos += e
    return slots


def _shell(dim: int, B: int) -> Iterator[tuple]:
    for v in itertools.product(range(-B, B + 1), repeat=dim):
        if max(map(abs, v), default=0) == B:
            yield v


def find_spec_vectors(
    hyperplanes: Sequence[Hyperplane],
    target: Union[OffAll, OnExactly],
    orbit_sizes: Sequence[int],
    budget: int = DEFAULT_BUDGET,
    box_cap: int = BOX_CAP,
) -> Iterator[tuple[int, ...]]:
    """Yield up to ``budget`` primitive integer vectors meeting ``target``.

    Vectors are enumerated shell by shell (max |entry| = 1, 2, ...), with the
    first slot of each orbit fixed at 0 and the first nonzero entry positive.
    Raises NoVectorFound if nothing qualifies within ``box_cap`` shells.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    hyperplanes = [tuple(h) for h in hyperplanes]
    n = sum(orbit_sizes)
    on = None
    if isinstance(target, OnExactly):
        on = tuple(target.h)
        if on not in hyperplanes:
            raise ValueError(f"{on} is not one of the given hyperplanes")
    others = [h for h in hyperplanes if h != on]
    free = _free_slots(orbit_sizes)
    found = 0
    for B in range(1, box_cap + 1):
        for v in _shell(len(free), B):
            if v[next(i for i, x in enumerate(v) if x)] < 0 or vec_gcd(v) != 1:
                continue
            x = [0] * n
            for slot, val in zip(free, v):
                x[slot] = val
            if on is not None and dot(on, x):
                continue
            if any(dot(h, x) == 0 for h in others):
                continue
            yield tuple(x)
            found += 1
            if found >= budget:
                return
    if not found:
        raise NoVectorFound(f"no vector for {target} within entries of size {box_cap}")


# -- the block algorithm ---------------------------------------------------------

def linear_a_plus_A(s: FactoredSchur) -> tuple[int, ...]:
    """L with (a+A)(n) = L.n / mu for every specialisation vector n."""
    L = [2 * x for x in s.n0]
    for f in s.factors:
        w = f.psi.degree * f.mult
        L = [a + w * b for a, b in zip(L, f.M)]
    return tuple(L)


def _parallel(d: Sequence[int], h: Sequence[int]) -> bool:
    return all(d[i] * h[j] == d[j] * h[i] for i in range(len(d)) for j in range(i + 1, len(d)))


@dataclass
class HyperplaneBlocks:
    hyperplane: Optional[Hyperplane]
    partition: Partition
    per_prime: dict = field(default_factory=dict)


class _Engine:
    """Memoised per-group state; never mutates the GroupData."""

    def __init__(self, G: GroupData):
        self.G = G
        self.n = G.nchars
        self.L = [linear_a_plus_A(s) for s in G.schur]
        self.primes = [p for p, _ in factorint(G.order)]
        self._ess: dict = {}
        self._pblocks: dict = {}
        self._none: dict = {}
        self._on: dict = {}
        self._order: Optional[list] = None
        self.vectors_used: dict = {}

    # essential data per prime ideal
    def ess_by_char(self, P: PrimeIdeal) -> list[set]:
        key = (P.p, P.factor)
        if key not in self._ess:
            self._ess[key] = [essential_monomials(s, P) for s in self.G.schur]
        return self._ess[key]

    def ess_hyperplanes(self, P: PrimeIdeal) -> set:
        return set().union(*self.ess_by_char(P))

    def pblocks(self, P: PrimeIdeal) -> Partition:
        key = (P.p, P.factor)
        if key not in self._pblocks:
            self._pblocks[key] = Partition(p_blocks_of_group(self.G, P), self.n)
        return self._pblocks[key]

    def _refine(self, lam: Partition, target: Partition, vectors: Iterator, tag) -> Partition:
        used = []
        for v in vectors:
            if lam == target:
                break
            used.append(v)
            lam = meet(lam, Partition.from_key([dot(L, v) for L in self.L]))
        self.vectors_used[tag] = used
        return lam

    def none(self, P: PrimeIdeal, budget: int) -> Partition:
        key = (P.p, P.factor, budget)
        if key in self._none:
            return self._none[key]
        G, n = self.G, self.n
        if G.order % P.p:
            lam = Partition.singletons(n)
        else:
            big = [i for i, s in enumerate(G.schur) if in_prime_ideal(s.xi, P)]
            lam = Partition([big] + [[i] for i in range(n) if i not in big], n)
            lam = meet(lam, self.pblocks(P))
            target = meet(lam, Partition.from_key(self.L))
            hyps = sorted(self.ess_hyperplanes(P))
            lam = self._refine(lam, target, find_spec_vectors(hyps, OffAll(), G.orbit_sizes, budget),
                               (P.p, None))
        self._none[key] = lam
        return lam

    def on(self, P: PrimeIdeal, h: Hyperplane, budget: int) -> Partition:
        key = (P.p, P.factor, h, budget)
        if key in self._on:
            return self._on[key]
        G, n = self.G, self.n
        hyps = self.ess_hyperplanes(P)
        base = self.none(P, budget)
        if h not in hyps:
            self._on[key] = base
            return base
        ess = self.ess_by_char(P)
        big = [i for i in range(n) if h in ess[i]]
        lam = Partition([big] + [[i] for i in range(n) if i not in big], n)
        lam = meet(lam, self.pblocks(P))
        # reachable partition: chi ~ psi iff L_chi - L_psi is a multiple of h
        reach = []
        for part in lam.parts:
            groups: list[list[int]] = []
            for i in part:
                for g in groups:
                    d = [a - b for a, b in zip(self.L[i], self.L[g[0]])]
                    if _parallel(d, h):
                        g.append(i)
                        break
                else:
                    groups.append([i])
            reach.extend(groups)
        target = Partition(reach, n)
        vecs = find_spec_vectors(sorted(hyps), OnExactly(h), G.orbit_sizes, budget)
        lam = self._refine(lam, target, vecs, (P.p, h))
        lam = join(lam, base)
        self._on[key] = lam
        return lam

    def all_hyperplanes(self) -> list:
        if self._order is None:
            self._order = _display_order(self.G, {p: self.ess_hyperplanes(prime_for(self.G, p)) for p in self.primes})
        return self._order


_ENGINES: dict = {}


def _engine(G: GroupData) -> _Engine:
    e = _ENGINES.get(id(G))
    if e is None or e.G is not G:
        e = _ENGINES[id(G)] = _Engine(G)
    return e


def prime_for(G: GroupData, p: int) -> PrimeIdeal:
    """The first prime ideal above p in the field of the group's data."""
    return primes_above(p, G.work_conductor)[0]


def _display_order(G: GroupData, by_prime: dict) -> list:
    """Essential hyperplanes in the order the tables list them.

    A derived pack inherits the order of its parent, restricted through the
    Clifford specialisation (first appearance wins).  A root pack lists the
    hyperplanes essential for the largest prime first, each group in
    ascending lexicographic order of the coefficient vector.
    """
    allh = set().union(*by_prime.values()) if by_prime else set()
    out: list = []
    if G.parent is not None and G.clifford is not None:
        parent_order = _engine(G.parent).all_hyperplanes()
        for h in parent_order:
            r = [0] * G.nvars
            for x, (_, t) in zip(h, G.clifford.spec):
                if t is not None:
                    r[t] += x
            if not any(r):
                continue
            c = canonicalize_hyperplane(r)
            if c in allh and c not in out:
                out.append(c)
    rest = sorted(allh - set(out), key=lambda h: (-max(p for p, s in by_prime.items() if h in s), h))
    return out + rest


# -- public entry points ---------------------------------------------------------

def _as_prime(G: GroupData, P) -> PrimeIdeal:
    return P if isinstance(P, PrimeIdeal) else prime_for(G, int(P))


def essential_hyperplanes(G: GroupData, p: int) -> list[Hyperplane]:
    """Essential hyperplanes for p = 0, else the p-essential ones."""
    eng = _engine(G)
    order = eng.all_hyperplanes()
    if p == 0:
        return list(order)
    if p < 0 or G.order % p:
        raise PrimeDoesNotDivideOrder(p, G.order)
    hyps = eng.ess_hyperplanes(prime_for(G, p))
    return [h for h in order if h in hyps]


def blocks_no_hyperplane(G: GroupData, P, budget: int = DEFAULT_BUDGET) -> Partition:
    return _engine(G).none(_as_prime(G, P), budget)


def blocks_on_hyperplane(G: GroupData, P, h: Sequence[int], budget: int = DEFAULT_BUDGET) -> Partition:
    return _engine(G).on(_as_prime(G, P), canonicalize_hyperplane(h), budget)


def all_blocks(G: GroupData, budget: int = DEFAULT_BUDGET) -> list[HyperplaneBlocks]:
    eng = _engine(G)
    primes = {p: prime_for(G, p) for p in eng.primes}
    per = {p: eng.none(P, budget) for p, P in primes.items()}
    out = [HyperplaneBlocks(None, join_all(per.values(), eng.n), per)]
    for h in eng.all_hyperplanes():
        per = {p: eng.on(P, h, budget) for p, P in primes.items()}
        out.append(HyperplaneBlocks(h, join_all(per.values(), eng.n), per))
    return out


def rouquier_blocks(G: GroupData, n: Sequence[int], budget: int = DEFAULT_BUDGET) -> Partition:
    """Rouquier blocks of the specialisation v -> y^n (n is scaled to be primitive)."""
    n = tuple(int(x) for x in n)
    if len(n) != G.nvars:
        raise SizeMismatch(f"{G.name} has {G.nvars} parameters, got {len(n)}")
    records = all_blocks(G, budget)
    if not any(n):
        return join_all((r.partition for r in records), G.nchars)
    g = vec_gcd(n)
    n = tuple(x // g for x in n)
    hit = [r.partition for r in records[1:] if dot(r.hyperplane, n) == 0]
    if not hit:
        return records[0].partition
    return join_all(hit, G.nchars)


def galois_invariant(G: GroupData, p: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Essential sets and block partitions agree for every prime above p."""
    eng = _engine(G)
    ps = primes_above(p, G.work_conductor)
    ref = ps[0]
    for P in ps[1:]:
        if eng.ess_by_char(P) != eng.ess_by_char(ref):
            return False
        if eng.pblocks(P) != eng.pblocks(ref) or eng.none(P, budget) != eng.none(ref, budget):
            return False
        if any(eng.on(P, h, budget) != eng.on(ref, h, budget) for h in eng.ess_hyperplanes(ref)):
            return False
    return True


def exact_a_plus_A(G: GroupData, n: Sequence[int]) -> list[Fraction]:
    """a+A of every character at n via full specialisation (slow path)."""
    return [a_plus_A(specialize(s, n, G.mu_order)) for s in G.schur]
