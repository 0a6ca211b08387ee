"""Exact model of the reflection group G7 as 2x2 matrices over Q(zeta_12).

Used only for authoring the shipped data packs: conjugacy classes, character
table (from tensor constructions on the natural representation), fake degrees
and Hecke eigenvalue descriptors of each irreducible character.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import product

from rouquier.numfield import CycNum, root_of_unity

N = 12


def cn(x) -> CycNum:
    return CycNum.coerce(x).embed(N)


ZERO, ONE = cn(0), cn(1)
I4 = root_of_unity(4).embed(N)


def mat(a, b, c, d):
    return (cn(a), cn(b), cn(c), cn(d))


def mul(A, B):
    return (
        A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
        A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3],
    )


def key(A):
    return tuple(x.coeffs for x in A)


def trace(A):
    return A[0] + A[3]


def det(A):
    return A[0] * A[3] - A[1] * A[2]


IDENT = mat(1, 0, 0, 1)


def closure(gens):
    elems = {key(IDENT): IDENT}
    queue = deque([IDENT])
    while queue:
        g = queue.popleft()
        for h in gens:
            x = mul(g, h)
            k = key(x)
            if k not in elems:
                elems[k] = x
                queue.append(x)
    return elems


def order(A):
    k, X = 1, A
    while key(X) != key(IDENT):
        X = mul(X, A)
        k += 1
    return k


def build_g7():
    qi = mat(I4, 0, 0, -I4)
    qj = mat(0, 1, -1, 0)
    qk = mul(qi, qj)
    half = Fraction(1, 2)
    w = tuple((-IDENT[t] + qi[t] + qj[t] + qk[t]) * half for t in range(4))
    z12 = root_of_unity(12)
    scal = mat(z12, 0, 0, z12)
    elems = closure([qi, qj, w, scal])
    assert len(elems) == 144, len(elems)
    return elems


def reflections(elems):
    z3 = root_of_unity(3).embed(N)
    refl2 = [A for A in elems.values() if trace(A) == ZERO and det(A) == -ONE]
    refl3 = [A for A in elems.values() if trace(A) == ONE + z3 and det(A) == z3]
    return refl2, refl3


def find_generators(elems):
    """First (s, t, u) in a fixed scan order with stu = tus = ust generating G7."""
    refl2, refl3 = reflections(elems)
    refl2.sort(key=key)
    refl3.sort(key=key)
    for s in refl2:
        for t in refl3:
            st = mul(s, t)
            for u in refl3:
                stu = mul(st, u)
                if key(stu) != key(mul(mul(t, u), s)) or key(stu) != key(mul(mul(u, s), t)):
                    continue
                if len(closure([s, t, u])) != 144:
                    continue
                if len(closure([s, u])) != 48 or len(closure([u, mul(mul(s, u), s)])) != 24:
                    continue
                return s, t, u
    raise RuntimeError("no generating triple found")


def conjugacy_classes(elems):
    """Classes as lists of keys, sorted by (order, key of representative)."""
    seen = set()
    classes = []
    inv = {}
    for k, A in elems.items():
        for k2, B in elems.items():
            if key(mul(A, B)) == key(IDENT):
                inv[k] = B
                break
    for k in sorted(elems):
        if k in seen:
            continue
        A = elems[k]
        cls = set()
        for g in elems.values():
            cls.add(key(mul(mul(g, A), inv[key(g)])))
        seen |= cls
        classes.append(sorted(cls))
    classes.sort(key=lambda c: (order(elems[c[0]]), len(c), c[0]))
    return classes


def abelian_labels(elems, gens):
    """Map each element to its image in Z2 x Z3 x Z3 under s, t, u -> unit vectors."""
    mods = (2, 3, 3)
    lab = {key(IDENT): (0, 0, 0)}
    queue = deque([IDENT])
    while queue:
        g = queue.popleft()
        for i, h in enumerate(gens):
            x = mul(g, h)
            l = list(lab[key(g)])
            l[i] = (l[i] + 1) % mods[i]
            l = tuple(l)
            k = key(x)
            if k in lab:
                assert lab[k] == l, "abelianisation inconsistent"
            else:
                lab[k] = l
                queue.append(x)
    return lab


class G7Model:
    """Group, classes, generators and irreducible characters of G7."""

    def __init__(self):
        self.elems = build_g7()
        self.s, self.t, self.u = find_generators(self.elems)
        self.classes = conjugacy_classes(self.elems)
        self.sizes = [len(c) for c in self.classes]
        self.reps = [self.elems[c[0]] for c in self.classes]
        self.class_of = {k: i for i, c in enumerate(self.classes) for k in c}
        self.ab = abelian_labels(self.elems, [self.s, self.t, self.u])
        self.chars = self._characters()

    def cls(self, A):
        return self.class_of[key(A)]

    def inner(self, chi, psi):
        tot = cn(0)
        for n, a, b in zip(self.sizes, chi, psi):
            tot = tot + a * b.conjugate() * n
        return tot / 144

    def linear(self, a, b, c):
        z3 = root_of_unity(3)
        vals = []
        for R in self.reps:
            l0, l1, l2 = self.ab[key(R)]
            vals.append(cn((-1) ** (a * l0)) * z3 ** (b * l1 + c * l2))
        return vals

    def _characters(self):
        nat = [trace(R) for R in self.reps]
        sq = [trace(mul(R, R)) for R in self.reps]
        sym2 = [(x * x + y) / 2 for x, y in zip(nat, sq)]
        cands = []
        lins = {}
        for a, b, c in product(range(2), range(3), range(3)):
            lam = self.linear(a, b, c)
            lins[(a, b, c)] = lam
            cands.append(lam)
        for lam in lins.values():
            cands.append([x * y for x, y in zip(nat, lam)])
            cands.append([x.conjugate() * y for x, y in zip(nat, lam)])
            cands.append([x * y for x, y in zip(sym2, lam)])
        chars = []
        for chi in cands:
            if self.inner(chi, chi) != 1:
                continue
            if any(all(x == y for x, y in zip(chi, psi)) for psi in chars):
                continue
            chars.append(chi)
        assert len(chars) == 42, len(chars)
        assert sum(int(c[0].coeffs[0]) ** 2 for c in chars) == 144
        return chars

    def fake_degree(self, chi, top=40):
        """Graded multiplicities of chi in the coinvariants of Sym(V), as a list."""
        nat = [trace(R) for R in self.reps]
        dets = [det(R) for R in self.reps]
        h = [[cn(1)] * 42, nat]
        for k in range(2, top):
            h.append([a * b - c * d for a, b, c, d in zip(nat, h[-1], dets, h[-2])])
        series = [self.inner(hk, chi) for hk in h]
        ser = [int(x.coeffs[0]) for x in series]
        assert all(x == int(x.coeffs[0]) for x, in zip(series))
        # multiply by (1 - q^12)^2
        out = list(ser)
        for _ in range(2):
            out = [out[i] - (out[i - 12] if i >= 12 else 0) for i in range(len(out))]
        poly = out[: top - 1]
        return poly
