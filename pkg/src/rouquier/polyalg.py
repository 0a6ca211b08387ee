"""Laurent polynomials over cyclotomic fields and K-cyclotomic polynomials.

``LaurentPoly`` is sparse and multivariate (exponent tuples as keys);
``UniLaurent`` is the one-variable case used after a cyclotomic
specialization v -> y^n.  ``KCycPoly`` is the minimal polynomial of a root of
unity over K = Q(zeta_m).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence

from .numfield import (
    CycNum,
    cyclotomic_coeffs,
    galois_orbit,
    lcm,
    root_of_unity,
)
from .monlattice import LengthMismatch, dot

__all__ = [
    "LaurentPoly",
    "UniLaurent",
    "KCycPoly",
    "IsPhiOne",
    "ZeroPolynomial",
    "cyclotomic_poly",
    "k_cyc_poly",
    "k_cyc_poly_from_coeffs",
    "eval_at_monomial",
    "specialize_uni",
    "uni_val_deg",
    "split_power",
]


class IsPhiOne(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


def _clean(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if not v.is_zero()}


class LaurentPoly:
    """Finite sum of CycNum coefficients times monomials v^e, e in Z^n."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping | None = None, nvars: int | None = None):
        cleaned = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            c = CycNum.coerce(c)
            if nvars is None:
                nvars = len(e)
            elif len(e) != nvars:
                raise LengthMismatch("exponent vectors of different lengths")
            cleaned[e] = cleaned[e] + c if e in cleaned else c
        self.terms = _clean(cleaned)
        self.nvars = nvars

    @classmethod
    def constant(cls, c, nvars: int) -> "LaurentPoly":
        return cls({(0,) * nvars: CycNum.coerce(c)}, nvars)

    @classmethod
    def monomial(cls, e: Sequence[int], c=1) -> "LaurentPoly":
        return cls({tuple(e): CycNum.coerce(c)}, len(e))

    @classmethod
    def var(cls, i: int, nvars: int) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    def is_zero(self) -> bool:
        return not self.terms

    def _nv(self, other: "LaurentPoly") -> int | None:
        if self.nvars is not None and other.nvars is not None and self.nvars != other.nvars:
            raise LengthMismatch("polynomials in different numbers of variables")
        return self.nvars if self.nvars is not None else other.nvars

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other, self.nvars or 0)
        nv = self._nv(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return LaurentPoly(out, nv)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other, self.nvars or 0)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = CycNum.coerce(other)
            return LaurentPoly({e: c * x for e, x in self.terms.items()}, self.nvars)
        nv = self._nv(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return LaurentPoly(out, nv)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of Laurent polynomials are not supported")
        result = LaurentPoly.constant(1, self.nvars or 0)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.constant(other, self.nvars or 0)
            except TypeError:
                return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.terms == other.terms

    __hash__ = None

    def specialize(self, n: Sequence[int]) -> "UniLaurent":
        """Image under v_i -> y^(n_i)."""
        out: dict = {}
        for e, c in self.terms.items():
            k = dot(e, n)
            out[k] = out[k] + c if k in out else c
        return UniLaurent(out)

    def substitute(self, values: Sequence) -> "LaurentPoly":
        """Substitute each variable by a LaurentPoly (or number)."""
        result = None
        for e, c in self.terms.items():
            term = None
            for x, k in zip(values, e):
                if k == 0:
                    continue
                if not isinstance(x, LaurentPoly):
                    xv = CycNum.coerce(x) ** k
                    term = xv if term is None else term * xv
                    continue
                if k < 0:
                    if len(x.terms) != 1:
                        raise ValueError("negative power of a non-monomial")
                    (ee, cc), = x.terms.items()
                    p = LaurentPoly({tuple(k * a for a in ee): cc ** k}, x.nvars)
                else:
                    p = x ** k
                term = p if term is None else term * p
            if term is None:
                term = c
            else:
                term = term * c
            result = term if result is None else result + term
        return result if result is not None else LaurentPoly({}, None)

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        parts = [f"{c!r}*v^{list(e)}" for e, c in sorted(self.terms.items())]
        return "LaurentPoly(" + " + ".join(parts) + ")"


class UniLaurent:
    """Sparse Laurent polynomial in one variable y."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        self.terms = _clean({int(k): CycNum.coerce(v) for k, v in (terms or {}).items()})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, shift: int = 0) -> "UniLaurent":
        return cls({i + shift: c for i, c in enumerate(coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return UniLaurent(out)

    def __mul__(self, other):
        if not isinstance(other, UniLaurent):
            c = CycNum.coerce(other)
            return UniLaurent({k: c * v for k, v in self.terms.items()})
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                p = c1 * c2
                k = k1 + k2
                out[k] = out[k] + p if k in out else p
        return UniLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UniLaurent({0: 1})
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, UniLaurent):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def shift(self, s: int) -> "UniLaurent":
        return UniLaurent({k + s: c for k, c in self.terms.items()})

    def conj_reverse(self) -> "UniLaurent":
        """f(y) -> conj(f)(1/y): complex-conjugate coefficients, negate exponents."""
        return UniLaurent({-k: c.conjugate() for k, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "UniLaurent(0)"
        return "UniLaurent(" + " + ".join(f"{c!r}*y^{k}" for k, c in sorted(self.terms.items())) + ")"


def uni_val_deg(f: UniLaurent) -> tuple[int, int]:
    if f.is_zero():
        raise ZeroPolynomial("valuation of the zero polynomial is undefined")
    return min(f.terms), max(f.terms)


def cyclotomic_poly(d: int) -> list[int]:
    """Integer coefficients of Phi_d, lowest degree first."""
    return list(cyclotomic_coeffs(d))


def _poly_from_roots(roots: Iterable[CycNum], order: int) -> tuple[CycNum, ...]:
    coeffs = [CycNum.rational(1, order)]
    for r in roots:
        # multiply by (t - r)
        new = [CycNum.rational(0, order)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] - r * c
        coeffs = new
    return tuple(coeffs)


@dataclass(frozen=True, eq=False)
class KCycPoly:
    """Minimal polynomial over Q(zeta_m) of zeta_d^k.

    ``d`` is the exact order of the root and ``k`` the least exponent in its
    orbit, so equal polynomials have equal keys.
    """

    root_order: int
    root_exp: int
    conductor_K: int
    orbit: tuple = field(repr=False)
    coeffs: tuple = field(repr=False)
    value_at_one: CycNum = field(repr=False)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.root_order, self.root_exp, self.conductor_K)

    @property
    def degree(self) -> int:
        return len(self.orbit)

    @property
    def ambient_order(self) -> int:
        return lcm(self.root_order, self.conductor_K)

    def __eq__(self, other):
        if not isinstance(other, KCycPoly):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def roots(self) -> list[Fraction]:
        """Roots as fractions r in [0,1), meaning exp(2 pi i r)."""
        return [Fraction(j, self.root_order) for j in self.orbit]

    def constant_term(self) -> CycNum:
        return self.coeffs[0]

    def roots_as_numbers(self) -> list[CycNum]:
        return [root_of_unity(self.root_order, j) for j in self.orbit]

    def evaluate(self, x) -> CycNum:
        acc = CycNum.rational(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def label(self) -> str:
        if self.conductor_K == 1 or len(galois_orbit(self.root_order, self.root_exp, 1)) == self.degree:
            return f"Phi{self.root_order}"
        return f"Phi{self.root_order}[{self.root_exp}]"


@lru_cache(maxsize=None)
def k_cyc_poly(d: int, k: int, m: int) -> KCycPoly:
    """The K-cyclotomic polynomial of zeta_d^k over K = Q(zeta_m)."""
    if d < 1 or m < 1:
        raise ValueError("orders must be positive")
    g = gcd(k % d, d) if k % d else d
    d0 = d // g
    k0 = (k % d) // g
    if d0 == 1:
        raise IsPhiOne("the minimal polynomial of 1 is t - 1, which is excluded")
    orbit = tuple(sorted(galois_orbit(d0, k0, m)))
    rep = orbit[0]
    L = lcm(d0, m)
    roots = [root_of_unity(d0, j).embed(L) for j in orbit]
    coeffs = tuple(c.to_conductor(m) for c in _poly_from_roots(roots, L))
    val = CycNum.rational(0, m)
    for c in coeffs:
        val = val + c
    if val.is_zero():
        raise IsPhiOne("polynomial vanishes at 1")
    return KCycPoly(d0, rep, m, orbit, coeffs, val)


def k_cyc_poly_from_coeffs(coeffs: Sequence[CycNum], m: int) -> KCycPoly:
    """Identify an explicit monic coefficient list with a K-cyclotomic polynomial."""
    coeffs = [CycNum.coerce(c) for c in coeffs]
    if len(coeffs) < 2 or coeffs[-1] != 1:
        raise ValueError("K-cyclotomic polynomials are monic of degree at least 1")
    deg = len(coeffs) - 1
    # find a root of unity among candidates of bounded order
    L0 = lcm(m, 1)
    for c in coeffs:
        L0 = lcm(L0, c.order)
    for d in range(2, 4 * L0 * deg + 1):
        for k in range(1, d):
            if gcd(k, d) != 1:
                continue
            z = root_of_unity(d, k)
            acc = CycNum.rational(0)
            for c in reversed(coeffs):
                acc = acc * z + c
            if acc.is_zero():
                P = k_cyc_poly(d, k, m)
                if P.degree == deg and all(a == b for a, b in zip(P.coeffs, coeffs)):
                    return P
                raise ValueError("coefficients are not an irreducible K-cyclotomic polynomial")
    if deg == 1 and coeffs[0] == -1:
        raise IsPhiOne("the polynomial t - 1 is excluded")
    raise ValueError("coefficients are not a K-cyclotomic polynomial")


def eval_at_monomial(P: KCycPoly, M: Sequence[int]) -> LaurentPoly:
    """P(v^M) as a Laurent polynomial."""
    M = tuple(int(x) for x in M)
    return LaurentPoly({tuple(i * x for x in M): c for i, c in enumerate(P.coeffs)}, len(M))


def specialize_uni(M: Sequence[int], n: Sequence[int]) -> int:
    """Exponent of y in the image of v^M under v -> y^n."""
    return dot(M, n)


def split_power(P: KCycPoly, k: int) -> list[KCycPoly]:
    """K-cyclotomic factors of P(y^k) for k > 0, with multiplicity by repetition.

    The roots of P(y^k) are the tau with tau^k a root of P; grouping them into
    Galois orbits over K gives the factors.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    seen = set()
    out = []
    for j in P.orbit:
        # tau = zeta_{d k}^{j + d t}, t = 0..k-1
        D = P.root_order * k
        for t in range(k):
            e = (j + P.root_order * t) % D
            g = gcd(e, D)
            key = (D // g, e // g)
            if key in seen:
                continue
            Q = k_cyc_poly(D // g, e // g, P.conductor_K)
            seen.update((Q.root_order, x) for x in Q.orbit)
            out.append(Q)
    return out


def reciprocal(P: KCycPoly) -> KCycPoly:
    """The K-cyclotomic polynomial whose roots are the inverses of P's."""
    return k_cyc_poly(P.root_order, -P.root_exp, P.conductor_K)
