"""Schur elements in factored (essential) form.

A Schur element is stored as

    s(v) = xi * v^n0 * prod_i Psi_i(v^M_i)^mult_i

with xi a nonzero algebraic integer, each Psi_i a K-cyclotomic polynomial and
each M_i a primitive exponent vector of degree zero on every hyperplane orbit.
Under v -> y^n the element becomes psi * y^e * (product of cyclotomic
polynomials in y); valuation and degree are read off the factored form.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .monlattice import canonicalize_hyperplane, dot, normalize, vec_gcd
from .numfield import CycNum, PrimeIdeal, in_prime_ideal, is_integral, root_of_unity
from .polyalg import (
    IsPhiOne,
    KCycPoly,
    LaurentPoly,
    UniLaurent,
    eval_at_monomial,
    k_cyc_poly,
    reciprocal,
    split_power,
)

__all__ = [
    "Factor",
    "FactoredSchur",
    "SpecializedSchur",
    "SchurBuilder",
    "NonEssentialCollapse",
    "validate_schur",
    "value_at_one",
    "essential_monomials",
    "specialize",
    "is_bad_prime",
    "a_plus_A",
    "expand",
    "expand_specialized",
    "clifford_derive",
    "equal_up_to_units",
    "zeta",
]


class NonEssentialCollapse(ValueError):
    pass


def zeta(r: Fraction) -> CycNum:
    """exp(2 pi i r) for rational r."""
    r = Fraction(r) % 1
    return root_of_unity(r.denominator, r.numerator)


@dataclass(frozen=True)
class Factor:
    psi: KCycPoly
    M: tuple
    mult: int = 1


@dataclass(frozen=True)
class FactoredSchur:
    xi: CycNum
    n0: tuple
    factors: tuple = ()

    @property
    def nvars(self) -> int:
        return len(self.n0)


@dataclass(frozen=True)
class SpecializedSchur:
    psi_coeff: CycNum
    y_exp: int
    cyc_factors: tuple  # ((KCycPoly, mult), ...)
    val: int
    deg: int
    mu_order: int

    @property
    def a(self) -> Fraction:
        return Fraction(self.val, self.mu_order)

    @property
    def A(self) -> Fraction:
        return Fraction(self.deg, self.mu_order)


def _orbit_degrees(v: Sequence[int], orbit_sizes: Sequence[int]) -> list[int]:
    out, pos = [], 0
    for s in orbit_sizes:
        out.append(sum(v[pos:pos + s]))
        pos += s
    return out


def validate_schur(s: FactoredSchur, orbit_sizes: Sequence[int] | None = None) -> list[str]:
    """All violations of the essential-form invariants (empty list if valid)."""
    problems = []
    n = len(s.n0)
    if orbit_sizes is not None and sum(orbit_sizes) != n:
        problems.append(f"N has length {n}, layout expects {sum(orbit_sizes)}")
        orbit_sizes = None
    if s.xi.is_zero():
        problems.append("xi is zero")
    elif not is_integral(s.xi):
        problems.append("xi is not integral")
    if orbit_sizes is not None and any(_orbit_degrees(s.n0, orbit_sizes)):
        problems.append(f"N={list(s.n0)} has nonzero orbit degree")
    for f in s.factors:
        tag = f"factor {f.psi.label()} at M={list(f.M)}"
        if len(f.M) != n:
            problems.append(f"{tag}: length mismatch")
            continue
        if not any(f.M):
            problems.append(f"{tag}: zero monomial")
            continue
        if vec_gcd(f.M) != 1:
            problems.append(f"{tag}: gcd != 1")
        if orbit_sizes is not None and any(_orbit_degrees(f.M, orbit_sizes)):
            problems.append(f"{tag}: nonzero orbit degree")
        if f.psi.root_order == 1:
            problems.append(f"{tag}: Phi_1 forbidden")
        if f.mult < 1:
            problems.append(f"{tag}: multiplicity {f.mult} < 1")
        c0 = f.psi.constant_term()
        if c0.is_zero() or not is_integral(c0) or abs(c0.norm()) != 1:
            problems.append(f"{tag}: constant term is not a unit")
    return problems


def value_at_one(s: FactoredSchur) -> CycNum:
    val = s.xi
    for f in s.factors:
        val = val * f.psi.value_at_one ** f.mult
    return val


def essential_monomials(s: FactoredSchur, P: PrimeIdeal) -> set[tuple[int, ...]]:
    return {
        canonicalize_hyperplane(f.M)
        for f in s.factors
        if in_prime_ideal(f.psi.value_at_one, P)
    }


def specialize(s: FactoredSchur, n: Sequence[int], mu_order: int) -> SpecializedSchur:
    """Image of s under v -> y^n, computed factor by factor."""
    psi = s.xi
    shift = dot(s.n0, n)
    val = deg = shift
    cyc: Counter = Counter()
    for f in s.factors:
        k = dot(f.M, n)
        d = f.psi.degree
        if k == 0:
            psi = psi * f.psi.value_at_one ** f.mult
            continue
        if k > 0:
            deg += k * d * f.mult
            base = f.psi
        else:
            # Psi(y^k) = y^(k d) * Psi(0) * Psi*(y^|k|), Psi* with inverted roots
            val += k * d * f.mult
            shift += k * d * f.mult
            psi = psi * f.psi.constant_term() ** f.mult
            base = reciprocal(f.psi)
        for Q in split_power(base, abs(k)):
            cyc[Q] += f.mult
    cyc_factors = tuple(sorted(cyc.items(), key=lambda qm: qm[0].key))
    return SpecializedSchur(psi, shift, cyc_factors, val, deg, mu_order)


def is_bad_prime(sp: SpecializedSchur, P: PrimeIdeal) -> bool:
    return in_prime_ideal(sp.psi_coeff, P)


def a_plus_A(sp: SpecializedSchur) -> Fraction:
    return sp.a + sp.A


def expand(s: FactoredSchur) -> LaurentPoly:
    """Full multivariate expansion (test oracle; exponential in size)."""
    out = LaurentPoly.monomial(s.n0, s.xi)
    for f in s.factors:
        out = out * eval_at_monomial(f.psi, f.M) ** f.mult
    return out


def expand_specialized(s: FactoredSchur, n: Sequence[int]) -> UniLaurent:
    """s(y^n) expanded directly in one variable, without using the factored shortcut."""
    out = UniLaurent({dot(s.n0, n): s.xi})
    for f in s.factors:
        k = dot(f.M, n)
        terms: dict = {}
        for i, c in enumerate(f.psi.coeffs):
            terms[i * k] = terms.get(i * k, 0) + c  # k = 0 collapses all terms
        out = out * UniLaurent(terms) ** f.mult
    return out


class SchurBuilder:
    """Accumulates c * (v^vec - tau) factors and assembles a FactoredSchur.

    Roots tau are rational numbers r meaning exp(2 pi i r).  Linear factors
    sharing a primitive monomial are grouped into Galois orbits over
    K = Q(zeta_m); a product that is not defined over K is an error.
    """

    def __init__(self, nvars: int, conductor: int):
        self.nvars = nvars
        self.m = conductor
        self.xi = CycNum.rational(1)
        self.n0 = [0] * nvars
        self.roots: dict[tuple, Counter] = defaultdict(Counter)

    def scale(self, c) -> "SchurBuilder":
        self.xi = self.xi * CycNum.coerce(c)
        return self

    def shift(self, vec: Sequence[int], times: int = 1) -> "SchurBuilder":
        self.n0 = [a + times * b for a, b in zip(self.n0, vec)]
        return self

    def linear(self, vec: Sequence[int], tau: Fraction, mult: int = 1) -> "SchurBuilder":
        """Multiply by (v^vec - exp(2 pi i tau))^mult."""
        tau = Fraction(tau) % 1
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.nvars:
            raise ValueError("exponent vector length does not match the layout")
        if not any(vec):
            self.xi = self.xi * (1 - zeta(tau)) ** mult
            if self.xi.is_zero():
                raise NonEssentialCollapse("a factor specialises to zero")
            return self
        prim, g = normalize(vec)
        flip = next(x for x in prim if x) < 0
        if flip:
            prim = tuple(-x for x in prim)
        for t in range(g):
            sigma = (tau + t) / g  # sigma^g = tau
            if flip:
                # (w - sigma) = -sigma * v^(-prim) * (v^prim - sigma^-1)
                self.xi = self.xi * (-zeta(sigma)) ** mult
                self.shift([-x for x in prim], mult)
                self.roots[prim][(-sigma) % 1] += mult
            else:
                self.roots[prim][sigma % 1] += mult
        return self

    def phi_one(self, vec: Sequence[int], lead: Fraction = Fraction(0), mult: int = 1) -> "SchurBuilder":
        """Multiply by (zeta(lead) * v^vec - 1)^mult."""
        lead = Fraction(lead)
        self.xi = self.xi * zeta(lead) ** mult
        return self.linear(vec, -lead, mult)

    def poly(self, P: KCycPoly, M: Sequence[int], mult: int = 1) -> "SchurBuilder":
        for r in P.roots():
            self.linear(M, r, mult)
        return self

    def build(self) -> FactoredSchur:
        factors = []
        for prim in sorted(self.roots):
            pool = +self.roots[prim]
            while pool:
                r = min(pool)
                if r == 0:
                    raise IsPhiOne(f"factor (v^{list(prim)} - 1) is forbidden")
                P = k_cyc_poly(r.denominator, r.numerator, self.m)
                orbit_roots = [Fraction(j, P.root_order) for j in P.orbit]
                mult = min(pool[x] for x in orbit_roots)
                if mult == 0:
                    raise ValueError(
                        f"roots at v^{list(prim)} are not closed under Galois over Q(zeta_{self.m})"
                    )
                for x in orbit_roots:
                    pool[x] -= mult
                pool = +pool
                factors.append(Factor(P, prim, mult))
        factors.sort(key=lambda f: (f.M, f.psi.key))
        return FactoredSchur(self.xi.to_conductor(self.m), tuple(self.n0), tuple(factors))


def clifford_derive(
    parent: FactoredSchur,
    spec_map: Sequence[tuple[Fraction, Optional[int]]],
    orbit_size: int,
    new_nvars: int,
    conductor: int,
) -> FactoredSchur:
    """Specialise a parent Schur element along v_i -> zeta(r_i) * w_{t_i}.

    ``spec_map[i] = (r_i, t_i)`` with ``t_i`` None meaning v_i -> zeta(r_i).
    The result is divided by ``orbit_size``.
    """
    if len(spec_map) != parent.nvars:
        raise ValueError("specialisation map does not match the parent layout")

    def push(vec):
        out = [0] * new_nvars
        phase = Fraction(0)
        for x, (r, t) in zip(vec, spec_map):
            phase += x * Fraction(r)
            if t is not None:
                out[t] += x
        return out, phase

    b = SchurBuilder(new_nvars, conductor)
    n0, ph = push(parent.n0)
    b.shift(n0)
    b.scale(parent.xi * zeta(ph))
    for f in parent.factors:
        vec, ph = push(f.M)
        # Psi(zeta(ph) w^vec) = zeta(ph)^deg * prod_omega (w^vec - omega/zeta(ph))
        b.scale(zeta(ph * f.psi.degree) ** f.mult)
        for omega in f.psi.roots():
            b.linear(vec, omega - ph, f.mult)
    b.xi = b.xi / orbit_size
    return b.build()


def equal_up_to_units(a: FactoredSchur, b: FactoredSchur) -> bool:
    """Same monomial factors and xi agreeing up to a root of unity."""
    if Counter(a.factors) != Counter(b.factors):
        return False
    q = a.xi / b.xi
    if not is_integral(q) or not is_integral(q.inverse()):
        return False
    return True
