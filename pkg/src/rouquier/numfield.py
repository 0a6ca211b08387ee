"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) modulo the
N-th cyclotomic polynomial, with ``Fraction`` coefficients.  Operands of
different conductors are embedded into the lcm conductor on the fly
(``zeta_n -> zeta_L^(L/n)``).

Z[zeta_N] is the full ring of integers of Q(zeta_N), so an element is an
algebraic integer exactly when its power-basis coefficients are integers.
``is_integral`` relies on this.

Prime ideals above a rational prime p are represented by the monic
irreducible factors of Phi_N modulo p (Dedekind-Kummer; Z[zeta_N] is
monogenic so this holds for ramified primes too).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "CycNum",
    "PrimeIdeal",
    "NumFieldError",
    "IncompatibleConductors",
    "NotIntegral",
    "InvalidPrime",
    "root_of_unity",
    "is_integral",
    "primes_above",
    "in_prime_ideal",
    "galois_orbit",
    "cyclotomic_coeffs",
    "euler_phi",
    "lcm",
]

# Conductors above this bound are refused; the shipped data never exceeds 60
# and the block engine only needs lcm's of small root orders.
MAX_CONDUCTOR = 5040


class NumFieldError(ValueError):
    pass


class IncompatibleConductors(NumFieldError):
    pass


class NotIntegral(NumFieldError):
    pass


class InvalidPrime(NumFieldError):
    pass


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def factorint(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorint(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    f = factorint(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def is_prime(p: int) -> bool:
    return p >= 2 and factorint(p) == ((p, 1),)


# -- integer polynomials, coefficient lists low degree first -----------------

def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_exact_div(a: Sequence[int], b: Sequence[int]) -> list:
    """Quotient of a by a monic b; the remainder must vanish."""
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        q[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    assert not any(a[:db]), "non-exact cyclotomic division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_coeffs(d: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = _poly_exact_div(num, cyclotomic_coeffs(e))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced power-basis coordinates of zeta_n^k for k = 0 .. n-1."""
    deg = euler_phi(n)
    phi = cyclotomic_coeffs(n)
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(Fraction(c) for c in cur))
        # multiply by t and reduce with t^deg = -sum(phi[i] t^i)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


def _reduce(coeffs: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    """Reduce a polynomial in zeta_n of arbitrary length modulo Phi_n."""
    deg = euler_phi(n)
    table = _power_table(n)
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if c:
            row = table[k % n]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


@dataclass(frozen=True, eq=False)
class CycNum:
    """An element of Q(zeta_order) in the reduced power basis."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("conductor must be positive")
        if len(self.coeffs) != euler_phi(self.order):
            raise ValueError(
                f"expected {euler_phi(self.order)} coefficients for conductor "
                f"{self.order}, got {len(self.coeffs)}"
            )

    # -- construction --------------------------------------------------------

    @classmethod
    def rational(cls, q, order: int = 1) -> "CycNum":
        coeffs = [Fraction(0)] * euler_phi(order)
        coeffs[0] = Fraction(q)
        return cls(order, tuple(coeffs))

    @classmethod
    def from_power_sum(cls, order: int, terms: dict) -> "CycNum":
        """Build sum(c * zeta_order^k) from a ``{k: c}`` mapping."""
        arr = [Fraction(0)] * order
        for k, c in terms.items():
            arr[k % order] += Fraction(c)
        return cls(order, _reduce(arr, order))

    @classmethod
    def coerce(cls, x) -> "CycNum":
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")

    # -- embeddings ----------------------------------------------------------

    def embed(self, order: int) -> "CycNum":
        if order == self.order:
            return self
        if order % self.order:
            raise IncompatibleConductors(f"{self.order} does not divide {order}")
        if order > MAX_CONDUCTOR:
            raise IncompatibleConductors(f"conductor {order} exceeds {MAX_CONDUCTOR}")
        step = order // self.order
        arr = [Fraction(0)] * order
        for i, c in enumerate(self.coeffs):
            arr[i * step] = c
        return CycNum(order, _reduce(arr, order))

    def to_conductor(self, m: int) -> "CycNum":
        """Re-express self in Q(zeta_m); raises if self is not in that subfield."""
        if m % self.order == 0:
            return self.embed(m)
        L = lcm(self.order, m)
        x = self.embed(L)
        basis = [root_of_unity(m, i).embed(L).coeffs for i in range(euler_phi(m))]
        sol = _solve_rational(basis, x.coeffs)
        if sol is None:
            raise IncompatibleConductors(f"number of order {self.order} does not lie in Q(zeta_{m})")
        return CycNum(m, tuple(sol))

    def minimal_conductor(self) -> "CycNum":
        """The same number written over the smallest cyclotomic field containing it."""
        for m in sorted(d for d in range(1, self.order + 1) if self.order % d == 0):
            if m % 2 == 0 and (m // 2) % 2 == 1:
                continue  # Q(zeta_2k) = Q(zeta_k) for odd k
            try:
                return self.to_conductor(m)
            except IncompatibleConductors:
                continue
        return self

    def _common(self, other) -> tuple["CycNum", "CycNum"]:
        other = CycNum.coerce(other)
        n = lcm(self.order, other.order)
        return self.embed(n), other.embed(n)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:]) and self.normalized_trace() == self.coeffs[0]

    def normalized_trace(self) -> Fraction:
        """Tr_{Q(zeta_N)/Q}(self) / phi(N); independent of the chosen conductor."""
        n = self.order
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                m = n // gcd(i, n)
                total += c * Fraction(mobius(m), euler_phi(m))
        return total

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash(self.normalized_trace())

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return CycNum(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return CycNum(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return CycNum.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(self.order, tuple(x * other for x in self.coeffs))
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        prod = _poly_mul(a.coeffs, b.coeffs)
        return CycNum(a.order, _reduce(prod, a.order))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        return CycNum(self.order, _inverse_mod(self.coeffs, self.order))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return CycNum(self.order, tuple(x / other for x in self.coeffs))
        other = CycNum.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycNum.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, j: int) -> "CycNum":
        """Image under the automorphism zeta_N -> zeta_N^j, gcd(j, N) = 1."""
        n = self.order
        if gcd(j, n) != 1:
            raise ValueError(f"{j} is not a unit modulo {n}")
        return CycNum.from_power_sum(n, {i * j: c for i, c in enumerate(self.coeffs) if c})

    def conjugate(self) -> "CycNum":
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Absolute norm N_{Q(zeta_N)/Q}, as a product over Galois conjugates."""
        n = self.order
        prod = CycNum.rational(1, n)
        for j in range(1, n + 1):
            if gcd(j, n) == 1:
                prod = prod * self.galois(j)
        assert prod.is_rational()
        return prod.coeffs[0]

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    def __str__(self):
        """GAP-style text, e.g. 2 + E(12)^4."""
        x = self.minimal_conductor()
        terms = []
        for i, c in enumerate(x.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = f"E({x.order})" + (f"^{i}" if i > 1 else "")
                terms.append(mon if c == 1 else ("-" + mon if c == -1 else f"{c}*{mon}"))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self):
        return f"CycNum({self})"


def _inverse_mod(coeffs: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    """Inverse of a nonzero residue modulo Phi_n by extended Euclid over Q[t]."""

    def trim(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_(a, b):
        a = list(a)
        q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
        lead = b[-1]
        while len(a) >= len(b) and a:
            c = a[-1] / lead
            k = len(a) - len(b)
            q[k] = c
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
            a = trim(a)
        return trim(q), a

    def sub(a, b):
        m = max(len(a), len(b))
        a = list(a) + [Fraction(0)] * (m - len(a))
        b = list(b) + [Fraction(0)] * (m - len(b))
        return trim([x - y for x, y in zip(a, b)])

    def mul(a, b):
        if not a or not b:
            return []
        return trim(_poly_mul(a, b))

    r0, r1 = [Fraction(c) for c in cyclotomic_coeffs(n)], trim(coeffs)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    # r1 is a nonzero constant since Phi_n is irreducible
    inv = [c / r1[0] for c in s1]
    return _reduce(inv, n)


def _solve_rational(columns, target):
    """Solve sum_i c_i columns[i] = target over Q; None if inconsistent."""
    n = len(columns)
    rows = [[Fraction(col[r]) for col in columns] + [Fraction(target[r])] for r in range(len(target))]
    piv_cols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] != 0 for row in rows[r:]):
        return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][-1]
    return sol


def root_of_unity(d: int, k: int = 1) -> CycNum:
    """zeta_d^k in Q(zeta_d)."""
    if d < 1:
        raise ValueError("root order must be positive")
    return CycNum.from_power_sum(d, {k % d: 1})


def is_integral(a: CycNum) -> bool:
    return all(c.denominator == 1 for c in a.coeffs)


# -- finite field polynomials (coefficients low degree first, mod p) ---------

def _gf_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_rem(a, b, p):
    a = [x % p for x in a]
    a = _gf_trim(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        k = len(a) - len(b)
        for j, bj in enumerate(b):
            a[k + j] = (a[k + j] - c * bj) % p
        a = _gf_trim(a)
    return a


def _gf_div(a, b, p):
    a = [x % p for x in a]
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for j, bj in enumerate(b):
            a[k + j] = (a[k + j] - c * bj) % p
        a = _gf_trim(a)
    return q, a


# Candidates enumerated per degree before switching to sympy's factoriser.
ENUMERATION_BUDGET = 200_000


def _gf_factor_enumerate(f, p):
    """Distinct monic irreducible factors of f over GF(p) with multiplicities."""
    factors = []
    rest = list(f)
    d = 1
    while len(rest) - 1 >= 2 * d:
        if p**d > ENUMERATION_BUDGET:
            return None
        for tail in itertools.product(range(p), repeat=d):
            cand = list(tail) + [1]
            mult = 0
            while True:
                q, r = _gf_div(rest, cand, p)
                if r:
                    break
                rest = q
                mult += 1
            if mult:
                factors.append((tuple(cand), mult))
        d += 1
    if len(rest) > 1:
        # what is left is irreducible (or a power of an earlier factor)
        for i, (g, m) in enumerate(factors):
            if list(g) == rest:
                factors[i] = (g, m + 1)
                break
        else:
            factors.append((tuple(rest), 1))
    return factors


def _gf_factor_sympy(f, p):
    from sympy.polys.domains import ZZ
    from sympy.polys.galoistools import gf_factor

    _, facs = gf_factor([c % p for c in reversed(f)], p, ZZ)
    return [(tuple(int(c) for c in reversed(g)), m) for g, m in facs]


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime of Z[zeta_order] above ``p``, given by a factor of Phi_order mod p."""

    p: int
    order: int
    factor: tuple  # monic, low degree first, entries in [0, p)
    multiplicity: int = 1  # ramification index

    @property
    def residue_degree(self) -> int:
        return len(self.factor) - 1

    def __repr__(self):
        return f"PrimeIdeal(p={self.p}, order={self.order}, factor={list(self.factor)})"


@lru_cache(maxsize=None)
def primes_above(p: int, order: int) -> tuple[PrimeIdeal, ...]:
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not a prime")
    if order < 1:
        raise ValueError("conductor must be positive")
    phi = [c % p for c in cyclotomic_coeffs(order)]
    facs = _gf_factor_enumerate(phi, p)
    if facs is None:
        facs = _gf_factor_sympy(phi, p)
    facs = sorted(facs, key=lambda fm: (len(fm[0]), fm[0][::-1]))
    return tuple(PrimeIdeal(p, order, g, m) for g, m in facs)


def in_prime_ideal(a: CycNum, P: PrimeIdeal) -> bool:
    a = CycNum.coerce(a).to_conductor(P.order)
    if not is_integral(a):
        raise NotIntegral(f"{a!r} is not an algebraic integer")
    r = _gf_rem([int(c) for c in a.coeffs], list(P.factor), P.p)
    return not r


def galois_orbit(d: int, k: int, m: int) -> frozenset:
    """Exponents j mod d with zeta_d^j conjugate to zeta_d^k over Q(zeta_m)."""
    if d < 1 or m < 1:
        raise ValueError("orders must be positive")
    L = lcm(d, m)
    return frozenset(
        (k * j) % d for j in range(1, L + 1) if gcd(j, L) == 1 and j % m == 1 % m
    )


def parse_cycnum(obj, order: int | None = None) -> CycNum:
    """Decode the JSON forms: int, "num/den", {"zeta": [d, k]}, {"order", "coeffs"}.

    ``{"sum": [...]}`` adds several such terms; ``{"mul": [...]}`` multiplies.
    """
    if isinstance(obj, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(obj, int):
        x = CycNum.rational(obj)
    elif isinstance(obj, str):
        x = CycNum.rational(Fraction(obj))
    elif isinstance(obj, dict):
        keys = set(obj)
        if keys == {"zeta"}:
            d, k = obj["zeta"]
            x = root_of_unity(int(d), int(k))
        elif keys == {"order", "coeffs"}:
            x = CycNum(int(obj["order"]), tuple(Fraction(c) for c in obj["coeffs"]))
        elif keys == {"sum"}:
            x = CycNum.rational(0)
            for term in obj["sum"]:
                x = x + parse_cycnum(term)
        elif keys == {"mul"}:
            x = CycNum.rational(1)
            for term in obj["mul"]:
                x = x * parse_cycnum(term)
        else:
            raise ValueError(f"unrecognised cyclotomic number encoding {obj!r}")
    else:
        raise TypeError(f"unrecognised cyclotomic number encoding {obj!r}")
    if order is not None:
        x = x.embed(lcm(order, x.order))
    return x


def dump_cycnum(x: CycNum):
    """Inverse of ``parse_cycnum``: plain ints/strings for rationals."""
    if x.is_rational():
        q = x.coeffs[0]
        return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    coeffs = [int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in x.coeffs]
    return {"order": x.order, "coeffs": coeffs}


def as_root_of_unity(x: CycNum) -> Fraction | None:
    """Return r in [0, 1) with x = exp(2 pi i r), or None if x is not a root of unity."""
    n = x.order
    # roots of unity in Q(zeta_n) are +-zeta_n^k
    for k in range(2 * n):
        cand = CycNum.from_power_sum(n, {k: 1}) if k < n else -CycNum.from_power_sum(n, {k - n: 1})
        if cand == x:
            num = 2 * k if k < n else 2 * (k - n) + n
            return Fraction(num % (2 * n), 2 * n)
    return None


def iter_units(n: int) -> Iterable[int]:
    return (j for j in range(1, n + 1) if gcd(j, n) == 1)
