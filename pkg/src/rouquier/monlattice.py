"""Integer exponent lattices: primitive monomials and their associated morphisms.

A monomial in the parameter variables is identified with its exponent vector.
For a primitive vector ``a`` (gcd of entries 1) the associated morphism is a
surjection Z^(m+1) -> Z^m whose kernel is exactly Z*a; on monomials it sends
M to 1 and nothing else (up to powers of M).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

__all__ = [
    "LatticeError",
    "ZeroVector",
    "NotPrimitive",
    "LengthMismatch",
    "NonZeroOrbitDegree",
    "LatticeMap",
    "normalize",
    "bezout",
    "associated_morphism",
    "verify_associated",
    "monomial_power",
    "hyperplane_contains",
    "canonicalize_hyperplane",
    "dot",
    "integer_kernel",
    "is_surjective",
    "unimodular_completion",
]


class LatticeError(ValueError):
    pass


class ZeroVector(LatticeError):
    pass


class NotPrimitive(LatticeError):
    pass


class LengthMismatch(LatticeError):
    pass


class NonZeroOrbitDegree(LatticeError):
    pass


def vec_gcd(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)} differ")
    return sum(x * y for x, y in zip(a, b))


def normalize(a: Sequence[int]) -> tuple[tuple[int, ...], int]:
    d = vec_gcd(a)
    if d == 0:
        raise ZeroVector("the zero vector has no primitive part")
    return tuple(x // d for x in a), d


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def bezout(a: Sequence[int]) -> tuple[int, ...]:
    """u with u.a = gcd(a), by folding the extended gcd left to right."""
    u = [0] * len(a)
    g = 0
    for i, x in enumerate(a):
        if x == 0:
            continue
        if g == 0:
            g, u[i] = abs(x), (1 if x > 0 else -1)
            continue
        if x % g == 0:
            continue
        g2, s, t = _ext_gcd(g, x)
        u = [s * c for c in u]
        u[i] = t
        g = g2
    return tuple(u)


# -- exact integer linear algebra -------------------------------------------

def _hnf_rows(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-reduce over Z.  Returns (H, U) with U unimodular and U*rows = H,
    H in row echelon form with positive pivots (zero rows at the bottom)."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    H = [list(r) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r >= m:
            break
        # euclid on column c among rows r..m-1
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(H[i][c]), i))
            H[r], H[piv] = H[piv], H[r]
            U[r], U[piv] = U[piv], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < m and H[r][c]:
            if H[r][c] < 0:
                H[r] = [-x for x in H[r]]
                U[r] = [-x for x in U[r]]
            r += 1
    return H, U


def _transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def integer_kernel(A: Sequence[Sequence[int]], ncols: int | None = None) -> list[tuple[int, ...]]:
    """A Z-basis of {x in Z^n : A x = 0}."""
    if not A:
        n = ncols or 0
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    n = len(A[0])
    # column operations on A == row operations on A^T
    H, U = _hnf_rows(_transpose([list(r) for r in A]))
    return [tuple(U[i]) for i in range(n) if not any(H[i])]


def rank(A: Sequence[Sequence[int]]) -> int:
    if not A:
        return 0
    H, _ = _hnf_rows([list(r) for r in A])
    return sum(1 for r in H if any(r))


def is_surjective(A: Sequence[Sequence[int]]) -> bool:
    """True iff the integer matrix A (m x n) maps Z^n onto Z^m.

    The rows of the echelon form of A^T span the image; it is all of Z^m
    exactly when there are m of them and every pivot is 1.
    """
    if not A:
        return True
    H, _ = _hnf_rows(_transpose([list(r) for r in A]))
    H = [r for r in H if any(r)]
    if len(H) != len(A):
        return False
    return all(next(x for x in r if x) == 1 for r in H)


def unimodular_completion(u: Sequence[int]) -> list[list[int]]:
    """A unimodular matrix V (list of columns) whose first column w satisfies
    u.w = 1 and whose remaining columns span the kernel of u.

    When u has an entry +-1 the construction is explicit and sparse; otherwise
    it falls back to the integer kernel of u.
    """
    n = len(u)
    for i, x in enumerate(u):
        if abs(x) == 1:
            first = [0] * n
            first[i] = x
            cols = [first]
            for j in range(n):
                if j != i:
                    c = [0] * n
                    c[j] = 1
                    c[i] = -u[j] * x
                    cols.append(c)
            return cols
    w = list(bezout(u))
    if dot(w, u) != 1:
        raise NotPrimitive(f"{tuple(u)} is not primitive")
    return [w] + [list(k) for k in integer_kernel([list(u)])]


def _inverse_unimodular(cols: list[list[int]]) -> list[list[int]]:
    """Inverse of the unimodular matrix with the given columns, as rows."""
    n = len(cols)
    V = _transpose(cols)  # rows of V
    # augment and row-reduce over Q, results must be integral
    from fractions import Fraction

    A = [[Fraction(x) for x in V[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        pv = A[c][c]
        A[c] = [x / pv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    inv = [[A[i][n + j] for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for r in inv for x in r), "matrix not unimodular"
    return [[int(x) for x in r] for r in inv]


@dataclass(frozen=True)
class LatticeMap:
    """Surjection Z^(m+1) -> Z^m given by ``matrix`` with kernel Z*kernel_gen."""

    matrix: tuple
    kernel_gen: tuple

    def apply(self, y: Sequence[int]) -> tuple[int, ...]:
        return tuple(dot(row, y) for row in self.matrix)

    def monomial_images(self) -> list[tuple[int, ...]]:
        """Image of each unit vector (column of the matrix)."""
        return [tuple(col) for col in zip(*self.matrix)]


def associated_morphism(a: Sequence[int]) -> LatticeMap:
    """Build the morphism associated with the primitive monomial ``a``.

    With u.a = 1 from ``bezout``, the projection P(y) = y - (u.y) a kills a and
    lands in ker(u).  Writing P(y) in a unimodular basis (w, k_1, ..., k_m)
    with u.w = 1 and k_i spanning ker(u), its k-coordinates give the map.
    """
    a = tuple(int(x) for x in a)
    if not any(a):
        raise ZeroVector("the zero vector has no associated morphism")
    if vec_gcd(a) != 1:
        raise NotPrimitive(f"{a} is not primitive; normalize first")
    n = len(a)
    u = bezout(a)
    cols = unimodular_completion(u)
    Vinv = _inverse_unimodular(cols)
    # P as a matrix: P = I - a u^T
    P = [[int(i == j) - a[i] * u[j] for j in range(n)] for i in range(n)]
    F = [[sum(Vinv[r][k] * P[k][j] for k in range(n)) for j in range(n)] for r in range(1, n)]
    return LatticeMap(tuple(tuple(r) for r in F), a)


def verify_associated(L: LatticeMap) -> bool:
    rows = [list(r) for r in L.matrix]
    a = list(L.kernel_gen)
    if not rows:
        return len(a) == 1 and abs(a[0]) == 1
    if any(len(r) != len(a) for r in rows):
        return False
    if any(dot(r, a) for r in rows):
        return False
    if not is_surjective(rows):
        return False
    ker = integer_kernel(rows)
    if len(ker) != 1:
        return False
    return monomial_power(a, ker[0]) in (1, -1)


def monomial_power(M: Sequence[int], N: Sequence[int]) -> Optional[int]:
    if len(M) != len(N):
        raise LengthMismatch(f"lengths {len(M)} and {len(N)} differ")
    if not any(M):
        raise ZeroVector("M must be nonzero")
    i = next(i for i, x in enumerate(M) if x)
    if N[i] % M[i]:
        return None
    k = N[i] // M[i]
    if all(n == k * m for m, n in zip(M, N)):
        return k
    return None


def hyperplane_contains(H: Sequence[int], n: Sequence[int]) -> bool:
    return dot(H, n) == 0


def canonicalize_hyperplane(a: Sequence[int], orbit_sizes: Sequence[int] | None = None) -> tuple[int, ...]:
    """Primitive, sign-normalised representative of the hyperplane a.x = 0.

    If ``orbit_sizes`` is given, each consecutive block of that many slots must
    sum to zero.
    """
    a = tuple(int(x) for x in a)
    if orbit_sizes is not None:
        if sum(orbit_sizes) != len(a):
            raise LengthMismatch("orbit layout does not match vector length")
        pos = 0
        for s in orbit_sizes:
            if sum(a[pos:pos + s]):
                raise NonZeroOrbitDegree(f"{a} has nonzero degree on slots {pos}..{pos + s - 1}")
            pos += s
    h, _ = normalize(a)
    first = next(x for x in h if x)
    if first < 0:
        h = tuple(-x for x in h)
    return h
