"""Generic Schur elements of the Hecke algebra of G7 in the v-variables.

Parameters: x_i = zeta_2^i X_i^12, y_j = zeta_3^j Y_j^12, z_k = zeta_3^k Z_k^12,
variable order X0 X1 Y0 Y1 Y2 Z0 Z1 Z2.  Each character is described by the
eigenvalues of S, T, U and (degrees 2, 3) the scalar r by which STU acts;
the templates below are permuted to match the descriptor.
"""
from __future__ import annotations

from fractions import Fraction

from rouquier.schur import SchurBuilder

NV = 8
XS, YS, ZS = (0, 1), (2, 3, 4), (5, 6, 7)


class Mono:
    """A monomial in x, y, z (and optionally the radical r), as v-exponents and phase."""

    def __init__(self, vec=None, phase=Fraction(0)):
        self.vec = list(vec or [0] * NV)
        self.phase = Fraction(phase)

    @staticmethod
    def x(i):
        v = [0] * NV
        v[XS[i]] = 12
        return Mono(v, Fraction(i, 2))

    @staticmethod
    def y(j):
        v = [0] * NV
        v[YS[j]] = 12
        return Mono(v, Fraction(j, 3))

    @staticmethod
    def z(k):
        v = [0] * NV
        v[ZS[k]] = 12
        return Mono(v, Fraction(k, 3))

    def __mul__(self, o):
        return Mono([a + b for a, b in zip(self.vec, o.vec)], self.phase + o.phase)

    def inv(self):
        return Mono([-a for a in self.vec], -self.phase)

    def __truediv__(self, o):
        return self * o.inv()

    def __pow__(self, k):
        return Mono([k * a for a in self.vec], k * self.phase)


def radical(prod: Mono, n: int, omega: Fraction) -> Mono:
    """The n-th root of ``prod`` whose value at v = 1 is exp(2 pi i omega)."""
    assert all(a % n == 0 for a in prod.vec)
    assert (n * omega - prod.phase) % 1 == 0, "radical inconsistent with the central scalar"
    return Mono([a // n for a in prod.vec], omega)


def _phi1(b: SchurBuilder, m: Mono):
    b.phi_one(m.vec, m.phase)


def schur_deg1(i, j, k):
    x, y, z = Mono.x, Mono.y, Mono.z
    i2 = 1 - i
    j1, j2 = [a for a in range(3) if a != j]
    k1, k2 = [a for a in range(3) if a != k]
    b = SchurBuilder(NV, 12)
    _phi1(b, x(i) / x(i2))
    _phi1(b, x(i) * y(j) ** 2 * z(k) ** 2 / (x(i2) * y(j1) * y(j2) * z(k1) * z(k2)))
    _phi1(b, y(j) / y(j1))
    _phi1(b, y(j) / y(j2))
    _phi1(b, z(k) / z(k1))
    _phi1(b, z(k) / z(k2))
    for ja in (j1, j2):
        for kb in (k1, k2):
            _phi1(b, x(i) * y(j) * z(k) / (x(i2) * y(ja) * z(kb)))
    return b.build()


def schur_deg2(ymiss, ypres, zmiss, zpres, omega):
    """T has eigenvalues y_B, y_C (y_A missing), U has z_E, z_F (z_D missing)."""
    x, y, z = Mono.x, Mono.y, Mono.z
    A, (B, C) = ymiss, ypres
    D, (E, F) = zmiss, zpres
    r = radical(x(0) * x(1) * y(B) * y(C) * z(E) * z(F), 2, omega)
    b = SchurBuilder(NV, 12)
    b.scale(2)
    lead = y(C) / y(A)
    b.shift(lead.vec)
    from rouquier.schur import zeta
    b.scale(zeta(lead.phase))
    _phi1(b, y(A) / y(B))
    _phi1(b, y(C) / y(A))
    _phi1(b, z(E) / z(D))
    _phi1(b, z(F) / z(D))
    for i in (0, 1):
        _phi1(b, r / (x(i) * y(A) * z(D)))
        _phi1(b, r / (x(i) * y(C) * z(E)))
        _phi1(b, r / (x(i) * y(C) * z(F)))
    return b.build()


def schur_deg3(i, omega):
    """S has eigenvalue x_i twice and x_(1-i) once."""
    x, y, z = Mono.x, Mono.y, Mono.z
    i2 = 1 - i
    prod = x(i) ** 2 * x(i2)
    for j in range(3):
        prod = prod * y(j) * z(j)
    r = radical(prod, 3, omega)
    b = SchurBuilder(NV, 12)
    b.scale(3)
    _phi1(b, x(i2) / x(i))
    for j in range(3):
        for k in range(3):
            _phi1(b, x(i) * y(j) * z(k) / r)
    return b.build()
