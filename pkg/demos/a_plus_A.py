"""a + A along a specialisation is linear in the exponent vector.

Compares the closed form L.n / mu with a full expansion of each specialised
Schur element of G4.
"""
from fractions import Fraction

from rouquier import load_group
from rouquier.blockengine import linear_a_plus_A
from rouquier.monlattice import dot
from rouquier.polyalg import uni_val_deg
from rouquier.schur import expand_specialized

W = load_group("G4")
for n in [(0, 1, 2), (0, 1, 3), (2, -1, 4)]:
    print(f"n = {n}")
    for lab, s in zip(W.labels, W.schur):
        val, deg = uni_val_deg(expand_specialized(s, n))
        L = linear_a_plus_A(s)
        closed = Fraction(dot(L, n), W.mu_order)
        print(f"  {lab:<9} a+A = {Fraction(val + deg, W.mu_order)!s:>6}   L.n/mu = {closed!s:>6}   L = {L}")
