from fractions import Fraction

import pytest

from rouquier.numfield import root_of_unity
from rouquier.polyalg import (
    LaurentPoly,
    UniLaurent,
    cyclotomic_poly,
    eval_at_monomial,
    k_cyc_poly,
    reciprocal,
    specialize_uni,
    split_power,
    uni_val_deg,
)


def v(i, n=3):
    return LaurentPoly.var(i, n)


def test_laurent_arithmetic():
    a, b = v(0, 2), v(1, 2)
    assert (a - b) * (a + b) == a * a - b * b
    zero = LaurentPoly.constant(0, 2)
    assert a + zero == a
    m = LaurentPoly.monomial((1, -1))
    one = LaurentPoly.constant(1, 2)
    assert (m - one) * (m + one) == LaurentPoly.monomial((2, -2)) - one


@pytest.mark.parametrize("d,coeffs", [
    (1, [-1, 1]),
    (2, [1, 1]),
    (6, [1, -1, 1]),
    (12, [1, 0, -1, 0, 1]),
])
def test_cyclotomic_poly(d, coeffs):
    assert cyclotomic_poly(d) == coeffs


def test_cyclotomic_poly_at_one():
    # Phi_d(1) is p for prime powers d = p^k and 1 otherwise
    assert sum(cyclotomic_poly(12)) == 1
    assert sum(cyclotomic_poly(9)) == 3
    assert sum(cyclotomic_poly(8)) == 2


def test_k_cyc_poly():
    P = k_cyc_poly(2, 1, 12)
    assert P.degree == 1 and P.value_at_one == 2
    Q = k_cyc_poly(3, 1, 1)
    assert Q.degree == 2 and Q.value_at_one == 3
    R = k_cyc_poly(4, 1, 12)
    assert R.degree == 1
    assert R.value_at_one == 1 - root_of_unity(4, 1)
    assert R.label() == "Phi4[1]"


def test_eval_at_monomial():
    got = eval_at_monomial(k_cyc_poly(2, 1, 12), (1, -1, 0))
    assert got == LaurentPoly.monomial((1, -1, 0)) + LaurentPoly.constant(1, 3)
    got = eval_at_monomial(k_cyc_poly(3, 1, 1), (1, -1))
    want = LaurentPoly.monomial((2, -2)) + LaurentPoly.monomial((1, -1)) + LaurentPoly.constant(1, 2)
    assert got == want


@pytest.mark.parametrize("M,n,k", [
    ((1, -2, 1), (0, 1, 2), 0),
    ((1, -1, 0), (0, 0, 0), 0),
    ((2, -1, -1), (3, 1, 1), 4),
])
def test_specialize_uni(M, n, k):
    assert specialize_uni(M, n) == k


def test_uni_val_deg():
    assert uni_val_deg(UniLaurent({-2: 1, 3: 1})) == (-2, 3)
    assert uni_val_deg(UniLaurent({0: 5})) == (0, 0)
    assert uni_val_deg(UniLaurent.from_coeffs(cyclotomic_poly(6))) == (0, 2)


def test_split_power_matches_expansion():
    # (t^3 + 1) = Phi_2 * Phi_6 over Q(zeta_12) after splitting
    P = k_cyc_poly(2, 1, 12)
    parts = split_power(P, 3)
    prod = UniLaurent({0: 1})
    for Q in parts:
        prod = prod * UniLaurent.from_coeffs(Q.coeffs)
    assert prod == UniLaurent({0: 1, 3: 1})


def test_reciprocal_inverts_roots():
    P = k_cyc_poly(12, 1, 12)
    R = reciprocal(P)
    assert R.roots() == [Fraction(11, 12)]
    assert reciprocal(R) == P
