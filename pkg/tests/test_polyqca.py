import pytest

from duclab.errors import DomainError
from duclab.polyqca import (
    CyclicPoly, PolyMatrix2x2, cayley_hamilton_check, frobenius_check, gamma, gamma_matches_trace,
    image_charge_check, t_infinity, verify_lemma3,
)


def test_poly_arithmetic():
    p = CyclicPoly.from_degrees(8, [0, 1])
    assert (p * p).degrees() == [0, 2]
    assert p.shift(-1).degrees() == [0, 7]
    assert (p + p).is_zero()
    assert (p**3).degrees() == [0, 1, 2, 3]
    assert CyclicPoly.monomial(8, 9).degrees() == [1]


def test_matrix_identities():
    t = t_infinity(8)
    assert t.det() == CyclicPoly.monomial(8, 0)
    assert (t * PolyMatrix2x2.identity(8)) == t
    assert t**0 == PolyMatrix2x2.identity(8)
    with pytest.raises(DomainError):
        t_infinity(5)


@pytest.mark.parametrize("modulus", [4, 6, 8, 16, 64])
def test_trace_and_cayley_hamilton(modulus):
    assert gamma_matches_trace(modulus)
    assert cayley_hamilton_check(modulus)


def test_frobenius():
    for modulus in (8, 12, 32):
        assert frobenius_check(gamma(modulus))


@pytest.mark.parametrize("r,period", [(1, 3), (2, 12), (3, 24), (4, 48), (5, 96)])
def test_lemma3(r, period):
    rep = verify_lemma3(r)
    assert rep.passed
    assert rep.period == period
    assert rep.k == 2**r - 1


@pytest.mark.parametrize("k", [1, 3, 7, 8, 15])
def test_image_charges(k):
    assert image_charge_check(k)
