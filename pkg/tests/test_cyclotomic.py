from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import to_complex
from groupdet.cyclotomic import (
    CycloNumber,
    conjugate,
    cyclo_field,
    cyclotomic_polynomial,
    inverse,
    parse_cyclo,
    root_of_unity,
)


@pytest.mark.parametrize(
    "n,coeffs",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (8, (1, 0, 0, 0, 1)),
        (12, (1, 0, -1, 0, 1)),
    ],
)
def test_known_cyclotomic_polynomials(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_roots(n):
    # every primitive n-th root of unity is a root of Phi_n
    coeffs = cyclotomic_polynomial(n)
    w = cmath.exp(2j * cmath.pi / n)
    assert abs(sum(c * w ** k for k, c in enumerate(coeffs))) < 1e-9


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5, 8, 12, 16])
def test_roots_of_unity(L):
    F = cyclo_field(L)
    z = root_of_unity(F, 1)
    assert z ** L == F.one()
    for k in range(1, L):
        assert z ** k != F.one()
        assert abs(to_complex(z ** k) - cmath.exp(2j * cmath.pi * k / L)) < 1e-9
    assert root_of_unity(F, -1) == z ** (L - 1)


def numbers(L):
    F = cyclo_field(L)
    frac = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return st.lists(frac, min_size=F.degree, max_size=F.degree).map(lambda cs: CycloNumber.from_coeffs(F, cs))


@pytest.mark.parametrize("L", [4, 5, 12])
def test_field_axioms(L):
    F = cyclo_field(L)

    @given(numbers(L), numbers(L), numbers(L))
    def check(a, b, c):
        assert a + b == b + a and a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == F.zero() and a * F.one() == a
        if a:
            assert a * inverse(a) == F.one()
            assert (b / a) * a == b

    check()


@given(numbers(12), numbers(12))
def test_complex_embedding_is_a_homomorphism(a, b):
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-6 * (1 + abs(to_complex(a * b)))
    assert abs(to_complex(a + b) - (to_complex(a) + to_complex(b))) < 1e-9


@given(numbers(8))
def test_conjugate_matches_complex_conjugate(a):
    assert abs(to_complex(conjugate(a)) - to_complex(a).conjugate()) < 1e-9
    assert conjugate(conjugate(a)) == a


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        inverse(cyclo_field(5).zero())


def test_rational_embedding_and_printing():
    F = cyclo_field(6)
    x = F.scalar(Fraction(-2, 3))
    assert x.is_rational() and x.to_fraction() == Fraction(-2, 3)
    assert str(x) == "-2/3"
    assert x == Fraction(-2, 3) and F.scalar(3) == 3
    assert parse_cyclo(F, " 4/6 ") == Fraction(2, 3)


def test_i_squared():
    F = cyclo_field(4)
    i = F.root_of_unity(1)
    assert i * i == -1
    assert not i.is_rational()
