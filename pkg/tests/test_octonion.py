"""Octonion algebra laws, table invariants, and serialization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trioct import (
    MULTIPLICATION_TABLE,
    Octonion,
    RATIONAL,
    VariantError,
    basis_product,
)

E = [Octonion.basis(i) for i in range(8)]
ER = [Octonion.basis(i, RATIONAL) for i in range(8)]

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
roctonions = st.builds(lambda cs: Octonion(cs), st.tuples(*[rationals] * 8))


def test_table_identity_row_and_column():
    for j in range(8):
        assert MULTIPLICATION_TABLE.sign[0][j] == 1
        assert MULTIPLICATION_TABLE.index[0][j] == j
        assert MULTIPLICATION_TABLE.sign[j][0] == 1
        assert MULTIPLICATION_TABLE.index[j][0] == j


def test_table_imaginary_squares():
    for i in range(1, 8):
        assert basis_product(i, i) == (-1, 0)


def test_table_anticommutativity():
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                continue
            si, ki = basis_product(i, j)
            sj, kj = basis_product(j, i)
            assert ki == kj
            assert si == -sj


def test_table_rows_are_signed_permutations():
    for i in range(8):
        assert sorted(MULTIPLICATION_TABLE.index[i]) == list(range(8))


def test_basis_product_examples():
    assert E[1] * E[2] == E[3]
    assert E[2] * E[4] == E[6]
    assert E[1] * E[6] == -E[7]
    assert E[4] * E[5] == E[1]


def test_identity_element():
    p = Octonion((3, -1, 4, 1, -5, 9, 2, -6))
    assert E[0] * p == p
    assert p * E[0] == p


def test_non_associativity_witness():
    assert (E[1] * E[2]) * E[4] == E[7]
    assert E[1] * (E[2] * E[4]) == -E[7]
    assert (E[1] * E[2]) * E[4] != E[1] * (E[2] * E[4])


def test_add_sub():
    assert (E[1] + E[2]) + (E[1] - E[2]) == E[1] * 2
    p = Octonion((3, -1, 4, 1, -5, 9, 2, -6))
    assert p - p == Octonion.zero()


def test_add_consecutive_sequence_lifts():
    # tribonacci terms 0..8 from the recurrence: 0 1 1 2 4 7 13 24 44
    terms = [0, 1, 1]
    while len(terms) < 9:
        terms.append(terms[-1] + terms[-2] + terms[-3])
    lift0 = Octonion(tuple(terms[0:8]))
    lift1 = Octonion(tuple(terms[1:9]))
    assert lift0 + lift1 == Octonion((1, 2, 3, 6, 11, 20, 37, 68))


def test_variant_mixing_rejected():
    p = Octonion((1,) * 8)
    q = Octonion((Fraction(1),) * 8)
    with pytest.raises(VariantError):
        p + q
    with pytest.raises(VariantError):
        p * q
    with pytest.raises(VariantError):
        p * Fraction(1, 2)
    with pytest.raises(VariantError):
        Octonion((1, 1, 1, 1, 1, 1, 1, Fraction(1)))


def test_floats_rejected():
    with pytest.raises(VariantError):
        Octonion((1.5,) * 8)


def test_conjugation_examples():
    assert E[0].conjugate() == E[0]
    p = Octonion((1, 2, 0, 0, 0, 0, 0, -3))
    assert p.conjugate() == Octonion((1, -2, 0, 0, 0, 0, 0, 3))
    p = E[0] + E[1]
    q = E[2] + E[4]
    assert (p * q).conjugate() == q.conjugate() * p.conjugate()


def test_norm_sq_examples():
    assert E[5].norm_sq() == 1
    assert Octonion.zero().norm_sq() == 0
    assert Octonion((0, 1, 1, 2, 4, 7, 13, 24)).norm_sq() == 816


def test_norm_sq_rejects_nonreal_complex():
    p = Octonion((1 + 1j,) + (0j,) * 7)
    with pytest.raises(ValueError):
        p.norm_sq()


def test_norm_float_for_real_complex_only():
    p = Octonion((3 + 0j, 4 + 0j) + (0j,) * 6)
    assert p.norm() == 5.0
    with pytest.raises(VariantError):
        Octonion((3, 4, 0, 0, 0, 0, 0, 0)).norm()


def test_inverse_examples():
    assert ER[1].inverse() == -ER[1]
    p = ER[0] + ER[3] + ER[6]
    assert p * p.inverse() == ER[0]
    assert p.inverse() * p == ER[0]


def test_inverse_errors():
    with pytest.raises(ZeroDivisionError):
        Octonion.zero(RATIONAL).inverse()
    with pytest.raises(VariantError):
        E[1].inverse()  # integers are not a field


def test_serialization():
    assert Octonion((0, 1, -2, 3, 4, 5, 6, 7)).serialize() == (
        "0", "1", "-2", "3", "4", "5", "6", "7",
    )
    o = Octonion((Fraction(1, 2),) + (Fraction(0),) * 7)
    assert o.serialize()[0] == "1/2"
    o = Octonion((1.5 - 2j,) + (0j,) * 7)
    assert o.serialize()[0] == "1.5-2i"


def test_conversions():
    p = Octonion((1, 2, 3, 4, 5, 6, 7, 8))
    assert p.as_rational() == Octonion(tuple(Fraction(k) for k in range(1, 9)))
    assert p.as_complex().components[0] == 1 + 0j
    with pytest.raises(VariantError):
        Octonion((1j,) * 8).as_rational()


def test_alternative_laws_on_all_basis_pairs():
    for i in range(8):
        for j in range(8):
            p, q = E[i], E[j]
            assert p * (p * q) == (p * p) * q
            assert (p * q) * q == p * (q * q)
            assert (p * q) * p == p * (q * p)


@given(roctonions, roctonions)
@settings(max_examples=60, deadline=None)
def test_norm_multiplicativity(p, q):
    assert (p * q).norm_sq() == p.norm_sq() * q.norm_sq()


@given(roctonions, roctonions)
@settings(max_examples=60, deadline=None)
def test_alternativity(p, q):
    assert p * (p * q) == (p * p) * q
    assert (p * q) * q == p * (q * q)
    assert (p * q) * p == p * (q * p)


@given(roctonions, roctonions)
@settings(max_examples=60, deadline=None)
def test_conjugation_properties(p, q):
    assert p.conjugate().conjugate() == p
    assert (p + q).conjugate() == p.conjugate() + q.conjugate()
    assert (p * q).conjugate() == q.conjugate() * p.conjugate()


@given(roctonions)
@settings(max_examples=60, deadline=None)
def test_conjugate_product_is_norm(p):
    expected = Octonion.from_scalar(p.norm_sq())
    assert p * p.conjugate() == expected
    assert p.conjugate() * p == expected
