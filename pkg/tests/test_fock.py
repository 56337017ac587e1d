from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_partitions, pairing_by_reduction
from virc1.errors import DomainError, StructuralError
from virc1.fock import (FockLevelSpace, FockVector, Partition, apply_J, enumerate_partitions,
                        gram_diagonal, inner_product)

CHARGES = [Fraction(0), Fraction(1), Fraction(1, 3)]


def vec(q, *parts):
    p = Partition(parts)
    return FockLevelSpace(q, p.weight).basis_vector(p)


def test_partition_validation():
    assert Partition([3, 1, 1]).weight == 5
    assert Partition().weight == 0
    with pytest.raises(StructuralError):
        Partition([1, 2])
    with pytest.raises(StructuralError):
        Partition([2, 0])


def test_enumerate_small():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(enumerate_partitions(6)) == 11
    with pytest.raises(DomainError):
        enumerate_partitions(-1)


@pytest.mark.parametrize("n", range(0, 13))
def test_enumerate_matches_brute_force(n):
    parts = enumerate_partitions(n)
    assert set(parts) == brute_partitions(n)
    assert len(parts) == len(set(parts))
    assert parts == sorted(parts, reverse=True)


def test_J1_on_J_minus1_vacuum():
    assert apply_J(1, vec(0, 1)) == FockVector.lowest_weight(0)


def test_J2_kills_J_minus1():
    assert apply_J(2, vec(Fraction(5, 7), 1)).is_zero()


def test_J0_scales_by_charge():
    q = Fraction(1, 3)
    v = vec(q, 2, 1) + vec(q, 1, 1, 1).scale(4)
    assert apply_J(0, v) == v.scale(q)


def test_annihilation_counts_equal_parts():
    # J_1 J_-1^3 |q> = 3 J_-1^2 |q>
    assert apply_J(1, vec(0, 1, 1, 1)) == vec(0, 1, 1).scale(3)
    assert apply_J(2, vec(0, 2, 2, 1)) == vec(0, 2, 1).scale(4)


def test_malformed_vector():
    with pytest.raises(StructuralError):
        FockVector(0, 2, (1,))


def test_inner_product_examples():
    assert inner_product(FockVector.lowest_weight(Fraction(2, 5)), FockVector.lowest_weight(Fraction(2, 5))) == 1
    assert inner_product(vec(0, 2), vec(0, 1, 1)) == 0
    assert inner_product(vec(0, 1, 1), vec(0, 1, 1)) == 2
    assert pairing_by_reduction(vec(0, 1, 1), vec(0, 1, 1)) == 2
    with pytest.raises(DomainError):
        inner_product(vec(0, 1), vec(1, 1))


@pytest.mark.parametrize("level", range(0, 8))
def test_gram_diagonal_matches_reduction(level):
    space = FockLevelSpace(Fraction(1, 3), level)
    basis = [space.basis_vector(p) for p in space.basis]
    diag = gram_diagonal(level)
    for i, v in enumerate(basis):
        for j, w in enumerate(basis):
            expected = pairing_by_reduction(v, w)
            assert inner_product(v, w) == expected
            assert expected == (diag[i] if i == j else 0)
        assert diag[i] > 0


def _two_modes(m, n, v):
    """J_m J_n v as a vector on level v.level - m - n (zero if an intermediate level is negative)."""
    target = v.level - m - n
    if v.level - n < 0:
        return FockVector.zero(v.charge, target)
    return apply_J(m, apply_J(n, v))


@pytest.mark.parametrize("q", CHARGES)
def test_heisenberg_relations(q):
    for level in range(9):
        space = FockLevelSpace(q, level)
        for p in space.basis:
            v = space.basis_vector(p)
            for m in range(-5, 6):
                for n in range(-5, 6):
                    if level - m - n < 0:
                        continue
                    diff = _two_modes(m, n, v) - _two_modes(n, m, v)
                    expected = v.scale(m) if m + n == 0 else FockVector.zero(q, level - m - n)
                    assert diff == expected, (m, n, p)


@pytest.mark.parametrize("n", range(0, 17))
def test_level_dimension_matches_brute_count(n):
    assert FockLevelSpace(0, n).dimension == len(brute_partitions(n))


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def vector_pairs(draw):
    q = draw(st.sampled_from(CHARGES))
    level = draw(st.integers(0, 6))
    m = draw(st.integers(-4, 4))
    dim = FockLevelSpace(q, level).dimension
    v = FockVector(q, level, tuple(draw(st.lists(coeffs, min_size=dim, max_size=dim))))
    target = level - m
    if target < 0:
        target = 0
        m = level
    wdim = FockLevelSpace(q, target).dimension
    w = FockVector(q, target, tuple(draw(st.lists(coeffs, min_size=wdim, max_size=wdim))))
    return m, v, w


@given(vector_pairs())
@settings(max_examples=150, deadline=None)
def test_J_adjoint_property(data):
    m, v, w = data
    assert inner_product(apply_J(m, v), w) == inner_product(v, apply_J(-m, w))
