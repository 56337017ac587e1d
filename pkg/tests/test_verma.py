from fractions import Fraction

import pytest

from oracles import sympy_det, sympy_nullity, verma_level2_gram
from virc1.characters import partition_series
from virc1.errors import DomainError
from virc1.fock import FockVector, enumerate_partitions, inner_product
from virc1.sugawara import apply_L
from virc1.verma import LowestWeight, classify, gram_matrix, irreducible_character, kernel

F = Fraction


def test_level1():
    for h in [F(0), F(1, 3), F(5)]:
        assert gram_matrix(LowestWeight(1, h), 1).matrix.to_rows() == [[2 * h]]


@pytest.mark.parametrize("c,h", [(1, F(1, 4)), (1, F(1, 3)), (F(1, 2), F(1, 16)), (F(-2), F(3))])
def test_level2_against_hand_formula(c, h):
    assert gram_matrix(LowestWeight(c, h), 2).matrix.to_rows() == verma_level2_gram(c, h)


def test_level2_determinants():
    assert gram_matrix(LowestWeight(1, F(1, 4)), 2).determinant() == 0
    assert gram_matrix(LowestWeight(1, F(1, 3)), 2).determinant() != 0


@pytest.mark.parametrize("q", [F(0), F(1), F(1, 3), F(3, 2)])
@pytest.mark.parametrize("level", range(0, 6))
def test_gram_matches_fock_realization(q, level):
    """At c = 1 the Verma form pulls back from the Fock form along v -> |q>."""
    basis = enumerate_partitions(level)
    images = []
    for lam in basis:
        v = FockVector.lowest_weight(q)
        for part in reversed(lam):
            v = apply_L(-part, v)
        images.append(v)
    expected = [[inner_product(a, b) for b in images] for a in images]
    assert gram_matrix(LowestWeight(1, q * q / 2), level).matrix.to_rows() == expected


@pytest.mark.parametrize("c,h,level", [(1, F(1, 3), 4), (1, F(0), 3), (F(7, 3), F(1, 5), 4)])
def test_symmetric_and_agrees_with_sympy(c, h, level):
    g = gram_matrix(LowestWeight(c, h), level)
    rows = g.matrix.to_rows()
    assert g.matrix == g.matrix.T
    assert g.determinant() == sympy_det(rows)
    assert len(kernel(g)) == sympy_nullity(rows)


def test_kernels():
    k = kernel(gram_matrix(LowestWeight(1, 0), 1))
    assert k == [[F(1)]]
    assert len(kernel(gram_matrix(LowestWeight(1, F(1, 4)), 2))) == 1
    for level in range(1, 7):
        assert kernel(gram_matrix(LowestWeight(1, F(1, 3)), level)) == []


def test_singular_vector_at_level2():
    # L_{-2} - L_{-1}^2 spans the kernel for h = 1/4, c = 1
    (v,) = kernel(gram_matrix(LowestWeight(1, F(1, 4)), 2))
    assert v[0] == -v[1]


@pytest.mark.parametrize("j", [F(0), F(1, 2), F(1), F(3, 2)])
def test_first_degeneracy_at_2j_plus_1(j):
    w = LowestWeight(1, j * j)
    s = int(2 * j + 1)
    for level in range(1, s):
        assert gram_matrix(w, level).determinant() != 0
    g = gram_matrix(w, s)
    assert g.determinant() == 0
    assert len(kernel(g)) == 1


def test_shifted_central_charge_lifts_degeneracy():
    assert gram_matrix(LowestWeight(F(3, 2), F(1, 4)), 2).determinant() != 0


def test_classify():
    assert classify(F(9, 4)).j == F(3, 2)
    assert not classify(F(1, 3)).degenerate
    assert not classify(2).degenerate
    assert classify(0).j == 0
    assert classify(F(1, 4)).singular_level == 2
    with pytest.raises(DomainError):
        classify(-1)
    with pytest.raises(DomainError):
        LowestWeight(1, -F(1, 2))


def test_irreducible_character_examples():
    ch = irreducible_character(F(1, 3), 3)
    assert (ch.offset, ch.coefficients) == (F(1, 3), (1, 1, 2, 3))
    ch = irreducible_character(0, 4)
    assert (ch.offset, ch.coefficients) == (0, (1, 0, 1, 1, 2))
    ch = irreducible_character(F(1, 4), 5)
    assert (ch.offset, ch.coefficients) == (F(1, 4), (1, 1, 1, 2, 3, 4))


@pytest.mark.parametrize("j", [F(0), F(1, 2), F(1), F(3, 2), F(2), F(5, 2)])
def test_degenerate_character_counts_quotient(j):
    p = partition_series(12).coefficients
    s = int(2 * j + 1)
    ch = irreducible_character(j * j, 12)
    for n in range(13):
        assert ch.coefficients[n] == p[n] - (p[n - s] if n >= s else 0)


@pytest.mark.parametrize("j", [F(0), F(1, 2), F(1), F(3, 2)])
def test_degenerate_character_matches_gram_rank(j):
    """Irreducible dimension at each level is the rank of the Shapovalov form."""
    from virc1.linalg import rank

    ch = irreducible_character(j * j, 6)
    for level in range(7):
        assert ch.coefficients[level] == rank(gram_matrix(LowestWeight(1, j * j), level).matrix)
