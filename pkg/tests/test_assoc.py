import random
from fractions import Fraction
from math import comb

import pytest

from superlie.assoc import (
    AssocError,
    augmentation,
    graded_part,
    grassmann,
    quotient_assoc,
)


def basis_index(A, name):
    return A.names.index(name)


def vec(A, **coeffs):
    v = [Fraction(0)] * A.dim
    for name, c in coeffs.items():
        v[A.names.index(name)] = Fraction(c)
    return v


def test_grassmann_2_basis():
    A = grassmann(2)
    assert A.dim == 4
    assert set(A.names) == {"1", "e1", "e2", "e1^e2"}


def test_defining_relation():
    A = grassmann(2)
    e1 = basis_index(A, "e1")
    e2 = basis_index(A, "e2")
    e12 = basis_index(A, "e1^e2")
    prod = A.product(A._basis_vec(e2), A._basis_vec(e1))
    expect = [Fraction(0)] * 4
    expect[e12] = Fraction(-1)
    assert prod == expect


def test_repeated_generator_kills_product():
    A = grassmann(2)
    e1 = basis_index(A, "e1")
    e12 = basis_index(A, "e1^e2")
    assert A.product(A._basis_vec(e12), A._basis_vec(e1)) == [Fraction(0)] * 4


def test_validation_runs_exhaustively_small_s():
    for s in range(1, 7):
        grassmann(s)  # validate() raises on any axiom failure


def test_augmentation():
    A = grassmann(2)
    a = vec(A, **{"1": 1, "e1": 3, "e1^e2": 2})
    assert augmentation(A, a) == 1
    assert augmentation(A, vec(A, **{"e1^e2": 1})) == 0


def test_augmentation_is_homomorphism():
    A = grassmann(3)
    rng = random.Random(5)
    for _ in range(40):
        a = [Fraction(rng.randint(-3, 3)) for _ in range(A.dim)]
        b = [Fraction(rng.randint(-3, 3)) for _ in range(A.dim)]
        assert augmentation(A, A.product(a, b)) == augmentation(A, a) * augmentation(A, b)


def test_odd_squares_vanish():
    A = grassmann(4)
    rng = random.Random(6)
    odd_idx = [i for i, p in enumerate(A.parities) if p]
    for _ in range(30):
        a = [Fraction(0)] * A.dim
        for i in odd_idx:
            a[i] = Fraction(rng.randint(-4, 4))
        assert A.product(a, a) == [Fraction(0)] * A.dim


def test_graded_part_dims():
    A3 = grassmann(3)
    assert graded_part(A3, 2).dim == 3
    assert graded_part(A3, "plus").dim == 7
    A4 = grassmann(4)
    assert graded_part(A4, "odd").dim == comb(4, 1) + comb(4, 3)
    assert graded_part(A4, "even_plus").dim == comb(4, 2) + comb(4, 4)
    for s in range(1, 6):
        A = grassmann(s)
        for m in range(s + 1):
            assert graded_part(A, m).dim == comb(s, m)


def test_quotient_lambda3_by_high_degrees():
    A = grassmann(3)
    high = graded_part(A, 3)
    quo, proj = quotient_assoc(A, high)
    assert quo.dim == 7
    # A^1 A^1 = A^2 in the quotient
    deg1 = [i for i, d in enumerate(quo.z_degrees) if d == 1]
    deg2 = [i for i, d in enumerate(quo.z_degrees) if d == 2]
    from superlie.linalg import Subspace

    prods = []
    for i in deg1:
        for j in deg1:
            b_i = [Fraction(k == i) for k in range(quo.dim)]
            b_j = [Fraction(k == j) for k in range(quo.dim)]
            prods.append(quo.product(b_i, b_j))
    span = Subspace(quo.dim, prods)
    target = Subspace(quo.dim, [[Fraction(k == i) for k in range(quo.dim)] for i in deg2])
    assert span.contains(target) and target.contains(span)


def test_quotient_by_zero_is_identity():
    from superlie.linalg import Subspace

    A = grassmann(2)
    quo, _ = quotient_assoc(A, Subspace.zero(A.dim))
    assert quo.dim == A.dim
    assert quo.table == A.table


def test_quotient_lambda2_by_degree3_is_identity():
    A = grassmann(2)
    high = graded_part(A, 3)  # empty for s = 2
    assert high.dim == 0
    quo, _ = quotient_assoc(A, high)
    assert quo.dim == 4


def test_non_ideal_rejected():
    from superlie.linalg import Subspace

    A = grassmann(2)
    # span{e1} is not an ideal: e2 * e1 = -e1^e2 escapes
    bad = Subspace(A.dim, [vec(A, e1=1)])
    with pytest.raises(AssocError):
        quotient_assoc(A, bad)


def test_graded_part_requires_grading():
    A = grassmann(2)
    ungraded = type(A)(A.names, A.parities, A.table, A.unit, z_degrees=None, validate=False)
    with pytest.raises(AssocError):
        graded_part(ungraded, 1)
