from fractions import Fraction

import pytest

from superlie.linalg import Matrix
from superlie.lsa import from_matrix_basis, make_lsa
from superlie.scalars import Scalar


def sc(q=0, i=0):
    """Scalar q + i * (imaginary part)."""
    return Scalar.from_rational(Fraction(q)) + Scalar.i() * Fraction(i)


def smatrix(rows):
    return Matrix([[x if isinstance(x, Scalar) else sc(x) for x in r] for r in rows])


def su2_cyclic():
    """su(2) with [e1,e2] = e3 cyclic, purely even."""
    return make_lsa(
        ["e1", "e2", "e3"],
        [0, 0, 0],
        {(0, 1): {2: Fraction(1)}, (1, 2): {0: Fraction(1)}, (2, 0): {1: Fraction(1)}},
    )


def pauli_su2():
    """su(2) realized by i*sigma_j inside u(2)."""
    is1 = smatrix([[0, sc(0, 1)], [sc(0, 1), 0]])
    is2 = smatrix([[0, 1], [-1, 0]])
    is3 = smatrix([[sc(0, 1), 0], [0, sc(0, -1)]])
    return from_matrix_basis([is1, is2, is3], [0, 0, 0], (2, 0), names=["is1", "is2", "is3"])


def abelian(n, parities=None):
    return make_lsa([f"a{i}" for i in range(n)], parities or [0] * n, {})


def odd_line():
    """1-dimensional odd abelian superalgebra, [x,x] = 0."""
    return make_lsa(["x"], [1], {})


def odd_heisenberg():
    """Even z, odd y with [y,y] = z (a Clifford-Lie superalgebra)."""
    return make_lsa(["z", "y"], [0, 1], {(1, 1): {0: Fraction(1)}})


@pytest.fixture(scope="session")
def su2():
    return su2_cyclic()


@pytest.fixture(scope="session")
def su2_matrix():
    return pauli_su2()
