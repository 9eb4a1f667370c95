import random
from fractions import Fraction

import pytest

from superlie.linalg import (
    Matrix,
    Subspace,
    definiteness,
    definiteness_with_witness,
    kernel,
    leading_principal_minors,
    solve_linear,
    sparse_kernel,
    sparse_rank,
    subspace_op,
)


def frac_matrix(rows):
    return Matrix([[Fraction(x) for x in r] for r in rows])


def rand_matrix(rng, m, n, height=5):
    return frac_matrix(
        [[Fraction(rng.randint(-height, height), rng.randint(1, 3)) for _ in range(n)] for _ in range(m)]
    )


# -- independent oracle: classic two-step fraction-free (Bareiss) rank ----

def bareiss_rank(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if a else 0
    rank = 0
    prev = Fraction(1)
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for i in range(row + 1, m):
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev
            a[i][col] = Fraction(0)
        prev = a[row][col]
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def test_solve_identity():
    A = Matrix.identity(3)
    res = solve_linear(A, [Fraction(1), Fraction(2), Fraction(3)])
    assert res.particular == [1, 2, 3]
    assert res.kernel.dim == 0


def test_solve_zero_matrix():
    A = Matrix.zero(2, 2)
    res = solve_linear(A, [Fraction(0), Fraction(0)])
    assert res.particular == [0, 0]
    assert res.kernel.dim == 2


def test_solve_inconsistent():
    A = frac_matrix([[1, 0], [1, 0]])
    res = solve_linear(A, [Fraction(1), Fraction(2)])
    assert res.particular is None
    assert res.kernel.dim == 1


def test_rank_nullity_random_20x30():
    rng = random.Random(7)
    A = rand_matrix(rng, 20, 30)
    res = solve_linear(A, [Fraction(0)] * 20)
    assert bareiss_rank(A.rows) + res.kernel.dim == 30


def test_solutions_actually_solve():
    rng = random.Random(8)
    for _ in range(20):
        A = rand_matrix(rng, 5, 7)
        x = [Fraction(rng.randint(-3, 3)) for _ in range(7)]
        b = A.apply(x)
        res = solve_linear(A, b)
        assert res.particular is not None
        assert A.apply(res.particular) == b
        for kv in res.kernel.rows:
            assert A.apply(kv) == [Fraction(0)] * 5


def test_echelon_canonical():
    rng = random.Random(9)
    for _ in range(25):
        vecs = [[Fraction(rng.randint(-3, 3)) for _ in range(6)] for _ in range(4)]
        U = Subspace(6, vecs)
        # random invertible recombination spans the same space
        combos = []
        for _ in range(6):
            c = [Fraction(rng.randint(-2, 2)) for _ in range(len(vecs))]
            combos.append([sum(ci * vi for ci, vi in zip(c, col)) for col in zip(*vecs)])
        V = Subspace(6, combos)
        if U.contains(V) and V.contains(U):
            assert U.rows == V.rows and U.pivots == V.pivots


def e_vec(n, *idx):
    v = [Fraction(0)] * n
    for i in idx:
        v[i] = Fraction(1)
    return v


def test_subspace_ops_examples():
    U = Subspace(3, [e_vec(3, 0), e_vec(3, 1)])
    V = Subspace(3, [e_vec(3, 1), e_vec(3, 2)])
    inter = subspace_op("intersect", U, V)
    assert inter.dim == 1 and inter.contains_vector(e_vec(3, 1))
    assert subspace_op("contains", Subspace(2, [e_vec(2, 0)]), Subspace(2, [e_vec(2, 0, 1)])) is False


def test_modular_law_random():
    rng = random.Random(10)
    for _ in range(25):
        n = 7
        U = Subspace(n, [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(3)])
        V = Subspace(n, [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(3)])
        s = U.sum(V)
        i = U.intersect(V)
        assert s.dim + i.dim == U.dim + V.dim
        assert s.contains(U) and s.contains(V)
        assert U.contains(i) and V.contains(i)


def test_quotient_basis():
    U = Subspace(3, [e_vec(3, 0), e_vec(3, 1)])
    V = Subspace(3, [e_vec(3, 0)])
    comp = subspace_op("quotient_basis", U, V)
    assert len(comp) == 1
    W = Subspace(3, [e_vec(3, 2)])
    with pytest.raises(ValueError):
        U.quotient_basis(W)


def test_definiteness_examples():
    assert definiteness(frac_matrix([[1, 0], [0, 2]])) == "positive_definite"
    assert definiteness(frac_matrix([[1, 0], [0, 0]])) == "positive_semidefinite"
    assert definiteness(frac_matrix([[1, 2], [2, 1]])) == "indefinite_or_negative"
    with pytest.raises(ValueError):
        definiteness(frac_matrix([[0, 1], [0, 0]]))


def test_definiteness_witness():
    verdict, witness = definiteness_with_witness(frac_matrix([[1, 2], [2, 1]]))
    assert verdict == "indefinite_or_negative"
    G = frac_matrix([[1, 2], [2, 1]])
    q = sum(witness[i] * G[i, j] * witness[j] for i in range(2) for j in range(2))
    assert q <= 0 and any(witness)


def minor_oracle(G):
    """Exponential principal-minor enumeration oracle."""
    import itertools

    n = G.nrows
    verdict = "positive_definite"
    lead = leading_principal_minors(G)
    if all(m > 0 for m in lead):
        return "positive_definite"
    for k in range(1, n + 1):
        for subset in itertools.combinations(range(n), k):
            rows = [[G[i, j] for j in subset] for i in subset]
            from superlie.linalg import _det_expand

            if _det_expand(rows) < 0:
                return "indefinite_or_negative"
    return "positive_semidefinite"


def test_definiteness_against_minor_oracle():
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(1, 5)
        entries = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i):
                entries[i][j] = entries[j][i]
        G = Matrix(entries)
        assert definiteness(G) == minor_oracle(G)


def test_sparse_kernel_matches_dense():
    rng = random.Random(12)
    for _ in range(20):
        m, n = 8, 10
        rows = []
        for _ in range(m):
            row = {}
            for j in range(n):
                if rng.random() < 0.4:
                    row[j] = Fraction(rng.randint(-3, 3))
            rows.append({c: v for c, v in row.items() if v})
        dense = [[rows[i].get(j, Fraction(0)) for j in range(n)] for i in range(m)]
        ker_sparse = sparse_kernel(rows, n)
        ker_dense = kernel(dense, n)
        assert len(ker_sparse) == len(ker_dense)
        assert sparse_rank(rows, n) == bareiss_rank(dense)
        # every sparse kernel vector solves all rows exactly
        for kv in ker_sparse:
            for row in rows:
                assert sum(row[c] * kv.get(c, Fraction(0)) for c in row) == 0


def test_matrix_inverse():
    rng = random.Random(13)
    for _ in range(10):
        A = rand_matrix(rng, 4, 4)
        try:
            inv = A.inverse()
        except ValueError:
            continue
        assert A @ inv == Matrix.identity(4)
