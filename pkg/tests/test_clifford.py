import random
from fractions import Fraction

import pytest

from superlie.clifford import (
    CliffordError,
    clifford_algebra,
    clifford_lie,
    commutant_dimension,
    gamma_rep,
    hermitian_psd,
    lambda_admissible_rep,
    mu_lambda,
    parity_reversed,
    parity_twin_intertwiners,
    phase_adjust,
    seeded_clifford_lie,
)
from superlie.linalg import Matrix, det
from superlie.scalars import Scalar, zeta8


def frac(x):
    return Fraction(x)


# -- Clifford algebra ---------------------------------------------------------


def test_rank_one_algebra():
    C = clifford_algebra([frac(1)])
    assert C.dim == 2
    e1 = C.vector([frac(1)])
    assert C.product(e1, e1) == C.unit()


def test_generators_anticommute():
    C = clifford_algebra([frac(2), frac(3)])
    e1 = C.vector([frac(1), frac(0)])
    e2 = C.vector([frac(0), frac(1)])
    lhs = C.product(e1, e2)
    rhs = [-x for x in C.product(e2, e1)]
    assert lhs == rhs
    assert C.product(e1, e1) == [2 * x for x in C.unit()]


def test_norm_equals_mu_on_vectors():
    C = clifford_algebra([frac(2), frac(3), frac(5)])
    rng = random.Random(7)
    for _ in range(25):
        v = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(3)]
        expected = sum(v[i] * v[i] * C.mu_diag[i] for i in range(3))
        assert C.norm(C.vector(v)) == expected


def test_norm_rejects_non_group_elements():
    C = clifford_algebra([frac(1), frac(1)])
    mixed = C.unit()
    mixed[C.index[0b01]] = frac(1)  # 1 + e1 has non-scalar x^T x
    with pytest.raises(CliffordError):
        C.norm(mixed)


def test_alpha_of_unit_vector_is_reflection():
    C = clifford_algebra([frac(1), frac(1), frac(1)])
    for k in range(3):
        v = C.vector([frac(i == k) for i in range(3)])
        M = C.alpha_on_v(v)
        assert det(M) == -1
        for j in range(3):
            expect = frac(-1 if j == k else 1)
            assert M.rows[j][j] == expect


def test_alpha_product_lands_in_so():
    # product of two unit vectors acts with determinant +1 (Spin side)
    C = clifford_algebra([frac(1), frac(1), frac(1)])
    e1 = C.vector([frac(1), frac(0), frac(0)])
    e2 = C.vector([frac(0), frac(1), frac(0)])
    g = C.product(e1, e2)
    assert C.norm(g) == 1
    assert det(C.alpha_on_v(g)) == 1


def test_parity_and_transpose():
    C = clifford_algebra([frac(1), frac(1)])
    e12 = [frac(0)] * 4
    e12[C.index[0b11]] = frac(1)
    assert C.parity_op(e12) == e12  # even monomial
    assert C.transpose(e12) == [-x for x in e12]  # reversal flips e1 e2


def test_table_cap():
    with pytest.raises(CliffordError):
        clifford_algebra([frac(1)] * 13)


# -- gamma representations -----------------------------------------------------


def test_gamma_rep_dimensions_and_relations():
    for n in range(1, 7):
        rep = gamma_rep([frac(1)] * n)  # validate() checks all relations exactly
        assert rep.space_dim == 2 ** (n // 2)


def test_gamma_rep_scaled():
    rep = gamma_rep([frac(2), frac(3)])
    g1 = rep.matrices[0]
    sq = g1 @ g1
    assert sq.rows[0][0] == Scalar.from_rational(2)
    # the field is extended exactly by the needed square roots
    f = rep.field()
    assert f.includes_i
    assert f.contains_scalar(Scalar.sqrt_rational(6))
    assert not f.contains_scalar(Scalar.sqrt_rational(5))


def test_n1_rep_is_scalar_one():
    rep = gamma_rep([frac(1)])
    assert rep.space_dim == 1
    assert rep.matrices[0].rows[0][0] == Scalar.from_rational(1)
    with pytest.raises(CliffordError):
        parity_reversed(rep)


def test_commutant_dimension_one():
    for n in range(1, 7):
        rep = gamma_rep([frac(1)] * n)
        assert commutant_dimension(rep) == 1


def test_parity_twin_even_n():
    for n in (2, 4):
        rep = gamma_rep([frac(1)] * n)
        twin = parity_reversed(rep)
        assert twin.grading == tuple(1 - g for g in rep.grading)
        even_dim, odd_dim = parity_twin_intertwiners(rep)
        assert even_dim == 0 and odd_dim == 1


def test_odd_n_has_no_twin():
    rep = gamma_rep([frac(1)] * 3)
    with pytest.raises(CliffordError):
        parity_twin_intertwiners(rep)


# -- mu_lambda and admissible representations -------------------------------------


def test_mu_lambda_basic():
    # n0 = R z, n1 = R x, [x,x] = z, lambda(z) = 2 gives mu = 1
    N = clifford_lie(1, 1, [Matrix([[frac(1)]])])
    res = mu_lambda(N, [frac(2), frac(0)])
    assert res.gram.rows[0][0] == 1
    assert res.radical.dim == 0 and res.quotient_dim == 1


def test_mu_lambda_zero():
    N = clifford_lie(1, 1, [Matrix([[frac(1)]])])
    res = mu_lambda(N, [frac(0), frac(0)])
    assert res.radical.dim == 1 and res.quotient_dim == 0


def test_mu_lambda_negative_rejected():
    N = clifford_lie(1, 1, [Matrix([[frac(1)]])])
    with pytest.raises(CliffordError) as err:
        mu_lambda(N, [frac(-1), frac(0)])
    assert hasattr(err.value, "witness")


def test_heisenberg_rep():
    G = Matrix([[frac(2), frac(0)], [frac(0), frac(2)]])
    N = clifford_lie(1, 2, [G])
    rep = lambda_admissible_rep(N, [frac(1), frac(0), frac(0)])
    assert rep.space_dim == 2


def test_one_dim_odd_rep_is_zeta8_root():
    N = clifford_lie(1, 1, [Matrix([[frac(2)]])])
    rep = lambda_admissible_rep(N, [frac(1), frac(0)])
    # chi(x) = zeta8 * sqrt(mu(x,x)) with mu(x,x) = 1
    assert rep.chi_basis(1).rows[0][0] == zeta8()
    sq = rep.chi_basis(1) @ rep.chi_basis(1)
    assert sq.rows[0][0] == Scalar.i()  # = i lambda([x,x]) / 2 * ... exactly i here


def test_zero_lambda_rep():
    N = clifford_lie(1, 1, [Matrix([[frac(2)]])])
    rep = lambda_admissible_rep(N, [frac(0), frac(0)])
    assert rep.mu.quotient_dim == 0
    assert not any(any(r) for r in rep.chi_basis(1).rows)


def test_seeded_reps_all_contracts():
    # construction verifies homomorphism, unitarity and PSD contracts exactly
    for seed in (1, 2, 3):
        N, lam = seeded_clifford_lie(seed)
        rep = lambda_admissible_rep(N, lam)
        assert rep.space_dim == 2 ** (rep.mu.quotient_dim // 2)


def test_clifford_lie_rejects_noncentral():
    from superlie.lsa import make_lsa
    from superlie.clifford import CliffordLieSuperalgebra

    # valid superalgebra with [z, x] = x: the even part is not central
    L = make_lsa(["z", "x"], [0, 1], {(0, 1): {1: frac(1)}})
    with pytest.raises(CliffordError):
        CliffordLieSuperalgebra(L)


# -- phase adjustment ----------------------------------------------------------------


def test_phase_adjust_even_fixed():
    T = Matrix([[Scalar.from_rational(3), Scalar()], [Scalar(), Scalar.from_rational(5)]])
    assert phase_adjust(T, (0, 1)) == T


def test_phase_adjust_mixed_rejected():
    T = Matrix([[Scalar.from_rational(1), Scalar.from_rational(1)], [Scalar(), Scalar()]])
    with pytest.raises(CliffordError):
        phase_adjust(T, (0, 1))


def test_phase_adjust_round_trip():
    rep = gamma_rep([frac(1), frac(1)])
    g = rep.matrices[0]
    adjusted = phase_adjust(g, rep.grading)
    z8 = zeta8()
    back = Matrix([[x / z8 for x in row] for row in adjusted.rows])
    assert back == Matrix([[x if isinstance(x, Scalar) else Scalar.from_rational(x) for x in r] for r in g.rows])


def test_phase_adjust_exchanges_symmetry_conventions():
    # gamma symmetric for <.,.>; zeta8^{-1} gamma supersymmetric for the
    # super-hermitian form m(u, v) = i^{|u||v|} <u, v>
    rep = gamma_rep([frac(1), frac(1)])
    g = rep.matrices[0]
    z8 = zeta8()
    T = Matrix([[x / z8 for x in row] for row in g.rows])
    par = rep.grading
    # check (T u, v) = (-1)^{|T||u|} (u, T v) on basis vectors, where
    # m(e_a, e_b) = i^{|a||b|} delta_ab, m is conjugate-linear in the second
    # slot, and |T| = 1
    size = 2
    for a in range(size):
        for b in range(size):
            lhs = T.rows[b][a] * (Scalar.i() if par[b] else Scalar.from_rational(1))
            sign = Fraction(-1) if par[a] else Fraction(1)
            rhs = sign * T.rows[a][b].conjugate() * (Scalar.i() if par[a] else Scalar.from_rational(1))
            assert lhs == rhs


def test_hermitian_psd():
    i = Scalar.i()
    one = Scalar.from_rational(1)
    H = Matrix([[one * 2, i], [-i, one * 2]])  # eigenvalues 1 and 3
    assert hermitian_psd(H)
    H2 = Matrix([[one, i * 2], [-i * 2, one]])  # indefinite
    assert not hermitian_psd(H2)
    with pytest.raises(CliffordError):
        hermitian_psd(Matrix([[Scalar(), i], [i, Scalar()]]))
