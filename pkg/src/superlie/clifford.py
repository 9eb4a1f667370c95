"""Clifford algebras at desk scale and scalar-character representation models.

Subset-monomial Clifford algebras with the parity operator, transpose
antiautomorphism and spinor norm; exact gamma representations of size
2^floor(n/2) over the field tower; Clifford--Lie superalgebras with the
half-bracket form, its radical, and representations where the even part
acts by i*lambda with verified homomorphism and unitarity contracts.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .linalg import Matrix, Subspace, sparse_kernel, symmetric_diagonalize
from .lsa import Coordvec, LieSuperalgebra, make_lsa
from .scalars import Scalar, zeta8

_I = Scalar.i()
_ONE = Scalar.from_rational(1)

PRODUCT_TABLE_CAP = 12


class CliffordError(ValueError):
    pass


# -- the Clifford algebra on subset monomials -------------------------------------


class CliffordAlgebra:
    """C(V, mu) for diagonal mu > 0, on monomials e_S over sorted subsets."""

    __slots__ = ("n", "mu_diag", "masks", "index")

    def __init__(self, mu_diag: Sequence[Fraction]):
        if len(mu_diag) > PRODUCT_TABLE_CAP:
            raise CliffordError(f"product table capped at {PRODUCT_TABLE_CAP} generators")
        self.mu_diag = tuple(Fraction(d) for d in mu_diag)
        if any(d <= 0 for d in self.mu_diag):
            raise CliffordError("mu must have positive diagonal entries")
        self.n = len(self.mu_diag)
        self.masks = sorted(range(2**self.n), key=lambda m: (bin(m).count("1"), m))
        self.index = {m: t for t, m in enumerate(self.masks)}

    @property
    def dim(self) -> int:
        return 2**self.n

    def parity_of_mask(self, mask: int) -> int:
        return bin(mask).count("1") % 2

    def product_masks(self, a: int, b: int) -> tuple[Fraction, int]:
        """e_a e_b = coef * e_(a xor b); squared generators contribute mu."""
        coef = Fraction(1)
        # inversions: generators of a above each generator of b
        bits = b
        while bits:
            low = bits & -bits
            above = bin(a & ~(low - 1) & ~low).count("1")
            if above % 2:
                coef = -coef
            bits ^= low
        common = a & b
        bits = common
        while bits:
            low = bits & -bits
            coef *= self.mu_diag[low.bit_length() - 1]
            bits ^= low
        return coef, a ^ b

    def product(self, u: Sequence, v: Sequence) -> list:
        out = [Fraction(0)] * self.dim
        nz_u = [(i, a) for i, a in enumerate(u) if a]
        nz_v = [(j, b) for j, b in enumerate(v) if b]
        for i, a in nz_u:
            ma = self.masks[i]
            for j, b in nz_v:
                coef, mask = self.product_masks(ma, self.masks[j])
                out[self.index[mask]] = out[self.index[mask]] + a * b * coef
        return out

    def unit(self) -> list:
        v = [Fraction(0)] * self.dim
        v[self.index[0]] = Fraction(1)
        return v

    def vector(self, coords: Sequence) -> list:
        v = [Fraction(0)] * self.dim
        for i, c in enumerate(coords):
            v[self.index[1 << i]] = c
        return v

    def parity_op(self, u: Sequence) -> list:
        return [
            -x if self.parity_of_mask(self.masks[i]) else x for i, x in enumerate(u)
        ]

    def transpose(self, u: Sequence) -> list:
        out = list(u)
        for i, x in enumerate(out):
            if x:
                m = bin(self.masks[i]).count("1")
                if (m * (m - 1) // 2) % 2:
                    out[i] = -x
        return out

    def scalar_part(self, u: Sequence):
        return u[self.index[0]]

    def norm(self, u: Sequence):
        """Spinor norm: the scalar of u^T u; error when the product is not scalar."""
        t = self.product(self.transpose(u), u)
        s = self.scalar_part(t)
        t[self.index[0]] = Fraction(0)
        if any(t):
            raise CliffordError("x^T x is not scalar: x is not in the Clifford group")
        return s

    def inverse(self, u: Sequence) -> list:
        """Exact inverse via a linear solve on the left-multiplication matrix."""
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            col = self.product(u, self._basis(j))
            for i in range(self.dim):
                rows[i][j] = col[i]
        from .linalg import solve_linear

        res = solve_linear(Matrix(rows), self.unit())
        if res.particular is None:
            raise CliffordError("element is not invertible")
        inv = res.particular
        if self.product(inv, u) != self.unit():
            raise CliffordError("element has no two-sided inverse")
        return inv

    def _basis(self, i: int) -> list:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def alpha(self, g: Sequence, c: Sequence) -> list:
        """Twisted conjugation alpha_g(c) = Pi(g) c g^{-1}."""
        return self.product(self.product(self.parity_op(g), c), self.inverse(g))

    def alpha_on_v(self, g: Sequence) -> Matrix:
        """Matrix of alpha_g restricted to V; error if V is not stabilized."""
        cols = []
        for i in range(self.n):
            img = self.alpha(g, self.vector([Fraction(t == i) for t in range(self.n)]))
            coords = [img[self.index[1 << t]] for t in range(self.n)]
            for pos, x in enumerate(img):
                if x and bin(self.masks[pos]).count("1") != 1:
                    raise CliffordError("alpha_g does not stabilize V")
            cols.append(coords)
        return Matrix(list(map(list, zip(*cols))))

    def __repr__(self):
        return f"CliffordAlgebra(n={self.n})"


def clifford_algebra(mu_diag: Sequence[Fraction]) -> CliffordAlgebra:
    return CliffordAlgebra(mu_diag)


# -- gamma representations ----------------------------------------------------------


def _pauli():
    X = Matrix([[Scalar(), _ONE], [_ONE, Scalar()]])
    Y = Matrix([[Scalar(), -_I], [_I, Scalar()]])
    Z = Matrix([[_ONE, Scalar()], [Scalar(), -_ONE]])
    return X, Y, Z


def _kron(A: Matrix, B: Matrix) -> Matrix:
    out = []
    for ra in A.rows:
        for rb in B.rows:
            out.append([a * b for a in ra for b in rb])
    return Matrix(out)


def _unit_gammas(n: int) -> tuple[list[Matrix], Matrix]:
    """Standard Gamma_i with entries in {0, +-1, +-i}; also the chirality."""
    X, Y, Z = _pauli()
    k = n // 2
    size = 2**k
    eye = Matrix([[_ONE if i == j else Scalar() for j in range(size)] for i in range(size)])

    def tensor_chain(factors):
        M = factors[0]
        for f in factors[1:]:
            M = _kron(M, f)
        return M

    gammas = []
    for j in range(1, k + 1):
        for base in (X, Y):
            factors = [Z] * (j - 1) + [base] + [_id2()] * (k - j)
            gammas.append(tensor_chain(factors))
    chirality = tensor_chain([Z] * k) if k else Matrix([[_ONE]])
    if n % 2 == 1:
        gammas.append(chirality)
    return gammas, chirality


def _id2() -> Matrix:
    return Matrix([[_ONE, Scalar()], [Scalar(), _ONE]])


class CliffordRep:
    """Selfadjoint gamma matrices over the tower with their grading mask."""

    __slots__ = ("mu_diag", "matrices", "space_dim", "grading")

    def __init__(self, mu_diag, matrices, grading, validate: bool = True):
        self.mu_diag = tuple(Fraction(d) for d in mu_diag)
        self.matrices = list(matrices)
        self.space_dim = matrices[0].nrows
        self.grading = tuple(grading)
        if validate:
            self.validate()

    @property
    def n(self) -> int:
        return len(self.matrices)

    @property
    def graded(self) -> bool:
        return any(self.grading)

    def validate(self):
        n = self.n
        size = self.space_dim
        zero = Matrix([[Scalar() for _ in range(size)] for _ in range(size)])
        for i in range(n):
            gi = self.matrices[i]
            if gi.conj_transpose() != gi:
                raise CliffordError(f"gamma_{i + 1} is not symmetric for the inner product")
            for j in range(i, n):
                gj = self.matrices[j]
                anti = gi @ gj + gj @ gi
                target = zero
                if i == j:
                    target = Matrix(
                        [
                            [
                                Scalar.from_rational(2 * self.mu_diag[i]) if a == b else Scalar()
                                for b in range(size)
                            ]
                            for a in range(size)
                        ]
                    )
                if anti != target:
                    raise CliffordError(f"anticommutation fails at ({i + 1},{j + 1})")
            if self.graded:
                for a in range(size):
                    for b in range(size):
                        if gi.rows[a][b] and self.grading[a] == self.grading[b]:
                            raise CliffordError(f"gamma_{i + 1} is not odd for the grading")

    def field(self):
        """Smallest tower field containing every matrix entry."""
        from .scalars import Field

        rads = set()
        has_i = False
        for M in self.matrices:
            for row in M.rows:
                for x in row:
                    if isinstance(x, Scalar):
                        rads |= x.radicands()
                        has_i = has_i or any(e for (_, e) in x.terms())
        return Field(sorted(rads), has_i)

    def apply_vector(self, coords: Sequence) -> Matrix:
        size = self.space_dim
        out = [[Scalar() for _ in range(size)] for _ in range(size)]
        for i, c in enumerate(coords):
            if c:
                for a in range(size):
                    for b in range(size):
                        v = self.matrices[i].rows[a][b]
                        if v:
                            out[a][b] = out[a][b] + c * v
        return Matrix(out)

    def __repr__(self):
        return f"CliffordRep(n={self.n}, dim {self.space_dim})"


def gamma_rep(mu_diag: Sequence[Fraction]) -> CliffordRep:
    """Irreducible selfadjoint representation of size 2^floor(n/2).

    gamma_i = sqrt(d_i) * Gamma_i with unit gammas from the tensor-product
    construction; odd n appends the chirality normalized to square +1.  For
    even n the coordinate grading splits by the chirality sign and a parity
    reversed twin exists; for odd n the grading is trivial.
    """
    mu = [Fraction(d) for d in mu_diag]
    if not mu:
        raise CliffordError("gamma_rep needs at least one generator")
    if any(d <= 0 for d in mu):
        raise CliffordError("mu must have positive diagonal entries")
    n = len(mu)
    unit, chirality = _unit_gammas(n)
    mats = []
    for d, G in zip(mu, unit):
        root = Scalar.sqrt_rational(d)
        mats.append(Matrix([[root * x for x in row] for row in G.rows]))
    if n % 2 == 0 and n > 0:
        grading = [0 if chirality.rows[i][i] == _ONE else 1 for i in range(2 ** (n // 2))]
    else:
        grading = [0] * (2 ** (n // 2))
    return CliffordRep(mu, mats, grading)


def parity_reversed(rep: CliffordRep) -> CliffordRep:
    """The twin with even and odd coordinates exchanged (even n only)."""
    if not rep.graded:
        raise CliffordError("odd generator count: the representation has no parity twin")
    return CliffordRep(rep.mu_diag, rep.matrices, [1 - g for g in rep.grading])


def _split_complex_commutant(rep: CliffordRep, block: str) -> int:
    """Dimension over C of {X : X gamma_i = gamma_i X} with a block constraint.

    block "diag" restricts X to grading-preserving support, "off" to
    grading-swapping support, "all" to no restriction.  Solved over Q by
    splitting entries into real and imaginary rational parts; the gamma
    scaling sqrt(d_i) drops out of the equations.
    """
    size = rep.space_dim
    unit, _ = _unit_gammas(rep.n)
    allowed = []
    for r in range(size):
        for c in range(size):
            same = rep.grading[r] == rep.grading[c]
            if block == "diag" and not same:
                continue
            if block == "off" and same:
                continue
            allowed.append((r, c))
    pos = {rc: 2 * t for t, rc in enumerate(allowed)}  # +1 for imaginary part
    rows = []
    for G in unit:
        for r in range(size):
            for c in range(size):
                # (X G - G X)[r][c] = 0, split into real and imaginary parts
                row_re: dict[int, Fraction] = {}
                row_im: dict[int, Fraction] = {}
                for k in range(size):
                    v = G.rows[k][c]
                    if v and (r, k) in pos:
                        re, im = v.coeff(1, 0), v.coeff(1, 1)
                        base = pos[(r, k)]
                        if re:
                            row_re[base] = row_re.get(base, Fraction(0)) + re
                            row_im[base + 1] = row_im.get(base + 1, Fraction(0)) + re
                        if im:
                            row_re[base + 1] = row_re.get(base + 1, Fraction(0)) - im
                            row_im[base] = row_im.get(base, Fraction(0)) + im
                    w = G.rows[r][k]
                    if w and (k, c) in pos:
                        re, im = w.coeff(1, 0), w.coeff(1, 1)
                        base = pos[(k, c)]
                        if re:
                            row_re[base] = row_re.get(base, Fraction(0)) - re
                            row_im[base + 1] = row_im.get(base + 1, Fraction(0)) - re
                        if im:
                            row_re[base + 1] = row_re.get(base + 1, Fraction(0)) + im
                            row_im[base] = row_im.get(base, Fraction(0)) - im
                for row in (row_re, row_im):
                    row = {k: v for k, v in row.items() if v}
                    if row:
                        rows.append(row)
    ker = sparse_kernel(rows, 2 * len(allowed))
    if len(ker) % 2:
        raise CliffordError("commutant computation lost the complex structure")
    return len(ker) // 2


def commutant_dimension(rep: CliffordRep) -> int:
    """Dimension of the even (grading-preserving) commutant; 1 = irreducible."""
    return _split_complex_commutant(rep, "diag" if rep.graded else "all")


def parity_twin_intertwiners(rep: CliffordRep) -> tuple[int, int]:
    """(even, odd) intertwiner space dimensions onto the parity twin."""
    if not rep.graded:
        raise CliffordError("odd generator count: no parity twin to intertwine with")
    even_dim = _split_complex_commutant(rep, "off")
    odd_dim = _split_complex_commutant(rep, "diag")
    return even_dim, odd_dim


# -- Clifford--Lie superalgebras ------------------------------------------------------


class CliffordLieSuperalgebra:
    """Lie superalgebra with central even part; bracket = symmetric odd form."""

    __slots__ = ("algebra",)

    def __init__(self, algebra: LieSuperalgebra):
        for i in algebra.even_indices:
            for j in range(algebra.dim):
                if algebra.bracket_basis(i, j):
                    raise CliffordError(
                        f"even element {algebra.names[i]} is not central: bracket with {algebra.names[j]}"
                    )
        self.algebra = algebra

    @property
    def even_indices(self):
        return self.algebra.even_indices

    @property
    def odd_indices(self):
        return self.algebra.odd_indices

    def __repr__(self):
        a = self.algebra
        return f"CliffordLieSuperalgebra({len(a.even_indices)}|{len(a.odd_indices)})"


def clifford_lie(n0: int, n1: int, sym_grams: Sequence[Matrix]) -> CliffordLieSuperalgebra:
    """Build n0-central superalgebra with [odd_a, odd_b] = sum_c G_c[a][b] z_c."""
    if len(sym_grams) != n0:
        raise CliffordError("need one symmetric gram per even coordinate")
    names = [f"z{c + 1}" for c in range(n0)] + [f"q{a + 1}" for a in range(n1)]
    parities = [0] * n0 + [1] * n1
    table: dict[tuple[int, int], Coordvec] = {}
    for a in range(n1):
        for b in range(n1):
            entry = {}
            for c, G in enumerate(sym_grams):
                v = G.rows[a][b]
                if v:
                    entry[c] = Fraction(v)
                if G.rows[a][b] != G.rows[b][a]:
                    raise CliffordError("odd bracket forms must be symmetric")
            if entry:
                table[(n0 + a, n0 + b)] = entry
    return CliffordLieSuperalgebra(make_lsa(names, parities, table))


def seeded_clifford_lie(seed: int, n0: int = 2, n1: int = 4) -> tuple[CliffordLieSuperalgebra, list]:
    """Reproducible Clifford--Lie superalgebra with a PSD-compatible lambda.

    The first central coordinate carries a random PSD gram (possibly with a
    radical), the others random symmetric forms; lambda reads off twice the
    first coordinate.
    """
    rng = random.Random(seed)
    ranks = rng.randint(1, n1)
    B = [[Fraction(rng.randint(-2, 2)) for _ in range(n1)] for _ in range(ranks)]
    G1 = [[Fraction(0)] * n1 for _ in range(n1)]
    for row in B:
        d = Fraction(rng.randint(1, 3))
        for a in range(n1):
            if not row[a]:
                continue
            for b in range(n1):
                if row[b]:
                    G1[a][b] += d * row[a] * row[b]
    grams = [Matrix(G1)]
    for _ in range(n0 - 1):
        S = [[Fraction(0)] * n1 for _ in range(n1)]
        for a in range(n1):
            for b in range(a, n1):
                S[a][b] = S[b][a] = Fraction(rng.randint(-2, 2))
        grams.append(Matrix(S))
    N = clifford_lie(n0, n1, grams)
    lam = [Fraction(0)] * N.algebra.dim
    lam[0] = Fraction(2)
    return N, lam


class MuLambdaResult:
    __slots__ = ("gram", "radical", "quotient_dim", "diag_basis", "diag_values")

    def __init__(self, gram, radical, diag_basis, diag_values):
        self.gram = gram
        self.radical = radical
        self.diag_basis = diag_basis
        self.diag_values = diag_values
        self.quotient_dim = len(diag_basis)


def mu_lambda(N: CliffordLieSuperalgebra, lam: Sequence) -> MuLambdaResult:
    """The form mu_lambda(x, y) = lambda([x, y]) / 2 on the odd part.

    Must be positive semidefinite (else the error carries a negativity
    witness, certifying lambda is outside the dual cone); the quotient by
    the radical is diagonalized by exact congruence for gamma_rep use.
    """
    L = N.algebra
    odd = L.odd_indices
    k = len(odd)
    half = Fraction(1, 2)
    G = [[Fraction(0)] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            w = L.bracket_basis(odd[a], odd[b])
            G[a][b] = sum((c * lam[m] for m, c in w.items()), Fraction(0)) * half
    gram = Matrix(G)
    pairs, radical, witness = symmetric_diagonalize(gram)
    if witness is not None:
        err = CliffordError(
            "lambda([x,x]) < 0 for an odd direction: lambda is not in the dual cone"
        )
        err.witness = witness
        raise err
    return MuLambdaResult(gram, Subspace(k, radical), [p[0] for p in pairs], [p[1] for p in pairs])


class LambdaRep:
    """chi: n -> matrices with even part acting by the scalar i * lambda."""

    __slots__ = ("N", "lam", "mu", "rep", "space_dim", "grading")

    def __init__(self, N, lam, mu, rep):
        self.N = N
        self.lam = list(lam)
        self.mu = mu
        self.rep = rep
        self.space_dim = rep.space_dim if rep is not None else 1
        self.grading = rep.grading if rep is not None else (0,)

    def chi_basis(self, i: int) -> Matrix:
        L = self.N.algebra
        size = self.space_dim
        if L.parities[i] == 0:
            c = _I * self.lam[i]
            return Matrix(
                [[c if a == b else Scalar() for b in range(size)] for a in range(size)]
            )
        odd = L.odd_indices
        pos = odd.index(i)
        coords = self._quotient_coords([Fraction(t == pos) for t in range(len(odd))])
        if self.rep is None:
            return Matrix([[Scalar()]])
        base = self.rep.apply_vector(coords)
        z8 = zeta8()
        return Matrix([[z8 * x for x in row] for row in base.rows])

    def chi(self, vec: Sequence) -> Matrix:
        size = self.space_dim
        out = [[Scalar() for _ in range(size)] for _ in range(size)]
        for i, c in enumerate(vec):
            if c:
                M = self.chi_basis(i)
                for a in range(size):
                    for b in range(size):
                        v = M.rows[a][b]
                        if v:
                            out[a][b] = out[a][b] + c * v
        return Matrix(out)

    def _quotient_coords(self, odd_coords: Sequence) -> list:
        """Coordinates of the image in the diagonalized quotient basis."""
        out = []
        G = self.mu.gram
        for b_vec, d in zip(self.mu.diag_basis, self.mu.diag_values):
            # mu(x, b) / d, exact since the diagonal basis is mu-orthogonal
            val = Fraction(0)
            for a, xa in enumerate(odd_coords):
                if xa:
                    for bidx, bb in enumerate(b_vec):
                        if bb and G.rows[a][bidx]:
                            val += xa * bb * G.rows[a][bidx]
            out.append(val / d)
        return out


def lambda_admissible_rep(N: CliffordLieSuperalgebra, lam: Sequence) -> LambdaRep:
    """Model of the scalar-character representation; all contracts verified.

    chi(x) = i lambda(x) 1 on the even part, chi(x) = zeta_8 gamma(xbar) on
    the odd part; verified exactly: superalgebra homomorphism, the
    <chi(X)u, v> = <u, -i^{|X|} chi(X) v> contract, and vanishing on the
    radical of mu_lambda.
    """
    mu = mu_lambda(N, lam)
    rep = gamma_rep(mu.diag_values) if mu.quotient_dim else None
    out = LambdaRep(N, lam, mu, rep)
    _verify_lambda_rep(out)
    return out


def _verify_lambda_rep(rep: LambdaRep):
    L = rep.N.algebra
    n = L.dim
    size = rep.space_dim
    chis = [rep.chi_basis(i) for i in range(n)]
    zero = Matrix([[Scalar() for _ in range(size)] for _ in range(size)])
    for i in range(n):
        for j in range(i, n):
            lhs = rep.chi(
                L.bracket(L.basis_vector(i), L.basis_vector(j))
            )
            sign = -1 if L.parities[i] and L.parities[j] else 1
            rhs_rows = []
            A, B = chis[i], chis[j]
            AB = A @ B
            BA = B @ A
            for a in range(size):
                rhs_rows.append(
                    [AB.rows[a][b] - sign * BA.rows[a][b] for b in range(size)]
                )
            if lhs != Matrix(rhs_rows):
                raise CliffordError(f"homomorphism contract fails at ({i},{j})")
    # unitarity: <chi(X)u, v> = <u, -i^{|X|} chi(X) v> for <u, v> = sum u conj(v)
    for i in range(n):
        A = chis[i]
        factor = -(_I if L.parities[i] else _ONE)
        B = Matrix([[factor * x for x in row] for row in A.rows])
        # condition: A^T = conj(B), i.e. conj_transpose(A) = B
        if A.transpose() != Matrix([[x.conjugate() for x in row] for row in B.rows]):
            raise CliffordError(f"unitarity contract fails at basis {i}")
    # radical elements act by zero
    odd = L.odd_indices
    for r in rep.mu.radical.rows:
        vec = [Fraction(0)] * n
        for t, c in enumerate(r):
            vec[odd[t]] = c
        if rep.chi(vec) != zero:
            raise CliffordError("a radical element fails to act by zero")
    # -i chi([x,x]) is PSD for every odd basis x
    for i in odd:
        w = L.bracket(L.basis_vector(i), L.basis_vector(i))
        M = rep.chi(w)
        H = Matrix([[(-_I) * x for x in row] for row in M.rows])
        if not hermitian_psd(H):
            raise CliffordError(f"-i chi([x,x]) fails positivity at odd basis {i}")


def hermitian_psd(H: Matrix) -> bool:
    """Exact PSD test for a Hermitian matrix over the tower."""
    n = H.nrows
    if H.conj_transpose() != H:
        raise CliffordError("hermitian_psd expects a Hermitian matrix")
    h = [[_scalarize(x) for x in row] for row in H.rows]
    active = list(range(n))
    while active:
        piv = None
        for i in active:
            d = h[i][i]
            if d:
                if d.sign() < 0:
                    return False
                piv = i
                break
        if piv is None:
            return all(not h[i][j] for i in active for j in active)
        active.remove(piv)
        d = h[piv][piv]
        for a in active:
            c = h[piv][a]
            if not c:
                continue
            for b in active:
                h[a][b] = h[a][b] - c.conjugate() * h[piv][b] / d
        for b in active:
            h[piv][b] = Scalar()
            h[b][piv] = Scalar()
    return True


def _scalarize(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar.from_rational(x)


def phase_adjust(T: Matrix, grading: Sequence[int]) -> Matrix:
    """Multiply an odd operator by zeta_8, fix an even one; reject mixed ones."""
    n = T.nrows
    has_even = any(
        T.rows[a][b] and grading[a] == grading[b] for a in range(n) for b in range(n)
    )
    has_odd = any(
        T.rows[a][b] and grading[a] != grading[b] for a in range(n) for b in range(n)
    )
    if has_even and has_odd:
        raise CliffordError("phase_adjust needs a parity-homogeneous operator")
    if not has_odd:
        return T
    z8 = zeta8()
    return Matrix([[z8 * _scalarize(x) if x else _scalarize(x) for x in row] for row in T.rows])
