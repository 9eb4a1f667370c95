"""Constructors for the compact simple Lie superalgebra families.

Families: su_n (purely even), su_pq, psu_pp, c_n, q_n and pq_n, each with an
explicit rational/gaussian matrix realization, the family's invariant form,
outer derivations where they exist, and the special elements used by the
cone and kernel arguments.  verify_catalog_facts machine-checks the claimed
facts per family; every failure is named.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cohomology import centroid, h2_dim
from .linalg import Matrix, Subspace, definiteness
from .lsa import (
    BilinearForm,
    LieSuperalgebra,
    build_form,
    form_parity,
    form_report,
    from_matrix_basis,
    generated_submodule,
    quotient_lsa,
    structure_report,
)
from .scalars import Scalar

FAMILIES = ("su_n", "su_pq", "psu_pp", "c_n", "q_n", "pq_n")


class CatalogError(ValueError):
    pass


class CatalogEntry:
    __slots__ = (
        "family",
        "params",
        "algebra",
        "form",
        "outer_derivation",
        "specials",
        "components",
        "prequotient",
        "projection",
    )

    def __init__(self, family, params, algebra, form, outer_derivation=None,
                 specials=None, components=None, prequotient=None, projection=None):
        self.family = family
        self.params = params
        self.algebra = algebra
        self.form = form
        self.outer_derivation = outer_derivation  # (Matrix, parity) or None
        self.specials = specials or {}
        self.components = components or {}
        self.prequotient = prequotient
        self.projection = projection

    def __repr__(self):
        pieces = ",".join(str(v) for v in self.params)
        return f"CatalogEntry({self.family}:{pieces}, dim {self.algebra.dim})"


# -- matrix helpers -----------------------------------------------------------

_I = Scalar.i()
_ONE = Scalar.from_rational(1)


def _zrows(n):
    return [[Scalar() for _ in range(n)] for _ in range(n)]


def _mat(rows):
    return Matrix(rows)


def _su_block_matrices(n: int, offset: int, total: int):
    """Basis of su(n) placed at a diagonal offset inside a total x total matrix."""
    mats = []
    names = []
    for r in range(n):
        for s in range(r + 1, n):
            R = _zrows(total)
            R[offset + r][offset + s] = _ONE
            R[offset + s][offset + r] = -_ONE
            mats.append(_mat(R))
            names.append(f"e{r + 1}{s + 1}")
            R = _zrows(total)
            R[offset + r][offset + s] = _I
            R[offset + s][offset + r] = _I
            mats.append(_mat(R))
            names.append(f"f{r + 1}{s + 1}")
    for r in range(n - 1):
        R = _zrows(total)
        R[offset + r][offset + r] = _I
        R[offset + r + 1][offset + r + 1] = -_I
        mats.append(_mat(R))
        names.append(f"h{r + 1}")
    return mats, names


def _u_block_matrices(n: int, offset: int, total: int):
    """Basis of u(n) at a diagonal offset (su(n) pattern plus i E_rr's)."""
    mats, names = _su_block_matrices(n, offset, total)
    # replace the traceless diagonal by the full iE_rr family
    mats = [M for M, nm in zip(mats, names) if not nm.startswith("h")]
    names = [nm for nm in names if not nm.startswith("h")]
    for r in range(n):
        R = _zrows(total)
        R[offset + r][offset + r] = _I
        mats.append(_mat(R))
        names.append(f"d{r + 1}")
    return mats, names


# -- su(p|q) and friends --------------------------------------------------------


def _su_pq_data(p: int, q: int):
    """Basis of su(p|q) (p = q allowed here; the public family forbids it)."""
    total = p + q
    mats: list[Matrix] = []
    names: list[str] = []
    parities: list[int] = []
    comp_ranges = {}

    ms, nms = _su_block_matrices(p, 0, total)
    comp_ranges["su_p"] = (0, len(ms))
    mats += ms
    names += [f"u.{nm}" for nm in nms]
    parities += [0] * len(ms)

    ms, nms = _su_block_matrices(q, p, total)
    comp_ranges["su_q"] = (len(mats), len(mats) + len(ms))
    mats += ms
    names += [f"l.{nm}" for nm in nms]
    parities += [0] * len(ms)

    # central i * ((1/p) 1_p + (1/q) 1_q)
    R = _zrows(total)
    for r in range(p):
        R[r][r] = _I * Fraction(1, p)
    for r in range(q):
        R[p + r][p + r] = _I * Fraction(1, q)
    comp_ranges["center"] = (len(mats), len(mats) + 1)
    mats.append(_mat(R))
    names.append("z")
    parities.append(0)

    odd_start = len(mats)
    odd_slot = {}
    for r in range(p):
        for s in range(q):
            R = _zrows(total)
            R[r][p + s] = _ONE
            R[p + s][r] = _I
            odd_slot[("x", r, s)] = len(mats)
            mats.append(_mat(R))
            names.append(f"o.x{r + 1}{s + 1}")
            parities.append(1)
            R = _zrows(total)
            R[r][p + s] = _I
            R[p + s][r] = _ONE
            odd_slot[("y", r, s)] = len(mats)
            mats.append(_mat(R))
            names.append(f"o.y{r + 1}{s + 1}")
            parities.append(1)
    comp_ranges["odd"] = (odd_start, len(mats))
    return mats, names, parities, comp_ranges, odd_slot


def _range_subspace(dim: int, rng: tuple[int, int]) -> Subspace:
    vecs = []
    for i in range(*rng):
        v = [Fraction(0)] * dim
        v[i] = Fraction(1)
        vecs.append(v)
    return Subspace(dim, vecs)


def build_su_n(n: int) -> CatalogEntry:
    if n < 2:
        raise CatalogError("su_n needs n >= 2")
    mats, names = _su_block_matrices(n, 0, n)
    algebra = from_matrix_basis(mats, [0] * len(mats), (n, 0), names=names)
    form = build_form(algebra, "killing")
    return CatalogEntry(
        "su_n", (n,), algebra, form,
        components={"all": _range_subspace(algebra.dim, (0, algebra.dim))},
    )


def build_su_pq(p: int, q: int, _allow_equal: bool = False) -> CatalogEntry:
    if not (_allow_equal and p == q) and not p > q >= 1:
        raise CatalogError("su_pq needs p > q >= 1")
    if q < 1:
        raise CatalogError("su_pq needs q >= 1")
    mats, names, parities, comp, odd_slot = _su_pq_data(p, q)
    algebra = from_matrix_basis(mats, parities, (p, q), names=names)
    form = build_form(algebra, "supertrace")
    dim = algebra.dim
    components = {k: _range_subspace(dim, comp[k]) for k in ("su_p", "su_q", "center")}
    specials = {}
    # z_* = odd x-basis at block position (1,1); kappa(z_*, z_*) = 0
    z_star = algebra.basis_vector(odd_slot[("x", 0, 0)])
    specials["z_star"] = z_star
    specials["center_vector"] = algebra.basis_vector(comp["center"][0])
    # X_j elements (p = q case): sum of squares lands in i R 1
    if p == q:
        specials["X"] = [algebra.basis_vector(odd_slot[("x", j, j)]) for j in range(p)]
        # i 1_{2p} = p * z in this normalization
        i_one = [Fraction(0)] * dim
        i_one[comp["center"][0]] = Fraction(p)
        specials["i_one"] = i_one
    return CatalogEntry("su_pq", (p, q), algebra, form,
                        specials=specials, components=components)


def build_psu_pp(p: int) -> CatalogEntry:
    if p < 2:
        raise CatalogError("psu_pp needs p >= 2")
    pre = build_su_pq(p, p, _allow_equal=True)
    L = pre.algebra
    dim = L.dim
    radical = Subspace(dim, [pre.specials["i_one"]])
    quo, proj = quotient_lsa(L, radical)

    def project(vec):
        out = [Fraction(0)] * quo.dim
        for i, c in enumerate(vec):
            if c:
                out = [a + c * b for a, b in zip(out, proj[i])]
        return out

    # descended supertrace form: evaluate on kept representatives
    piv = set(radical.pivots)
    keep = [i for i in range(dim) if i not in piv]
    G = [[pre.form.gram.rows[i][j] for j in keep] for i in keep]
    form = BilinearForm([Matrix(G)])
    form.declared_parity = form_parity(quo, form)

    # outer derivation: ad diag(i 1_p, 0) descended to the quotient
    total = 2 * p
    Dmat = _zrows(total)
    for r in range(p):
        Dmat[r][r] = _I
    Dmat = _mat(Dmat)
    D_cols = []
    real = L.realization
    for i in range(dim):
        img = Dmat @ real.mats[i] - real.mats[i] @ Dmat  # even conjugator
        D_cols.append(_coords_in(real.mats, img))
    D_on_pre = Matrix(list(map(list, zip(*D_cols))))
    # descended map: columns are images of the kept representative slots
    Dq = Matrix(list(map(list, zip(*[project(D_on_pre.column(i)) for i in keep]))))

    comp = {}
    pre_comp = {"su_p": pre.components["su_p"], "su_q": pre.components["su_q"]}
    for key, sub in pre_comp.items():
        comp["k0_1" if key == "su_p" else "k0_2"] = Subspace(
            quo.dim, [project(r) for r in sub.rows]
        )
    specials = {}
    specials["x_star"] = project(_b_matrix_odd_vector(pre, p, "diag1m1"))
    specials["y_star"] = project(_b_matrix_odd_vector(pre, p, "identity"))
    specials["X"] = [project(v) for v in pre.specials["X"]]
    entry = CatalogEntry(
        "psu_pp", (p,), quo, form,
        outer_derivation=(Dq, 0),
        specials=specials, components=comp,
        prequotient=pre, projection=proj,
    )
    return entry


def _coords_in(basis_mats: Sequence[Matrix], M: Matrix) -> list:
    """Exact coordinates of M in a linearly independent matrix family."""
    from .lsa import _flatten, _flatten_keys
    from .linalg import echelon

    keys = _flatten_keys(list(basis_mats) + [M])
    flat = [_flatten(B, keys) for B in basis_mats]
    nb = len(basis_mats)
    width = len(keys)
    aug = [flat[i] + [Fraction(t == i) for t in range(nb)] for i in range(nb)]
    rows, pivots = echelon(aug)
    v = _flatten(M, keys) + [Fraction(0)] * nb
    for r, pvt in zip(rows, pivots):
        if v[pvt]:
            coef = v[pvt]
            v = [a - coef * b for a, b in zip(v, r)]
    if any(v[:width]):
        raise CatalogError("matrix does not lie in the span of the basis")
    return [-x for x in v[width:]]


def _b_matrix_odd_vector(pre: CatalogEntry, p: int, shape: str) -> list:
    """Odd element of su(p|p) with B = diag(1,-1,0,..) or B = 1_p."""
    total = 2 * p
    R = _zrows(total)
    if shape == "diag1m1":
        diag = [1, -1] + [0] * (p - 2)
    elif shape == "identity":
        diag = [1] * p
    else:
        raise CatalogError(f"unknown special shape {shape!r}")
    for r, val in enumerate(diag):
        if val:
            R[r][p + r] = _ONE * val
            R[p + r][r] = _I * val
    return _coords_in(pre.algebra.realization.mats, _mat(R))


# -- c(n) -------------------------------------------------------------------------


def build_c_n(n: int) -> CatalogEntry:
    if n < 2:
        raise CatalogError("c_n needs n >= 2")
    m = n - 1
    total = 2 + 2 * m
    mats: list[Matrix] = []
    names: list[str] = []
    parities: list[int] = []
    comp_ranges = {}

    # alpha = i in the (2|2m) block matrix
    R = _zrows(total)
    R[0][0] = _I
    R[1][1] = -_I
    comp_ranges["R"] = (0, 1)
    mats.append(_mat(R))
    names.append("r")
    parities.append(0)

    sp_start = len(mats)
    # A in u(m): blocks (3,3) = A, (4,4) = -A^t
    for r in range(m):
        for s in range(r + 1, m):
            R = _zrows(total)
            R[2 + r][2 + s] = _ONE
            R[2 + s][2 + r] = -_ONE
            R[2 + m + r][2 + m + s] = _ONE
            R[2 + m + s][2 + m + r] = -_ONE
            mats.append(_mat(R))
            names.append(f"a.e{r + 1}{s + 1}")
            parities.append(0)
            R = _zrows(total)
            R[2 + r][2 + s] = _I
            R[2 + s][2 + r] = _I
            R[2 + m + r][2 + m + s] = -_I
            R[2 + m + s][2 + m + r] = -_I
            mats.append(_mat(R))
            names.append(f"a.f{r + 1}{s + 1}")
            parities.append(0)
    for r in range(m):
        R = _zrows(total)
        R[2 + r][2 + r] = _I
        R[2 + m + r][2 + m + r] = -_I
        mats.append(_mat(R))
        names.append(f"a.d{r + 1}")
        parities.append(0)
    # B symmetric: blocks (3,4) = B, (4,3) = -B*
    for r in range(m):
        for s in range(r, m):
            R = _zrows(total)
            R[2 + r][2 + m + s] = _ONE
            R[2 + s][2 + m + r] = _ONE
            R[2 + m + r][2 + s] = -_ONE
            R[2 + m + s][2 + r] = -_ONE
            mats.append(_mat(R))
            names.append(f"b.e{r + 1}{s + 1}")
            parities.append(0)
            R = _zrows(total)
            R[2 + r][2 + m + s] = _I
            R[2 + s][2 + m + r] = _I
            R[2 + m + r][2 + s] = _I
            R[2 + m + s][2 + r] = _I
            mats.append(_mat(R))
            names.append(f"b.f{r + 1}{s + 1}")
            parities.append(0)
    comp_ranges["sp"] = (sp_start, len(mats))

    odd_start = len(mats)
    # M row vector: (1,3) = M, (2,4) = -i conj(M), (3,1) = -i conj(M)^t, (4,2) = -M^t
    for r in range(m):
        for scale, tag in ((_ONE, "re"), ((_I), "im")):
            R = _zrows(total)
            conj = scale.conjugate()
            R[0][2 + r] = scale
            R[1][2 + m + r] = -_I * conj
            R[2 + r][0] = -_I * conj
            R[2 + m + r][1] = -scale
            mats.append(_mat(R))
            names.append(f"m.{tag}{r + 1}")
            parities.append(1)
    # N row vector: (1,4) = N, (2,3) = i conj(N), (3,2) = N^t, (4,1) = -i conj(N)^t
    for r in range(m):
        for scale, tag in ((_ONE, "re"), ((_I), "im")):
            R = _zrows(total)
            conj = scale.conjugate()
            R[0][2 + m + r] = scale
            R[1][2 + r] = _I * conj
            R[2 + r][1] = scale
            R[2 + m + r][0] = -_I * conj
            mats.append(_mat(R))
            names.append(f"n.{tag}{r + 1}")
            parities.append(1)
    comp_ranges["odd"] = (odd_start, len(mats))

    algebra = from_matrix_basis(mats, parities, (2, 2 * m), names=names)
    form = build_form(algebra, "supertrace")
    dim = algebra.dim
    components = {k: _range_subspace(dim, comp_ranges[k]) for k in ("R", "sp")}
    # isotropic even element r + x2 with kappa(r,r) = -kappa(x2,x2)
    specials = {"center_vector": algebra.basis_vector(0)}
    return CatalogEntry("c_n", (n,), algebra, form, specials=specials, components=components)


# -- q(n) and pq(n) ------------------------------------------------------------------


def _q_n_data(n: int):
    total = 2 * n
    mats: list[Matrix] = []
    names: list[str] = []
    parities: list[int] = []

    def a_matrix(block: Matrix) -> Matrix:
        R = _zrows(total)
        for r in range(n):
            for c in range(n):
                v = block.rows[r][c]
                if v:
                    R[r][c] = v
                    R[n + r][n + c] = v
        return _mat(R)

    def b_matrix(block: Matrix) -> Matrix:
        one_minus_i = _ONE - _I
        R = _zrows(total)
        for r in range(n):
            for c in range(n):
                v = block.rows[r][c]
                if v:
                    R[r][n + c] = one_minus_i * v
                    R[n + r][c] = one_minus_i * v
        return _mat(R)

    # a-part: all of u(n)
    ublk, unames = _u_block_matrices(n, 0, n)
    a_range = (0, len(ublk))
    for M, nm in zip(ublk, unames):
        mats.append(a_matrix(M))
        names.append(f"a.{nm}")
        parities.append(0)
    # b-part: su(n) (traceless u(n))
    sblk, snames = _su_block_matrices(n, 0, n)
    b_range = (len(mats), len(mats) + len(sblk))
    b_index = {}
    for M, nm in zip(sblk, snames):
        b_index[nm] = len(mats)
        mats.append(b_matrix(M))
        names.append(f"b.{nm}")
        parities.append(1)
    return mats, names, parities, a_range, b_range, b_index


def _pq_form_gram(L: LieSuperalgebra, n: int) -> Matrix:
    """kappa(X, Y) = tr(a b') + tr(a' b) read off the block realization."""
    real = L.realization
    half = Fraction(1, 2)

    def parts(M: Matrix):
        a = [[M.rows[r][c] for c in range(n)] for r in range(n)]
        # upper-right block = (1 - i) b, so b = block * (1 + i)/2
        fac = (Scalar.from_rational(1) + Scalar.i()) * half
        b = [[M.rows[r][n + c] * fac for c in range(n)] for r in range(n)]
        return Matrix(a), Matrix(b)

    dim = L.dim
    blocks = [parts(real.mats[i]) for i in range(dim)]
    G = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        ai, bi = blocks[i]
        for j in range(dim):
            aj, bj = blocks[j]
            val = (ai @ bj).trace() + (aj @ bi).trace()
            if isinstance(val, Scalar):
                val = val.as_fraction()
            G[i][j] = Fraction(val)
    return Matrix(G)


def build_q_n(n: int) -> CatalogEntry:
    if n < 2:
        raise CatalogError("q_n needs n >= 2")
    mats, names, parities, a_range, b_range, _bi = _q_n_data(n)
    algebra = from_matrix_basis(mats, parities, (n, n), names=names)
    form = BilinearForm([_pq_form_gram(algebra, n)])
    form.declared_parity = form_parity(algebra, form)
    components = {
        "a_part": _range_subspace(algebra.dim, a_range),
        "b_part": _range_subspace(algebra.dim, b_range),
    }
    i_one = [Fraction(0)] * algebra.dim
    for r in range(n):
        i_one[algebra.names.index(f"a.d{r + 1}")] = Fraction(1)
    return CatalogEntry(
        "q_n", (n,), algebra, form,
        specials={"i_one": i_one}, components=components,
    )


def build_pq_n(n: int, _allow_small: bool = False) -> CatalogEntry:
    if n <= 2 and not _allow_small:
        raise CatalogError("pq_n needs n > 2")
    pre = build_q_n(n)
    L = pre.algebra
    dim = L.dim
    i_one = pre.specials["i_one"]
    radical = Subspace(dim, [i_one])
    quo, proj = quotient_lsa(L, radical)

    def project(vec):
        out = [Fraction(0)] * quo.dim
        for i, c in enumerate(vec):
            if c:
                out = [a + c * b for a, b in zip(out, proj[i])]
        return out

    piv = set(radical.pivots)
    keep = [i for i in range(dim) if i not in piv]
    G = [[pre.form.gram.rows[i][j] for j in keep] for i in keep]
    form = BilinearForm([Matrix(G)])
    form.declared_parity = form_parity(quo, form)

    # odd outer derivation: super-ad of Delta = [[0, 1],[i 1, 0]]
    total = 2 * n
    Delta = _zrows(total)
    for r in range(n):
        Delta[r][n + r] = _ONE
        Delta[n + r][r] = _I
    Delta = _mat(Delta)
    real = L.realization
    D_cols = []
    for i in range(dim):
        X = real.mats[i]
        if L.parities[i] == 0:
            img = Delta @ X - X @ Delta
        else:
            img = Delta @ X + X @ Delta
        D_cols.append(_coords_in(real.mats, img))
    D_on_pre = Matrix(list(map(list, zip(*D_cols))))
    Dq = Matrix(list(map(list, zip(*[project(D_on_pre.column(i)) for i in keep]))))

    components = {
        "a_part": Subspace(quo.dim, [project(r) for r in pre.components["a_part"].rows]),
        "b_part": Subspace(quo.dim, [project(r) for r in pre.components["b_part"].rows]),
    }
    # Y_j witnesses: b_j = i(B_j - B_{j+1}) cyclically
    specials = {}
    Y = []
    for j in range(n):
        vec = [Fraction(0)] * dim
        b = [Fraction(0)] * n
        b[j] = Fraction(1)
        b[(j + 1) % n] = Fraction(-1)
        # i(B_j - B_{j+1}) expanded in the b-part diagonal basis h_r = i(E_rr - E_{r+1,r+1})
        coeffs = _traceless_diag_coords(b)
        for r, c in enumerate(coeffs):
            if c:
                vec[L.names.index(f"b.h{r + 1}")] = c
        Y.append(project(vec))
    specials["Y"] = Y
    entry = CatalogEntry(
        "pq_n", (n,), quo, form,
        outer_derivation=(Dq, 1),
        specials=specials, components=components,
        prequotient=pre, projection=proj,
    )
    return entry


def _traceless_diag_coords(diag: list[Fraction]) -> list[Fraction]:
    """Coordinates of a traceless diagonal in the h_r = E_rr - E_{r+1,r+1} basis."""
    n = len(diag)
    assert sum(diag) == 0
    coeffs = []
    run = Fraction(0)
    for r in range(n - 1):
        run += diag[r]
        coeffs.append(run)
    return coeffs


# -- public entry point ---------------------------------------------------------


def build_catalog(family: str, *params: int) -> CatalogEntry:
    if family == "su_n":
        return build_su_n(*params)
    if family == "su_pq":
        return build_su_pq(*params)
    if family == "psu_pp":
        return build_psu_pp(*params)
    if family == "c_n":
        return build_c_n(*params)
    if family == "q_n":
        return build_q_n(*params)
    if family == "pq_n":
        return build_pq_n(*params)
    raise CatalogError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")


def expected_dimension(family: str, *params: int) -> int:
    if family == "su_n":
        (n,) = params
        return n * n - 1
    if family == "su_pq":
        p, q = params
        return (p + q) ** 2 - 1
    if family == "psu_pp":
        (p,) = params
        return 4 * p * p - 2
    if family == "c_n":
        (n,) = params
        m = n - 1
        return 1 + m * (2 * m + 1) + 4 * m
    if family == "q_n":
        (n,) = params
        return 2 * n * n - 1
    if family == "pq_n":
        (n,) = params
        return 2 * (n * n - 1)
    raise CatalogError(f"unknown family {family!r}")


_SPECIAL_FAMILIES = ("su_pq", "psu_pp", "pq_n")


def special_elements(entry: CatalogEntry) -> dict:
    """Named special element map; raises for families without the element set."""
    if entry.family not in _SPECIAL_FAMILIES:
        raise CatalogError(f"family {entry.family} carries no special elements")
    return dict(entry.specials)


# -- machine-checked facts --------------------------------------------------------


def _restricted_definiteness(form: BilinearForm, sub: Subspace) -> str:
    basis = sub.basis_matrix()
    k = len(basis)
    G = [[None] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            G[a][b] = form.eval(basis[a], basis[b])[0]
    return definiteness(Matrix(G))


def verify_catalog_facts(entry: CatalogEntry) -> dict:
    """Machine-check the family fact sheet; returns {fact_name: bool | value}."""
    L = entry.algebra
    out: dict[str, object] = {}
    rep = form_report(L, entry.form)
    out["dim_matches_closed_form"] = L.dim == expected_dimension(entry.family, *entry.params)
    out["form_supersymmetric"] = rep["supersymmetric"]
    out["form_invariant"] = rep["invariant"]
    if entry.family == "q_n":
        # the odd pairing degenerates exactly on R i 1; pq_n is its quotient
        line = Subspace(L.dim, [entry.specials["i_one"]])
        out["form_radical_is_i_one"] = rep["radical"].dim == 1 and rep["radical"].contains(line)
    else:
        out["form_nondegenerate"] = rep["nondegenerate"]
    out["form_parity"] = rep["parity"]
    srep = structure_report(L)
    out["perfect"] = srep["is_perfect"]
    cent = centroid(L)
    out["centroid_is_scalar"] = cent.dim == 1 and not cent.odd

    if entry.family in ("su_n", "su_pq", "psu_pp", "c_n", "pq_n"):
        out["h2_dim"] = h2_dim(L)
        expected_h2 = 1 if entry.family in ("psu_pp", "pq_n") else 0
        out["h2_matches"] = out["h2_dim"] == expected_h2

    # pre-quotient radical is exactly R i 1 for the su(p|p) carrier
    if entry.family == "psu_pp":
        pre = entry.prequotient
        rad = form_report(pre.algebra, pre.form)["radical"]
        line = Subspace(pre.algebra.dim, [pre.specials["i_one"]])
        out["prequotient_radical_is_i_one"] = rad.dim == 1 and rad.contains(line)

    # signs of the form on even components
    sign_expect = {
        "su_n": [("all", "negative")],
        "su_pq": [("su_p", "negative"), ("su_q", "positive"), ("center", "positive")],
        "psu_pp": [("k0_1", "negative"), ("k0_2", "positive")],
        "c_n": [("R", "negative"), ("sp", "positive")],
    }
    for comp_name, expected in sign_expect.get(entry.family, []):
        sub = entry.components.get(comp_name)
        if sub is None or sub.dim == 0:
            continue
        if expected == "negative":
            neg = BilinearForm([entry.form.gram.scale(Fraction(-1))])
            got = _restricted_definiteness(neg, sub) == "positive_definite"
        else:
            got = _restricted_definiteness(entry.form, sub) == "positive_definite"
        out[f"form_{expected}_definite_on_{comp_name}"] = got

    # outer derivation: vanishes on the even part and kappa_D is not a coboundary
    if entry.outer_derivation is not None:
        from .cohomology import Cocycle2, is_coboundary, is_derivation, kappa_T, star

        D, dp = entry.outer_derivation
        out["D_is_derivation"] = is_derivation(L, D, dp)
        out["D_vanishes_on_even"] = all(
            not any(D.column(i)) for i in L.even_indices
        )
        out["D_kappa_skew"] = (star(L, entry.form, D) + D).is_zero()
        kd = kappa_T(L, entry.form, D)
        omega = Cocycle2(L, [kd.gram], validate=True)
        out["kappa_D_not_coboundary"] = not is_coboundary(L, omega)
        if entry.family == "pq_n":
            odd = Subspace(L.dim, [L.basis_vector(i) for i in L.odd_indices])
            sym = BilinearForm([kd.gram])
            verdict = _restricted_definiteness(sym, odd)
            neg = BilinearForm([kd.gram.scale(Fraction(-1))])
            verdict_neg = _restricted_definiteness(neg, odd)
            out["kappa_D_definite_on_odd"] = (
                verdict == "positive_definite" or verdict_neg == "positive_definite"
            )
            out["kappa_D_odd_sign"] = (
                "positive" if verdict == "positive_definite" else "negative"
            )

    # irreducibility replay: each odd basis vector generates all of k_1
    odd_idx = L.odd_indices
    if odd_idx:
        pos = {k: t for t, k in enumerate(odd_idx)}
        actions = []
        for i in L.even_indices:
            A = L.ad_matrix(i)
            rows = [[A.rows[a][b] for b in odd_idx] for a in odd_idx]
            actions.append(Matrix(rows))
        ok = True
        for v in range(len(odd_idx)):
            vec = [Fraction(t == v) for t in range(len(odd_idx))]
            if generated_submodule(actions, vec).dim != len(odd_idx):
                ok = False
                break
        out["odd_part_generated_by_every_vector"] = ok

    # existence of even x, y with 0 != kappa(x,x) = -kappa(y,y), kappa(x,y) = 0
    if entry.family in ("su_pq", "psu_pp", "c_n"):
        pair = _isotropic_component_pair(entry)
        out["isotropic_pair_exists"] = pair is not None
        if pair is not None:
            x, y = pair
            kxx = entry.form.eval(x, x)[0]
            kyy = entry.form.eval(y, y)[0]
            kxy = entry.form.eval(x, y)[0]
            out["isotropic_pair_exact"] = bool(kxx and kxx == -kyy and not kxy)
    return out


def _isotropic_component_pair(entry: CatalogEntry):
    """Even x in the negative component and y in a positive one with
    kappa(x,x) = -kappa(y,y) != 0 and kappa(x,y) = 0 (rescaled exactly)."""
    neg_name = {"su_pq": "su_p", "psu_pp": "k0_1", "c_n": "R"}[entry.family]
    pos_name = {"su_pq": "su_q", "psu_pp": "k0_2", "c_n": "sp"}[entry.family]
    neg = entry.components[neg_name]
    pos = entry.components[pos_name]
    if pos.dim == 0:
        pos = entry.components.get("center")
        if pos is None or pos.dim == 0:
            return None
    x = list(neg.rows[0])
    y = list(pos.rows[0])
    kxx = entry.form.eval(x, x)[0]
    kyy = entry.form.eval(y, y)[0]
    if not kxx or not kyy:
        return None
    # scale y so that kappa(y,y) = -kappa(x,x); needs -kxx/kyy a rational square
    ratio = Fraction(-kxx, kyy) if not isinstance(kxx, Scalar) else None
    if ratio is None or ratio <= 0:
        return None
    num = ratio.numerator
    den = ratio.denominator
    from .scalars import squarefree_split

    cn, mn = squarefree_split(num)
    cd, md = squarefree_split(den)
    if mn == 1 and md == 1:
        y = [Fraction(cn, cd) * t for t in y]
        return x, y
    # fall back to a tower scalar coefficient
    s = Scalar.sqrt_rational(ratio)
    y = [s * t for t in y]
    return x, y
