"""Finite dimensional real Lie superalgebras by exact structure constants.

Validation (super antisymmetry, parity, graded Jacobi), matrix-basis
ingestion, invariant forms, ideal saturation, graded quotients and module
generation.  Everything is immutable after construction and purely
functional, so operations are safe to run concurrently.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import EchelonBuilder, Matrix, Subspace, echelon
from .scalars import Scalar

Coordvec = dict[int, Fraction]


class LsaError(ValueError):
    pass


class ValidationError(LsaError):
    """Structure constant validation failure, pinpointing the offending tuple."""

    def __init__(self, kind: str, indices: tuple, message: str):
        super().__init__(f"{kind} at {indices}: {message}")
        self.kind = kind
        self.indices = indices


class MatrixRealization:
    """Matrix model attached to an abstract algebra (for supertrace forms)."""

    __slots__ = ("mats", "block_sizes")

    def __init__(self, mats: Sequence[Matrix], block_sizes: tuple[int, int]):
        self.mats = list(mats)
        self.block_sizes = block_sizes

    @property
    def matrix_parities(self) -> list[int]:
        p, q = self.block_sizes
        return [0] * p + [1] * q


class LieSuperalgebra:
    __slots__ = ("names", "parities", "brackets", "realization", "_dim")

    def __init__(
        self,
        names: Sequence[str],
        parities: Sequence[int],
        brackets: dict[tuple[int, int], Coordvec],
        realization: MatrixRealization | None = None,
        validate: bool = True,
    ):
        self.names = tuple(names)
        self.parities = tuple(int(p) % 2 for p in parities)
        self._dim = len(self.names)
        self.brackets = _complete_brackets(brackets, self.parities, self._dim)
        self.realization = realization
        if validate:
            self.validate()

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def even_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 0]

    @property
    def odd_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 1]

    def bracket_basis(self, i: int, j: int) -> Coordvec:
        return self.brackets.get((i, j), {})

    def bracket(self, u: Sequence, v: Sequence) -> list:
        out = [Fraction(0)] * self._dim
        nz_u = [(i, a) for i, a in enumerate(u) if a]
        nz_v = [(j, b) for j, b in enumerate(v) if b]
        for i, a in nz_u:
            for j, b in nz_v:
                cij = self.brackets.get((i, j))
                if cij:
                    ab = a * b
                    for k, c in cij.items():
                        out[k] = out[k] + ab * c
        return out

    def ad_matrix(self, i: int) -> Matrix:
        n = self._dim
        rows = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            for k, c in self.bracket_basis(i, j).items():
                rows[k][j] = c
        return Matrix(rows)

    def basis_vector(self, i: int) -> list:
        v = [Fraction(0)] * self._dim
        v[i] = Fraction(1)
        return v

    def validate(self):
        n = self._dim
        par = self.parities
        # parity of bracket values
        for (i, j), val in self.brackets.items():
            target = (par[i] + par[j]) % 2
            for k, c in val.items():
                if c and par[k] != target:
                    raise ValidationError(
                        "parity violation", (i, j),
                        f"[{self.names[i]},{self.names[j]}] has a component of wrong parity at {self.names[k]}",
                    )
        # super antisymmetry on all pairs (diagonal included)
        for i in range(n):
            for j in range(i, n):
                val = self.bracket_basis(i, j)
                sign = -1 if par[i] and par[j] else 1
                mirrored = {k: -sign * c for k, c in self.bracket_basis(j, i).items() if c}
                if {k: c for k, c in val.items() if c} != mirrored:
                    raise ValidationError(
                        "antisymmetry violation", (j, i),
                        f"[{self.names[j]},{self.names[i]}] is not -(-1)^|x||y| [{self.names[i]},{self.names[j]}]",
                    )
                if i == j and par[i] == 0 and any(val.values()):
                    raise ValidationError(
                        "antisymmetry violation", (i, i),
                        f"[{self.names[i]},{self.names[i]}] must vanish for an even element",
                    )
        # graded Jacobi on sorted triples (antisymmetry covers permutations)
        for i in range(n):
            for j in range(i, n):
                bij = self.bracket_basis(i, j)
                sgn = -1 if par[i] and par[j] else 1
                for k in range(j, n):
                    lhs = self._sparse_left_bracket(i, self.bracket_basis(j, k))
                    t1 = self._sparse_right_bracket(bij, k)
                    t2 = self._sparse_left_bracket(j, self.bracket_basis(i, k))
                    rhs = dict(t1)
                    for m, c in t2.items():
                        s = rhs.get(m, Fraction(0)) + sgn * c
                        if s:
                            rhs[m] = s
                        else:
                            rhs.pop(m, None)
                    if lhs != rhs:
                        raise ValidationError(
                            "Jacobi violation", (i, j, k),
                            f"graded Jacobi fails on ({self.names[i]},{self.names[j]},{self.names[k]})",
                        )

    def _sparse_left_bracket(self, i: int, v: Coordvec) -> Coordvec:
        out: Coordvec = {}
        for m, a in v.items():
            cim = self.brackets.get((i, m))
            if cim:
                for k, c in cim.items():
                    s = out.get(k, Fraction(0)) + a * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def _sparse_right_bracket(self, u: Coordvec, k: int) -> Coordvec:
        out: Coordvec = {}
        for m, a in u.items():
            cmk = self.brackets.get((m, k))
            if cmk:
                for t, c in cmk.items():
                    s = out.get(t, Fraction(0)) + a * c
                    if s:
                        out[t] = s
                    else:
                        out.pop(t, None)
        return out

    def export_structure_constants(self) -> dict[tuple[int, int], Coordvec]:
        return {key: dict(val) for key, val in self.brackets.items() if val}

    def __repr__(self):
        ne = len(self.even_indices)
        no = len(self.odd_indices)
        return f"LieSuperalgebra(dim {ne}|{no})"


def _complete_brackets(
    given: dict[tuple[int, int], Coordvec], parities: Sequence[int], n: int
) -> dict[tuple[int, int], Coordvec]:
    """Normalize a sparse table; fill missing mirrored pairs by antisymmetry."""
    table: dict[tuple[int, int], Coordvec] = {}
    for (i, j), val in given.items():
        if not (0 <= i < n and 0 <= j < n):
            raise LsaError(f"bracket index ({i},{j}) out of range")
        clean = {k: Fraction(c) for k, c in val.items() if c}
        if clean:
            table[(i, j)] = clean
    for (i, j) in list(table.keys()):
        if (j, i) not in given and i != j:
            sign = -1 if parities[i] and parities[j] else 1
            table[(j, i)] = {k: -sign * c for k, c in table[(i, j)].items()}
    return table


def make_lsa(
    names: Sequence[str],
    parities: Sequence[int],
    structure_constants: dict[tuple[int, int], Coordvec],
    realization: MatrixRealization | None = None,
) -> LieSuperalgebra:
    """Construct and exhaustively validate a Lie superalgebra."""
    if len(names) != len(parities):
        raise LsaError("names and parities must have matching lengths")
    return LieSuperalgebra(names, parities, structure_constants, realization)


# -- matrix-basis ingestion ------------------------------------------------


def _flatten_keys(mats: Sequence[Matrix]) -> list[tuple[int, int, tuple[int, int]]]:
    keys = set()
    for M in mats:
        for r in range(M.nrows):
            for c in range(M.ncols):
                x = M.rows[r][c]
                if isinstance(x, Scalar):
                    for key in x.terms():
                        keys.add((r, c, key))
                elif x:
                    keys.add((r, c, (1, 0)))
    return sorted(keys)


def _flatten(M: Matrix, keys: list) -> list:
    idx = {k: t for t, k in enumerate(keys)}
    out = [Fraction(0)] * len(keys)
    for r in range(M.nrows):
        for c in range(M.ncols):
            x = M.rows[r][c]
            if isinstance(x, Scalar):
                for key, coef in x.terms().items():
                    pos = idx.get((r, c, key))
                    if pos is None:
                        raise LsaError("matrix entry leaves the ambient coefficient span")
                    out[pos] = coef
            elif x:
                pos = idx.get((r, c, (1, 0)))
                if pos is None:
                    raise LsaError("matrix entry leaves the ambient coefficient span")
                out[pos] = Fraction(x)
    return out


def super_matrix_bracket(X: Matrix, Y: Matrix, px: int, py: int) -> Matrix:
    XY = X @ Y
    YX = Y @ X
    return XY + YX if (px and py) else XY - YX


def from_matrix_basis(
    mats: Sequence[Matrix],
    parities: Sequence[int],
    block_sizes: tuple[int, int],
    names: Sequence[str] | None = None,
) -> LieSuperalgebra:
    """Abstract algebra from a real matrix basis closed under the super bracket.

    Structure constants are the exact rational coordinates of the matrix
    brackets in the given basis; the realization is kept on the result.
    """
    nb = len(mats)
    if names is None:
        names = [f"E{i + 1}" for i in range(nb)]
    keys = _flatten_keys(mats)
    flat = [_flatten(M, keys) for M in mats]
    width = len(keys)
    aug = [flat[i] + [Fraction(t == i) for t in range(nb)] for i in range(nb)]
    rows, pivots = echelon(aug)
    if len(rows) != nb or any(p >= width for p in pivots):
        raise LsaError("matrices are linearly dependent over R")

    def coords_of(M: Matrix, context: str) -> Coordvec:
        try:
            v = _flatten(M, keys)
        except LsaError:
            raise LsaError(f"bracket {context} leaves the span of the basis")
        v = v + [Fraction(0)] * nb
        for r, p in zip(rows, pivots):
            if v[p]:
                coef = v[p]
                v = [a - coef * b for a, b in zip(v, r)]
        if any(v[:width]):
            raise LsaError(f"bracket {context} leaves the span of the basis")
        return {t: -v[width + t] for t in range(nb) if v[width + t]}

    table: dict[tuple[int, int], Coordvec] = {}
    for i in range(nb):
        for j in range(nb):
            B = super_matrix_bracket(mats[i], mats[j], parities[i], parities[j])
            if not B.is_zero():
                table[(i, j)] = coords_of(B, f"({names[i]},{names[j]})")
    return make_lsa(names, parities, table, MatrixRealization(mats, block_sizes))


# -- bilinear forms ----------------------------------------------------------


class BilinearForm:
    """Exact bilinear form on an algebra, scalar- or vector-valued."""

    __slots__ = ("grams", "value_parities", "declared_parity")

    def __init__(self, grams: Sequence[Matrix], value_parities: Sequence[int] | None = None):
        self.grams = tuple(grams)
        self.value_parities = tuple(value_parities) if value_parities is not None else (0,) * len(self.grams)
        self.declared_parity = None  # set by form_report / build_form

    @property
    def value_dim(self) -> int:
        return len(self.grams)

    @property
    def gram(self) -> Matrix:
        if len(self.grams) != 1:
            raise LsaError("scalar gram requested from a vector-valued form")
        return self.grams[0]

    def eval_basis(self, i: int, j: int) -> list:
        return [G.rows[i][j] for G in self.grams]

    def eval(self, u: Sequence, v: Sequence) -> list:
        out = []
        for G in self.grams:
            total = Fraction(0)
            for i, a in enumerate(u):
                if not a:
                    continue
                row = G.rows[i]
                for j, b in enumerate(v):
                    if b and row[j]:
                        total = total + a * row[j] * b
            out.append(total)
        return out

    def stacked_gram_rows(self) -> list[list]:
        """Rows of the map x -> B(x, .), all value components side by side."""
        n = self.grams[0].nrows
        return [[G.rows[i][j] for G in self.grams for j in range(n)] for i in range(n)]


def form_parity(L: LieSuperalgebra, B: BilinearForm) -> str:
    even_ok = True
    odd_ok = True
    n = L.dim
    for G, vp in zip(B.grams, B.value_parities):
        for i in range(n):
            for j in range(n):
                if G.rows[i][j]:
                    pair = (L.parities[i] + L.parities[j]) % 2
                    if pair != vp % 2:
                        even_ok = False
                    if pair != (vp + 1) % 2:
                        odd_ok = False
    if even_ok and odd_ok:
        return "even"  # zero form, vacuously homogeneous
    if even_ok:
        return "even"
    if odd_ok:
        return "odd"
    return "mixed"


def build_form(L: LieSuperalgebra, kind: str, gram: Matrix | None = None) -> BilinearForm:
    """Supertrace form (needs the matrix realization), Killing form, or custom."""
    n = L.dim
    if kind == "custom":
        if gram is None:
            raise LsaError("custom form needs a gram matrix")
        B = BilinearForm([gram])
    elif kind == "killing":
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                tot = Fraction(0)
                for k in range(n):
                    cjk = L.bracket_basis(j, k)
                    for m, c in cjk.items():
                        cim = L.bracket_basis(i, m)
                        coef = cim.get(k)
                        if coef:
                            tot += (-c * coef) if L.parities[k] else (c * coef)
                rows[i][j] = tot
                rows[j][i] = tot if not (L.parities[i] and L.parities[j]) else -tot
        B = BilinearForm([Matrix(rows)])
    elif kind == "supertrace":
        if L.realization is None:
            raise LsaError("supertrace form needs a matrix realization")
        par = L.realization.matrix_parities
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                val = (L.realization.mats[i] @ L.realization.mats[j]).supertrace(par)
                if isinstance(val, Scalar):
                    val = val.as_fraction()
                row.append(Fraction(val))
            rows.append(row)
        B = BilinearForm([Matrix(rows)])
    else:
        raise LsaError(f"unknown form kind {kind!r}")
    B.declared_parity = form_parity(L, B)
    return B


def form_report(L: LieSuperalgebra, B: BilinearForm) -> dict:
    """Exact flags: supersymmetric, skew, invariant, parity, nondegenerate,
    radical, derivation_invariant (None when the star map is unavailable)."""
    n = L.dim
    supersym = True
    skew = True
    for G in B.grams:
        for i in range(n):
            for j in range(n):
                sign = -1 if L.parities[i] and L.parities[j] else 1
                if G.rows[i][j] != sign * G.rows[j][i]:
                    supersym = False
                if G.rows[i][j] != -sign * G.rows[j][i]:
                    skew = False
    invariant = True
    for i in range(n):
        if not invariant:
            break
        for j in range(n):
            cij = L.bracket_basis(i, j)
            for k in range(n):
                cjk = L.bracket_basis(j, k)
                for G in B.grams:
                    lhs = sum((c * G.rows[m][k] for m, c in cij.items()), Fraction(0))
                    rhs = sum((c * G.rows[i][m] for m, c in cjk.items()), Fraction(0))
                    if lhs != rhs:
                        invariant = False
                        break
                if not invariant:
                    break
            if not invariant:
                break
    stacked = B.stacked_gram_rows()
    from .linalg import kernel as dense_kernel

    # radical = {x : B(x, .) = 0}: kernel of the stacked rows viewed as a map on x
    rad_vectors = dense_kernel(list(map(list, zip(*stacked))), n)
    radical = Subspace(n, rad_vectors)
    nondeg = radical.dim == 0
    parity = form_parity(L, B)
    deriv_inv = None
    if nondeg and B.value_dim == 1 and parity in ("even", "odd"):
        from .cohomology import derivation_space, star

        der, _ = derivation_space(L)
        deriv_inv = True
        for D, _dp in der.members():
            Dstar = star(L, B, D)
            if not (Dstar + D).is_zero():
                deriv_inv = False
                break
    return {
        "supersymmetric": supersym,
        "skew": skew,
        "invariant": invariant,
        "parity": parity,
        "nondegenerate": nondeg,
        "radical": radical,
        "derivation_invariant": deriv_inv,
    }


# -- ideals, quotients, reports ---------------------------------------------


def ideal_closure(L: LieSuperalgebra, seeds: Iterable[Sequence]) -> Subspace:
    """Smallest subspace containing the seeds and closed under all brackets."""
    builder = EchelonBuilder(L.dim)
    for s in seeds:
        builder.add(s)
    fresh = [list(r) for r in builder.rows]
    while fresh:
        next_fresh = []
        for v in fresh:
            for i in range(L.dim):
                w = L.bracket(L.basis_vector(i), v)
                if any(w) and builder.add(w):
                    next_fresh.append(w)
        fresh = next_fresh
    return builder.subspace()


def graded_components(L: LieSuperalgebra, V: Subspace) -> tuple[Subspace, Subspace] | None:
    """Split V into even and odd parts; None if V is not parity-graded."""
    even_rows = []
    odd_rows = []
    for row in V.rows:
        ev = [x if L.parities[k] == 0 else Fraction(0) for k, x in enumerate(row)]
        od = [x if L.parities[k] == 1 else Fraction(0) for k, x in enumerate(row)]
        if not V.contains_vector(ev) or not V.contains_vector(od):
            return None
        if any(ev):
            even_rows.append(ev)
        if any(od):
            odd_rows.append(od)
    return Subspace(L.dim, even_rows), Subspace(L.dim, odd_rows)


def quotient_lsa(L: LieSuperalgebra, ideal: Subspace) -> tuple[LieSuperalgebra, list]:
    """Quotient by a graded ideal; complement = non-pivot standard basis slots.

    Returns (quotient, projection) with projection[i] the image of basis i.
    """
    n = L.dim
    if ideal.ambient_dim != n:
        raise LsaError("ideal lives in the wrong ambient space")
    if graded_components(L, ideal) is None:
        raise LsaError("ideal is not parity-graded")
    for i in range(n):
        for row in ideal.rows:
            w = L.bracket(L.basis_vector(i), row)
            if not ideal.contains_vector(w):
                raise LsaError(
                    f"not an ideal: [{L.names[i]}, ideal] escapes (witness bracket with basis {i})"
                )
    piv = set(ideal.pivots)
    keep = [i for i in range(n) if i not in piv]
    pos = {k: t for t, k in enumerate(keep)}

    def project(vec) -> Coordvec:
        v = ideal.reduce_vector(vec)
        return {pos[k]: v[k] for k in keep if v[k]}

    table: dict[tuple[int, int], Coordvec] = {}
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            img = project(L.bracket(L.basis_vector(i), L.basis_vector(j)))
            if img:
                table[(a, b)] = img
    names = [L.names[i] for i in keep]
    parities = [L.parities[i] for i in keep]
    quo = make_lsa(names, parities, table)
    proj_rows = []
    for i in range(n):
        img = project(L.basis_vector(i))
        proj_rows.append([img.get(t, Fraction(0)) for t in range(len(keep))])
    return quo, proj_rows


def structure_report(L: LieSuperalgebra) -> dict:
    n = L.dim
    derived_vecs = []
    for (i, j), val in L.brackets.items():
        if i <= j and val:
            derived_vecs.append([val.get(k, Fraction(0)) for k in range(n)])
    derived = Subspace(n, derived_vecs)
    stacked = []
    for j in range(n):
        # x central iff [x, e_j] = 0 for all j; rows of the map x -> [x, e_j]
        for k in range(n):
            stacked.append([L.bracket_basis(i, j).get(k, Fraction(0)) for i in range(n)])
    from .linalg import kernel as dense_kernel

    center = Subspace(n, dense_kernel(stacked, n))
    return {
        "derived_subalgebra": derived,
        "center": center,
        "is_perfect": derived.dim == n,
    }


def generated_submodule(action: Sequence[Matrix], v: Sequence) -> Subspace:
    """Smallest subspace containing v invariant under all action matrices."""
    if not any(v):
        return Subspace.zero(len(v))
    builder = EchelonBuilder(len(v))
    builder.add(v)
    fresh = [list(r) for r in builder.rows]
    while fresh:
        nxt = []
        for w in fresh:
            for M in action:
                u = M.apply(w)
                if any(u) and builder.add(u):
                    nxt.append(u)
        fresh = nxt
    return builder.subspace()
