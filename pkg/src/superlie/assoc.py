"""Unital supercommutative associative superalgebras.

Grassmann algebras on s odd generators (bitset monomials, inversion-count
signs), their Z-grading, the augmentation map, and graded quotients such as
Lambda_s / Lambda^(>=3).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import Subspace

Coordvec = dict[int, Fraction]


class AssocError(ValueError):
    pass


class AssocSuperalgebra:
    """Finite dimensional unital supercommutative associative superalgebra."""

    __slots__ = ("names", "parities", "z_degrees", "table", "unit", "_dim")

    def __init__(
        self,
        names: Sequence[str],
        parities: Sequence[int],
        table: dict[tuple[int, int], Coordvec],
        unit: int,
        z_degrees: Sequence[int] | None = None,
        validate: bool = True,
    ):
        self.names = tuple(names)
        self.parities = tuple(int(p) % 2 for p in parities)
        self._dim = len(self.names)
        self.table = {
            key: {k: Fraction(c) for k, c in val.items() if c} for key, val in table.items()
        }
        self.unit = unit
        self.z_degrees = tuple(z_degrees) if z_degrees is not None else None
        if validate:
            self.validate()

    @property
    def dim(self) -> int:
        return self._dim

    def product_basis(self, i: int, j: int) -> Coordvec:
        return self.table.get((i, j), {})

    def product(self, u: Sequence, v: Sequence) -> list:
        out = [Fraction(0)] * self._dim
        nz_u = [(i, a) for i, a in enumerate(u) if a]
        nz_v = [(j, b) for j, b in enumerate(v) if b]
        for i, a in nz_u:
            for j, b in nz_v:
                for k, c in self.product_basis(i, j).items():
                    out[k] = out[k] + a * b * c
        return out

    def unit_vector(self) -> list:
        v = [Fraction(0)] * self._dim
        v[self.unit] = Fraction(1)
        return v

    # -- validation ------------------------------------------------------

    def validate(self):
        n = self._dim
        if len(self.parities) != n:
            raise AssocError("parity list does not match dimension")
        if self.z_degrees is not None:
            if len(self.z_degrees) != n:
                raise AssocError("degree list does not match dimension")
            for i in range(n):
                if self.z_degrees[i] % 2 != self.parities[i]:
                    raise AssocError(
                        f"inconsistent grading at basis {i}: parity != degree mod 2"
                    )
        for (i, j), val in self.table.items():
            for k, c in val.items():
                if c and (self.parities[i] + self.parities[j]) % 2 != self.parities[k]:
                    raise AssocError(f"product ({i},{j}) violates parity at {k}")
                if c and self.z_degrees is not None:
                    if self.z_degrees[i] + self.z_degrees[j] != self.z_degrees[k]:
                        raise AssocError(f"product ({i},{j}) violates the Z-grading at {k}")
        for i in range(n):
            if self.product_basis(self.unit, i) != {i: Fraction(1)}:
                raise AssocError(f"unit fails to act as identity on basis {i}")
            if self.product_basis(i, self.unit) != {i: Fraction(1)}:
                raise AssocError(f"unit fails to act as identity on basis {i}")
        for i in range(n):
            for j in range(n):
                pij = self.product_basis(i, j)
                sign = -1 if self.parities[i] and self.parities[j] else 1
                pji = self.product_basis(j, i)
                if pij != {k: sign * c for k, c in pji.items()}:
                    raise AssocError(f"supercommutativity fails at pair ({i},{j})")
        for i in range(n):
            for j in range(i, n):
                pij = self.product_basis(i, j)
                for k in range(j, n):
                    left = self._product_sparse_left(pij, k)
                    right = self._product_sparse_right(i, self.product_basis(j, k))
                    if left != right:
                        raise AssocError(f"associativity fails at triple ({i},{j},{k})")

    def _basis_vec(self, i: int) -> list:
        v = [Fraction(0)] * self._dim
        v[i] = Fraction(1)
        return v

    def _product_sparse_left(self, u: Coordvec, k: int) -> Coordvec:
        out: Coordvec = {}
        for m, a in u.items():
            for t, c in self.product_basis(m, k).items():
                s = out.get(t, Fraction(0)) + a * c
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return out

    def _product_sparse_right(self, i: int, v: Coordvec) -> Coordvec:
        out: Coordvec = {}
        for m, a in v.items():
            for t, c in self.product_basis(i, m).items():
                s = out.get(t, Fraction(0)) + a * c
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return out

    def __repr__(self):
        return f"AssocSuperalgebra(dim {self._dim})"


def _merge_sign(a: int, b: int) -> int:
    """Koszul sign for merging two sorted generator bitsets; 0 on overlap."""
    if a & b:
        return 0
    # count inversions: pairs (i in a, j in b) with i > j
    inv = 0
    bits_b = b
    while bits_b:
        low = bits_b & -bits_b
        # generators of a strictly above this generator of b
        inv += bin(a & ~(low - 1) & ~low).count("1")
        bits_b ^= low
    return -1 if inv % 2 else 1


def grassmann(s: int) -> AssocSuperalgebra:
    """Grassmann algebra on s odd generators; 2^s subset monomials."""
    if s < 1:
        raise AssocError("grassmann needs at least one generator")
    masks = sorted(range(2**s), key=lambda m: (bin(m).count("1"), m))
    index = {m: i for i, m in enumerate(masks)}
    names = []
    for m in masks:
        if m == 0:
            names.append("1")
        else:
            names.append("^".join(f"e{i + 1}" for i in range(s) if m >> i & 1))
    degrees = [bin(m).count("1") for m in masks]
    parities = [d % 2 for d in degrees]
    table: dict[tuple[int, int], Coordvec] = {}
    for i, mi in enumerate(masks):
        for j, mj in enumerate(masks):
            sign = _merge_sign(mi, mj)
            if sign:
                table[(i, j)] = {index[mi | mj]: Fraction(sign)}
    return AssocSuperalgebra(names, parities, table, unit=0, z_degrees=degrees)


def augmentation(A: AssocSuperalgebra, a: Sequence) -> Fraction:
    """Coefficient of the unit monomial; an algebra homomorphism to R."""
    return a[A.unit]


def graded_part(A: AssocSuperalgebra, selector) -> Subspace:
    """Span of monomials matching a degree selector.

    selector: an integer m (degree m), or one of "plus" (degrees >= 1),
    "odd" (odd degrees), "even_plus" (positive even degrees).
    """
    if A.z_degrees is None:
        raise AssocError("graded_part needs a Z-graded algebra")
    if isinstance(selector, int):
        keep = lambda d: d == selector
    elif selector == "plus":
        keep = lambda d: d >= 1
    elif selector == "odd":
        keep = lambda d: d % 2 == 1
    elif selector == "even_plus":
        keep = lambda d: d >= 2 and d % 2 == 0
    else:
        raise AssocError(f"unknown degree selector {selector!r}")
    vecs = []
    for i, d in enumerate(A.z_degrees):
        if keep(d):
            vecs.append(A._basis_vec(i))
    return Subspace(A.dim, vecs)


def quotient_assoc(A: AssocSuperalgebra, ideal: Subspace) -> tuple[AssocSuperalgebra, list]:
    """Quotient by a graded two-sided ideal; returns (algebra, projection rows).

    The complement is spanned by the standard basis vectors away from the
    ideal's pivot columns, so quotient structure constants are canonical.
    """
    n = A.dim
    if ideal.ambient_dim != n:
        raise AssocError("ideal lives in the wrong ambient space")
    for i in range(n):
        for row in ideal.rows:
            prod = A.product(A._basis_vec(i), row)
            if not ideal.contains_vector(prod):
                raise AssocError(
                    f"not an ideal: product of basis {i} with an ideal element escapes"
                )
    # graded check: each echelon row must split into homogeneous parts inside
    if A.z_degrees is not None:
        for row in ideal.rows:
            degs = {A.z_degrees[k] for k, x in enumerate(row) if x}
            for d in degs:
                part = [x if A.z_degrees[k] == d else Fraction(0) for k, x in enumerate(row)]
                if not ideal.contains_vector(part):
                    raise AssocError("ideal is not graded")
    piv = set(ideal.pivots)
    keep = [i for i in range(n) if i not in piv]
    if A.unit in piv:
        raise AssocError("ideal contains the unit")
    pos = {k: t for t, k in enumerate(keep)}

    def project(vec) -> Coordvec:
        v = ideal.reduce_vector(vec)
        return {pos[k]: v[k] for k in keep if v[k]}

    table: dict[tuple[int, int], Coordvec] = {}
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            img = project(A.product(A._basis_vec(i), A._basis_vec(j)))
            if img:
                table[(a, b)] = img
    names = [A.names[i] for i in keep]
    parities = [A.parities[i] for i in keep]
    degrees = [A.z_degrees[i] for i in keep] if A.z_degrees is not None else None
    quo = AssocSuperalgebra(names, parities, table, unit=pos[A.unit], z_degrees=degrees)
    proj_rows = []
    for i in range(n):
        img = project(A._basis_vec(i))
        proj_rows.append([img.get(t, Fraction(0)) for t in range(len(keep))])
    return quo, proj_rows
