"""Structure-constant Lie algebras and their canonical invariants.

An algebra is a rational structure tensor c[i][j][k] on a chosen basis.
Brackets are stored sparsely for the ordered pairs that were supplied;
missing mirror pairs are completed antisymmetrically, so a tensor given
on pairs i < j is antisymmetric by construction while deliberately
inconsistent tensors remain representable (and detectable).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    Matrix,
    Subspace,
    ZERO,
    columns_inverse,
    is_zero_vec,
    nullspace,
    subspace_complement,
    subspace_intersect,
    subspace_sum,
    vec_dot,
    zero_vec,
)


def _clean_terms(terms) -> dict[int, Fraction]:
    out = {}
    for k, v in terms.items():
        f = Fraction(v)
        if f != 0:
            out[k] = f
    return out


class LieAlgebra:
    """Lie algebra given by dim and sparse bracket table {(i, j): {k: c}}."""

    __slots__ = ("dim", "table", "labels", "_effective")

    def __init__(self, dim: int, table, labels=None):
        self.dim = dim
        self.table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), terms in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i},{j}) out of range for dim {dim}")
            terms = _clean_terms(terms)
            if any(not 0 <= k < dim for k in terms):
                raise ValueError(f"bracket ({i},{j}) has a target index out of range")
            if terms:
                self.table[(i, j)] = terms
        self.labels = list(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != dim:
            raise ValueError("labels length must equal dim")
        self._effective = None

    @classmethod
    def from_brackets(cls, dim: int, brackets, labels=None) -> "LieAlgebra":
        """Build from brackets on pairs i < j; mirrors are implied."""
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), terms in brackets.items():
            if i == j:
                raise ValueError("diagonal bracket in i<j table")
            key, sign = ((i, j), 1) if i < j else ((j, i), -1)
            tgt = table.setdefault(key, {})
            for k, v in terms.items():
                tgt[k] = tgt.get(k, ZERO) + sign * Fraction(v)
        return cls(dim, table, labels)

    def effective_entries(self):
        """Ordered-pair bracket entries with antisymmetric completion."""
        if self._effective is None:
            eff = dict(self.table)
            for (i, j), terms in self.table.items():
                if i != j and (j, i) not in self.table:
                    eff[(j, i)] = {k: -v for k, v in terms.items()}
            self._effective = eff
        return self._effective

    def struct(self, i: int, j: int) -> dict[int, Fraction]:
        return self.effective_entries().get((i, j), {})

    def bracket(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch")
        out = zero_vec(self.dim)
        for (i, j), terms in self.effective_entries().items():
            c = x[i] * y[j]
            if c:
                for k, v in terms.items():
                    out[k] += c * v
        return out

    def ad_matrix(self, i: int) -> Matrix:
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, v in self.struct(i, j).items():
                rows[k][j] = v
        return Matrix(rows)

    def basis_vector(self, i: int):
        v = zero_vec(self.dim)
        v[i] = Fraction(1)
        return v

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, nonzero brackets={len(self.table)})"


@dataclass(frozen=True)
class BilinearForm:
    gram: Matrix

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def apply(self, x, y) -> Fraction:
        return vec_dot(self.gram.mat_vec(y), x)


@dataclass
class SeriesReport:
    kind: str  # "lower-central" | "derived"
    terms: list[Subspace]

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    @property
    def reaches_zero(self) -> bool:
        return self.terms[-1].dim == 0


@dataclass
class LieCheckReport:
    antisymmetry_violations: list[tuple[int, int]]
    jacobi_violations: list[tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return not self.antisymmetry_violations and not self.jacobi_violations


def abelian(dim: int) -> LieAlgebra:
    return LieAlgebra(dim, {})


def bracket(L: LieAlgebra, x, y):
    return L.bracket(x, y)


def adjoint_matrices(L: LieAlgebra) -> list[Matrix]:
    return [L.ad_matrix(i) for i in range(L.dim)]


def verify_lie(L: LieAlgebra) -> LieCheckReport:
    """Check antisymmetry and the Jacobi identity on all basis triples."""
    anti = []
    for i in range(L.dim):
        for j in range(i, L.dim):
            merged: dict[int, Fraction] = {}
            for k, v in L.struct(i, j).items():
                merged[k] = merged.get(k, ZERO) + v
            for k, v in L.struct(j, i).items():
                merged[k] = merged.get(k, ZERO) + v
            if i == j:
                merged = L.struct(i, i)
            if any(v != 0 for v in merged.values()):
                anti.append((i, j))
    jac = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            cij = L.struct(i, j)
            for k in range(j + 1, L.dim):
                total: dict[int, Fraction] = {}
                for inner, outer in ((cij, k), (L.struct(j, k), i), (L.struct(k, i), j)):
                    for l, v in inner.items():
                        for m, w in L.struct(l, outer).items():
                            total[m] = total.get(m, ZERO) + v * w
                if any(v != 0 for v in total.values()):
                    jac.append((i, j, k))
    return LieCheckReport(anti, jac)


def center(L: LieAlgebra) -> Subspace:
    rows = []
    for i in range(L.dim):
        rows.extend(L.ad_matrix(i).rows)
    if not rows:
        return Subspace.full(L.dim)
    return nullspace(Matrix(rows))


def subspace_bracket(L: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """Span of [x, y] over basis vectors x of u and y of v."""
    vecs = []
    for x in u.basis.rows:
        for y in v.basis.rows:
            w = L.bracket(x, y)
            if not is_zero_vec(w):
                vecs.append(w)
    return Subspace.from_vectors(L.dim, vecs)


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    full = Subspace.full(L.dim)
    return subspace_bracket(L, full, full)


def lower_central_series(L: LieAlgebra) -> SeriesReport:
    full = Subspace.full(L.dim)
    terms = [full]
    while True:
        nxt = subspace_bracket(L, terms[-1], full)
        if nxt == terms[-1]:
            break
        terms.append(nxt)
        if nxt.dim == 0:
            break
    return SeriesReport("lower-central", terms)


def derived_series(L: LieAlgebra) -> SeriesReport:
    terms = [Subspace.full(L.dim)]
    while True:
        nxt = subspace_bracket(L, terms[-1], terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
        if nxt.dim == 0:
            break
    return SeriesReport("derived", terms)


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L).reaches_zero


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L).reaches_zero


def type_and_nilindex(L: LieAlgebra) -> tuple[int, int]:
    series = lower_central_series(L)
    if not series.reaches_zero:
        raise ValueError("not nilpotent")
    if L.dim == 0:
        return (0, 0)
    d = L.dim - series.terms[1].dim if len(series.terms) > 1 else L.dim
    t = len([s for s in series.terms if s.dim > 0])
    return (d, t)


def killing_form(L: LieAlgebra) -> BilinearForm:
    """Gram matrix of (x, y) -> trace(ad x ad y)."""
    ads = []
    for i in range(L.dim):
        entries = []
        for j in range(L.dim):
            for k, v in L.struct(i, j).items():
                entries.append((k, j, v))
        ads.append(entries)
    mats = [L.ad_matrix(i) for i in range(L.dim)]
    gram = [[ZERO] * L.dim for _ in range(L.dim)]
    for i in range(L.dim):
        for j in range(i, L.dim):
            mj = mats[j].rows
            t = sum((v * mj[c][r] for (r, c, v) in ads[i]), ZERO)
            gram[i][j] = t
            gram[j][i] = t
    return BilinearForm(Matrix(gram))


def radical(L: LieAlgebra) -> Subspace:
    """Largest solvable ideal, via Killing orthogonality of the derived algebra."""
    der = derived_subalgebra(L)
    if der.dim == 0:
        return Subspace.full(L.dim)
    kappa = killing_form(L).gram
    rows = [kappa.mat_vec(b) for b in der.basis.rows]
    rad = nullspace(Matrix(rows))
    # Sanity check of the characteristic-zero criterion: the result must
    # be a solvable ideal.
    if not is_ideal(L, rad):
        raise ValueError("radical criterion produced a non-ideal")
    term = rad
    while True:
        nxt = subspace_bracket(L, term, term)
        if nxt == term:
            break
        term = nxt
        if term.dim == 0:
            break
    if term.dim != 0:
        raise ValueError("radical criterion produced a non-solvable subspace")
    return rad


def orthogonal_complement(L: LieAlgebra, form: BilinearForm, u: Subspace) -> Subspace:
    if form.dim != L.dim or u.ambient_dim != L.dim:
        raise ValueError("ambient mismatch")
    if not form.gram.is_symmetric():
        raise ValueError("form is not symmetric")
    if u.dim == 0:
        return Subspace.full(L.dim)
    rows = [form.gram.mat_vec(b) for b in u.basis.rows]
    return nullspace(Matrix(rows))


def is_ideal(L: LieAlgebra, u: Subspace) -> bool:
    for x in u.basis.rows:
        for i in range(L.dim):
            if not u.contains_vector(L.bracket(L.basis_vector(i), x)):
                return False
    return True


def quotient(L: LieAlgebra, cb: Subspace, ib: Subspace) -> LieAlgebra:
    """Quotient algebra L/ib on the classes of cb's basis vectors."""
    if cb.ambient_dim != L.dim or ib.ambient_dim != L.dim:
        raise ValueError("ambient mismatch")
    if not is_ideal(L, ib):
        raise ValueError("not an ideal")
    if cb.dim + ib.dim != L.dim or subspace_sum(cb, ib).dim != L.dim:
        raise ValueError("not a direct complement")
    m = cb.dim
    basis_rows = cb.basis.rows + ib.basis.rows
    inv = columns_inverse(basis_rows)
    brackets = {}
    for i in range(m):
        for j in range(i + 1, m):
            w = L.bracket(basis_rows[i], basis_rows[j])
            coords = inv.mat_vec(w)[:m]
            terms = {k: c for k, c in enumerate(coords) if c != 0}
            if terms:
                brackets[(i, j)] = terms
    return LieAlgebra.from_brackets(m, brackets)


def restrict(L: LieAlgebra, u: Subspace) -> LieAlgebra:
    """Structure constants of a bracket-closed subspace in its RREF basis."""
    rows = u.basis.rows
    brackets = {}
    for i in range(u.dim):
        for j in range(i + 1, u.dim):
            w = L.bracket(rows[i], rows[j])
            coords = u.coordinates(w)
            if coords is None:
                raise ValueError("subspace is not closed under the bracket")
            terms = {k: c for k, c in enumerate(coords) if c != 0}
            if terms:
                brackets[(i, j)] = terms
    return LieAlgebra.from_brackets(u.dim, brackets)


def restrict_form(form: BilinearForm, u: Subspace) -> BilinearForm:
    rows = u.basis.rows
    gram = [[form.apply(x, y) for y in rows] for x in rows]
    return BilinearForm(Matrix(gram))


def _require_quadratic(L: LieAlgebra, form: BilinearForm) -> None:
    from . import forms as _forms

    verdict = _forms.is_quadratic(L, form)
    if not verdict.ok:
        raise ValueError(f"form is not quadratic: {verdict.status}")


def socle_and_jacobson(L: LieAlgebra, form: BilinearForm) -> tuple[Subspace, Subspace]:
    """(Jacobson radical, socle) of a quadratic algebra.

    The Jacobson radical is taken as derived algebra intersected with the
    solvable radical; the socle is its orthogonal complement.
    """
    _require_quadratic(L, form)
    jac = subspace_intersect(derived_subalgebra(L), radical(L))
    soc = orthogonal_complement(L, form, jac)
    return jac, soc


def split_abelian(
    L: LieAlgebra, form: BilinearForm
) -> tuple[tuple[LieAlgebra, BilinearForm], int]:
    """Split off the central ideal outside the derived algebra.

    Returns ((reduced algebra, restricted form), abelian dimension); the
    reduced part satisfies Z <= L^2.
    """
    _require_quadratic(L, form)
    z = center(L)
    der = derived_subalgebra(L)
    zd = subspace_intersect(z, der)
    ab = subspace_complement(zd, z)
    if ab.dim == 0:
        return ((L, form), 0)
    ab_form = restrict_form(form, ab)
    if nullspace(ab_form.gram).dim != 0:
        raise ValueError("form degenerates on the abelian central part")
    reduced = orthogonal_complement(L, form, ab)
    return ((restrict(L, reduced), restrict_form(form, reduced)), ab.dim)
