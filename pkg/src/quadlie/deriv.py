"""Derivation spaces: full, inner, skew, and via quotients of a free algebra.

All spaces are returned as canonical ``MatrixSubspace`` values (RREF of
the row-major flattened matrices), so results computed along different
routes can be compared by plain equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (
    Matrix,
    Subspace,
    ZERO,
    columns_inverse,
    kernel_of_constraints,
    subspace_complement,
    vec_dot,
)
from .liealg import LieAlgebra, BilinearForm, is_ideal, lower_central_series, quotient
from .freenilp import free_nilpotent


@dataclass(frozen=True)
class MatrixSubspace:
    """Linear space of n x n matrices, canonical over flattened coordinates."""

    n: int
    space: Subspace

    @classmethod
    def from_matrices(cls, n: int, mats) -> "MatrixSubspace":
        vectors = [m.flatten() for m in mats]
        return cls(n, Subspace.from_vectors(n * n, vectors))

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_matrices(self) -> list[Matrix]:
        n = self.n
        out = []
        for row in self.space.basis.rows:
            out.append(Matrix([row[i * n : (i + 1) * n] for i in range(n)]))
        return out

    def contains(self, mat: Matrix) -> bool:
        return self.space.contains_vector(mat.flatten())

    def contains_space(self, other: "MatrixSubspace") -> bool:
        return self.space.contains_subspace(other.space)


def _derivation_rows(L: LieAlgebra):
    """Sparse constraint rows for D c(ei,ej) = c(D ei, ej) + c(ei, D ej)."""
    n = L.dim
    eff = L.effective_entries()
    # by_right[(j, k)] = [(l, c_{lj}^k)]; speeds up the adjoint-side terms.
    by_right: dict[tuple[int, int], list] = {}
    for (l, j), terms in eff.items():
        for k, v in terms.items():
            by_right.setdefault((j, k), []).append((l, v))
    for i in range(n):
        for j in range(i + 1, n):
            cij = L.struct(i, j)
            for k in range(n):
                row: dict[int, object] = {}
                for l, v in cij.items():
                    col = k * n + l
                    row[col] = row.get(col, 0) + v
                for l, v in by_right.get((j, k), ()):
                    col = l * n + i
                    row[col] = row.get(col, 0) - v
                for l, v in by_right.get((i, k), ()):
                    col = l * n + j
                    row[col] = row.get(col, 0) + v
                if row:
                    yield row


def derivation_space(L: LieAlgebra) -> MatrixSubspace:
    """All derivations of L as a canonical matrix subspace."""
    n = L.dim
    space = kernel_of_constraints(_derivation_rows(L), n * n)
    return MatrixSubspace(n, space)


def inner_derivation_space(L: LieAlgebra) -> MatrixSubspace:
    return MatrixSubspace.from_matrices(L.dim, [L.ad_matrix(i) for i in range(L.dim)])


def _skew_rows(gram: Matrix):
    """Constraint rows for D^t G + G D = 0 (symmetric, so r <= c suffices)."""
    n = gram.nrows
    for r in range(n):
        for c in range(r, n):
            row: dict[int, object] = {}
            for l in range(n):
                v = gram.rows[r][l]
                if v:
                    col = l * n + c
                    row[col] = row.get(col, 0) + v
                w = gram.rows[l][c]
                if w:
                    col = l * n + r
                    row[col] = row.get(col, 0) + w
            if row:
                yield row


def skew_derivation_space(L: LieAlgebra, form: BilinearForm) -> MatrixSubspace:
    """Derivations that are skew-adjoint for a quadratic form on L."""
    from .forms import is_quadratic

    verdict = is_quadratic(L, form)
    if not verdict.ok:
        raise ValueError(f"form is not quadratic: {verdict.status}")
    n = L.dim

    def rows():
        yield from _derivation_rows(L)
        yield from _skew_rows(form.gram)

    return MatrixSubspace(n, kernel_of_constraints(rows(), n * n))


def is_derivation(L: LieAlgebra, mat: Matrix) -> bool:
    """Direct check of the derivation rule on all basis pairs."""
    if mat.nrows != L.dim or mat.ncols != L.dim:
        return False
    cols = [[mat.rows[r][c] for r in range(L.dim)] for c in range(L.dim)]
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            cij = [ZERO] * L.dim
            for k, v in L.struct(i, j).items():
                cij[k] = v
            lhs = mat.mat_vec(cij)
            rhs = L.bracket(cols[i], L.basis_vector(j))
            rhs2 = L.bracket(L.basis_vector(i), cols[j])
            if any(a != b + c for a, b, c in zip(lhs, rhs, rhs2)):
                return False
    return True


def is_skew_map(form: BilinearForm, mat: Matrix) -> bool:
    g = form.gram
    return mat.transpose().mul(g).add(g.mul(mat)).is_zero()


def quotient_derivation_space(d: int, t: int, ideal: Subspace) -> MatrixSubspace:
    """Derivations of the quotient of a free nilpotent algebra by an ideal.

    Splits the derivations of the free algebra into the ones preserving
    the ideal and the ones mapping everything into it, then reads the
    quotient classes off the complement block of the basis change.
    """
    free, _ = free_nilpotent(d, t)
    n = free.dim
    if ideal.ambient_dim != n:
        raise ValueError("ambient mismatch")
    if not is_ideal(free, ideal):
        raise ValueError("not an ideal")
    series = lower_central_series(free)
    top = series.terms[t - 1]
    if ideal.contains_subspace(top):
        raise ValueError("ideal contains the top graded component")
    if len(series.terms) > 1 and not series.terms[1].contains_subspace(ideal):
        raise ValueError("ideal is not inside the derived algebra")

    der = derivation_space(free)
    params = der.space.basis.rows  # each row: a flattened derivation
    p = len(params)
    der_mats = der.basis_matrices()
    ann = ideal.annihilator().basis.rows

    def preserving_rows(targets):
        # constraints sum_r a_r <w, Delta_r v> = 0 over parameters a.
        for v in targets:
            images = [m.mat_vec(v) for m in der_mats]
            for w in ann:
                yield {
                    r: c
                    for r, c in enumerate(vec_dot(w, img) for img in images)
                    if c != 0
                }

    der_i_coeffs = kernel_of_constraints(preserving_rows(ideal.basis.rows), p)

    complement = subspace_complement(ideal, Subspace.full(n))
    m = complement.dim
    basis_rows = complement.basis.rows + ideal.basis.rows
    cols = Matrix(basis_rows).transpose()
    inv = columns_inverse(basis_rows)

    blocks = []
    for coeff in der_i_coeffs.basis.rows:
        flat = [sum((c * row[idx] for c, row in zip(coeff, params)), ZERO) for idx in range(n * n)]
        delta = Matrix([flat[i * n : (i + 1) * n] for i in range(n)])
        conj = inv.mul(delta).mul(cols)
        blocks.append(Matrix([conj.rows[i][:m] for i in range(m)]))
    return MatrixSubspace.from_matrices(m, blocks)


def quotient_algebra(d: int, t: int, ideal: Subspace) -> LieAlgebra:
    """The quotient algebra itself, on the deterministic complement basis."""
    free, _ = free_nilpotent(d, t)
    complement = subspace_complement(ideal, Subspace.full(free.dim))
    return quotient(free, complement, ideal)
