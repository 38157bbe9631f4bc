"""Invariant symmetric bilinear forms and free-nilpotent presentations."""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (
    Matrix,
    Subspace,
    ZERO,
    kernel_of_constraints,
    nullspace,
    subspace_complement,
)
from .liealg import (
    BilinearForm,
    LieAlgebra,
    is_ideal,
    lower_central_series,
    quotient,
    type_and_nilindex,
)
from .freenilp import free_nilpotent
from .deriv import MatrixSubspace


@dataclass(frozen=True)
class FormSpace:
    """Space of invariant symmetric bilinear forms of an algebra."""

    algebra_dim: int
    space: MatrixSubspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_forms(self) -> list[BilinearForm]:
        return [BilinearForm(m) for m in self.space.basis_matrices()]


@dataclass(frozen=True)
class QuadraticVerdict:
    status: str  # "ok" | "fails-symmetry" | "fails-invariance" | "degenerate"
    triple: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def invariant_forms(L: LieAlgebra) -> FormSpace:
    """Solve A = A^t together with B^t A + A B = 0 for every adjoint B."""
    n = L.dim

    def rows():
        for r in range(n):
            for c in range(r + 1, n):
                yield {r * n + c: 1, c * n + r: -1}
        # (B^t A + A B)_{rc} = sum_l c_{ir}^l A_{lc} + sum_l A_{rl} c_{ic}^l
        for i in range(n):
            for r in range(n):
                for c in range(n):
                    row: dict[int, object] = {}
                    for l, v in _adjoint_column(L, i, r):
                        col = l * n + c
                        row[col] = row.get(col, 0) + v
                    for l, v in _adjoint_column(L, i, c):
                        col = r * n + l
                        row[col] = row.get(col, 0) + v
                    if row:
                        yield row

    space = kernel_of_constraints(rows(), n * n)
    return FormSpace(n, MatrixSubspace(n, space))


def _adjoint_column(L: LieAlgebra, i: int, j: int):
    """(l, c_{ij}^l) pairs: the nonzero entries of column j of ad e_i."""
    return tuple(L.struct(i, j).items())


def is_quadratic(L: LieAlgebra, form: BilinearForm) -> QuadraticVerdict:
    """ok iff symmetric, invariant on all basis triples, and nondegenerate."""
    g = form.gram
    if g.nrows != L.dim or g.ncols != L.dim:
        raise ValueError("dimension mismatch")
    if not g.is_symmetric():
        return QuadraticVerdict("fails-symmetry")
    n = L.dim
    # t[i][j] = G c(ei,ej); invariance reads t[i][j][k] + t[i][k][j] = 0.
    weights: dict[tuple[int, int], list] = {}
    for (i, j), terms in L.effective_entries().items():
        v = [ZERO] * n
        for k, c in terms.items():
            for r in range(n):
                gr = g.rows[r][k]
                if gr:
                    v[r] += gr * c
        weights[(i, j)] = v
    zero = [ZERO] * n

    def t(i, j):
        return weights.get((i, j), zero)

    for i in range(n):
        for j in range(n):
            tij = t(i, j)
            for k in range(j, n):
                if tij[k] + t(i, k)[j] != 0:
                    return QuadraticVerdict("fails-invariance", (i, j, k))
    if nullspace(g).dim != 0:
        return QuadraticVerdict("degenerate")
    return QuadraticVerdict("ok")


def _check_symmetric_invariant(L: LieAlgebra, form: BilinearForm) -> None:
    verdict = is_quadratic(L, form)
    if verdict.status in ("fails-symmetry", "fails-invariance"):
        raise ValueError(f"form is not invariant: {verdict.status}")


def quotient_by_form_radical(
    L: LieAlgebra, form: BilinearForm
) -> tuple[LieAlgebra, BilinearForm]:
    """Quotient by the radical of an invariant form; the result is quadratic."""
    _check_symmetric_invariant(L, form)
    rad = nullspace(form.gram)
    if rad.dim == 0:
        return (L, form)
    if not is_ideal(L, rad):
        raise ValueError("form radical is not an ideal")
    complement = subspace_complement(rad, Subspace.full(L.dim))
    q = quotient(L, complement, rad)
    rows = complement.basis.rows
    gram = Matrix([[form.apply(x, y) for y in rows] for x in rows])
    reduced = BilinearForm(gram)
    verdict = is_quadratic(q, reduced)
    if not verdict.ok:
        raise ValueError(f"quotient form failed verification: {verdict.status}")
    return (q, reduced)


@dataclass
class FreePresentation:
    """L realized as a quotient of the free nilpotent algebra on (d, t)."""

    d: int
    t: int
    generator_vectors: list
    ideal: Subspace


def recover_free_presentation(L: LieAlgebra) -> FreePresentation:
    """Present a nilpotent algebra as free-nilpotent modulo an ideal.

    Generators are the deterministic complement of the derived algebra;
    the ideal is the kernel of the evaluation that sends each Hall
    monomial to the corresponding nested bracket of generator images.
    """
    series = lower_central_series(L)
    if not series.reaches_zero:
        raise ValueError("not nilpotent")
    d, t = type_and_nilindex(L)
    derived = series.terms[1] if len(series.terms) > 1 else Subspace.zero(L.dim)
    gens = subspace_complement(derived, Subspace.full(L.dim)).basis.rows
    free, basis = free_nilpotent(d, t)

    images: dict = {}

    def ev(m):
        got = images.get(m)
        if got is None:
            if isinstance(m, int):
                got = gens[m - 1]
            else:
                got = L.bracket(ev(m[0]), ev(m[1]))
            images[m] = got
        return got

    eval_rows = [ev(m) for m in basis]
    eval_map = Matrix(eval_rows).transpose()  # columns: images of Hall basis
    ideal = nullspace(eval_map)
    if free.dim - ideal.dim != L.dim:
        raise ValueError("generator images do not span the algebra")
    free_series = lower_central_series(free)
    if ideal.dim and not free_series.terms[1].contains_subspace(ideal):
        raise ValueError("presentation ideal escapes the derived algebra")
    if ideal.contains_subspace(free_series.terms[t - 1]):
        raise ValueError("presentation ideal contains the top graded component")
    if not is_ideal(free, ideal):
        raise ValueError("presentation kernel is not an ideal")
    # The induced quotient must reproduce L's tensor on the image basis.
    complement = subspace_complement(ideal, Subspace.full(free.dim))
    q = quotient(free, complement, ideal)
    image_basis = [eval_map.mat_vec(row) for row in complement.basis.rows]
    for i in range(q.dim):
        for j in range(i + 1, q.dim):
            got = L.bracket(image_basis[i], image_basis[j])
            want = [ZERO] * L.dim
            for k, c in q.struct(i, j).items():
                for r in range(L.dim):
                    want[r] += c * image_basis[k][r]
            if got != want:
                raise ValueError("quotient tensor mismatch in free presentation")
    return FreePresentation(d, t, gens, ideal)
