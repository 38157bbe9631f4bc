"""Double extensions of quadratic Lie algebras and their deconstruction.

The extension of (L, phi) by an algebra B acting through skew
derivations lives on B + L + B*: B keeps its bracket, B acts on L
through the chosen derivations, L x L picks up a B*-valued cocycle
w(x, x')(b) = phi(D_b x, x'), and B acts on B* coadjointly.  The form
pairs B with B* hyperbolically and restricts to phi on L.

``reconstruct_via_levi`` inverts the construction for an algebra with
no simple ideals: it rebuilds the extension of R/Rperp by a supplied
Levi complement S and checks that the natural map (identity on S,
projection on S-perp within R, pairing with S on R-perp) is a bracket-
and form-preserving isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    Matrix,
    Subspace,
    ZERO,
    rref,
    subspace_complement,
    subspace_intersect,
    subspace_sum,
    zero_vec,
)
from .liealg import (
    BilinearForm,
    LieAlgebra,
    abelian,
    orthogonal_complement,
    radical,
    restrict,
    restrict_form,
    verify_lie,
)
from .deriv import is_derivation, is_skew_map


@dataclass(frozen=True)
class BlockLayout:
    """Index ranges of the three blocks in a double extension."""

    b: tuple[int, int]
    l: tuple[int, int]
    bdual: tuple[int, int]

    @property
    def extender_dim(self) -> int:
        return self.b[1] - self.b[0]

    @property
    def base_dim(self) -> int:
        return self.l[1] - self.l[0]


@dataclass
class DoubleExtension:
    algebra: LieAlgebra
    form: BilinearForm
    layout: BlockLayout

    def block_subspace(self, which: str) -> Subspace:
        lo, hi = getattr(self.layout, which)
        n = self.algebra.dim
        rows = []
        for i in range(lo, hi):
            v = zero_vec(n)
            v[i] = Fraction(1)
            rows.append(v)
        return Subspace.from_vectors(n, rows)


def _check_quadratic(L: LieAlgebra, form: BilinearForm) -> None:
    from .forms import is_quadratic

    verdict = is_quadratic(L, form)
    if not verdict.ok:
        raise ValueError(f"base form is not quadratic: {verdict.status}")


def double_extend(
    L: LieAlgebra,
    form: BilinearForm,
    B: LieAlgebra,
    action: list[Matrix],
    B_form: BilinearForm | None = None,
) -> DoubleExtension:
    """Double extension of (L, form) by B acting via skew derivations."""
    _check_quadratic(L, form)
    m, n = B.dim, L.dim
    if len(action) != m:
        raise ValueError("need one action matrix per extender basis vector")
    for d in action:
        if d.nrows != n or d.ncols != n:
            raise ValueError("action matrix has wrong shape")
        if not is_derivation(L, d):
            raise ValueError("action matrix is not a derivation")
        if not is_skew_map(form, d):
            raise ValueError("action matrix is not skew for the form")
    for i in range(m):
        for j in range(i + 1, m):
            want = Matrix.zero(n, n)
            for k, c in B.struct(i, j).items():
                want = want.add(action[k].scale(c))
            if action[i].commutator(action[j]) != want:
                raise ValueError("action is not a Lie homomorphism")
    if B_form is not None:
        from .forms import is_quadratic

        vb = is_quadratic(B, B_form)
        if vb.status in ("fails-symmetry", "fails-invariance"):
            raise ValueError("extender form must be symmetric and invariant")

    N = 2 * m + n
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(i, j, terms):
        cleaned = {k: Fraction(v) for k, v in terms.items() if v != 0}
        if cleaned:
            brackets[(i, j)] = cleaned

    g = form.gram
    # B x B: extender bracket.
    for i in range(m):
        for j in range(i + 1, m):
            put(i, j, B.struct(i, j))
    # B x L: the action, and B x B*: the coadjoint action.
    for i in range(m):
        d = action[i]
        for a in range(n):
            put(i, m + a, {m + k: d.rows[k][a] for k in range(n) if d.rows[k][a] != 0})
        for j in range(m):
            coad = {}
            for k in range(m):
                v = B.struct(i, k).get(j, ZERO)
                if v:
                    coad[m + n + k] = -v
            put(i, m + n + j, coad)
    # L x L: base bracket plus the B*-valued cocycle.
    gd = [d.transpose().mul(g) for d in action]  # (D^t G)_{ab} = form(D ea, eb)
    for a in range(n):
        for b in range(a + 1, n):
            terms: dict[int, Fraction] = {}
            for k, v in L.struct(a, b).items():
                terms[m + k] = v
            for i in range(m):
                w = gd[i].rows[a][b]
                if w:
                    terms[m + n + i] = terms.get(m + n + i, ZERO) + w
            put(m + a, m + b, terms)

    out = LieAlgebra.from_brackets(N, brackets)

    gram = [[ZERO] * N for _ in range(N)]
    for a in range(n):
        for b in range(n):
            gram[m + a][m + b] = g.rows[a][b]
    for i in range(m):
        gram[i][m + n + i] = Fraction(1)
        gram[m + n + i][i] = Fraction(1)
    if B_form is not None:
        for i in range(m):
            for j in range(m):
                gram[i][j] = B_form.gram.rows[i][j]
    out_form = BilinearForm(Matrix(gram))

    report = verify_lie(out)
    if not report.ok:
        raise ValueError("double extension failed the Lie checks")
    from .forms import is_quadratic

    verdict = is_quadratic(out, out_form)
    if not verdict.ok:
        raise ValueError(f"double extension form failed verification: {verdict.status}")
    layout = BlockLayout((0, m), (m, m + n), (m + n, N))
    return DoubleExtension(out, out_form, layout)


def double_extend_1d(L: LieAlgebra, form: BilinearForm, d: Matrix) -> DoubleExtension:
    """One-dimensional double extension by a single skew derivation."""
    return double_extend(L, form, abelian(1), [d])


@dataclass
class LeviReconstruction:
    extension: DoubleExtension
    iso: Matrix
    isometry_ok: bool


def _coords_in(rows: list, v) -> list:
    mat = Matrix(rows).transpose()
    from .exactlin import solve

    sol = solve(mat, list(v))
    if sol is None:
        raise ValueError("vector outside the expected span")
    return sol


def reconstruct_via_levi(
    L: LieAlgebra, form: BilinearForm, S: Subspace
) -> LeviReconstruction:
    """Rebuild L as the double extension of R/Rperp by the Levi factor S."""
    _check_quadratic(L, form)
    if S.dim == 0:
        raise ValueError("Levi factor must be nonzero")
    try:
        B_alg = restrict(L, S)
    except ValueError as exc:
        raise ValueError("Levi factor is not a subalgebra") from exc
    R = radical(L)
    if S.dim + R.dim != L.dim or subspace_sum(S, R).dim != L.dim:
        raise ValueError("Levi factor is not a complement of the radical")
    Rperp = orthogonal_complement(L, form, R)
    if not R.contains_subspace(Rperp):
        raise ValueError("radical orthogonal escapes the radical (simple ideal present)")

    # Quotient R / Rperp on the deterministic complement inside R.
    C = subspace_complement(Rperp, R)
    quot_rows = C.basis.rows + Rperp.basis.rows

    def project_to_classes(v):
        return _coords_in(quot_rows, v)[: C.dim]

    nbar = C.dim
    qbrackets = {}
    for i in range(nbar):
        for j in range(i + 1, nbar):
            w = L.bracket(quot_rows[i], quot_rows[j])
            terms = {k: c for k, c in enumerate(project_to_classes(w)) if c != 0}
            if terms:
                qbrackets[(i, j)] = terms
    Rbar = LieAlgebra.from_brackets(nbar, qbrackets)
    ghat = Matrix([[form.apply(x, y) for y in C.basis.rows] for x in C.basis.rows])

    s_rows = S.basis.rows
    action = []
    for s in s_rows:
        cols = [project_to_classes(L.bracket(s, c)) for c in C.basis.rows]
        action.append(Matrix(cols).transpose())

    ext = double_extend(Rbar, BilinearForm(ghat), B_alg, action, B_form=restrict_form(form, S))

    # Psi: identity on S, class projection on S-perp within R, pairing on Rperp.
    Sperp = orthogonal_complement(L, form, S)
    K = subspace_intersect(Sperp, R)
    m = S.dim
    deco_rows = s_rows + K.basis.rows + Rperp.basis.rows
    if len(deco_rows) != L.dim or Subspace.from_vectors(L.dim, deco_rows).dim != L.dim:
        raise ValueError("S + (S-perp within R) + R-perp fails to decompose the algebra")
    N = ext.algebra.dim
    psi_cols = []
    for i in range(L.dim):
        coords = _coords_in(deco_rows, L.basis_vector(i))
        a, b, c = coords[:m], coords[m : m + K.dim], coords[m + K.dim :]
        img = zero_vec(N)
        for t, v in enumerate(a):
            img[t] += v
        if K.dim:
            y = [
                sum((bv * K.basis.rows[r][col] for r, bv in enumerate(b)), ZERO)
                for col in range(L.dim)
            ]
            for t, v in enumerate(project_to_classes(y)):
                img[m + t] += v
        for r, cv in enumerate(c):
            if cv:
                x = Rperp.basis.rows[r]
                for t, s in enumerate(s_rows):
                    img[m + nbar + t] += cv * form.apply(x, s)
        psi_cols.append(img)
    psi = Matrix(psi_cols).transpose()

    _, pivots = rref(psi)
    ok = len(pivots) == L.dim
    if ok:
        for i in range(L.dim):
            xi = psi_cols[i]
            for j in range(i + 1, L.dim):
                lhs = psi.mat_vec(L.bracket(L.basis_vector(i), L.basis_vector(j)))
                if lhs != ext.algebra.bracket(xi, psi_cols[j]):
                    ok = False
                    break
            if not ok:
                break
    if ok:
        for i in range(L.dim):
            for j in range(i, L.dim):
                want = form.gram.rows[i][j]
                if ext.form.apply(psi_cols[i], psi_cols[j]) != want:
                    ok = False
                    break
            if not ok:
                break
    return LeviReconstruction(ext, psi, ok)
