"""Named algebras, ideals, actions and extensions used across the library.

Contents: the seven indecomposable quadratic nilpotent algebras of the
classification in low type and nilindex, the four ideals presenting the
non-free ones as quotients of free nilpotent algebras, split simple
algebras sl_n, the semisimple families of skew derivations used to
extend, and the named non-solvable double extensions built from them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    Matrix,
    Subspace,
    ZERO,
    kernel_of_constraints,
    solve,
)
from .liealg import BilinearForm, LieAlgebra, abelian
from .freenilp import LieExpr, expr_to_vector, hall_basis, normalize
from .dblext import DoubleExtension, double_extend, double_extend_1d


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    form: BilinearForm
    provenance: str


@dataclass(frozen=True)
class IdealEntry:
    name: str
    d: int
    t: int
    generators: list[LieExpr]
    subspace: Subspace
    provenance: str


# Products [a_i, a_j] = a_k given 1-based as (i, j, k); forms as 1-based
# (i, j, value) entries of the upper triangle.
_NILPOTENT_DATA = {
    "n1": (
        1,
        [],
        [(1, 1, 1)],
        "classification theorem, item (a): 1-dimensional abelian algebra",
    ),
    "n2": (
        5,
        [(2, 1, 3), (3, 1, 4), (3, 2, 5)],
        [(1, 5, 1), (2, 4, -1), (3, 3, 1)],
        "classification theorem, item (b): the free algebra on 2 generators, 3-step",
    ),
    "n3": (
        7,
        [(2, 1, 3), (3, 1, 4), (4, 1, 5), (5, 1, 6), (5, 2, 7), (3, 4, 7)],
        [(1, 7, -1), (2, 6, 1), (3, 5, -1), (4, 4, 1)],
        "classification theorem, item (c): type 2, nilindex 5, dimension 7",
    ),
    "n4": (
        8,
        [
            (2, 1, 3),
            (3, 1, 4),
            (3, 2, 5),
            (4, 1, 6),
            (6, 1, 7),
            (6, 2, 8),
            (5, 2, 6),
            (3, 4, 8),
            (5, 3, 7),
        ],
        [(1, 8, -1), (2, 7, 1), (3, 6, -1), (4, 4, 1), (5, 5, 1)],
        "classification theorem, item (d): type 2, nilindex 5, dimension 8",
    ),
    "n5": (
        6,
        [(2, 1, 4), (3, 1, 5), (3, 2, 6)],
        [(1, 6, 1), (2, 5, -1), (3, 4, 1)],
        "classification theorem, item (e): the free algebra on 3 generators, 2-step",
    ),
    "n6": (
        8,
        [(2, 1, 4), (3, 1, 5), (4, 1, 6), (4, 2, 7), (5, 1, 8), (5, 3, 7)],
        [(4, 4, 1), (5, 5, 1), (1, 7, 1), (2, 6, -1), (3, 8, -1)],
        "classification theorem, item (f): type 3, nilindex 3, dimension 8",
    ),
    "n7": (
        9,
        [
            (2, 1, 4),
            (3, 1, 5),
            (3, 2, 6),
            (4, 1, 7),
            (4, 2, 8),
            (5, 1, 9),
            (5, 3, 8),
            (3, 6, 7),
            (6, 2, 9),
        ],
        [(4, 4, 1), (5, 5, 1), (6, 6, 1), (1, 8, 1), (2, 7, -1), (3, 9, -1)],
        "classification theorem, item (g): type 3, nilindex 3, dimension 9",
    ),
}

NILPOTENT_NAMES = tuple(sorted(_NILPOTENT_DATA))


def nilpotent(name: str) -> CatalogEntry:
    """One of the seven classified quadratic nilpotent algebras n1..n7."""
    if name not in _NILPOTENT_DATA:
        raise ValueError(f"unknown catalog algebra {name!r}")
    dim, products, gram_entries, provenance = _NILPOTENT_DATA[name]
    brackets = {}
    for i, j, k in products:
        brackets[(i - 1, j - 1)] = {k - 1: Fraction(1)}
    labels = [f"a{i}" for i in range(1, dim + 1)]
    algebra = LieAlgebra.from_brackets(dim, brackets, labels=labels)
    gram = [[ZERO] * dim for _ in range(dim)]
    for i, j, v in gram_entries:
        gram[i - 1][j - 1] = Fraction(v)
        gram[j - 1][i - 1] = Fraction(v)
    return CatalogEntry(name, algebra, BilinearForm(Matrix(gram)), provenance)


# Hall monomial shorthands for the ideal generators.
_B12 = (1, 2)
_B12_2 = (_B12, 2)
_B12_1 = (_B12, 1)
_IDEAL_DATA = {
    "I1": (
        2,
        5,
        [
            {_B12_1: 1},
            {(_B12_2, 1): 1},
            {(_B12_1, 1): 1},
            {((_B12_2, 2), 1): 1, (_B12_2, _B12): 1},
            {((_B12_2, 1), 1): 1},
            {(_B12_1, _B12): 1},
            {((_B12_1, 1), 1): 1},
        ],
        "quotient presentation of n3 inside the free (2,5) algebra",
    ),
    "I2": (
        2,
        5,
        [
            {(_B12_2, 1): 1},
            {((_B12_2, 1), 1): 1},
            {(_B12_1, 1): 1, (_B12_2, 2): -1},
            {((_B12_2, 2), 1): 1, (_B12_2, _B12): 1},
            {(_B12_1, _B12): 1, ((_B12_2, 2), 2): -1},
            {((_B12_1, 1), 1): 1, ((_B12_2, 2), 1): -1},
        ],
        "quotient presentation of n4 inside the free (2,5) algebra",
    ),
    "I3": (
        3,
        3,
        [
            {(1, 2): 1},
            {((2, 3), 1): 1},
            {((1, 3), 2): 1},
            {((1, 2), 2): 1},
            {((1, 2), 1): 1},
            {((2, 3), 2): 1, ((1, 3), 1): -1},
        ],
        "quotient presentation of n6 inside the free (3,3) algebra",
    ),
    "I4": (
        3,
        3,
        [
            {((2, 3), 1): 1},
            {((1, 3), 2): 1},
            {((2, 3), 2): 1, ((1, 3), 1): -1},
            {((1, 3), 3): 1, ((1, 2), 2): -1},
            {((2, 3), 3): 1, ((1, 2), 1): 1},
        ],
        "quotient presentation of n7 inside the free (3,3) algebra",
    ),
}

IDEAL_NAMES = tuple(sorted(_IDEAL_DATA))


def classification_ideal(name: str) -> IdealEntry:
    """One of the four ideals I1..I4 presenting n3, n4, n6, n7 as quotients."""
    if name not in _IDEAL_DATA:
        raise ValueError(f"unknown classification ideal {name!r}")
    d, t, gens, provenance = _IDEAL_DATA[name]
    basis = hall_basis(d, t)
    exprs = [normalize(g, d, t) for g in gens]
    vectors = [expr_to_vector(e, basis) for e in exprs]
    subspace = Subspace.from_vectors(len(basis), vectors)
    return IdealEntry(name, d, t, exprs, subspace, provenance)


def _tensor_from_matrix_span(mats: list[Matrix]) -> LieAlgebra:
    """Structure constants of a bracket-closed span of matrices."""
    flat = Matrix([m.flatten() for m in mats]).transpose()
    brackets = {}
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            comm = mats[i].commutator(mats[j])
            coords = solve(flat, comm.flatten())
            if coords is None:
                raise ValueError("matrix span is not closed under commutators")
            terms = {k: c for k, c in enumerate(coords) if c != 0}
            if terms:
                brackets[(i, j)] = terms
    return LieAlgebra.from_brackets(len(mats), brackets)


def _sl_basis_matrices(n: int) -> list[Matrix]:
    mats = []
    for i in range(n):
        for j in range(n):
            if i != j:
                rows = [[ZERO] * n for _ in range(n)]
                rows[i][j] = Fraction(1)
                mats.append(Matrix(rows))
    for k in range(n - 1):
        rows = [[ZERO] * n for _ in range(n)]
        rows[k][k] = Fraction(1)
        rows[k + 1][k + 1] = Fraction(-1)
        mats.append(Matrix(rows))
    return mats


def simple_sl(n: int) -> LieAlgebra:
    """sl_n with its elementary-matrix basis: E_ij (i != j), then H_k."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return _tensor_from_matrix_span(_sl_basis_matrices(n))


def _block_diag(blocks: list[Matrix]) -> Matrix:
    total = sum(b.nrows for b in blocks)
    rows = [[ZERO] * total for _ in range(total)]
    off = 0
    for b in blocks:
        for r in range(b.nrows):
            for c in range(b.ncols):
                rows[off + r][off + c] = b.rows[r][c]
        off += b.nrows
    return Matrix(rows)


def _n2_action(m2: Matrix) -> Matrix:
    """Skew derivation of n2 with the traceless 2x2 block m2 on the generators."""
    return _block_diag([m2, Matrix([[ZERO]]), m2])


def _n5_action(m3: Matrix) -> Matrix:
    """Skew derivation of n5 determined by the traceless 3x3 block m3."""
    lower = [[ZERO] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sign = -1 if (i + j) % 2 == 0 else 1
            lower[i][j] = sign * m3.rows[2 - j][2 - i]
    return _block_diag([m3, Matrix(lower)])


def _n7_action(m1, m2, m3) -> Matrix:
    m1, m2, m3 = Fraction(m1), Fraction(m2), Fraction(m3)
    k1 = Matrix([[0, m1, m2], [-m1, 0, m3], [-m2, -m3, 0]])
    k2 = Matrix([[0, m3, -m2], [-m3, 0, m1], [m2, -m1, 0]])
    k3 = Matrix([[0, m1, m3], [-m1, 0, -m2], [-m3, m2, 0]])
    return _block_diag([k1, k2, k3])


LEVI_ACTION_NAMES = ("n2_sl2", "n5_sl3", "n5_sl2", "n7_sl2")


def levi_action(name: str) -> tuple[LieAlgebra, list[Matrix]]:
    """A semisimple algebra of skew derivations of a catalog algebra."""
    if name == "n2_sl2":
        mats = [_n2_action(m) for m in _sl_basis_matrices(2)]
        return simple_sl(2), mats
    if name == "n5_sl3":
        mats = [_n5_action(m) for m in _sl_basis_matrices(3)]
        return simple_sl(3), mats
    if name == "n5_sl2":
        embedded = []
        for m in _sl_basis_matrices(2):
            rows = [[ZERO] * 3 for _ in range(3)]
            for r in range(2):
                for c in range(2):
                    rows[r][c] = m.rows[r][c]
            embedded.append(Matrix(rows))
        mats = [_n5_action(m) for m in embedded]
        return _tensor_from_matrix_span(mats), mats
    if name == "n7_sl2":
        mats = [_n7_action(1, 0, 0), _n7_action(0, 1, 0), _n7_action(0, 0, 1)]
        return _tensor_from_matrix_span(mats), mats
    raise ValueError(f"unknown Levi action {name!r}")


def rotation_pairs_map(n: int) -> Matrix:
    """The block rotation e(2i-1) -> -e(2i), e(2i) -> e(2i-1) on Q^(2n)."""
    rows = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for b in range(n):
        rows[2 * b][2 * b + 1] = Fraction(1)
        rows[2 * b + 1][2 * b] = Fraction(-1)
    return Matrix(rows)


def hyperbolic_oscillator(n: int) -> DoubleExtension:
    """The (2n+2)-dimensional solvable quadratic algebra A_{2n+2}.

    One-dimensional double extension of the abelian algebra Q^(2n) with
    the standard form by the block rotation map.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    base = abelian(2 * n)
    form = BilinearForm(Matrix.identity(2 * n))
    return double_extend_1d(base, form, rotation_pairs_map(n))


def _unitary_type_span(n: int) -> list[Matrix]:
    """Derived span of the skew matrices on Q^(2n) commuting with the rotation."""
    j = rotation_pairs_map(n)
    dim = 2 * n

    def rows():
        # M J = J M and M^t = -M, unknowns M (row-major).
        for r in range(dim):
            for c in range(dim):
                row: dict[int, object] = {}
                for l in range(dim):
                    v = j.rows[l][c]
                    if v:
                        row[r * dim + l] = row.get(r * dim + l, 0) + v
                    w = j.rows[r][l]
                    if w:
                        row[l * dim + c] = row.get(l * dim + c, 0) - w
                if row:
                    yield row
        for r in range(dim):
            yield {r * dim + r: 1}
            for c in range(r + 1, dim):
                yield {r * dim + c: 1, c * dim + r: 1}

    space = kernel_of_constraints(rows(), dim * dim)
    mats = [
        Matrix([row[i * dim : (i + 1) * dim] for i in range(dim)])
        for row in space.basis.rows
    ]
    commutators = [
        mats[i].commutator(mats[j2]).flatten()
        for i in range(len(mats))
        for j2 in range(i + 1, len(mats))
    ]
    derived = Subspace.from_vectors(dim * dim, commutators)
    return [
        Matrix([row[i * dim : (i + 1) * dim] for i in range(dim)])
        for row in derived.basis.rows
    ]


def series_extension(n: int) -> DoubleExtension:
    """Non-solvable quadratic family: extend A_{2n+2} by its unitary-type Levi span."""
    if n < 2:
        raise ValueError("n must be >= 2")
    osc = hyperbolic_oscillator(n)
    su_mats = _unitary_type_span(n)
    big = osc.algebra.dim
    action = []
    for m in su_mats:
        rows = [[ZERO] * big for _ in range(big)]
        for r in range(2 * n):
            for c in range(2 * n):
                rows[1 + r][1 + c] = m.rows[r][c]
        action.append(Matrix(rows))
    B = _tensor_from_matrix_span(su_mats)
    return double_extend(osc.algebra, osc.form, B, action)


EXTENSION_NAMES = ("sl2_n23", "sl3_n32", "sl2_n32", "sl2_n7")

_EXTENSION_RECIPES = {
    "sl2_n23": ("n2", "n2_sl2"),
    "sl3_n32": ("n5", "n5_sl3"),
    "sl2_n32": ("n5", "n5_sl2"),
    "sl2_n7": ("n7", "n7_sl2"),
}


def extended(name: str) -> DoubleExtension:
    """A named non-solvable quadratic double extension."""
    match = re.fullmatch(r"L1\((\d+)\)", name)
    if match:
        return series_extension(int(match.group(1)))
    recipe = _EXTENSION_RECIPES.get(name)
    if recipe is None:
        raise ValueError(f"unknown extension {name!r}")
    base_name, action_name = recipe
    entry = nilpotent(base_name)
    B, action = levi_action(action_name)
    return double_extend(entry.algebra, entry.form, B, action)
