"""Exact linear algebra over the rationals.

Everything here is dense, deterministic and tolerance-free: Gaussian
elimination pivots on the first nonzero entry, subspaces are kept in
reduced row-echelon form so that equal spaces compare equal, and
``solve`` zeroes free variables.  A sparse integer kernel solver is
provided for the large homogeneous systems produced by the derivation
and invariant-form solvers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction."""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render a Fraction as "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vec(values) -> list[Fraction]:
    return [Fraction(v) for v in values]


def zero_vec(n: int) -> list[Fraction]:
    return [ZERO] * n


def vec_add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    return [x + y for x, y in zip(a, b)]

def vec_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    return [x - y for x, y in zip(a, b)]


def vec_scale(c: Fraction, a: list[Fraction]) -> list[Fraction]:
    return [c * x for x in a]


def vec_dot(a: list[Fraction], b: list[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), ZERO)


def is_zero_vec(a) -> bool:
    return all(x == 0 for x in a)


class Matrix:
    """Dense rational matrix, row-major.  Treated as immutable."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        if self.rows:
            ncols = len(self.rows[0])
            if any(len(r) != ncols for r in self.rows):
                raise ValueError("ragged rows")

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self.rows)
        return f"Matrix[{body}]"

    def copy_rows(self) -> list[list[Fraction]]:
        return [row[:] for row in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def mat_vec(self, v: list[Fraction]) -> list[Fraction]:
        if len(v) != self.ncols:
            raise ValueError(f"dimension mismatch: {self.ncols} columns vs vector of length {len(v)}")
        return [vec_dot(row, v) for row in self.rows]

    def mul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        bt = other.transpose().rows
        return Matrix([[vec_dot(row, col) for col in bt] for row in self.rows])

    def add(self, other: "Matrix") -> "Matrix":
        return Matrix([vec_add(r, s) for r, s in zip(self.rows, other.rows)])

    def sub(self, other: "Matrix") -> "Matrix":
        return Matrix([vec_sub(r, s) for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix([vec_scale(c, r) for r in self.rows])

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.nrows, self.ncols))), ZERO)

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def is_zero(self) -> bool:
        return all(is_zero_vec(r) for r in self.rows)

    def flatten(self) -> list[Fraction]:
        out: list[Fraction] = []
        for row in self.rows:
            out.extend(row)
        return out

    def commutator(self, other: "Matrix") -> "Matrix":
        return self.mul(other).sub(other.mul(self))


def _rref_rows(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            inv = ONE / pv
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Unique reduced row-echelon form of m with its pivot columns."""
    rows, pivots = _rref_rows(m.copy_rows())
    return Matrix(rows), pivots


def nullspace(m: Matrix) -> "Subspace":
    """Canonical basis of {v : m v = 0}."""
    if m.nrows == 0:
        return Subspace.full(m.ncols)
    rows, pivots = _rref_rows(m.copy_rows())
    return _nullspace_from_rref(rows, pivots, m.ncols)


def _nullspace_from_rref(rows, pivots, ncols) -> "Subspace":
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        v = zero_vec(ncols)
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return Subspace.from_vectors(ncols, basis)


def solve(a: Matrix, b: list[Fraction]):
    """One particular solution of a x = b (free variables zero), or None."""
    if len(b) != a.nrows:
        raise ValueError(f"dimension mismatch: {a.nrows} rows vs rhs of length {len(b)}")
    aug = [row + [bi] for row, bi in zip(a.copy_rows(), b)]
    if not aug:
        return zero_vec(a.ncols)
    rows, pivots = _rref_rows(aug)
    if a.ncols in pivots:
        return None
    x = zero_vec(a.ncols)
    for r, p in enumerate(pivots):
        x[p] = rows[r][a.ncols]
    return x


def columns_inverse(rows) -> Matrix:
    """Inverse of the square matrix whose columns are the given vectors."""
    n = len(rows)
    cols = Matrix(rows).transpose()
    ident = Matrix.identity(n)
    aug = [cols.rows[i] + ident.rows[i] for i in range(n)]
    red, pivots = _rref_rows(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("vectors do not form a basis")
    return Matrix([red[i][n:] for i in range(n)])


class Subspace:
    """Subspace of Q^n held as an RREF basis; equal spaces compare equal."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: list[int]):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors) -> "Subspace":
        vectors = [list(map(Fraction, v)) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("ambient mismatch")
        if not vectors:
            return cls(ambient_dim, Matrix([]), [])
        rows, pivots = _rref_rows(vectors)
        rows = rows[: len(pivots)]
        return cls(ambient_dim, Matrix(rows), pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix([]), [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim), list(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def basis_vectors(self) -> list[list[Fraction]]:
        return self.basis.copy_rows()

    def reduce(self, v: list[Fraction]) -> list[Fraction]:
        """Remainder of v after elimination against the basis."""
        if len(v) != self.ambient_dim:
            raise ValueError("ambient mismatch")
        v = list(map(Fraction, v))
        for row, p in zip(self.basis.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def coordinates(self, v: list[Fraction]):
        """Coefficients of v in the basis, or None if v is outside."""
        coords = []
        v = list(map(Fraction, v))
        for row, p in zip(self.basis.rows, self.pivots):
            c = v[p]
            coords.append(c)
            if c != 0:
                v = [x - c * y for x, y in zip(v, row)]
        if not is_zero_vec(v):
            return None
        return coords

    def contains_vector(self, v) -> bool:
        return is_zero_vec(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def annihilator(self) -> "Subspace":
        """{w : <w, u> = 0 for all u in the space}."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return nullspace(self.basis)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient mismatch")
    return Subspace.from_vectors(u.ambient_dim, u.basis.rows + v.basis.rows)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient mismatch")
    # x lies in U iff its annihilator pairs to zero; stack both annihilators.
    rows = u.annihilator().basis.rows + v.annihilator().basis.rows
    if not rows:
        return Subspace.full(u.ambient_dim)
    return nullspace(Matrix(rows))


def subspace_complement(u: Subspace, v: Subspace) -> Subspace:
    """Deterministic W with u + W = v (direct): scan v's RREF basis greedily."""
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient mismatch")
    if not v.contains_subspace(u):
        raise ValueError("first subspace is not contained in the second")
    staged = [row[:] for row in u.basis.rows]
    picked = []
    for row in v.basis.rows:
        trial = staged + [row[:]]
        reduced, pivots = _rref_rows([r[:] for r in trial])
        if len(pivots) == len(trial):
            staged = trial
            picked.append(row)
    return Subspace.from_vectors(u.ambient_dim, picked)


# ---------------------------------------------------------------------------
# Sparse integer kernel solver for big homogeneous systems
# ---------------------------------------------------------------------------

def _int_normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for x in row.values():
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return {c: x // g for c, x in row.items()}
    return row


def kernel_of_constraints(rows, ncols: int) -> Subspace:
    """Solution space of a sparse homogeneous system.

    ``rows`` is an iterable of {column: coefficient} dicts with int or
    Fraction coefficients.  Elimination is fraction-free over the
    integers with gcd reduction, which keeps the large derivation and
    invariant-form systems fast without ever leaving exact arithmetic.
    """
    pivot_rows: dict[int, dict[int, int]] = {}
    for raw in rows:
        row: dict[int, int] = {}
        denoms = 1
        for c, x in raw.items():
            f = Fraction(x)
            if f != 0:
                denoms = denoms * f.denominator // gcd(denoms, f.denominator)
        for c, x in raw.items():
            f = Fraction(x)
            if f != 0:
                row[c] = int(f * denoms)
        row = _int_normalize(row)
        while row:
            c = min(row)
            piv = pivot_rows.get(c)
            if piv is None:
                pivot_rows[c] = row
                break
            a, b = piv[c], row[c]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new: dict[int, int] = {}
            for k, x in row.items():
                new[k] = fa * x
            for k, y in piv.items():
                z = new.get(k, 0) - fb * y
                if z:
                    new[k] = z
                elif k in new:
                    del new[k]
            row = _int_normalize(new)
    # Back-substitute so each pivot column is zero in every other row.
    pivot_cols = sorted(pivot_rows)
    for c in reversed(pivot_cols):
        piv = pivot_rows[c]
        for c2 in pivot_cols:
            if c2 >= c:
                break
            target = pivot_rows[c2]
            if c in target:
                a, b = piv[c], target[c]
                g = gcd(a, b)
                fa, fb = a // g, b // g
                new = {k: fa * x for k, x in target.items()}
                for k, y in piv.items():
                    z = new.get(k, 0) - fb * y
                    if z:
                        new[k] = z
                    elif k in new:
                        del new[k]
                pivot_rows[c2] = _int_normalize(new)
    free_cols = [c for c in range(ncols) if c not in pivot_rows]
    basis = []
    for f in free_cols:
        v = zero_vec(ncols)
        v[f] = ONE
        for p in pivot_cols:
            row = pivot_rows[p]
            if f in row:
                v[p] = Fraction(-row[f], row[p])
        basis.append(v)
    return Subspace.from_vectors(ncols, basis)
