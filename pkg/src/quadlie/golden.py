"""The reproduction suite: every shipped claim checked against golden data.

Each check returns a CheckResult; ``run_suite`` runs them all.  The
expected values are embedded here so the suite needs no fixture files:
transcribed Hall basis listings, the classification dimensions, the
derivation dimension table, and the structure of the named extensions.
All comparisons are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    Subspace,
    nullspace,
    subspace_intersect,
    subspace_sum,
)
from .liealg import (
    center,
    derived_series,
    derived_subalgebra,
    killing_form,
    lower_central_series,
    orthogonal_complement,
    radical,
    socle_and_jacobson,
    subspace_bracket,
    type_and_nilindex,
    verify_lie,
)
from .freenilp import (
    format_monomial,
    free_nilpotent,
    hall_basis,
    hall_dimension,
    normalize,
)
from . import catalog
from .forms import is_quadratic, recover_free_presentation
from .deriv import (
    MatrixSubspace,
    derivation_space,
    inner_derivation_space,
    is_derivation,
    is_skew_map,
    quotient_algebra,
    quotient_derivation_space,
    skew_derivation_space,
)
from .dblext import reconstruct_via_levi


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str = ""


# Transcribed Hall basis listings (bracket notation, compared as sets).
HALL_LISTING_2_6 = (
    "x2", "x1", "[x1,x2]",
    "[[x1,x2],x2]", "[[x1,x2],x1]",
    "[[[x1,x2],x2],x2]", "[[[x1,x2],x2],x1]", "[[[x1,x2],x1],x1]",
    "[[[[x1,x2],x2],x2],x2]", "[[[[x1,x2],x2],x2],x1]",
    "[[[x1,x2],x2],[x1,x2]]", "[[[[x1,x2],x2],x1],x1]",
    "[[[x1,x2],x1],[x1,x2]]", "[[[[x1,x2],x1],x1],x1]",
    "[[[[[x1,x2],x2],x2],x2],x2]", "[[[[[x1,x2],x2],x2],x2],x1]",
    "[[[[x1,x2],x2],x2],[x1,x2]]", "[[[[[x1,x2],x2],x2],x1],x1]",
    "[[[[x1,x2],x2],x1],[x1,x2]]", "[[[[[x1,x2],x2],x1],x1],x1]",
    "[[[x1,x2],x1],[[x1,x2],x2]]", "[[[[x1,x2],x1],x1],[x1,x2]]",
    "[[[[[x1,x2],x1],x1],x1],x1]",
)

HALL_LISTING_4_3 = (
    "x4", "x3", "x2", "x1",
    "[x3,x4]", "[x2,x4]", "[x2,x3]", "[x1,x4]", "[x1,x3]", "[x1,x2]",
    "[[x3,x4],x4]", "[[x3,x4],x3]", "[[x3,x4],x2]", "[[x3,x4],x1]",
    "[[x2,x4],x4]", "[[x2,x4],x3]", "[[x2,x4],x2]", "[[x2,x4],x1]",
    "[[x2,x3],x3]", "[[x2,x3],x2]", "[[x2,x3],x1]",
    "[[x1,x4],x4]", "[[x1,x4],x3]", "[[x1,x4],x2]", "[[x1,x4],x1]",
    "[[x1,x3],x3]", "[[x1,x3],x2]", "[[x1,x3],x1]",
    "[[x1,x2],x2]", "[[x1,x2],x1]",
)

HALL_LISTING_6_2 = (
    "x6", "x5", "x4", "x3", "x2", "x1",
    "[x5,x6]", "[x4,x6]", "[x4,x5]", "[x3,x6]", "[x3,x5]", "[x3,x4]",
    "[x2,x6]", "[x2,x5]", "[x2,x4]", "[x2,x3]",
    "[x1,x6]", "[x1,x5]", "[x1,x4]", "[x1,x3]", "[x1,x2]",
)

CATALOG_DIMS = {"n1": 1, "n2": 5, "n3": 7, "n4": 8, "n5": 6, "n6": 8, "n7": 9}
SKEW_DIMS = {"n1": 0, "n2": 6, "n3": 8, "n4": 9, "n5": 11, "n6": 12, "n7": 14}
INNER_DIMS = {"n1": 0, "n2": 3, "n3": 5, "n4": 6, "n5": 3, "n6": 5, "n7": 6}
PRESENTATIONS = {
    "n2": ((2, 3), 0),
    "n3": ((2, 5), 7),
    "n4": ((2, 5), 6),
    "n5": ((3, 2), 0),
    "n6": ((3, 3), 6),
    "n7": ((3, 3), 5),
}
IDEAL_DIMS = {"I1": 7, "I2": 6, "I3": 6, "I4": 5}
IDEAL_QUOTIENT_DIMS = {"I1": 7, "I2": 8, "I3": 8, "I4": 9}
LEVI_DIMS = {"n2_sl2": 3, "n5_sl3": 8, "n5_sl2": 3, "n7_sl2": 3}
LEVI_BASE = {"n2_sl2": "n2", "n5_sl3": "n5", "n5_sl2": "n5", "n7_sl2": "n7"}
EXTENSION_DIMS = {"sl2_n23": 11, "sl3_n32": 22, "sl2_n32": 12, "sl2_n7": 15}
EXTENSION_RADICAL_DIMS = {"sl2_n23": 8, "sl3_n32": 14, "sl2_n32": 9, "sl2_n7": 12}
FREE_PAIRS = ((2, 3), (2, 5), (2, 6), (3, 2), (3, 3), (4, 3), (6, 2))


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        else:
            p += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(d: int, s: int) -> int:
    """Independent oracle: (1/s) sum over k | s of mobius(k) d^(s/k)."""
    total = sum(_mobius(k) * d ** (s // k) for k in range(1, s + 1) if s % k == 0)
    assert total % s == 0
    return total // s


class _Context:
    """Caches the expensive shared objects across checks."""

    def __init__(self):
        self._nilpotent = {}
        self._ideals = {}
        self._extensions = {}

    def nilpotent(self, name):
        if name not in self._nilpotent:
            self._nilpotent[name] = catalog.nilpotent(name)
        return self._nilpotent[name]

    def ideal(self, name):
        if name not in self._ideals:
            self._ideals[name] = catalog.classification_ideal(name)
        return self._ideals[name]

    def extension(self, name):
        if name not in self._extensions:
            self._extensions[name] = catalog.extended(name)
        return self._extensions[name]


def _check_1(ctx: _Context) -> CheckResult:
    listings = {
        (2, 6): HALL_LISTING_2_6,
        (4, 3): HALL_LISTING_4_3,
        (6, 2): HALL_LISTING_6_2,
    }
    problems = []
    for (d, t), expected in listings.items():
        got = {format_monomial(m) for m in hall_basis(d, t)}
        if len(got) != len(expected):
            problems.append(f"({d},{t}) size {len(got)} != {len(expected)}")
        if got != set(expected):
            problems.append(f"({d},{t}) listing mismatch")
    return CheckResult(1, "hall basis counts and listings (2,6)/(4,3)/(6,2)",
                       not problems, "; ".join(problems))


def _check_2(ctx: _Context) -> CheckResult:
    bad = [
        (d, s)
        for d in range(1, 5)
        for s in range(1, 7)
        if hall_dimension(d, s) != witt_dimension(d, s)
    ]
    return CheckResult(2, "hall dimensions match the Witt-formula oracle (d<=4, s<=6)",
                       not bad, f"mismatches: {bad}" if bad else "")


def _check_3(ctx: _Context) -> CheckResult:
    problems = []
    for d, t in FREE_PAIRS:
        algebra, _ = free_nilpotent(d, t)
        if not verify_lie(algebra).ok:
            problems.append(f"({d},{t}) fails the Lie checks")
        if type_and_nilindex(algebra) != (d, t):
            problems.append(f"({d},{t}) wrong type/nilindex")
    return CheckResult(3, "free nilpotent algebras satisfy Jacobi with type/nilindex (d,t)",
                       not problems, "; ".join(problems))


def _check_4(ctx: _Context) -> CheckResult:
    problems = []
    for name, dim in CATALOG_DIMS.items():
        entry = ctx.nilpotent(name)
        if entry.algebra.dim != dim:
            problems.append(f"{name} dim {entry.algebra.dim} != {dim}")
        if not is_quadratic(entry.algebra, entry.form).ok:
            problems.append(f"{name} not quadratic")
        if name != "n1":
            # Z <= L^2; the 1-dim abelian entry is the one non-reduced item.
            if not derived_subalgebra(entry.algebra).contains_subspace(center(entry.algebra)):
                problems.append(f"{name} not reduced")
    return CheckResult(4, "catalog algebras are quadratic and reduced with the right dims",
                       not problems, "; ".join(problems))


def _check_5(ctx: _Context) -> CheckResult:
    problems = []
    for name, ((d, t), ideal_dim) in PRESENTATIONS.items():
        fp = recover_free_presentation(ctx.nilpotent(name).algebra)
        if (fp.d, fp.t) != (d, t) or fp.ideal.dim != ideal_dim:
            problems.append(
                f"{name}: got ({fp.d},{fp.t}) ideal dim {fp.ideal.dim}, want ({d},{t}) dim {ideal_dim}"
            )
    return CheckResult(5, "free presentations recover the expected (d,t) and ideal dims",
                       not problems, "; ".join(problems))


def _check_6(ctx: _Context) -> CheckResult:
    from .liealg import is_ideal

    problems = []
    for name, dim in IDEAL_DIMS.items():
        entry = ctx.ideal(name)
        free, _ = free_nilpotent(entry.d, entry.t)
        if entry.subspace.dim != dim:
            problems.append(f"{name} dim {entry.subspace.dim} != {dim}")
        if not is_ideal(free, entry.subspace):
            problems.append(f"{name} is not an ideal")
        series = lower_central_series(free)
        if entry.subspace.contains_subspace(series.terms[entry.t - 1]):
            problems.append(f"{name} contains the top graded component")
        if not series.terms[1].contains_subspace(entry.subspace):
            problems.append(f"{name} escapes the derived algebra")
        q = quotient_algebra(entry.d, entry.t, entry.subspace)
        if q.dim != IDEAL_QUOTIENT_DIMS[name]:
            problems.append(f"{name} quotient dim {q.dim} != {IDEAL_QUOTIENT_DIMS[name]}")
    return CheckResult(6, "classification ideals: dims, ideal property, quotient dims",
                       not problems, "; ".join(problems))


def _check_7(ctx: _Context) -> CheckResult:
    problems = []
    for name in sorted(CATALOG_DIMS):
        entry = ctx.nilpotent(name)
        skew = skew_derivation_space(entry.algebra, entry.form)
        inner = inner_derivation_space(entry.algebra)
        if skew.dim != SKEW_DIMS[name]:
            problems.append(f"{name} skew dim {skew.dim} != {SKEW_DIMS[name]}")
        if inner.dim != INNER_DIMS[name]:
            problems.append(f"{name} inner dim {inner.dim} != {INNER_DIMS[name]}")
        if not skew.contains_space(inner):
            problems.append(f"{name} inner space escapes the skew space")
    return CheckResult(7, "skew/inner derivation dimension table for n1..n7",
                       not problems, "; ".join(problems))


def _check_8(ctx: _Context) -> CheckResult:
    problems = []
    for name in sorted(IDEAL_DIMS):
        entry = ctx.ideal(name)
        via_quotient = quotient_derivation_space(entry.d, entry.t, entry.subspace)
        direct = derivation_space(quotient_algebra(entry.d, entry.t, entry.subspace))
        if via_quotient != direct:
            problems.append(f"{name}: methods disagree")
    return CheckResult(8, "quotient-derivation method equals direct computation for I1..I4",
                       not problems, "; ".join(problems))


def _check_9(ctx: _Context) -> CheckResult:
    problems = []
    for name, dim in LEVI_DIMS.items():
        B, action = catalog.levi_action(name)
        base = ctx.nilpotent(LEVI_BASE[name])
        if B.dim != dim or len(action) != dim:
            problems.append(f"{name} dim {B.dim} != {dim}")
        span = MatrixSubspace.from_matrices(base.algebra.dim, action)
        if span.dim != dim:
            problems.append(f"{name} action matrices are dependent")
        for i in range(len(action)):
            for j in range(i + 1, len(action)):
                if not span.contains(action[i].commutator(action[j])):
                    problems.append(f"{name} span not closed at ({i},{j})")
        if derived_subalgebra(B).dim != B.dim:
            problems.append(f"{name} extender is not perfect")
        if nullspace(killing_form(B).gram).dim != 0:
            problems.append(f"{name} Killing form degenerates")
        for k, mat in enumerate(action):
            if not is_derivation(base.algebra, mat):
                problems.append(f"{name} matrix {k} is not a derivation")
            if not is_skew_map(base.form, mat):
                problems.append(f"{name} matrix {k} is not skew")
    return CheckResult(9, "Levi actions: closed, perfect, nondegenerate Killing, skew",
                       not problems, "; ".join(problems))


def _check_10(ctx: _Context) -> CheckResult:
    problems = []
    for name, dim in EXTENSION_DIMS.items():
        ext = ctx.extension(name)
        if ext.algebra.dim != dim:
            problems.append(f"{name} dim {ext.algebra.dim} != {dim}")
        if not is_quadratic(ext.algebra, ext.form).ok:
            problems.append(f"{name} not quadratic")
        if derived_series(ext.algebra).reaches_zero:
            problems.append(f"{name} is solvable")
        rad = radical(ext.algebra)
        want = subspace_sum(ext.block_subspace("l"), ext.block_subspace("bdual"))
        if rad != want or rad.dim != EXTENSION_RADICAL_DIMS[name]:
            problems.append(f"{name} radical is not the base+dual block")
    return CheckResult(10, "extensions: dims 11/22/12/15, quadratic, non-solvable, radical",
                       not problems, "; ".join(problems))


def _extension_names_with_series(ctx):
    for name in sorted(EXTENSION_DIMS):
        yield name, ctx.extension(name)
    yield "L1(2)", ctx.extension("L1(2)")


def _check_11(ctx: _Context) -> CheckResult:
    problems = []
    for name, ext in _extension_names_with_series(ctx):
        rad = radical(ext.algebra)
        radperp = orthogonal_complement(ext.algebra, ext.form, rad)
        lhs = subspace_sum(radperp, center(ext.algebra))
        _, socle = socle_and_jacobson(ext.algebra, ext.form)
        if subspace_intersect(radperp, center(ext.algebra)).dim != 0:
            problems.append(f"{name}: sum is not direct")
        if lhs != socle:
            problems.append(f"{name}: radical-perp + center != socle")
    return CheckResult(11, "radical-perp (+) center equals the socle on all extensions",
                       not problems, "; ".join(problems))


def _check_12(ctx: _Context) -> CheckResult:
    problems = []
    for name, ext in _extension_names_with_series(ctx):
        rec = reconstruct_via_levi(ext.algebra, ext.form, ext.block_subspace("b"))
        if not rec.isometry_ok:
            problems.append(f"{name}: round trip failed")
    return CheckResult(12, "Levi round trip rebuilds each extension isometrically",
                       not problems, "; ".join(problems))


def _check_13(ctx: _Context) -> CheckResult:
    ext = ctx.extension("L1(2)")
    problems = []
    if ext.algebra.dim != 12:
        problems.append(f"dim {ext.algebra.dim} != 12")
    rad = radical(ext.algebra)
    if rad.dim != 9:
        problems.append(f"radical dim {rad.dim} != 9")
    radperp = orthogonal_complement(ext.algebra, ext.form, rad)
    if radperp.dim != 3:
        problems.append(f"radical-perp dim {radperp.dim} != 3")
    if radperp != ext.block_subspace("bdual"):
        problems.append("radical-perp is not the dual block")
    return CheckResult(13, "series extension L1(2): dim 12, radical 9, radical-perp 3",
                       not problems, "; ".join(problems))


def _random_subspace(rng, ambient):
    k = rng.randrange(0, ambient + 1)
    vectors = [
        [Fraction(rng.randrange(-3, 4)) for _ in range(ambient)] for _ in range(k)
    ]
    return Subspace.from_vectors(ambient, vectors)


def _ideal_closure(L, seed_vec):
    u = Subspace.from_vectors(L.dim, [seed_vec])
    while True:
        nxt = subspace_sum(u, subspace_bracket(L, Subspace.full(L.dim), u))
        if nxt == u:
            return u
        u = nxt


def _check_14(ctx: _Context) -> CheckResult:
    problems = []
    rng = random.Random(96721)
    # Grassmann identity on random subspaces.
    for _ in range(40):
        ambient = rng.randrange(2, 7)
        u = _random_subspace(rng, ambient)
        v = _random_subspace(rng, ambient)
        if u.dim + v.dim != subspace_sum(u, v).dim + subspace_intersect(u, v).dim:
            problems.append("Grassmann identity failed")
            break
    # Double orthogonal complement under quadratic forms.
    for name in ("n2", "n5", "n7"):
        entry = ctx.nilpotent(name)
        for _ in range(10):
            u = _random_subspace(rng, entry.algebra.dim)
            perp = orthogonal_complement(entry.algebra, entry.form, u)
            if orthogonal_complement(entry.algebra, entry.form, perp) != u:
                problems.append(f"double complement failed on {name}")
                break
            if u.dim + perp.dim != entry.algebra.dim:
                problems.append(f"complement dims failed on {name}")
                break
    # [I, I-perp] = 0 for random ideals.
    for name in ("n3", "n6", "n7"):
        entry = ctx.nilpotent(name)
        for _ in range(5):
            seed_vec = [Fraction(rng.randrange(-2, 3)) for _ in range(entry.algebra.dim)]
            if all(x == 0 for x in seed_vec):
                continue
            ideal = _ideal_closure(entry.algebra, seed_vec)
            perp = orthogonal_complement(entry.algebra, entry.form, ideal)
            if subspace_bracket(entry.algebra, ideal, perp).dim != 0:
                problems.append(f"[I, I-perp] != 0 on {name}")
                break
    # Derivation spaces close under commutators.
    for name in ("n2", "n3", "n5"):
        entry = ctx.nilpotent(name)
        space = derivation_space(entry.algebra)
        mats = space.basis_matrices()
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                if not space.contains(mats[i].commutator(mats[j])):
                    problems.append(f"derivation space of {name} not closed")
                    break
    # Rewriting is idempotent, and its confluence shows in exact Jacobi.
    for d, t in ((2, 4), (3, 3)):
        for _ in range(15):
            tree = _random_tree(rng, d, rng.randrange(1, t + 2))
            once = normalize(tree, d, t)
            if normalize(once.as_dict(), d, t) != once:
                problems.append("normalize is not idempotent")
                break
    for d, t in ((2, 5), (3, 3)):
        algebra, _ = free_nilpotent(d, t)
        if not verify_lie(algebra).ok:
            problems.append(f"free ({d},{t}) fails Jacobi")
    # CLI byte determinism.
    import io

    from . import cli

    for argv in (["catalog", "n3"], ["hall-basis", "2", "6", "--format", "text"]):
        outputs = set()
        for _ in range(2):
            buf = io.StringIO()
            code = cli.run(argv, stdout=buf)
            outputs.add((code, buf.getvalue()))
        if len(outputs) != 1:
            problems.append(f"CLI output not deterministic for {argv}")
    return CheckResult(14, "property suites: subspaces, orthogonality, closure, rewriting, CLI",
                       not problems, "; ".join(problems))


def _random_tree(rng, d, depth):
    if depth <= 1:
        return rng.randrange(1, d + 1)
    left = _random_tree(rng, d, rng.randrange(1, depth))
    right = _random_tree(rng, d, rng.randrange(1, depth))
    return (left, right)


_CHECKS = [
    _check_1,
    _check_2,
    _check_3,
    _check_4,
    _check_5,
    _check_6,
    _check_7,
    _check_8,
    _check_9,
    _check_10,
    _check_11,
    _check_12,
    _check_13,
    _check_14,
]


def run_suite() -> list[CheckResult]:
    ctx = _Context()
    return [check(ctx) for check in _CHECKS]
