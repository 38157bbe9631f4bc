from fractions import Fraction

import pytest

from quadlie import catalog
from quadlie.exactlin import Matrix, Subspace, subspace_sum
from quadlie.freenilp import free_nilpotent
from quadlie.liealg import (
    BilinearForm,
    LieAlgebra,
    abelian,
    adjoint_matrices,
    center,
    derived_series,
    derived_subalgebra,
    is_ideal,
    killing_form,
    lower_central_series,
    orthogonal_complement,
    quotient,
    radical,
    restrict,
    socle_and_jacobson,
    split_abelian,
    subspace_bracket,
    type_and_nilindex,
    verify_lie,
)


def two_by_two_commutator_oracle():
    """sl2 structure computed from explicit 2x2 matrices."""
    e = [[0, 1], [0, 0]]
    f = [[0, 0], [1, 0]]
    h = [[1, 0], [0, -1]]

    def mul(a, b):
        return [
            [sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)]
            for i in range(2)
        ]

    def comm(a, b):
        ab, ba = mul(a, b), mul(b, a)
        return [[ab[i][j] - ba[i][j] for j in range(2)] for i in range(2)]

    return e, f, h, comm


def test_bracket_catalog_n2(nilpotent_entries):
    n2 = nilpotent_entries["n2"].algebra
    a = n2.basis_vector
    assert n2.bracket(a(1), a(0)) == a(2)  # [a2, a1] = a3
    assert n2.bracket(a(2), a(1)) == a(4)  # [a3, a2] = a5


def test_bracket_antisymmetric_and_abelian(nilpotent_entries):
    n2 = nilpotent_entries["n2"].algebra
    x = [Fraction(k + 1) for k in range(5)]
    assert all(v == 0 for v in n2.bracket(x, x))
    ab = abelian(4)
    assert all(v == 0 for v in ab.bracket(ab.basis_vector(0), ab.basis_vector(2)))


def test_bracket_dimension_mismatch(nilpotent_entries):
    n2 = nilpotent_entries["n2"].algebra
    with pytest.raises(ValueError):
        n2.bracket([Fraction(1)] * 4, [Fraction(0)] * 5)


def test_adjoints_abelian_and_n2(nilpotent_entries):
    assert all(m.is_zero() for m in adjoint_matrices(abelian(3)))
    n2 = nilpotent_entries["n2"].algebra
    ad2 = n2.ad_matrix(1)  # ad a2
    col = [ad2.rows[k][0] for k in range(5)]
    assert col == list(n2.basis_vector(2))  # (ad a2) a1 = a3


def test_adjoint_sl2_against_matrix_oracle():
    e, f, h, comm = two_by_two_commutator_oracle()
    # simple_sl(2) basis order: E12, E21, H.
    sl2 = catalog.simple_sl(2)
    assert comm(h, e) == [[0, 2], [0, 0]]  # [h, e] = 2e
    adh = sl2.ad_matrix(2)
    assert [adh.rows[k][0] for k in range(3)] == [Fraction(2), Fraction(0), Fraction(0)]


def test_verify_lie_catalog(nilpotent_entries):
    assert verify_lie(nilpotent_entries["n5"].algebra).ok


def test_verify_lie_antisymmetry_violation():
    bad = LieAlgebra(2, {(0, 1): {0: Fraction(1)}, (1, 0): {0: Fraction(1)}})
    report = verify_lie(bad)
    assert report.antisymmetry_violations == [(0, 1)]


def test_verify_lie_jacobi_violation():
    # [e0,e1] = e2 and [e0,e2] = e0: the cyclic sum over (0,1,2) leaves -e2.
    bad = LieAlgebra.from_brackets(4, {(0, 1): {2: 1}, (0, 2): {0: 1}})
    report = verify_lie(bad)
    assert not report.antisymmetry_violations
    assert (0, 1, 2) in report.jacobi_violations


def test_center():
    assert center(abelian(4)) == Subspace.full(4)
    assert center(catalog.simple_sl(2)).dim == 0
    algebra, _ = free_nilpotent(2, 3)
    z = center(algebra)
    assert z.dim == 2


def test_center_matches_orthogonal_of_derived(nilpotent_entries):
    n2 = nilpotent_entries["n2"]
    z = center(n2.algebra)
    assert orthogonal_complement(n2.algebra, n2.form, derived_subalgebra(n2.algebra)) == z


def test_series():
    algebra, _ = free_nilpotent(2, 3)
    assert lower_central_series(algebra).dims == [5, 3, 2, 0]
    sl2 = catalog.simple_sl(2)
    assert lower_central_series(sl2).dims == [3]
    assert derived_series(sl2).dims == [3]
    assert lower_central_series(abelian(3)).dims == [3, 0]


def test_type_and_nilindex(nilpotent_entries):
    algebra, _ = free_nilpotent(2, 3)
    assert type_and_nilindex(algebra) == (2, 3)
    assert type_and_nilindex(nilpotent_entries["n7"].algebra) == (3, 3)
    assert type_and_nilindex(abelian(4)) == (4, 1)
    with pytest.raises(ValueError):
        type_and_nilindex(catalog.simple_sl(2))


def test_killing_form_values():
    sl2 = catalog.simple_sl(2)  # basis E12, E21, H
    kappa = killing_form(sl2).gram
    assert kappa.rows[2][2] == 8
    assert kappa.rows[0][1] == 4
    assert kappa.rows[0][0] == 0
    assert killing_form(abelian(3)).gram.is_zero()


def test_killing_vanishes_on_derived_of_nilpotent(nilpotent_entries):
    n3 = nilpotent_entries["n3"].algebra
    kappa = killing_form(n3).gram
    for row in derived_subalgebra(n3).basis.rows:
        assert all(x == 0 for x in kappa.mat_vec(row))


def test_radical():
    assert radical(catalog.simple_sl(2)).dim == 0
    assert radical(catalog.simple_sl(3)).dim == 0
    algebra, _ = free_nilpotent(2, 3)
    assert radical(algebra) == Subspace.full(5)


def test_radical_of_extension(extensions):
    ext = extensions["sl2_n23"]
    rad = radical(ext.algebra)
    assert rad.dim == 8
    assert rad == subspace_sum(ext.block_subspace("l"), ext.block_subspace("bdual"))


def test_orthogonal_complement_basics(nilpotent_entries):
    n2 = nilpotent_entries["n2"]
    assert orthogonal_complement(n2.algebra, n2.form, Subspace.zero(5)) == Subspace.full(5)
    assert orthogonal_complement(n2.algebra, n2.form, Subspace.full(5)).dim == 0
    asym = BilinearForm(Matrix([[0, 1, 0, 0, 0]] + [[0] * 5] * 4))
    with pytest.raises(ValueError):
        orthogonal_complement(n2.algebra, asym, Subspace.full(5))


def test_quotient_trivial_cases(nilpotent_entries):
    n5 = nilpotent_entries["n5"].algebra
    same = quotient(n5, Subspace.full(6), Subspace.zero(6))
    assert same.table == n5.table
    nothing = quotient(n5, Subspace.zero(6), Subspace.full(6))
    assert nothing.dim == 0


def test_quotient_rejects_bad_input(nilpotent_entries):
    n5 = nilpotent_entries["n5"].algebra
    not_ideal = Subspace.from_vectors(6, [[1, 0, 0, 0, 0, 0]])
    with pytest.raises(ValueError):
        quotient(n5, Subspace.from_vectors(6, [[0, 1, 0, 0, 0, 0]]), not_ideal)
    ideal = Subspace.from_vectors(6, [[0, 0, 0, 1, 0, 0]])
    with pytest.raises(ValueError):
        quotient(n5, Subspace.full(6), ideal)


def test_quotient_by_classification_ideal(ideal_entries):
    entry = ideal_entries["I1"]
    free, _ = free_nilpotent(2, 5)
    from quadlie.exactlin import subspace_complement

    comp = subspace_complement(entry.subspace, Subspace.full(14))
    q = quotient(free, comp, entry.subspace)
    assert q.dim == 7
    assert verify_lie(q).ok
    assert type_and_nilindex(q) == (2, 5)


def test_socle_and_jacobson_solvable(nilpotent_entries):
    n2 = nilpotent_entries["n2"]
    jac, soc = socle_and_jacobson(n2.algebra, n2.form)
    assert jac == derived_subalgebra(n2.algebra)
    assert soc == center(n2.algebra)


def test_socle_and_jacobson_abelian():
    ab = abelian(3)
    form = BilinearForm(Matrix.identity(3))
    jac, soc = socle_and_jacobson(ab, form)
    assert jac.dim == 0
    assert soc == Subspace.full(3)


def test_socle_identity_on_extension(extensions):
    ext = extensions["sl2_n23"]
    jac, soc = socle_and_jacobson(ext.algebra, ext.form)
    rad = radical(ext.algebra)
    radperp = orthogonal_complement(ext.algebra, ext.form, rad)
    assert soc == subspace_sum(radperp, center(ext.algebra))


def test_socle_requires_quadratic(nilpotent_entries):
    n2 = nilpotent_entries["n2"].algebra
    with pytest.raises(ValueError):
        socle_and_jacobson(n2, BilinearForm(Matrix.identity(5)))


def orthogonal_sum(entry_a, entry_b):
    """Block direct sum of two quadratic pairs."""
    la, lb = entry_a[0], entry_b[0]
    n = la.dim + lb.dim
    brackets = {}
    for (i, j), terms in la.table.items():
        brackets[(i, j)] = dict(terms)
    for (i, j), terms in lb.table.items():
        brackets[(la.dim + i, la.dim + j)] = {la.dim + k: v for k, v in terms.items()}
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(la.dim):
        for j in range(la.dim):
            gram[i][j] = entry_a[1].gram.rows[i][j]
    for i in range(lb.dim):
        for j in range(lb.dim):
            gram[la.dim + i][la.dim + j] = entry_b[1].gram.rows[i][j]
    return LieAlgebra(n, brackets), BilinearForm(Matrix(gram))


def test_split_abelian_reduced(nilpotent_entries):
    for name in ("n2", "n5", "n7"):
        entry = nilpotent_entries[name]
        (reduced, form), ab_dim = split_abelian(entry.algebra, entry.form)
        assert ab_dim == 0
        assert reduced is entry.algebra
        assert form is entry.form


def test_split_abelian_pure_abelian():
    (reduced, _), ab_dim = split_abelian(abelian(3), BilinearForm(Matrix.identity(3)))
    assert ab_dim == 3
    assert reduced.dim == 0


def test_split_abelian_inverse_of_orthogonal_sum(nilpotent_entries):
    n2 = nilpotent_entries["n2"]
    one = (abelian(1), BilinearForm(Matrix.identity(1)))
    big, form = orthogonal_sum((n2.algebra, n2.form), one)
    (reduced, rform), ab_dim = split_abelian(big, form)
    assert ab_dim == 1
    assert reduced.dim == 5
    assert reduced.table == n2.algebra.table
    # reduced part carries Z <= L^2
    assert derived_subalgebra(reduced).contains_subspace(center(reduced))


def test_restrict_requires_closed_subspace(nilpotent_entries):
    n2 = nilpotent_entries["n2"].algebra
    open_space = Subspace.from_vectors(5, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]])
    with pytest.raises(ValueError):
        restrict(n2, open_space)


def test_ideal_bracket_property(nilpotent_entries):
    n3 = nilpotent_entries["n3"]
    der = derived_subalgebra(n3.algebra)
    assert is_ideal(n3.algebra, der)
    perp = orthogonal_complement(n3.algebra, n3.form, der)
    assert subspace_bracket(n3.algebra, der, perp).dim == 0
