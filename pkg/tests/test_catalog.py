import pytest

from quadlie import catalog
from quadlie.exactlin import Matrix, nullspace
from quadlie.freenilp import free_nilpotent
from quadlie.liealg import (
    center,
    derived_subalgebra,
    killing_form,
    radical,
    type_and_nilindex,
    verify_lie,
)
from quadlie.forms import is_quadratic
from quadlie.deriv import (
    MatrixSubspace,
    is_derivation,
    is_skew_map,
    quotient_algebra,
    skew_derivation_space,
)


def test_unknown_names_rejected():
    with pytest.raises(ValueError):
        catalog.nilpotent("n8")
    with pytest.raises(ValueError):
        catalog.classification_ideal("I5")
    with pytest.raises(ValueError):
        catalog.levi_action("nope")
    with pytest.raises(ValueError):
        catalog.extended("nope")
    with pytest.raises(ValueError):
        catalog.simple_sl(1)
    with pytest.raises(ValueError):
        catalog.extended("L1(1)")


def test_n1_entry():
    entry = catalog.nilpotent("n1")
    assert entry.algebra.dim == 1
    assert entry.form.gram == Matrix([[1]])
    assert is_quadratic(entry.algebra, entry.form).ok


def test_n2_products():
    n2 = catalog.nilpotent("n2").algebra
    a = n2.basis_vector
    assert n2.bracket(a(1), a(0)) == a(2)
    assert n2.bracket(a(2), a(0)) == a(3)
    assert n2.bracket(a(2), a(1)) == a(4)
    assert sum(len(v) for v in n2.table.values()) == 3


def test_n6_form_entries():
    entry = catalog.nilpotent("n6")
    g = entry.form.gram
    assert g.rows[3][3] == 1 and g.rows[4][4] == 1 and g.rows[0][6] == 1
    assert g.rows[1][5] == -1 and g.rows[2][7] == -1


def test_catalog_dims_and_integrity(nilpotent_entries):
    dims = {"n1": 1, "n2": 5, "n3": 7, "n4": 8, "n5": 6, "n6": 8, "n7": 9}
    for name, entry in nilpotent_entries.items():
        assert entry.algebra.dim == dims[name]
        assert verify_lie(entry.algebra).ok
        assert is_quadratic(entry.algebra, entry.form).ok
        assert entry.provenance
        if name != "n1":
            assert derived_subalgebra(entry.algebra).contains_subspace(
                center(entry.algebra)
            )


def test_type_signatures(nilpotent_entries):
    expected = {
        "n1": (1, 1),
        "n2": (2, 3),
        "n3": (2, 5),
        "n4": (2, 5),
        "n5": (3, 2),
        "n6": (3, 3),
        "n7": (3, 3),
    }
    for name, want in expected.items():
        assert type_and_nilindex(nilpotent_entries[name].algebra) == want


def test_ideal_entries(ideal_entries):
    from quadlie.liealg import is_ideal, lower_central_series

    expected = {
        "I1": ((2, 5), 7, 7),
        "I2": ((2, 5), 6, 8),
        "I3": ((3, 3), 6, 8),
        "I4": ((3, 3), 5, 9),
    }
    for name, ((d, t), dim, qdim) in expected.items():
        entry = ideal_entries[name]
        assert (entry.d, entry.t) == (d, t)
        assert entry.subspace.dim == dim
        assert len(entry.generators) == dim
        free, _ = free_nilpotent(d, t)
        assert is_ideal(free, entry.subspace)
        series = lower_central_series(free)
        assert series.terms[1].contains_subspace(entry.subspace)
        assert not entry.subspace.contains_subspace(series.terms[t - 1])
        q = quotient_algebra(d, t, entry.subspace)
        assert q.dim == qdim
        assert verify_lie(q).ok


def test_ideal_quotient_signatures(ideal_entries):
    assert type_and_nilindex(quotient_algebra(3, 3, ideal_entries["I3"].subspace)) == (3, 3)
    assert type_and_nilindex(quotient_algebra(2, 5, ideal_entries["I1"].subspace)) == (2, 5)


def test_quotients_match_catalog_skew_dimensions(ideal_entries, nilpotent_entries):
    import sys, os

    sys.path.insert(0, os.path.dirname(__file__))
    from test_forms import find_nondegenerate
    from quadlie.forms import invariant_forms

    matches = {"I1": "n3", "I2": "n4", "I3": "n6", "I4": "n7"}
    for iname, nname in matches.items():
        entry = ideal_entries[iname]
        q = quotient_algebra(entry.d, entry.t, entry.subspace)
        form = find_nondegenerate(invariant_forms(q))
        got = skew_derivation_space(q, form).dim
        want_entry = nilpotent_entries[nname]
        want = skew_derivation_space(want_entry.algebra, want_entry.form).dim
        assert got == want, (iname, nname)


def test_simple_sl():
    for n, dim in ((2, 3), (3, 8)):
        algebra = catalog.simple_sl(n)
        assert algebra.dim == dim
        assert verify_lie(algebra).ok
        assert derived_subalgebra(algebra).dim == dim  # perfect
        assert nullspace(killing_form(algebra).gram).dim == 0
        assert radical(algebra).dim == 0


def test_levi_actions(nilpotent_entries):
    bases = {"n2_sl2": "n2", "n5_sl3": "n5", "n5_sl2": "n5", "n7_sl2": "n7"}
    dims = {"n2_sl2": 3, "n5_sl3": 8, "n5_sl2": 3, "n7_sl2": 3}
    for name, base_name in bases.items():
        B, action = catalog.levi_action(name)
        base = nilpotent_entries[base_name]
        assert B.dim == dims[name] == len(action)
        assert verify_lie(B).ok
        assert derived_subalgebra(B).dim == B.dim
        assert nullspace(killing_form(B).gram).dim == 0
        span = MatrixSubspace.from_matrices(base.algebra.dim, action)
        assert span.dim == B.dim
        for mat in action:
            assert is_derivation(base.algebra, mat)
            assert is_skew_map(base.form, mat)
        # the assignment intertwines the brackets
        for i in range(B.dim):
            for j in range(i + 1, B.dim):
                want = Matrix.zero(base.algebra.dim, base.algebra.dim)
                for k, c in B.struct(i, j).items():
                    want = want.add(action[k].scale(c))
                assert action[i].commutator(action[j]) == want, name


def test_levi_actions_inside_skew_spaces(nilpotent_entries):
    for name, base_name in (("n2_sl2", "n2"), ("n7_sl2", "n7")):
        _, action = catalog.levi_action(name)
        base = nilpotent_entries[base_name]
        space = skew_derivation_space(base.algebra, base.form)
        for mat in action:
            assert space.contains(mat)


def test_extended_dims(extensions):
    dims = {"sl2_n23": 11, "sl3_n32": 22, "sl2_n32": 12, "sl2_n7": 15, "L1(2)": 12}
    for name, dim in dims.items():
        assert extensions[name].algebra.dim == dim


def test_series_extension_dimension_formula():
    ext = catalog.extended("L1(3)")
    n = 3
    assert ext.algebra.dim == 2 * (n * n - 1) + (2 * n + 2)
    assert is_quadratic(ext.algebra, ext.form).ok


def test_series_extension_radical_structure(extensions):
    ext = extensions["L1(2)"]
    rad = radical(ext.algebra)
    assert rad.dim == 9
    from quadlie.liealg import orthogonal_complement

    radperp = orthogonal_complement(ext.algebra, ext.form, rad)
    assert radperp.dim == 3
    assert radperp == ext.block_subspace("bdual")


def test_provenance_strings(nilpotent_entries, ideal_entries):
    for entry in nilpotent_entries.values():
        assert "classification" in entry.provenance
    for entry in ideal_entries.values():
        assert "quotient" in entry.provenance
