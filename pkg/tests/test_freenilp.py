import random
from fractions import Fraction

import pytest

from quadlie import liealg
from quadlie.freenilp import (
    LieExpr,
    degree,
    expr_to_vector,
    format_monomial,
    free_nilpotent,
    hall_basis,
    hall_basis_level,
    hall_dimension,
    is_hall,
    monomial_key,
    normalize,
    parse_monomial,
)

B12 = (1, 2)


def mobius(n):
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        else:
            p += 1
    return -result if n > 1 else result


def witt(d, s):
    total = sum(mobius(k) * d ** (s // k) for k in range(1, s + 1) if s % k == 0)
    return total // s


def test_is_hall_basic():
    assert is_hall(B12, 2)  # x1 > x2
    assert not is_hall((2, 1), 2)  # left must dominate
    assert is_hall((B12, 1), 2)
    assert not is_hall((B12, B12), 2)  # equal factors
    assert is_hall((B12, 2), 2)
    # left = [z, w] forces right >= w; degree puts [x1,x2] above x2
    assert is_hall(((B12, 2), B12), 2)


def test_is_hall_second_condition():
    # [[x1,x2],x2] pairs with x1 and x2 but [[[x1,x2],x1],x2] breaks v >= w.
    assert is_hall(((B12, 1), 1), 2)
    assert not is_hall(((B12, 1), 2), 2)
    assert is_hall((B12, 2), 3)
    assert not is_hall((1, 1), 2)
    assert not is_hall(3, 2)  # generator out of range


def test_hall_level_2_3():
    level = hall_basis_level(2, 3)
    assert set(level) == {(B12, 2), (B12, 1)}
    assert len(level) == 2


def test_hall_level_counts():
    assert len(hall_basis_level(4, 3)) == 20
    assert [format_monomial(m) for m in hall_basis_level(2, 1)] == ["x2", "x1"]


def test_hall_basis_sizes():
    assert len(hall_basis(2, 6)) == 23
    assert len(hall_basis(6, 2)) == 21
    assert hall_basis(1, 1) == [1]


def test_hall_dimension_against_witt():
    for d in range(1, 5):
        for s in range(1, 7):
            assert hall_dimension(d, s) == witt(d, s)


def test_level_members_are_exactly_the_hall_monomials():
    for d, s in ((2, 4), (3, 3)):
        level = set(hall_basis_level(d, s))
        for k in range(1, s):
            for u in hall_basis_level(d, s - k):
                for v in hall_basis_level(d, k):
                    assert ((u, v) in level) == is_hall((u, v), d)


def test_basis_sorted_by_monomial_order():
    basis = hall_basis(3, 3)
    keys = [monomial_key(m) for m in basis]
    assert keys == sorted(keys)
    assert all(is_hall(m, 3) for m in basis)


def test_normalize_antisymmetry():
    assert normalize((2, 1), 2, 5) == LieExpr.from_dict({B12: Fraction(-1)})
    assert normalize((B12, B12), 2, 5).is_zero


def test_normalize_jacobi_swap():
    # [[[x1,x2],x1],x2] rewrites to [[[x1,x2],x2],x1]: the cross term
    # [[x1,x2],[x1,x2]] vanishes.
    got = normalize(((B12, 1), 2), 2, 4)
    assert got == LieExpr.from_dict({((B12, 2), 1): Fraction(1)})


def test_normalize_truncates():
    assert normalize(((B12, 1), 2), 2, 3).is_zero


def test_normalize_linear_and_idempotent():
    rng = random.Random(23)

    def tree(depth):
        if depth <= 1:
            return rng.randrange(1, 3)
        return (tree(rng.randrange(1, depth)), tree(rng.randrange(1, depth)))

    for _ in range(30):
        t = tree(4)
        once = normalize(t, 2, 4)
        assert normalize(once, 2, 4) == once
        doubled = normalize({t: Fraction(2)}, 2, 4)
        assert doubled == LieExpr.from_dict({m: 2 * c for m, c in once})


def test_monomial_text_round_trip():
    for text in ("x1", "[x1,x2]", "[[x1,x2],x2]", "[[[x1,x2],x1],[x1,x2]]"):
        assert format_monomial(parse_monomial(text)) == text
    with pytest.raises(ValueError):
        parse_monomial("[x1,x2")
    with pytest.raises(ValueError):
        parse_monomial("y1")


def test_free_nilpotent_dimensions():
    for (d, t), dim in (((2, 3), 5), ((3, 2), 6), ((2, 5), 14), ((3, 3), 14)):
        algebra, basis = free_nilpotent(d, t)
        assert algebra.dim == dim
        assert len(basis) == dim


def test_free_nilpotent_generator_bracket():
    algebra, basis = free_nilpotent(2, 3)
    x1 = algebra.basis_vector(basis.index(1))
    x2 = algebra.basis_vector(basis.index(2))
    expected = algebra.basis_vector(basis.index(B12))
    assert algebra.bracket(x1, x2) == expected


def test_free_nilpotent_passes_jacobi():
    for d, t in ((2, 3), (3, 2), (2, 5), (4, 3)):
        algebra, _ = free_nilpotent(d, t)
        assert liealg.verify_lie(algebra).ok
        assert liealg.type_and_nilindex(algebra) == (d, t)


def test_lower_central_matches_graded_dimensions():
    algebra, _ = free_nilpotent(2, 5)
    dims = liealg.lower_central_series(algebra).dims
    assert dims == [14, 12, 11, 9, 6, 0]


def test_expr_to_vector():
    _, basis = free_nilpotent(2, 3)
    expr = normalize({(B12, 2): Fraction(3)}, 2, 3)
    vec = expr_to_vector(expr, basis)
    assert vec[basis.index((B12, 2))] == 3
    assert sum(1 for x in vec if x != 0) == 1


def test_degree():
    assert degree(1) == 1
    assert degree(((1, 2), (1, 2))) == 4
