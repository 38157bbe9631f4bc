"""Hall bases and free nilpotent Lie algebras.

Monomials are nested binary trees: a generator is the int g (1-based,
printed "xg"), a bracket is the pair (left, right).  The monomial order
puts x_d < ... < x_1, lower degree before higher degree, and compares
equal-degree brackets lexicographically by (left, right); that last rule
is a library convention, so tests against known basis listings compare
as sets.

A tree [u, v] with canonical u, v is canonical (Hall) when u > v and,
if u = [z, w], additionally v >= w.  ``normalize`` rewrites arbitrary
bracket trees into linear combinations of canonical monomials using
antisymmetry and the Jacobi identity, truncating above the nilpotency
degree; its confluence is exercised by the Jacobi check of the free
algebras it produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactlin import ZERO
from .liealg import LieAlgebra

HallMonomial = int | tuple


def degree(m) -> int:
    if isinstance(m, int):
        return 1
    return degree(m[0]) + degree(m[1])


def generators_in(m):
    if isinstance(m, int):
        yield m
    else:
        yield from generators_in(m[0])
        yield from generators_in(m[1])


def monomial_key(m):
    """Sort key realizing the monomial order (ascending)."""
    if isinstance(m, int):
        return (1, -m)
    return (degree(m), monomial_key(m[0]), monomial_key(m[1]))


def is_hall(m, d: int) -> bool:
    """Whether m is a canonical Hall monomial on generators 1..d."""
    if isinstance(m, int):
        return 1 <= m <= d
    u, v = m
    if not (is_hall(u, d) and is_hall(v, d)):
        return False
    if monomial_key(u) <= monomial_key(v):
        return False
    if not isinstance(u, int) and monomial_key(v) < monomial_key(u[1]):
        return False
    return True


def hall_basis_level(d: int, s: int) -> list:
    """Canonical monomials of degree exactly s, in the monomial order."""
    if d < 1 or s < 1:
        raise ValueError("d and s must be >= 1")
    levels = _levels(d, s)
    return levels[s]


def _levels(d: int, s: int) -> dict[int, list]:
    levels: dict[int, list] = {1: sorted(range(1, d + 1), key=monomial_key)}
    for n in range(2, s + 1):
        found = []
        for k in range(1, n // 2 + 1):
            for v in levels[k]:
                for u in levels[n - k]:
                    m = (u, v)
                    if is_hall(m, d):
                        found.append(m)
        levels[n] = sorted(found, key=monomial_key)
    return levels


def hall_basis(d: int, t: int) -> list:
    """Full Hall basis of the free t-step nilpotent algebra on d generators."""
    if d < 1 or t < 1:
        raise ValueError("d and t must be >= 1")
    levels = _levels(d, t)
    out = []
    for s in range(1, t + 1):
        out.extend(levels[s])
    return out


def hall_dimension(d: int, s: int) -> int:
    return len(hall_basis_level(d, s))


@dataclass(frozen=True)
class LieExpr:
    """Rational linear combination of canonical monomials."""

    terms: tuple

    @classmethod
    def from_dict(cls, d) -> "LieExpr":
        items = tuple(
            sorted(
                ((m, Fraction(c)) for m, c in d.items() if c != 0),
                key=lambda mc: monomial_key(mc[0]),
            )
        )
        return cls(items)

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self):
        return iter(self.terms)


def _expr_add(acc: dict, other: dict, scale: Fraction = Fraction(1)) -> None:
    for m, c in other.items():
        v = acc.get(m, ZERO) + scale * c
        if v:
            acc[m] = v
        elif m in acc:
            del acc[m]


def _norm_bracket(u, v, t: int, cache: dict) -> dict:
    """[u, v] for canonical u, v as a dict over canonical monomials."""
    if degree(u) + degree(v) > t:
        return {}
    if u == v:
        return {}
    key = (u, v)
    hit = cache.get(key)
    if hit is not None:
        return hit
    ku, kv = monomial_key(u), monomial_key(v)
    if ku < kv:
        result = {m: -c for m, c in _norm_bracket(v, u, t, cache).items()}
    elif isinstance(u, int) or monomial_key(u[1]) <= kv:
        result = {(u, v): Fraction(1)}
    else:
        # u = [z, w] with v < w: Jacobi gives [[z,w],v] = [[z,v],w] + [z,[w,v]].
        z, w = u
        left: dict = {}
        for m, c in _norm_bracket(z, v, t, cache).items():
            _expr_add(left, _norm_bracket(m, w, t, cache), c)
        for m, c in _norm_bracket(w, v, t, cache).items():
            _expr_add(left, _norm_bracket(z, m, t, cache), c)
        result = left
    cache[key] = result
    return result


def _norm_tree(m, d: int, t: int, cache: dict) -> dict:
    if isinstance(m, int):
        if not 1 <= m <= d:
            raise ValueError(f"generator x{m} out of range for d={d}")
        return {m: Fraction(1)}
    if degree(m) > t:
        return {}
    lhs = _norm_tree(m[0], d, t, cache)
    rhs = _norm_tree(m[1], d, t, cache)
    out: dict = {}
    for mu, cu in lhs.items():
        for mv, cv in rhs.items():
            _expr_add(out, _norm_bracket(mu, mv, t, cache), cu * cv)
    return out


def normalize(expr, d: int, t: int) -> LieExpr:
    """Rewrite a bracket expression into canonical form of degree <= t.

    ``expr`` may be a monomial tree (not necessarily canonical), a
    LieExpr, or a {tree: coefficient} dict.
    """
    cache: dict = {}
    if isinstance(expr, LieExpr):
        items = expr.terms
    elif isinstance(expr, dict):
        items = tuple(expr.items())
    else:
        items = ((expr, Fraction(1)),)
    acc: dict = {}
    for tree, coeff in items:
        _expr_add(acc, _norm_tree(tree, d, t, cache), Fraction(coeff))
    return LieExpr.from_dict(acc)


def format_monomial(m) -> str:
    if isinstance(m, int):
        return f"x{m}"
    return f"[{format_monomial(m[0])},{format_monomial(m[1])}]"


def parse_monomial(text: str):
    """Parse bracket notation like "[[x1,x2],x2]" into a tree."""
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(text):
            raise ValueError("unexpected end of monomial")
        if text[pos] == "[":
            pos += 1
            left = parse()
            if pos >= len(text) or text[pos] != ",":
                raise ValueError(f"expected ',' at position {pos} in {text!r}")
            pos += 1
            right = parse()
            if pos >= len(text) or text[pos] != "]":
                raise ValueError(f"expected ']' at position {pos} in {text!r}")
            pos += 1
            return (left, right)
        if text[pos] == "x":
            pos += 1
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise ValueError(f"expected generator index at position {start} in {text!r}")
            return int(text[start:pos])
        raise ValueError(f"unexpected character {text[pos]!r} in {text!r}")

    stripped = text.replace(" ", "")
    text = stripped
    result = parse()
    if pos != len(text):
        raise ValueError(f"trailing characters in {text!r}")
    return result


@lru_cache(maxsize=None)
def _free_nilpotent_cached(d: int, t: int) -> tuple[LieAlgebra, tuple]:
    basis = hall_basis(d, t)
    index = {m: i for i, m in enumerate(basis)}
    cache: dict = {}
    brackets = {}
    for i, u in enumerate(basis):
        for j in range(i + 1, len(basis)):
            expr = _norm_bracket(basis[j], u, t, cache)
            # basis[j] > u in the monomial order, so [u, basis[j]] flips sign.
            terms = {index[m]: -c for m, c in expr.items()}
            if terms:
                brackets[(i, j)] = terms
    labels = [format_monomial(m) for m in basis]
    return LieAlgebra.from_brackets(len(basis), brackets, labels=labels), tuple(basis)


def free_nilpotent(d: int, t: int) -> tuple[LieAlgebra, list]:
    """Structure constants of the free t-step nilpotent algebra on d generators."""
    algebra, basis = _free_nilpotent_cached(d, t)
    return algebra, list(basis)


def expr_to_vector(expr: LieExpr, basis: list):
    """Coordinates of a LieExpr in a Hall basis listing."""
    index = {m: i for i, m in enumerate(basis)}
    out = [ZERO] * len(basis)
    for m, c in expr:
        if m not in index:
            raise ValueError(f"monomial {format_monomial(m)} not in basis")
        out[index[m]] = c
    return out
