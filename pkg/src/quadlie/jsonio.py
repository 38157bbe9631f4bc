"""JSON and text serialization shared by the CLI.

Rationals travel as strings "p/q" (or "p" when the denominator is 1).
Algebra documents list only the i < j nonzero brackets:

    {"dim": n, "labels": [...], "brackets": [{"i": i, "j": j, "v": [...]}],
     "form": {"gram": [[...], ...]}}

"form", "labels", "name" and "provenance" are optional.  Parsing an
algebra runs the Lie checks and rejects invalid tensors.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exactlin import Matrix, Subspace, format_rational, parse_rational
from .liealg import BilinearForm, LieAlgebra, verify_lie
from .freenilp import LieExpr, format_monomial, parse_monomial
from .deriv import MatrixSubspace
from .forms import FormSpace, FreePresentation
from .dblext import DoubleExtension


class SchemaError(ValueError):
    """Document does not match the expected schema."""


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def vector_to_json(v) -> list[str]:
    return [format_rational(Fraction(x)) for x in v]


def json_to_vector(data, length: int | None = None) -> list[Fraction]:
    if not isinstance(data, list):
        raise SchemaError("expected a list of rationals")
    out = []
    for x in data:
        try:
            out.append(parse_rational(str(x)))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational {x!r}") from exc
    if length is not None and len(out) != length:
        raise SchemaError(f"expected vector of length {length}, got {len(out)}")
    return out


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [vector_to_json(row) for row in m.rows]


def json_to_matrix(data, nrows: int | None = None, ncols: int | None = None) -> Matrix:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise SchemaError("expected a list of rows")
    m = Matrix([json_to_vector(row) for row in data])
    if nrows is not None and m.nrows != nrows:
        raise SchemaError(f"expected {nrows} rows, got {m.nrows}")
    if ncols is not None and m.ncols != ncols:
        raise SchemaError(f"expected {ncols} columns, got {m.ncols}")
    return m


def algebra_to_doc(
    L: LieAlgebra,
    form: BilinearForm | None = None,
    name: str | None = None,
    provenance: str | None = None,
) -> dict:
    brackets = []
    for (i, j) in sorted(L.table):
        v = [Fraction(0)] * L.dim
        for k, c in L.table[(i, j)].items():
            v[k] = c
        brackets.append({"i": i, "j": j, "v": vector_to_json(v)})
    doc = {"dim": L.dim, "brackets": brackets}
    if L.labels is not None:
        doc["labels"] = list(L.labels)
    if form is not None:
        doc["form"] = {"gram": matrix_to_json(form.gram)}
    if name is not None:
        doc["name"] = name
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def doc_to_algebra(doc) -> tuple[LieAlgebra, BilinearForm | None]:
    """Parse and validate an algebra document; runs the Lie checks."""
    if not isinstance(doc, dict):
        raise SchemaError("expected a JSON object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise SchemaError("missing or invalid 'dim'")
    table = {}
    for entry in doc.get("brackets", []):
        if not isinstance(entry, dict) or not {"i", "j", "v"} <= set(entry):
            raise SchemaError("bracket entries need keys i, j, v")
        i, j = entry["i"], entry["j"]
        if not (isinstance(i, int) and isinstance(j, int)):
            raise SchemaError("bracket indices must be integers")
        if not (0 <= i < dim and 0 <= j < dim):
            raise SchemaError(f"bracket index ({i},{j}) out of range for dim {dim}")
        v = json_to_vector(entry["v"], dim)
        terms = {k: c for k, c in enumerate(v) if c != 0}
        if (i, j) in table:
            raise SchemaError(f"duplicate bracket entry ({i},{j})")
        if terms:
            table[(i, j)] = terms
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != dim:
            raise SchemaError("'labels' must list one name per basis vector")
        labels = [str(x) for x in labels]
    algebra = LieAlgebra(dim, table, labels=labels)
    report = verify_lie(algebra)
    if not report.ok:
        parts = []
        if report.antisymmetry_violations:
            parts.append(f"antisymmetry violations at {report.antisymmetry_violations}")
        if report.jacobi_violations:
            parts.append(f"Jacobi violations at {report.jacobi_violations}")
        raise ValueError("not a Lie algebra: " + "; ".join(parts))
    form = None
    if "form" in doc:
        fdoc = doc["form"]
        if not isinstance(fdoc, dict) or "gram" not in fdoc:
            raise SchemaError("'form' needs a 'gram' matrix")
        form = BilinearForm(json_to_matrix(fdoc["gram"], dim, dim))
    return algebra, form


def parse_algebra(text: str) -> tuple[LieAlgebra, BilinearForm | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from exc
    return doc_to_algebra(doc)


def subspace_to_json(s: Subspace) -> dict:
    return {
        "ambient_dim": s.ambient_dim,
        "basis": [vector_to_json(row) for row in s.basis.rows],
    }


def json_to_vectors(data, ambient: int) -> list[list[Fraction]]:
    if not isinstance(data, list):
        raise SchemaError("expected a list of vectors")
    return [json_to_vector(v, ambient) for v in data]


def matrix_subspace_to_json(ms: MatrixSubspace) -> dict:
    return {"n": ms.n, "basis": [matrix_to_json(m) for m in ms.basis_matrices()]}


def form_space_to_json(fs: FormSpace) -> dict:
    return {
        "algebra_dim": fs.algebra_dim,
        "basis": [matrix_to_json(m) for m in fs.space.basis_matrices()],
    }


def lie_expr_to_text(expr: LieExpr) -> str:
    if expr.is_zero:
        return "0"
    parts = []
    for m, c in expr:
        mono = format_monomial(m)
        if c == 1:
            term = mono
        elif c == -1:
            term = f"-{mono}"
        else:
            term = f"{format_rational(c)}*{mono}"
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts)


def parse_lie_expr(text: str) -> dict:
    """Parse "[m] + 2*[m'] - [m'']" into a {tree: coefficient} dict."""
    text = text.strip()
    if text == "0":
        return {}
    tokens = text.replace("+", " + ").replace("-", " - ").split()
    terms: dict = {}
    sign = Fraction(1)
    expect_term = True
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "+":
            sign = Fraction(1)
            expect_term = True
        elif tok == "-":
            sign = Fraction(-1) * (sign if expect_term else Fraction(1))
            expect_term = True
        else:
            if "*" in tok:
                coeff_text, mono_text = tok.split("*", 1)
                coeff = parse_rational(coeff_text)
            else:
                coeff, mono_text = Fraction(1), tok
            tree = parse_monomial(mono_text)
            terms[tree] = terms.get(tree, Fraction(0)) + sign * coeff
            sign = Fraction(1)
            expect_term = False
        i += 1
    return terms


def free_presentation_to_json(fp: FreePresentation, basis) -> dict:
    exprs = []
    for row in fp.ideal.basis.rows:
        expr = LieExpr.from_dict({basis[k]: c for k, c in enumerate(row) if c != 0})
        exprs.append(lie_expr_to_text(expr))
    return {
        "d": fp.d,
        "t": fp.t,
        "generators": [vector_to_json(g) for g in fp.generator_vectors],
        "ideal_basis": exprs,
    }


def extension_to_doc(ext: DoubleExtension, name: str | None = None) -> dict:
    doc = algebra_to_doc(ext.algebra, ext.form, name=name)
    doc["blocks"] = {
        "B": list(ext.layout.b),
        "L": list(ext.layout.l),
        "Bdual": list(ext.layout.bdual),
    }
    return doc
