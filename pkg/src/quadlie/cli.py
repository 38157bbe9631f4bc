"""Command-line front end.

Every verb is a thin wrapper over the library: inputs are JSON documents
(files or '-' for stdin), outputs are deterministic JSON (sorted keys)
or aligned text.  Exit codes: 0 success, 1 domain/data errors, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import catalog, golden, jsonio
from .exactlin import Matrix, Subspace, format_rational, subspace_complement
from .liealg import quotient, verify_lie
from .freenilp import format_monomial, free_nilpotent, hall_basis, hall_basis_level
from .forms import invariant_forms, is_quadratic, recover_free_presentation
from .deriv import (
    derivation_space,
    inner_derivation_space,
    quotient_derivation_space,
    skew_derivation_space,
)
from .dblext import double_extend, reconstruct_via_levi


def _read_text(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_doc(path: str, stdin) -> dict:
    text = _read_text(path, stdin)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from exc


def _matrix_text(m: Matrix) -> list[str]:
    cells = [[format_rational(x) for x in row] for row in m.rows]
    if not cells:
        return ["(empty)"]
    widths = [max(len(cells[r][c]) for r in range(len(cells))) for c in range(len(cells[0]))]
    return ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells]


def _emit(out, lines_or_doc, as_json: bool) -> None:
    if as_json:
        out.write(jsonio.dumps(lines_or_doc))
    else:
        for line in lines_or_doc:
            out.write(line + "\n")


def _matrices_text(mats: list[Matrix]) -> list[str]:
    lines: list[str] = []
    for idx, m in enumerate(mats):
        if idx:
            lines.append("")
        lines.extend(_matrix_text(m))
    return lines


def _cmd_hall_basis(args, out, stdin) -> int:
    if args.level is not None:
        monomials = hall_basis_level(args.d, args.level)
    else:
        monomials = hall_basis(args.d, args.t)
    texts = [format_monomial(m) for m in monomials]
    if args.format == "json":
        doc = {"d": args.d, "t": args.t, "monomials": texts}
        if args.level is not None:
            doc["level"] = args.level
        out.write(jsonio.dumps(doc))
    else:
        _emit(out, texts, False)
    return 0


def _cmd_adjoints(args, out, stdin) -> int:
    algebra, _ = jsonio.doc_to_algebra(_load_doc(args.file, stdin))
    mats = [algebra.ad_matrix(i) for i in range(algebra.dim)]
    if args.format == "json":
        out.write(jsonio.dumps({"dim": algebra.dim, "adjoints": [jsonio.matrix_to_json(m) for m in mats]}))
    else:
        _emit(out, _matrices_text(mats), False)
    return 0


def _cmd_invariant_forms(args, out, stdin) -> int:
    algebra, _ = jsonio.doc_to_algebra(_load_doc(args.file, stdin))
    fs = invariant_forms(algebra)
    if args.format == "json":
        out.write(jsonio.dumps(jsonio.form_space_to_json(fs)))
    else:
        _emit(out, [f"dimension {fs.dim}", ""] + _matrices_text(fs.space.basis_matrices()), False)
    return 0


def _space_command(compute):
    def runner(args, out, stdin) -> int:
        algebra, form = jsonio.doc_to_algebra(_load_doc(args.file, stdin))
        space = compute(algebra, form)
        if args.format == "json":
            out.write(jsonio.dumps(jsonio.matrix_subspace_to_json(space)))
        else:
            _emit(out, [f"dimension {space.dim}", ""] + _matrices_text(space.basis_matrices()), False)
        return 0

    return runner


def _need_form(algebra, form):
    if form is None:
        raise ValueError("this command needs a 'form' entry in the document")
    return form


_cmd_derivations = _space_command(lambda L, f: derivation_space(L))
_cmd_inner_derivations = _space_command(lambda L, f: inner_derivation_space(L))
_cmd_skew_derivations = _space_command(
    lambda L, f: skew_derivation_space(L, _need_form(L, f))
)


def _cmd_quotient(args, out, stdin) -> int:
    doc = _load_doc(args.file, stdin)
    algebra, form = jsonio.doc_to_algebra(doc)
    if "ideal" not in doc:
        raise ValueError("document needs an 'ideal' list of vectors")
    ideal = Subspace.from_vectors(
        algebra.dim, jsonio.json_to_vectors(doc["ideal"], algebra.dim)
    )
    if "complement" in doc:
        comp = Subspace.from_vectors(
            algebra.dim, jsonio.json_to_vectors(doc["complement"], algebra.dim)
        )
    else:
        comp = subspace_complement(ideal, Subspace.full(algebra.dim))
    q = quotient(algebra, comp, ideal)
    result = jsonio.algebra_to_doc(q)
    if args.format == "json":
        out.write(jsonio.dumps(result))
    else:
        _emit(out, _algebra_text(q, None), False)
    return 0


def _cmd_quotient_derivations(args, out, stdin) -> int:
    free, _ = free_nilpotent(args.d, args.t)
    if args.ideal is not None:
        entry = catalog.classification_ideal(args.ideal)
        if (entry.d, entry.t) != (args.d, args.t):
            raise ValueError(
                f"ideal {args.ideal} lives in the free ({entry.d},{entry.t}) algebra"
            )
        ideal = entry.subspace
    else:
        if args.ideal_file is None:
            raise ValueError("provide --ideal NAME or --ideal-file FILE")
        doc = _load_doc(args.ideal_file, stdin)
        if "ideal" in doc:
            vectors = jsonio.json_to_vectors(doc["ideal"], free.dim)
        elif "generators" in doc:
            from .freenilp import expr_to_vector, normalize

            _, basis = free_nilpotent(args.d, args.t)
            vectors = []
            for text in doc["generators"]:
                expr = normalize(jsonio.parse_lie_expr(str(text)), args.d, args.t)
                vectors.append(expr_to_vector(expr, basis))
        else:
            raise ValueError(
                "ideal document needs 'ideal' vectors or 'generators' bracket expressions"
            )
        ideal = Subspace.from_vectors(free.dim, vectors)
    space = quotient_derivation_space(args.d, args.t, ideal)
    if args.format == "json":
        out.write(jsonio.dumps(jsonio.matrix_subspace_to_json(space)))
    else:
        _emit(out, [f"dimension {space.dim}", ""] + _matrices_text(space.basis_matrices()), False)
    return 0


def _cmd_recover_ideal(args, out, stdin) -> int:
    algebra, _ = jsonio.doc_to_algebra(_load_doc(args.file, stdin))
    fp = recover_free_presentation(algebra)
    _, basis = free_nilpotent(fp.d, fp.t)
    doc = jsonio.free_presentation_to_json(fp, basis)
    if args.format == "json":
        out.write(jsonio.dumps(doc))
    else:
        lines = [f"d {fp.d}", f"t {fp.t}", "generators:"]
        lines += ["  " + " ".join(map(format_rational, g)) for g in fp.generator_vectors]
        lines.append("ideal basis:")
        lines += ["  " + s for s in doc["ideal_basis"]]
        _emit(out, lines, False)
    return 0


def _cmd_double_extend(args, out, stdin) -> int:
    doc = _load_doc(args.file, stdin)
    for key in ("base", "extender", "action"):
        if key not in doc:
            raise ValueError(f"document needs a {key!r} entry")
    base, base_form = jsonio.doc_to_algebra(doc["base"])
    if base_form is None:
        raise ValueError("the base algebra needs a quadratic 'form'")
    extender, extender_form = jsonio.doc_to_algebra(doc["extender"])
    action = [
        jsonio.json_to_matrix(m, base.dim, base.dim) for m in doc["action"]
    ]
    ext = double_extend(base, base_form, extender, action, B_form=extender_form)
    result = jsonio.extension_to_doc(ext)
    if args.format == "json":
        out.write(jsonio.dumps(result))
    else:
        _emit(out, _algebra_text(ext.algebra, ext.form), False)
    return 0


def _cmd_reconstruct(args, out, stdin) -> int:
    doc = _load_doc(args.file, stdin)
    algebra, form = jsonio.doc_to_algebra(doc)
    if form is None:
        raise ValueError("the algebra needs a quadratic 'form'")
    if "levi" not in doc:
        raise ValueError("document needs a 'levi' list of vectors")
    levi = Subspace.from_vectors(
        algebra.dim, jsonio.json_to_vectors(doc["levi"], algebra.dim)
    )
    rec = reconstruct_via_levi(algebra, form, levi)
    result = {
        "isometry_ok": rec.isometry_ok,
        "iso": jsonio.matrix_to_json(rec.iso),
        "extension": jsonio.extension_to_doc(rec.extension),
    }
    if args.format == "json":
        out.write(jsonio.dumps(result))
    else:
        _emit(out, [f"isometry_ok {rec.isometry_ok}"], False)
    return 0


def _algebra_text(algebra, form) -> list[str]:
    labels = algebra.labels or [f"e{i+1}" for i in range(algebra.dim)]
    lines = [f"dim {algebra.dim}"]
    lines.append("products:")
    for (i, j) in sorted(algebra.table):
        terms = algebra.table[(i, j)]
        left, right = labels[i], labels[j]
        if all(c < 0 for c in terms.values()):
            left, right = right, left
            terms = {k: -c for k, c in terms.items()}
        parts = []
        for k in sorted(terms):
            c = terms[k]
            if c == 1:
                parts.append(labels[k])
            elif c == -1:
                parts.append(f"-{labels[k]}")
            else:
                parts.append(f"{format_rational(c)}*{labels[k]}")
        lines.append(f"  [{left},{right}] = " + " + ".join(parts))
    if form is not None:
        lines.append("gram:")
        lines += ["  " + s for s in _matrix_text(form.gram)]
    return lines


def _cmd_catalog(args, out, stdin) -> int:
    name = args.name
    if name in catalog.NILPOTENT_NAMES:
        entry = catalog.nilpotent(name)
        doc = jsonio.algebra_to_doc(
            entry.algebra, entry.form, name=entry.name, provenance=entry.provenance
        )
        if args.format == "json":
            out.write(jsonio.dumps(doc))
        else:
            _emit(out, [f"name {entry.name}", f"provenance {entry.provenance}"]
                  + _algebra_text(entry.algebra, entry.form), False)
        return 0
    if name in catalog.IDEAL_NAMES:
        entry = catalog.classification_ideal(name)
        doc = {
            "name": entry.name,
            "d": entry.d,
            "t": entry.t,
            "dim": entry.subspace.dim,
            "generators": [jsonio.lie_expr_to_text(g) for g in entry.generators],
            "basis": [jsonio.vector_to_json(r) for r in entry.subspace.basis.rows],
            "provenance": entry.provenance,
        }
        if args.format == "json":
            out.write(jsonio.dumps(doc))
        else:
            lines = [f"name {entry.name}", f"ambient ({entry.d},{entry.t})",
                     f"dim {entry.subspace.dim}", "generators:"]
            lines += ["  " + jsonio.lie_expr_to_text(g) for g in entry.generators]
            _emit(out, lines, False)
        return 0
    if name in catalog.LEVI_ACTION_NAMES:
        extender, action = catalog.levi_action(name)
        doc = {
            "name": name,
            "extender": jsonio.algebra_to_doc(extender),
            "action": [jsonio.matrix_to_json(m) for m in action],
        }
        if args.format == "json":
            out.write(jsonio.dumps(doc))
        else:
            _emit(out, [f"name {name}", f"extender dim {extender.dim}", "action:"]
                  + _matrices_text(action), False)
        return 0
    if name in catalog.EXTENSION_NAMES or re.fullmatch(r"L1\(\d+\)", name):
        ext = catalog.extended(name)
        doc = jsonio.extension_to_doc(ext, name=name)
        if args.format == "json":
            out.write(jsonio.dumps(doc))
        else:
            _emit(out, [f"name {name}"] + _algebra_text(ext.algebra, ext.form), False)
        return 0
    match = re.fullmatch(r"sl(\d+)", name)
    if match:
        algebra = catalog.simple_sl(int(match.group(1)))
        doc = jsonio.algebra_to_doc(algebra, name=name)
        if args.format == "json":
            out.write(jsonio.dumps(doc))
        else:
            _emit(out, [f"name {name}"] + _algebra_text(algebra, None), False)
        return 0
    raise ValueError(f"unknown catalog name {name!r}")


def _cmd_verify(args, out, stdin) -> int:
    if args.suite is not None:
        if args.suite != "paper":
            raise ValueError(f"unknown suite {args.suite!r}")
        results = golden.run_suite()
        failed = 0
        for res in results:
            status = "PASS" if res.passed else "FAIL"
            line = f"{status} {res.number:>2}  {res.name}"
            if not res.passed and res.detail:
                line += f"  [{res.detail}]"
            out.write(line + "\n")
            failed += 0 if res.passed else 1
        out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
        return 0 if failed == 0 else 1
    if args.file is None:
        raise ValueError("provide --suite paper or an algebra file")
    algebra, form = jsonio.doc_to_algebra(_load_doc(args.file, stdin))
    report = verify_lie(algebra)
    lines = [f"dim {algebra.dim}", f"lie checks {'ok' if report.ok else 'FAILED'}"]
    ok = report.ok
    if form is not None:
        verdict = is_quadratic(algebra, form)
        lines.append(f"form {verdict.status}")
        ok = ok and verdict.ok
    _emit(out, lines, False)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadlie",
        description="Exact construction and verification of quadratic Lie algebras.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("json", "text"), default="json")
        return p

    p = add("hall-basis", _cmd_hall_basis, help="Hall basis of the free nilpotent algebra")
    p.add_argument("d", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--level", type=int, default=None, help="only this degree")

    for name, fn, help_text in (
        ("adjoints", _cmd_adjoints, "adjoint matrices of an algebra"),
        ("invariant-forms", _cmd_invariant_forms, "invariant symmetric bilinear forms"),
        ("derivations", _cmd_derivations, "derivation space"),
        ("inner-derivations", _cmd_inner_derivations, "inner derivation space"),
        ("skew-derivations", _cmd_skew_derivations, "form-skew derivation space"),
        ("recover-ideal", _cmd_recover_ideal, "free nilpotent presentation"),
        ("double-extend", _cmd_double_extend, "double extension from a document"),
        ("reconstruct", _cmd_reconstruct, "Levi round trip of a quadratic algebra"),
        ("quotient", _cmd_quotient, "quotient by an ideal"),
    ):
        p = add(name, fn, help=help_text)
        p.add_argument("file", help="JSON document or '-' for stdin")

    p = add("quotient-derivations", _cmd_quotient_derivations,
            help="derivations of free(d,t)/I computed before the quotient")
    p.add_argument("d", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--ideal", choices=catalog.IDEAL_NAMES, default=None)
    p.add_argument("--ideal-file", default=None)

    p = add("catalog", _cmd_catalog, help="named algebras, ideals, actions, extensions")
    p.add_argument("name")

    p = add("verify", _cmd_verify, help="run the golden suite or verify a file")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--suite", default=None)

    return parser


def run(argv, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    stdin = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        return code if isinstance(code, int) else 2
    try:
        return args.fn(args, stdout, stdin)
    except (ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
