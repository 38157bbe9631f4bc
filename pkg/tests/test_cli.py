import io
import json

from quadlie import cli, jsonio
from quadlie import catalog


def run_cli(argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, stdout=out, stderr=err, stdin=io.StringIO(stdin_text))
    return code, out.getvalue(), err.getvalue()


def test_hall_basis_text_line_count():
    code, out, _ = run_cli(["hall-basis", "2", "6", "--format", "text"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 23
    assert lines[0] == "x2"
    assert "[[x1,x2],x2]" in lines


def test_hall_basis_level_flag():
    code, out, _ = run_cli(["hall-basis", "2", "6", "--level", "3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["monomials"] == ["[[x1,x2],x2]", "[[x1,x2],x1]"]


def test_catalog_round_trip_bytes():
    code, out, _ = run_cli(["catalog", "n5"])
    assert code == 0
    algebra, form = jsonio.parse_algebra(out)
    entry = catalog.nilpotent("n5")
    redone = jsonio.dumps(
        jsonio.algebra_to_doc(algebra, form, name="n5", provenance=entry.provenance)
    )
    assert redone == out


def test_catalog_pipe_into_skew_derivations():
    code, out, _ = run_cli(["catalog", "n3"])
    assert code == 0
    code, out2, _ = run_cli(["skew-derivations", "-"], stdin_text=out)
    assert code == 0
    doc = json.loads(out2)
    assert doc["n"] == 7
    assert len(doc["basis"]) == 8


def test_catalog_ideal_and_action_and_simple():
    code, out, _ = run_cli(["catalog", "I4"])
    assert code == 0
    doc = json.loads(out)
    assert doc["d"] == 3 and doc["t"] == 3 and doc["dim"] == 5
    assert len(doc["generators"]) == 5
    code, out, _ = run_cli(["catalog", "n2_sl2"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["action"]) == 3
    code, out, _ = run_cli(["catalog", "sl3"])
    assert code == 0
    assert json.loads(out)["dim"] == 8
    code, out, _ = run_cli(["catalog", "L1(2)"])
    assert code == 0
    assert json.loads(out)["dim"] == 12


def test_catalog_unknown_name():
    code, _, err = run_cli(["catalog", "zzz"])
    assert code == 1
    assert "unknown" in err


def test_malformed_json_is_domain_error():
    code, _, err = run_cli(["adjoints", "-"], stdin_text="{not json")
    assert code == 1
    assert "malformed JSON" in err


def test_antisymmetry_violation_reported():
    doc = {
        "dim": 2,
        "brackets": [
            {"i": 0, "j": 1, "v": ["1", "0"]},
            {"i": 1, "j": 0, "v": ["1", "0"]},
        ],
    }
    code, _, err = run_cli(["adjoints", "-"], stdin_text=json.dumps(doc))
    assert code == 1
    assert "antisymmetry" in err and "(0, 1)" in err


def test_dangling_index_is_schema_error():
    doc = {"dim": 2, "brackets": [{"i": 0, "j": 5, "v": ["0", "0"]}]}
    code, _, err = run_cli(["adjoints", "-"], stdin_text=json.dumps(doc))
    assert code == 1
    assert "out of range" in err


def test_usage_error_exit_code():
    code, _, _ = run_cli([])
    assert code == 2
    code, _, _ = run_cli(["no-such-verb"])
    assert code == 2


def test_verify_file():
    _, out, _ = run_cli(["catalog", "n2"])
    code, report, _ = run_cli(["verify", "-"], stdin_text=out)
    assert code == 0
    assert "lie checks ok" in report
    assert "form ok" in report


def test_adjoints_and_derivation_verbs():
    _, doc, _ = run_cli(["catalog", "n2"])
    code, out, _ = run_cli(["adjoints", "-"], stdin_text=doc)
    assert code == 0
    assert len(json.loads(out)["adjoints"]) == 5
    code, out, _ = run_cli(["derivations", "-"], stdin_text=doc)
    assert code == 0
    assert len(json.loads(out)["basis"]) == 10
    code, out, _ = run_cli(["inner-derivations", "-"], stdin_text=doc)
    assert code == 0
    assert len(json.loads(out)["basis"]) == 3
    code, out, _ = run_cli(["invariant-forms", "-"], stdin_text=doc)
    assert code == 0
    assert json.loads(out)["algebra_dim"] == 5


def test_skew_requires_form():
    doc = {"dim": 2, "brackets": []}
    code, _, err = run_cli(["skew-derivations", "-"], stdin_text=json.dumps(doc))
    assert code == 1
    assert "form" in err


def test_quotient_verb(ideal_entries):
    entry = ideal_entries["I1"]
    from quadlie.freenilp import free_nilpotent

    free, _ = free_nilpotent(2, 5)
    doc = jsonio.algebra_to_doc(free)
    doc["ideal"] = [jsonio.vector_to_json(r) for r in entry.subspace.basis.rows]
    code, out, _ = run_cli(["quotient", "-"], stdin_text=json.dumps(doc))
    assert code == 0
    assert json.loads(out)["dim"] == 7


def test_quotient_derivations_verb():
    code, out, _ = run_cli(["quotient-derivations", "2", "5", "--ideal", "I1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 7
    assert len(doc["basis"]) == 12
    code, _, err = run_cli(["quotient-derivations", "3", "3", "--ideal", "I1"])
    assert code == 1
    assert "lives in" in err


def test_quotient_derivations_from_bracket_expressions():
    # Same ideal given in bracket notation instead of coordinates.
    _, listing, _ = run_cli(["catalog", "I1"])
    generators = json.loads(listing)["generators"]
    doc = json.dumps({"generators": generators})
    code, out, _ = run_cli(
        ["quotient-derivations", "2", "5", "--ideal-file", "-"], stdin_text=doc
    )
    assert code == 0
    reference = run_cli(["quotient-derivations", "2", "5", "--ideal", "I1"])[1]
    assert out == reference


def test_recover_ideal_verb():
    _, doc, _ = run_cli(["catalog", "n3"])
    code, out, _ = run_cli(["recover-ideal", "-"], stdin_text=doc)
    assert code == 0
    result = json.loads(out)
    assert result["d"] == 2 and result["t"] == 5
    assert len(result["ideal_basis"]) == 7
    assert len(result["generators"]) == 2


def test_double_extend_verb():
    entry = catalog.nilpotent("n2")
    B, action = catalog.levi_action("n2_sl2")
    doc = {
        "base": jsonio.algebra_to_doc(entry.algebra, entry.form),
        "extender": jsonio.algebra_to_doc(B),
        "action": [jsonio.matrix_to_json(m) for m in action],
    }
    code, out, _ = run_cli(["double-extend", "-"], stdin_text=json.dumps(doc))
    assert code == 0
    result = json.loads(out)
    assert result["dim"] == 11
    assert result["blocks"] == {"B": [0, 3], "L": [3, 8], "Bdual": [8, 11]}


def test_reconstruct_verb(extensions):
    ext = extensions["sl2_n23"]
    doc = jsonio.algebra_to_doc(ext.algebra, ext.form)
    doc["levi"] = [
        jsonio.vector_to_json(r) for r in ext.block_subspace("b").basis.rows
    ]
    code, out, _ = run_cli(["reconstruct", "-"], stdin_text=json.dumps(doc))
    assert code == 0
    result = json.loads(out)
    assert result["isometry_ok"] is True
    assert result["extension"]["dim"] == 11


def test_byte_determinism():
    for argv in (["catalog", "n6"], ["hall-basis", "3", "3"], ["catalog", "I2"]):
        runs = {run_cli(argv) for _ in range(2)}
        assert len(runs) == 1


def test_text_formats_render():
    for argv in (
        ["catalog", "n2", "--format", "text"],
        ["catalog", "I1", "--format", "text"],
        ["hall-basis", "2", "3", "--format", "text"],
    ):
        code, out, _ = run_cli(argv)
        assert code == 0
        assert out.strip()
