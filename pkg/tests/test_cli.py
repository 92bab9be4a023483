import json
import pathlib

import graphmeasure.cli as cli

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def fx(name: str) -> str:
    return str(FIXTURES / name)


def run_json(capsys, argv):
    code = cli.run(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_info(capsys):
    code, payload = run_json(capsys, ["info", fx("tree.graph")])
    assert code == 0
    assert payload["universe_size"] == 9
    assert payload["total_measure"] == "8"
    assert payload["bounded"] is True


def test_enumerate(capsys):
    code, payload = run_json(capsys, ["enumerate", fx("tree.graph")])
    assert code == 0
    words = [row["word"] for row in payload["elements"]]
    assert words == [
        "v1", "v2", "v3", "e1", "e1^-1", "e2", "e2^-1", "e1^-1.e2", "e2^-1.e1"
    ]


def test_measure_set(capsys):
    code, payload = run_json(
        capsys,
        [
            "measure",
            fx("tree.graph"),
            "--set",
            "{e1,e2,e1^-1,e2^-1}",
            "--space",
            "reduced-diagram",
        ],
    )
    assert code == 0
    assert payload["measure"] == "4"


def test_integrate_monomial_with_errata_annotation(capsys):
    code, payload = run_json(
        capsys, ["integrate", fx("tree.graph"), "--monomial", "1"]
    )
    assert code == 0
    assert payload["integral"] == "40"
    assert any("paper_errata" in note for note in payload["annotations"])
    code, payload = run_json(
        capsys, ["integrate", fx("tree.graph"), "--monomial", "2"]
    )
    assert payload["integral"] == "16"
    assert any("paper_errata" in note for note in payload["annotations"])


def test_integrate_poly_and_trig(capsys):
    code, payload = run_json(
        capsys, ["integrate", fx("tree.graph"), "--poly", "1,1,1,1"]
    )
    assert code == 0
    assert payload["integral"] == "80"
    assert any("paper_errata" in note for note in payload["annotations"])
    code, payload = run_json(
        capsys, ["integrate", fx("tree.graph"), "--trig=-2:1,1,1,1,1"]
    )
    assert code == 0
    assert payload["integral"] == "120"
    assert any("paper_errata" in note for note in payload["annotations"])


def test_integrate_set_no_annotation_on_other_graph(capsys):
    code, payload = run_json(
        capsys, ["integrate", fx("triangle.graph"), "--monomial", "1"]
    )
    assert code == 0
    assert payload["annotations"] == []


def test_compare(capsys):
    code, payload = run_json(
        capsys,
        ["compare", fx("c3.graph"), fx("c3-variant.graph"), "--max-len", "3"],
    )
    assert code == 0
    assert payload["verdict"] == "not-equivalent"
    code, payload = run_json(
        capsys,
        ["compare", fx("c3.graph"), fx("triangle.graph"), "--max-len", "3"],
    )
    assert payload["verdict"] == "equivalent"


def test_fingerprint(capsys):
    code, payload = run_json(capsys, ["fingerprint", fx("tree.graph")])
    assert code == 0
    assert payload["total_reduced_measure"] == "8"
    assert payload["element_integrals"] == ["4"] * 7 + ["6"] * 2


def test_exit_code_parse_error(capsys):
    assert cli.run(["info", "/nonexistent/path.graph"]) == 1
    assert cli.run(["bogus-subcommand"]) == 1
    assert cli.run(["measure", fx("tree.graph"), "--set", "{e9}"]) == 1


def test_exit_code_domain_error(capsys):
    # a word outside the requested universe is a domain error
    code = cli.run(
        [
            "measure",
            fx("g2.graph"),
            "--set",
            "{l1.l1^-1}",
            "--space",
            "reduced-diagram",
        ]
    )
    assert code == 2


def test_deterministic_output(capsys):
    argv = ["enumerate", fx("triangle.graph"), "--json"]
    assert cli.run(argv) == 0
    first = capsys.readouterr().out
    assert cli.run(argv) == 0
    second = capsys.readouterr().out
    assert first == second


def test_table_output(capsys):
    assert cli.run(["measure", fx("tree.graph"), "--set", "{e1}"]) == 0
    assert capsys.readouterr().out.strip() == "1"
