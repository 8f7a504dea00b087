import contextlib
import io
import json
import pathlib

import pytest

from chipfire.cli import EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, main
from tests.golden_cases import CASES

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run_cli(argv):
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = main(argv)
    return code, buffer.getvalue()


@pytest.mark.parametrize("name,argv", CASES, ids=[c[0] for c in CASES])
def test_golden_outputs_byte_exact(name, argv):
    code, out = run_cli(argv)
    assert code == EXIT_OK
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_outputs_deterministic():
    _, first = run_cli(["hilbert", "-i", "1", "example:tetrahedron"])
    _, second = run_cli(["hilbert", "-i", "1", "example:tetrahedron"])
    assert first == second


def test_expect_winnable_exit_code():
    code, out = run_cli(
        ["winnable", "-i", "1", "--chain", "[1,-1,1,0,0,0]",
         "example:tetrahedron", "--expect-winnable"]
    )
    assert code == EXIT_NEGATIVE
    assert json.loads(out)["winnable"] is False
    code, _ = run_cli(
        ["winnable", "-i", "1", "--chain", "[1,-1,1,0,0,0]",
         "example:tetrahedron", "--expect-unwinnable"]
    )
    assert code == EXIT_OK


def test_winnable_certificate_fields():
    code, out = run_cli(
        ["winnable", "-i", "1", "--chain", "[-1,2,-3,2,-1]", "example:diamond"]
    )
    payload = json.loads(out)
    assert payload["winnable"] is True
    cert = payload["certificate"]
    assert all(v >= 0 for v in cert["winning_chain"])
    assert len(cert["firing_vector"]) == 5


def test_input_errors_exit_2(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "missing.json")]) == EXIT_INPUT
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["analyze", str(bad)]) == EXIT_INPUT
    dup = tmp_path / "dup.json"
    dup.write_text('{"facets": [[1,2,3],[3,2,1]]}')
    assert main(["analyze", str(dup)]) == EXIT_INPUT
    assert main(["bogus-subcommand"]) == EXIT_INPUT
    capsys.readouterr()


def test_file_and_example_agree(tmp_path):
    from chipfire import corpus, jsonio

    doc = corpus.document_as_json("diamond")
    path = tmp_path / "diamond.json"
    path.write_text(jsonio.dumps(doc))
    _, via_file = run_cli(["hilbert", "-i", "1", str(path)])
    _, via_example = run_cli(["hilbert", "-i", "1", "example:diamond"])
    assert via_file == via_example


def test_chain_from_file(tmp_path):
    chain = tmp_path / "chain.json"
    chain.write_text("[-1, 2, -3, 2, -1]")
    code, out = run_cli(
        ["winnable", "-i", "1", "--chain", str(chain), "example:diamond"]
    )
    assert code == EXIT_OK
    assert json.loads(out)["winnable"] is True


def test_chain_embedded_in_file():
    code, out = run_cli(["winnable", "-i", "1", "example:diamond"])
    assert code == EXIT_OK
    assert json.loads(out)["winnable"] is True


def test_pretty_output_runs():
    code, out = run_cli(["forests", "-i", "2", "example:tetrahedron", "--pretty"])
    assert code == EXIT_OK
    assert "tau_2 = 4" in out


def test_data_files_match_corpus():
    from chipfire import corpus

    for name in corpus.names():
        doc = corpus.load_data_file(name)
        assert doc.complex == corpus.complex_named(name)
        expected = corpus.document_named(name)
        assert doc.chain == expected.chain


def test_relative_homology_via_cli(tmp_path):
    rel = tmp_path / "boundary.json"
    rel.write_text('{"facets": [[1,2],[1,3],[2,3],[4,5],[4,6],[5,6]]}')
    code, out = run_cli(
        ["homology", "-i", "2", "--variant", "relative", "--rel", str(rel),
         "example:annulus"]
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["free_rank"] == 1 and payload["torsion"] == []


def test_rays_only_flag():
    code, out = run_cli(["hilbert", "-i", "1", "--rays-only", "example:tetrahedron"])
    assert code == EXIT_OK
    rows = json.loads(out)
    assert len(rows) == 3  # every basis element is extreme here
    code, out = run_cli(
        ["degree", "-i", "1", "--rays-only", "--chain", "[0,0,0,1,-1,1]",
         "example:staco"]
    )
    assert code == EXIT_OK


def test_critgroup_reps_flag():
    code, out = run_cli(["critgroup", "-i", "1", "--reps", "example:tetrahedron"])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert len(payload["torsion_representatives"]) == 4
    assert payload["torsion_representatives"][0] == [0, 0, 0, 0, 0, 0]
