import json

from bmsdecode.cli import EXIT_DECODE_FAILURE, EXIT_INVALID, EXIT_OK, main
from bmsdecode.code import random_codeword
from bmsdecode.io import load_code, read_word, write_word
from bmsdecode.poly2 import parse_word

from conftest import CONFIGS, GOLDEN, ROOT

EXAMPLE = str(CONFIGS / "worked_example.json")
RECV = str(GOLDEN / "example_recv.txt")


def _fields(out):
    return dict(line.split("\t", 1) for line in out.splitlines() if "\t" in line)


def test_make_code_example(capsys, tmp_path):
    assert main(["make-code", EXAMPLE, "-o", str(tmp_path / "c.json")]) == EXIT_OK
    f = _fields(capsys.readouterr().out)
    assert f["bounds"] == "[5, 15]" and f["defining_set_size"] == "25"
    assert f["hyperbolic_like"] == "tau + B_5 is contained in D"
    assert int(f["dimension"]) == 50 and int(f["t"]) == 2
    assert load_code(tmp_path / "c.json") == load_code(EXAMPLE)


def test_make_code_invalid(capsys):
    assert main(["make-code", str(CONFIGS / "invalid_missing_orbit.json")]) == EXIT_INVALID
    err = capsys.readouterr().err
    assert err.startswith("error:") and "(0,1)" in err.replace(" ", "")


def test_make_code_delta_zero_warns(capsys):
    assert main(["make-code", str(CONFIGS / "gf2_3x5_no_delta.json")]) == EXIT_OK
    assert "warning" in capsys.readouterr().err


def test_decode_trace_matches_table(capsys):
    assert main(["decode", EXAMPLE, RECV, "--t", "2", "--trace"]) == EXIT_OK
    out = capsys.readouterr().out
    head, trace = out.split("\n\n", 1)
    f = _fields(head)
    assert f["status"] == "corrected"
    assert f["error"] == "X1^2*X2^2 + X2"
    assert trace == (GOLDEN / "example_lex_trace.txt").read_text()


def test_decode_codeword(capsys, tmp_path):
    code = load_code(EXAMPLE)
    c = random_codeword(code, 3)
    p = tmp_path / "c.txt"
    write_word(c, p)
    assert main(["decode", EXAMPLE, str(p)]) == EXIT_OK
    assert _fields(capsys.readouterr().out)["status"] == "no-error"


def test_decode_weight_three_fails(capsys):
    # this pattern is known to be flagged rather than miscorrected
    rc = main(["decode", EXAMPLE, str(GOLDEN / "example_weight3.txt"), "--t", "2", "--no-retry"])
    out = capsys.readouterr().out
    assert rc == EXIT_DECODE_FAILURE
    assert _fields(out)["status"] == "failure"


def test_decode_graded_retry(capsys, tmp_path):
    j = tmp_path / "trace.json"
    assert main(["decode", EXAMPLE, RECV, "--order", "graded", "--trace-json", str(j)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "attempt\tgraded\tfailure" in out
    assert json.loads(j.read_text())[0]["l"] is None
    assert main(["decode", EXAMPLE, RECV, "--order", "graded", "--no-retry"]) == EXIT_DECODE_FAILURE


def test_syndromes_matrix(capsys):
    assert main(["syndromes", EXAMPLE, RECV, "--t", "2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == (GOLDEN / "example_b5_matrix.txt").read_text().strip()


def test_encode_corrupt(capsys, tmp_path):
    cw, rw = tmp_path / "c.txt", tmp_path / "r.txt"
    assert main(["encode", EXAMPLE, "--seed", "4", "-o", str(cw)]) == EXIT_OK
    assert main(["corrupt", EXAMPLE, str(cw), "--weight", "2", "--seed", "4", "-o", str(rw)]) == EXIT_OK
    capsys.readouterr()
    assert main(["decode", EXAMPLE, str(rw)]) == EXIT_OK
    f = _fields(capsys.readouterr().out)
    code = load_code(EXAMPLE)
    assert parse_word(f["corrected"], code.field, code.bounds) == read_word(cw, code)


def test_experiment_outputs(capsys, tmp_path):
    outs = []
    for k in range(2):
        d = tmp_path / f"run{k}"
        args = ["experiment", str(CONFIGS / "gf4_5x5_t2.json"), "--trials", "20", "--seed", "3",
                "--out", str(d)]
        assert main(args) == EXIT_OK
        outs.append(d)
    text = capsys.readouterr().out
    assert "lex" in text and "graded" in text
    names = {"report.txt", "trials.tsv", "summary.tsv", "summary.png", "weights.png",
             "discrepancies_lex.png", "discrepancies_graded.png", "footprint_lex.png",
             "footprint_graded.png"}
    assert {p.name for p in outs[0].iterdir()} == names
    for n in names:
        assert (outs[0] / n).read_bytes() == (outs[1] / n).read_bytes(), n
    assert (outs[0] / "summary.png").read_bytes()[:4] == b"\x89PNG"


def test_experiment_rejects_t_zero(capsys):
    assert main(["experiment", str(CONFIGS / "gf2_3x5_no_delta.json"), "--trials", "2"]) == EXIT_INVALID


def test_reports_match_committed_docs(tmp_path):
    out = tmp_path / "conv.md"
    assert main(["convention-search", "-o", str(out)]) == EXIT_OK
    assert out.read_text() == (ROOT / "docs" / "root_convention.md").read_text()
