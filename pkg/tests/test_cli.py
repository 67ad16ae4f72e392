import json

from shsym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_basis_text(capsys):
    code, out, _ = run(capsys, "basis", "4")
    assert code == 0
    assert out.strip() == "(4): 27/4*Q2^2 + 27/2*Q4"


def test_basis_empty_weight(capsys):
    code, out, _ = run(capsys, "basis", "2")
    assert code == 0
    assert out.strip() == ""


def test_basis_json_weight_nine(capsys):
    code, out, _ = run(capsys, "basis", "9", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [row["lambda"] for row in rows] == [[9], [6, 3], [5, 4], [3, 3, 3]]
    for row in rows:
        for term in row["h"]:
            assert set(term) == {"coeff", "monomial"}
            assert all(isinstance(k, str) for k in term["monomial"])


def test_basis_min_part_flag(capsys):
    code, out, _ = run(capsys, "basis", "4", "--min-part", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("(4):")
    assert lines[1].startswith("(2,2):")


def test_basis_latex(capsys):
    code, out, _ = run(capsys, "basis", "4", "--format", "latex")
    assert code == 0
    assert out.splitlines() == [
        r"\begin{array}{ll}",
        r"\lambda & h_\lambda \\ \hline",
        r"(4) & \frac{27}{4} Q_2^2 + \frac{27}{2} Q_4 \\",
        r"\end{array}",
    ]


def test_qbracket_even(capsys):
    code, out, _ = run(capsys, "qbracket", "27/4*Q2^2 + 27/2*Q4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("series: 9/320 + ")
    assert lines[-1] == "9/320*Q"


def test_qbracket_q2(capsys):
    code, out, _ = run(capsys, "qbracket", "Q2")
    assert code == 0
    assert out.strip().splitlines()[-1] == "-1/24*P"


def test_qbracket_odd_is_zero(capsys):
    code, out, _ = run(capsys, "qbracket", "Q3")
    assert code == 0
    assert out.strip().splitlines()[-1] == "0"


def test_qbracket_mixed_weights_without_weight_flag(capsys):
    code, out, _ = run(capsys, "qbracket", "1 + Q2")
    assert code == 0
    assert out.strip().splitlines()[-1] == "-1/24*P + 1"


def test_qbracket_explicit_weight(capsys):
    code, out, _ = run(capsys, "qbracket", "Q2", "--weight", "2")
    assert code == 0
    assert out.strip().splitlines()[-1] == "-1/24*P"


def test_qbracket_json(capsys):
    code, out, _ = run(capsys, "qbracket", "Q2", "--format", "json", "-N", "12")
    assert code == 0
    payload = json.loads(out)
    assert payload["series"]["order"] == 12
    assert payload["series"]["coefficients"][0] == "-1/24"
    assert payload["q_bracket"] == [{"coeff": "-1/24", "P": 1, "Q": 0, "R": 0}]


def test_qbracket_insufficient_order(capsys):
    code, _, err = run(capsys, "qbracket", "Q2", "-N", "5")
    assert code == 1
    assert "insufficient order" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "qbracket", "Q3^(1/2)")
    assert code == 2
    assert "parse error" in err


def test_decompose_text(capsys):
    code, out, _ = run(capsys, "decompose", "Q4")
    assert code == 0
    assert out.splitlines() == [
        "h0: 1/2*Q2^2 + Q4   [harmonic]",
        "h1: 0   [harmonic]",
        "h2: -1/2   [harmonic]",
        "depth: 2",
    ]


def test_decompose_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("Q2^2"))
    code, out, _ = run(capsys, "decompose")
    assert code == 0
    assert out.splitlines()[-1] == "depth: 2"


def test_decompose_rejects_q1(capsys):
    code, _, err = run(capsys, "decompose", "Q1*Q2")
    assert code == 2
    assert "error" in err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "Q2^2", "(1)")
    assert code == 0
    assert out.strip() == "529/576"


def test_eval_empty_partition(capsys):
    code, out, _ = run(capsys, "eval", "Q2", "()")
    assert code == 0
    assert out.strip() == "-1/24"


def test_recognize(capsys):
    coeffs = " ".join(str(c) for c in (1, -24, -72, -96, -168, -144, -288,
                                       -192, -360, -312, -432, -288, -672))
    code, out, _ = run(capsys, "recognize", coeffs, "--weight", "2")
    assert code == 0
    assert out.strip() == "P"


def test_recognize_failure(capsys):
    coeffs = " ".join(str(c) for c in (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77))
    code, _, err = run(capsys, "recognize", coeffs, "--weight", "2")
    assert code == 1
    assert "not quasimodular" in err


def test_tables_text(capsys):
    code, out, _ = run(capsys, "tables", "--max-weight", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "()\t1\t1"
    assert lines[1] == "(3)\t-9/4*Q3\t0"
    assert lines[2] == "(4)\t27/4*Q2^2 + 27/2*Q4\t9/320*Q"


def test_tables_json_schema(capsys):
    code, out, _ = run(capsys, "tables", "--max-weight", "4", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[2]["lambda"] == [4]
    assert rows[2]["h"] == [
        {"coeff": "27/4", "monomial": {"2": 2}},
        {"coeff": "27/2", "monomial": {"4": 1}},
    ]
    assert rows[2]["q_bracket"] == [{"coeff": "9/320", "P": 0, "Q": 1, "R": 0}]
    assert rows[1]["q_bracket"] == []


def test_tables_latex_golden(capsys):
    code, out, _ = run(capsys, "tables", "--max-weight", "4", "--format", "latex")
    assert code == 0
    assert out.splitlines() == [
        r"\begin{array}{lll}",
        r"\lambda & h_\lambda & \langle h_\lambda\rangle_q \\ \hline",
        r"() & 1 & 1 \\",
        r"(3) & -\frac{9}{4} Q_3 & 0 \\",
        r"(4) & \frac{27}{4} Q_2^2 + \frac{27}{2} Q_4 & \frac{9}{320} Q \\",
        r"\end{array}",
    ]


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "tables", "--max-weight", "6")
    _, second, _ = run(capsys, "tables", "--max-weight", "6")
    assert first == second


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-weight", "4", "-N", "20")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("[PASS]") for line in lines)


def test_verify_insufficient_order_fails(capsys):
    code, out, _ = run(capsys, "verify", "--max-weight", "6", "-N", "5")
    assert code == 1
    assert "[FAIL]" in out
    assert "insufficient order" in out.lower()


def test_tables_latex_weight10_byte_golden(capsys):
    from pathlib import Path

    golden = Path(__file__).parent / "data" / "tables_weight10.tex"
    code, out, _ = run(capsys, "tables", "--max-weight", "10", "--format", "latex")
    assert code == 0
    assert out == golden.read_text()


def test_verify_is_deterministic():
    import io

    from shsym.verify import run_all

    first, second = io.StringIO(), io.StringIO()
    assert run_all(max_weight=3, order=20, out=first)
    assert run_all(max_weight=3, order=20, out=second)
    assert first.getvalue() == second.getvalue()


def test_tables_min_part_flag(capsys):
    code, out, _ = run(capsys, "tables", "--max-weight", "4", "--min-part", "2")
    assert code == 0
    lines = out.strip().splitlines()
    labels = [line.split("\t")[0] for line in lines]
    assert labels == ["()", "(2)", "(3)", "(4)", "(2,2)"]
    # small-part rows give the zero element, matching the parts >= 3 indexing
    assert lines[1] == "(2)\t0\t0"
    assert lines[4] == "(2,2)\t0\t0"


def test_recognize_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("1, 240, 2160, 6720, 17520, "
                                                 "30240, 60480, 82560, 140400, "
                                                 "181680, 272160, 319680"))
    code, out, _ = run(capsys, "recognize", "--weight", "4")
    assert code == 0
    assert out.strip() == "Q"


def test_qbracket_odd_weight_flag(capsys):
    code, out, _ = run(capsys, "qbracket", "Q3", "--weight", "3")
    assert code == 0
    assert out.strip().splitlines()[-1] == "0"


def test_qbracket_latex_form(capsys):
    code, out, _ = run(capsys, "qbracket", "27/4*Q2^2 + 27/2*Q4", "--format", "latex")
    assert code == 0
    assert out.strip().splitlines()[-1] == r"\frac{9}{320} Q"
