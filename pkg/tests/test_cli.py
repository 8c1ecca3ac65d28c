import json

import pytest
from hypothesis import given, strategies as st

from qndom.cli import main
from qndom.witness import (
    WitnessFormatError,
    format_witness,
    parse_witness,
    vertex_to_bits,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write(path, text):
    path.write_text(text)
    return str(path)


class TestWitnessFormat:
    def test_bit_order(self):
        # leftmost character is coordinate 1: (2,3) in Q_4
        assert vertex_to_bits(0b0110, 4) == "0110"
        assert vertex_to_bits(0b0001, 4) == "1000"

    def test_parse(self):
        n, masks = parse_witness("# qn-domset v1 n=3\n# a comment\n000\n111\n\n")
        assert n == 3 and masks == [0, 7]

    @pytest.mark.parametrize("text", [
        "000\n111\n",                      # no header
        "# qn-domset v1 n=3\n00\n",        # short line
        "# qn-domset v1 n=3\n0a0\n",       # bad character
        "# qn-domset v1 n=3\n000\n000\n",  # duplicate
        "",
    ])
    def test_malformed(self, text):
        with pytest.raises(WitnessFormatError):
            parse_witness(text)

    @given(st.integers(1, 8).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.integers(0, (1 << n) - 1)))))
    def test_round_trip(self, nm):
        n, masks = nm
        assert parse_witness(format_witness(n, masks)) == (n, sorted(masks))


class TestVerify:
    def test_perfect_code(self, tmp_path, capsys):
        f = write(tmp_path / "p3.txt", "# qn-domset v1 n=3\n000\n111\n")
        code, out = run(capsys, "verify", f)
        doc = json.loads(out)
        assert code == 0
        assert doc["excess"]["histogram"] == {"0": 8} and doc["excess"]["identity_holds"]

    def test_non_dominating(self, tmp_path, capsys):
        f = write(tmp_path / "q2.txt", "# qn-domset v1 n=2\n00\n")
        code, out = run(capsys, "verify", f)
        assert code == 1 and json.loads(out)["dominating"] is False

    def test_duplicate_is_malformed(self, tmp_path, capsys):
        f = write(tmp_path / "dup.txt", "# qn-domset v1 n=2\n00\n00\n11\n")
        assert run(capsys, "verify", f)[0] == 2

    def test_missing_file(self, tmp_path, capsys):
        assert run(capsys, "verify", str(tmp_path / "nope.txt"))[0] == 2

    def test_dimension_cap(self, tmp_path, capsys):
        f = write(tmp_path / "p3.txt", "# qn-domset v1 n=3\n000\n111\n")
        assert run(capsys, "verify", f, "--max-dim", "2")[0] == 2


class TestAnalyze:
    @pytest.fixture
    def w6(self, tmp_path, witness6):
        return write(tmp_path / "w6.txt", format_witness(6, witness6))

    @pytest.fixture
    def w12(self, tmp_path, witness12):
        return write(tmp_path / "w12.txt", format_witness(12, witness12))

    def test_congruence_q6(self, w6, capsys):
        code, out = run(capsys, "analyze", w6, "--checks", "congruence")
        doc = json.loads(out)
        assert code == 0
        assert doc["congruence"]["parity_violations"] == []
        assert doc["congruence"]["mod3_violations"] == []
        assert "lemmas" not in doc and "zeta" not in doc

    def test_lemmas_q6_skips_4_and_5(self, w6, capsys):
        code, out = run(capsys, "analyze", w6, "--checks", "lemmas")
        lem = json.loads(out)["lemmas"]
        assert code == 0
        for k in (1, 2, 3):
            assert lem[f"lemma{k}"]["violations"] == []
            assert "vacuity" in lem[f"lemma{k}"]
        for k in (4, 5):
            assert lem[f"lemma{k}"]["status"].startswith("skipped: precondition")

    def test_all_checks_q12(self, w12, capsys):
        code, out = run(capsys, "analyze", w12)
        doc = json.loads(out)
        assert code == 0
        assert doc["zeta"]["m1"] == doc["zeta"]["m2"] == doc["zeta"]["total"]
        assert doc["lemmas"]["lemma4"]["slack_x2"] >= 0
        assert doc["lemmas"]["lemma5"]["slack_x2"] >= 0

    def test_perfect_code_skips_congruence(self, tmp_path, capsys):
        f = write(tmp_path / "p3.txt", "# qn-domset v1 n=3\n000\n111\n")
        code, out = run(capsys, "analyze", f)
        doc = json.loads(out)
        assert code == 0
        assert doc["congruence"]["status"].startswith("skipped")
        assert doc["zeta"] == {"total": -6, "m1": -6, "m2": -6, "max": -6}

    def test_congruence_and_lemmas_commands(self, w6, capsys, tmp_path):
        out_path = tmp_path / "r.json"
        assert run(capsys, "congruence", w6, "--out", str(out_path))[0] == 0
        assert json.loads(out_path.read_text())["command"] == "congruence"
        code, out = run(capsys, "lemmas", w6, "--only", "2,3")
        assert code == 0 and set(json.loads(out)["lemmas"]) == {"lemma2", "lemma3"}

    def test_unknown_check(self, w6, capsys):
        assert run(capsys, "analyze", w6, "--checks", "bogus")[0] == 2


class TestBoundsCommand:
    def test_json(self, capsys):
        code, out = run(capsys, "bounds", "--from", "12", "--to", "12", "--format", "json")
        row = json.loads(out)["bounds"][0]
        assert code == 0 and row["theorem2"]["ceiling"] == 348 and row["best_lower"] == 348

    def test_text(self, capsys):
        code, out = run(capsys, "bounds", "--from", "6", "--to", "7")
        assert code == 0 and len(out.strip().splitlines()) == 3

    def test_bad_range(self, capsys):
        assert run(capsys, "bounds", "--from", "9", "--to", "3")[0] == 2


class TestConstructAndSolve:
    def test_hamming_then_verify(self, tmp_path, capsys):
        f = str(tmp_path / "h.txt")
        assert run(capsys, "construct", "hamming", "--r", "3", "--out", f)[0] == 0
        code, out = run(capsys, "verify", f)
        doc = json.loads(out)
        assert code == 0 and doc["set_size"] == 16 and doc["excess"]["total"] == 0

    def test_double_and_greedy(self, tmp_path, capsys):
        h = str(tmp_path / "h.txt")
        d = str(tmp_path / "d.txt")
        run(capsys, "construct", "hamming", "--r", "2", "--out", h)
        assert run(capsys, "construct", "double", "--in", h, "--times", "2", "--out", d)[0] == 0
        n, masks = parse_witness(open(d).read())
        assert n == 5 and len(masks) == 8
        code, out = run(capsys, "construct", "greedy", "--n", "4")
        assert code == 0 and parse_witness(out) == (4, [0, 7, 8, 15])

    def test_solve_q6(self, tmp_path, capsys):
        w = tmp_path / "s6.txt"
        code, out = run(capsys, "solve", "--n", "6", "--witness", str(w))
        doc = json.loads(out)
        assert code == 0
        assert doc["solver"]["optimum"] == 12 and doc["solver"]["proven_optimal"]
        n, masks = parse_witness(w.read_text())
        assert n == 6 and len(masks) == 12
        assert run(capsys, "verify", str(w))[0] == 0

    def test_solve_bad_n(self, capsys):
        assert run(capsys, "solve", "--n", "12")[0] == 2

    def test_reports_deterministic(self, tmp_path, capsys):
        f = write(tmp_path / "p7.txt", "")
        run(capsys, "construct", "hamming", "--r", "3", "--out", f)
        a = run(capsys, "analyze", f)[1]
        b = run(capsys, "analyze", f)[1]
        assert a == b
