import io
import random

import pytest
from hypothesis import given, settings, strategies as st

from gebr import arrayfile
from gebr.cli import main, sweep_rows
from gebr.code import ArrayCodeword, GebrParams
from gebr.ring import BitPoly, unlift

import fixtures


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


@pytest.fixture
def ex2_file(tmp_path):
    path = tmp_path / "ex2.gebr"
    arrayfile.write(path, fixtures.ex2())
    return path


@pytest.fixture
def ex4_file(tmp_path):
    path = tmp_path / "ex4.gebr"
    arrayfile.write(path, fixtures.ex4())
    return path


class TestArrayFile:
    def test_render_example_2(self):
        text = arrayfile.render(fixtures.ex2())
        assert text == "GEBR 6 3 2\n" + "\n".join(fixtures.EX2_ROWS) + "\n"

    def test_erased_columns(self):
        text = arrayfile.render(fixtures.ex2().puncture([0, 3]))
        assert text.splitlines()[1] == "?10?00"
        assert arrayfile.parse(text).erased == {0, 3}

    @pytest.mark.parametrize("text", [
        "", "GEBR 6 3\n", "GEBX 6 3 2\n", "GEBR 6 4 2\n" + "000000\n" * 6,
        "GEBR 6 3 2\n" + "000000\n" * 5, "GEBR 6 3 2\n" + "00000\n" * 6,
        "GEBR 6 3 2\n" + "00200\n0\n" * 3, "GEBR 6 3 2\n" + "?00000\n" * 5 + "000000\n",
        "GEBR 6 3 2\n" + "000000 \n" * 6,
    ])
    def test_parse_errors(self, text):
        with pytest.raises(arrayfile.ArrayFileError):
            arrayfile.parse(text)

    @settings(max_examples=60)
    @given(st.data())
    def test_round_trip(self, data):
        n, p = data.draw(st.sampled_from([(6, 3), (6, 2), (9, 3), (10, 5), (4, 2)]))
        r = data.draw(st.integers(2, n - 1))
        params = GebrParams(n, p, r)
        cols = [BitPoly(n, data.draw(st.integers(0, (1 << n) - 1))) for _ in range(n)]
        erased = data.draw(st.sets(st.integers(0, n - 1)))
        a = ArrayCodeword(params, cols).puncture(erased)
        assert arrayfile.parse(arrayfile.render(a)) == a


class TestCheck:
    def test_codeword(self, ex2_file):
        code, out = run("check", ex2_file)
        assert code == 0 and "ok" in out

    def test_flipped(self, tmp_path):
        rows = [list(map(int, row)) for row in fixtures.EX2_ROWS]
        rows[0][0] ^= 1
        path = tmp_path / "bad.gebr"
        arrayfile.write(path, ArrayCodeword.from_rows(fixtures.GEBR_6_3_2, rows))
        code, out = run("check", path)
        assert code == 1
        assert "slope 0 line 0: odd parity" in out

    def test_zeros(self, tmp_path):
        path = tmp_path / "z.gebr"
        path.write_text("GEBR 6 3 2\n" + "000000\n" * 6)
        assert run("check", path)[0] == 0

    def test_parse_error(self, tmp_path):
        path = tmp_path / "junk.gebr"
        path.write_text("hello\n")
        assert run("check", path)[0] == 2

    def test_missing_file(self, tmp_path):
        assert run("check", tmp_path / "nope")[0] == 2

    def test_erased_rejected(self, tmp_path):
        path = tmp_path / "e.gebr"
        arrayfile.write(path, fixtures.ex2().puncture([1]))
        assert run("check", path)[0] == 2


class TestDecode:
    def test_mds_recovers(self, ex4_file):
        code, out = run("decode", ex4_file, "--erased", "0,4,8")
        assert code == 0
        assert out == ex4_file.read_text()

    def test_mask_from_file(self, tmp_path):
        path = tmp_path / "p.gebr"
        arrayfile.write(path, fixtures.ex4().puncture([1, 2]))
        dest = tmp_path / "out.gebr"
        assert run("decode", path, "-o", dest)[0] == 0
        assert arrayfile.read(dest) == fixtures.ex4()

    def test_ambiguous(self, ex2_file, tmp_path):
        base = tmp_path / "sol"
        code, out = run("decode", ex2_file, "--erased", "0,3", "-o", base)
        assert code == 3
        written = sorted(tmp_path.glob("sol.*"))
        assert 2 <= len(written) <= 16
        sols = {arrayfile.read(p) for p in written}
        assert {fixtures.ex2(), fixtures.ex2_alt()} <= sols

    def test_too_many(self, ex4_file):
        assert run("decode", ex4_file, "--erased", "0,1,2,3")[0] == 2

    def test_flag_mask_mismatch(self, tmp_path):
        path = tmp_path / "p.gebr"
        arrayfile.write(path, fixtures.ex4().puncture([1, 2]))
        assert run("decode", path, "--erased", "1,3")[0] == 2

    def test_inconsistent(self, tmp_path):
        rows = [list(map(int, row)) for row in fixtures.EX4_ROWS]
        for u in (0, 3):
            rows[u][1] ^= 1
        path = tmp_path / "bad.gebr"
        arrayfile.write(path, ArrayCodeword.from_rows(fixtures.GEBR_9_3_3, rows))
        assert run("decode", path, "--erased", "0,4")[0] == 1


class TestEncode:
    def payload(self, tmp_path, columns):
        path = tmp_path / "data.txt"
        path.write_text("\n".join("".join(map(str, c)) for c in columns) + "\n")
        return path

    def test_zero(self, tmp_path):
        data = self.payload(tmp_path, [[0] * 6] * 6)
        code, out = run("encode", "--n", 9, "--p", 3, "--r", 3,
                        "--parity-positions", "6,7,8", "--data", data)
        assert code == 0
        assert out == "GEBR 9 3 3\n" + "000000000\n" * 9

    def test_example_4(self, tmp_path):
        ex = fixtures.ex4()
        cols = []
        for j in range(6):
            q = unlift(ex.columns[j], 3, 3)
            cols.append([(q >> k) & 1 for k in range(6)])
        data = self.payload(tmp_path, cols)
        code, out = run("encode", "--n", 9, "--p", 3, "--r", 3,
                        "--parity-positions", "6,7,8", "--data", data)
        assert code == 0
        assert arrayfile.parse(out) == ex

    def test_non_mds_refused(self, tmp_path, capsys):
        data = self.payload(tmp_path, [[0] * 4])
        code, _ = run("encode", "--n", 6, "--p", 3, "--r", 2,
                      "--parity-positions", "0,3", "--data", data)
        assert code == 1
        assert "NOT-MDS" in capsys.readouterr().err

    def test_force(self, tmp_path):
        data = self.payload(tmp_path, [[1, 0, 1, 1]] * 3)
        args = ["encode", "--n", 6, "--p", 3, "--r", 2, "--data", data, "--force"]
        assert run(*args, "--parity-positions", "0,1")[0] == 0
        assert run(*args, "--parity-positions", "0,3")[0] == 1

    def test_bad_payload_length(self, tmp_path):
        data = tmp_path / "d.txt"
        data.write_text("10101")
        assert run("encode", "--n", 9, "--p", 3, "--r", 3,
                   "--parity-positions", "6,7,8", "--data", data)[0] == 2

    def test_random_payload(self, tmp_path):
        rng = random.Random(2)
        cols = [[rng.getrandbits(1) for _ in range(18)] for _ in range(20)]
        data = self.payload(tmp_path, cols)
        out_path = tmp_path / "cw.gebr"
        code, _ = run("encode", "--n", 27, "--p", 3, "--r", 4,
                      "--parity-positions", "0,5,13,26", "--data", data, "-o", out_path)
        assert code == 0
        assert run("check", out_path)[0] == 0


class TestMds:
    def test_mds(self):
        code, out = run("mds", "--n", 27, "--p", 3)
        assert code == 0 and ": MDS" in out

    def test_not_mds(self):
        code, out = run("mds", "--n", 45, "--p", 3)
        assert "NOT-MDS" in out and "m=5" in out

    def test_oracle(self):
        code, out = run("mds", "--n", 45, "--p", 5, "--oracle")
        assert code == 0 and "NOT-MDS" in out and "agrees" in out

    def test_invalid(self):
        assert run("mds", "--n", 45, "--p", 7)[0] == 2


class TestWitness:
    def test_gebr_6_3(self):
        code, out = run("witness", "--n", 6, "--p", 3)
        assert code == 0
        assert "support: 0 1 3 4" in out and "shift: 3" in out

    def test_gebr_45_3(self):
        code, out = run("witness", "--n", 45, "--p", 3)
        assert code == 0
        assert "support: 0 3 9 12 18 21 27 30 36 39" in out and "ell: 3" in out

    def test_mds(self):
        assert run("witness", "--n", 27, "--p", 3)[0] == 1


class TestSweep:
    def test_rows_up_to_27(self):
        rows = {(r["n"], r["p"]): r for r in sweep_rows(27)}
        assert not rows[(6, 3)]["theorem"] and rows[(6, 3)]["agree"]
        assert rows[(9, 3)]["theorem"] and rows[(9, 3)]["agree"]
        assert rows[(27, 3)]["theorem"] and rows[(27, 3)]["agree"]

    def test_max_4(self):
        rows = sweep_rows(4)
        assert [(r["n"], r["p"], r["tau"]) for r in rows] == [(2, 2, 1), (3, 3, 1), (4, 2, 2)]
        assert rows[0]["skipped"]
        assert rows[2]["theorem"] is False and rows[2]["agree"] and rows[2]["witness"]

    def test_max_60(self):
        code, out = run("sweep", "--max-n", 60)
        assert code == 0
        assert out.rstrip().endswith("0 disagreements")
