import subprocess
import sys

import pytest

from conftest import FIG1_S, FIG1_X
from partialsums.arrayfile import ArrayFileError, format_array, parse_array
from partialsums.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_queries(capsys, fig1_file):
    assert run(capsys, "find", fig1_file, 69) == (0, "3\n", "")
    assert run(capsys, "sum", fig1_file, 0, 15) == (0, "99\n", "")
    assert run(capsys, "suffix", fig1_file, 3) == (0, "71\n", "")
    assert run(capsys, "get", fig1_file, 12) == (0, "6\n", "")


def test_dump_shows_cells(capsys, fig1_file):
    code, out, _ = run(capsys, "dump", fig1_file)
    assert out.split("\n")[:-1] == ["N 16"] + [str(v) for v in FIG1_S]


def test_trace_golden(capsys, fig1_file):
    assert run(capsys, "trace", fig1_file, "sumN", 3)[1] == "i: 3 4 8 16\nsm: 0 3 20 71\nresult: 71\n"
    assert run(capsys, "trace", fig1_file, "get", 12)[1] == "i: 1 2 4\nx: 17 15 6\nresult: 6\n"
    assert run(capsys, "trace", fig1_file, "inc", 12, 1)[1] == "i: 12 8 0\n"
    assert run(capsys, "trace", fig1_file, "inc", 3, 1)[1] == "i: 3 2 0\n"
    assert (
        run(capsys, "trace", fig1_file, "find", 69)[1]
        == "i: 8 4 2 1 0\npv: 51 68 77 71 71\nk: 0 2 3\nresult: 3\n"
    )
    # tracing inc does not touch the file
    assert fig1_file.read_text() == format_array(FIG1_X)


def test_trace_usage_errors(capsys, fig1_file):
    assert run(capsys, "trace", fig1_file, "sort", 1)[0] == 2
    assert run(capsys, "trace", fig1_file, "get")[0] == 2
    assert run(capsys, "trace", fig1_file, "get", "x")[0] == 2
    assert run(capsys, "trace", fig1_file, "get", 99)[0] == 1


def test_mutations_rewrite_values(capsys, fig1_file):
    assert run(capsys, "inc", fig1_file, 12, 10) == (0, "", "")
    assert run(capsys, "get", fig1_file, 12)[1] == "16\n"
    assert run(capsys, "set", fig1_file, 0, 0)[0] == 0
    assert parse_array(fig1_file.read_text())[:1] == [0]
    assert run(capsys, "suffix", fig1_file, 0)[1] == "95\n"


def test_build_round_trip(capsys, tmp_path, fig1_file):
    out = tmp_path / "out.txt"
    assert run(capsys, "build", fig1_file, out)[0] == 0
    got = [int(run(capsys, "get", out, k)[1]) for k in range(16)]
    assert got == FIG1_X


def test_contract_violations_exit_1(capsys, fig1_file):
    code, out, err = run(capsys, "get", fig1_file, 16)
    assert code == 1 and out == "" and len(err.strip().splitlines()) == 1
    assert run(capsys, "find", fig1_file, 99)[0] == 1
    assert run(capsys, "sum", fig1_file, 4, 16)[0] == 1
    assert run(capsys, "inc", fig1_file, 0, 2**63 - 1)[0] == 1
    assert fig1_file.read_text() == format_array(FIG1_X)


@pytest.mark.parametrize(
    "text",
    ["", "N 3\n1\n2\n3\n", "M 3\n1\n2\n", "M 2\n1\nfoo\n", "M x\n", f"M 1\n{2**63}\n", "M -1\n"],
)
def test_malformed_files_exit_2(capsys, tmp_path, text):
    p = tmp_path / "bad.txt"
    p.write_text(text)
    assert run(capsys, "get", p, 0)[0] == 2
    with pytest.raises(ArrayFileError):
        parse_array(text)


def test_missing_file_exit_2(capsys, tmp_path):
    assert run(capsys, "get", tmp_path / "nope.txt", 0)[0] == 2


def test_overflowing_file_exit_2(capsys, tmp_path):
    p = tmp_path / "big.txt"
    p.write_text(format_array([2**62, 2**62]))
    assert run(capsys, "suffix", p, 0)[0] == 2


def test_bad_integer_argument_exit_2(capsys, fig1_file):
    with pytest.raises(SystemExit) as exc:
        main(["get", str(fig1_file), "twelve"])
    assert exc.value.code == 2


def test_sample_deterministic(capsys, fig1_file):
    a = run(capsys, "sample", fig1_file, "--draws", 500, "--seed", 11)
    b = run(capsys, "sample", fig1_file, "--draws", 500, "--seed", 11)
    assert a == b and a[0] == 0
    lines = a[1].splitlines()
    assert lines[0] == "# rng=numpy.PCG64 seed=11 draws=500 total=99"
    counts = [int(line.split()[1]) for line in lines[1:]]
    assert len(counts) == 16 and sum(counts) == 500


def test_sample_zero_total(capsys, tmp_path):
    p = tmp_path / "z.txt"
    p.write_text(format_array([0, 0]))
    assert run(capsys, "sample", p, "--draws", 5)[0] == 1


def test_bench_and_selftest(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", 4, 16, "--ops", 200, "--seed", 2,
                       "--mix", "inc=1,find=1")
    assert code == 0
    rows = out.splitlines()
    assert len(rows) == 4 and all("mismatches=0" in r for r in rows)
    code, out, _ = run(capsys, "selftest", "--max-m", 6, "--cases", 4, "--seed", 1)
    assert code == 0
    assert out.startswith("sequences=24 operations=2400 ")
    assert out.strip().endswith("mismatches=0")


def test_bench_bad_mix_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--mix", "sort=1"])
    assert exc.value.code == 2


def test_module_entry_point(fig1_file):
    proc = subprocess.run(
        [sys.executable, "-m", "partialsums", "find", str(fig1_file), "69"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "3\n"


def test_format_parse_round_trip():
    assert parse_array(format_array([5, -1, 2])) == [5, -1, 2]
    assert parse_array("M 0\n") == []
    assert parse_array("M 2\n 4 \n-3\n\n") == [4, -3]
