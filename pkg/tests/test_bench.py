import pytest

from partialsums.bench import run_bench


def test_counters_within_bounds():
    report = run_bench([2, 16, 256], ops=1500, seed=3)
    assert report.ok
    for row in report.rows:
        assert row.mismatches == 0
        if row.op == "find":
            assert row.iter_max == row.bound == row.size.bit_length() - 1
        else:
            assert row.iter_max <= row.bound


def test_n2_every_op_at_most_two():
    report = run_bench([2], ops=400, seed=0)
    assert all(r.iter_max <= 2 for r in report.rows)


def test_counters_deterministic():
    a = run_bench([64], ops=300, seed=8)
    b = run_bench([64], ops=300, seed=8)
    key = lambda r: (r.op, r.count, r.iter_total, r.iter_max, r.mismatches)  # noqa: E731
    assert [key(r) for r in a.rows] == [key(r) for r in b.rows]


def test_report_lines_are_key_value():
    report = run_bench([16], ops=100, seed=1, mix={"sum": 1.0})
    (line,) = report.lines()
    fields = dict(f.split("=", 1) for f in line.split())
    assert fields["op"] == "sum" and fields["N"] == "16"
    assert fields["bound"] == "5" and fields["mismatches"] == "0"
    assert fields["seed"] == "1" and fields["mix"] == "sum:1"


@pytest.mark.parametrize("sizes", [[3], [1], [0]])
def test_rejects_bad_sizes(sizes):
    with pytest.raises(ValueError):
        run_bench(sizes, ops=10)


def test_rejects_unknown_mix():
    with pytest.raises(ValueError):
        run_bench([4], ops=10, mix={"sort": 1.0})
