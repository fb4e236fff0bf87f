import pytest

from pinnacles import bench
from pinnacles.bench import (
    CSV_HEADER,
    BenchRow,
    admissible_pinnacle_sets,
    bench_row,
    bench_rows,
    time_call,
)


def test_time_call():
    result, elapsed = time_call(sorted, [3, 1, 2], runs=2)
    assert result == [1, 2, 3]
    assert isinstance(elapsed, float)
    assert elapsed >= 0


def test_time_call_needs_a_run():
    with pytest.raises(ValueError):
        time_call(sorted, [1], runs=0)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 3), (8, 35)])
def test_admissible_pinnacle_sets(n, expected):
    sets = admissible_pinnacle_sets(n)
    assert len(sets) == expected
    assert sets[0] == ()
    assert [len(P) for P in sets] == sorted(len(P) for P in sets)


def test_bench_row():
    row = bench_row((5,), 8, runs=1)
    assert row.count == 448
    assert row.naive_ms > 0
    assert row.construct_ms > 0
    assert row.speedup == pytest.approx(row.naive_ms / row.construct_ms)
    assert row.as_dict()["pinnacles"] == [5]


def test_bench_row_skips_naive_above_limit():
    row = bench_row((3, 6), 9, runs=1, limit=8)
    assert row.count == 2 ** 6 * 3
    assert row.naive_ms is None
    assert row.speedup is None
    csv_row = row.as_csv_row()
    assert csv_row[:4] == (9, "3;6", row.count, "skipped")
    assert csv_row[-1] == ""


def test_bench_row_disagreement(monkeypatch):
    monkeypatch.setattr(bench, "generate_naive", lambda P, n: [])
    with pytest.raises(RuntimeError, match="disagree"):
        bench_row((3,), 5, runs=1)


def test_bench_rows():
    rows = bench_rows(admissible_pinnacle_sets(6), 6, runs=1)
    assert [row.pinnacles for row in rows] == admissible_pinnacle_sets(6)
    assert sum(row.count for row in rows) == 720


def test_bench_row_csv_formatting():
    row = BenchRow(8, (4, 8), 1440, naive_ms=120.0, construct_ms=3.0)
    assert len(row.as_csv_row()) == len(CSV_HEADER)
    assert row.as_csv_row() == (8, "4;8", 1440, "120.000", "3.000", "40.0")


def test_constructive_beats_naive_for_n8():
    rows = bench_rows(admissible_pinnacle_sets(8), 8, runs=3)
    assert sum(row.count for row in rows) == 40320
    assert all(row.speedup > 1 for row in rows)

    naive_ms = sum(row.naive_ms for row in rows)
    construct_ms = sum(row.construct_ms for row in rows)
    assert naive_ms / construct_ms >= 10
    assert construct_ms < 1000
