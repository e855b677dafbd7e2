import csv

from linrec.bench import ALGORITHMS, CSV_HEADER, measure_m_of_d, run_grid, write_csv
from linrec.cli import run
from linrec.poly import MulConfig


def test_empty_grid_is_header_only(tmp_path):
    path = tmp_path / "empty.csv"
    assert run(["bench", "--csv", str(path)]) == 0
    assert path.read_text() == CSV_HEADER + "\n"


def test_rows_and_columns(tmp_path):
    path = tmp_path / "grid.csv"
    assert run(["bench", "--d", "8,4", "-N", "1000,17", "--algo", "msb,lsb", "--csv", str(path)]) == 0
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    assert list(rows[0]) == CSV_HEADER.split(",")
    keys = [(r["algo"], int(r["d"]), int(r["N"])) for r in rows]
    assert keys == sorted(keys) and len(keys) == 8
    for r in rows:
        assert int(r["m_of_d"]) == (int(r["d"]) + 1) ** 2


def test_byte_identical_without_timing(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["bench", "--d", "5,40", "-N", "12345", "--algo", ",".join(ALGORITHMS),
            "--seed", "7", "--no-time"]
    assert run(argv + ["--csv", str(a)]) == 0
    assert run(argv + ["--csv", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_counts_deterministic_with_timing():
    r1 = run_grid([16], [999], ["lsb", "fft"], seed=3)
    r2 = run_grid([16], [999], ["lsb", "fft"], seed=3)
    assert [(r.mul_count, r.add_count) for r in r1] == [(r.mul_count, r.add_count) for r in r2]
    assert all(r.wall_time_ns > 0 for r in r1)


def test_fiduccia_over_lsb_example():
    recs = {r.algo: r for r in run_grid([64], [2 ** 40 - 1], ["lsb", "fiduccia"], timing=False)}
    ratio = recs["fiduccia"].mul_count / recs["lsb"].mul_count
    assert 1.3 <= ratio <= 1.7


def test_m_of_d():
    assert measure_m_of_d(7, MulConfig("schoolbook")) == 64
    assert measure_m_of_d(64, MulConfig()) == 2436


def test_unwritable_path(tmp_path):
    assert run(["bench", "--d", "2", "-N", "3", "--csv", str(tmp_path / "no" / "x.csv")]) == 2


def test_write_csv_roundtrip(tmp_path):
    recs = run_grid([3], [10], ["modexp_new", "modexp_binary"], timing=False)
    path = tmp_path / "r.csv"
    write_csv(recs, path)
    lines = path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[1].startswith("modexp_binary,3,10,")
