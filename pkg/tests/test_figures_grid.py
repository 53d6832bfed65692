from fddof import figures
from fddof.grid import PROPERTIES, check_grid


def test_symmetric_sweep_collapses():
    for r in figures.symmetric_sweep(5, 1, 20):
        assert r[figures.FD_HD_USER] == min(10, r["n"])
        assert r[figures.HD_ONLY] == min(5, r["n"])
        assert r[figures.FD_FD_USER] == min(10, r["n"])


def test_fd_sweep_ordering_and_threshold():
    rows = figures.fd_sweep(16, 8, 2, 1, 25)
    assert len(rows) == 25
    assert all(r["n2"] == 2 * r["n1"] and r["n"] == 3 * r["n1"] for r in rows)
    assert figures.mode_ordering_violations(rows) == []
    assert figures.hd_matches_fd_from(rows, "n1") == 20


def test_fd_sweep_self_interference_point():
    row = figures.fd_sweep(16, 8, 2, 10, 10)[0]
    assert row[figures.FD_WITH_SI] == 14


def test_optimal_split_table():
    rows = figures.optimal_split_table(16, 8, 1, 50)
    assert figures.mode_ordering_violations(rows) == []
    assert all(r[figures.FD_WITH_SI] == r[figures.HD_ONLY] for r in rows)
    assert figures.hd_matches_fd_from(rows, "n") == 47


def test_split_curve_table_length():
    assert len(figures.split_curve_table(16, 8, 50)) == 51


def test_hd_matches_fd_from_none():
    rows = [{"x": 1, figures.FD_HD_USER: 1, figures.FD_FD_USER: 2}]
    assert figures.hd_matches_fd_from(rows, "x") is None


def test_check_grid_clean():
    report = check_grid(4)
    assert report.configs == 256
    assert report.total_mismatches == 0
    assert set(report.mismatches) == set(PROPERTIES)
    assert report.first_counterexample == {}
