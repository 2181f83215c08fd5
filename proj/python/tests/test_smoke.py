import math

import fracadi


def test_problem_registry():
    ids = [pid for pid, _ in fracadi.problems()]
    assert "cd1d" in ids
    assert "cd2d-twosided" in ids


def test_coefficient_rows():
    row = fracadi.left_row(4, 1.5, 16)
    assert math.isclose(row[5], 1.0, rel_tol=1e-12)
    assert math.isclose(row[4], 2**1.5 - 4.0, rel_tol=1e-12)


def test_audit_passes():
    ok, detail = fracadi.audit(1.5, 32)
    assert ok, detail


def test_power_law_derivative():
    val = fracadi.rl_power_left(2.0, 1.5, 1.0)
    assert math.isclose(val, 2.0 / math.gamma(1.5), rel_tol=1e-12)


def test_solve1d_accuracy():
    result = fracadi.solve1d("cd1d", 1.5, 64)
    assert result["steps"] == 64
    assert result["linf_error"] < 2e-3


def test_solve2d_accuracy():
    result = fracadi.solve2d("cd2d-onesided", 1.1, 1.1, 25)
    assert result["shape"] == (26, 26)
    assert result["linf_error"] < 2e-3


def test_stability_sweep():
    assert fracadi.amplification_max(1.9) <= 1.0 + 1e-12


def test_convergence_orders():
    report = fracadi.convergence("table2", 1.5, None, [50, 100])
    entries = report["entries"]
    assert len(entries) == 2
    assert 1.7 < entries[1]["order"] < 2.2
