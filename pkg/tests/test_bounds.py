import math

import pytest

from agstab.bounds import (
    ALT_DELTA_CAP,
    M_CAP,
    alt_envelope,
    alt_of_m,
    alt_window,
    emit_curves,
    r1_envelope,
    r1_of_m,
    r1_window,
    write_csv,
)


def test_line_values():
    assert abs(r1_of_m(3, 1 / 21) - 1 / 7) < 1e-15
    assert abs(r1_of_m(2, 1 / 24)) < 1e-15
    assert abs(alt_of_m(3, 3 / 100) - 29 / 70) < 1e-15
    assert abs(alt_of_m(2, 1 / 10) + 1 / 3) < 1e-15  # raw value is negative


def test_zero_delta_endpoint():
    for m in (2, 3, 5, 9):
        assert r1_of_m(m, 0.0) == 1 - 2 / (2**m - 1)
        assert alt_of_m(m, 0.0) == 1 - 2 / (2**m - 1)


def test_argument_validation():
    with pytest.raises(ValueError):
        r1_of_m(1, 0.1)
    with pytest.raises(ValueError):
        alt_of_m(3, -0.1)
    with pytest.raises(ValueError):
        r1_envelope(0.0)
    with pytest.raises(ValueError):
        alt_envelope(-1.0)


def test_r1_boundary_crossover():
    # window boundaries are exactly where adjacent lines intersect
    assert abs(r1_of_m(3, 4 / 105) - r1_of_m(4, 4 / 105)) < 1e-15
    lo3, hi3 = r1_window(3)
    assert math.isclose(lo3, 4 / 105)
    assert math.isclose(hi3, 2 / 21)


def test_envelope_continuity():
    for m in range(2, 11):
        lo, _ = r1_window(m)
        assert abs(r1_of_m(m, lo) - r1_of_m(m + 1, lo)) < 1e-12
        lo_a, _ = alt_window(m + 1)
        assert abs(alt_of_m(m + 1, lo_a) - alt_of_m(m + 2, lo_a)) < 1e-12


def test_envelope_window_selection():
    rate, m = r1_envelope(1 / 21)
    assert m == 3 and abs(rate - 1 / 7) < 1e-15
    # very small delta climbs to the cap; very large falls back to m = 2
    assert r1_envelope(1e-12)[1] == M_CAP
    assert r1_envelope(0.45)[1] == 2


def test_alt_windows():
    lo2, hi2 = alt_window(2)
    assert lo2 > hi2                        # empty: the family starts at m = 3
    lo3, hi3 = alt_window(3)
    assert hi3 == ALT_DELTA_CAP == 5 / 84   # the global upper endpoint
    assert math.isclose(lo3, 24 / 525)
    lo4, hi4 = alt_window(4)
    assert math.isclose(hi4, lo3)           # windows abut


def test_alt_envelope_selection():
    # 0.03 sits inside the m = 4 window by the window formulas
    rate, m = alt_envelope(0.03)
    assert m == 4 and abs(rate - alt_of_m(4, 0.03)) < 1e-15
    rate, m = alt_envelope(0.05)
    assert m == 3
    # above the 5/84 cap the envelope is the pointwise best line
    rate, m = alt_envelope(0.065)
    assert m == 3 and abs(rate - alt_of_m(3, 0.065)) < 1e-15


def test_envelope_is_pointwise_max():
    for i in range(1, 1001):
        delta = i * (0.12 / 1000)
        for env, line in ((r1_envelope, r1_of_m), (alt_envelope, alt_of_m)):
            rate, m = env(delta)
            best = max(line(mm, delta) for mm in range(2, M_CAP + 1))
            assert abs(rate - best) < 1e-12
            assert abs(line(m, delta) - best) < 1e-12


def test_envelope_monotone_nonincreasing():
    prev_r1 = prev_alt = float("inf")
    for i in range(1, 200):
        delta = i * 0.0005
        r, _ = r1_envelope(delta)
        a, _ = alt_envelope(delta)
        assert r <= prev_r1 + 1e-15 and a <= prev_alt + 1e-15
        prev_r1, prev_alt = r, a


def test_emit_curves_grid():
    pts = emit_curves(0.001, 0.07, 0.001)
    assert len(pts) == 140                      # 70 grid points, two curves
    assert {p.curve for p in pts} == {"r1", "alt"}
    single = emit_curves(1 / 21, 1 / 21, 0.001, curves=("r1",))
    assert len(single) == 1
    assert abs(single[0].rate - 1 / 7) < 1e-15 and single[0].m == 3
    for p in pts:
        assert p.rate == max(0.0, p.raw_rate)   # clamp only for output
    assert pts == emit_curves(0.001, 0.07, 0.001)   # deterministic


def test_emit_curves_validation():
    with pytest.raises(ValueError):
        emit_curves(0.0, 0.1, 0.01)
    with pytest.raises(ValueError):
        emit_curves(0.2, 0.1, 0.01)
    with pytest.raises(ValueError):
        emit_curves(0.01, 0.1, 0.0)
    with pytest.raises(ValueError):
        emit_curves(0.01, 0.1, 0.01, curves=("nope",))


def test_csv_format(tmp_path):
    path = tmp_path / "curves.csv"
    write_csv(emit_curves(0.01, 0.02, 0.01), str(path))
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "delta,rate,raw_rate,m,curve"
    assert len(lines) == 5
    fields = lines[1].split(",")
    assert len(fields) == 5
    float(fields[1])  # parsable rates
