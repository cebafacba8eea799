"""Asymptotic rate-versus-distance curves for the binary code families.

Two families of lines, both indexed by an integer m >= 2:

    tower family   r1(m, d)  = 1 - 2/(2^m - 1) - 4 m d
    layered family alt(m, d) = 1 - (10/3) m d - 2/(2^m - 1)

Each m is the best choice on one delta window; the envelope picks the
window member (windows abut, and the two members agree at every boundary,
so the envelope is continuous):

    r1 window  : 2^(m-1) / ((2^m - 1)(2^(m+1) - 1))
                 ... 2^(m-2) / ((2^(m-1) - 1)(2^m - 1))
    alt window : 3 * 2^m / (5 (2^m - 1)(2^(m+1) - 1))
                 ... min(5/84, 3 * 2^(m-1) / (5 (2^(m-1) - 1)(2^m - 1)))

The alt window for m = 2 is empty and 5/84 is the largest delta any alt
window reaches.  Outside all windows the envelope falls back to the
pointwise best m (which is m = 2 above the r1 windows and the capped
m = M_CAP below the smallest window).  Raw line values may be negative;
they are kept raw here and only clamped to 0 in the emitted table, which
is a plotting convention, not part of the formulas.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, Sequence

M_CAP = 30
ALT_DELTA_CAP = 5 / 84


def r1_of_m(m: int, delta: float) -> float:
    """Tower-family line for parameter m, raw (may be negative)."""
    _check_m_delta(m, delta)
    return 1.0 - 2.0 / (2**m - 1) - 4.0 * m * delta


def alt_of_m(m: int, delta: float) -> float:
    """Layered-family line for parameter m, raw (may be negative)."""
    _check_m_delta(m, delta)
    return 1.0 - (10.0 / 3.0) * m * delta - 2.0 / (2**m - 1)


def _check_m_delta(m: int, delta: float) -> None:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if delta < 0:
        raise ValueError(f"delta must be nonnegative, got {delta}")


def r1_window(m: int) -> tuple[float, float]:
    """Delta window on which m is the envelope choice for the tower family."""
    lo = 2 ** (m - 1) / ((2**m - 1) * (2 ** (m + 1) - 1))
    hi = 2 ** (m - 2) / ((2 ** (m - 1) - 1) * (2**m - 1))
    return lo, hi


def alt_window(m: int) -> tuple[float, float]:
    """Delta window for the layered family; empty (lo > hi) for m = 2."""
    lo = 3 * 2**m / (5 * (2**m - 1) * (2 ** (m + 1) - 1))
    hi = min(ALT_DELTA_CAP, 3 * 2 ** (m - 1) / (5 * (2 ** (m - 1) - 1) * (2**m - 1)))
    return lo, hi


def _envelope(delta: float, of_m, window) -> tuple[float, int]:
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    for m in range(2, M_CAP + 1):
        lo, hi = window(m)
        if lo <= delta <= hi:
            return of_m(m, delta), m
    # outside every window: pointwise best line, m capped
    best = max(range(2, M_CAP + 1), key=lambda m: of_m(m, delta))
    return of_m(best, delta), best


def r1_envelope(delta: float) -> tuple[float, int]:
    """(rate, m) of the tower-family envelope at delta > 0."""
    return _envelope(delta, r1_of_m, r1_window)


def alt_envelope(delta: float) -> tuple[float, int]:
    """(rate, m) of the layered-family envelope at delta > 0."""
    return _envelope(delta, alt_of_m, alt_window)


@dataclass(frozen=True)
class RatePoint:
    delta: float
    rate: float  # clamped at 0 for output
    raw_rate: float
    m: int
    curve: str  # "r1" | "alt"


CURVES = {
    "r1": r1_envelope,
    "alt": alt_envelope,
}


def emit_curves(
    delta_min: float,
    delta_max: float,
    step: float,
    curves: Sequence[str] = ("r1", "alt"),
) -> list[RatePoint]:
    """Envelope samples on the grid delta_min, delta_min + step, ..., <= delta_max."""
    if not (0 < delta_min <= delta_max) or step <= 0:
        raise ValueError("need 0 < delta_min <= delta_max and step > 0")
    for c in curves:
        if c not in CURVES:
            raise ValueError(f"unknown curve {c!r}")
    count = int((delta_max - delta_min) / step + 1e-9) + 1
    out = []
    for name in curves:
        env = CURVES[name]
        for i in range(count):
            delta = delta_min + i * step
            raw, m = env(delta)
            out.append(RatePoint(delta=delta, rate=max(0.0, raw), raw_rate=raw, m=m, curve=name))
    return out


def write_csv(points: Iterable[RatePoint], path: str) -> None:
    """CSV with header delta,rate,raw_rate,m,curve; 12 significant digits."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["delta", "rate", "raw_rate", "m", "curve"])
        for p in points:
            w.writerow([f"{p.delta:.12g}", f"{p.rate:.12g}", f"{p.raw_rate:.12g}", p.m, p.curve])
