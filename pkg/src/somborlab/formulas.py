"""Closed forms for the extremal families, scalar inequality oracles, and
the conjectured bounds for the still-open extremes.

Closed forms are expanded per order into exact radical sums (radicands
normalized squarefree) so they can be compared term-by-term against values
computed straight from the graphs.  The scalar inequality helpers are plain
floating-point functions: they express analytic facts about square-root
differences, not graph quantities, so double precision with a 1e-12
equality tolerance is adequate and every sweep margin is orders of
magnitude above it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import MAX_ORDER
from .radicals import RadicalSum, sqrt_int

EQUALITY_TOL = 1e-12

_SQRT2 = math.sqrt(2)
_SQRT5 = math.sqrt(5)
_SQRT13 = math.sqrt(13)


def _check_order(n: int, low: int, what: str) -> None:
    if not low <= n <= MAX_ORDER:
        raise ValueError(f"{what} is defined for orders {low}..{MAX_ORDER}, got {n}")


# -- closed forms ------------------------------------------------------------


def so_x_closed(n: int) -> RadicalSum:
    """Sombor index of the book two-tree: ``sqrt(2)(n-1) + 2(n-2)sqrt((n-1)^2+4)``."""
    _check_order(n, 2, "so_x_closed")
    return (n - 1) * sqrt_int(2) + 2 * (n - 2) * sqrt_int((n - 1) ** 2 + 4)


def so_bar_x_closed(n: int) -> RadicalSum:
    """Sombor coindex of the book two-tree: ``sqrt(2)(n-2)(n-3)``."""
    _check_order(n, 2, "so_bar_x_closed")
    return (n - 2) * (n - 3) * sqrt_int(2) if n >= 3 else RadicalSum.zero()


def so_l_closed(n: int) -> RadicalSum:
    """Sombor index of the second-extremal family (order 5 and up)."""
    _check_order(n, 5, "so_l_closed")
    return (
        (n - 4) * sqrt_int((n - 2) ** 2 + 4)
        + (n - 3) * sqrt_int((n - 1) ** 2 + 4)
        + sqrt_int((n - 1) ** 2 + (n - 2) ** 2)
        + sqrt_int(13)
        + sqrt_int((n - 1) ** 2 + 9)
        + sqrt_int((n - 2) ** 2 + 9)
    )


def so_bar_l_closed(n: int) -> RadicalSum:
    """Sombor coindex of the second-extremal family (order 5 and up)."""
    _check_order(n, 5, "so_bar_l_closed")
    return (
        (n - 3) * (n - 4) * sqrt_int(2)
        + sqrt_int((n - 2) ** 2 + 4)
        + (n - 4) * sqrt_int(13)
    )


# -- scalar inequality oracles ------------------------------------------------


def diag_weight_drop(x: float, y: float) -> float:
    """``sqrt(x^2+y^2) - sqrt((x-1)^2+(y-1)^2)`` for ``x, y >= 2``.

    Bounded above by ``sqrt(2)``, with equality exactly on the diagonal
    ``x == y`` (triangle inequality against the segment from the origin to
    ``(1, 1)``).
    """
    if x < 2 or y < 2:
        raise ValueError(f"diag_weight_drop needs x, y >= 2, got ({x}, {y})")
    return math.hypot(x, y) - math.hypot(x - 1, y - 1)


def shifted_sqrt_gap(x: float, y: float) -> float:
    """``sqrt(x^2+y) - sqrt((x-1)^2+y)``: increasing in x, decreasing in y."""
    if x < 2 or y < 1:
        raise ValueError(f"shifted_sqrt_gap needs x >= 2 and y >= 1, got ({x}, {y})")
    return math.sqrt(x * x + y) - math.sqrt((x - 1) * (x - 1) + y)


def shifted_sqrt_gap_diff(x: float, y: float) -> float:
    """Second difference of the shifted gap: positive and decreasing in x."""
    if x < 3:
        raise ValueError(f"shifted_sqrt_gap_diff needs x >= 3, got {x}")
    return shifted_sqrt_gap(x, y) - shifted_sqrt_gap(x - 1, y)


def coindex_step_gain(x: float, y: float) -> float:
    """``sqrt(y^2+x^2) - sqrt((y-1)^2+x^2) + sqrt(4+x^2)``: increasing in x."""
    if x <= 0 or y < 3:
        raise ValueError(f"coindex_step_gain needs x > 0 and y >= 3, got ({x}, {y})")
    return math.hypot(y, x) - math.hypot(y - 1, x) + math.hypot(2, x)


def double_gap_anchor() -> float:
    """``2*shifted_sqrt_gap(5,4) + shifted_sqrt_gap_diff(5,4)``, about 1.8725."""
    return 2 * shifted_sqrt_gap(5, 4) + shifted_sqrt_gap_diff(5, 4)


# -- sweeps -------------------------------------------------------------------


@dataclass(frozen=True)
class SweepViolation:
    sweep: str
    check: str
    x: float
    y: float
    lhs: float
    rhs: float


SWEEP_IDS = ("diag-drop-bound", "gap-monotone", "coindex-gain-monotone")


def _sweep_diag(xs: Sequence[float], ys: Sequence[float], report) -> None:
    root2 = _SQRT2
    for x in xs:
        for y in ys:
            d = diag_weight_drop(x, y)
            if x == y:
                report("diagonal-equality", abs(d - root2) <= EQUALITY_TOL, x, y, d, root2)
            else:
                report("strict-upper-bound", d < root2 - EQUALITY_TOL, x, y, d, root2)


def _sweep_gap(xs: Sequence[float], ys: Sequence[float], report) -> None:
    for y in ys:
        for x, x2 in zip(xs, xs[1:]):
            a, b = shifted_sqrt_gap(x, y), shifted_sqrt_gap(x2, y)
            report("increasing-in-x", b > a + EQUALITY_TOL, x, y, a, b)
        diffs = [(x, shifted_sqrt_gap_diff(x, y)) for x in xs if x >= 3]
        for x, d in diffs:
            report("second-diff-positive", d > EQUALITY_TOL, x, y, d, 0.0)
        for (x, d), (x2, d2) in zip(diffs, diffs[1:]):
            report("second-diff-decreasing", d2 <= d + EQUALITY_TOL, x, y, d, d2)
    for x in xs:
        for y, y2 in zip(ys, ys[1:]):
            a, b = shifted_sqrt_gap(x, y), shifted_sqrt_gap(x, y2)
            report("decreasing-in-y", b < a - EQUALITY_TOL, x, y, a, b)


def _sweep_coindex(xs: Sequence[float], ys: Sequence[float], report) -> None:
    for y in ys:
        for x, x2 in zip(xs, xs[1:]):
            a, b = coindex_step_gain(x, y), coindex_step_gain(x2, y)
            report("increasing-in-x", b > a + EQUALITY_TOL, x, y, a, b)


_SWEEPS = {
    "diag-drop-bound": (_sweep_diag, (2, 201), (2, 201)),
    "gap-monotone": (_sweep_gap, (2, 201), (1, 201)),
    "coindex-gain-monotone": (_sweep_coindex, (1, 201), (3, 201)),
}


def lemma_sweep(
    sweep_id: str,
    xs: Iterable[float] | None = None,
    ys: Iterable[float] | None = None,
    invert: bool = False,
) -> list[SweepViolation]:
    """Grid-check one family of inequality claims; returns the violations.

    ``invert=True`` negates every check and serves as the harness self-test:
    a sound sweep must then flag every check it performs.
    """
    if sweep_id not in _SWEEPS:
        raise ValueError(f"unknown sweep {sweep_id!r}; known: {SWEEP_IDS}")
    run, (x_lo, x_hi), (y_lo, y_hi) = _SWEEPS[sweep_id]
    xs = sorted(xs) if xs is not None else list(range(x_lo, x_hi))
    ys = sorted(ys) if ys is not None else list(range(y_lo, y_hi))

    violations: list[SweepViolation] = []

    def report(check: str, ok: bool, x: float, y: float, lhs: float, rhs: float) -> None:
        if ok == invert:
            name = f"inverted-{check}" if invert else check
            violations.append(SweepViolation(sweep_id, name, x, y, lhs, rhs))

    run(xs, ys, report)
    return violations


# -- conjectured bounds --------------------------------------------------------


def conjectured_min_so(n: int) -> float:
    """Conjectured lower bound on the Sombor index over two-trees of order n.

    ``6*sqrt(2)*n + 2*sqrt(13) + 4*sqrt(5) + 20 - 33*sqrt(2)``; stated
    without a validity range, and the per-order evidence reports expose
    where it conflicts with the exhaustive minimum (it does at order 5).
    """
    if n < 5:
        raise ValueError(f"conjectured_min_so is reported for orders >= 5, got {n}")
    return 6 * _SQRT2 * n + 2 * _SQRT13 + 4 * _SQRT5 + 20 - 33 * _SQRT2


def conjectured_max_coindex(n: int, reading: str = "corrected") -> float:
    """Conjectured upper bound on the Sombor coindex over two-trees of order n.

    The printed linear coefficient ``(10 - 26*sqrt(2)n + 4*sqrt(5))`` would
    make the whole expression cubic in n, contradicting the quadratic
    leading term, so the default reading drops the stray ``n``:
    ``(10 - 26*sqrt(2) + 4*sqrt(5)) * n``.  The literal reading stays
    available for comparison; reports carry both and assert neither.
    """
    if n < 5:
        raise ValueError(f"conjectured_max_coindex is reported for orders >= 5, got {n}")
    tail = 89 * _SQRT2 + 2 * _SQRT13 - 20 * _SQRT5 - 60
    if reading == "corrected":
        return 2 * _SQRT2 * n * n + (10 - 26 * _SQRT2 + 4 * _SQRT5) * n + tail
    if reading == "literal":
        return 2 * _SQRT2 * n * n + (10 - 26 * _SQRT2 * n + 4 * _SQRT5) * n + tail
    raise ValueError(f"reading must be 'corrected' or 'literal', got {reading!r}")
