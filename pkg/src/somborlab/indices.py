"""Exact Sombor index, Sombor coindex, and the all-pairs total.

The index sums ``sqrt(d(u)^2 + d(v)^2)`` over edges; the coindex sums the
same weight over non-adjacent pairs, with degrees always taken in the
original graph (the complement is never materialized: the coindex of a
two-tree is not an index of its complement).  All sums are exact
:class:`~somborlab.radicals.RadicalSum` values.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph
from .radicals import RadicalSum, sqrt_int


@dataclass(frozen=True)
class IndexValue:
    """An exact index value with its double-precision shadow."""

    exact: RadicalSum

    @property
    def approx(self) -> float:
        return float(self.exact)

    def __str__(self) -> str:
        return f"{self.exact} ≈ {self.approx:.10g}"


def edge_weight(du: int, dv: int) -> RadicalSum:
    """Normalized ``sqrt(du^2 + dv^2)`` for a pair of positive degrees."""
    if du < 1 or dv < 1:
        raise ValueError(f"degrees must be positive, got ({du}, {dv})")
    return _weight(du, dv) if du <= dv else _weight(dv, du)


@lru_cache(maxsize=None)
def _weight(a: int, b: int) -> RadicalSum:
    return sqrt_int(a * a + b * b)


def _weighted_total(pairs: Counter) -> RadicalSum:
    total = RadicalSum.zero()
    for (da, db), count in sorted(pairs.items()):
        total = total + count * edge_weight(da, db)
    return total


def sombor_index(g: Graph) -> IndexValue:
    degs = g.degrees()
    pairs = Counter()
    for u, v in g.edges():
        a, b = degs[u], degs[v]
        pairs[(a, b) if a <= b else (b, a)] += 1
    return IndexValue(_weighted_total(pairs))


def sombor_coindex(g: Graph) -> IndexValue:
    degs = g.degrees()
    pairs = Counter()
    for u, v in g.non_edges():
        a, b = degs[u], degs[v]
        pairs[(a, b) if a <= b else (b, a)] += 1
    return IndexValue(_weighted_total(pairs))


def total_pair_sum(g: Graph) -> IndexValue:
    """Weight summed over all vertex pairs; equals index + coindex exactly."""
    degs = g.degrees()
    pairs = Counter()
    for u in range(g.order):
        for v in range(u + 1, g.order):
            a, b = degs[u], degs[v]
            pairs[(a, b) if a <= b else (b, a)] += 1
    return IndexValue(_weighted_total(pairs))
