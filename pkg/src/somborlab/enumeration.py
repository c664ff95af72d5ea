"""Exhaustive enumeration of non-isomorphic two-trees, order by order.

Levels are built breadth-first: every representative of order ``n - 1`` is
grown through each of its edges, children are canonized, and duplicates are
discarded by canonical key.  Stored representatives are the canonical forms
themselves, so their graph6 encoding equals their key and two runs produce
byte-identical levels.  Expansion is a pure function of the parent, which
makes the worker split embarrassingly parallel; the deterministic sort-unique
merge keeps the output independent of the worker count.

A second, slower route (filter all labeled graphs with the right edge count)
cross-validates the counts at small orders.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    CanonicalKey,
    CapacityError,
    Graph,
    _canonical_columns,
    _graph6_pack,
    _rows_from_columns,
    canonical_key,
    is_two_tree,
)

DEFAULT_CAP = 12
ORACLE_CAP = 7


@dataclass(frozen=True)
class EnumLevel:
    """All two-trees of one order, canonical forms sorted by key."""

    order: int
    graphs: tuple[Graph, ...]
    keys: tuple[CanonicalKey, ...]

    @property
    def count(self) -> int:
        return len(self.graphs)

    def checksum(self) -> str:
        return hashlib.sha256(b"\n".join(self.keys)).hexdigest()


def _expand_rows(parent_rows: tuple[int, ...]) -> list[tuple[CanonicalKey, tuple[int, ...]]]:
    """Children of one parent: (key, canonical rows) per edge, duplicates kept."""
    n = len(parent_rows)
    out = []
    for u in range(n):
        row = parent_rows[u] >> (u + 1)
        v = u + 1
        while row:
            if row & 1:
                child = list(parent_rows) + [(1 << u) | (1 << v)]
                child[u] |= 1 << n
                child[v] |= 1 << n
                cols = _canonical_columns(child, n + 1)
                key = _graph6_pack(n + 1, cols)
                out.append((key, tuple(_rows_from_columns(cols, n + 1))))
            row >>= 1
            v += 1
    return out


def _next_level(level: EnumLevel, workers: int) -> EnumLevel:
    parents = [tuple(g._rows) for g in level.graphs]
    if workers > 1 and len(parents) > 1:
        chunk = max(1, len(parents) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = pool.map(_expand_batch, _chunks(parents, chunk))
            produced = [pair for batch in batches for pair in batch]
    else:
        produced = [pair for rows in parents for pair in _expand_rows(rows)]
    dedup = {key: rows for key, rows in produced}
    keys = sorted(dedup)
    graphs = tuple(Graph._from_rows(list(dedup[k])) for k in keys)
    return EnumLevel(level.order + 1, graphs, tuple(keys))


def _expand_batch(parents: list[tuple[int, ...]]) -> list[tuple[CanonicalKey, tuple[int, ...]]]:
    return [pair for rows in parents for pair in _expand_rows(rows)]


def _chunks(items: list, size: int) -> list[list]:
    return [items[i:i + size] for i in range(0, len(items), size)]


def _base_level() -> EnumLevel:
    k2 = Graph.from_edges(2, [(0, 1)])
    return EnumLevel(2, (k2,), (canonical_key(k2),))


def enumerate_levels(max_order: int, cap: int = DEFAULT_CAP, workers: int = 1):
    """Yield :class:`EnumLevel` for orders 2..max_order."""
    if not 2 <= max_order <= cap:
        raise CapacityError(f"order must be in 2..{cap} (configured cap), got {max_order}")
    level = _base_level()
    yield level
    while level.order < max_order:
        level = _next_level(level, workers)
        yield level


def enumerate_two_trees(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> EnumLevel:
    """All pairwise non-isomorphic two-trees of order ``n``."""
    level = None
    for level in enumerate_levels(n, cap=cap, workers=workers):
        pass
    assert level is not None and level.order == n
    return level


def count_two_trees(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> int:
    return enumerate_two_trees(n, cap=cap, workers=workers).count


def oracle_filter_count(n: int) -> int:
    """Independent count: filter every labeled graph with ``2n - 3`` edges.

    Deliberately shares no code path with the level-by-level builder beyond
    recognition and canonization; feasible only up to order 7.
    """
    if not 2 <= n <= ORACLE_CAP:
        raise CapacityError(f"filter oracle handles orders 2..{ORACLE_CAP}, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = 2 * n - 3
    min_degree = 2 if n >= 3 else 1
    keys: set[CanonicalKey] = set()
    for combo in combinations(pairs, m):
        rows = [0] * n
        for u, v in combo:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if any(row.bit_count() < min_degree for row in rows):
            continue
        g = Graph._from_rows(rows)
        if is_two_tree(g):
            keys.add(canonical_key(g))
    return len(keys)
