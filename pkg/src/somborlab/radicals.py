"""Exact arithmetic for nonnegative integer combinations of square roots.

Every value handled here has the form ``sum_s c_s * sqrt(s)`` where each
radicand ``s`` is a squarefree positive integer and each coefficient ``c_s``
is a nonnegative integer; radicand 1 carries the plain integer part.  Square
roots of distinct squarefree integers are linearly independent over the
rationals, so the term map is a unique normal form: two sums are equal as
real numbers exactly when their term maps coincide.  Strict order between
distinct values is decided by integer interval evaluation whose precision
doubles until the intervals separate.

Subtraction is deliberately not provided; keeping coefficients nonnegative
makes the normal-form invariant trivial, and order queries never need it.
"""

from __future__ import annotations

import math
from typing import Iterator

_START_BITS = 64
_MAX_BITS = 1024


def _squarefree_split(k: int) -> tuple[int, int]:
    """Return ``(m, s)`` with ``k == m*m*s`` and ``s`` squarefree."""
    m, s, d = 1, k, 2
    while d * d <= s:
        dd = d * d
        while s % dd == 0:
            s //= dd
            m *= d
        d += 1
    return m, s


class RadicalSum:
    """Immutable sum of integer multiples of square roots, in normal form.

    Supports ``+`` with another :class:`RadicalSum` (or a nonnegative int),
    ``*`` by a nonnegative int, exact rich comparisons, ``float()`` and a
    stable text rendering with radicands ascending.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for s, c in terms.items():
                if s < 1:
                    raise ValueError(f"radicand must be positive, got {s}")
                if c < 0:
                    raise ValueError(f"coefficient must be nonnegative, got {c}")
                if c == 0:
                    continue
                m, sf = _squarefree_split(s)
                if m != 1:
                    raise ValueError(f"radicand {s} is not squarefree")
                clean[sf] = clean.get(sf, 0) + c
        self._terms = clean

    @classmethod
    def _unchecked(cls, terms: dict[int, int]) -> "RadicalSum":
        # internal fast path: terms already in normal form
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "RadicalSum":
        return cls._unchecked({})

    @classmethod
    def integer(cls, c: int) -> "RadicalSum":
        if c < 0:
            raise ValueError(f"coefficient must be nonnegative, got {c}")
        return cls._unchecked({1: c} if c else {})

    @property
    def terms(self) -> dict[int, int]:
        """Term map radicand -> coefficient (a copy; radicands squarefree)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "RadicalSum | int") -> "RadicalSum":
        if isinstance(other, int):
            other = RadicalSum.integer(other)
        if not isinstance(other, RadicalSum):
            return NotImplemented
        merged = dict(self._terms)
        for s, c in other._terms.items():
            merged[s] = merged.get(s, 0) + c
        return RadicalSum._unchecked(merged)

    __radd__ = __add__

    def __mul__(self, m: int) -> "RadicalSum":
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            raise ValueError(f"scale factor must be nonnegative, got {m}")
        if m == 0:
            return RadicalSum.zero()
        return RadicalSum._unchecked({s: c * m for s, c in self._terms.items()})

    __rmul__ = __mul__

    # -- comparisons -----------------------------------------------------

    def _scaled_bounds(self, bits: int) -> tuple[int, int]:
        # integer lo, hi with lo <= value * 2**bits <= hi
        lo = hi = 0
        shift = 2 * bits
        for s, c in self._terms.items():
            scaled = s << shift
            r = math.isqrt(scaled)
            lo += c * r
            hi += c * (r if r * r == scaled else r + 1)
        return lo, hi

    def compare(self, other: "RadicalSum") -> int:
        """Exact three-way comparison: -1, 0 or 1.

        Equality falls out of the unique normal form; strict order is decided
        by interval refinement, which must terminate because distinct sums
        are distinct reals.
        """
        if not isinstance(other, RadicalSum):
            raise TypeError(f"cannot compare RadicalSum with {type(other).__name__}")
        if self._terms == other._terms:
            return 0
        bits = _START_BITS
        while bits <= _MAX_BITS:
            alo, ahi = self._scaled_bounds(bits)
            blo, bhi = other._scaled_bounds(bits)
            if ahi < blo:
                return -1
            if bhi < alo:
                return 1
            bits *= 2
        raise ArithmeticError(
            "interval refinement failed to separate distinct values "
            f"({self!r} vs {other!r})"
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({1: other} if other else {})
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __lt__(self, other: "RadicalSum") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "RadicalSum") -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: "RadicalSum") -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: "RadicalSum") -> bool:
        return self.compare(other) >= 0

    # -- conversions -----------------------------------------------------

    def __float__(self) -> float:
        # summed in ascending radicand order for reproducibility; error is
        # bounded by (number of terms) * 1 ulp of the partial sums
        return sum((c * math.sqrt(s) for s, c in sorted(self._terms.items())), 0.0)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for s, c in sorted(self._terms.items()):
            if s == 1:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"sqrt({s})")
            else:
                parts.append(f"{c}*sqrt({s})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"RadicalSum({self._terms!r})"

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items()))


def sqrt_int(k: int) -> RadicalSum:
    """Exact square root of a positive integer, as ``m*sqrt(s)`` with ``s`` squarefree."""
    if k < 1:
        raise ValueError(f"sqrt_int requires a positive integer, got {k}")
    m, s = _squarefree_split(k)
    return RadicalSum._unchecked({s: m})
