"""Flavored intervals on a subdivided line.

The point domain is combinatorial: a point is either a breakpoint
``a_0 < a_1 < ... < a_n`` of a subdivision of [0, 1], or a generic point
strictly inside one of the open segments ``(a_j, a_{j+1})``.  Positions
inside a segment are exact rationals, so point equality is exact and no
comparison ever touches floating point.

An interval carries an independent closed/open flag at each end, giving
the four shapes [a,b], [a,b), (a,b] and (a,b).  Two intervals are
*compatible* exactly when one of the following holds:

  * one is contained in the other (as point sets),
  * they are strictly separated (a gap between them), or
  * they touch at a single point and both are open there.

Touching with a closed end on either side, and genuine crossings, are not
compatible.  For direct sums of interval modules over the linearly
ordered line this predicate characterises vanishing of self-extensions;
it is cross-checked against an independent discretized Ext computation in
:mod:`maxrigid.bridge`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction


class BoundaryKind(IntEnum):
    """Endpoint flavor; CLOSED sorts before OPEN in canonical orderings."""

    CLOSED = 0
    OPEN = 1

    def __str__(self) -> str:
        return self.name.lower()


CLOSED = BoundaryKind.CLOSED
OPEN = BoundaryKind.OPEN


class InvalidIntervalError(ValueError):
    """Base error for malformed intervals."""


class EmptyIntervalError(InvalidIntervalError):
    """Equal endpoints with an open end denote the empty set, not a module."""


class InvertedIntervalError(InvalidIntervalError):
    """Upper endpoint strictly below the lower endpoint."""


@dataclass(frozen=True, order=True)
class Point:
    """A breakpoint (offset 0) or a generic point inside a segment.

    ``index`` is the breakpoint index when ``offset == 0`` and the segment
    index otherwise; ``offset`` is the exact position within the open
    segment, rescaled to (0, 1).  Lexicographic order on
    ``(index, offset)`` is the order on the line: breakpoint ``i``
    precedes every generic point of segment ``i``, which precedes
    breakpoint ``i + 1``.
    """

    index: int
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"negative point index: {self.index}")
        if not isinstance(self.offset, Fraction):
            object.__setattr__(self, "offset", Fraction(self.offset))
        if not 0 <= self.offset < 1:
            raise ValueError(f"segment offset outside [0, 1): {self.offset}")

    @classmethod
    def breakpoint(cls, i: int) -> "Point":
        return cls(i)

    @classmethod
    def generic(cls, segment: int, offset) -> "Point":
        offset = Fraction(offset)
        if not 0 < offset < 1:
            raise ValueError(f"generic offset must lie strictly in (0, 1): {offset}")
        return cls(segment, offset)

    @property
    def is_breakpoint(self) -> bool:
        return self.offset == 0

    def __str__(self) -> str:
        if self.is_breakpoint:
            return f"a{self.index}"
        return f"x{self.index}:{self.offset}"


@dataclass(frozen=True, order=True)
class Interval:
    """A nonempty flavored interval; point modules must be closed-closed.

    The field order (lo, lo_kind, hi, hi_kind) doubles as the canonical
    sort key, with closed sorting before open.
    """

    lo: Point
    lo_kind: BoundaryKind
    hi: Point
    hi_kind: BoundaryKind

    def __post_init__(self):
        if self.hi < self.lo:
            raise InvertedIntervalError(f"InvertedInterval({self.lo} > {self.hi})")
        if self.lo == self.hi and (self.lo_kind is not CLOSED or self.hi_kind is not CLOSED):
            raise EmptyIntervalError(f"EmptyInterval(open end at {self.lo})")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def covers(self, other: "Interval") -> bool:
        """True when ``other`` is contained in this interval as a point set."""
        lo_ok = self.lo < other.lo or (
            self.lo == other.lo and (self.lo_kind is CLOSED or other.lo_kind is OPEN)
        )
        hi_ok = other.hi < self.hi or (
            other.hi == self.hi and (self.hi_kind is CLOSED or other.hi_kind is OPEN)
        )
        return lo_ok and hi_ok

    def __str__(self) -> str:
        lb = "[" if self.lo_kind is CLOSED else "("
        rb = "]" if self.hi_kind is CLOSED else ")"
        return f"{lb}{self.lo},{self.hi}{rb}"


def compatible(i: Interval, j: Interval) -> bool:
    """Whether the two interval modules admit no extension in either direction.

    Symmetric, reflexive, and dependent only on the order pattern of the
    four endpoints together with the four boundary kinds.  Nesting and a
    strict gap are always fine; a shared endpoint is fine only when both
    intervals are open there.
    """
    if i.covers(j) or j.covers(i):
        return True
    if i.hi < j.lo or j.hi < i.lo:
        return True
    if i.hi == j.lo and i.hi_kind is OPEN and j.lo_kind is OPEN:
        return True
    if j.hi == i.lo and j.hi_kind is OPEN and i.lo_kind is OPEN:
        return True
    return False
