"""Transfer between continuous encodings and finite linear quivers.

Endpoint flavors become vertex choices on two auxiliary quivers:

  * the *refined* quiver has 3n+1 vertices: each breakpoint a_i flanked
    by one-sided satellites a_i+ (just after) and a_i- (just before);
  * the *segment* quiver has 2n+1 vertices: the breakpoints interleaved
    with one vertex per open segment.

Projecting a breakpoint representation drops the generic families and
rewrites each anchored summand on the refined quiver; condensing then
merges each segment's two satellites into the segment vertex, a bijection
on interval modules.  Over maximal rigid sets the projection is onto and
every image has exactly 2^n preimages: per segment the family side can be
left or right, and for each side the anchor is forced by the summands.

``discretized_compatible`` is the independent oracle for the interval
compatibility predicate: it replays a pair of flavored intervals as
interval modules on an ad-hoc linear quiver (every endpoint gets its own
satellites) and asks for Ext vanishing in both directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .continuous import (
    LEFT,
    RIGHT,
    BreakpointRep,
    Breakpoints,
    BreakSummand,
    FamilyChoice,
    Side,
    rep_sort_key,
    sample_offsets,
    validate_rep,
)
from .intervals import CLOSED, OPEN, BoundaryKind, Interval, Point, compatible
from .finite import FiniteInterval, LinearQuiver, ext_dim


class NoAnchorError(RuntimeError):
    """No admissible family anchor survives against the given summands."""


class AmbiguousAnchorError(RuntimeError):
    """More than one family anchor survives; the summands underdetermine it."""


def refined_quiver(n: int) -> LinearQuiver:
    """The 3n+1 vertex quiver a_0, a_0+, a_1-, a_1, ..., a_n-, a_n."""
    labels = []
    for i in range(n + 1):
        labels.append(f"a{i}")
        if i < n:
            labels.append(f"a{i}+")
            labels.append(f"a{i + 1}-")
    return LinearQuiver(3 * n + 1, tuple(labels))


def segment_quiver(n: int) -> LinearQuiver:
    """The 2n+1 vertex quiver a_0, a_01, a_1, a_12, ..., a_n."""
    labels = []
    for i in range(n + 1):
        labels.append(f"a{i}")
        if i < n:
            labels.append(f"a{i}{i + 1}")
    return LinearQuiver(2 * n + 1, tuple(labels))


@dataclass(frozen=True)
class RefinedRep:
    """Interval modules on the refined quiver avoiding forbidden endpoints.

    Vertices are 1-based; breakpoint a_i sits at 3i+1, its right satellite
    a_i+ at 3i+2 and its left satellite a_i- at 3i.  No summand may start
    at a left satellite or end at a right satellite.
    """

    n: int
    summands: frozenset[FiniteInterval]

    def __post_init__(self):
        top = 3 * self.n + 1
        for s in self.summands:
            if s.b > top:
                raise ValueError(f"summand {s} out of range on the refined quiver")
            if s.a % 3 == 0:
                raise ValueError(f"summand {s} starts at a left satellite")
            if s.b % 3 == 2:
                raise ValueError(f"summand {s} ends at a right satellite")


def to_refined(rep: BreakpointRep) -> RefinedRep:
    """Rewrite the anchored summands on the refined quiver; families vanish."""
    validate_rep(rep)
    out = set()
    for s in rep.summands:
        a = 3 * s.lo + 1 if s.lo_kind is CLOSED else 3 * s.lo + 2
        b = 3 * s.hi + 1 if s.hi_kind is CLOSED else 3 * s.hi
        out.add(FiniteInterval(a, b))
    return RefinedRep(rep.grid.n, frozenset(out))


def condense(refined: RefinedRep) -> frozenset[FiniteInterval]:
    """Merge satellites into segment vertices: a bijection onto the segment quiver."""
    out = set()
    for s in refined.summands:
        if s.a % 3 == 1:
            u = 2 * (s.a - 1) // 3 + 1
        else:  # right satellite a_i+
            u = 2 * (s.a - 2) // 3 + 2
        if s.b % 3 == 1:
            v = 2 * (s.b - 1) // 3 + 1
        else:  # left satellite a_j-
            v = 2 * s.b // 3
        out.add(FiniteInterval(u, v))
    return frozenset(out)


def expand(image: Iterable[FiniteInterval], n: int) -> RefinedRep:
    """Inverse of :func:`condense`."""
    top = 2 * n + 1
    out = set()
    for s in image:
        if s.b > top:
            raise ValueError(f"summand {s} out of range on the segment quiver")
        a = 3 * (s.a - 1) // 2 + 1 if s.a % 2 == 1 else 3 * (s.a - 2) // 2 + 2
        b = 3 * (s.b - 1) // 2 + 1 if s.b % 2 == 1 else 3 * s.b // 2
        out.add(FiniteInterval(a, b))
    return RefinedRep(n, frozenset(out))


def project(rep: BreakpointRep) -> frozenset[FiniteInterval]:
    """Image of a breakpoint representation on the segment quiver."""
    return condense(to_refined(rep))


def pull_back_summands(image: Iterable[FiniteInterval], n: int) -> tuple[BreakSummand, ...]:
    """The anchored summands whose projection is the given segment-quiver set."""
    top = 2 * n + 1
    out = []
    for s in image:
        if s.b > top:
            raise ValueError(f"summand {s} out of range on the segment quiver")
        if s.a % 2 == 1:
            lo, lo_kind = (s.a - 1) // 2, CLOSED
        else:
            lo, lo_kind = (s.a - 2) // 2, OPEN
        if s.b % 2 == 1:
            hi, hi_kind = (s.b - 1) // 2, CLOSED
        else:
            hi, hi_kind = s.b // 2, OPEN
        out.append(BreakSummand(lo, lo_kind, hi, hi_kind))
    return tuple(sorted(out))


def forced_anchor(
    segment: int,
    side: Side,
    summands: Iterable[BreakSummand],
    n: int,
    samples_per_segment: int = 2,
) -> tuple[int, BoundaryKind]:
    """The unique (anchor, flavor) whose family is compatible with the summands.

    Searched, not computed in closed form; zero or several survivors mean
    the summands do not come from a maximal rigid projection and abort
    loudly.
    """
    ivals = [s.as_interval() for s in summands]
    side = Side(side)
    anchors = range(segment + 1, n + 1) if side is RIGHT else range(0, segment + 1)
    offsets = sample_offsets(samples_per_segment)
    survivors = []
    for anchor in anchors:
        for kind in (CLOSED, OPEN):
            fam = FamilyChoice(segment, side, anchor, kind)
            members = [
                m for off in offsets for m in fam.members(Point.generic(segment, off))
            ]
            if all(compatible(m, iv) for m in members for iv in ivals):
                survivors.append((anchor, kind))
    if not survivors:
        raise NoAnchorError(f"no anchor for segment {segment}, side {side}")
    if len(survivors) > 1:
        raise AmbiguousAnchorError(
            f"anchors {survivors} all fit segment {segment}, side {side}"
        )
    return survivors[0]


def fiber_reps(image: Iterable[FiniteInterval], grid: Breakpoints) -> list[BreakpointRep]:
    """The 2^n preimages of a maximal rigid segment-quiver set.

    Pull the summands back, then take every left/right side assignment
    with anchors forced per (segment, side).
    """
    n = grid.n
    summands = pull_back_summands(image, n)
    anchors = {
        (j, side): forced_anchor(j, side, summands, n)
        for j in range(n)
        for side in (LEFT, RIGHT)
    }
    out = []
    for sides in itertools.product((LEFT, RIGHT), repeat=n):
        families = tuple(
            FamilyChoice(j, side, *anchors[(j, side)]) for j, side in enumerate(sides)
        )
        out.append(BreakpointRep(grid=grid, summands=summands, families=families))
    out.sort(key=rep_sort_key)
    return out


def discretized_compatible(i: Interval, j: Interval) -> bool:
    """Replay a pair of intervals on an ad-hoc quiver and test Ext vanishing.

    Every endpoint p of the two intervals contributes three consecutive
    vertices p-, p, p+; a closed end lands on p, an open lower end on p+
    and an open upper end on p-.  The pair is compatible exactly when Ext
    vanishes in both directions between the translated modules.
    """
    points = sorted({i.lo, i.hi, j.lo, j.hi})
    index = {p: k for k, p in enumerate(points)}
    quiver = LinearQuiver(3 * len(points))

    def translate(iv: Interval) -> FiniteInterval:
        k = index[iv.lo]
        a = 3 * k + 2 if iv.lo_kind is CLOSED else 3 * k + 3
        l = index[iv.hi]
        b = 3 * l + 2 if iv.hi_kind is CLOSED else 3 * l + 1
        return FiniteInterval(a, b)

    fi, fj = translate(i), translate(j)
    return ext_dim(quiver, fi, fj) == 0 and ext_dim(quiver, fj, fi) == 0
