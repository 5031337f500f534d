"""A tour of the interval compatibility predicate.

Compatibility of two flavored intervals depends only on how their
endpoints interleave and on the closed/open flags: containment and strict
separation are fine, touching requires both sides open, crossings never
work.  The same verdicts fall out of an independent route that replays
the pair as modules on a small linear quiver and asks for Ext vanishing.
"""

from fractions import Fraction

from maxrigid import (
    CLOSED,
    OPEN,
    Interval,
    Point,
    compatible,
    discretized_compatible,
)

bp = Point.breakpoint
half = Point.generic(0, Fraction(1, 2))

cases = [
    ("nested", Interval(bp(0), CLOSED, bp(1), CLOSED), Interval(half, OPEN, bp(1), CLOSED)),
    ("touching, both open", Interval(bp(0), CLOSED, half, OPEN), Interval(half, OPEN, bp(1), CLOSED)),
    ("touching, closed meets closed", Interval(bp(0), CLOSED, half, CLOSED), Interval(half, CLOSED, bp(1), CLOSED)),
    ("touching, open meets closed", Interval(bp(0), CLOSED, half, OPEN), Interval(half, CLOSED, bp(1), CLOSED)),
    ("point module against an open start", Interval(half, CLOSED, half, CLOSED), Interval(half, OPEN, bp(1), CLOSED)),
    ("strictly separated", Interval(bp(0), CLOSED, Point.generic(0, Fraction(1, 3)), CLOSED), Interval(Point.generic(0, Fraction(2, 3)), CLOSED, bp(1), CLOSED)),
    ("crossing", Interval(bp(0), CLOSED, Point.generic(0, Fraction(3, 5)), CLOSED), Interval(Point.generic(0, Fraction(2, 5)), CLOSED, bp(1), CLOSED)),
]

print(f"{'case':38} {'pair':28} predicate  discretized-Ext")
for name, a, b in cases:
    fast = compatible(a, b)
    slow = discretized_compatible(a, b)
    print(f"{name:38} {str(a) + ' vs ' + str(b):28} {str(fast):9}  {slow}")
    assert fast == slow
print("\nthe two routes agree on every case")
