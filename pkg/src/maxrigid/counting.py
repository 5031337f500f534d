"""Exact closed-form counts and their consistency identities."""

from __future__ import annotations

import math
from dataclasses import dataclass


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k > n."""
    return math.comb(n, k)


def catalan(m: int) -> int:
    """C(2m, m) / (m + 1); counts maximal rigid sets on the linear A_m quiver."""
    value, rem = divmod(binomial(2 * m, m), m + 1)
    assert rem == 0, "Catalan division must be exact"
    return value


def projected_count(n: int) -> int:
    """Maximal rigid sets on the (2n+1)-vertex segment quiver: catalan(2n+1)."""
    if n < 1:
        raise ValueError("segment count must be >= 1")
    value, rem = divmod(binomial(4 * n + 2, 2 * n + 1), 2 * n + 2)
    assert rem == 0
    assert value == catalan(2 * n + 1)
    return value


def continuous_count(n: int) -> int:
    """Maximal rigid breakpoint representations on n segments.

    Closed form 2^(n-1)/(n+1) * C(4n+2, 2n+1), always an integer and
    always equal to 2^n times the projected count.
    """
    if n < 1:
        raise ValueError("segment count must be >= 1")
    value, rem = divmod(2 ** (n - 1) * binomial(4 * n + 2, 2 * n + 1), n + 1)
    assert rem == 0
    assert value == 2**n * projected_count(n)
    return value


@dataclass(frozen=True)
class CountReport:
    """Formula counts next to (optional) enumerated counts for one n."""

    n: int
    formula_count: int
    projected_formula_count: int
    enumerated_count: int | None = None
    enumerated_projected_count: int | None = None

    def __post_init__(self):
        assert self.formula_count == 2**self.n * self.projected_formula_count

    @property
    def match(self) -> bool | None:
        """True/False once something was enumerated, None otherwise."""
        pairs = [
            (self.enumerated_count, self.formula_count),
            (self.enumerated_projected_count, self.projected_formula_count),
        ]
        seen = [(got, want) for got, want in pairs if got is not None]
        if not seen:
            return None
        return all(got == want for got, want in seen)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "formula_count": self.formula_count,
            "projected_formula_count": self.projected_formula_count,
            "enumerated_count": self.enumerated_count,
            "enumerated_projected_count": self.enumerated_projected_count,
            "match": self.match,
        }


def report_for(n: int, enumerated: int | None = None, enumerated_projected: int | None = None) -> CountReport:
    return CountReport(
        n=n,
        formula_count=continuous_count(n),
        projected_formula_count=projected_count(n),
        enumerated_count=enumerated,
        enumerated_projected_count=enumerated_projected,
    )
