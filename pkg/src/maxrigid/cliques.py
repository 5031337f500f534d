"""Maximal-clique enumeration over bitmask adjacency.

Bron-Kerbosch with pivoting; vertices are bit positions and adjacency
rows are integers, so the inner loop is pure bit arithmetic.  Output
order is deterministic for a given adjacency.
"""

from __future__ import annotations

from typing import Sequence


def max_cliques(adjacency: Sequence[int], subset: int | None = None) -> list[int]:
    """All maximal cliques of the graph restricted to ``subset``, as bitmasks.

    ``adjacency[v]`` is the neighbor bitmask of vertex ``v`` and must not
    contain the bit of ``v`` itself.  ``subset`` defaults to the full
    vertex set.  Maximality is relative to ``subset``.
    """
    n = len(adjacency)
    start = (1 << n) - 1 if subset is None else subset
    adj = list(adjacency)
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot = vertex of p|x with the most neighbors among candidates
        best, pivot = -1, -1
        t = p | x
        while t:
            v = (t & -t).bit_length() - 1
            t &= t - 1
            c = (adj[v] & p).bit_count()
            if c > best:
                best, pivot = c, v
        cand = p & ~adj[pivot]
        while cand:
            vbit = cand & -cand
            v = vbit.bit_length() - 1
            cand ^= vbit
            bk(r | vbit, p & adj[v], x & adj[v])
            p ^= vbit
            x |= vbit

    bk(0, start, 0)
    return out


def bits(mask: int) -> list[int]:
    """Indices of the set bits, ascending."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out
