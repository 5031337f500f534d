"""Command-line interface: enumerate, count, finite, verify, check.

Exit codes: 0 success, 1 verification mismatch (an internal claim
failed), 2 invalid input (bad flags, malformed JSON, broken encoding).
Output is deterministic: identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import bridge, counting
from .continuous import (
    BadAnchorRangeError,
    BreakpointRep,
    Breakpoints,
    BreakSummand,
    FamilyChoice,
    InvalidRepError,
    Side,
    all_break_summands,
    enumerate_maximal_rigid_reps,
    is_uniform,
    validate_rep,
)
from .finite import (
    LinearQuiver,
    ResourceLimitError,
    all_intervals,
    enumerate_maximal_rigid,
    ext_dim,
    ext_dim_resolution,
    euler_form,
    hom_dim,
    hom_dim_bruteforce,
    is_maximal_rigid_set,
    is_tilting,
)
from .intervals import (
    CLOSED,
    OPEN,
    BoundaryKind,
    Interval,
    InvalidIntervalError,
    Point,
    compatible,
)

_KINDS = {"closed": CLOSED, "open": OPEN}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxrigid",
        description="Exact enumeration and counting of maximal rigid interval-decomposable representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate maximal rigid encodings on n segments")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--max-n", type=int, default=5)

    p = sub.add_parser("count", help="closed-form counts, optionally cross-checked by enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("formula", "enumerate", "both"), default="both")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--max-n", type=int, default=5)

    p = sub.add_parser("finite", help="maximal rigid sets on the linear quiver with m vertices")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--max-m", type=int, default=15)

    p = sub.add_parser("verify", help="run the internal cross-check suites")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("check", help="validate a representation encoding from a JSON file")
    p.add_argument("path")
    return parser


# ---------------------------------------------------------------------------
# JSON encoding of representations


def rep_to_dict(rep: BreakpointRep) -> dict:
    return {
        "n": rep.grid.n,
        "alpha": [str(v) for v in rep.grid.values],
        "t_part": [
            {
                "lo": s.lo,
                "lo_kind": str(s.lo_kind),
                "hi": s.hi,
                "hi_kind": str(s.hi_kind),
            }
            for s in rep.summands
        ],
        "families": [
            {
                "segment": f.segment,
                "side": str(f.side),
                "anchor": f.anchor,
                "anchor_kind": str(f.anchor_kind),
            }
            for f in rep.families
        ],
    }


def _expect_keys(obj, allowed: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise InvalidRepError(f"NotAnObject({where})")
    extra = set(obj) - allowed
    if extra:
        raise InvalidRepError(f"UnknownKey({sorted(extra)[0]}) in {where}")


def _kind(value, where: str) -> BoundaryKind:
    if value not in _KINDS:
        raise InvalidRepError(f"BadBoundaryKind({value!r}) in {where}")
    return _KINDS[value]


def rep_from_dict(data: dict) -> BreakpointRep:
    if not isinstance(data, dict):
        raise InvalidRepError("TopLevelNotAnObject")
    _expect_keys(data, {"n", "alpha", "t_part", "families"}, "top level")
    try:
        n = int(data["n"])
    except (KeyError, TypeError, ValueError):
        raise InvalidRepError("MissingOrBadField(n)") from None
    if "alpha" in data and data["alpha"] is not None:
        if not isinstance(data["alpha"], list):
            raise InvalidRepError("BadAlpha")
        try:
            grid = Breakpoints(tuple(Fraction(v) for v in data["alpha"]))
        except (TypeError, ValueError, ZeroDivisionError):
            raise InvalidRepError("BadAlpha") from None
        if grid.n != n:
            raise InvalidRepError(f"AlphaLengthMismatch(n={n}, points={grid.n + 1})")
    else:
        grid = Breakpoints.uniform(n)
    for field in ("t_part", "families"):
        if field in data and not isinstance(data[field], list):
            raise InvalidRepError(f"NotAList({field})")
    summands = []
    for entry in data.get("t_part", []):
        _expect_keys(entry, {"lo", "lo_kind", "hi", "hi_kind"}, "t_part entry")
        try:
            summands.append(
                BreakSummand(
                    int(entry["lo"]),
                    _kind(entry["lo_kind"], "t_part entry"),
                    int(entry["hi"]),
                    _kind(entry["hi_kind"], "t_part entry"),
                )
            )
        except InvalidIntervalError as exc:
            raise InvalidRepError(str(exc)) from None
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidRepError):
                raise
            raise InvalidRepError("MissingOrBadField(t_part)") from None
    families = []
    for entry in data.get("families", []):
        _expect_keys(entry, {"segment", "side", "anchor", "anchor_kind"}, "families entry")
        side = entry.get("side")
        if side not in ("left", "right"):
            raise InvalidRepError(f"BadSide({side!r})")
        try:
            families.append(
                FamilyChoice(
                    int(entry["segment"]),
                    Side(side),
                    int(entry["anchor"]),
                    _kind(entry["anchor_kind"], "families entry"),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidRepError):
                raise
            raise InvalidRepError("MissingOrBadField(families)") from None
    return BreakpointRep(grid=grid, summands=tuple(summands), families=tuple(families))


def pretty_rep(rep: BreakpointRep) -> str:
    parts = [str(s) for s in rep.summands]
    fams = [str(f) for f in rep.families]
    return " ".join(parts) + " + " + " ".join(fams)


# ---------------------------------------------------------------------------
# subcommands


def _print_table(rows: list[list[str]]) -> None:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def cmd_enumerate(args) -> int:
    grid = Breakpoints.uniform(args.n)
    reps = enumerate_maximal_rigid_reps(grid, max_n=args.max_n)
    if args.format == "json":
        payload = {"n": args.n, "count": len(reps), "reps": [rep_to_dict(r) for r in reps]}
        print(json.dumps(payload, indent=2))
    else:
        for rep in reps:
            print(pretty_rep(rep))
        print(f"count: {len(reps)}")
    return 0


def cmd_count(args) -> int:
    enumerated = None
    enumerated_projected = None
    if args.mode in ("enumerate", "both"):
        grid = Breakpoints.uniform(args.n)
        enumerated = len(enumerate_maximal_rigid_reps(grid, max_n=args.max_n))
        enumerated_projected = len(
            enumerate_maximal_rigid(bridge.segment_quiver(args.n))
        )
    report = counting.report_for(args.n, enumerated, enumerated_projected)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        show = lambda v: "-" if v is None else str(v)
        match = report.match
        _print_table(
            [
                ["n", "formula", "projected", "enumerated", "projected_enumerated", "match"],
                [
                    str(report.n),
                    str(report.formula_count),
                    str(report.projected_formula_count),
                    show(report.enumerated_count),
                    show(report.enumerated_projected_count),
                    "-" if match is None else str(match).lower(),
                ],
            ]
        )
    if report.match is False:
        return 1
    return 0


def cmd_finite(args) -> int:
    quiver = LinearQuiver(args.m)
    formula = counting.catalan(args.m)
    sets = None
    if args.enumerate:
        sets = enumerate_maximal_rigid(quiver, max_m=args.max_m)
    if args.format == "json":
        payload = {"m": args.m, "formula": formula}
        if sets is not None:
            payload["enumerated"] = len(sets)
            payload["match"] = len(sets) == formula
            payload["sets"] = [[str(i) for i in s.sorted_summands()] for s in sets]
        print(json.dumps(payload, indent=2))
    else:
        if sets is not None:
            for s in sets:
                print(str(s))
            match = str(len(sets) == formula).lower()
            print(f"m: {args.m}  formula: {formula}  enumerated: {len(sets)}  match: {match}")
        else:
            print(f"m: {args.m}  formula: {formula}")
    if sets is not None and len(sets) != formula:
        return 1
    return 0


def cmd_check(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        data = json.load(fh)
    rep = rep_from_dict(data)
    validate_rep(rep)
    uniform = is_uniform(rep)
    print(
        f"ok: n={rep.grid.n}, {len(rep.summands)} summands, "
        f"{len(rep.families)} families, uniform={str(uniform).lower()}"
    )
    return 0


# ---------------------------------------------------------------------------
# verify


def _random_point(rng: random.Random, n: int, pool: dict) -> Point:
    if rng.random() < 0.4:
        return Point.breakpoint(rng.randrange(n + 1))
    segment = rng.randrange(n)
    return Point.generic(segment, rng.choice(pool[segment]))


def _random_interval(rng: random.Random, n: int, pool: dict) -> Interval:
    while True:
        p, q = _random_point(rng, n, pool), _random_point(rng, n, pool)
        if p == q:
            try:
                return Interval(p, CLOSED, q, CLOSED)
            except InvalidIntervalError:
                continue
        lo, hi = (p, q) if p < q else (q, p)
        kinds = (CLOSED, OPEN)
        try:
            return Interval(lo, rng.choice(kinds), hi, rng.choice(kinds))
        except InvalidIntervalError:
            continue


def cmd_verify(args) -> int:
    failures = 0

    def check(label: str, ok: bool) -> None:
        nonlocal failures
        print(("ok: " if ok else "FAIL: ") + label)
        if not ok:
            failures += 1

    # closed forms against the enumeration/resolution oracles
    ok = True
    for m in range(1, 7):
        quiver = LinearQuiver(m)
        for i in all_intervals(quiver):
            for j in all_intervals(quiver):
                if hom_dim(quiver, i, j) != hom_dim_bruteforce(quiver, i, j):
                    ok = False
                if ext_dim(quiver, i, j) != ext_dim_resolution(quiver, i, j):
                    ok = False
                if hom_dim(quiver, i, j) - ext_dim(quiver, i, j) != euler_form(quiver, i, j):
                    ok = False
    check("hom/ext closed forms match enumeration and resolution oracles (m <= 6)", ok)

    ok = True
    for m in range(1, 5):
        quiver = LinearQuiver(m)
        ivs = all_intervals(quiver)
        for r in range(1 << len(ivs)):
            subset = frozenset(iv for k, iv in enumerate(ivs) if r >> k & 1)
            if is_tilting(quiver, subset) != is_maximal_rigid_set(quiver, subset):
                ok = False
    check("tilting <=> maximal rigid on every subset (m <= 4)", ok)

    for n in range(1, args.n + 1):
        summand_ivals = [s.as_interval() for s in all_break_summands(n)]
        ok = all(
            compatible(a, b) == bridge.discretized_compatible(a, b)
            for a in summand_ivals
            for b in summand_ivals
        )
        check(f"compatibility matches the discretized Ext oracle (grid pairs, n={n})", ok)

    rng = random.Random(args.seed)
    pool = {
        seg: [Fraction(rng.randrange(1, 60), 60) for _ in range(6)] for seg in range(3)
    }
    ok = True
    for _ in range(10_000):
        a = _random_interval(rng, 3, pool)
        b = _random_interval(rng, 3, pool)
        if compatible(a, b) != bridge.discretized_compatible(a, b):
            ok = False
            break
    check(f"compatibility matches the discretized Ext oracle (10000 random pairs, seed {args.seed})", ok)

    for n in range(1, args.n + 1):
        grid = Breakpoints.uniform(n)
        reps = enumerate_maximal_rigid_reps(grid)
        projected = enumerate_maximal_rigid(bridge.segment_quiver(n))
        formula = counting.continuous_count(n)
        projected_formula = counting.projected_count(n)
        check(
            f"n={n}: direct enumeration ({len(reps)}) matches the formula ({formula})",
            len(reps) == formula,
        )
        check(
            f"n={n}: segment-quiver enumeration ({len(projected)}) matches the formula ({projected_formula})",
            len(projected) == projected_formula,
        )
        images: dict[frozenset, int] = {}
        for rep in reps:
            images[bridge.project(rep)] = images.get(bridge.project(rep), 0) + 1
        projected_sets = {h.summands for h in projected}
        check(f"n={n}: projection is onto the maximal rigid sets", set(images) == projected_sets)
        check(
            f"n={n}: every projected image has exactly 2^{n} preimages",
            all(v == 2**n for v in images.values()),
        )
        expanded = []
        for h in projected:
            expanded.extend(bridge.fiber_reps(h.summands, grid))
        check(
            f"n={n}: fiber expansion reproduces the direct enumeration",
            sorted(expanded, key=lambda r: (r.summands, r.families)) == reps,
        )
        quiver = bridge.segment_quiver(n)
        ok = all(
            bridge.condense(bridge.expand([iv], n)) == frozenset([iv])
            for iv in all_intervals(quiver)
        )
        check(f"n={n}: refined/segment round-trip on all interval modules", ok)

    ok = all(
        counting.continuous_count(n) == 2**n * counting.projected_count(n)
        and counting.projected_count(n) == counting.catalan(2 * n + 1)
        for n in range(1, 65)
    )
    check("count identities hold for n <= 64", ok)

    if failures:
        print(f"{failures} check(s) failed")
        return 1
    print("all checks passed")
    return 0


# ---------------------------------------------------------------------------


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {
        "enumerate": cmd_enumerate,
        "count": cmd_count,
        "finite": cmd_finite,
        "verify": cmd_verify,
        "check": cmd_check,
    }
    try:
        return handlers[args.command](args)
    except (bridge.NoAnchorError, bridge.AmbiguousAnchorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        InvalidRepError,
        InvalidIntervalError,
        ResourceLimitError,
        json.JSONDecodeError,
        OSError,
        TypeError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
