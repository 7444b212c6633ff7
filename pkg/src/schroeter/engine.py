"""The iterated pair-combination construction.

Starting from three validated point pairs, every unordered pair of pairs is
combined exactly once: the like-joins and cross-joins of the four points are
intersected to produce a new pair, which is deduplicated by canonical key.
All points land on one cubic (or, in degenerate torsion configurations, on
every cubic through the bootstrap points); this is asserted at admission
time.  Output is deterministic regardless of internal scheduling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .cubic import Cubic, cubic_family_through, evaluate, fit_cubic_9
from .errors import (
    BarNotOnCurve,
    CompleteQuadrilateral,
    DegenerateLines,
    DegenerateNine,
    DuplicatePoints,
    FourCollinear,
    IdenticalPoints,
    InvariantViolation,
    NotOnCurve,
    SharedPoint,
)
from .involution import is_complete_quadrilateral_pairing
from .projective import ProjLine, ProjPoint, all_collinear, join, meet

DEFAULT_MAX_POINTS = 512
DEFAULT_MAX_GENERATIONS = 16

PairKey = tuple[tuple[int, int, int], tuple[int, int, int]]


@dataclass(frozen=True)
class PointPair:
    """An unordered pair of distinct points, members in canonical order."""

    first: ProjPoint
    second: ProjPoint

    @classmethod
    def of(cls, p: ProjPoint, q: ProjPoint) -> "PointPair":
        if p == q:
            raise IdenticalPoints(f"a pair needs two distinct points, got {p} twice")
        if q.coords < p.coords:
            p, q = q, p
        return cls(p, q)

    @property
    def points(self) -> tuple[ProjPoint, ProjPoint]:
        return (self.first, self.second)

    @property
    def key(self) -> PairKey:
        return (self.first.coords, self.second.coords)

    @property
    def label(self) -> str:
        return f"{self.first.key}|{self.second.key}"

    def other(self, p: ProjPoint) -> ProjPoint:
        if p == self.first:
            return self.second
        if p == self.second:
            return self.first
        raise ValueError(f"{p} is not a member of {self}")

    def __contains__(self, p: ProjPoint) -> bool:
        return p == self.first or p == self.second

    def __repr__(self):
        return f"{{{self.first}, {self.second}}}"


@dataclass(frozen=True)
class SeedConfig:
    """Three validated seed pairs; construct via validate_seed."""

    pair_a: PointPair
    pair_b: PointPair
    pair_c: PointPair

    @property
    def pairs(self) -> tuple[PointPair, PointPair, PointPair]:
        return (self.pair_a, self.pair_b, self.pair_c)

    @property
    def points(self) -> tuple[ProjPoint, ...]:
        return tuple(p for pair in self.pairs for p in pair.points)


def validate_seed(
    pair_a: PointPair,
    pair_b: PointPair,
    pair_c: PointPair,
    *,
    allow_quadrilateral: bool = False,
) -> SeedConfig:
    """Check the seed conditions: six distinct points, no four collinear,
    and not the opposite-vertex pairs of one complete quadrilateral.

    allow_quadrilateral skips the last check; such seeds reproduce only
    their own six points (useful for exercising that degeneracy in tests).
    """
    points = (*pair_a.points, *pair_b.points, *pair_c.points)
    if len(set(points)) != 6:
        raise DuplicatePoints("seed pairs must consist of six pairwise distinct points")
    for quad in combinations(points, 4):
        if all_collinear(quad):
            raise FourCollinear(f"four seed points are collinear: {quad}")
    if not allow_quadrilateral and is_complete_quadrilateral_pairing(
        pair_a.points, pair_b.points, pair_c.points
    ):
        raise CompleteQuadrilateral(
            "the seed pairs are opposite vertices of a complete quadrilateral"
        )
    return SeedConfig(pair_a, pair_b, pair_c)


def combine_with_lines(p: PointPair, q: PointPair):
    """Combine two pairs; returns the new pair and the four joining lines."""
    if set(p.points) & set(q.points):
        raise SharedPoint(f"pairs {p} and {q} share a point")
    like_1 = join(p.first, q.first)
    like_2 = join(p.second, q.second)
    cross_1 = join(p.first, q.second)
    cross_2 = join(p.second, q.first)
    if like_1 == like_2 or cross_1 == cross_2:
        raise DegenerateLines(f"joining lines of {p} and {q} coincide")
    s = meet(like_1, like_2)
    sbar = meet(cross_1, cross_2)
    if s == sbar:
        raise DegenerateLines(f"both meets of {p} and {q} coincide at {s}")
    return PointPair.of(s, sbar), (like_1, like_2, cross_1, cross_2)


def combine(p: PointPair, q: PointPair) -> PointPair:
    """The pair {like-join meet, cross-join meet} of two disjoint pairs."""
    return combine_with_lines(p, q)[0]


@dataclass(frozen=True)
class SeedBootstrap:
    """The three derived meets of a seed with strict distinctness, plus the
    unique cubic through the nine base points (partners asserted on it)."""

    direct: tuple[ProjPoint, ProjPoint, ProjPoint]
    crossed: tuple[ProjPoint, ProjPoint, ProjPoint]
    curve: Cubic


def bootstrap_seed(seed: SeedConfig) -> SeedBootstrap:
    """Derive the three like-join meets and cross-join meets of the seed.

    With seed pairs (A, Abar), (B, Bbar), (C, Cbar) in canonical member
    order, the direct meets are AB^AbarBbar, BC^BbarCbar, CA^CbarAbar and
    the crossed meets swap one bar in each.  The nine points consisting of
    the seed and the direct meets must be pairwise distinct; the cubic
    through them is fitted exactly and must also contain the crossed meets.
    """
    pairs = seed.pairs
    direct = []
    crossed = []
    for i, j in ((0, 1), (1, 2), (2, 0)):
        p, q = pairs[i], pairs[j]
        direct.append(meet(join(p.first, q.first), join(p.second, q.second)))
        crossed.append(meet(join(p.first, q.second), join(p.second, q.first)))
    nine = list(seed.points) + direct
    if len(set(nine)) != 9:
        raise DegenerateNine("seed points and derived meets are not pairwise distinct")
    curve = fit_cubic_9(nine)
    for point in crossed:
        if evaluate(curve, point) != 0:
            raise BarNotOnCurve(f"crossed meet {point} misses the fitted cubic")
    return SeedBootstrap(tuple(direct), tuple(crossed), curve)


@dataclass
class Derivation:
    """One attempted combination, recorded in processing order.

    Parents and child are pair keys; labels are built only at
    serialization time (coordinates can run to thousands of digits).
    """

    parents: tuple[PairKey, PairKey]
    child: PairKey | None
    status: str  # "new" | "duplicate" | "skipped"
    reason: str | None = None
    lines: tuple[ProjLine, ...] | None = None


@dataclass
class ConstructionState:
    """Result of a construction run."""

    seed: SeedConfig
    pairs: tuple[PointPair, ...]
    curve: Cubic | None
    curve_basis: tuple[Cubic, ...]
    closed: bool
    generations: int
    provenance: list[Derivation] = field(default_factory=list)
    frontier: tuple[tuple[PairKey, PairKey], ...] = ()

    @property
    def points(self) -> tuple[ProjPoint, ...]:
        return tuple(p for pair in self.pairs for p in pair.points)

    @property
    def point_count(self) -> int:
        return len(self.points)


def _on_all(curves, point: ProjPoint) -> bool:
    return all(evaluate(c, point) == 0 for c in curves)


class _Workspace:
    def __init__(self):
        self.pairs: dict[PairKey, PointPair] = {}
        self.point_owner: dict[ProjPoint, PairKey] = {}

    def admit(self, pair: PointPair):
        if pair.key in self.pairs:
            return False
        for p in pair.points:
            owner = self.point_owner.get(p)
            if owner is not None:
                raise InvariantViolation(
                    f"point {p} of {pair} already belongs to pair {self.pairs[owner]}"
                )
        self.pairs[pair.key] = pair
        for p in pair.points:
            self.point_owner[p] = pair.key
        return True

    @property
    def point_count(self) -> int:
        return 2 * len(self.pairs)


def run(
    seed: SeedConfig,
    max_points: int = DEFAULT_MAX_POINTS,
    max_generations: int = DEFAULT_MAX_GENERATIONS,
    *,
    curve: Cubic | None = None,
    scheduler_seed: int | None = None,
) -> ConstructionState:
    """Breadth-first closure of the pair-combination construction.

    Every unordered pair of pairs is combined exactly once; children are
    deduplicated by canonical key and admitted in canonical order, so two
    runs produce identical output no matter how the internal worklist is
    ordered (`scheduler_seed` shuffles it to prove the point).  Each new
    point is asserted to lie on every cubic through the bootstrap points,
    and on `curve` when one is supplied.  The run stops when no combination
    is pending (closed) or when a cap is reached (not closed).
    """
    rng = random.Random(scheduler_seed) if scheduler_seed is not None else None
    ws = _Workspace()
    provenance: list[Derivation] = []
    visited: set[tuple[PairKey, PairKey]] = set()

    for pair in seed.pairs:
        ws.admit(pair)

    def combo_key(k1: PairKey, k2: PairKey):
        return (k1, k2) if k1 <= k2 else (k2, k1)

    def process(k1: PairKey, k2: PairKey) -> bool:
        """Combine one pending pair of pairs; returns True if a pair was admitted."""
        visited.add(combo_key(k1, k2))
        p, q = ws.pairs[k1], ws.pairs[k2]
        parents = (k1, k2)
        try:
            child, lines = combine_with_lines(p, q)
        except (SharedPoint, DegenerateLines, IdenticalPoints) as exc:
            provenance.append(Derivation(parents, None, "skipped", type(exc).__name__))
            return False
        if curve_checks:
            for point in child.points:
                if not _on_all(curve_checks, point):
                    raise InvariantViolation(
                        f"constructed point {point} is off the construction cubic"
                    )
        if ws.admit(child):
            provenance.append(Derivation(parents, child.key, "new", None, lines))
            return True
        provenance.append(Derivation(parents, child.key, "duplicate", None, lines))
        return False

    # Bootstrap: combine the three seed pairs among themselves, then pin the
    # curve family through everything derived so far.
    curve_checks: tuple[Cubic, ...] = ()
    seed_keys = [pair.key for pair in seed.pairs]
    for i, j in ((0, 1), (1, 2), (2, 0)):
        process(seed_keys[i], seed_keys[j])

    pool = [p for pair in ws.pairs.values() for p in pair.points]
    basis = cubic_family_through(pool)
    if not basis:
        raise InvariantViolation("no cubic passes through the bootstrap points")
    if curve is not None:
        for point in pool:
            if evaluate(curve, point) != 0:
                raise NotOnCurve(f"bootstrap point {point} is not on the supplied curve")
        curve_checks = basis + (curve,)
    else:
        curve_checks = basis
    for point in pool:
        if not _on_all(basis, point):
            raise InvariantViolation("bootstrap point misses its own fitted family")

    unique = basis[0] if len(basis) == 1 else curve
    generation = 0
    capped = ws.point_count >= max_points

    while not capped and generation < max_generations:
        pending = [
            combo_key(k1, k2)
            for k1, k2 in combinations(ws.pairs.keys(), 2)
            if combo_key(k1, k2) not in visited
        ]
        if not pending:
            break
        if rng is not None:
            rng.shuffle(pending)
        pending.sort()
        generation += 1
        for k1, k2 in pending:
            if ws.point_count + 2 > max_points:
                capped = True
                break
            process(k1, k2)

    remaining = [
        combo_key(k1, k2)
        for k1, k2 in combinations(ws.pairs.keys(), 2)
        if combo_key(k1, k2) not in visited
    ]
    closed = not remaining

    ordered = tuple(ws.pairs[k] for k in sorted(ws.pairs.keys()))
    return ConstructionState(
        seed=seed,
        pairs=ordered,
        curve=unique,
        curve_basis=basis,
        closed=closed,
        generations=generation,
        provenance=provenance,
        frontier=tuple(sorted(remaining)),
    )
