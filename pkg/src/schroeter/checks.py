"""Executable predicates for the classical claims behind the construction.

Each check returns a boolean and raises HypothesisFailed (or a more specific
degeneracy) when its premises do not hold, so callers can tell a refuted
claim from an inapplicable configuration.
"""

from __future__ import annotations

from .cubic import Cubic, chord_third, evaluate, tangent_third
from .engine import PointPair
from .errors import (
    DegenerateHexagon,
    HypothesisFailed,
    IdenticalLines,
    IdenticalPoints,
    LinesNotDistinct,
    NotCollinear,
    NotOnCurve,
)
from .projective import ProjLine, ProjPoint, collinear, join, meet
from .involution import Involution, conjugate_line
from .weierstrass import WeierstrassCurve, conjugate_point


def _require_on(curve: Cubic, *points: ProjPoint):
    for p in points:
        if evaluate(curve, p) != 0:
            raise NotOnCurve(f"{p} is not on the cubic")


def chasles_check(
    curve: Cubic,
    a: ProjPoint,
    b: ProjPoint,
    c: ProjPoint,
    abar: ProjPoint,
    bbar: ProjPoint,
    cbar: ProjPoint,
) -> bool:
    """Chasles: for a hexagon a b c abar bbar cbar inscribed in the cubic,
    if two opposite-side meets lie on the curve then so does the third.

    Returns True vacuously when a hypothesis meet is off the curve.
    """
    _require_on(curve, a, b, c, abar, bbar, cbar)
    try:
        m1 = meet(join(a, b), join(abar, bbar))
        m2 = meet(join(b, c), join(bbar, cbar))
        m3 = meet(join(c, abar), join(cbar, a))
    except (IdenticalPoints, IdenticalLines) as exc:
        raise DegenerateHexagon(str(exc)) from exc
    if evaluate(curve, m1) == 0 and evaluate(curve, m2) == 0:
        return evaluate(curve, m3) == 0
    return True


def tangent_meet_check(
    curve: Cubic, p: ProjPoint, pbar: ProjPoint, q: ProjPoint, qbar: ProjPoint
) -> bool:
    """If both meets of two pairs land on the cubic, the tangent contact
    thirds agree within each pair, including the derived pair."""
    if len({p, pbar, q, qbar}) != 4:
        raise HypothesisFailed("the four points must be pairwise distinct")
    _require_on(curve, p, pbar, q, qbar)
    try:
        s = meet(join(p, q), join(pbar, qbar))
        sbar = meet(join(p, qbar), join(pbar, q))
    except (IdenticalPoints, IdenticalLines) as exc:
        raise HypothesisFailed(f"degenerate joins: {exc}") from exc
    if evaluate(curve, s) != 0 or evaluate(curve, sbar) != 0:
        raise HypothesisFailed("derived meets are not on the cubic")
    return (
        tangent_third(curve, p) == tangent_third(curve, pbar)
        and tangent_third(curve, q) == tangent_third(curve, qbar)
        and tangent_third(curve, s) == tangent_third(curve, sbar)
    )


def tangency_transport_check(
    curve: Cubic, p: ProjPoint, pbar: ProjPoint, q: ProjPoint
) -> bool:
    """Converse direction: a pair with a common tangential point transports
    that property to any curve point q via the chord operator."""
    _require_on(curve, p, pbar, q)
    if tangent_third(curve, p) != tangent_third(curve, pbar):
        raise HypothesisFailed("p and pbar do not share their tangential point")
    s = chord_third(curve, p, q)
    qbar = chord_third(curve, s, pbar)
    sbar_1 = chord_third(curve, p, qbar)
    sbar_2 = chord_third(curve, pbar, q)
    return sbar_1 == sbar_2 and tangent_third(curve, q) == tangent_third(curve, qbar)


def _four_distinct_joins(s: ProjPoint, targets) -> list[ProjLine]:
    lines = []
    for t in targets:
        if t == s:
            raise LinesNotDistinct(f"{s} coincides with a pair member")
        lines.append(join(s, t))
    if len(set(lines)) != 4:
        raise LinesNotDistinct(f"joining lines from {s} are not pairwise distinct")
    return lines


def tangent_by_involution(
    curve: Cubic,
    s_pair: PointPair,
    p_pair: PointPair,
    q_pair: PointPair,
    contact: ProjPoint | None = None,
) -> ProjLine:
    """Ruler-only tangent at a construction point.

    Build the involution at the contact point from its joins to two other
    pairs; the conjugate of the join to the contact's own partner is the
    tangent.  Callers verify the result against tangent_at.
    """
    s = s_pair.first if contact is None else contact
    sbar = s_pair.other(s)
    _require_on(curve, s, sbar, *p_pair.points, *q_pair.points)
    sp, spbar = (join(s, t) for t in p_pair.points)
    sq, sqbar = (join(s, t) for t in q_pair.points)
    _four_distinct_joins(s, (*p_pair.points, *q_pair.points))
    inv = Involution(s, (sp, spbar), (sq, sqbar))
    return conjugate_line(inv, join(s, sbar))


def chord_tangency_check(curve: WeierstrassCurve, a: ProjPoint, b: ProjPoint) -> bool:
    """If a, its conjugate, and b are collinear curve points, the tangential
    point of a is the conjugate of b."""
    curve.require(a)
    curve.require(b)
    abar = conjugate_point(curve, a)
    if len({a, abar, b}) != 3:
        raise NotCollinear("need three distinct collinear points")
    if not collinear(a, abar, b):
        raise NotCollinear(f"{a}, {abar}, {b} are not collinear")
    return tangent_third(curve.cubic, a) == conjugate_point(curve, b)


def conjugate_lines_check(
    curve: Cubic,
    r: ProjPoint,
    p_pair: PointPair,
    q_pair: PointPair,
    s_pair: PointPair,
) -> bool:
    """The joins from r to any further pair are conjugate lines of the
    involution defined by the joins from r to two base pairs."""
    _require_on(curve, r, *p_pair.points, *q_pair.points, *s_pair.points)
    for pair in (p_pair, q_pair, s_pair):
        if r in pair:
            raise LinesNotDistinct(f"{r} is a member of {pair}")
    lines = _four_distinct_joins(r, (*p_pair.points, *q_pair.points))
    inv = Involution(r, (lines[0], lines[1]), (lines[2], lines[3]))
    s, sbar = s_pair.points
    return conjugate_line(inv, join(r, s)) == join(r, sbar)
