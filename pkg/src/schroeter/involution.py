"""Line involutions on a pencil.

An involution is pinned down by two conjugate line pairs through a common
carrier.  Conjugates are computed two independent ways: the classical ruler
construction (choose an auxiliary point on the line, draw two transversals,
intersect the cross-joins) and the induced projective involution on the
pencil parameter.  The two must agree exactly; a mismatch raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    DegenerateChoice,
    DuplicatePoints,
    ForbiddenCarrier,
    IdenticalLines,
    IdenticalPoints,
    InvariantViolation,
    NotInPencil,
)
from .projective import (
    ProjLine,
    ProjPoint,
    collinear,
    cross_ratio_params,
    incident,
    join,
    meet,
    points_on_line,
    span_coordinates,
)

# Auxiliary reference points for the ruler construction, tried in order.
_AUX_POOL = tuple(
    ProjPoint(t)
    for t in (
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, -1, 1), (1, 2, 1),
        (2, 1, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (3, 1, 1), (1, 3, 1),
        (2, 3, 1), (3, 2, 1), (1, -2, 1), (2, -1, 1),
    )
)


@dataclass(frozen=True)
class Involution:
    """A line involution given by two conjugate pairs through the carrier."""

    carrier: ProjPoint
    pair_a: tuple[ProjLine, ProjLine]
    pair_b: tuple[ProjLine, ProjLine]

    def __post_init__(self):
        lines = (*self.pair_a, *self.pair_b)
        for line in lines:
            if not incident(self.carrier, line):
                raise NotInPencil(f"{line} does not pass through the carrier {self.carrier}")
        if len(set(lines)) != 4:
            raise IdenticalLines("an involution needs two pairs of four distinct lines")

    @classmethod
    def from_pairs(cls, pair_a, pair_b) -> "Involution":
        carrier = meet(pair_a[0], pair_a[1])
        return cls(carrier, tuple(pair_a), tuple(pair_b))

    def lines(self):
        return (*self.pair_a, *self.pair_b)


def _pencil_param(inv: Involution, line: ProjLine) -> tuple[int, int]:
    """Parameter of a pencil line in the basis (pair_a[0], pair_a[1])."""
    if not incident(inv.carrier, line):
        raise NotInPencil(f"{line} does not pass through the carrier {inv.carrier}")
    return span_coordinates(line.coeffs, inv.pair_a[0].coeffs, inv.pair_a[1].coeffs)


def _line_from_param(inv: Involution, param) -> ProjLine:
    lam, mu = param
    a, abar = inv.pair_a[0].coeffs, inv.pair_a[1].coeffs
    return ProjLine(tuple(lam * u + mu * v for u, v in zip(a, abar)))


def _algebraic_conjugate(inv: Involution, d: ProjLine) -> ProjLine:
    # In the basis (a, abar) the symmetric pairing has no mixed term, so the
    # involution on parameters is (p0 : p1) -> (lb*lbbar*p1 : mb*mbbar*p0).
    lb, mb = _pencil_param(inv, inv.pair_b[0])
    lbb, mbb = _pencil_param(inv, inv.pair_b[1])
    p0, p1 = _pencil_param(inv, d)
    return _line_from_param(inv, (lb * lbb * p1, mb * mbb * p0))


def _ruler_conjugate(inv: Involution, d: ProjLine, choice: int) -> ProjLine:
    carrier = inv.carrier
    a, abar = inv.pair_a
    b, bbar = inv.pair_b

    candidates = []
    gen = points_on_line(d)
    for p in gen:
        if p != carrier:
            candidates.append(p)
        if len(candidates) >= 6:
            break
    shift = choice % len(candidates)
    candidates = candidates[shift:] + candidates[:shift]

    for base in candidates:
        aux_lines = []
        for ref in _AUX_POOL[choice % 3:] + _AUX_POOL[: choice % 3]:
            if ref == base or incident(ref, d):
                continue
            g = join(base, ref)
            if incident(carrier, g) or g in aux_lines:
                continue
            aux_lines.append(g)
            if len(aux_lines) >= 4:
                break
        for g, gbar in combinations(aux_lines, 2):
            try:
                pa = meet(g, a)
                pb = meet(g, b)
                pabar = meet(gbar, abar)
                pbbar = meet(gbar, bbar)
                l1 = join(pa, pbbar)
                l2 = join(pabar, pb)
                dbar_point = meet(l1, l2)
                return join(carrier, dbar_point)
            except (IdenticalPoints, IdenticalLines):
                continue
    raise DegenerateChoice("no admissible auxiliary configuration found")


def conjugate_line(inv: Involution, d: ProjLine, *, choice: int = 0) -> ProjLine:
    """Conjugate of a pencil line under the involution.

    Computed by the ruler construction and cross-checked against the
    algebraic involution on the pencil parameter.  `choice` rotates the
    internal selection of auxiliary elements; every value yields the same
    line.
    """
    if not incident(inv.carrier, d):
        raise NotInPencil(f"{d} does not pass through the carrier {inv.carrier}")
    algebraic = _algebraic_conjugate(inv, d)
    if d == inv.pair_a[0] or d == inv.pair_a[1] or d == inv.pair_b[0] or d == inv.pair_b[1]:
        return algebraic
    ruler = _ruler_conjugate(inv, d, choice)
    if ruler != algebraic:
        raise InvariantViolation(
            f"ruler construction {ruler} disagrees with the algebraic conjugate {algebraic}"
        )
    return ruler


def conjugate_pairs_from_quadrangle(
    a: ProjPoint, abar: ProjPoint, b: ProjPoint, bbar: ProjPoint, p: ProjPoint
):
    """Three conjugate line pairs through p determined by a point quadrangle.

    The diagonal pair d, dbar of the quadrangle joins the cross-meets; p may
    be any point avoiding the four vertices and both diagonal points.
    """
    if len({a, abar, b, bbar}) != 4:
        raise DuplicatePoints("quadrangle points must be pairwise distinct")
    d = meet(join(a, b), join(abar, bbar))
    dbar = meet(join(a, bbar), join(abar, b))
    if p in (a, abar, b, bbar, d, dbar):
        raise ForbiddenCarrier(f"carrier {p} coincides with a quadrangle or diagonal point")
    return (
        (join(p, a), join(p, abar)),
        (join(p, b), join(p, bbar)),
        (join(p, d), join(p, dbar)),
    )


def verify_involution(inv: Involution, pairs) -> bool:
    """Exhaustive cross-ratio test over the given conjugate pairs.

    For every three distinct pairs and every four lines drawn from all
    three, the cross-ratio must equal the cross-ratio of the four partner
    lines.  Vacuously true with fewer than three distinct pairs.
    """
    seen: dict = {}
    for pair in pairs:
        key = frozenset(pair)
        if key not in seen:
            seen[key] = (pair[0], pair[1])
    distinct_pairs = list(seen.values())
    for pair in distinct_pairs:
        for line in pair:
            if not incident(inv.carrier, line):
                raise NotInPencil(f"{line} does not pass through the carrier {inv.carrier}")

    for trio in combinations(distinct_pairs, 3):
        lines = []
        partner = {}
        for l, lbar in trio:
            lines.extend((l, lbar))
            partner[l] = lbar
            partner[lbar] = l
        params = {l: _pencil_param(inv, l) for l in set(lines)}
        for quad in combinations(range(6), 4):
            pair_ids = {i // 2 for i in quad}
            if len(pair_ids) < 3:
                continue
            chosen = [lines[i] for i in quad]
            cr = cross_ratio_params(*(params[l] for l in chosen))
            cr_bar = cross_ratio_params(*(params[partner[l]] for l in chosen))
            if cr != cr_bar:
                return False
    return True


def is_complete_quadrilateral_pairing(pair_a, pair_b, pair_c) -> bool:
    """True iff the three point pairs are the opposite-vertex pairs of one
    complete quadrilateral (checked over the four within-pair labelings)."""
    points = (*pair_a, *pair_b, *pair_c)
    if len(set(points)) != 6:
        raise DuplicatePoints("the six points must be pairwise distinct")
    a, abar = pair_a
    for b, bbar in (pair_b, pair_b[::-1]):
        for c, cbar in (pair_c, pair_c[::-1]):
            if (
                collinear(a, b, c)
                and collinear(a, bbar, cbar)
                and collinear(abar, b, cbar)
                and collinear(abar, bbar, c)
            ):
                return True
    return False
