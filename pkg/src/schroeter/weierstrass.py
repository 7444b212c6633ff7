"""Curves y^2 = x^3 + a*x^2 + b*x with their rational chord-tangent group law.

The neutral element is the inflection O = (0 : 1 : 0) and T = (0 : 0 : 1) is
a rational point of order two.  Negation and addition are built entirely on
the chord operator of the cubic module, so coordinate formulas (affine
y-negation, the b/x conjugate) stay available as independent cross-checks.
Also provides the y^2 x = alpha + beta x + gamma x^2 chart in which the
conjugation induces a line involution with a computable center.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cubic import Cubic, chord_third, evaluate, third_intersection
from .engine import PointPair, SeedConfig, validate_seed
from .errors import (
    BasePointDegenerate,
    DegenerateDirection,
    DuplicatePoints,
    NotOnCurve,
    OffChartCurve,
    ValidationError,
    ZeroDenominator,
)
from .projective import ProjLine, ProjPoint, join, meet

NEUTRAL = ProjPoint((0, 1, 0))
TWO_TORSION = ProjPoint((0, 0, 1))

_AXIS = ProjLine((1, 0, 0))  # the line x = 0


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + a x^2 + b x, nonsingular (b != 0 and a^2 != 4b)."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if b == 0 or a * a == 4 * b:
            raise ValidationError(f"curve a={a}, b={b} is singular")

    @property
    def cubic(self) -> Cubic:
        """The homogeneous form as a canonical Cubic."""
        return Cubic.of([1, 0, self.a, 0, 0, self.b, 0, -1, 0, 0])

    def contains(self, p: ProjPoint) -> bool:
        return evaluate(self.cubic, p) == 0

    def require(self, p: ProjPoint) -> ProjPoint:
        if not self.contains(p):
            raise NotOnCurve(f"{p} is not on y^2 = x^3 + {self.a}x^2 + {self.b}x")
        return p

    def point(self, x, y) -> ProjPoint:
        return self.require(ProjPoint.affine(Fraction(x), Fraction(y)))


def as_cubic(curve: WeierstrassCurve) -> Cubic:
    return curve.cubic


def neg(curve: WeierstrassCurve, p: ProjPoint) -> ProjPoint:
    """-P, the third intersection of the line through O and P."""
    curve.require(p)
    if p == NEUTRAL:
        return p
    return third_intersection(curve.cubic, NEUTRAL, p)


def add(curve: WeierstrassCurve, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Chord-tangent addition with neutral element O = (0 : 1 : 0)."""
    curve.require(p)
    curve.require(q)
    if p == NEUTRAL:
        return q
    if q == NEUTRAL:
        return p
    return neg(curve, chord_third(curve.cubic, p, q))


def multiply(curve: WeierstrassCurve, n: int, p: ProjPoint) -> ProjPoint:
    """n*P by double-and-add."""
    if n < 0:
        return multiply(curve, -n, neg(curve, p))
    acc = NEUTRAL
    addend = p
    while n:
        if n & 1:
            acc = add(curve, acc, addend)
        addend = add(curve, addend, addend)
        n >>= 1
    return acc


def conjugate_point(curve: WeierstrassCurve, p: ProjPoint) -> ProjPoint:
    """P + T: the partner of P in every construction pair on this curve."""
    return add(curve, p, TWO_TORSION)


def conjugate_affine_form(curve: WeierstrassCurve, p: ProjPoint) -> ProjPoint:
    """Closed form (b/x, -y b/x^2) of the conjugate; independent cross-check."""
    curve.require(p)
    x, y = p.to_affine()
    if x == 0:
        raise ZeroDenominator("closed-form conjugate needs x != 0")
    return ProjPoint.affine(curve.b / x, -y * curve.b / (x * x))


def subgroup_generated(curve: WeierstrassCurve, generators) -> set[ProjPoint]:
    """Closure of the generators under the group law (finite inputs only)."""
    elements = {NEUTRAL}
    frontier = [NEUTRAL]
    gens = [curve.require(g) for g in generators]
    while frontier:
        base = frontier.pop()
        for g in gens:
            for cand in (add(curve, base, g), add(curve, base, neg(curve, g))):
                if cand not in elements:
                    elements.add(cand)
                    frontier.append(cand)
    return elements


# --- the alpha/beta/gamma chart ---------------------------------------------

@dataclass(frozen=True)
class AbcChart:
    """The curve chart y^2 x = alpha + beta x + gamma x^2."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def contains(self, x, y) -> bool:
        x, y = Fraction(x), Fraction(y)
        return y * y * x == self.alpha + self.beta * x + self.gamma * x * x

    @property
    def cubic(self) -> Cubic:
        """Projective closure y^2 x = alpha z^3 + beta x z^2 + gamma x^2 z."""
        return Cubic.of([0, 0, -self.gamma, 1, 0, -self.beta, 0, 0, 0, -self.alpha])


@dataclass(frozen=True)
class ChartMap:
    """Bijective rational map between a Weierstrass curve and its chart.

    Scale x by the base point's x, y by its y, swap the roles of x and z,
    and dehomogenize; the base point itself maps to (1, 1).
    """

    curve: WeierstrassCurve
    base: tuple[Fraction, Fraction]
    chart: AbcChart

    def to_chart(self, p: ProjPoint) -> tuple[Fraction, Fraction]:
        x, y, z = p.coords
        r0, r1 = self.base
        if x == 0:
            raise ZeroDenominator(f"{p} maps to infinity on the chart")
        return Fraction(z, 1) * r0 / Fraction(x, 1), Fraction(y, 1) * r0 / (r1 * Fraction(x, 1))

    def from_chart(self, x, y) -> ProjPoint:
        x, y = Fraction(x), Fraction(y)
        if x == 0:
            raise ZeroDenominator("chart point with x = 0 has no affine preimage")
        r0, r1 = self.base
        return ProjPoint.affine(r0 / x, r1 * y / x)


def to_abc_chart(curve: WeierstrassCurve, base: ProjPoint) -> ChartMap:
    """Chart with alpha = r0^3/r1^2, beta = a r0^2/r1^2, gamma = b r0/r1^2
    for an affine base point (r0, r1) with nonzero coordinates."""
    curve.require(base)
    if base.coords[2] == 0:
        raise BasePointDegenerate("base point must be affine")
    r0, r1 = base.to_affine()
    if r0 == 0 or r1 == 0:
        raise BasePointDegenerate("base point must have nonzero coordinates")
    alpha = r0 ** 3 / r1 ** 2
    beta = curve.a * r0 ** 2 / r1 ** 2
    gamma = curve.b * r0 / r1 ** 2
    return ChartMap(curve, (r0, r1), AbcChart(alpha, beta, gamma))


def chart_conjugate(chart: AbcChart, point) -> tuple[Fraction, Fraction]:
    """Conjugation in chart coordinates: (x, y) -> (alpha/(gamma x), -y)."""
    x, y = (Fraction(v) for v in point)
    if not chart.contains(x, y):
        raise OffChartCurve(f"({x}, {y}) is not on the chart curve")
    if chart.gamma == 0 or x == 0:
        raise ZeroDenominator("chart conjugate needs gamma * x != 0")
    return chart.alpha / (chart.gamma * x), -y


@dataclass(frozen=True)
class CenterProduct:
    """Signed intercept data of the induced line involution at a base point."""

    center: tuple[Fraction, Fraction]
    s_p: Fraction
    s_pbar: Fraction
    product: Fraction


def involution_center_product(chart: AbcChart, a, p) -> CenterProduct:
    """Intersect the joins of a base chart point with P and its conjugate
    against the line x = 0; the signed distances from the center (0, y0)
    multiply to gamma * x0 independently of P."""
    x0, y0 = (Fraction(v) for v in a)
    x1, y1 = (Fraction(v) for v in p)
    if not chart.contains(x0, y0):
        raise OffChartCurve(f"base ({x0}, {y0}) is not on the chart curve")
    if not chart.contains(x1, y1):
        raise OffChartCurve(f"({x1}, {y1}) is not on the chart curve")
    pbar = chart_conjugate(chart, (x1, y1))
    if (x1, y1) == (x0, y0) or pbar == (x0, y0):
        raise ValidationError("P must differ from the base point and its conjugate")
    if x1 == x0 or y1 == y0:
        raise DegenerateDirection(
            "join parallel to the axis or through the center: product is indeterminate"
        )
    base_pt = ProjPoint.affine(x0, y0)
    g = join(base_pt, ProjPoint.affine(x1, y1))
    gbar = join(base_pt, ProjPoint.affine(*pbar))
    hit = meet(g, _AXIS)
    hit_bar = meet(gbar, _AXIS)
    if hit.is_infinite or hit_bar.is_infinite:
        raise DegenerateDirection("join meets the axis at infinity")
    s_p = hit.to_affine()[1] - y0
    s_pbar = hit_bar.to_affine()[1] - y0
    return CenterProduct((Fraction(0), y0), s_p, s_pbar, s_p * s_pbar)


def seed_from_curve(
    curve: WeierstrassCurve,
    a: ProjPoint,
    b: ProjPoint,
    c: ProjPoint,
    *,
    allow_quadrilateral: bool = False,
) -> SeedConfig:
    """Seed the construction from three curve points and their conjugates.

    Pairing each point with P + T guarantees the tangent-meet property the
    construction requires; the resulting six points still must pass the
    usual seed validation.  Seeds drawn from small torsion subgroups can
    form a complete quadrilateral and are rejected unless explicitly
    allowed (they reproduce only themselves).
    """
    points = (a, b, c)
    if len(set(points)) != 3:
        raise DuplicatePoints("the three base points must be pairwise distinct")
    pairs = []
    for p in points:
        curve.require(p)
        pairs.append(PointPair.of(p, conjugate_point(curve, p)))
    return validate_seed(*pairs, allow_quadrilateral=allow_quadrilateral)
