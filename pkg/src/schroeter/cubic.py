"""Ternary cubic forms: exact fitting, incidence, tangents, and chord thirds.

Line-cubic intersections are computed by restricting the form to the chord
and factoring out the two known rational roots (Vieta), never by radical
root-finding, so everything stays in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    AmbiguousFit,
    DuplicatePoints,
    IdenticalPoints,
    InvariantViolation,
    LineComponent,
    NotAffine,
    NotOnCurve,
    OverconstrainedFit,
    SingularPoint,
)
from .projective import ProjLine, ProjPoint, points_on_line

# Fixed monomial order for the 10 coefficients.
MONOMIALS = ("x3", "x2y", "x2z", "xy2", "xyz", "xz2", "y3", "y2z", "yz2", "z3")


def _canon_vector(values):
    fracs = [Fraction(v) for v in values]
    mult = 1
    for f in fracs:
        mult = mult * f.denominator // gcd(mult, f.denominator)
    ints = [int(f * mult) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        raise ValueError("cubic coefficients must not all vanish")
    ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-u for u in ints]
            break
    return tuple(ints)


@dataclass(frozen=True)
class Cubic:
    """A ternary cubic form as 10 primitive integers in the MONOMIALS order."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _canon_vector(self.coeffs))

    @classmethod
    def of(cls, coeffs) -> "Cubic":
        coeffs = tuple(coeffs)
        if len(coeffs) != 10:
            raise ValueError("a cubic form has exactly 10 coefficients")
        return cls(coeffs)

    def __repr__(self):
        terms = [f"{c}*{m}" for c, m in zip(self.coeffs, MONOMIALS) if c]
        return "Cubic(" + " + ".join(terms) + ")"


def _eval_triple(cubic: Cubic, t) -> int:
    x, y, z = t
    c = cubic.coeffs
    return (
        c[0] * x * x * x
        + c[1] * x * x * y
        + c[2] * x * x * z
        + c[3] * x * y * y
        + c[4] * x * y * z
        + c[5] * x * z * z
        + c[6] * y * y * y
        + c[7] * y * y * z
        + c[8] * y * z * z
        + c[9] * z * z * z
    )


def evaluate(cubic: Cubic, point: ProjPoint) -> int:
    """Value of the form at the canonical coordinates; zero iff the point is on the curve."""
    return _eval_triple(cubic, point.coords)


def contains(cubic: Cubic, point: ProjPoint) -> bool:
    return evaluate(cubic, point) == 0


def gradient(cubic: Cubic, point: ProjPoint) -> tuple[int, int, int]:
    x, y, z = point.coords
    c = cubic.coeffs
    gx = 3 * c[0] * x * x + 2 * c[1] * x * y + 2 * c[2] * x * z + c[3] * y * y + c[4] * y * z + c[5] * z * z
    gy = c[1] * x * x + 2 * c[3] * x * y + c[4] * x * z + 3 * c[6] * y * y + 2 * c[7] * y * z + c[8] * z * z
    gz = c[2] * x * x + c[4] * x * y + 2 * c[5] * x * z + c[7] * y * y + 2 * c[8] * y * z + 3 * c[9] * z * z
    return (gx, gy, gz)


def tangent_at(cubic: Cubic, point: ProjPoint) -> ProjLine:
    """Tangent line at a smooth curve point (the gradient of the form)."""
    if evaluate(cubic, point) != 0:
        raise NotOnCurve(f"{point} is not on the cubic")
    grad = gradient(cubic, point)
    if not any(grad):
        raise SingularPoint(f"{point} is a singular point of the cubic")
    return ProjLine(grad)


def _chord_coefficients(cubic: Cubic, p, q):
    """Coefficients (c3, c2, c1, c0) of F(lam*p + mu*q) as a binary cubic."""
    c3 = _eval_triple(cubic, p)
    c0 = _eval_triple(cubic, q)
    s11 = _eval_triple(cubic, tuple(a + b for a, b in zip(p, q)))
    s12 = _eval_triple(cubic, tuple(a + 2 * b for a, b in zip(p, q)))
    u = s11 - c3 - c0
    v = s12 - c3 - 8 * c0
    c1 = (v - 2 * u) // 2
    c2 = u - c1
    return c3, c2, c1, c0


def third_intersection(cubic: Cubic, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Third intersection of the line pq with the cubic, multiplicities included.

    Both points must be on the curve; the third root of the restricted binary
    cubic is then rational by Vieta.  If the line is tangent at p, the result
    is p itself.
    """
    if p == q:
        raise IdenticalPoints("chord endpoints coincide; use tangent_third")
    c3, c2, c1, c0 = _chord_coefficients(cubic, p.coords, q.coords)
    if c3 != 0:
        raise NotOnCurve(f"{p} is not on the cubic")
    if c0 != 0:
        raise NotOnCurve(f"{q} is not on the cubic")
    if c2 == 0 and c1 == 0:
        raise LineComponent(f"the line through {p} and {q} lies on the cubic")
    # restriction is lam*mu*(c2*lam + c1*mu); third root at (c1 : -c2)
    coords = tuple(c1 * a - c2 * b for a, b in zip(p.coords, q.coords))
    return ProjPoint(coords)


def tangent_third(cubic: Cubic, p: ProjPoint) -> ProjPoint:
    """Residual intersection of the tangent at p (p itself at an inflection)."""
    line = tangent_at(cubic, p)
    q = next(pt for pt in points_on_line(line) if pt != p)
    c3, c2, c1, c0 = _chord_coefficients(cubic, p.coords, q.coords)
    if c2 != 0:
        raise InvariantViolation("tangent restriction lacks a double root")
    if c1 == 0 and c0 == 0:
        raise LineComponent(f"the tangent at {p} lies on the cubic")
    if c1 == 0:
        return p
    coords = tuple(c0 * a - c1 * b for a, b in zip(p.coords, q.coords))
    return ProjPoint(coords)


def chord_third(cubic: Cubic, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """third_intersection for distinct points, tangent_third when p == q."""
    return tangent_third(cubic, p) if p == q else third_intersection(cubic, p, q)


# --- fitting ------------------------------------------------------------

def _monomial_row(point: ProjPoint):
    x, y, z = point.coords
    return [
        x * x * x, x * x * y, x * x * z, x * y * y, x * y * z,
        x * z * z, y * y * y, y * y * z, y * z * z, z * z * z,
    ]


def _nullspace_basis(rows):
    """Exact nullspace basis of an integer matrix with 10 columns.

    Fraction-free (Bareiss) forward elimination, then Fraction
    back-substitution per free column; each vector is canonicalized.
    """
    m = [list(r) for r in rows]
    piv_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(10):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, len(m)):
            for j in range(c + 1, 10):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        piv_cols.append(c)
        r += 1
    basis = []
    for free in (c for c in range(10) if c not in piv_cols):
        sol = [Fraction(0)] * 10
        sol[free] = Fraction(1)
        for i in reversed(range(len(piv_cols))):
            pc = piv_cols[i]
            if pc > free:
                continue
            s = sum((m[i][j] * sol[j] for j in range(pc + 1, 10)), Fraction(0))
            sol[pc] = -s / m[i][pc]
        basis.append(Cubic.of(sol))
    return basis


def cubic_family_through(points) -> tuple[Cubic, ...]:
    """Basis of the linear family of cubics through the given points."""
    distinct = []
    for p in points:
        if p not in distinct:
            distinct.append(p)
    rows = [_monomial_row(p) for p in distinct]
    return tuple(_nullspace_basis(rows))


def fit_cubic_9(points) -> Cubic:
    """The unique cubic through 9 points in general position.

    Raises AmbiguousFit when the incidence matrix has rank below 9 and
    OverconstrainedFit when no cubic passes through all nine.
    """
    points = list(points)
    if len(points) != 9:
        raise ValueError(f"need exactly 9 points, got {len(points)}")
    if len(set(points)) != 9:
        raise DuplicatePoints("the 9 points must be pairwise distinct")
    basis = _nullspace_basis([_monomial_row(p) for p in points])
    if len(basis) == 0:
        raise OverconstrainedFit("no cubic passes through the given points")
    if len(basis) > 1:
        raise AmbiguousFit(f"cubics through the points form a {len(basis)}-dimensional family")
    return basis[0]


def normalized_frame_cubic(c: ProjPoint, cbar: ProjPoint) -> Cubic:
    """Closed-form cubic for a seed normalized to the standard frame.

    The seed pairs are {(0,0,1), (0,1,0)}, {(1,0,0), (1,1,1)}, {c, cbar}
    with affine c and cbar; the construction curve has an explicit equation
    in the affine chart, homogenized and canonicalized here.
    """
    if c.coords[2] == 0 or cbar.coords[2] == 0:
        raise NotAffine("the free seed pair must consist of affine points")
    cx, cy = c.to_affine()
    dx, dy = cbar.to_affine()
    coeffs = [
        0,                                # x3
        -1,                               # x2y
        cy * dy,                          # x2z
        1,                                # xy2
        cx + dx - cy * dx - cx * dy,      # xyz
        -cy * dy,                         # xz2
        0,                                # y3
        cx * dx - cx - dx,                # y2z
        cy * dx + cx * dy - cx * dx,      # yz2
        0,                                # z3
    ]
    return Cubic.of(coeffs)
