"""JSON/CSV vocabulary: rationals as strings, never floats.

Rationals serialize as "p/q" with the denominator omitted when it is 1;
points and lines are arrays of three coordinate strings.  Output files are
deterministic so identical runs are byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cubic import Cubic
from .engine import ConstructionState, PointPair, SeedConfig, validate_seed
from .errors import SeedFormatError
from .involution import Involution
from .projective import ProjLine, ProjPoint
from .weierstrass import WeierstrassCurve


def rat_to_str(value) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def rat_from_str(text) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SeedFormatError(f"bad rational {text!r}: {exc}") from exc


def point_to_json(p: ProjPoint) -> list[str]:
    return [str(c) for c in p.coords]


def point_from_json(arr) -> ProjPoint:
    if not isinstance(arr, (list, tuple)) or len(arr) not in (2, 3):
        raise SeedFormatError(f"a point needs 2 or 3 coordinates, got {arr!r}")
    coords = [rat_from_str(v) for v in arr]
    if len(coords) == 2:
        coords.append(Fraction(1))
    try:
        return ProjPoint.of(*coords)
    except ValueError as exc:
        raise SeedFormatError(str(exc)) from exc


def line_to_json(l: ProjLine) -> list[str]:
    return [str(c) for c in l.coeffs]


def line_from_json(arr) -> ProjLine:
    if not isinstance(arr, (list, tuple)) or len(arr) != 3:
        raise SeedFormatError(f"a line needs 3 coefficients, got {arr!r}")
    try:
        return ProjLine.of(*(rat_from_str(v) for v in arr))
    except ValueError as exc:
        raise SeedFormatError(str(exc)) from exc


def involution_to_json(inv: Involution) -> dict:
    return {
        "carrier": point_to_json(inv.carrier),
        "pairs": [
            [line_to_json(inv.pair_a[0]), line_to_json(inv.pair_a[1])],
            [line_to_json(inv.pair_b[0]), line_to_json(inv.pair_b[1])],
        ],
    }


def involution_from_json(obj) -> Involution:
    if not isinstance(obj, dict) or "carrier" not in obj or "pairs" not in obj:
        raise SeedFormatError("involution object needs 'carrier' and 'pairs'")
    pairs = obj["pairs"]
    if not isinstance(pairs, list) or len(pairs) != 2:
        raise SeedFormatError("an involution needs exactly 2 line pairs")
    return Involution(
        point_from_json(obj["carrier"]),
        tuple(line_from_json(l) for l in pairs[0]),
        tuple(line_from_json(l) for l in pairs[1]),
    )


def pair_to_json(pair: PointPair) -> list[list[str]]:
    return [point_to_json(pair.first), point_to_json(pair.second)]


def pair_from_json(arr) -> PointPair:
    if not isinstance(arr, (list, tuple)) or len(arr) != 2:
        raise SeedFormatError(f"a pair needs exactly 2 points, got {arr!r}")
    return PointPair.of(point_from_json(arr[0]), point_from_json(arr[1]))


def cubic_to_json(c: Cubic) -> list[str]:
    return [str(v) for v in c.coeffs]


def cubic_from_json(arr) -> Cubic:
    if not isinstance(arr, (list, tuple)) or len(arr) != 10:
        raise SeedFormatError("a cubic needs exactly 10 coefficients")
    return Cubic.of([int(rat_from_str(v)) for v in arr])


def curve_to_json(curve: WeierstrassCurve) -> dict:
    return {"a": rat_to_str(curve.a), "b": rat_to_str(curve.b)}


def curve_from_json(obj) -> WeierstrassCurve:
    if not isinstance(obj, dict) or "a" not in obj or "b" not in obj:
        raise SeedFormatError("curve object needs rational fields 'a' and 'b'")
    return WeierstrassCurve(rat_from_str(obj["a"]), rat_from_str(obj["b"]))


def seed_to_json(seed: SeedConfig, curve: WeierstrassCurve | None = None) -> dict:
    obj: dict = {"pairs": [pair_to_json(p) for p in seed.pairs]}
    if curve is not None:
        obj["curve"] = curve_to_json(curve)
    return obj


def seed_from_json(obj) -> tuple[SeedConfig, WeierstrassCurve | None]:
    if not isinstance(obj, dict) or "pairs" not in obj:
        raise SeedFormatError("seed object needs a 'pairs' field")
    pairs = obj["pairs"]
    if not isinstance(pairs, list) or len(pairs) != 3:
        raise SeedFormatError("a seed needs exactly 3 pairs")
    seed = validate_seed(*(pair_from_json(p) for p in pairs))
    curve = curve_from_json(obj["curve"]) if "curve" in obj else None
    return seed, curve


def _key_label(key) -> str:
    return "|".join(":".join(str(c) for c in coords) for coords in key)


def state_to_json(state: ConstructionState) -> dict:
    return {
        "seed": [pair_to_json(p) for p in state.seed.pairs],
        "curve": cubic_to_json(state.curve) if state.curve is not None else None,
        "curve_basis": [cubic_to_json(c) for c in state.curve_basis],
        "pairs": [pair_to_json(p) for p in state.pairs],
        "pair_count": len(state.pairs),
        "point_count": state.point_count,
        "closed": state.closed,
        "generations": state.generations,
        "provenance": [
            {
                "parents": [_key_label(k) for k in d.parents],
                "child": _key_label(d.child) if d.child is not None else None,
                "skipped": d.status == "skipped",
                "status": d.status,
                "reason": d.reason,
            }
            for d in state.provenance
        ],
    }


def state_points_csv(state: ConstructionState) -> str:
    lines = ["pair_id,member,x,y,z"]
    for idx, pair in enumerate(state.pairs):
        for member, point in enumerate(pair.points):
            x, y, z = point.coords
            lines.append(f"{idx},{member},{x},{y},{z}")
    return "\n".join(lines) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise SeedFormatError(f"{path}: invalid JSON ({exc})") from exc
