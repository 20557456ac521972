"""Elliptic curves in long Weierstrass form over an exact field.

The group law is written once against a duck-typed field element: anything
with exact +, -, *, /, ** and equality (and coercion of small ints) works,
which covers Fraction, GaussianRational and RatFunc.  That lets the same
chord-tangent code run over Q, Q(i), Q(r) and Q(u).

The catalog holds the specific curves this package studies, keyed by stable
CLI-facing ids, together with the coordinate transformations that connect
curve points back to (r, s) parameter pairs and to the Fermat-cubic surface
sections.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .rationals import format_rational


class SingularCurveError(ValueError):
    """Raised when the requested Weierstrass model has zero discriminant."""


class PointNotOnCurveError(ValueError):
    """Raised when a group-law operand does not satisfy the curve equation."""


class TransformationPoleError(ZeroDivisionError):
    """Raised when a coordinate transformation is evaluated at its pole."""


@dataclass(frozen=True)
class Curve:
    """y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 over an exact field."""

    a1: object
    a2: object
    a3: object
    a4: object
    a6: object

    def __post_init__(self):
        if self.discriminant() == 0:
            raise SingularCurveError("curve has zero discriminant")

    def discriminant(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def rhs(self, x):
        return x**3 + self.a2 * x * x + self.a4 * x + self.a6

    def contains(self, point: "Point") -> bool:
        if point.is_infinity:
            return True
        x, y = point.x, point.y
        return y * y + self.a1 * x * y + self.a3 * y == self.rhs(x)

    def to_json(self) -> dict:
        return {name: str(getattr(self, name)) for name in ("a1", "a2", "a3", "a4", "a6")}


@dataclass(frozen=True)
class Point:
    """Affine point or the point at infinity (x = y = None)."""

    x: object = None
    y: object = None

    @classmethod
    def infinity(cls) -> "Point":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"

    def to_json(self) -> dict:
        if self.is_infinity:
            return {"infinity": True}
        return {"x": str(self.x), "y": str(self.y)}


INFINITY = Point.infinity()


def on_curve(curve: Curve, point: Point) -> bool:
    """True iff the point is infinity or satisfies the equation exactly."""
    return curve.contains(point)


def _require_on_curve(curve: Curve, point: Point):
    if not curve.contains(point):
        raise PointNotOnCurveError(f"point {point} is not on the curve")


def negate(curve: Curve, point: Point) -> Point:
    if point.is_infinity:
        return point
    x, y = point.x, point.y
    return Point(x, -y - curve.a1 * x - curve.a3)


def _add_unchecked(curve: Curve, p: Point, q: Point) -> Point:
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    a1, a2, a3, a4, a6 = curve.a1, curve.a2, curve.a3, curve.a4, curve.a6
    x1, y1 = p.x, p.y
    x2, y2 = q.x, q.y
    if x1 == x2:
        if y1 + y2 + a1 * x2 + a3 == 0:
            return INFINITY
        denom = 2 * y1 + a1 * x1 + a3
        slope = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / denom
        intercept = (-(x1**3) + a4 * x1 + 2 * a6 - a3 * y1) / denom
    else:
        slope = (y2 - y1) / (x2 - x1)
        intercept = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = slope * slope + a1 * slope - a2 - x1 - x2
    y3 = -(slope + a1) * x3 - intercept - a3
    return Point(x3, y3)


def add(curve: Curve, p: Point, q: Point) -> Point:
    """Chord-tangent addition; operands are validated against the curve."""
    _require_on_curve(curve, p)
    _require_on_curve(curve, q)
    return _add_unchecked(curve, p, q)


def double(curve: Curve, p: Point) -> Point:
    return add(curve, p, p)


def scalar_mul(curve: Curve, n: int, p: Point) -> Point:
    """n*P by double-and-add; scalar_mul(0, P) is the identity."""
    _require_on_curve(curve, p)
    if n < 0:
        n, p = -n, negate(curve, p)
    result = INFINITY
    addend = p
    while n:
        if n & 1:
            result = _add_unchecked(curve, result, addend)
        addend = _add_unchecked(curve, addend, addend)
        n >>= 1
    return result


def torsion_order(curve: Curve, point: Point, bound: int = 12) -> Optional[int]:
    """Least n <= bound with n*P = O, else None (no torsion found).

    Over Q the default bound 12 is exhaustive (Mazur); over function fields
    the same bound is a heuristic cutoff and None is not a proof.
    """
    _require_on_curve(curve, point)
    acc = point
    for n in range(1, bound + 1):
        if acc.is_infinity:
            return n
        acc = _add_unchecked(curve, acc, point)
    return None


def _specialize_value(value, u0: Fraction):
    evaluate = getattr(value, "evaluate", None)
    if evaluate is not None:
        return evaluate(u0)
    return value


def specialize_curve(curve: Curve, u0: Fraction) -> Curve:
    """Evaluate RatFunc coefficients at a rational parameter value.

    Useful for transporting function-field statements to Q: at any parameter
    where the specialized curve is nonsingular, specialization is a group
    homomorphism, so nP = O over Q(u) would force nP = O on every such fiber.
    """
    return Curve(*(_specialize_value(getattr(curve, n), u0) for n in ("a1", "a2", "a3", "a4", "a6")))


def specialize_point(point: Point, u0: Fraction) -> Point:
    if point.is_infinity:
        return point
    return Point(_specialize_value(point.x, u0), _specialize_value(point.y, u0))


# ---------------------------------------------------------------------------
# catalog of the specific curves used by the package


def _quartic_pair_curve(r) -> Curve:
    # y^2 = (x + 2r^2)(x - 2r^2)(x - r^4 - 1)
    r4 = r**4
    zero = r - r
    return Curve(zero, -(r4 + 1), zero, -4 * r4, 4 * r4 * (r4 + 1))


def _square_a_family_curve(u) -> Curve:
    zero = u - u
    return Curve(zero, zero, zero, 4 * (u**4 - 1) ** 2, zero)


def _scaled_square_family_curve(k, u) -> Curve:
    zero = u - u
    return Curve(zero, zero, zero, 4 * k * k * (k * k * u**4 - 1) ** 2, zero)


def _proportional_pair_curve(alpha) -> Curve:
    zero = alpha - alpha
    return Curve(zero, zero, zero, 4 * alpha * alpha * (alpha * alpha - 1) ** 2, zero)


def _square_r_curve() -> Curve:
    z = Fraction(0)
    return Curve(z, z, z, Fraction(-12), z)


def _square_c_family_curve(u) -> Curve:
    zero = u - u
    return Curve(zero, zero, zero, -(u * u) * (u * u - 1) ** 2, zero)


def _cubic_section_z_curve(z) -> Curve:
    zero = z - z
    c = z**3 + 1
    return Curve(zero, zero, -9 * c, zero, -27 * c * c)


def _cubic_section_k_curve(k) -> Curve:
    zero = k - k
    return Curve(zero, zero, zero, zero, Fraction(-27, 4) * k**3 * (k**3 - 4))


def _neighbor_pair_curve() -> Curve:
    # t^2 = (r+1)(r^2+2r-1)/4 scaled by y = 2t: y^2 = x^3 + 3x^2 + x - 1
    return Curve(Fraction(0), Fraction(3), Fraction(0), Fraction(1), Fraction(-1))


_CATALOG = {
    "E_r": (_quartic_pair_curve, 1),
    "fam1": (_square_a_family_curve, 1),
    "fam2k": (_scaled_square_family_curve, 2),
    "fam2": (_proportional_pair_curve, 1),
    "rsq": (_square_r_curve, 0),
    "sec7": (_square_c_family_curve, 1),
    "cubicZ": (_cubic_section_z_curve, 1),
    "cubicK": (_cubic_section_k_curve, 1),
    "alpha2": (_neighbor_pair_curve, 0),
}

CURVE_IDS = tuple(sorted(_CATALOG))


def curve_catalog(curve_id: str, *params) -> Curve:
    """Construct a catalog curve with exact coefficients.

    Degenerate parameters surface as SingularCurveError (e.g. r in {0, +-1}
    for "E_r").
    """
    if curve_id not in _CATALOG:
        raise KeyError(f"unknown curve id {curve_id!r}; known: {', '.join(CURVE_IDS)}")
    builder, arity = _CATALOG[curve_id]
    if len(params) != arity:
        raise ValueError(f"curve {curve_id!r} takes {arity} parameter(s)")
    return builder(*params)


def neighbor_pair_point(r, t) -> Point:
    """(r, t) with t^2 = (r+1)(r^2+2r-1)/4 as a point on the "alpha2" model."""
    return Point(r, 2 * t)


def neighbor_pair_rt(point: Point) -> Tuple[object, object]:
    """Inverse of neighbor_pair_point; the y = 2t scaling is lossless."""
    if point.is_infinity:
        raise ValueError("infinity has no (r, t) coordinates")
    return point.x, point.y / 2


def er_to_alpha_s(r, point: Point) -> Tuple[object, object]:
    """Map a point on the r-parameterized quartic-pair curve to (alpha, s).

    alpha = 2r(r^4-1)/(x - 2r^4) and s = r + alpha; the caller is responsible
    for discarding s in {+-1, +-r} before building a triple.
    """
    if point.is_infinity:
        raise TransformationPoleError("transformation undefined at infinity")
    x = point.x
    pole = x - 2 * r**4
    if pole == 0:
        raise TransformationPoleError("transformation pole at x = 2r^4")
    alpha = 2 * r * (r**4 - 1) / pole
    return alpha, r + alpha


def er_torsion_points(r) -> list:
    """The eight torsion points of the quartic-pair curve over Q(r)."""
    zero = r - r
    r2 = r * r
    r4 = r2 * r2
    w = 2 * r2 * (r4 - 1)
    v = 2 * (r4 - 1)
    return [
        INFINITY,
        Point(-2 * r2, zero),
        Point(2 * r2, zero),
        Point(r4 + 1, zero),
        Point(2 * r4, w),
        Point(2 * r4, -w),
        Point(2 * (zero + 1), v),
        Point(2 * (zero + 1), -v),
    ]


def pell_point(r, p) -> Point:
    """(r^2+1, p*r*(1-r^2)) on the quartic-pair curve when p^2 - 3r^2 = 1."""
    return Point(r * r + 1, p * r * (1 - r * r))


# ---------------------------------------------------------------------------
# Fermat-cubic section maps (x^3 + y^3 = z^3 + 1 sliced two ways)


def fermat_fixed_z_to_curve(z, x, y) -> Point:
    """Slice at fixed z: (x, y) with x^3 + y^3 = z^3 + 1 onto "cubicZ".

    Uses the classical correspondence X = 12c/(x+y), Y = 36c(y-x)/(x+y) to
    the short form Y^2 = X^3 - 432c^2, shifted onto the long model
    Y^2 - 9cY = X^3 - 27c^2, which lands at X = 3c/(x+y), Y = 9cy/(x+y).
    The (y-x) sign is pinned so that doubling the trivial-solution point
    pulls back with the components in the conventional order.
    """
    c = z**3 + 1
    denom = x + y
    if denom == 0:
        raise TransformationPoleError("pole at x + y = 0")
    return Point(3 * c / denom, 9 * c * y / denom)


def curve_to_fermat_fixed_z(z, point: Point) -> Tuple[object, object]:
    """Inverse of fermat_fixed_z_to_curve: x = (9c - Y)/(3X), y = Y/(3X)."""
    if point.is_infinity:
        raise TransformationPoleError("infinity corresponds to x + y = 0")
    c = z**3 + 1
    if point.x == 0:
        raise TransformationPoleError("pole at X = 0")
    y = point.y / (3 * point.x)
    x = (9 * c - point.y) / (3 * point.x)
    return x, y


def fermat_fixed_sum_to_curve(k, x, z) -> Point:
    """Slice at fixed k = x + y: (x, z) with x^3 + y^3 = z^3 + 1 onto "cubicK".

    Completing the square in x turns z^3 = 3k(x - k/2)^2 + (k^3-4)/4 into
    Y^2 = X^3 - 27k^3(k^3-4)/4 via X = 3kz, Y = 9k^2(x - k/2).
    """
    return Point(3 * k * z, 9 * k * k * x - Fraction(9, 2) * k**3)


def curve_to_fermat_fixed_sum(k, point: Point) -> Tuple[object, object, object]:
    """Inverse of fermat_fixed_sum_to_curve; returns (x, y, z)."""
    if point.is_infinity:
        raise TransformationPoleError("infinity has no (x, z) coordinates")
    if k == 0:
        raise TransformationPoleError("pole at k = 0")
    z = point.x / (3 * k)
    x = point.y / (9 * k * k) + k / 2
    return x, k - x, z


def cubic_section_maps(model: str, direction: str, param, payload):
    """Dispatch between the surface x^3+y^3 = z^3+1 and its Weierstrass slices.

    model: "z" (fixed z, curve "cubicZ") or "k" (fixed x+y, curve "cubicK").
    direction: "to_curve" (payload = coordinate tuple) or "to_surface"
    (payload = Point).  Forward then backward is the identity away from poles.
    """
    if model == "z":
        if direction == "to_curve":
            return fermat_fixed_z_to_curve(param, *payload)
        if direction == "to_surface":
            return curve_to_fermat_fixed_z(param, payload)
    elif model == "k":
        if direction == "to_curve":
            return fermat_fixed_sum_to_curve(param, *payload)
        if direction == "to_surface":
            return curve_to_fermat_fixed_sum(param, payload)
    raise ValueError("model must be 'z' or 'k'; direction 'to_curve' or 'to_surface'")
