"""Exact univariate polynomial and rational-function arithmetic over Q.

``Poly`` is a dense, immutable polynomial with Fraction coefficients in
ascending degree order; ``RatFunc`` is a reduced ratio of two Polys with a
monic denominator, so equality is plain structural equality of the canonical
form.  Everything here is exact; these are the values the symbolic identity
proofs run on (the field Q(u) in curve and family computations).

All dense degrees in this package stay below ~30, which keeps the simple
dense representation comfortably fast.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .rationals import format_rational, parse_rational, rational_kth_root

Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Poly:
    """Polynomial over Q; ``coeffs`` ascending, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Poly":
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls((0,) * degree + (c,))

    # -- structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lc = self.leading
        if lc == 1:
            return self
        return Poly(c / lc for c in self.coeffs)

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Poly()
        a, b = self.coeffs, o.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci == 0:
                continue
            for j, cj in enumerate(b):
                out[i + j] += ci * cj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        dlc = o.leading
        for i in range(dq, -1, -1):
            c = rem[i + len(o.coeffs) - 1]
            if c == 0:
                continue
            q = c / dlc
            quot[i] = q
            for j, oc in enumerate(o.coeffs):
                rem[i + j] -= q * oc
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        res = divmod(self, other)
        return res[0] if res is not NotImplemented else NotImplemented

    def __mod__(self, other):
        res = divmod(self, other)
        return res[1] if res is not NotImplemented else NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, point):
        """Horner evaluation; works for any value supporting +,* with Fraction."""
        if not self.coeffs:
            return point * 0
        result = self.coeffs[-1] + point * 0
        for c in reversed(self.coeffs[:-1]):
            result = result * point + c
        return result

    # -- presentation ------------------------------------------------------

    def to_expr(self, var: str = "u") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = format_rational(abs(c))
            else:
                mag = "" if abs(c) == 1 else format_rational(abs(c)) + "*"
                term = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    def __str__(self):
        return self.to_expr()

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def to_strings(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Poly":
        return cls(parse_rational(s) for s in items)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def poly_square_root(p: Poly) -> Optional[Poly]:
    """q with q*q == p, leading coefficient positive; None if no such q."""
    if p.is_zero:
        return Poly()
    if p.degree % 2 != 0:
        return None
    lead_root = rational_kth_root(p.leading, 2)
    if lead_root is None:
        return None
    half = p.degree // 2
    q = Poly.monomial(half, lead_root)
    r = p - q * q
    # peel off the highest term of the residual; each step lowers its degree
    while not r.is_zero:
        d = r.degree - half
        if d < 0 or d >= half:
            return None
        q = q + Poly.monomial(d, r.leading / (2 * lead_root))
        r = p - q * q
    return q


def reversal(p: Poly, degree_hint: int) -> Poly:
    """Coefficient reversal relative to degree_hint: x^hint * p(1/x)."""
    if degree_hint < p.degree:
        raise ValueError("degree_hint must be >= deg(p)")
    padded = list(p.coeffs) + [Fraction(0)] * (degree_hint + 1 - len(p.coeffs))
    return Poly(reversed(padded))


def symmetric_in_u(g: Poly, half_span: int) -> Optional[Poly]:
    """Write g(a) as h(a + 1/a) * a^half_span when possible.

    Equivalently: g(a)/a^half_span must be a symmetric Laurent polynomial.
    Returns h, or None when the symmetry fails or degrees do not fit.
    """
    if half_span < 0:
        raise ValueError("half_span must be >= 0")
    if g.is_zero:
        return Poly()
    if g.degree > 2 * half_span:
        return None
    laurent = {}
    for i, c in enumerate(g.coeffs):
        laurent[i - half_span] = c
    for j in range(1, half_span + 1):
        if laurent.get(j, Fraction(0)) != laurent.get(-j, Fraction(0)):
            return None
    # a^j + a^-j as polynomials w_j(u): w_0 = 2, w_1 = u, w_{j+1} = u*w_j - w_{j-1}
    top = max((j for j, c in laurent.items() if j >= 0 and c != 0), default=0)
    w_prev, w_cur = Poly((2,)), Poly.x()
    h = Poly.constant(laurent.get(0, Fraction(0)))
    for j in range(1, top + 1):
        h = h + laurent.get(j, Fraction(0)) * w_cur
        w_prev, w_cur = w_cur, Poly.x() * w_cur - w_prev
    return h


def decompose_even(p: Poly) -> Optional[Poly]:
    """q with p(x) == q(x^2), or None if p has an odd-degree term."""
    if any(c != 0 for c in p.coeffs[1::2]):
        return None
    return Poly(p.coeffs[0::2])


class RatFunc:
    """Reduced ratio of Polys over Q; denominator monic and coprime to num."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        n = Poly._coerce(num)
        d = Poly.one() if den is None else Poly._coerce(den)
        if n is None or d is None:
            raise TypeError("RatFunc components must be Poly or rational")
        if d.is_zero:
            raise ZeroDivisionError("zero denominator in RatFunc")
        if n.is_zero:
            n, d = Poly(), Poly.one()
        else:
            g = poly_gcd(n, d)
            if g.degree > 0:
                n, d = n // g, d // g
            lc = d.leading
            if lc != 1:
                n = Poly(c / lc for c in n.coeffs)
                d = d.monic()
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(Poly.x())

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(Poly())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(Poly.one())

    @classmethod
    def constant(cls, c: Scalar) -> "RatFunc":
        return cls(Poly.constant(c))

    # -- field operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional["RatFunc"]:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return RatFunc.one() / self**-exponent
        return RatFunc(self.num**exponent, self.den**exponent)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.as_constant()

    def evaluate(self, point: Scalar) -> Fraction:
        point = _as_fraction(point)
        dv = self.den(point)
        if dv == 0:
            raise ZeroDivisionError(f"denominator vanishes at {point}")
        return self.num(point) / dv

    def sqrt(self) -> Optional["RatFunc"]:
        """Exact square root in Q(u) with positive leading coefficient."""
        rn = poly_square_root(self.num)
        if rn is None:
            return None
        rd = poly_square_root(self.den)
        if rd is None:
            return None
        return RatFunc(rn, rd)

    def __str__(self):
        if self.den == Poly.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_strings(), "den": self.den.to_strings()}

    @classmethod
    def from_json(cls, data: dict) -> "RatFunc":
        return cls(Poly.from_strings(data["num"]), Poly.from_strings(data["den"]))


def substitute(target: Union[Poly, RatFunc], arg) -> RatFunc:
    """Exact composition target(arg), canonicalized as a RatFunc."""
    a = RatFunc._coerce(arg)
    if a is None:
        raise TypeError("substitute argument must be RatFunc-coercible")
    if isinstance(target, Poly):
        return target(a)
    if isinstance(target, RatFunc):
        den = target.den(a)
        if den.is_zero:
            raise ZeroDivisionError("denominator vanishes under substitution")
        return target.num(a) / den
    raise TypeError("substitute target must be Poly or RatFunc")
