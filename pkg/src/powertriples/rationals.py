"""Exact scalar arithmetic: reduced rationals, Gaussian rationals, k-th roots.

Rationals are plain :class:`fractions.Fraction` values (arbitrary precision,
always reduced, positive denominator), re-exported as ``Rational``.  On top of
that this module provides exact k-th power detection for integers, rationals
and Gaussian rationals, which every "is a k-th power" check in the package
runs through.  There is no floating-point public API: floats appear only as
seeds that are always followed by exact verification.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Tuple, Union

Rational = Fraction

RationalLike = Union[int, Fraction]


def int_kth_root(n: int, k: int) -> Tuple[int, bool]:
    """Return ``(floor(n ** (1/k)), exact)`` for n >= 0, k >= 1.

    A floating seed is refined by integer Newton steps; the result is always
    verified exactly, so the ``exact`` flag is trustworthy at any size.
    """
    if n < 0:
        raise ValueError("int_kth_root requires n >= 0")
    if k < 1:
        raise ValueError("int_kth_root requires k >= 1")
    if k == 1 or n in (0, 1):
        return n, True
    try:
        x = int(n ** (1.0 / k)) + 1
    except OverflowError:
        x = 1 << ((n.bit_length() + k - 1) // k)
    # make sure we start at or above the root, then descend monotonically
    while x**k < n:
        x *= 2
    while True:
        t = ((k - 1) * x + n // x ** (k - 1)) // k
        if t >= x:
            break
        x = t
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x, x**k == n


def is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def rational_kth_root(q: RationalLike, k: int) -> Optional[Fraction]:
    """Exact k-th root of a rational, or None if no rational root exists.

    For even k the nonnegative root is returned; for even k and q < 0 the
    answer is None.  Since q is reduced, a root exists iff the numerator and
    denominator are both perfect k-th powers.
    """
    if k < 1:
        raise ValueError("rational_kth_root requires k >= 1")
    q = Fraction(q)
    if k == 1:
        return q
    if q == 0:
        return Fraction(0)
    if q < 0:
        if k % 2 == 0:
            return None
        t = rational_kth_root(-q, k)
        return None if t is None else -t
    rn, ok = int_kth_root(q.numerator, k)
    if not ok:
        return None
    rd, ok = int_kth_root(q.denominator, k)
    if not ok:
        return None
    return Fraction(rn, rd)


def format_rational(q: RationalLike) -> str:
    """Serialize as "num/den", omitting the denominator when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer literal exactly (no floating point)."""
    return Fraction(text.strip())


def decimal_string(q: RationalLike, places: int) -> str:
    """Truncated decimal expansion of q >= 0 with `places` digits."""
    q = Fraction(q)
    if q < 0:
        return "-" + decimal_string(-q, places)
    whole, rest = divmod(q.numerator, q.denominator)
    digits = rest * 10**places // q.denominator
    return f"{whole}.{digits:0{places}d}"


@dataclass(frozen=True)
class GaussianRational:
    """Element of Q(i) with exact Fraction components."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    # -- coercion -------------------------------------------------------

    @staticmethod
    def _coerce(value) -> Optional["GaussianRational"]:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(Fraction(value))
        return None

    # -- field operations ----------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return 1 / (self**-exponent)
        result = GaussianRational(Fraction(1))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    # -- structure ------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """re^2 + im^2; zero exactly for the zero element."""
        return self.re * self.re + self.im * self.im

    def is_rational(self) -> bool:
        return self.im == 0

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return f"{format_rational(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, data: dict) -> "GaussianRational":
        return cls(parse_rational(data["re"]), parse_rational(data["im"]))


GAUSSIAN_ZERO = GaussianRational()
GAUSSIAN_ONE = GaussianRational(Fraction(1))
GAUSSIAN_I = GaussianRational(Fraction(0), Fraction(1))


def parse_gaussian(text: str) -> GaussianRational:
    """Parse strings like "28+4i", "-15-10i", "16i", "3/2", "-i"."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian rational")
    if not s.endswith("i"):
        return GaussianRational(parse_rational(s))
    body = s[:-1]
    # split off the real part at the last top-level +/- (skipping a leading sign
    # and signs inside the fraction are impossible: "/" parts carry no sign)
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-":
            re_part, im_part = body[:pos], body[pos:]
            break
    else:
        re_part, im_part = "", body
    if im_part in ("", "+"):
        im = Fraction(1)
    elif im_part == "-":
        im = Fraction(-1)
    else:
        im = parse_rational(im_part)
    re = parse_rational(re_part) if re_part else Fraction(0)
    return GaussianRational(re, im)


def _divisors(n: int, cap: int = 4096) -> list:
    """Divisors of n (n >= 1), capped; small inputs return the full list."""
    out = []
    d = 1
    while d * d <= n and len(out) < cap:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _gaussian_root_candidates(z: GaussianRational, k: int):
    zc = complex(z.re, z.im)
    try:
        w0 = zc ** (1.0 / k)
    except (OverflowError, ValueError):
        return
    dens = _divisors(int(z.re.denominator * z.im.denominator // gcd(
        z.re.denominator, z.im.denominator)))
    # the Gaussian root, if any, is some k-th root of z, i.e. a rotation of the
    # principal float root by a k-th root of unity
    for turn in range(k):
        w = w0 * cmath.exp(2j * cmath.pi * turn / k)
        for _ in range(4):  # Newton polish before rounding
            wk1 = w ** (k - 1)
            if wk1 == 0:
                break
            w -= (wk1 * w - zc) / (k * wk1)
        for q in dens:
            for dre in (-1, 0, 1):
                for dim in (-1, 0, 1):
                    re = Fraction(round(w.real * q) + dre, q)
                    im = Fraction(round(w.imag * q) + dim, q)
                    yield GaussianRational(re, im)


def gaussian_kth_root(z, k: int) -> Optional[GaussianRational]:
    """Exact k-th root in Q(i), or None.

    The float seed is rounded to Gaussian rationals whose denominator divides
    the input's and every candidate is verified exactly; all unit rotations
    (those fourth roots of unity that are k-th roots of unity) are considered.
    The canonical representative has maximal real part, ties broken by
    nonnegative imaginary part.
    """
    if k < 1:
        raise ValueError("gaussian_kth_root requires k >= 1")
    z = GaussianRational._coerce(z)
    if z is None:
        raise TypeError("expected a GaussianRational or rational")
    if k == 1:
        return z
    if not z:
        return GAUSSIAN_ZERO

    found = None
    if z.im == 0:
        t = rational_kth_root(z.re, k)
        if t is not None:
            found = GaussianRational(t)
    if found is None:
        znorm = z.norm()
        seen = set()
        for cand in _gaussian_root_candidates(z, k):
            if cand in seen:
                continue
            seen.add(cand)
            # cheap necessary condition before the exact power check
            if cand.norm() ** k != znorm:
                continue
            if cand**k == z:
                found = cand
                break
    if found is None:
        return None

    units = [GAUSSIAN_ONE]
    if k % 2 == 0:
        units.append(-GAUSSIAN_ONE)
    if k % 4 == 0:
        units.extend([GAUSSIAN_I, -GAUSSIAN_I])
    roots = [found * u for u in units]
    return max(roots, key=lambda w: (w.re, w.im))
