"""k-th power Diophantine tuples: verification and regular construction.

A k-th power Diophantine tuple is a set of distinct nonzero rationals whose
pairwise products plus one are all k-th powers of rationals.  The regular
construction builds 2k-th power triples from a parameter pair (r, s): with
a = s^k - r^k, the remaining power condition collapses to requiring
(r^k s^k - 1)/(s^k - r^k) to be a k-th power t^k, and then

    a = s^k - r^k,   b = t^k - r^k,   c = s^k + t^k = a + b + 2 r^k.

The taxicab route runs the other way: from x^k + y^k = z^k + 1 with xy/z,
xz/y, yz/x all rational squares, the square roots recover (r, s, t).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .rationals import (
    GaussianRational,
    format_rational,
    gaussian_kth_root,
    rational_kth_root,
)

Element = Union[Fraction, GaussianRational]


class DegenerateTripleError(ValueError):
    """A constructed triple has a zero or repeated element."""


def _coerce_element(value) -> Element:
    if isinstance(value, GaussianRational):
        return value
    return Fraction(value)


def _kth_root_for(value, k: int):
    if isinstance(value, GaussianRational):
        return gaussian_kth_root(value, k)
    return rational_kth_root(value, k)


@dataclass(frozen=True)
class PowerTuple:
    """Verified k-th power Diophantine tuple with its pairwise witnesses."""

    elements: Tuple[Element, ...]
    power: int
    witnesses: Dict[Tuple[int, int], Element] = field(hash=False)

    def witness(self, i: int, j: int) -> Element:
        return self.witnesses[(min(i, j), max(i, j))]

    def to_json(self) -> dict:
        return {
            "elements": [str(e) for e in self.elements],
            "power": self.power,
            "witnesses": {f"{i},{j}": str(w) for (i, j), w in sorted(self.witnesses.items())},
        }


@dataclass(frozen=True)
class TupleFailure:
    """Pairs whose product plus one is not a k-th power (or is zero)."""

    elements: Tuple[Element, ...]
    power: int
    failures: Tuple[Tuple[int, int, Element], ...]

    def to_json(self) -> dict:
        return {
            "elements": [str(e) for e in self.elements],
            "power": self.power,
            "failures": [
                {"i": i, "j": j, "value": str(v)} for (i, j, v) in self.failures
            ],
        }


def verify_tuple(
    elements: Sequence, k: int, allow_zero_witness: bool = False
) -> Union[PowerTuple, TupleFailure]:
    """Check every pairwise product + 1 for being an exact k-th power.

    Returns a PowerTuple with all witnesses on success, or a TupleFailure
    listing the offending pairs.  Zero witnesses (product + 1 = 0) are
    rejected unless allow_zero_witness is set: they make every downstream
    triple construction degenerate.  Duplicate or zero elements raise.
    """
    if k < 2:
        raise ValueError("verify_tuple requires k >= 2")
    elems = tuple(_coerce_element(e) for e in elements)
    if len(elems) < 2:
        raise ValueError("need at least two elements")
    if any(not e for e in elems):
        raise ValueError("elements must be nonzero")
    if len(set(elems)) != len(elems):
        raise ValueError("elements must be distinct")
    witnesses = {}
    failures = []
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            value = elems[i] * elems[j] + 1
            if not value and not allow_zero_witness:
                failures.append((i, j, value))
                continue
            root = _kth_root_for(value, k)
            if root is None:
                failures.append((i, j, value))
            else:
                witnesses[(i, j)] = root
    if failures:
        return TupleFailure(elems, k, tuple(failures))
    return PowerTuple(elems, k, witnesses)


def regularity_defect(a, b, c):
    """a^2+b^2+c^2-2ab-2bc-2ca-4; identically zero for regular triples."""
    return a * a + b * b + c * c - 2 * a * b - 2 * b * c - 2 * c * a - 4


@dataclass(frozen=True)
class RegularTriple:
    """Regular 2k-th power triple with its (r, s, t) construction data."""

    half_power: int  # the triple is a 2k-th power triple, k = half_power
    r: Fraction
    s: Fraction
    t: Fraction
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        k = self.half_power
        if k < 1:
            raise ValueError("half_power must be >= 1")
        rk, sk, tk = self.r**k, self.s**k, self.t**k
        if self.a != sk - rk or self.b != tk - rk or self.c != sk + tk:
            raise ValueError("triple data does not satisfy the regular shape")
        if (
            self.a * self.b + 1 != rk * rk
            or self.a * self.c + 1 != sk * sk
            or self.b * self.c + 1 != tk * tk
        ):
            raise ValueError("triple data fails a power condition")
        abc = (self.a, self.b, self.c)
        if any(v == 0 for v in abc) or len(set(abc)) != 3:
            raise DegenerateTripleError("triple has zero or repeated elements")
        if 0 in (self.r, self.s, self.t):
            # a zero witness (product + 1 = 0) cannot pass verification
            raise DegenerateTripleError("triple has a zero witness")

    @classmethod
    def build(cls, r, s, t, k: int) -> "RegularTriple":
        r, s, t = Fraction(r), Fraction(s), Fraction(t)
        rk, sk, tk = r**k, s**k, t**k
        return cls(k, r, s, t, sk - rk, tk - rk, sk + tk)

    @property
    def power(self) -> int:
        return 2 * self.half_power

    def elements(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def defect(self) -> Fraction:
        return regularity_defect(self.a, self.b, self.c)

    def to_power_tuple(self) -> PowerTuple:
        result = verify_tuple(self.elements(), self.power)
        assert isinstance(result, PowerTuple)
        return result

    def to_json(self) -> dict:
        tup = self.to_power_tuple()
        return {
            "schema": "powertriples/triple-v1",
            "k": self.power,
            "r": format_rational(self.r),
            "s": format_rational(self.s),
            "t": format_rational(self.t),
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "c": format_rational(self.c),
            "witnesses": {f"{i},{j}": str(w) for (i, j), w in sorted(tup.witnesses.items())},
            "regular": self.defect() == 0,
            "signs": [1 if v > 0 else -1 for v in self.elements()],
        }


def construct_regular(r, s, k: int = 2) -> Optional[RegularTriple]:
    """Regular 2k-th power triple from (r, s), or None when no t exists.

    Preconditions (the proposition's hypotheses): r, s not in {0, +-1} and
    s != +-r.  Returns None when (r^k s^k - 1)/(s^k - r^k) is not a k-th
    power; raises DegenerateTripleError when it is one but the resulting
    elements collide or vanish.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    r, s = Fraction(r), Fraction(s)
    if r in (0, 1, -1) or s in (0, 1, -1):
        raise ValueError("r and s must avoid {0, 1, -1}")
    if s == r or s == -r:
        raise ValueError("s must differ from +-r")
    rk, sk = r**k, s**k
    t = rational_kth_root((rk * sk - 1) / (sk - rk), k)
    if t is None:
        return None
    return RegularTriple.build(r, s, t, k)


def bst_family(r, k: int):
    """The even-power parametric triple {-1/r^(k/2), (r^k-1)/r^(k/2), r^(k/2)}.

    Works over any exact field element r (Fraction or RatFunc); the pairwise
    witnesses are 1/r, 0 and r, verified exactly.  The zero witness is
    intrinsic to this family.
    """
    if k < 2 or k % 2 != 0:
        raise ValueError("k must be an even integer >= 2")
    if isinstance(r, int):
        r = Fraction(r)
    if r == 0 or r == 1 or r == -1:
        raise ValueError("r must avoid {0, 1, -1}")
    h = k // 2
    rh = r**h
    elements = (-1 / rh, (r**k - 1) / rh, rh)
    if isinstance(r, Fraction):
        result = verify_tuple(elements, k, allow_zero_witness=True)
        if not isinstance(result, PowerTuple):
            raise AssertionError(f"family verification failed: {result}")
        return result
    # symbolic field element: verify the closed-form witnesses directly
    witnesses = {(0, 1): 1 / r, (0, 2): r - r, (1, 2): r}
    for (i, j), w in witnesses.items():
        if elements[i] * elements[j] + 1 != w**k:
            raise AssertionError(f"witness check failed for pair ({i},{j})")
    return PowerTuple(elements, k, witnesses)


def _sqrt_nonneg(q: Fraction) -> Optional[Fraction]:
    return rational_kth_root(q, 2)


def from_taxicab(x, y, z, k: int) -> Optional[RegularTriple]:
    """Regular 2k-th power triple from a solution of x^k + y^k = z^k + 1.

    Requires the sum identity exactly (ValueError otherwise); returns None
    when xy/z, xz/y, yz/x are not all rational squares or the triple
    degenerates.  Signs: positive square roots are taken first, then the
    (r,s)/(r,t)/(s,t) pair whose joint flip matches the sign pattern of
    (x, y, z); x = rs, y = rt, z = st then hold exactly.
    """
    if k < 2:
        raise ValueError("from_taxicab requires k >= 2")
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    if 0 in (x, y, z):
        raise ValueError("x, y, z must be nonzero")
    if x**k + y**k != z**k + 1:
        raise ValueError("x^k + y^k = z^k + 1 must hold exactly")
    r = _sqrt_nonneg(x * y / z)
    s = _sqrt_nonneg(x * z / y)
    t = _sqrt_nonneg(y * z / x)
    if r is None or s is None or t is None:
        return None
    pattern = (x > 0, y > 0, z > 0)
    if pattern == (False, False, True):
        s, t = -s, -t
    elif pattern == (False, True, False):
        r, t = -r, -t
    elif pattern == (True, False, False):
        r, s = -r, -s
    if r * s != x or r * t != y or s * t != z:
        return None  # square roots exist but cannot be signed consistently
    try:
        return RegularTriple.build(r, s, t, k)
    except DegenerateTripleError:
        return None


def dehomogenize(
    X: int, Y: int, Z: int, W: int, k: int
) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """Affine forms x^k + y^k = z^k + 1 of the identity X^k + Y^k = Z^k + W^k.

    Each of the four entries takes a turn as the denominator; for odd k the
    two sign arrangements that move one k-th power across the equation are
    included as well.  Every emitted candidate satisfies the affine identity
    exactly; duplicates are removed preserving order.
    """
    if X**k + Y**k != Z**k + W**k:
        raise ValueError("X^k + Y^k = Z^k + W^k must hold exactly")
    if {abs(X), abs(Y)} == {abs(Z), abs(W)}:
        raise ValueError("identity is trivial: {X, Y} = {Z, W}")
    if 0 in (X, Y, Z, W):
        raise ValueError("entries must be nonzero")
    out: List[Tuple[Fraction, Fraction, Fraction]] = []
    # (p, q, n, D) with p^k + q^k = n^k + D^k; D becomes the denominator
    for p, q, n, d in ((X, Y, Z, W), (X, Y, W, Z), (Z, W, Y, X), (Z, W, X, Y)):
        cands = [(Fraction(p, d), Fraction(q, d), Fraction(n, d))]
        if k % 2 == 1:
            cands.append((Fraction(q, d), Fraction(-n, d), Fraction(-p, d)))
            cands.append((Fraction(p, d), Fraction(-n, d), Fraction(-q, d)))
        for cand in cands:
            assert cand[0] ** k + cand[1] ** k == cand[2] ** k + 1
            if cand not in out:
                out.append(cand)
    return out
