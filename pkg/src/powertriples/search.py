"""Computational searches: integer parameter pairs, Pell solutions, taxicab
identities with square product, the Euler quartic parametrization, and the
Gaussian verification scan.

Searches use a numpy machine-word fast path to discard the bulk of the space
(quadratic-residue filters on a few moduli) and confirm every surviving
candidate in exact arbitrary-precision arithmetic; no result ever rests on
floating point or on a modular filter alone.  Long scans checkpoint their
progress to JSON so interrupted runs resume where they stopped.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .polynomials import Poly, decompose_even, reversal, symmetric_in_u
from .rationals import (
    GaussianRational,
    format_rational,
    gaussian_kth_root,
    is_perfect_square,
)
from .triples import PowerTuple, verify_tuple

# squares are scarce modulo these; combined rejection rate ~99.2%
_FILTER_MODULI = (256, 63, 65, 11)
_QR_LOOKUP = {
    m: np.array([i in {(j * j) % m for j in range(m)} for i in range(m)], dtype=bool)
    for m in _FILTER_MODULI
}

# int64 safety for the fast path: s^2 r^2 - 1 must stay below 2^63
_FAST_PATH_BOUND = 55000


@dataclass(frozen=True)
class PairHit:
    """Integer pair 1 < r < s with (s^2 r^2 - 1)/(s^2 - r^2) a rational square."""

    r: int
    s: int
    t: Fraction
    t_integral: bool

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "t": format_rational(self.t),
            "t_integral": self.t_integral,
        }


def _exact_pair_check(r: int, s: int) -> Optional[PairHit]:
    n = r * r * s * s - 1
    d = s * s - r * r
    g = gcd(n, d)
    n //= g
    d //= g
    rn = isqrt(n)
    if rn * rn != n:
        return None
    rd = isqrt(d)
    if rd * rd != d:
        return None
    t = Fraction(rn, rd)
    assert t * t == Fraction(r * r * s * s - 1, s * s - r * r)
    return PairHit(r, s, t, rd == 1)


def _scan_pair_rows(r_lo: int, r_hi: int, bound: int) -> List[PairHit]:
    """All hits with r in [r_lo, r_hi) and r < s < bound."""
    hits: List[PairHit] = []
    for r in range(max(r_lo, 2), r_hi):
        if r + 1 >= bound:
            break
        s = np.arange(r + 1, bound, dtype=np.int64)
        n = (r * r) * s * s - 1
        d = s * s - (r * r)
        mask = np.ones(len(s), dtype=bool)
        for m in _FILTER_MODULI:
            # n*d is a square iff the reduced parts both are; test mod m
            prod_mod = ((n % m) * (d % m)) % m
            mask &= _QR_LOOKUP[m][prod_mod]
            if not mask.any():
                break
        for sv in s[mask]:
            hit = _exact_pair_check(r, int(sv))
            if hit is not None:
                hits.append(hit)
    return hits


def _load_checkpoint(path: Optional[str], key: dict) -> Optional[dict]:
    if not path or not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    if all(data.get(k) == v for k, v in key.items()):
        return data
    return None


def _write_checkpoint(path: Optional[str], data: dict) -> None:
    if not path:
        return
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


def search_integer_pairs(
    bound: int,
    threads: int = 1,
    checkpoint: Optional[str] = None,
    checkpoint_every: int = 512,
) -> List[PairHit]:
    """All pairs 1 < r < s < bound whose pair equation has a rational square.

    The quotient (s^2 r^2 - 1)/(s^2 - r^2) must be the square of a rational;
    hits where the square root is an integer give integral regular triples
    and the others are flagged ``t_integral=False``.  Results are sorted by
    (r, s).  ``threads`` shards the r-range across processes; checkpointing
    is available in the single-process path.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    if bound > _FAST_PATH_BOUND:
        raise ValueError(f"fast path is validated up to bound {_FAST_PATH_BOUND}")
    if threads > 1:
        chunk = max(64, (bound - 2) // (threads * 8) + 1)
        ranges = [(lo, min(lo + chunk, bound)) for lo in range(2, bound, chunk)]
        hits: List[PairHit] = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_scan_pair_rows, *zip(*ranges), [bound] * len(ranges)):
                hits.extend(part)
        return sorted(hits, key=lambda h: (h.r, h.s))

    state = _load_checkpoint(checkpoint, {"kind": "search-rs", "bound": bound})
    start_r = 2
    hits = []
    if state is not None:
        start_r = state["next_r"]
        hits = [
            PairHit(h["r"], h["s"], Fraction(h["t"]), h["t_integral"])
            for h in state["hits"]
        ]
    r = start_r
    while r < bound:
        r_hi = min(r + checkpoint_every, bound)
        hits.extend(_scan_pair_rows(r, r_hi, bound))
        r = r_hi
        if checkpoint and r < bound:
            _write_checkpoint(
                checkpoint,
                {
                    "kind": "search-rs",
                    "bound": bound,
                    "next_r": r,
                    "hits": [h.to_json() for h in hits],
                },
            )
    hits = sorted(set(hits), key=lambda h: (h.r, h.s))
    if checkpoint:
        _write_checkpoint(
            checkpoint,
            {
                "kind": "search-rs",
                "bound": bound,
                "next_r": bound,
                "hits": [h.to_json() for h in hits],
            },
        )
    return hits


# ---------------------------------------------------------------------------
# Pell machinery


@dataclass(frozen=True)
class PellSolution:
    """Solution of p^2 - 3 r^2 = 1, with its 1-based index in the recurrence."""

    index: int
    p: int
    r: int

    def to_json(self) -> dict:
        return {"index": self.index, "p": self.p, "r": self.r}


def pell_sequence(count: int) -> List[PellSolution]:
    """First `count` solutions from (2, 1) via p' = 2p + 3r, r' = p + 2r."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    p, r = 2, 1
    for i in range(1, count + 1):
        assert p * p - 3 * r * r == 1
        out.append(PellSolution(i, p, r))
        p, r = 2 * p + 3 * r, p + 2 * r
    return out


def pell_parametrize(u):
    """(r, p) = (2u/(3-u^2), (3+u^2)/(3-u^2)); p^2 - 3r^2 = 1 identically."""
    u2 = u * u
    if u2 == 3:
        raise ZeroDivisionError("parametrization pole at u^2 = 3")
    return 2 * u / (3 - u2), (3 + u2) / (3 - u2)


# ---------------------------------------------------------------------------
# taxicab search


@dataclass(frozen=True)
class TaxicabHit:
    """X^k + Y^k = Z^k + W^k with X<=Y, Z<=W, X<Z and {X,Y} != {Z,W}."""

    x: int
    y: int
    z: int
    w: int
    k: int
    square_product: bool
    sqrt_witness: Optional[int]

    def power_sum(self) -> int:
        return self.x**self.k + self.y**self.k

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "z": self.z,
            "w": self.w,
            "k": self.k,
            "sum": self.power_sum(),
            "square_product": self.square_product,
            "sqrt_witness": self.sqrt_witness,
        }


def _pair_arrays(lo: int, hi: int, bound: int, k: int):
    """(sums, X, Y) arrays over pairs X in [lo, hi), X <= Y <= bound."""
    xs = []
    ys = []
    for x in range(lo, hi):
        y = np.arange(x, bound + 1, dtype=np.int64)
        xs.append(np.full(len(y), x, dtype=np.int64))
        ys.append(y)
    if not xs:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, empty
    x_arr = np.concatenate(xs)
    y_arr = np.concatenate(ys)
    sums = x_arr**k + y_arr**k
    return sums, x_arr, y_arr


def taxicab_search(
    bound: int,
    k: int,
    require_square_product: bool = False,
    threads: int = 1,
    checkpoint: Optional[str] = None,
) -> List[TaxicabHit]:
    """All nontrivial X^k + Y^k = Z^k + W^k with entries in [1, bound].

    The join is by sorted runs over the pair sums (hash-join semantics with
    deterministic output); every hit is re-verified with exact big-int power
    sums, and the product XYZW is tested for squareness exactly.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    if k not in (3, 4):
        raise ValueError("k must be 3 or 4")
    key = {"kind": "taxicab", "bound": bound, "k": k}
    state = _load_checkpoint(checkpoint, key)
    if state is not None and state.get("complete"):
        hits = [
            TaxicabHit(
                h["x"], h["y"], h["z"], h["w"], k, h["square_product"], h["sqrt_witness"]
            )
            for h in state["hits"]
        ]
    else:
        if threads > 1:
            chunk = bound // (threads * 4) + 1
            ranges = [(lo, min(lo + chunk, bound + 1)) for lo in range(1, bound + 1, chunk)]
            with ProcessPoolExecutor(max_workers=threads) as pool:
                parts = list(
                    pool.map(
                        _pair_arrays,
                        *zip(*ranges),
                        [bound] * len(ranges),
                        [k] * len(ranges),
                    )
                )
            sums = np.concatenate([p[0] for p in parts])
            x_arr = np.concatenate([p[1] for p in parts])
            y_arr = np.concatenate([p[2] for p in parts])
        else:
            sums, x_arr, y_arr = _pair_arrays(1, bound + 1, bound, k)
        order = np.argsort(sums, kind="stable")
        sums, x_arr, y_arr = sums[order], x_arr[order], y_arr[order]
        hits = []
        run_start = 0
        for i in range(1, len(sums) + 1):
            if i < len(sums) and sums[i] == sums[run_start]:
                continue
            run = range(run_start, i)
            if len(run) > 1:
                members = sorted((int(x_arr[j]), int(y_arr[j])) for j in run)
                for a in range(len(members)):
                    for b in range(a + 1, len(members)):
                        (x, y), (z, w) = members[a], members[b]
                        if {x, y} == {z, w}:
                            continue
                        assert x**k + y**k == z**k + w**k  # exact recheck
                        product = x * y * z * w
                        root = isqrt(product)
                        square = root * root == product
                        hits.append(
                            TaxicabHit(x, y, z, w, k, square, root if square else None)
                        )
            run_start = i
        hits.sort(key=lambda h: (h.x, h.y, h.z, h.w))
        _write_checkpoint(
            checkpoint,
            {**key, "complete": True, "hits": [h.to_json() for h in hits]},
        )
    if require_square_product:
        hits = [h for h in hits if h.square_product]
    return hits


@dataclass(frozen=True)
class SexticDecomposition:
    """x1^6 + h^3 y1^6 = x2^6 + h^3 y2^6 extracted from a cube taxicab hit."""

    x1: int
    y1: int
    x2: int
    y2: int
    h: int
    value: int

    def to_json(self) -> dict:
        return {
            "x1": self.x1,
            "y1": self.y1,
            "x2": self.x2,
            "y2": self.y2,
            "h": self.h,
            "value": self.value,
        }


def _square_split(n: int) -> Tuple[int, int]:
    """n = h * y^2 with y maximal (h squarefree)."""
    for y in range(isqrt(n), 0, -1):
        if n % (y * y) == 0:
            return n // (y * y), y
    return n, 1


def sextic_form_check(hit: TaxicabHit) -> Optional[SexticDecomposition]:
    """Rewrite a cube identity as x^6 + h^3 y^6 two ways, when possible.

    Needs one perfect-square entry on each side; the other entries must share
    the same squarefree part h.  Returns the exact decomposition or None.
    """
    if hit.k != 3:
        raise ValueError("sextic decomposition applies to k = 3 hits")
    for s1, o1 in ((hit.x, hit.y), (hit.y, hit.x)):
        if not is_perfect_square(s1):
            continue
        for s2, o2 in ((hit.z, hit.w), (hit.w, hit.z)):
            if not is_perfect_square(s2):
                continue
            h1, y1 = _square_split(o1)
            h2, y2 = _square_split(o2)
            if h1 != h2:
                continue
            x1, x2 = isqrt(s1), isqrt(s2)
            value = x1**6 + h1**3 * y1**6
            assert value == x2**6 + h2**3 * y2**6 == hit.power_sum()
            return SexticDecomposition(x1, y1, x2, y2, h1, value)
    return None


# ---------------------------------------------------------------------------
# Euler's quartic taxicab parametrization (b = 1 slice)

EULER_X = Poly([0, 1, 3, -2, 0, 1, 0, 1])  # a^7 + a^5 - 2a^3 + 3a^2 + a
EULER_Y = Poly([1, 0, 1, 0, -2, -3, 1])  # a^6 - 3a^5 - 2a^4 + a^2 + 1
EULER_Z = Poly([0, 1, -3, -2, 0, 1, 0, 1])
EULER_W = Poly([1, 0, 1, 0, -2, 3, 1])

# XYZW = a^14 * h(a + 1/a) for this degree-12 polynomial in u = a + 1/a
EULER_U_POLY = Poly([324, 0, 351, 0, -80, 0, -266, 0, 141, 0, -23, 0, 1])
# and h(u) has only even powers: the genus-2 sextic in t = u^2
EULER_T_POLY = Poly([324, 351, -80, -266, 141, -23, 1])


@dataclass(frozen=True)
class EulerQuartic:
    a: Fraction
    x: Fraction
    y: Fraction
    z: Fraction
    w: Fraction
    degenerate: bool

    def to_json(self) -> dict:
        return {
            "a": format_rational(self.a),
            "x": format_rational(self.x),
            "y": format_rational(self.y),
            "z": format_rational(self.z),
            "w": format_rational(self.w),
            "degenerate": self.degenerate,
        }


def euler_quartic_parametrization(a) -> EulerQuartic:
    """Evaluate the four degree-7 forms at a (with the second variable = 1).

    X^4 + Y^4 = Z^4 + W^4 holds identically; parameters where the two sides
    coincide up to order and sign are flagged degenerate.
    """
    a = Fraction(a)
    x, y, z, w = (p(a) for p in (EULER_X, EULER_Y, EULER_Z, EULER_W))
    degenerate = {abs(x), abs(y)} == {abs(z), abs(w)}
    return EulerQuartic(a, x, y, z, w, degenerate)


@dataclass(frozen=True)
class OcticReport:
    checks: Tuple[Tuple[str, bool], ...]

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": "powertriples/octic-report-v1",
            "all_passed": self.all_passed,
            "checks": [{"name": name, "passed": ok} for name, ok in self.checks],
        }


def euler_reduction_check() -> OcticReport:
    """Prove the parametrization's identities symbolically, coefficient-exact.

    (i) X^4 + Y^4 = Z^4 + W^4 in Q(a); (ii) XZ/a^2 is the coefficient
    reversal of YW; (iii) XYZW = a^14 * h(a + 1/a) for the degree-12 h;
    (iv) h is even, compressing to the genus-2 sextic in t = u^2.
    """
    xz = EULER_X * EULER_Z
    yw = EULER_Y * EULER_W
    xyzw = xz * yw
    checks = [
        (
            "X^4 + Y^4 = Z^4 + W^4",
            EULER_X**4 + EULER_Y**4 == EULER_Z**4 + EULER_W**4,
        ),
        ("XZ = a^2 * reversal(YW)", xz == Poly.monomial(2) * reversal(yw, 12)),
        ("XYZW = a^14 * h(a + 1/a)", symmetric_in_u(xyzw, 14) == EULER_U_POLY),
        ("h(u) = sextic(u^2)", decompose_even(EULER_U_POLY) == EULER_T_POLY),
    ]
    return OcticReport(tuple(checks))


# ---------------------------------------------------------------------------
# Gaussian scan


@dataclass(frozen=True)
class GaussianScanResult:
    paper_triples: Tuple[PowerTuple, ...]
    scan_hits: Tuple[PowerTuple, ...]

    def to_json(self) -> dict:
        return {
            "schema": "powertriples/gaussian-scan-v1",
            "paper_triples": [t.to_json() for t in self.paper_triples],
            "scan_hits": [t.to_json() for t in self.scan_hits],
        }


KNOWN_GAUSSIAN_TRIPLES = (
    (
        GaussianRational(Fraction(28), Fraction(4)),
        GaussianRational(Fraction(42), Fraction(24)),
        GaussianRational(Fraction(140), Fraction(52)),
    ),
    (
        GaussianRational(Fraction(15), Fraction(-10)),
        GaussianRational(Fraction(-15), Fraction(-10)),
        GaussianRational(Fraction(0), Fraction(16)),
    ),
)


def _canonical_gaussian_triple(elements) -> tuple:
    """Orbit representative under negation and conjugation, order-free."""

    def sort_key(z):
        return (z.norm(), z.re, z.im)

    variants = []
    for transform in (
        lambda z: z,
        lambda z: -z,
        lambda z: z.conjugate(),
        lambda z: -z.conjugate(),
    ):
        variants.append(tuple(sorted((transform(e) for e in elements), key=sort_key)))
    return min(variants, key=lambda v: [sort_key(z) for z in v])


def gaussian_verify_and_scan(box: int) -> GaussianScanResult:
    """Verify the two known Gaussian quartic triples; scan seeds up to box.

    The scan walks Gaussian integers r = m + ni with |m|, |n| <= box as seeds
    of the neighbor-pair construction over Q(i) (s = r + 2, t^2 =
    (r+1)(r^2+2r-1)/4) and emits every verified quartic triple, one per
    orbit under sign change and conjugation.  box = 0 verifies the known
    triples only.
    """
    if box < 0:
        raise ValueError("box must be >= 0")
    verified = []
    for elements in KNOWN_GAUSSIAN_TRIPLES:
        result = verify_tuple(elements, 4)
        if not isinstance(result, PowerTuple):
            raise AssertionError(f"known triple failed verification: {result}")
        verified.append(result)

    hits: Dict[tuple, PowerTuple] = {}
    for m in range(-box, box + 1):
        for n in range(-box, box + 1):
            r = GaussianRational(Fraction(m), Fraction(n))
            if r in (
                GaussianRational(Fraction(0)),
                GaussianRational(Fraction(1)),
                GaussianRational(Fraction(-1)),
                GaussianRational(Fraction(-2)),
                GaussianRational(Fraction(-3)),
            ):
                continue  # r, s = r+2 must avoid {0, +-1}
            t2 = (r + 1) * (r * r + 2 * r - 1) / 4
            t = gaussian_kth_root(t2, 2)
            if t is None:
                continue
            s = r + 2
            a = s * s - r * r
            b = t * t - r * r
            c = s * s + t * t
            if not a or not b or not c or len({a, b, c}) != 3:
                continue
            result = verify_tuple((a, b, c), 4)
            if isinstance(result, PowerTuple):
                hits.setdefault(_canonical_gaussian_triple((a, b, c)), result)
    ordered = [hits[key] for key in sorted(hits, key=lambda v: [(z.norm(), z.re, z.im) for z in v])]
    return GaussianScanResult(tuple(verified), tuple(ordered))
