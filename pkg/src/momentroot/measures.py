"""Finitely atomic measures on (0, oo): exact moments, power pushforwards,
product supports, hole extraction and Hankel positivity.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional

from .exact import (
    GuardExceeded,
    Radical,
    UsageError,
    format_rational,
    parse_rational,
)

__all__ = [
    "AtomicMeasure",
    "MomentPrefix",
    "Hole",
    "moments",
    "kappa_power_measure",
    "product_support",
    "find_holes",
    "hankel_consistency",
    "hankel_matrix",
    "HankelVerdict",
    "HankelWitness",
    "load_measure",
    "dump_measure",
]

MAX_HORIZON = 10 ** 4
MAX_MULTISETS = 10 ** 6
KAPPA_RANGE = range(2, 17)


@dataclass(frozen=True)
class AtomicMeasure:
    """Finitely many positive rational point masses, sorted by position."""

    atoms: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if not self.atoms:
            raise UsageError("a measure needs at least one atom")
        prev = None
        for point, weight in self.atoms:
            if point <= 0:
                raise UsageError(f"atom position must be > 0, got {point}")
            if weight <= 0:
                raise UsageError(f"atom weight must be > 0, got {weight}")
            if prev is not None and point <= prev:
                raise UsageError("atom positions must be strictly increasing")
            prev = point

    @classmethod
    def from_pairs(cls, pairs) -> "AtomicMeasure":
        """Sort (point, weight) pairs; duplicate positions are rejected."""
        pairs = sorted((Fraction(p), Fraction(w)) for p, w in pairs)
        for (a, _), (b, _) in zip(pairs, pairs[1:]):
            if a == b:
                raise UsageError(f"duplicate atom position {a}")
        return cls(tuple(pairs))

    @classmethod
    def dirac(cls, point, weight=1) -> "AtomicMeasure":
        return cls(((Fraction(point), Fraction(weight)),))

    @property
    def support(self) -> tuple[Fraction, ...]:
        return tuple(p for p, _ in self.atoms)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(w for _, w in self.atoms)

    @property
    def total_mass(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    @property
    def min_point(self) -> Fraction:
        return self.atoms[0][0]

    @property
    def max_point(self) -> Fraction:
        return self.atoms[-1][0]

    def mass_at(self, point) -> Fraction:
        point = Fraction(point)
        for p, w in self.atoms:
            if p == point:
                return w
        return Fraction(0)

    def mass_open(self, lo, hi) -> Fraction:
        """Mass of the open interval (lo, hi) with rational endpoints."""
        lo, hi = Fraction(lo), Fraction(hi)
        return sum((w for p, w in self.atoms if lo < p < hi), Fraction(0))

    def scale_weights(self, c) -> "AtomicMeasure":
        c = Fraction(c)
        if c <= 0:
            raise UsageError("weight scaling must be positive")
        return AtomicMeasure(tuple((p, c * w) for p, w in self.atoms))

    def dilate(self, s) -> "AtomicMeasure":
        s = Fraction(s)
        if s <= 0:
            raise UsageError("dilation factor must be positive")
        return AtomicMeasure(tuple((s * p, w) for p, w in self.atoms))


@dataclass(frozen=True)
class MomentPrefix:
    """A finite run a_0..a_L of power moments."""

    values: tuple[Fraction, ...]
    origin: Optional[AtomicMeasure] = field(default=None, compare=False)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class Hole:
    """A maximal open interval of zero mass inside [0, max support]."""

    lower: Fraction
    upper: Fraction
    leading: bool = False

    def __post_init__(self):
        if not (0 <= self.lower < self.upper):
            raise UsageError("hole endpoints must satisfy 0 <= lower < upper")


def moments(m: AtomicMeasure, horizon: int) -> MomentPrefix:
    """Exact moments a_n = sum_i w_i * p_i**n for n = 0..horizon."""
    if horizon < 0:
        raise UsageError("horizon must be >= 0")
    if horizon > MAX_HORIZON:
        raise GuardExceeded(f"horizon {horizon} exceeds guard {MAX_HORIZON}")
    values = []
    powers = [Fraction(1)] * len(m.atoms)
    for _ in range(horizon + 1):
        values.append(sum((w * pw for (_, w), pw in zip(m.atoms, powers)), Fraction(0)))
        powers = [pw * p for (p, _), pw in zip(m.atoms, powers)]
    return MomentPrefix(tuple(values), origin=m)


def _check_kappa(kappa: int):
    if kappa not in KAPPA_RANGE:
        raise UsageError(f"kappa must be in [2, 16], got {kappa}")


def _multiset_guard(n: int, kappa: int):
    count = math.comb(n + kappa - 1, kappa)
    if count > MAX_MULTISETS:
        raise GuardExceeded(
            f"{count} multisets of size {kappa} over {n} elements exceed guard {MAX_MULTISETS}"
        )


def kappa_power_measure(nu: AtomicMeasure, kappa: int) -> AtomicMeasure:
    """Pushforward of the kappa-fold product of nu under multiplication.

    The result mu satisfies moments(mu, n) = moments(nu, n)**kappa for
    every n: the mass at a product point is the sum over size-kappa
    multisets of nu-atoms of multinomial(multiplicities) * product of
    weights.
    """
    _check_kappa(kappa)
    _multiset_guard(len(nu.atoms), kappa)
    fact = math.factorial
    acc: dict[Fraction, Fraction] = {}
    for combo in combinations_with_replacement(range(len(nu.atoms)), kappa):
        point = Fraction(1)
        weight = Fraction(fact(kappa))
        run = 1
        for i, j in zip(combo, combo[1:] + (None,)):
            p, w = nu.atoms[i]
            point *= p
            weight *= w
            if j == i:
                run += 1
            else:
                weight /= fact(run)
                run = 1
        acc[point] = acc.get(point, Fraction(0)) + weight
    return AtomicMeasure.from_pairs(acc.items())


def product_support(points, kappa: int) -> tuple[Radical, ...]:
    """All products of exactly kappa factors drawn (with repetition) from
    the given points, deduplicated exactly and sorted ascending.

    Points may be rationals or same-index radicals; rationals are promoted
    to the common index.  Products of radicals are deduplicated through
    their index-th powers, which are rational.
    """
    _check_kappa(kappa)
    points = list(points)
    if not points:
        raise UsageError("product_support needs at least one point")
    indices = {p.index for p in points if isinstance(p, Radical)}
    if len(indices) > 1:
        raise UsageError("product_support points must share a radical index")
    index = indices.pop() if indices else 1
    rads = []
    for p in points:
        r = p if isinstance(p, Radical) else Radical.from_rational(Fraction(p), index)
        if r.is_zero():
            raise UsageError("product_support points must be positive")
        rads.append(r)
    _multiset_guard(len(rads), kappa)
    seen: dict[Fraction, Radical] = {}
    for combo in combinations_with_replacement(rads, kappa):
        prod = combo[0]
        for r in combo[1:]:
            prod = prod * r
        seen.setdefault(prod.power, prod)
    return tuple(seen[k] for k in sorted(seen))


def find_holes(m: AtomicMeasure) -> list[Hole]:
    """The leading gap [0, min supp) followed by the interior gaps.

    Gaps above the maximum support point are not reported.
    """
    holes = [Hole(Fraction(0), m.min_point, leading=True)]
    pts = m.support
    for a, b in zip(pts, pts[1:]):
        holes.append(Hole(a, b))
    return holes


@dataclass(frozen=True)
class HankelWitness:
    """A principal submatrix with negative determinant.

    offset selects the Hankel matrix (0 for entries a_{i+j}, 1 for
    a_{i+j+1}); indices are its violating row/column indices.
    """

    offset: int
    indices: tuple[int, ...]
    determinant: Fraction


@dataclass(frozen=True)
class HankelVerdict:
    consistent: bool
    witness: Optional[HankelWitness] = None


def hankel_matrix(values, offset: int, size: int) -> list[list[Fraction]]:
    values = list(values)
    return [
        [Fraction(values[i + j + offset]) for j in range(size)] for i in range(size)
    ]


def _psd_violation(matrix) -> Optional[tuple[tuple[int, ...], Fraction]]:
    """None if the symmetric rational matrix is PSD; otherwise indices of a
    principal submatrix with negative determinant, plus that determinant.

    Recursive Schur complementation with the zero-pivot rule: a zero
    diagonal pivot must have an all-zero row, else the matrix is not PSD.
    """
    work = [row[:] for row in matrix]
    active = list(range(len(matrix)))
    done: list[tuple[int, Fraction]] = []  # (original index, positive pivot)
    while work:
        d = work[0][0]
        if d < 0:
            det = math.prod((p for _, p in done), start=Fraction(1)) * d
            return tuple(i for i, _ in done) + (active[0],), det
        if d == 0:
            for j in range(1, len(work)):
                c = work[0][j]
                if c != 0:
                    det = math.prod((p for _, p in done), start=Fraction(1)) * (-c * c)
                    return (
                        tuple(i for i, _ in done) + (active[0], active[j]),
                        det,
                    )
            work = [row[1:] for row in work[1:]]
            active = active[1:]
            continue
        done.append((active[0], d))
        top = work[0]
        work = [
            [work[i][j] - top[i] * top[j] / d for j in range(1, len(work))]
            for i in range(1, len(work))
        ]
        active = active[1:]
    return None


def hankel_consistency(prefix) -> HankelVerdict:
    """Exact PSD test of both Hankel matrices built from a moment prefix.

    Consistent iff H0 = (a_{i+j}) and H1 = (a_{i+j+1}), at the largest
    sizes the prefix supports, are both positive semidefinite.  This is
    the standard necessary condition for a Stieltjes prefix and serves as
    an independent consistency oracle.
    """
    values = list(prefix.values if isinstance(prefix, MomentPrefix) else prefix)
    if not values:
        raise UsageError("hankel_consistency needs a nonempty prefix")
    top = len(values) - 1
    for offset in (0, 1):
        size = (top - offset) // 2 + 1
        if size < 1:
            continue
        violation = _psd_violation(hankel_matrix(values, offset, size))
        if violation is not None:
            indices, det = violation
            return HankelVerdict(False, HankelWitness(offset, indices, det))
    return HankelVerdict(True)


def load_measure(source) -> AtomicMeasure:
    """Read the measure JSON format {"atoms": [{"point": "1/6", "weight": "1"}, ...]}.

    Accepts a path, file object or already-parsed dict.  Atoms may appear
    unsorted but must be distinct; points and weights are positive
    rational strings.
    """
    if isinstance(source, dict):
        doc = source
    elif hasattr(source, "read"):
        doc = json.load(source)
    else:
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    try:
        raw = doc["atoms"]
    except (TypeError, KeyError):
        raise UsageError("measure JSON must have an 'atoms' array") from None
    if not isinstance(raw, list) or not raw:
        raise UsageError("measure JSON must have a nonempty 'atoms' array")
    pairs = []
    for entry in raw:
        try:
            point = parse_rational(entry["point"], allow_negative=False)
            weight = parse_rational(entry["weight"], allow_negative=False)
        except (TypeError, KeyError):
            raise UsageError("each atom needs 'point' and 'weight' strings") from None
        pairs.append((point, weight))
    return AtomicMeasure.from_pairs(pairs)


def dump_measure(m: AtomicMeasure) -> dict:
    return {
        "atoms": [
            {"point": format_rational(p), "weight": format_rational(w)}
            for p, w in m.atoms
        ]
    }
