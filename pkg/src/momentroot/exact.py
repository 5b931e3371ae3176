"""Exact scalar arithmetic: rationals, radicals of the form q * r**(1/k),
exact floor-of-log-ratio, and dyadic floating approximations.

Every certified verdict in this package reduces to integer arithmetic in
this module.  The BigFloat type is for reporting only and never feeds back
into a certified result.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "UsageError",
    "GuardExceeded",
    "parse_rational",
    "format_rational",
    "int_nth_root",
    "perfect_nth_root",
    "Radical",
    "radical_compare",
    "radical_product",
    "compare_fraction_radical",
    "floor_log_ratio",
    "BigFloat",
    "bigfloat_root",
    "DEFAULT_PRECISION",
]

DEFAULT_PRECISION = 256


class UsageError(ValueError):
    """Invalid arguments at an API or CLI boundary (exit code 1)."""


class GuardExceeded(UsageError):
    """An enumeration guard would be exceeded."""


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")


def parse_rational(text: str, allow_negative: bool = True) -> Fraction:
    """Parse the "p" / "p/q" text encoding into a Fraction.

    Base-10 integers only; no whitespace, decimals or exponents.  Measure
    data must pass ``allow_negative=False``.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise UsageError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if not allow_negative and num < 0:
        raise UsageError(f"negative value not allowed here: {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Inverse of parse_rational: "p" when integral, else "p/q"."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def int_nth_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for integers n >= 0, k >= 1, computed exactly."""
    if n < 0 or k < 1:
        raise UsageError("int_nth_root needs n >= 0 and k >= 1")
    if k == 1 or n in (0, 1):
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << -(-n.bit_length() // k)  # upper bound: 2**ceil(bits/k) >= root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def perfect_nth_root(q: Fraction, k: int) -> Fraction | None:
    """The exact rational k-th root of q > 0, or None if it is irrational."""
    if q <= 0:
        raise UsageError("perfect_nth_root needs q > 0")
    rn = int_nth_root(q.numerator, k)
    if rn ** k != q.numerator:
        return None
    rd = int_nth_root(q.denominator, k)
    if rd ** k != q.denominator:
        return None
    return Fraction(rn, rd)


@dataclass(frozen=True)
class Radical:
    """The nonnegative real number coeff * radicand ** (1/index).

    coeff >= 0, radicand > 0, index >= 1.  A zero value is encoded as
    coeff == 0 (needed for interval endpoints sitting at the origin).
    Radicals of equal index form a totally ordered multiplicative
    semigroup; the order is decided exactly through index-th powers, which
    are always rational.
    """

    coeff: Fraction
    radicand: Fraction
    index: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.index < 1:
            raise UsageError("radical index must be >= 1")
        if self.coeff < 0:
            raise UsageError("radical coeff must be >= 0")
        if self.radicand <= 0:
            raise UsageError("radical radicand must be > 0")

    @classmethod
    def from_rational(cls, q, index: int) -> "Radical":
        q = Fraction(q)
        return cls(q, Fraction(1), index)

    @classmethod
    def root(cls, q, index: int) -> "Radical":
        """q ** (1/index) for rational q > 0."""
        q = Fraction(q)
        if q <= 0:
            raise UsageError("root needs a positive radicand")
        return cls(Fraction(1), q, index)

    @classmethod
    def zero(cls, index: int) -> "Radical":
        return cls(Fraction(0), Fraction(1), index)

    @property
    def power(self) -> Fraction:
        """The index-th power of the denoted value; always rational."""
        return self.coeff ** self.index * self.radicand

    def is_zero(self) -> bool:
        return self.coeff == 0

    def to_rational(self) -> Fraction | None:
        """Exact rational value when one exists, else None."""
        if self.coeff == 0:
            return Fraction(0)
        if self.index == 1:
            return self.coeff * self.radicand
        r = perfect_nth_root(self.radicand, self.index)
        if r is None:
            return None
        return self.coeff * r

    def _coerce(self, other) -> "Radical":
        if isinstance(other, Radical):
            if other.index != self.index:
                raise UsageError("mismatched radical indices")
            return other
        return Radical.from_rational(Fraction(other), self.index)

    def __mul__(self, other) -> "Radical":
        o = self._coerce(other)
        return Radical(self.coeff * o.coeff, self.radicand * o.radicand, self.index)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Radical":
        o = self._coerce(other)
        if o.coeff == 0:
            raise ZeroDivisionError("division by zero radical")
        return Radical(self.coeff / o.coeff, self.radicand / o.radicand, self.index)

    def __pow__(self, m: int) -> "Radical":
        if m < 0:
            raise UsageError("negative radical powers unsupported")
        if m == 0:
            return Radical.from_rational(1, self.index)
        return Radical(self.coeff ** m, self.radicand ** m, self.index)

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        a, b = self.power, o.power
        return (a > b) - (a < b)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if not isinstance(other, (Radical, Fraction, int)):
            return NotImplemented
        return self._cmp(other) == 0

    def __hash__(self):
        return hash((self.index, self.power))

    def approx(self, precision: int = DEFAULT_PRECISION) -> "BigFloat":
        if self.coeff == 0:
            return BigFloat(0, 0, 0, precision)
        return bigfloat_root(self.power, self.index, precision)

    def __repr__(self):
        if self.coeff == 0:
            return "Radical(0)"
        return (
            f"Radical({format_rational(self.coeff)}"
            f"*{format_rational(self.radicand)}^(1/{self.index}))"
        )


def radical_compare(a: Radical, b: Radical) -> int:
    """-1, 0 or +1 as a <, ==, > b.  Exact; requires equal indices."""
    if a.index != b.index:
        raise UsageError("radical_compare needs matching indices")
    return a._cmp(b)


def compare_fraction_radical(x, r: Radical) -> int:
    """Compare a nonnegative rational against a radical, exactly."""
    x = Fraction(x)
    if x < 0:
        raise UsageError("comparison defined for nonnegative rationals only")
    a, b = x ** r.index, r.power
    return (a > b) - (a < b)


def radical_product(factors) -> Radical:
    """Product of same-index radicals.  The product of index-many factors
    has a rational index-th power, recoverable via to_rational()."""
    factors = list(factors)
    if not factors:
        raise UsageError("radical_product needs at least one factor")
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def _log2_int(n: int) -> float:
    if n.bit_length() <= 900:
        return math.log2(n)
    shift = n.bit_length() - 64
    return math.log2(n >> shift) + shift


def _log2_frac(n: int, d: int) -> float:
    """Float estimate of log2(n/d), accurate also when n/d is close to 1."""
    if n == d:
        return 0.0
    if abs(n.bit_length() - d.bit_length()) <= 8:
        # log1p avoids the catastrophic cancellation of log(n) - log(d)
        return math.log1p(float(Fraction(n - d, d))) / math.log(2)
    return _log2_int(n) - _log2_int(d)


def floor_log_ratio(base: Fraction, target: Fraction) -> int:
    """Largest m >= 0 with base**m <= target, for base > 1, target >= 1.

    A floating estimate of log(target)/log(base) only seeds the search;
    the returned exponent is certified by exact integer powering, so
    boundary cases where the ratio is an exact power floor correctly.
    """
    base, target = Fraction(base), Fraction(target)
    if base <= 1:
        raise UsageError("floor_log_ratio needs base > 1")
    if target < 1:
        raise UsageError("floor_log_ratio needs target >= 1")
    p, q = base.numerator, base.denominator
    u, v = target.numerator, target.denominator
    if p * v > u * q:
        return 0
    denom = _log2_frac(p, q)
    m = max(int(_log2_frac(u, v) / denom) if denom > 0 else 0, 0)
    pm, qm = p ** m, q ** m
    while pm * v > u * qm:  # base**m > target: step down
        m -= 1
        pm //= p
        qm //= q
    while True:  # largest m with base**m <= target
        pn, qn = pm * p, qm * q
        if pn * v > u * qn:
            return m
        m += 1
        pm, qm = pn, qn


@dataclass(frozen=True)
class BigFloat:
    """A dyadic approximation sign * mantissa * 2**exponent.

    Nonzero values keep a normalized mantissa with exactly ``precision``
    bits.  Construction rounds to nearest, ties to even; conversions back
    to Fraction are exact, so downstream arithmetic on approximations can
    stay rational.
    """

    sign: int
    mantissa: int
    exponent: int
    precision: int

    def to_fraction(self) -> Fraction:
        if self.sign == 0:
            return Fraction(0)
        v = Fraction(self.mantissa)
        if self.exponent >= 0:
            v *= 1 << self.exponent
        else:
            v /= 1 << -self.exponent
        return self.sign * v

    def __float__(self) -> float:
        try:
            return self.sign * math.ldexp(self.mantissa, self.exponent)
        except OverflowError:
            return self.sign * math.inf

    def decimal(self, digits: int | None = None) -> str:
        """Decimal rendering with the given number of significant digits."""
        if digits is None:
            digits = max(self.precision * 301 // 1000, 1)
        return _decimal_str(self.to_fraction(), digits)

    @classmethod
    def from_fraction(cls, q, precision: int = DEFAULT_PRECISION) -> "BigFloat":
        q = Fraction(q)
        if q == 0:
            return cls(0, 0, 0, precision)
        if q < 0:
            pos = bigfloat_root(-q, 1, precision)
            return cls(-1, pos.mantissa, pos.exponent, precision)
        return bigfloat_root(q, 1, precision)


def _decimal_str(q: Fraction, digits: int) -> str:
    if q == 0:
        return "0"
    sign = "-" if q < 0 else ""
    q = abs(q)
    # decimal exponent e10 with 10**e10 <= q < 10**(e10+1)
    e10 = len(str(q.numerator)) - len(str(q.denominator))
    while 10 ** e10 > q:
        e10 -= 1
    while 10 ** (e10 + 1) <= q:
        e10 += 1
    scaled = q * Fraction(10) ** (digits - 1 - e10)
    n = scaled.numerator // scaled.denominator
    if 2 * (scaled.numerator - n * scaled.denominator) >= scaled.denominator:
        n += 1
    s = str(n)
    if len(s) > digits:  # rounding carried into a new digit
        e10 += 1
        s = s[:digits]
    if -4 <= e10 < digits:
        if e10 >= 0:
            intpart = s[: e10 + 1]
            fracpart = s[e10 + 1 :].rstrip("0")
            return sign + intpart + ("." + fracpart if fracpart else "")
        body = ("0." + "0" * (-e10 - 1) + s).rstrip("0")
        return sign + (body if body != "0." else "0")
    fracpart = s[1:].rstrip("0")
    mant = s[0] + ("." + fracpart if fracpart else "")
    return f"{sign}{mant}e{e10}"


def bigfloat_root(q: Fraction, k: int, precision: int) -> BigFloat:
    """Correctly rounded (nearest, ties even) q**(1/k) for rational q > 0.

    Works on plain integers: floor(q**(1/k) * 2**t) is pinned down by exact
    power comparisons, then the final rounding decision compares q against
    the k-th power of the candidate midpoint, which is again exact.
    """
    q = Fraction(q)
    if q <= 0:
        raise UsageError("bigfloat_root needs q > 0")
    if k < 1:
        raise UsageError("bigfloat_root needs k >= 1")
    if precision < 32:
        raise UsageError("precision must be at least 32 bits")
    num, den = q.numerator, q.denominator
    # initial scale guess from bit lengths: log2(q)/k + t should be ~precision+2
    t = precision + 2 - (num.bit_length() - den.bit_length()) // k
    while True:
        if t >= 0:
            a_num, a_den = num << (k * t), den
        else:
            a_num, a_den = num, den << (k * -t)
        m = int_nth_root(a_num // a_den, k)
        while (m + 1) ** k * a_den <= a_num:
            m += 1
        while m > 0 and m ** k * a_den > a_num:
            m -= 1
        bits = m.bit_length()
        if bits >= precision + 2:
            break
        t += precision + 2 - bits
    drop = bits - precision
    m0 = m >> drop
    # round to nearest: compare q against ((2*m0+1) * 2**(drop-1-t)) ** k
    mid = (2 * m0 + 1) ** k
    shift = k * (drop - 1 - t)
    lhs, rhs = num, mid * den
    if shift >= 0:
        rhs <<= shift
    else:
        lhs <<= -shift
    if lhs > rhs or (lhs == rhs and m0 % 2 == 1):
        m0 += 1
    exponent = drop - t
    if m0 == 1 << precision:
        m0 >>= 1
        exponent += 1
    return BigFloat(1, m0, exponent, precision)
