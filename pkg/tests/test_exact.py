from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from momentroot.exact import (
    BigFloat,
    Radical,
    UsageError,
    bigfloat_root,
    floor_log_ratio,
    format_rational,
    int_nth_root,
    parse_rational,
    perfect_nth_root,
    radical_compare,
    radical_product,
)

positive_fractions = st.fractions(min_value=F(1, 1000), max_value=1000)


# ---------------------------------------------------------------------------
# rational text encoding
# ---------------------------------------------------------------------------


def test_parse_rational():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("7") == 7
    assert parse_rational("-5/3") == F(-5, 3)
    assert parse_rational("6/4") == F(3, 2)


@pytest.mark.parametrize("bad", ["", "1.5", "1/0", "1e3", " 1", "1/ 2", "2/-3", "/3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(UsageError):
        parse_rational(bad)


def test_parse_rational_measure_mode():
    with pytest.raises(UsageError):
        parse_rational("-1/2", allow_negative=False)


@given(st.fractions())
def test_format_parse_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


# ---------------------------------------------------------------------------
# integer roots
# ---------------------------------------------------------------------------


@given(st.integers(min_value=0, max_value=10 ** 24), st.integers(min_value=1, max_value=9))
def test_int_nth_root_is_floor(n, k):
    r = int_nth_root(n, k)
    assert r ** k <= n
    assert (r + 1) ** k > n


def test_perfect_nth_root():
    assert perfect_nth_root(F(8, 27), 3) == F(2, 3)
    assert perfect_nth_root(F(4), 2) == 2
    assert perfect_nth_root(F(2), 2) is None
    assert perfect_nth_root(F(8, 9), 3) is None


# ---------------------------------------------------------------------------
# radicals
# ---------------------------------------------------------------------------


def test_radical_compare_dagger_endpoints():
    # alpha_dag = 1/3 against beta_dag = sqrt(1/2): (1/3)^2 = 1/9 < 1/2
    a = Radical(F(1, 3), F(1), 2)
    b = Radical(F(1), F(1, 2), 2)
    assert radical_compare(a, b) == -1


def test_radical_compare_equal_values():
    assert radical_compare(Radical(F(2), F(1), 2), Radical(F(1), F(4), 2)) == 0


def test_radical_compare_triple_1_2_4():
    # alpha_dag = (2/4)*sqrt(4) and beta_dag = sqrt(1) both equal 1
    a = Radical(F(2, 4), F(4), 2)
    b = Radical(F(1), F(1), 2)
    assert radical_compare(a, b) == 0
    assert a.to_rational() == 1 == b.to_rational()


def test_radical_compare_mismatched_index():
    with pytest.raises(UsageError):
        radical_compare(Radical.root(2, 2), Radical.root(2, 3))


@given(positive_fractions, positive_fractions, st.integers(min_value=2, max_value=16))
def test_radical_root_order_matches_rational_order(p, q, kappa):
    cmp = radical_compare(Radical.root(p, kappa), Radical.root(q, kappa))
    assert cmp == (p > q) - (p < q)


def test_radical_kappa_fold_product_is_rational():
    factors = [Radical.root(F(2), 3), Radical.root(F(4), 3), Radical.root(F(27), 3)]
    prod = radical_product(factors)
    assert prod.to_rational() == 6  # (2*4*27)^(1/3)


def test_radical_product_irrational_stays_radical():
    prod = radical_product([Radical.root(2, 2)])
    assert prod.to_rational() is None


def test_radical_arithmetic():
    r = Radical.root(2, 2)
    assert (r ** 2).to_rational() == 2
    assert (r * r).to_rational() == 2
    assert (Radical.from_rational(F(3, 2), 2) * 2).to_rational() == 3
    assert (r / r).to_rational() == 1
    zero = Radical.zero(2)
    assert (zero * r).is_zero()
    assert zero < r


@given(positive_fractions, positive_fractions, st.integers(min_value=2, max_value=6))
def test_radical_total_order_consistent_with_approx(p, q, kappa):
    a, b = Radical.root(p, kappa), Radical.root(q, kappa)
    cmp = radical_compare(a, b)
    fa, fb = a.approx(64).to_fraction(), b.approx(64).to_fraction()
    if cmp < 0:
        assert fa <= fb
    elif cmp > 0:
        assert fa >= fb
    else:
        assert fa == fb


# ---------------------------------------------------------------------------
# exact floor of log ratios
# ---------------------------------------------------------------------------


def test_floor_log_ratio_examples():
    assert floor_log_ratio(F(2), F(8)) == 3
    assert floor_log_ratio(F(9), F(18)) == 1
    assert floor_log_ratio(F(2), F(7)) == 2
    assert floor_log_ratio(F(3, 2), F(1)) == 0


def test_floor_log_ratio_rejects():
    with pytest.raises(UsageError):
        floor_log_ratio(F(1), F(5))
    with pytest.raises(UsageError):
        floor_log_ratio(F(2), F(1, 2))


@given(
    st.fractions(min_value=F(101, 100), max_value=50),
    st.fractions(min_value=1, max_value=10 ** 6),
)
def test_floor_log_ratio_bracketing(base, target):
    m = floor_log_ratio(base, target)
    assert base ** m <= target < base ** (m + 1)


@given(st.fractions(min_value=F(11, 10), max_value=20), st.integers(min_value=0, max_value=40))
def test_floor_log_ratio_exact_powers(base, m):
    # boundary case: target an exact power must floor to that power
    assert floor_log_ratio(base, base ** m) == m


# ---------------------------------------------------------------------------
# dyadic approximations
# ---------------------------------------------------------------------------


def _bisect_root(q: F, k: int, bits: int) -> F:
    """Independent oracle: interval bisection on x**k = q."""
    lo, hi = F(0), max(F(1), q)
    for _ in range(bits + q.numerator.bit_length() + q.denominator.bit_length() + 8):
        mid = (lo + hi) / 2
        if mid ** k <= q:
            lo = mid
        else:
            hi = mid
    return lo


def test_sqrt_half_against_bisection():
    approx = Radical.root(F(1, 2), 2).approx(64).to_fraction()
    oracle = _bisect_root(F(1, 2), 2, 90)
    assert abs(approx - oracle) <= F(1, 2 ** 64) * oracle


def test_rational_radical_is_exact():
    bf = Radical.from_rational(F(3, 2), 2).approx(64)
    assert bf.to_fraction() == F(3, 2)


def test_refinement_consistency():
    a64 = Radical.root(2, 2).approx(64).to_fraction()
    a128 = Radical.root(2, 2).approx(128).to_fraction()
    assert abs(a64 - a128) <= F(1, 2 ** 63) * a128


def test_precision_floor():
    with pytest.raises(UsageError):
        bigfloat_root(F(2), 2, 16)


@given(positive_fractions, st.integers(min_value=2, max_value=8))
@settings(max_examples=60)
def test_bigfloat_root_error_bound(q, k):
    bf = bigfloat_root(q, k, 64)
    v = bf.to_fraction()
    # |v - q^(1/k)| <= ulp/2 means v^k brackets q within a relative 2^-63
    assert (v * (1 + F(1, 2 ** 62))) ** k >= q
    assert (v * (1 - F(1, 2 ** 62))) ** k <= q


def test_bigfloat_from_fraction_exact_dyadic():
    bf = BigFloat.from_fraction(F(9, 2), 64)
    assert bf.to_fraction() == F(9, 2)
    assert float(bf) == 4.5


def test_bigfloat_rounds_ties_to_even():
    assert BigFloat.from_fraction(F(2 ** 64 + 1), 64).to_fraction() == 2 ** 64
    assert BigFloat.from_fraction(F(2 ** 64 + 3), 64).to_fraction() == 2 ** 64 + 4


def test_bigfloat_decimal_rendering():
    assert BigFloat.from_fraction(F(1, 2), 64).decimal(5) == "0.5"
    assert BigFloat.from_fraction(F(0), 64).decimal() == "0"
    assert BigFloat.from_fraction(F(-3), 64).decimal(4) == "-3"
    assert BigFloat.from_fraction(F(10 ** 30), 128).decimal(4) == "1e30"
