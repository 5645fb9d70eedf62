"""
Tests for the truncated series ring.

Validates ring arithmetic, inversion, Pochhammer products, substitutions
and theta sums against direct expansion and partition enumeration.
"""

import random
from dataclasses import replace

import pytest

from src.core.exceptions import NegativeAPower, NonIntegerExponent, NonTruncating, NotInvertible
from src.core.exponents import HalfExponent, quadratic_exponent
from src.core.pochhammer import (
    PochhammerSpec,
    euler_product,
    pochhammer,
    poch,
    q_factorial,
    reciprocal_pochhammer,
)
from src.core.series import (
    A_ONE,
    A_ZERO,
    Orders,
    QPower,
    TruncatedSeries,
    format_series,
    monomial,
    one,
    series_sum,
)
from src.core.theta import theta_as_product, theta_sum, triple_product


def partition_counts(n_max, allowed=lambda part: True):
    """Brute-force partition counts by listing every partition."""

    def partitions(n, largest):
        if n == 0:
            yield ()
            return
        for part in range(min(n, largest), 0, -1):
            if allowed(part):
                for rest in partitions(n - part, part):
                    yield (part,) + rest

    return [sum(1 for _ in partitions(n, n)) for n in range(n_max + 1)]


def series(coeffs, q_order=None):
    q_order = len(coeffs) - 1 if q_order is None else q_order
    return TruncatedSeries({(0, q): c for q, c in enumerate(coeffs)}, q_order)


class TestTruncatedSeries:
    """Test suite for TruncatedSeries construction and arithmetic."""

    def test_monomial(self):
        """Test one-term series."""
        assert one(10).coefficients() == [1] + [0] * 10
        s = monomial(-3, 1, 2, 10)
        assert dict(s.terms) == {(1, 2): -3}

    def test_monomial_beyond_order_is_zero(self):
        """Test that a monomial past the window vanishes."""
        assert monomial(5, 0, 11, 10).is_zero()

    def test_zero_coefficients_are_dropped(self):
        """Test that no stored coefficient is zero."""
        s = TruncatedSeries({(0, 0): 1, (0, 1): 0}, 5)
        assert dict(s.terms) == {(0, 0): 1}

    def test_a_order_truncation(self):
        """Test that terms above a_order are dropped."""
        s = TruncatedSeries({(3, 0): 1, (2, 1): 4}, 5, a_order=2)
        assert dict(s.terms) == {(2, 1): 4}

    def test_add_and_sub(self):
        """Test addition and subtraction."""
        s = TruncatedSeries({(0, 0): 1, (1, 1): -1}, 5)
        t = TruncatedSeries({(1, 1): 1}, 5)
        assert s + t == one(5)
        assert (s - s).is_zero()

    def test_mul(self):
        """Test (1+q)(1-q) = 1 - q^2."""
        assert series([1, 1]) * series([1, -1]) == series([1, 0, -1])

    def test_mul_truncates_to_smaller_order(self):
        """Test that the product keeps the smaller window."""
        product = series([1, 1, 1, 1], q_order=3) * series([1, 1], q_order=8)
        assert product.q_order == 3

    def test_mul_with_laurent_operand(self):
        """Test the precision rule when a factor has a negative q-power."""
        product = monomial(1, 0, -2, 10) * one(10)
        assert product.q_order == 8
        assert dict(product.terms) == {(0, -2): 1}

    def test_equality_up_to_smaller_order(self):
        """Test that equality only looks at the shared window."""
        assert series([1, 0, 0, 0, 0, 1]) == series([1, 0, 0, 0])
        assert series([1, 0, 1]) != series([1, 0, 0])

    def test_qpochhammer_by_repeated_mul(self):
        """Test (q;q)_3 expanded by hand."""
        product = series([1, -1], 10) * series([1, 0, -1], 10) * series([1, 0, 0, -1], 10)
        assert format_series(product) == "1 -1q -1q^2 +1q^4 +1q^5 -1q^6"

    def test_coefficient_beyond_order_raises(self):
        """Test that asking beyond the window is an error."""
        with pytest.raises(ValueError, match="beyond the truncation order"):
            one(3).coefficient(0, 4)

    def test_non_int_coefficient_raises(self):
        """Test that coefficients must be exact integers."""
        with pytest.raises(TypeError, match="coefficients must be int"):
            TruncatedSeries({(0, 0): 1.5}, 3)

    def test_orders_type_check(self):
        """Test Orders validation."""
        with pytest.raises(TypeError, match="q_order must be int"):
            Orders("3")

    def test_shift_moves_the_window(self):
        """Test multiplication by an exact monomial."""
        s = one(5, a_order=2).shift(1, 3)
        assert s.q_order == 8
        assert s.a_order == 3
        assert dict(s.terms) == {(1, 3): 1}

    def test_series_sum(self):
        """Test summing many parts at once."""
        parts = [monomial(1, 0, q, 10) for q in range(4)]
        total = series_sum(parts, 2)
        assert total.coefficients() == [1, 1, 1]

    def test_format_series(self):
        """Test the text form."""
        s = TruncatedSeries({(0, 0): 1, (1, 2): -2, (2, 2): 3}, 5)
        assert format_series(s) == "1 -2aq^2 +3a^2q^2"
        assert format_series(TruncatedSeries({}, 3)) == "0"

    def test_is_power_series(self):
        """Test detection of negative exponents."""
        assert one(3).is_power_series()
        assert not monomial(1, -1, 2, 5).is_power_series()


class TestInvert:
    """Test suite for q-adic inversion."""

    def test_geometric(self):
        """Test 1/(1-q)."""
        assert series([1, -1], 4).invert().coefficients() == [1, 1, 1, 1, 1]

    def test_bivariate_geometric(self):
        """Test 1/(1 - aq)."""
        s = TruncatedSeries({(0, 0): 1, (1, 1): -1}, 3)
        assert dict(s.invert().terms) == {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1}

    def test_partition_numbers(self):
        """Test 1/(q;q)_inf against brute-force partition counts."""
        inverse = euler_product(8).invert()
        assert inverse.coefficients() == partition_counts(8)
        assert inverse.coefficients() == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_product_with_inverse_is_one(self):
        """Test s * invert(s) = 1."""
        s = pochhammer(PochhammerSpec(q_offset=1, q_step=2, length=4), 12)
        assert s * s.invert() == one(12)

    def test_not_invertible(self):
        """Test that 1 - a cannot be inverted."""
        s = TruncatedSeries({(0, 0): 1, (1, 0): -1}, 5)
        with pytest.raises(NotInvertible):
            s.invert()

    def test_div_binomial_needs_a_unit(self):
        """Test that neither 1 + 1 nor 1 - a can be divided by."""
        with pytest.raises(NotInvertible):
            one(5).div_binomial(1, 0, 0)
        with pytest.raises(NotInvertible):
            one(5).div_binomial(-1, 1, 0)


class TestPochhammer:
    """Test suite for Pochhammer products."""

    def test_empty_product(self):
        """Test (q;q)_0 = 1."""
        assert q_factorial(0, 5) == one(5)

    def test_q_factorial_three(self):
        """Test (q;q)_3 through its spec."""
        assert format_series(pochhammer(PochhammerSpec(q_offset=1, length=3), 10)) == (
            "1 -1q -1q^2 +1q^4 +1q^5 -1q^6"
        )

    def test_minus_one_base(self):
        """Test (-1;q)_2 = 2 + 2q."""
        s = pochhammer(PochhammerSpec(sign=-1, q_offset=0, length=2), 5)
        assert s.coefficients() == [2, 2, 0, 0, 0, 0]

    def test_triple_product_numerator(self):
        """Test (q^2,q^8,q^10;q^10)_inf against the factors multiplied out."""
        direct = one(30)
        for j in range(2, 31):
            if j % 10 in (0, 2, 8):
                direct = direct * series([1] + [0] * (j - 1) + [-1], 30)
        assembled = one(30)
        for offset in (2, 8, 10):
            assembled = assembled * pochhammer(poch(offset, 10), 30)
        assert assembled == direct
        assert triple_product(2, 8, 10, 30) == direct

    def test_non_truncating(self):
        """Test that (1;q)_inf is rejected."""
        with pytest.raises(NonTruncating):
            pochhammer(PochhammerSpec(q_offset=0, length=None), 5)

    def test_negative_length_numerator(self):
        """Test that a negative length cannot be expanded."""
        with pytest.raises(ValueError, match="length must be >= 0"):
            pochhammer(PochhammerSpec(q_offset=1, length=-1), 5)

    def test_reciprocal_of_negative_length_is_zero(self):
        """Test the 1/(x;q)_M = 0 convention for M < 0."""
        assert reciprocal_pochhammer(PochhammerSpec(q_offset=1, length=-1), 5).is_zero()

    def test_invalid_pochhammer_spec(self):
        """Test PochhammerSpec validation."""
        with pytest.raises(ValueError, match="sign"):
            PochhammerSpec(sign=2)
        with pytest.raises(ValueError, match="q_step"):
            PochhammerSpec(q_step=0)

    def test_restricted_partitions(self):
        """Test 1/(q;q^2)_inf against partitions into odd parts."""
        odd = reciprocal_pochhammer(poch(1, 2), 15)
        assert odd.coefficients() == partition_counts(15, lambda part: part % 2 == 1)

    @pytest.mark.parametrize(
        "spec, more",
        [
            (PochhammerSpec(q_offset=1, length=3), 4),
            (PochhammerSpec(sign=-1, q_offset=0, length=2), 3),
            (PochhammerSpec(a_power=1, q_offset=1, q_step=2, length=2), None),
            (PochhammerSpec(a_power=1, q_offset=0, length=1), None),
        ],
    )
    def test_continuation(self, spec, more):
        """Test (x;q)_L (xq^L;q)_M = (x;q)_(L+M), the infinite case included."""
        tail = replace(spec, q_offset=spec.q_offset + spec.length * spec.q_step, length=more)
        whole = replace(spec, length=None if more is None else spec.length + more)
        joined = pochhammer(spec, 20) * pochhammer(tail, 20)
        assert joined == pochhammer(whole, 20)


class TestSubstitution:
    """Test suite for substitute and eval_a."""

    def test_a_shift(self):
        """Test a -> aq^2 on aq."""
        s = TruncatedSeries({(1, 1): 1}, 10)
        assert dict(s.substitute(2).terms) == {(1, 3): 1}

    def test_q_scale(self):
        """Test q -> q^2 on 1 + q."""
        assert series([1, 1], 4).substitute(0, 2) == series([1, 0, 1, 0, 0])

    def test_a_shift_on_square(self):
        """Test a -> aq^3 on a^2 q."""
        s = TruncatedSeries({(2, 1): 1}, 10)
        assert dict(s.substitute(3, 1).terms) == {(2, 7): 1}

    def test_q_scale_raises_order(self):
        """Test that the exact range of q -> q^m can be requested."""
        s = series([1, 1, 1], 2).substitute(0, 3, q_order=8)
        assert s.q_order == 8
        assert dict(s.terms) == {(0, 0): 1, (0, 3): 1, (0, 6): 1}

    def test_q_scale_beyond_exact_range(self):
        """Test that asking past the exact range raises."""
        with pytest.raises(ValueError, match="exact range"):
            series([1, 1], 1).substitute(0, 2, q_order=4)

    def test_eval_at_one(self):
        """Test a = 1."""
        s = TruncatedSeries({(0, 0): 1, (1, 1): 1, (2, 3): 1}, 5)
        assert s.eval_a(A_ONE).coefficients() == [1, 1, 0, 1, 0, 0]

    def test_eval_at_zero(self):
        """Test a = 0."""
        s = TruncatedSeries({(0, 0): 1, (1, 1): 1}, 5)
        assert s.eval_a(A_ZERO) == one(5)

    def test_eval_at_q_power(self):
        """Test a = q^2."""
        s = TruncatedSeries({(0, 0): 1, (1, 1): 1}, 5)
        assert s.eval_a(QPower(2)).coefficients() == [1, 0, 0, 1, 0, 0]

    def test_eval_at_zero_with_negative_a_power(self):
        """Test that a Laurent series in a cannot be set to a = 0."""
        with pytest.raises(NegativeAPower):
            TruncatedSeries({(-1, 2): 1}, 5).eval_a(A_ZERO)

    def test_eval_at_one_needs_every_power_of_a(self):
        """Test that a = 1 is refused once the series is truncated in a."""
        s = TruncatedSeries({(0, 0): 1, (1, 1): 1}, 5, a_order=2)
        with pytest.raises(ValueError, match=r"stops at a\^2"):
            s.eval_a(A_ONE)

    def test_eval_at_q_power_lowers_order(self):
        """Test that a = q^t only keeps what the a-truncation determines."""
        s = TruncatedSeries({(0, 0): 1, (1, 1): 1}, 10, a_order=1)
        collapsed = s.eval_a(QPower(2))
        assert collapsed.q_order == 3
        assert collapsed.coefficients() == [1, 0, 0, 1]


class TestTheta:
    """Test suite for theta sums and triple products."""

    def test_pentagonal(self):
        """Test Euler's pentagonal series."""
        pentagonal = theta_sum(HalfExponent(3), HalfExponent(-1), 12)
        assert dict(pentagonal.terms) == {
            (0, 0): 1,
            (0, 1): -1,
            (0, 2): -1,
            (0, 5): 1,
            (0, 7): 1,
            (0, 12): -1,
        }
        assert pentagonal == euler_product(12)

    def test_theta_as_product_is_euler(self):
        """Test (q,q^2,q^3;q^3)_inf = (q;q)_inf."""
        assert theta_as_product(HalfExponent(3), HalfExponent(1), 30) == euler_product(30)

    @pytest.mark.parametrize("A, B", [(5, -3), (5, -1), (7, -3), (9, -1), (27, -9)])
    def test_jacobi_triple_product(self, A, B):
        """Test theta sum = triple product for several exponent pairs."""
        A, B = HalfExponent(A), HalfExponent(B)
        assert theta_sum(A, B, 40) == theta_as_product(A, B, 40)

    def test_theta_needs_positive_quadratic(self):
        """Test that A <= 0 is rejected."""
        with pytest.raises(ValueError, match="A > 0"):
            theta_sum(HalfExponent(0), HalfExponent(1), 5)

    def test_triple_product_needs_positive_exponents(self):
        """Test that a zero exponent cannot truncate."""
        with pytest.raises(NonTruncating):
            triple_product(0, 2, 5, 10)


class TestHalfExponent:
    """Test suite for half-integer exponents."""

    def test_quadratic_exponent(self):
        """Test (3/2) n^2 - (1/2) n at n = 2."""
        assert quadratic_exponent(HalfExponent(3), HalfExponent(-1), 2) == 5

    def test_non_integral(self):
        """Test that 3/2 does not become an int."""
        with pytest.raises(NonIntegerExponent):
            HalfExponent(3).to_int()

    def test_of_fraction(self):
        """Test construction from int and Fraction."""
        from fractions import Fraction

        assert HalfExponent.of(2) == HalfExponent(4)
        assert HalfExponent.of(Fraction(3, 2)) == HalfExponent(3)
        with pytest.raises(NonIntegerExponent):
            HalfExponent.of(Fraction(1, 3))

    def test_integral_halves(self):
        """Test is_integral and the text form of whole and half values."""
        assert HalfExponent(4).is_integral
        assert not HalfExponent(-3).is_integral
        assert str(HalfExponent(4)) == "2"
        assert str(HalfExponent(-3)) == "-3/2"


def random_series(rng, a_order):
    terms = {}
    for _ in range(rng.randint(1, 6)):
        key = (rng.randint(-1, 3), rng.randint(-2, 6))
        terms[key] = rng.randint(-5, 5)
    return TruncatedSeries(terms, rng.randint(6, 10), a_order=a_order)


class TestRingLaws:
    """Test suite for ring laws on Laurent series with mixed windows."""

    @pytest.mark.parametrize("seed", range(12))
    def test_associativity(self, seed):
        """Test xy = yx and (xy)z = x(yz) within the shared window."""
        rng = random.Random(seed)
        a_order = rng.choice([None, 3, 4, 5])
        x, y, z = (random_series(rng, a_order) for _ in range(3))
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)

    @pytest.mark.parametrize("seed", range(12))
    def test_distributivity(self, seed):
        """Test x(y + z) = xy + xz within the shared window."""
        rng = random.Random(1000 + seed)
        a_order = rng.choice([None, 3, 4, 5])
        x, y, z = (random_series(rng, a_order) for _ in range(3))
        assert x * (y + z) == x * y + x * z
