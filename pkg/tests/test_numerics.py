import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdmf.errors import DomainError
from pdmf.numerics import std_normal_cdf, std_normal_pdf, std_normal_quantile

# Frozen from a 40-digit erf evaluation (computed before the implementation).
Q_075 = 0.6744897501960817
Q_060 = 0.2533471031357998
# CDF at the 12-digit truncation 0.674489750196 of the quantile above
CDF_AT_TRUNCATED_Q075 = 0.7499999999999740


def bisect_quantile(y: float, lo: float = -12.0, hi: float = 12.0) -> float:
    """Independent oracle: bisection on the CDF down to a 1e-14 bracket."""
    while hi - lo > 1e-14:
        mid = 0.5 * (lo + hi)
        if std_normal_cdf(mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


ROUND_TRIP_GRID = (
    [1e-9, 1e-6, 0.001]
    + [i / 100 for i in range(1, 100)]
    + [0.999, 1 - 1e-6, 1 - 1e-9]
)


class TestCdf:
    def test_median(self):
        assert std_normal_cdf(0.0) == 0.5

    def test_tail_saturation(self):
        assert std_normal_cdf(40.0) == 1.0
        assert std_normal_cdf(-40.0) == 0.0
        assert std_normal_cdf(1e6) == 1.0

    def test_known_value(self):
        assert std_normal_cdf(0.674489750196) == pytest.approx(0.75, abs=1e-10)
        assert std_normal_cdf(0.674489750196) == pytest.approx(
            CDF_AT_TRUNCATED_Q075, abs=1e-13
        )

    def test_symmetry(self):
        for i in range(0, 1001):
            x = 10.0 * i / 1000
            assert abs(std_normal_cdf(-x) - (1.0 - std_normal_cdf(x))) <= 1e-12

    def test_monotone_across_saturation(self):
        xs = [-45.0 + 90.0 * i / 4000 for i in range(4001)]
        values = [std_normal_cdf(x) for x in xs]
        assert all(v2 >= v1 for v1, v2 in zip(values, values[1:]))

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), float("-inf")])
    def test_non_finite_rejected(self, bad):
        with pytest.raises(DomainError):
            std_normal_cdf(bad)


class TestQuantile:
    def test_median(self):
        assert std_normal_quantile(0.5) == 0.0

    def test_known_values_against_frozen(self):
        assert std_normal_quantile(0.75) == pytest.approx(Q_075, abs=1e-9)
        assert std_normal_quantile(0.6) == pytest.approx(Q_060, abs=1e-9)

    def test_known_values_against_bisection(self):
        assert std_normal_quantile(0.75) == pytest.approx(
            bisect_quantile(0.75), abs=1e-9
        )
        assert std_normal_quantile(0.6) == pytest.approx(bisect_quantile(0.6), abs=1e-9)
        for y in (0.01, 0.37, 0.5, 0.947, 0.99):
            assert std_normal_quantile(y) == pytest.approx(bisect_quantile(y), abs=1e-9)

    def test_round_trip_grid(self):
        for y in ROUND_TRIP_GRID:
            assert abs(std_normal_cdf(std_normal_quantile(y)) - y) <= 1e-9

    def test_antisymmetry(self):
        for i in range(1, 501):
            y = 0.5 * i / 500
            assert abs(std_normal_quantile(y) + std_normal_quantile(1.0 - y)) <= 1e-8

    def test_monotone_on_grid(self):
        ys = [1e-6 + (1 - 2e-6) * i / 2000 for i in range(2001)]
        values = [std_normal_quantile(y) for y in ys]
        assert all(v2 >= v1 for v1, v2 in zip(values, values[1:]))

    @pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.5, float("nan")])
    def test_out_of_domain_rejected(self, bad):
        with pytest.raises(DomainError):
            std_normal_quantile(bad)


def test_pdf_peak():
    assert std_normal_pdf(0.0) == pytest.approx(1.0 / math.sqrt(2.0 * math.pi))


@settings(max_examples=300)
@given(st.floats(min_value=1e-9, max_value=1 - 1e-9))
def test_round_trip_property(y):
    assert abs(std_normal_cdf(std_normal_quantile(y)) - y) <= 1e-9


@settings(max_examples=300)
@given(st.floats(min_value=0.0, max_value=10.0))
def test_symmetry_property(x):
    assert abs(std_normal_cdf(-x) - (1.0 - std_normal_cdf(x))) <= 1e-12
