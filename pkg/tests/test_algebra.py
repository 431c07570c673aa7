import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import gpdmfs

from pdmf.algebra import add, approx_equal, scale, solve_add_equation, sub
from pdmf.errors import DomainError
from pdmf.membership import GPdmf

B1 = GPdmf(-1.0, 0.0, 1.0, 0.0, 0.0)
B2 = GPdmf(-1.0, 1.0, 4.0, 0.0, 0.0)
# Side means as printed in the worked reference example, four decimals.
B3 = GPdmf(-1.0, 1.0, 2.0, -0.6745, -0.4399)
CRISP_ZERO = GPdmf(0.0, 0.0, 0.0, 0.0, 0.0)

TOL = 1e-12

scalars = st.floats(min_value=-10.0, max_value=10.0)


def assert_close(n1: GPdmf, n2: GPdmf, tol: float = TOL):
    for x, y in zip(n1.components, n2.components):
        assert abs(x - y) <= tol, (n1.components, n2.components)


class TestAdd:
    def test_reference_addition(self):
        assert add(B1, B2).components == (-2.0, 1.0, 5.0, 0.0, 0.0)

    def test_identity(self):
        assert add(B3, CRISP_ZERO).components == B3.components

    def test_cancellation(self):
        lhs = GPdmf(1.0, 2.0, 3.0, 0.5, -0.5)
        rhs = GPdmf(-3.0, -2.0, -1.0, -0.5, 0.5)
        assert add(lhs, rhs).components == (-2.0, 0.0, 2.0, 0.0, 0.0)


class TestScale:
    def test_positive_factor(self):
        result = scale(3.0, B3)
        expected = (-3.0, 3.0, 6.0, 3.0 * -0.6745, 3.0 * -0.4399)
        assert result.components == pytest.approx(expected, abs=5e-4)
        assert result.components[3] == pytest.approx(-2.0235, abs=5e-4)
        assert result.components[4] == pytest.approx(-1.3197, abs=5e-4)

    def test_negative_factor_swaps(self):
        result = scale(-2.0, B3)
        assert result.components == pytest.approx(
            (-4.0, -2.0, 2.0, 0.8798, 1.3490), abs=5e-4
        )

    def test_zero_factor(self):
        result = scale(0.0, B3)
        assert result.components == (0.0, 0.0, 0.0, 0.0, 0.0)

    def test_non_finite_factor(self):
        with pytest.raises(DomainError):
            scale(float("nan"), B3)


class TestSub:
    def test_reference_subtraction(self):
        assert sub(B3, B1).components == (-2.0, 1.0, 3.0, -0.6745, -0.4399)

    def test_crisp_zero_identity(self):
        assert sub(B3, CRISP_ZERO).components == B3.components

    def test_self_difference_is_not_crisp(self):
        result = sub(B3, B3)
        a, b, c, ml, mr = B3.components
        assert result.components == (a - c, 0.0, c - a, ml - mr, mr - ml)


class TestSolve:
    def test_reference_solution(self):
        lhs = GPdmf(-2.0, 1.0, 3.0, -0.6745, -0.4399)
        result = solve_add_equation(lhs, B1)
        # direct application of the subtraction law
        assert result.solution.components == (-3.0, 1.0, 4.0, -0.6745, -0.4399)
        assert result.mu_recovered
        assert not result.support_recovered

    def test_self_equation(self):
        result = solve_add_equation(B3, B3)
        a, b, c, ml, mr = B3.components
        assert result.solution.components == (a - c, 0.0, c - a, ml - mr, mr - ml)

    def test_mu_recovery_exact_for_crisp_operand(self):
        result = solve_add_equation(B3, CRISP_ZERO)
        assert result.residual == (0.0, 0.0, 0.0, 0.0, 0.0)
        assert result.support_recovered

    def test_support_recovered_only_for_pointlike_second_operand(self):
        point = GPdmf(2.0, 2.0, 2.0, 0.3, -0.1)
        assert solve_add_equation(B3, point).support_recovered


class TestApproxEqual:
    def test_reflexive(self):
        assert approx_equal(B3, B3, 1e-12)

    def test_mu_difference_detected(self):
        assert not approx_equal(CRISP_ZERO, GPdmf(0.0, 0.0, 0.0, 1.0, 0.0), 0.5)

    def test_within_tolerance(self):
        lhs = GPdmf(0.0, 1.0, 2.0, 0.1, 0.2)
        rhs = GPdmf(0.0, 1.0, 2.0, 0.1 + 1e-13, 0.2)
        assert approx_equal(lhs, rhs, 1e-12)

    @pytest.mark.parametrize("tol", [0.0, -1.0, float("nan")])
    def test_tolerance_validated(self, tol):
        with pytest.raises(DomainError):
            approx_equal(B1, B1, tol)


@settings(max_examples=200)
@given(gpdmfs(), gpdmfs())
def test_addition_commutes(x, y):
    assert_close(add(x, y), add(y, x))


@settings(max_examples=200)
@given(gpdmfs(), gpdmfs(), gpdmfs())
def test_addition_associates(x, y, z):
    assert_close(add(add(x, y), z), add(x, add(y, z)))


@settings(max_examples=200)
@given(gpdmfs(), gpdmfs())
def test_subtraction_antisymmetry(x, y):
    assert_close(sub(x, y), scale(-1.0, sub(y, x)))


@settings(max_examples=200)
@given(gpdmfs(), gpdmfs(), gpdmfs())
def test_mixed_associativity(x, y, z):
    assert_close(sub(sub(x, y), z), sub(x, add(y, z)))


@settings(max_examples=200)
@given(scalars, gpdmfs(), gpdmfs())
def test_distributivity(lam, x, y):
    assert_close(scale(lam, add(x, y)), add(scale(lam, x), scale(lam, y)))


@settings(max_examples=200)
@given(scalars, scalars, gpdmfs())
def test_scalar_additivity_same_sign(l1, l2, x):
    if l1 * l2 < 0:
        l2 = -l2
    assert_close(scale(l1 + l2, x), add(scale(l1, x), scale(l2, x)))


def test_scalar_additivity_fails_for_mixed_signs():
    x = GPdmf(0.0, 1.0, 2.0, 0.5, -0.25)
    l1, l2 = 2.0, -1.0
    direct = scale(l1 + l2, x)
    split = add(scale(l1, x), scale(l2, x))
    # support triples disagree: the identity needs l1 * l2 >= 0
    assert not approx_equal(direct, split, 1e-6)
    assert direct.components[:3] == (0.0, 1.0, 2.0)
    assert split.components[:3] == (-2.0, 1.0, 4.0)


@settings(max_examples=200)
@given(gpdmfs(), gpdmfs())
def test_subtraction_is_signed_addition(x, y):
    assert_close(sub(x, y), add(x, scale(-1.0, y)))


@settings(max_examples=200)
@given(gpdmfs(), gpdmfs(), scalars)
def test_closure(x, y, lam):
    for result in (add(x, y), sub(x, y), scale(lam, x)):
        a, b, c, ml, mr = result.components
        assert a <= b <= c
