import pytest

from conftest import PARAMS, POINTS, balance
from elliptic_duality.exceptions import BadIndex, UnbalancedParams
from elliptic_duality.identities.type_c import (
    c_dual_equal_residual,
    c_dual_excess_residual,
    c_dual_n1_residual,
    c_dual_residual,
    c_dual_specialization_residual,
    c_sum_residual,
    c_vanishing_residual,
    km_transform_residual,
    km_v_sum_residual,
    km_v_transform_residual,
    v12_11_residual,
    zero_formula_residual,
)
from elliptic_duality.models.indices import MultiIndex
from elliptic_duality.models.params import ParamsC


def params_c(ctx, multiple):
    return ParamsC.of(ctx, balance(ctx, PARAMS[:3], multiple))


@pytest.mark.parametrize("alpha, beta", [((1,), (1,)), ((2, 1), (3,)), ((1, 1), (1, 1))])
def test_c_dual_equal(any_ctx, alpha, beta):
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    params = params_c(any_ctx, 1)
    x, y = POINTS[:len(alpha)], POINTS[4:4 + len(beta)]
    assert c_dual_equal_residual(any_ctx, params, alpha, beta, x, y).value < 1e-8


def test_c_dual_equal_extended(extended_ctx):
    params = params_c(extended_ctx, 1)
    alpha, beta = MultiIndex((2, 1)), MultiIndex((3,))
    residual = c_dual_equal_residual(extended_ctx, params, alpha, beta, POINTS[:2], POINTS[4:5])
    assert residual.value < 1e-20


def test_c_dual_equal_checks_weights(elliptic_ctx):
    with pytest.raises(BadIndex):
        c_dual_equal_residual(
            elliptic_ctx, params_c(elliptic_ctx, 1), MultiIndex((2,)), MultiIndex((1,)), POINTS[:1], POINTS[4:5]
        )
    with pytest.raises(UnbalancedParams):
        c_dual_equal_residual(
            elliptic_ctx, params_c(elliptic_ctx, 2), MultiIndex((1,)), MultiIndex((1,)), POINTS[:1], POINTS[4:5]
        )


def test_c_dual_checks_base_points(elliptic_ctx):
    with pytest.raises(BadIndex):
        c_dual_equal_residual(
            elliptic_ctx, params_c(elliptic_ctx, 1), MultiIndex((1, 1)), MultiIndex((2,)), POINTS[:1], POINTS[4:5]
        )


@pytest.mark.parametrize("alpha, beta", [((2, 2), (1, 1)), ((1,), (2,)), ((2,), (1, 2)), ((1, 1), ())])
def test_c_dual_general(any_ctx, alpha, beta):
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    params = params_c(any_ctx, beta.weight - alpha.weight + 1)
    x, y = POINTS[:len(alpha)], POINTS[4:4 + len(beta)]
    assert c_dual_residual(any_ctx, params, alpha, beta, x, y).value < 1e-8


@pytest.mark.parametrize("alpha, beta", [((2, 2), (1, 1)), ((2,), (1,)), ((1, 2), (3,))])
def test_c_dual_excess(any_ctx, alpha, beta):
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    params = params_c(any_ctx, beta.weight - alpha.weight + 1)
    x, y = POINTS[:len(alpha)], POINTS[4:4 + len(beta)]
    assert c_dual_excess_residual(any_ctx, params, alpha, beta, x, y).value < 1e-8


def test_c_dual_excess_needs_m_at_least_n(elliptic_ctx):
    with pytest.raises(BadIndex):
        c_dual_excess_residual(
            elliptic_ctx, params_c(elliptic_ctx, 2), MultiIndex((1,)), MultiIndex((2,)), POINTS[:1], POINTS[4:5]
        )


@pytest.mark.parametrize("alpha, beta", [((1,), (1,)), ((2, 1), (1, 2)), ((2,), (1, 1))])
def test_c_dual_specialization(any_ctx, alpha, beta):
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    params = params_c(any_ctx, 1)
    x, y = POINTS[:len(alpha)], POINTS[4:4 + len(beta)]
    assert c_dual_specialization_residual(any_ctx, params, alpha, beta, x, y).value < 1e-8


@pytest.mark.parametrize("alpha", [(1,), (2, 1), (1, 1, 1)])
def test_c_sum(any_ctx, alpha):
    alpha = MultiIndex(alpha)
    params = params_c(any_ctx, 1 - alpha.weight)
    assert c_sum_residual(any_ctx, params, alpha, POINTS[:len(alpha)]).value < 1e-8


@pytest.mark.parametrize("alpha, n", [((1, 2), 2), ((2,), 1), ((1, 1), 3)])
def test_c_dual_single_block(any_ctx, alpha, n):
    alpha = MultiIndex(alpha)
    params = params_c(any_ctx, n - alpha.weight + 1)
    assert c_dual_n1_residual(any_ctx, params, alpha, n, POINTS[:len(alpha)], POINTS[5]).value < 1e-8


@pytest.mark.parametrize("m, n", [(3, 2), (1, 1), (2, 4)])
def test_v12_11(any_ctx, m, n):
    params = params_c(any_ctx, n - m + 1)
    assert v12_11_residual(any_ctx, params, m, n, POINTS[0], POINTS[5]).value < 1e-8


@pytest.mark.parametrize("alpha, beta", [((1,), ()), ((2, 1), (1, 1)), ((3,), (2,)), ((1, 1), (1,))])
def test_zero_formula(any_ctx, alpha, beta):
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    x, y = POINTS[:len(alpha)], POINTS[4:4 + len(beta)]
    assert zero_formula_residual(any_ctx, alpha, beta, x, y).value < 1e-7


def test_zero_formula_needs_weight_gap_one(elliptic_ctx):
    with pytest.raises(BadIndex):
        zero_formula_residual(elliptic_ctx, MultiIndex((2,)), MultiIndex((2,)), POINTS[:1], POINTS[4:5])


@pytest.mark.parametrize("lag", [0, 1])
def test_c_vanishing(any_ctx, lag):
    alpha, beta = MultiIndex((2, 1)), MultiIndex((1,))
    residual = c_vanishing_residual(any_ctx, PARAMS[0], PARAMS[1], lag, alpha, beta, POINTS[:2], POINTS[4:5])
    assert residual.value < 1e-7


def test_c_vanishing_checks_lag(elliptic_ctx):
    with pytest.raises(BadIndex):
        c_vanishing_residual(
            elliptic_ctx, PARAMS[0], PARAMS[1], 2, MultiIndex((2, 1)), MultiIndex((1,)), POINTS[:2], POINTS[4:5]
        )


@pytest.mark.parametrize("alpha, beta, r, s", [((2, 1), (1,), 1, 1), ((1, 1), (), 1, 1), ((2,), (1,), 0, 1)])
def test_km_transform(any_ctx, alpha, beta, r, s):
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    x, y = POINTS[:len(alpha)], POINTS[4:4 + len(beta)]
    residual = km_transform_residual(any_ctx, alpha, beta, r, s, x, y, POINTS[6], POINTS[7])
    assert residual.value < 1e-8


@pytest.mark.parametrize("alpha, r, s", [((1, 1), 1, 1), ((2, 1), 2, 1), ((2,), 0, 2)])
def test_km_v_transform(any_ctx, alpha, r, s):
    alpha = MultiIndex(alpha)
    residual = km_v_transform_residual(any_ctx, alpha, r, s, POINTS[:len(alpha)], POINTS[6], POINTS[7])
    assert residual.value < 1e-8


@pytest.mark.parametrize("alpha", [(1,), (2, 1), (1, 1, 1)])
def test_km_v_sum(any_ctx, alpha):
    alpha = MultiIndex(alpha)
    assert km_v_sum_residual(any_ctx, alpha, POINTS[:len(alpha)], POINTS[6], POINTS[7]).value < 1e-8


def test_v12_11_needs_balance(elliptic_ctx):
    with pytest.raises(UnbalancedParams):
        v12_11_residual(elliptic_ctx, params_c(elliptic_ctx, 3), 2, 2, POINTS[0], POINTS[5])
