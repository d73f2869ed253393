import pytest

from conftest import PARAMS, POINTS, balance, excess
from elliptic_duality.exceptions import BadIndex, SizeLimit, UnbalancedParams, WrongCase
from elliptic_duality.identities.subsets import (
    bc_subset_mn_residual,
    bc_subset_residual,
    bc_subset_side,
    bc_subset_sum_residual,
    c_subset_from_bc_residual,
    c_subset_mn_residual,
    c_subset_residual,
    cauchy_det_residual,
    halfperiod_constant,
)
from elliptic_duality.models.params import ParamsBC, ParamsC


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_cauchy_determinant(any_ctx, n):
    assert cauchy_det_residual(any_ctx, POINTS[:n], PARAMS[:n]).value < 1e-9


def test_cauchy_determinant_shapes(elliptic_ctx):
    with pytest.raises(BadIndex):
        cauchy_det_residual(elliptic_ctx, POINTS[:2], PARAMS[:3])
    with pytest.raises(SizeLimit):
        cauchy_det_residual(elliptic_ctx, ["0.01"] * 13, ["0.02"] * 13)


@pytest.fixture
def bc_params(elliptic_ctx):
    return ParamsBC.of(elliptic_ctx, balance(elliptic_ctx, PARAMS[:7], 4), POINTS[5:8] + PARAMS[7:8])


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_bc_subset_duality(elliptic_ctx, bc_params, r):
    assert bc_subset_residual(elliptic_ctx, bc_params, POINTS[:3], POINTS[3:6], r).value < 1e-8


def test_bc_subset_level_zero_is_one(elliptic_ctx, bc_params):
    side = bc_subset_side(elliptic_ctx, bc_params, POINTS[:3], POINTS[3:5], 0)
    assert side.terms == [1]


def test_bc_subset_needs_balance_and_ellipticity(elliptic_ctx, trig_ctx):
    unbalanced = ParamsBC.of(elliptic_ctx, PARAMS)
    with pytest.raises(UnbalancedParams):
        bc_subset_residual(elliptic_ctx, unbalanced, POINTS[:2], POINTS[2:4], 1)
    with pytest.raises(WrongCase):
        bc_subset_residual(trig_ctx, ParamsBC.of(trig_ctx, PARAMS), POINTS[:2], POINTS[2:4], 1)


def test_bc_subset_is_weyl_invariant(elliptic_ctx, bc_params):
    z = [elliptic_ctx.scalar(v) for v in POINTS[:3]]
    w = POINTS[3:6]
    flipped = [z[1], -z[0], z[2]]
    first = bc_subset_side(elliptic_ctx, bc_params, z, w, 2).value
    second = bc_subset_side(elliptic_ctx, bc_params, flipped, w, 2).value
    assert abs(first - second) < 1e-9 * max(1.0, abs(first))


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_c_subset_duality(any_ctx, r):
    params = ParamsC.of(any_ctx, balance(any_ctx, PARAMS[:3], 1))
    assert c_subset_residual(any_ctx, params, POINTS[:3], POINTS[3:6], r).value < 1e-8


def test_c_subset_needs_equal_sizes(elliptic_ctx):
    params = ParamsC.of(elliptic_ctx, balance(elliptic_ctx, PARAMS[:3], 1))
    with pytest.raises(BadIndex):
        c_subset_residual(elliptic_ctx, params, POINTS[:3], POINTS[3:5], 1)


def test_halfperiod_constant(elliptic_ctx, trig_ctx):
    assert abs(halfperiod_constant(elliptic_ctx)) > 0
    with pytest.raises(WrongCase):
        halfperiod_constant(trig_ctx)


@pytest.mark.parametrize("r", [1, 2])
def test_c_subset_from_bc(elliptic_ctx, r):
    params = ParamsC.of(elliptic_ctx, balance(elliptic_ctx, PARAMS[:3], 1))
    assert c_subset_from_bc_residual(elliptic_ctx, params, POINTS[:3], POINTS[3:6], r).value < 1e-8


@pytest.mark.parametrize("m, n", [(2, 1), (3, 1), (1, 2), (2, 2), (3, 0)])
def test_c_subset_unequal_sizes(any_ctx, m, n):
    params = ParamsC.of(any_ctx, balance(any_ctx, PARAMS[:3], n - m + 1))
    assert c_subset_mn_residual(any_ctx, params, POINTS[:m], POINTS[4:4 + n]).value < 1e-8


@pytest.mark.parametrize("m, n", [(1, 0), (1, 1), (2, 1), (3, 1), (2, 2)])
def test_bc_subset_unequal_sizes(elliptic_ctx, m, n):
    params = ParamsBC.of(elliptic_ctx, excess(elliptic_ctx, PARAMS[:6], 4 - 2 * m + 2 * n))
    assert bc_subset_mn_residual(elliptic_ctx, params, POINTS[:m], POINTS[4:4 + n]).value < 1e-7


def test_bc_subset_unequal_sizes_checks_order(elliptic_ctx):
    params = ParamsBC.of(elliptic_ctx, excess(elliptic_ctx, PARAMS[:6], 6))
    with pytest.raises(BadIndex):
        bc_subset_mn_residual(elliptic_ctx, params, POINTS[:1], POINTS[4:6])


def test_bc_subset_unequal_sizes_needs_the_excess_pair(elliptic_ctx):
    params = ParamsBC.of(elliptic_ctx, balance(elliptic_ctx, PARAMS[:7], 2))
    with pytest.raises(BadIndex):
        bc_subset_mn_residual(elliptic_ctx, params, POINTS[:2], POINTS[4:5])


@pytest.mark.parametrize("m", [1, 2, 3])
def test_bc_subset_sum(elliptic_ctx, m):
    params = ParamsBC.of(elliptic_ctx, excess(elliptic_ctx, PARAMS[:6], 4 - 2 * m))
    assert bc_subset_sum_residual(elliptic_ctx, params, POINTS[:m]).value < 1e-7
