import pytest

from conftest import PARAMS, POINTS, balance, excess
from elliptic_duality.exceptions import BadIndex, UnbalancedParams, WrongCase
from elliptic_duality.identities.type_bc import (
    bc_dual_mn_residual,
    bc_dual_residual,
    bc_dual_specialization_residual,
    bc_sum_residual,
    block_signs,
    c_sigma_forms_residual,
    f_mu_nu_specialization_residual,
)
from elliptic_duality.models.indices import MINUS, PLUS, ZERO, MultiIndex
from elliptic_duality.models.params import ParamsBC

C_VALUES = ["0.197-0.262i", "-0.318+0.231i", "0.041+0.274i", "-0.142+0.281i"]


@pytest.fixture
def bc_params(elliptic_ctx):
    return ParamsBC.of(elliptic_ctx, balance(elliptic_ctx, PARAMS[:7], 4), C_VALUES)


@pytest.mark.parametrize("alpha, beta", [((1,), (1,)), ((2,), (1, 1)), ((2, 1), (1, 1, 1))])
def test_bc_dual(elliptic_ctx, bc_params, alpha, beta):
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    x, y = POINTS[:len(alpha)], POINTS[3:3 + len(beta)]
    assert bc_dual_residual(elliptic_ctx, bc_params, alpha, beta, x, y).value < 1e-7


def test_bc_dual_checks(elliptic_ctx, trig_ctx, bc_params):
    with pytest.raises(BadIndex):
        bc_dual_residual(elliptic_ctx, bc_params, MultiIndex((2,)), MultiIndex((1,)), POINTS[:1], POINTS[3:4])
    unbalanced = ParamsBC.of(elliptic_ctx, PARAMS, C_VALUES)
    with pytest.raises(UnbalancedParams):
        bc_dual_residual(elliptic_ctx, unbalanced, MultiIndex((1,)), MultiIndex((1,)), POINTS[:1], POINTS[3:4])
    with pytest.raises(WrongCase):
        bc_dual_residual(
            trig_ctx, ParamsBC.of(trig_ctx, PARAMS), MultiIndex((1,)), MultiIndex((1,)), POINTS[:1], POINTS[3:4]
        )


@pytest.mark.parametrize("alpha, beta", [((1,), (1,)), ((2, 1), (1, 2)), ((3,), (2, 1))])
def test_bc_dual_specialization(elliptic_ctx, bc_params, alpha, beta):
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    x, y = POINTS[:len(alpha)], POINTS[3:3 + len(beta)]
    assert bc_dual_specialization_residual(elliptic_ctx, bc_params, alpha, beta, x, y).value < 1e-7


def test_block_signs():
    signs = block_signs(MultiIndex((3, 2)), MultiIndex((2, 0)), MultiIndex((1, 0)))
    assert signs == (MINUS, ZERO, PLUS, PLUS, PLUS)


@pytest.mark.parametrize(
    "mu, nu", [((0, 0), (0, 0)), ((2, 1), (2, 1)), ((1, 1), (0, 0)), ((2, 0), (1, 0)), ((1, 1), (1, 0))]
)
def test_f_mu_nu_specialization(elliptic_ctx, bc_params, mu, nu):
    alpha, beta = MultiIndex((2, 1)), MultiIndex((1, 2))
    residual = f_mu_nu_specialization_residual(
        elliptic_ctx, bc_params, alpha, beta, POINTS[:2], POINTS[3:5], MultiIndex(mu), MultiIndex(nu)
    )
    assert residual.value < 1e-8


@pytest.mark.parametrize("alpha, beta", [((1,), (1,)), ((2,), (1,)), ((2, 1), (1,)), ((1, 1), ())])
def test_bc_dual_mn(elliptic_ctx, alpha, beta):
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    params = ParamsBC.of(elliptic_ctx, excess(elliptic_ctx, PARAMS[:6], 4 - 2 * alpha.weight + 2 * beta.weight))
    x, y = POINTS[:len(alpha)], POINTS[3:3 + len(beta)]
    assert bc_dual_mn_residual(elliptic_ctx, params, alpha, beta, x, y).value < 1e-7


def test_bc_dual_mn_needs_m_at_least_n(elliptic_ctx):
    params = ParamsBC.of(elliptic_ctx, excess(elliptic_ctx, PARAMS[:6], 6))
    with pytest.raises(BadIndex):
        bc_dual_mn_residual(elliptic_ctx, params, MultiIndex((1,)), MultiIndex((2,)), POINTS[:1], POINTS[3:4])


@pytest.mark.parametrize("alpha", [(1,), (2,), (2, 1)])
def test_bc_sum(elliptic_ctx, alpha):
    alpha = MultiIndex(alpha)
    params = ParamsBC.of(elliptic_ctx, excess(elliptic_ctx, PARAMS[:6], 4 - 2 * alpha.weight))
    assert bc_sum_residual(elliptic_ctx, params, alpha, POINTS[:len(alpha)]).value < 1e-7


def test_bc_sum_extended(extended_ctx):
    params = ParamsBC.of(extended_ctx, excess(extended_ctx, PARAMS[:6], 0))
    assert bc_sum_residual(extended_ctx, params, MultiIndex((2,)), POINTS[:1]).value < 1e-18


@pytest.mark.parametrize("sigma", [0, 1, 3, 6])
def test_c_sigma_forms(elliptic_ctx, sigma):
    params = ParamsBC.of(elliptic_ctx, PARAMS, C_VALUES)
    assert c_sigma_forms_residual(elliptic_ctx, params, POINTS[0], sigma).value < 1e-10


def test_c_sigma_forms_needs_the_elliptic_case(trig_ctx):
    with pytest.raises(WrongCase):
        c_sigma_forms_residual(trig_ctx, ParamsBC.of(trig_ctx, PARAMS), POINTS[0], 2)
