# identities/type_bc.py

import logging
from typing import Sequence

from ..bracket import BracketContext
from ..combinatorics import principal_specialize
from ..exceptions import BadIndex
from ..models.indices import MINUS, PLUS, ZERO, MultiIndex, SignPartition
from ..models.params import ParamsBC
from ..operators import c_sigma_det, c_sigma_rec, c_sigma_sum, coeff_A
from ..series import bc_side, f_mu_nu
from ..utils.residuals import Residual, Side, compare
from .subsets import bc_subset_side, excess_prefactor, require_excess, subset_term

logger = logging.getLogger(__name__)


def _points(ctx: BracketContext, values: Sequence, index: MultiIndex, name: str):
    if len(values) != len(index):
        raise BadIndex(f"{name} needs {len(index)} base points, got {len(values)}")
    return [ctx.scalar(v) for v in values]


def _require_equal_weight(alpha: MultiIndex, beta: MultiIndex) -> None:
    if alpha.weight != beta.weight:
        raise BadIndex(f"the BC duality needs |alpha| = |beta|, got {alpha.weight} and {beta.weight}")


def bc_dual_residual(ctx: BracketContext, params: ParamsBC, alpha: MultiIndex, beta: MultiIndex, x, y) -> Residual:
    """The multi-index BC duality for |alpha| = |beta| under sum(a) = 4 delta, b = delta - a, same c.

    Raises:
        WrongCase: Outside the elliptic case.
        UnbalancedParams: If the balancing condition fails.
    """
    ctx.require_elliptic("the BC duality")
    _require_equal_weight(alpha, beta)
    params.require_balance(ctx, 4)
    x = _points(ctx, x, alpha, "alpha")
    y = _points(ctx, y, beta, "beta")
    lhs = bc_side(ctx, params, alpha, x, beta, y)
    rhs = bc_side(ctx, params.dual(ctx), beta, y, alpha, x)
    return compare(lhs, rhs)


def bc_dual_specialization_residual(
    ctx: BracketContext, params: ParamsBC, alpha: MultiIndex, beta: MultiIndex, x, y
) -> Residual:
    """The nested-box side against the full-level 3^N subset sum at z = (x)_alpha, w = (y)_beta."""
    ctx.require_elliptic("the BC duality")
    _require_equal_weight(alpha, beta)
    params.require_balance(ctx, 4)
    x = _points(ctx, x, alpha, "alpha")
    y = _points(ctx, y, beta, "beta")
    lhs = bc_side(ctx, params, alpha, x, beta, y)
    z = principal_specialize(ctx, x, alpha)
    w = principal_specialize(ctx, y, beta)
    rhs = bc_subset_side(ctx, params, z, w, len(z))
    return compare(lhs, rhs)


def block_signs(alpha: MultiIndex, mu: MultiIndex, nu: MultiIndex):
    """The increasing sign sequence -^nu 0^(mu - nu) +^(alpha - mu) of every block, flattened."""
    signs = []
    for a, m, n in zip(alpha, mu, nu):
        signs.extend([MINUS] * n + [ZERO] * (m - n) + [PLUS] * (a - m))
    return tuple(signs)


def f_mu_nu_specialization_residual(
    ctx: BracketContext,
    params: ParamsBC,
    alpha: MultiIndex,
    beta: MultiIndex,
    x,
    y,
    mu: MultiIndex,
    nu: MultiIndex,
) -> Residual:
    """F^alpha_{mu nu}(x; y) against the subset summand of its sign sequence at (x)_alpha, (y)_beta."""
    ctx.require_elliptic("the BC subset summand")
    x = _points(ctx, x, alpha, "alpha")
    y = _points(ctx, y, beta, "beta")
    lhs = f_mu_nu(ctx, params, alpha, beta, x, y, mu, nu)
    z = principal_specialize(ctx, x, alpha)
    w = principal_specialize(ctx, y, beta)

    def coeff(point, sign):
        return coeff_A(ctx, params, point, sign)

    partition = SignPartition.from_signs(block_signs(alpha, mu, nu))
    rhs = subset_term(ctx, coeff, z, w, partition, ctx.delta, "BC summand")
    return compare(Side.single(lhs), Side.single(rhs))


def bc_dual_mn_residual(ctx: BracketContext, params: ParamsBC, alpha: MultiIndex, beta: MultiIndex, x, y) -> Residual:
    """The multi-index BC duality for |alpha| = M >= |beta| = N with a_7 = a_0 + delta.

    The alpha-side carries c = a_0, the beta-side the excess dual parameters, times
    prod_{p=1..6} [a_0 + a_p]_{M-N}.
    """
    ctx.require_elliptic("the BC duality")
    m, n = alpha.weight, beta.weight
    require_excess(ctx, params, m, n)
    x = _points(ctx, x, alpha, "alpha")
    y = _points(ctx, y, beta, "beta")
    lhs = bc_side(ctx, params.with_constant_c(params.a[0]), alpha, x, beta, y)
    rhs = bc_side(ctx, params.excess_dual(ctx), beta, y, alpha, x)
    return compare(lhs, rhs.scaled(excess_prefactor(ctx, params, m - n)))


def bc_sum_residual(ctx: BracketContext, params: ParamsBC, alpha: MultiIndex, x) -> Residual:
    """The beta = 0 case: the alpha-side sums to prod_{p=1..6} [a_0 + a_p]_M."""
    ctx.require_elliptic("the BC summation")
    m = alpha.weight
    require_excess(ctx, params, m, 0)
    x = _points(ctx, x, alpha, "alpha")
    lhs = bc_side(ctx, params.with_constant_c(params.a[0]), alpha, x, MultiIndex(()), [])
    return compare(lhs, Side.single(excess_prefactor(ctx, params, m)))


def c_sigma_forms_residual(ctx: BracketContext, params: ParamsBC, z, sigma: int) -> Residual:
    """The worse of the gap-sequence sum against the tridiagonal determinant and against the recurrence."""
    ctx.require_elliptic("the C_sigma coefficient")
    by_sum = Side.single(c_sigma_sum(ctx, params, z, sigma))
    by_det = compare(by_sum, Side.single(c_sigma_det(ctx, params, z, sigma)))
    by_rec = compare(by_sum, Side.single(c_sigma_rec(ctx, params, z, sigma)))
    return max(by_det, by_rec, key=float)
