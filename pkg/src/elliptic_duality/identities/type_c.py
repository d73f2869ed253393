# identities/type_c.py

import logging
from typing import List, Sequence

from ..bracket import BracketContext, shifted_factorial, shifted_factorial_pm
from ..combinatorics import principal_specialize
from ..exceptions import BadIndex
from ..models.indices import MultiIndex
from ..models.params import ParamsC
from ..series import Factors, PhiSpec, phi_side, v_side
from ..utils.residuals import Residual, Side, compare, vanishing
from .subsets import c_subset_side

logger = logging.getLogger(__name__)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _points(ctx: BracketContext, values: Sequence, index: MultiIndex, name: str) -> List:
    if len(values) != len(index):
        raise BadIndex(f"{name} needs {len(index)} base points, got {len(values)}")
    return [ctx.scalar(v) for v in values]


def _require_weight(index: MultiIndex, weight: int, name: str) -> None:
    if index.weight != weight:
        raise BadIndex(f"|{name}| must be {weight}, got {index.weight}")


def block_prefactor(ctx: BracketContext, params: ParamsC, alpha: MultiIndex, x: Sequence):
    """prod_i prod_p [x_i + delta/2 + a_p]_{alpha_i} / [2x_i + delta]_{alpha_i}
    times prod_{i<j} [x_i + x_j + (alpha_j + 1) delta]_{alpha_i} / [x_i + x_j + delta]_{alpha_i}."""
    d = ctx.delta
    f = Factors(ctx, "C prefactor")
    for i, xi in enumerate(x):
        for a in params.a:
            f.up(xi + d / 2 + a, alpha[i])
        f.down(2 * xi + d, alpha[i])
        for j in range(i + 1, len(x)):
            f.up(xi + x[j] + (alpha[j] + 1) * d, alpha[i]).down(xi + x[j] + d, alpha[i])
    return f.value()


def cross_prefactor(ctx: BracketContext, alpha: MultiIndex, x: Sequence, beta: MultiIndex, y: Sequence):
    """prod_{k,i} [y_k - x_i + delta/2 - alpha_i delta]_{beta_k} / [y_k - x_i + delta/2]_{beta_k}."""
    d = ctx.delta
    f = Factors(ctx, "C cross")
    for k, yk in enumerate(y):
        for i, xi in enumerate(x):
            f.up(yk - xi + d / 2 - alpha[i] * d, beta[k]).down(yk - xi + d / 2, beta[k])
    return f.value()


def dual_phi_spec(ctx: BracketContext, params: ParamsC, alpha: MultiIndex, x: Sequence, y: Sequence, beta: MultiIndex):
    """Phi_alpha(x | (delta/2 - a_p), (delta/2 + y_k + beta_k delta, delta/2 - y_k))."""
    d = ctx.delta
    u = [d / 2 - a for a in params.a]
    for k, yk in enumerate(y):
        u.extend((d / 2 + yk + beta[k] * d, d / 2 - yk))
    return PhiSpec(alpha=alpha, x=tuple(x), u=tuple(u))


def _side(ctx: BracketContext, params: ParamsC, alpha: MultiIndex, x, beta: MultiIndex, y) -> Side:
    phi = phi_side(ctx, dual_phi_spec(ctx, params, alpha, x, y, beta))
    return phi.scaled(block_prefactor(ctx, params, alpha, x))


def _a0_products(ctx: BracketContext, params: ParamsC, k: int):
    value = ctx.one
    for a in params.a[1:]:
        value *= shifted_factorial(ctx, params.a[0] + a, k)
    return value


def _b_pair_products(ctx: BracketContext, dual: ParamsC, k: int):
    value = ctx.one
    for p in range(1, 4):
        for q in range(p + 1, 4):
            value *= shifted_factorial(ctx, dual.a[p] + dual.a[q], k)
    return value


def _dual_sides(ctx: BracketContext, params: ParamsC, alpha, x, beta, y):
    x = _points(ctx, x, alpha, "alpha")
    y = _points(ctx, y, beta, "beta")
    dual = params.dual(ctx)
    lhs = _side(ctx, params, alpha, x, beta, y)
    rhs = _side(ctx, dual, beta, y, alpha, x).scaled(cross_prefactor(ctx, alpha, x, beta, y))
    return dual, lhs, rhs


def c_dual_equal_residual(ctx: BracketContext, params: ParamsC, alpha: MultiIndex, beta: MultiIndex, x, y) -> Residual:
    """The C duality for |alpha| = |beta| = M under sum(a) = delta, with sign (-1)^M."""
    _require_weight(beta, alpha.weight, "beta")
    params.require_balance(ctx, 1)
    _, lhs, rhs = _dual_sides(ctx, params, alpha, x, beta, y)
    return compare(lhs, rhs.scaled(_sign(alpha.weight)))


def c_dual_residual(ctx: BracketContext, params: ParamsC, alpha: MultiIndex, beta: MultiIndex, x, y) -> Residual:
    """The C duality for |alpha| = M, |beta| = N under sum(a) = (N - M + 1) delta.

    prod_{1<=p<q<=3} [b_p + b_q]_N LHS = (-1)^N prod_{p=1..3} [a_0 + a_p]_M RHS.
    """
    m, n = alpha.weight, beta.weight
    params.require_balance(ctx, n - m + 1)
    dual, lhs, rhs = _dual_sides(ctx, params, alpha, x, beta, y)
    lhs = lhs.scaled(_b_pair_products(ctx, dual, n))
    return compare(lhs, rhs.scaled(_sign(n) * _a0_products(ctx, params, m)))


def c_dual_excess_residual(ctx: BracketContext, params: ParamsC, alpha: MultiIndex, beta: MultiIndex, x, y) -> Residual:
    """The M >= N form: LHS = (-1)^N prod_{p=1..3} [a_0 + a_p]_{M-N} RHS under sum(a) = (N - M + 1) delta."""
    m, n = alpha.weight, beta.weight
    if m < n:
        raise BadIndex(f"the excess C duality needs |alpha| >= |beta|, got {m} < {n}")
    params.require_balance(ctx, n - m + 1)
    _, lhs, rhs = _dual_sides(ctx, params, alpha, x, beta, y)
    return compare(lhs, rhs.scaled(_sign(n) * _a0_products(ctx, params, m - n)))


def c_dual_specialization_residual(
    ctx: BracketContext, params: ParamsC, alpha: MultiIndex, beta: MultiIndex, x, y
) -> Residual:
    """The |alpha| = |beta| duality LHS, times the cross factor it absorbs, against the full-level
    C subset sum at z = (x)_alpha + delta/2, w = (y)_beta + delta/2."""
    _require_weight(beta, alpha.weight, "beta")
    params.require_balance(ctx, 1)
    x = _points(ctx, x, alpha, "alpha")
    y = _points(ctx, y, beta, "beta")
    d = ctx.delta
    f = Factors(ctx, "C specialization")
    for i, xi in enumerate(x):
        for k, yk in enumerate(y):
            for t in range(beta[k]):
                shifted = yk + t * d + d / 2
                f.up(xi + d / 2 + shifted, alpha[i]).up(xi + d / 2 - shifted, alpha[i])
                f.down(xi + d + shifted, alpha[i]).down(xi + d - shifted, alpha[i])
    lhs = _side(ctx, params, alpha, x, beta, y).scaled(f.value())
    z = [p + d / 2 for p in principal_specialize(ctx, x, alpha)]
    w = [p + d / 2 for p in principal_specialize(ctx, y, beta)]
    rhs = c_subset_side(ctx, params, z, w, len(z))
    return compare(lhs, rhs)


def c_sum_residual(ctx: BracketContext, params: ParamsC, alpha: MultiIndex, x) -> Residual:
    """Phi_alpha(x | delta/2 - a_p) = prod_{p=1..3} [a_0 + a_p]_M over the block prefactor, sum(a) = -(M - 1) delta."""
    m = alpha.weight
    params.require_balance(ctx, 1 - m)
    x = _points(ctx, x, alpha, "alpha")
    lhs = _side(ctx, params, alpha, x, MultiIndex(()), [])
    return compare(lhs, Side.single(_a0_products(ctx, params, m)))


def c_dual_n1_residual(ctx: BracketContext, params: ParamsC, alpha: MultiIndex, n: int, x, y) -> Residual:
    """The C duality with a single dual block beta = (N), whose dual side is a very-well-poised V-series."""
    m = alpha.weight
    params.require_balance(ctx, n - m + 1)
    x = _points(ctx, x, alpha, "alpha")
    y = ctx.scalar(y)
    d = ctx.delta
    dual = params.dual(ctx)
    beta = MultiIndex((n,))
    lhs = _side(ctx, params, alpha, x, beta, [y]).scaled(_b_pair_products(ctx, dual, n))

    f = Factors(ctx, "C single block")
    for xi, ai in zip(x, alpha):
        f.up(y - xi + d / 2 - ai * d, n).down(y - xi + d / 2, n)
    for b in dual.a:
        f.up(y + d / 2 + b, n)
    f.down(2 * y + d, n)
    uppers = [y + d / 2 - b for b in dual.a]
    for xi, ai in zip(x, alpha):
        uppers.extend((d / 2 + y - xi, d / 2 + y + xi + ai * d))
    uppers.append(-n * d)
    rhs = v_side(ctx, 2 * y, uppers, n).scaled(_sign(n) * _a0_products(ctx, params, m) * f.value())
    return compare(lhs, rhs)


def v12_11_residual(ctx: BracketContext, params: ParamsC, m: int, n: int, x, y) -> Residual:
    """The one-block-each form: a 12V11 in x with M terms against a 12V11 in y with N terms."""
    params.require_balance(ctx, n - m + 1)
    x, y = ctx.scalar(x), ctx.scalar(y)
    d = ctx.delta
    dual = params.dual(ctx)
    a0 = params.a[0]

    lhs_upper = [x + d / 2 - a for a in params.a] + [x + y + d / 2 + n * d, x - y + d / 2, -m * d]
    lhs = v_side(ctx, 2 * x, lhs_upper, m)

    f = Factors(ctx, "12V11")
    for a in params.a[1:]:
        f.up(a0 + a, m).down((1 - m) * d - a0 - a, n)
    for b in dual.a:
        f.up(y + d / 2 + b, n)
    for a in params.a:
        f.down(x + d / 2 + a, m)
    f.up(2 * x + d, m).down(2 * y + d, n)
    f.up(y - x + d / 2 - m * d, n).down(y - x + d / 2, n)
    rhs_upper = [y + d / 2 - b for b in dual.a] + [y + x + d / 2 + m * d, y - x + d / 2, -n * d]
    rhs = v_side(ctx, 2 * y, rhs_upper, n).scaled(f.value())
    return compare(lhs, rhs)


def zero_formula_residual(ctx: BracketContext, alpha: MultiIndex, beta: MultiIndex, x, y) -> Residual:
    """Phi_alpha(x | (delta/2 + y_k + beta_k delta, delta/2 - y_k)) = 0 when |alpha| = |beta| + 1."""
    _require_weight(alpha, beta.weight + 1, "alpha")
    x = _points(ctx, x, alpha, "alpha")
    y = _points(ctx, y, beta, "beta")
    d = ctx.delta
    u = []
    for yk, bk in zip(y, beta):
        u.extend((d / 2 + yk + bk * d, d / 2 - yk))
    return vanishing(phi_side(ctx, PhiSpec(alpha=alpha, x=tuple(x), u=tuple(u))))


def c_vanishing_residual(
    ctx: BracketContext, a1, a3, lag: int, alpha: MultiIndex, beta: MultiIndex, x, y
) -> Residual:
    """For |alpha| = M > |beta| = N and 0 <= L < M - N the Phi series with upper arguments
    delta/2 + a_1 + L delta, delta/2 - a_1, delta/2 + a_3 + (M - N - L - 1) delta, delta/2 - a_3
    and the usual y-pairs vanishes."""
    m, n = alpha.weight, beta.weight
    if not 0 <= lag < m - n:
        raise BadIndex(f"need 0 <= L < M - N, got L={lag}, M={m}, N={n}")
    x = _points(ctx, x, alpha, "alpha")
    y = _points(ctx, y, beta, "beta")
    a1, a3 = ctx.scalar(a1), ctx.scalar(a3)
    d = ctx.delta
    u = [d / 2 + a1 + lag * d, d / 2 - a1, d / 2 + a3 + (m - n - lag - 1) * d, d / 2 - a3]
    for yk, bk in zip(y, beta):
        u.extend((d / 2 + yk + bk * d, d / 2 - yk))
    return vanishing(phi_side(ctx, PhiSpec(alpha=alpha, x=tuple(x), u=tuple(u))))


def _km_side(ctx: BracketContext, alpha: MultiIndex, x, beta: MultiIndex, y, u, r: int, v, s: int) -> Side:
    d = ctx.delta
    f = Factors(ctx, "Karlsson-Minton")
    f.times(shifted_factorial_pm(ctx, v + d, v, s)).times(shifted_factorial_pm(ctx, u + d, v, r))
    for yk, bk in zip(y, beta):
        f.times(shifted_factorial_pm(ctx, yk + d, v, bk))
    for xi, ai in zip(x, alpha):
        f.down_pm(xi + d / 2, v, ai)
    upper = [v, -v - s * d]
    for xi, ai in zip(x, alpha):
        upper.extend((d / 2 + xi + ai * d, d / 2 - xi))
    spec = PhiSpec(alpha=beta.append(r), x=tuple(y) + (u,), u=tuple(upper))
    return phi_side(ctx, spec).scaled(f.value())


def km_transform_residual(
    ctx: BracketContext, alpha: MultiIndex, beta: MultiIndex, r: int, s: int, x, y, u, v
) -> Residual:
    """The multiple Karlsson-Minton type transformation, symmetric under (u, r) <-> (v, s),
    for |alpha| = |beta| + r + s."""
    _require_weight(alpha, beta.weight + r + s, "alpha")
    x = _points(ctx, x, alpha, "alpha")
    y = _points(ctx, y, beta, "beta")
    u, v = ctx.scalar(u), ctx.scalar(v)
    lhs = _km_side(ctx, alpha, x, beta, y, u, r, v, s)
    rhs = _km_side(ctx, alpha, x, beta, y, v, s, u, r)
    return compare(lhs, rhs)


def _km_v_side(ctx: BracketContext, alpha: MultiIndex, x, u, r: int, v, s: int) -> Side:
    d = ctx.delta
    f = Factors(ctx, "Karlsson-Minton V")
    f.times(shifted_factorial_pm(ctx, v + d, v, s)).times(shifted_factorial_pm(ctx, u + d, v, r))
    upper = [u + v, u - v - s * d]
    for xi, ai in zip(x, alpha):
        f.down_pm(xi + d / 2, v, ai)
        upper.extend((u + d / 2 + xi + ai * d, u + d / 2 - xi))
    upper.append(-r * d)
    return v_side(ctx, 2 * u, upper, r).scaled(f.value())


def km_v_transform_residual(ctx: BracketContext, alpha: MultiIndex, r: int, s: int, x, u, v) -> Residual:
    """The beta = 0 case, both sides single V-series, |alpha| = r + s."""
    _require_weight(alpha, r + s, "alpha")
    x = _points(ctx, x, alpha, "alpha")
    u, v = ctx.scalar(u), ctx.scalar(v)
    return compare(_km_v_side(ctx, alpha, x, u, r, v, s), _km_v_side(ctx, alpha, x, v, s, u, r))


def km_v_sum_residual(ctx: BracketContext, alpha: MultiIndex, x, u, v) -> Residual:
    """V(2u; u + v, u - v, (u + delta/2 + x_i + alpha_i delta, u + delta/2 - x_i), -M delta) in closed form."""
    m = alpha.weight
    x = _points(ctx, x, alpha, "alpha")
    u, v = ctx.scalar(u), ctx.scalar(v)
    d = ctx.delta
    upper = [u + v, u - v]
    for xi, ai in zip(x, alpha):
        upper.extend((u + d / 2 + xi + ai * d, u + d / 2 - xi))
    upper.append(-m * d)
    lhs = v_side(ctx, 2 * u, upper, m)
    f = Factors(ctx, "Karlsson-Minton sum")
    f.times(shifted_factorial_pm(ctx, u + d, u, m))
    f.down_pm(u + d, v, m)
    for xi, ai in zip(x, alpha):
        f.times(shifted_factorial_pm(ctx, xi + d / 2, v, ai))
        f.down_pm(xi + d / 2, u, ai)
    return compare(lhs, Side.single(f.value()))


def phi_v_bridge_residual(ctx: BracketContext, n: int, x, u: Sequence) -> Residual:
    """Phi_(N)(x | u) = V(2x; x + u_1, ..., x + u_n, -N delta) summed to N."""
    x = ctx.scalar(x)
    u = [ctx.scalar(v) for v in u]
    lhs = phi_side(ctx, PhiSpec(alpha=MultiIndex((n,)), x=(x,), u=tuple(u)))
    rhs = v_side(ctx, 2 * x, [x + v for v in u] + [-n * ctx.delta], n)
    return compare(lhs, rhs)
