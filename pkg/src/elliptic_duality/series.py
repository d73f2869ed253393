# series.py

import logging
from dataclasses import dataclass, field
from typing import Any, List, Sequence, Tuple

from .bracket import BracketContext, bracket
from .combinatorics import enumerate_box, enumerate_nested_box
from .exceptions import BadIndex, NonTerminating
from .models.indices import MultiIndex
from .models.params import ParamsBC
from .operators import c_sigma_rec, shifted_coeff
from .utils.residuals import Side, quotient

logger = logging.getLogger(__name__)


class Factors:
    """Numerator and denominator brackets of one summand, combined through a guarded quotient."""

    def __init__(self, ctx: BracketContext, label: str):
        self.ctx = ctx
        self.label = label
        self.numer: List[Any] = []
        self.denom: List[Any] = []

    def up(self, u, k: int = 1) -> "Factors":
        """Multiply by [u]_k."""
        self.numer.extend(bracket(self.ctx, u + i * self.ctx.delta) for i in range(k))
        return self

    def down(self, u, k: int = 1) -> "Factors":
        """Divide by [u]_k."""
        self.denom.extend(bracket(self.ctx, u + i * self.ctx.delta) for i in range(k))
        return self

    def up_pm(self, u, v, k: int = 1) -> "Factors":
        return self.up(u + v, k).up(u - v, k)

    def down_pm(self, u, v, k: int = 1) -> "Factors":
        return self.down(u + v, k).down(u - v, k)

    def times(self, value) -> "Factors":
        self.numer.append(value)
        return self

    def value(self):
        return quotient(self.ctx, self.numer, self.denom, self.label)


@dataclass(frozen=True)
class PhiSpec:
    """Arguments of Phi_alpha(x | u): one base point per block and any number of upper arguments."""
    alpha: MultiIndex
    x: Tuple[Any, ...]
    u: Tuple[Any, ...] = field(default=())

    def __post_init__(self):
        if len(self.x) != len(self.alpha):
            raise BadIndex(f"Phi needs {len(self.alpha)} base points, got {len(self.x)}")


def phi_term(ctx: BracketContext, spec: PhiSpec, mu: MultiIndex):
    """The summand of Phi_alpha(x | u) at 0 <= mu <= alpha."""
    delta = ctx.delta
    alpha = spec.alpha
    x = [ctx.scalar(v) for v in spec.x]
    u = [ctx.scalar(v) for v in spec.u]
    m = len(x)
    f = Factors(ctx, "Phi")
    for i in range(m):
        f.up(2 * x[i] + 2 * mu[i] * delta).down(2 * x[i])
        for j in range(i + 1, m):
            f.up_pm(x[i] + mu[i] * delta, x[j] + mu[j] * delta).down_pm(x[i], x[j])
        for j in range(m):
            f.up(x[i] + x[j], mu[i]).up(x[i] - x[j] - alpha[j] * delta, mu[i])
            f.down(x[i] + x[j] + (alpha[j] + 1) * delta, mu[i]).down(x[i] - x[j] + delta, mu[i])
        for uk in u:
            f.up(x[i] + uk, mu[i]).down(x[i] - uk + delta, mu[i])
    return f.value()


def phi_terms(ctx: BracketContext, spec: PhiSpec) -> List:
    return [phi_term(ctx, spec, mu) for mu in enumerate_box(spec.alpha, ctx.settings)]


def phi_side(ctx: BracketContext, spec: PhiSpec) -> Side:
    return Side.of_terms(ctx, phi_terms(ctx, spec))


def phi_alpha(ctx: BracketContext, spec: PhiSpec):
    """Phi_alpha(x | u), the sum over the box 0 <= mu <= alpha.

    Raises:
        NearSingularity: If a summand denominator falls below the floor.
    """
    return phi_side(ctx, spec).value


def _witness(ctx: BracketContext, a_list: Sequence, kmax: int) -> bool:
    target = -kmax * ctx.delta
    return any(float(abs(ctx.scalar(a) - target)) <= ctx.settings.witness_tol for a in a_list)


def v_term(ctx: BracketContext, a0, a_list: Sequence, k: int):
    """The k-th summand [a0 + 2k delta]/[a0] [a0]_k/[delta]_k prod_i [a_i]_k/[delta + a0 - a_i]_k."""
    a0 = ctx.scalar(a0)
    f = Factors(ctx, "V").up(a0 + 2 * k * ctx.delta).down(a0).up(a0, k).down(ctx.delta, k)
    for a in a_list:
        a = ctx.scalar(a)
        f.up(a, k).down(ctx.delta + a0 - a, k)
    return f.value()


def v_side(ctx: BracketContext, a0, a_list: Sequence, kmax: int, allow_truncation: bool = False) -> Side:
    if kmax < 0:
        raise BadIndex(f"kmax must be non-negative, got {kmax}")
    if not allow_truncation and not _witness(ctx, a_list, kmax):
        raise NonTerminating(f"no parameter equals -{kmax}*delta; pass allow_truncation to sum anyway")
    return Side.of_terms(ctx, [v_term(ctx, a0, a_list, k) for k in range(kmax + 1)])


def v_series(ctx: BracketContext, a0, a_list: Sequence, kmax: int, allow_truncation: bool = False):
    """The terminating very-well-poised series V(a0; a_1, ..., a_r) summed over k = 0..kmax.

    One of the a_i must equal -kmax*delta up to the witness tolerance, which makes
    every later summand vanish; `allow_truncation` skips that check.

    Raises:
        NonTerminating: If no termination witness is present.
    """
    return v_side(ctx, a0, a_list, kmax, allow_truncation).value


def _bc_geometry(ctx: BracketContext, alpha: MultiIndex, x, beta: MultiIndex, y, mu: MultiIndex, nu: MultiIndex):
    """The bracket groups of F^alpha_{mu nu} that do not involve the operator coefficients."""
    d = ctx.delta
    m, n = len(alpha), len(beta)
    f = Factors(ctx, "F")
    for i in range(m):
        f.up(2 * x[i] + 2 * (nu[i] - 1) * d).down(2 * x[i] - 2 * d)
        f.up(2 * x[i] + 2 * mu[i] * d).down(2 * x[i] + 2 * alpha[i] * d)
        for j in range(i + 1, m):
            f.up_pm(x[i] + nu[i] * d - d, x[j] + nu[j] * d - d).down_pm(x[i] - d, x[j] - d)
            f.up_pm(x[i] + mu[i] * d, x[j] + mu[j] * d).down_pm(x[i] + alpha[i] * d, x[j] + alpha[j] * d)
        tail = alpha[i] - mu[i]
        for j in range(m):
            f.up_pm(x[i] - d, x[j] + alpha[j] * d).down_pm(x[i] - d, x[j] + mu[j] * d)
            f.up_pm(x[i] + nu[i] * d - d, x[j] + mu[j] * d).down_pm(x[i] + nu[i] * d - d, x[j] + alpha[j] * d)
            f.up(x[i] + x[j] - 2 * d, nu[i]).down(x[i] + x[j] + (alpha[j] - 1) * d, nu[i])
            f.up(x[i] - x[j] - alpha[j] * d, nu[i]).down(x[i] - x[j] + d, nu[i])
            f.up(-x[i] - x[j] - (alpha[i] + alpha[j]) * d, tail).down(-x[i] - x[j] - (alpha[i] - 1) * d, tail)
            f.up(-x[i] + x[j] - alpha[i] * d, tail).down(-x[i] + x[j] + (alpha[j] - alpha[i] + 1) * d, tail)
        for k in range(n):
            f.up(x[i] + y[k] + (beta[k] - 1) * d, nu[i]).down(x[i] + y[k] - d, nu[i])
            f.up(x[i] - y[k], nu[i]).down(x[i] - y[k] - beta[k] * d, nu[i])
            f.up(-x[i] - y[k] - (alpha[i] - 1) * d, tail).down(-x[i] - y[k] - (alpha[i] + beta[k] - 1) * d, tail)
            f.up(-x[i] + y[k] - (alpha[i] - beta[k]) * d, tail).down(-x[i] + y[k] - alpha[i] * d, tail)
    return f.value()


def _check_nested(alpha: MultiIndex, mu: MultiIndex, nu: MultiIndex) -> None:
    if not (len(nu) == len(mu) == len(alpha) and nu <= mu and mu <= alpha):
        raise BadIndex(f"need 0 <= nu <= mu <= alpha, got nu={nu}, mu={mu}, alpha={alpha}")


def _bc_sign(alpha: MultiIndex, mu: MultiIndex, nu: MultiIndex) -> int:
    return -1 if (nu.weight + alpha.weight - mu.weight) % 2 else 1


def f_mu_nu(
    ctx: BracketContext,
    params: ParamsBC,
    alpha: MultiIndex,
    beta: MultiIndex,
    x: Sequence,
    y: Sequence,
    mu: MultiIndex,
    nu: MultiIndex,
):
    """F^alpha_{mu nu}(x; y), the specialized subset summand of the increasing sign sequence.

    The blocks carry A^-(x_i)_{nu_i}, then A^0 over the middle positions, then A^+ up to alpha_i.
    """
    _check_nested(alpha, mu, nu)
    x = [ctx.scalar(v) for v in x]
    y = [ctx.scalar(v) for v in y]
    d = ctx.delta
    coeffs = ctx.one
    for i in range(len(alpha)):
        coeffs *= shifted_coeff(ctx, params, x[i], -1, nu[i])
        coeffs *= shifted_coeff(ctx, params, x[i] + nu[i] * d, 0, mu[i] - nu[i])
        coeffs *= shifted_coeff(ctx, params, x[i] + mu[i] * d, 1, alpha[i] - mu[i])
    return _bc_sign(alpha, mu, nu) * coeffs * _bc_geometry(ctx, alpha, x, beta, y, mu, nu)


def bc_term(
    ctx: BracketContext,
    params: ParamsBC,
    alpha: MultiIndex,
    x: Sequence,
    beta: MultiIndex,
    y: Sequence,
    mu: MultiIndex,
    nu: MultiIndex,
):
    """One (nu, mu) summand of the multi-index BC sum: F^alpha_{mu nu} with its A^0 run replaced by C_{mu - nu}."""
    x = [ctx.scalar(v) for v in x]
    y = [ctx.scalar(v) for v in y]
    d = ctx.delta
    coeffs = ctx.one
    for i in range(len(alpha)):
        coeffs *= shifted_coeff(ctx, params, x[i], -1, nu[i])
        coeffs *= shifted_coeff(ctx, params, x[i] + mu[i] * d, 1, alpha[i] - mu[i])
        coeffs *= c_sigma_rec(ctx, params, x[i] + nu[i] * d, mu[i] - nu[i])
    return _bc_sign(alpha, mu, nu) * coeffs * _bc_geometry(ctx, alpha, x, beta, y, mu, nu)


def bc_side(
    ctx: BracketContext, params: ParamsBC, alpha: MultiIndex, x: Sequence, beta: MultiIndex, y: Sequence
) -> Side:
    """The nested-box sum over 0 <= nu <= mu <= alpha of one side of the multi-index BC duality."""
    if len(x) != len(alpha) or len(y) != len(beta):
        raise BadIndex("base points must match the multi-index lengths")
    terms = [
        bc_term(ctx, params, alpha, x, beta, y, mu, nu) for nu, mu in enumerate_nested_box(alpha, ctx.settings)
    ]
    return Side.of_terms(ctx, terms)
