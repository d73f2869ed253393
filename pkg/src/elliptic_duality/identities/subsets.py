# identities/subsets.py

import logging
from typing import Callable, Sequence

from ..bracket import BracketContext, bracket, bracket_pm, shifted_factorial
from ..combinatorics import enumerate_partitions2, enumerate_partitions3
from ..exceptions import BadIndex, SizeLimit
from ..models.indices import PLUS, ZERO, SignPartition
from ..models.params import ParamsBC, ParamsC
from ..operators import coeff_A, coeff_B_minus, coeff_B_plus
from ..series import Factors
from ..utils.residuals import Residual, Side, compare

logger = logging.getLogger(__name__)

Coefficient = Callable[[object, int], object]


def _scalars(ctx: BracketContext, values: Sequence):
    return [ctx.scalar(v) for v in values]


def cauchy_det_residual(ctx: BracketContext, z: Sequence, w: Sequence) -> Residual:
    """det(1/[z_i +- w_j]) against (-1)^C(N,2) prod_{i<j} [z_i +- z_j][w_i +- w_j] / prod_{i,j} [z_i +- w_j].

    Raises:
        NearSingularity: If some [z_i +- w_j] is below the floor.
    """
    n = len(z)
    if len(w) != n:
        raise BadIndex(f"Cauchy determinant needs equally many z and w, got {n} and {len(w)}")
    if n > ctx.settings.max_size:
        raise SizeLimit(f"Cauchy determinant of size {n} exceeds the configured cap {ctx.settings.max_size}")
    z, w = _scalars(ctx, z), _scalars(ctx, w)
    rows = [[Factors(ctx, "Cauchy").down_pm(zi, wj).value() for wj in w] for zi in z]
    lhs = ctx.arith.det(rows)

    f = Factors(ctx, "Cauchy")
    for i in range(n):
        for j in range(i + 1, n):
            f.up_pm(z[i], z[j]).up_pm(w[i], w[j])
        for j in range(n):
            f.down_pm(z[i], w[j])
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return compare(Side.single(lhs), Side.single(sign * f.value()))


def subset_term(
    ctx: BracketContext, coeff: Coefficient, z: Sequence, w: Sequence, partition: SignPartition, step, label: str
):
    """One summand of a subset duality: the chosen coefficients times the shift ratio of the Cauchy determinant.

    Every index moves by sign(i) * step; unchosen indices stay put but still enter the pair products.
    """
    signs = partition.signs()
    value = ctx.one
    for i in sorted(partition.chosen):
        value *= coeff(z[i], signs[i])
    moved = [zi + s * step for zi, s in zip(z, signs)]
    f = Factors(ctx, label)
    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            if signs[i] != ZERO or signs[j] != ZERO:
                f.up_pm(moved[i], moved[j]).down_pm(z[i], z[j])
        if signs[i] != ZERO:
            for wk in w:
                f.up_pm(z[i], wk).down_pm(moved[i], wk)
    return value * f.value()


def bc_subset_side(ctx: BracketContext, params: ParamsBC, z: Sequence, w: Sequence, r: int) -> Side:
    """The level-r sum over all (I_+, I_0, I_-) with |I| = r of the BC subset summands."""
    z, w = _scalars(ctx, z), _scalars(ctx, w)

    def coeff(x, sign):
        return coeff_A(ctx, params, x, sign)

    terms = [
        subset_term(ctx, coeff, z, w, part, ctx.delta, "BC subset")
        for part in enumerate_partitions3(len(z), r, ctx.settings)
    ]
    return Side.of_terms(ctx, terms)


def c_subset_side(ctx: BracketContext, params: ParamsC, z: Sequence, w: Sequence, r: int) -> Side:
    """The level-r sum over all (I_+, I_-) with |I| = r of the C subset summands, shifts of delta/2."""
    z, w = _scalars(ctx, z), _scalars(ctx, w)

    def coeff(x, sign):
        return coeff_B_plus(ctx, params, x) if sign == PLUS else coeff_B_minus(ctx, params, x)

    terms = [
        subset_term(ctx, coeff, z, w, part, ctx.delta / 2, "C subset")
        for part in enumerate_partitions2(len(z), r, ctx.settings)
    ]
    return Side.of_terms(ctx, terms)


def bc_subset_residual(ctx: BracketContext, params: ParamsBC, z: Sequence, w: Sequence, r: int) -> Residual:
    """Level-r BC duality on subsets under sum(a) = 4 delta, b = delta - a, same c on both sides.

    Raises:
        UnbalancedParams: If the balancing condition fails.
        WrongCase: Outside the elliptic case (the I_0 terms need A^0).
    """
    ctx.require_elliptic("the BC subset duality")
    if len(z) != len(w):
        raise BadIndex(f"BC subset duality needs equally many z and w, got {len(z)} and {len(w)}")
    params.require_balance(ctx, 4)
    lhs = bc_subset_side(ctx, params, z, w, r)
    rhs = bc_subset_side(ctx, params.dual(ctx), w, z, r)
    return compare(lhs, rhs)


def c_subset_residual(ctx: BracketContext, params: ParamsC, z: Sequence, w: Sequence, r: int) -> Residual:
    """Level-r C duality on subsets under sum(a) = delta with b = delta/2 - a and the (-1)^r sign."""
    if len(z) != len(w):
        raise BadIndex(f"C subset duality needs equally many z and w, got {len(z)} and {len(w)}")
    params.require_balance(ctx, 1)
    lhs = c_subset_side(ctx, params, z, w, r)
    rhs = c_subset_side(ctx, params.dual(ctx), w, z, r)
    return compare(lhs, rhs.scaled(-1 if r % 2 else 1))


def halfperiod_constant(ctx: BracketContext):
    """K = prod_{s=1..3} [-omega_s/2] / 2, the factor relating A^+- under the C specialization to B^+-."""
    ctx.require_elliptic("the half-period constant")
    value = ctx.one
    for s in (1, 2, 3):
        value *= bracket(ctx, -ctx.omega[s] / 2)
    return value / 2


def c_specialized_bc_params(ctx_bc: BracketContext, params: ParamsC, c=None) -> ParamsBC:
    """a_4..a_7 = -(omega_r - delta)/2 at the BC step, which makes every A^0_r vanish."""
    tail = [-(ctx_bc.omega[r] - ctx_bc.delta) / 2 for r in range(4)]
    return ParamsBC.of(ctx_bc, list(params.a) + tail, c)


def c_subset_from_bc_residual(ctx: BracketContext, params: ParamsC, z: Sequence, w: Sequence, r: int) -> Residual:
    """The C subset sum times K^r against the BC subset sum at half the step with the C specialization."""
    ctx.require_elliptic("the C specialization of the BC subset duality")
    params.require_balance(ctx, 1)
    ctx_bc = ctx.with_delta(ctx.delta / 2)
    bc_params = c_specialized_bc_params(ctx_bc, params)
    lhs = c_subset_side(ctx, params, z, w, r).scaled(halfperiod_constant(ctx) ** r)
    rhs = bc_subset_side(ctx_bc, bc_params, z, w, r)
    return compare(lhs, rhs)


def _pair_products(ctx: BracketContext, values: Sequence, k: int, start: int = 0):
    value = ctx.one
    for p in range(len(values)):
        for q in range(p + 1, len(values)):
            if p >= start:
                value *= shifted_factorial(ctx, values[p] + values[q], k)
    return value


def c_subset_mn_residual(ctx: BracketContext, params: ParamsC, z: Sequence, w: Sequence) -> Residual:
    """Full-level C subset duality for |z| = M, |w| = N under sum(a) = (N - M + 1) delta.

    prod_{1<=p<q<=3} [b_p + b_q]_N times the z-sum equals (-1)^N prod_{p=1..3} [a_0 + a_p]_M times the w-sum.
    """
    m, n = len(z), len(w)
    params.require_balance(ctx, n - m + 1)
    dual = params.dual(ctx)
    lhs = c_subset_side(ctx, params, z, w, m).scaled(_pair_products(ctx, dual.a, n, start=1))
    prefactor = ctx.one
    for a in params.a[1:]:
        prefactor *= shifted_factorial(ctx, params.a[0] + a, m)
    rhs = c_subset_side(ctx, dual, w, z, n).scaled((-1 if n % 2 else 1) * prefactor)
    return compare(lhs, rhs)


def excess_prefactor(ctx: BracketContext, params: ParamsBC, k: int):
    value = ctx.one
    for a in params.a[1:7]:
        value *= shifted_factorial(ctx, params.a[0] + a, k)
    return value


def require_excess(ctx: BracketContext, params: ParamsBC, m: int, n: int) -> None:
    if m < n:
        raise BadIndex(f"the excess BC duality needs M >= N, got M={m}, N={n}")
    params.require_balance(ctx, 4 - 2 * m + 2 * n)
    gap = float(abs(params.a[7] - params.a[0] - ctx.delta))
    if gap > ctx.settings.balance_tol * max(1.0, float(abs(ctx.delta)), float(abs(params.a[0]))):
        raise BadIndex(f"the excess BC duality needs a_7 = a_0 + delta, off by {gap:.3e}")


def bc_subset_mn_residual(ctx: BracketContext, params: ParamsBC, z: Sequence, w: Sequence) -> Residual:
    """Full-level BC subset duality for |z| = M >= |w| = N, sum(a) = (4 - 2M + 2N) delta and a_7 = a_0 + delta.

    The z-side uses c = a_0, the w-side the excess dual parameters with c = b_0.
    """
    ctx.require_elliptic("the BC subset duality")
    m, n = len(z), len(w)
    require_excess(ctx, params, m, n)
    lhs = bc_subset_side(ctx, params.with_constant_c(params.a[0]), z, w, m)
    rhs = bc_subset_side(ctx, params.excess_dual(ctx), w, z, n)
    return compare(lhs, rhs.scaled(excess_prefactor(ctx, params, m - n)))


def bc_subset_sum_residual(ctx: BracketContext, params: ParamsBC, z: Sequence) -> Residual:
    """The w-free case: the full-level BC subset sum equals prod_{p=1..6} [a_0 + a_p]_M."""
    ctx.require_elliptic("the BC subset summation")
    m = len(z)
    require_excess(ctx, params, m, 0)
    lhs = bc_subset_side(ctx, params.with_constant_c(params.a[0]), z, (), m)
    return compare(lhs, Side.single(excess_prefactor(ctx, params, m)))
