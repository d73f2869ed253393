# operators.py

import logging
from typing import Callable, List, Sequence

from .bracket import BracketContext, bracket, bracket_pm
from .combinatorics import gap_sequences
from .exceptions import BadIndex, UnbalancedParams
from .models.params import ParamsBC, ParamsC
from .utils.residuals import Residual, Side, compare, quotient, vanishing
from .utils.summation import accumulate

logger = logging.getLogger(__name__)

TestFunction = Callable[[object], object]


def _brackets(ctx: BracketContext, values) -> List:
    return [bracket(ctx, v) for v in values]


# --- BC_1 coefficients -------------------------------------------------------------------------


def coeff_A_plus(ctx: BracketContext, params: ParamsBC, x):
    """A^+(x; a) = prod_p [x + a_p] / ([2x][2x + delta])."""
    x = ctx.scalar(x)
    return quotient(
        ctx, _brackets(ctx, (x + a for a in params.a)), _brackets(ctx, (2 * x, 2 * x + ctx.delta)), "A+"
    )


def coeff_A_minus(ctx: BracketContext, params: ParamsBC, x):
    """A^-(x; a) = prod_p [x - a_p] / ([2x][2x - delta])."""
    x = ctx.scalar(x)
    return quotient(
        ctx, _brackets(ctx, (x - a for a in params.a)), _brackets(ctx, (2 * x, 2 * x - ctx.delta)), "A-"
    )


def coeff_A0_r(ctx: BracketContext, params: ParamsBC, x, r: int, c=None):
    """The r-th summand A^0_r(x; a | c) of A^0; `c` defaults to params.c[r].

    Raises:
        WrongCase: Outside the elliptic case.
        BadIndex: If r is not in 0..3.
    """
    ctx.require_elliptic("A^0")
    if r not in (0, 1, 2, 3):
        raise BadIndex(f"half-period index must be 0..3, got {r}")
    x = ctx.scalar(x)
    c = ctx.scalar(params.c[r] if c is None else c)
    w, eta = ctx.omega[r], ctx.eta[r]
    h = (w - ctx.delta) / 2
    total = sum(params.a, ctx.zero)
    prefactor = ctx.eps[r] * ctx.e((ctx.delta - w / 2 - total / 2) * eta)
    numer = [bracket(ctx, x + c), bracket(ctx, x - c)] + _brackets(ctx, (h + a for a in params.a))
    denom = [bracket(ctx, h + x), bracket(ctx, h - x), bracket(ctx, h + c), bracket(ctx, h - c)]
    return prefactor * quotient(ctx, numer, denom, f"A0_{r}") / 2


def coeff_A0(ctx: BracketContext, params: ParamsBC, x):
    """A^0(x; a | c) = sum over r of A^0_r(x; a | c_r)."""
    return accumulate(ctx, [coeff_A0_r(ctx, params, x, r) for r in range(4)])


def coeff_A(ctx: BracketContext, params: ParamsBC, x, sign: int):
    """A^eps for eps in {+1, 0, -1}."""
    if sign > 0:
        return coeff_A_plus(ctx, params, x)
    if sign < 0:
        return coeff_A_minus(ctx, params, x)
    return coeff_A0(ctx, params, x)


def shifted_coeff(ctx: BracketContext, params: ParamsBC, x, sign: int, k: int):
    """A^eps(x)_k = A^eps(x) A^eps(x + delta) ... A^eps(x + (k-1) delta)."""
    if k < 0:
        raise BadIndex(f"coefficient product length must be non-negative, got {k}")
    x = ctx.scalar(x)
    value = ctx.one
    for i in range(k):
        value *= coeff_A(ctx, params, x + i * ctx.delta, sign)
    return value


def L_terms(ctx: BracketContext, params: ParamsBC, x, f: TestFunction) -> List:
    """The summands of L(x; a | c) f: the two shifts and the four A^0_r pieces."""
    x = ctx.scalar(x)
    fx = f(x)
    return [
        coeff_A_plus(ctx, params, x) * f(x + ctx.delta),
        coeff_A_minus(ctx, params, x) * f(x - ctx.delta),
    ] + [coeff_A0_r(ctx, params, x, r) * fx for r in range(4)]


def apply_L(ctx: BracketContext, params: ParamsBC, x, f: TestFunction):
    """(L(x; a | c) f)(x) = A^+(x) f(x + delta) + A^-(x) f(x - delta) + A^0(x) f(x)."""
    return accumulate(ctx, L_terms(ctx, params, x, f))


# --- C_1 coefficients --------------------------------------------------------------------------


def coeff_B_plus(ctx: BracketContext, params: ParamsC, x):
    """B^+(x; a) = prod_p [x + a_p] / [2x]."""
    x = ctx.scalar(x)
    return quotient(ctx, _brackets(ctx, (x + a for a in params.a)), [bracket(ctx, 2 * x)], "B+")


def coeff_B_minus(ctx: BracketContext, params: ParamsC, x):
    """B^-(x; a) = -prod_p [x - a_p] / [2x]."""
    x = ctx.scalar(x)
    return -quotient(ctx, _brackets(ctx, (x - a for a in params.a)), [bracket(ctx, 2 * x)], "B-")


def R_terms(ctx: BracketContext, params: ParamsC, x, f: TestFunction) -> List:
    x = ctx.scalar(x)
    half = ctx.delta / 2
    return [coeff_B_plus(ctx, params, x) * f(x + half), coeff_B_minus(ctx, params, x) * f(x - half)]


def apply_R(ctx: BracketContext, params: ParamsC, x, f: TestFunction):
    """(R(x; a) f)(x) = B^+(x) f(x + delta/2) + B^-(x) f(x - delta/2)."""
    return accumulate(ctx, R_terms(ctx, params, x, f))


# --- the banded coefficient C_sigma ----------------------------------------------------------


def _coefficient_rows(ctx: BracketContext, params: ParamsBC, z, sigma: int):
    if sigma < 0:
        raise BadIndex(f"sigma must be non-negative, got {sigma}")
    z = ctx.scalar(z)
    points = [z + k * ctx.delta for k in range(sigma)]
    plus = [coeff_A_plus(ctx, params, p) for p in points]
    zero = [coeff_A0(ctx, params, p) for p in points]
    minus = [coeff_A_minus(ctx, params, p) for p in points]
    return plus, zero, minus


def c_sigma_sum(ctx: BracketContext, params: ParamsBC, z, sigma: int):
    """C_sigma(z; a | c) as the signed sum over gap-2 sequences 0 < xi_1 < ... < xi_r < sigma."""
    plus, zero, minus = _coefficient_rows(ctx, params, z, sigma)
    terms = []
    for xis in gap_sequences(0, sigma):
        paired = set()
        term = ctx.one
        for xi in xis:
            term *= plus[xi - 1] * minus[xi]
            paired.update((xi - 1, xi))
        for k in range(sigma):
            if k not in paired:
                term *= zero[k]
        terms.append(term if len(xis) % 2 == 0 else -term)
    return accumulate(ctx, terms)


def c_sigma_det(ctx: BracketContext, params: ParamsBC, z, sigma: int):
    """C_sigma as the tridiagonal determinant with A^0 on, A^- above and A^+ below the diagonal."""
    plus, zero, minus = _coefficient_rows(ctx, params, z, sigma)
    rows = [[ctx.zero] * sigma for _ in range(sigma)]
    for k in range(sigma):
        rows[k][k] = zero[k]
        if k + 1 < sigma:
            rows[k][k + 1] = minus[k + 1]
            rows[k + 1][k] = plus[k]
    return ctx.arith.det(rows)


def c_sigma_rec(ctx: BracketContext, params: ParamsBC, z, sigma: int):
    """C_sigma by F_{s+2} = F_{s+1} A^0_{s+1} - F_s A^+_s A^-_{s+1}, F_0 = 1, F_1 = A^0_0."""
    plus, zero, minus = _coefficient_rows(ctx, params, z, sigma)
    previous, current = ctx.one, ctx.one
    for k in range(sigma):
        if k == 0:
            previous, current = current, zero[0]
        else:
            previous, current = current, current * zero[k] - previous * plus[k - 1] * minus[k]
    return current


# --- kernel and constant identities ----------------------------------------------------------


def kernel_residual_bc1(ctx: BracketContext, params: ParamsBC, x, y) -> Residual:
    """L(x; a | c) 1/[x +- y] against L(y; b | c) 1/[x +- y] under sum(a) = 4 delta."""
    params.require_balance(ctx, 4)
    x, y = ctx.scalar(x), ctx.scalar(y)
    lhs = Side.of_terms(ctx, L_terms(ctx, params, x, lambda t: 1 / bracket_pm(ctx, t, y)))
    rhs = Side.of_terms(ctx, L_terms(ctx, params.dual(ctx), y, lambda t: 1 / bracket_pm(ctx, x, t)))
    return compare(lhs, rhs)


def constant_residual_bc1(ctx: BracketContext, params: ParamsBC, x) -> Residual:
    """L(x; a | a_0) 1 = prod_{p >= 1} [a_0 + a_p] / [2 a_0 + delta] under sum(a) = 2 delta."""
    params.require_balance(ctx, 2)
    a0 = params.a[0]
    local = params.with_constant_c(a0)
    lhs = Side.of_terms(ctx, L_terms(ctx, local, x, lambda t: ctx.one))
    rhs = quotient(
        ctx, _brackets(ctx, (a0 + a for a in params.a[1:])), [bracket(ctx, 2 * a0 + ctx.delta)], "constant BC1"
    )
    return compare(lhs, Side.single(rhs))


def kernel_residual_c1(ctx: BracketContext, params: ParamsC, x, y) -> Residual:
    """R(x; a) 1/[x +- y] against R(y; b) 1/[y +- x] under sum(a) = delta."""
    params.require_balance(ctx, 1)
    x, y = ctx.scalar(x), ctx.scalar(y)
    lhs = Side.of_terms(ctx, R_terms(ctx, params, x, lambda t: 1 / bracket_pm(ctx, t, y)))
    rhs = Side.of_terms(ctx, R_terms(ctx, params.dual(ctx), y, lambda t: 1 / bracket_pm(ctx, t, x)))
    return compare(lhs, rhs)


def constant_residual_c1(ctx: BracketContext, params: ParamsC, x) -> Residual:
    """R(x; a) 1 = prod_{p >= 1} [a_0 + a_p] under sum(a) = 0."""
    params.require_balance(ctx, 0)
    a0 = params.a[0]
    lhs = Side.of_terms(ctx, R_terms(ctx, params, x, lambda t: ctx.one))
    rhs = ctx.one
    for a in params.a[1:]:
        rhs *= bracket(ctx, a0 + a)
    return compare(lhs, Side.single(rhs))


def superfluous_c_residual(ctx: BracketContext, params: ParamsBC, x, c, c2, r: int) -> Residual:
    """A^0_r(x; a | c) - A^0_r(x; a | c') = A^0_r(c'; a | c)."""
    lhs = Side.of_terms(ctx, [coeff_A0_r(ctx, params, x, r, c), -coeff_A0_r(ctx, params, x, r, c2)])
    return compare(lhs, Side.single(coeff_A0_r(ctx, params, c2, r, c)))


def partial_fraction_residual(ctx: BracketContext, z, xs: Sequence, ys: Sequence) -> Residual:
    """[c] prod_j [z - y_j]/[z - x_j] against its expansion in simple fractions, c = sum(x_i - y_i)."""
    if len(xs) != len(ys) or not xs:
        raise BadIndex(f"partial fractions need two non-empty lists of equal length, got {len(xs)} and {len(ys)}")
    z = ctx.scalar(z)
    xs = [ctx.scalar(v) for v in xs]
    ys = [ctx.scalar(v) for v in ys]
    c = sum(xs, ctx.zero) - sum(ys, ctx.zero)
    lhs = bracket(ctx, c) * quotient(
        ctx, _brackets(ctx, (z - y for y in ys)), _brackets(ctx, (z - x for x in xs)), "partial fraction"
    )
    terms = []
    for i, xi in enumerate(xs):
        numer = [bracket(ctx, z - xi + c)] + _brackets(ctx, (xi - y for y in ys))
        denom = [bracket(ctx, z - xi)] + _brackets(ctx, (xi - xj for j, xj in enumerate(xs) if j != i))
        terms.append(quotient(ctx, numer, denom, "partial fraction"))
    return compare(Side.single(lhs), Side.of_terms(ctx, terms))


def lemma_general_residual(ctx: BracketContext, a_list: Sequence, d_list: Sequence, x, y) -> Residual:
    """Vanishing of the five-group sum built from m+4 parameters a and m parameters d.

    Requires sum(a) - sum(d) = 2 delta; b_p = delta - a_p and e_r = delta - d_r.

    Raises:
        UnbalancedParams: If the balancing condition fails.
    """
    m = len(d_list)
    if len(a_list) != m + 4:
        raise BadIndex(f"expected {m + 4} a-parameters for {m} d-parameters, got {len(a_list)}")
    a = [ctx.scalar(v) for v in a_list]
    d = [ctx.scalar(v) for v in d_list]
    x, y = ctx.scalar(x), ctx.scalar(y)
    delta = ctx.delta
    defect = float(abs(sum(a, ctx.zero) - sum(d, ctx.zero) - 2 * delta))
    scale = max([1.0, float(abs(delta))] + [float(abs(v)) for v in a + d])
    if defect > ctx.settings.balance_tol * scale:
        raise UnbalancedParams(f"sum(a) - sum(d) misses 2*delta by {defect:.3e}")
    b = [delta - v for v in a]
    e = [delta - v for v in d]
    kernel = bracket_pm(ctx, x, y)

    def edge(t, params, shifts, two_t, cross):
        numer = _brackets(ctx, (t + p for p in params)) + [kernel]
        denom = [bracket(ctx, two_t)] + _brackets(ctx, (t + s for s in shifts)) + [cross]
        return quotient(ctx, numer, denom, "general identity")

    terms = [
        edge(x, a, d, 2 * x, bracket_pm(ctx, x + delta, y)),
        edge(-x, a, d, -2 * x, bracket_pm(ctx, x - delta, y)),
        edge(y, b, e, 2 * y, bracket_pm(ctx, x, y + delta)),
        edge(-y, b, e, -2 * y, bracket_pm(ctx, x, y - delta)),
    ]
    for r in range(m):
        numer = _brackets(ctx, (p - d[r] for p in a)) + [kernel]
        denom = _brackets(ctx, (d[s] - d[r] for s in range(m) if s != r))
        denom += [bracket_pm(ctx, -d[r], x), bracket_pm(ctx, -e[r], y)]
        terms.append(quotient(ctx, numer, denom, "general identity"))
    return vanishing(Side.of_terms(ctx, terms))
