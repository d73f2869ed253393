# bracket.py

import cmath
import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Optional, Sequence, Tuple

import mpmath
import numpy

from .config import Settings
from .exceptions import BadIndex, DegenerateLattice, DeltaInLattice, ScalarOverflow, SelfTestFailed, WrongCase
from .utils.numbers import split_complex
from .utils.residuals import Residual, Side, compare

logger = logging.getLogger(__name__)

# complex at double precision, an mpc of the context's own mpmath context at extended precision
ComplexScalar = Any

# fixed probe point (in units of omega1) for the construction self-test
_PROBE = complex(0.137, 0.071)


class BracketCase(str, Enum):
    RATIONAL = "rational"
    TRIGONOMETRIC = "trig"
    ELLIPTIC = "elliptic"

    @classmethod
    def parse(cls, value) -> "BracketCase":
        if isinstance(value, cls):
            return value
        if value == "trigonometric":
            return cls.TRIGONOMETRIC
        return cls(value)


class Precision(str, Enum):
    DOUBLE = "double"
    EXTENDED = "extended"

    @classmethod
    def parse(cls, value) -> "Precision":
        return value if isinstance(value, cls) else cls(value)


class Arithmetic:
    """Scalar operations of one working precision."""
    precision: Precision
    is_extended: bool
    eps: float
    pi: Any

    def scalar(self, value) -> ComplexScalar:
        raise NotImplementedError

    def exp(self, value) -> ComplexScalar:
        raise NotImplementedError

    def sin(self, value) -> ComplexScalar:
        raise NotImplementedError

    def log(self, value) -> ComplexScalar:
        raise NotImplementedError

    def det(self, rows: Sequence[Sequence]) -> ComplexScalar:
        raise NotImplementedError

    def fsum(self, terms: Sequence) -> ComplexScalar:
        raise NotImplementedError

    def is_finite(self, value) -> bool:
        raise NotImplementedError


class DoubleArithmetic(Arithmetic):
    """Binary64 complex arithmetic on Python complex numbers."""

    def __init__(self):
        self.precision = Precision.DOUBLE
        self.is_extended = False
        self.eps = 2.0 ** -53
        self.pi = math.pi

    def scalar(self, value) -> complex:
        if isinstance(value, str):
            real, imag = split_complex(value)
            return complex(float(real), float(imag))
        return complex(value)

    def exp(self, value) -> complex:
        return cmath.exp(value)

    def sin(self, value) -> complex:
        return cmath.sin(value)

    def log(self, value) -> complex:
        return cmath.log(value)

    def det(self, rows: Sequence[Sequence]) -> complex:
        if len(rows) == 0:
            return complex(1.0)
        return complex(numpy.linalg.det(numpy.array(rows, dtype=complex)))

    def fsum(self, terms: Sequence) -> complex:
        # plain fallback; binary64 callers go through CompensatedSum
        return complex(sum(terms, 0j))

    def is_finite(self, value) -> bool:
        return cmath.isfinite(complex(value))


class ExtendedArithmetic(Arithmetic):
    """Arbitrary precision arithmetic on a private mpmath context."""

    def __init__(self, dps: int):
        self.precision = Precision.EXTENDED
        self.is_extended = True
        self.mp = mpmath.MPContext()
        self.mp.dps = dps
        self.eps = 10.0 ** -(dps + 3)
        self.pi = self.mp.pi

    def scalar(self, value):
        if isinstance(value, str):
            real, imag = split_complex(value)
            return self.mp.mpc(self.mp.mpf(real), self.mp.mpf(imag))
        return self.mp.mpc(value)

    def exp(self, value):
        return self.mp.exp(value)

    def sin(self, value):
        return self.mp.sin(value)

    def log(self, value):
        return self.mp.log(value)

    def det(self, rows: Sequence[Sequence]):
        if len(rows) == 0:
            return self.mp.mpc(1)
        return self.mp.mpc(self.mp.det(self.mp.matrix([list(row) for row in rows])))

    def fsum(self, terms: Sequence):
        return self.mp.mpc(self.mp.fsum(terms))

    def is_finite(self, value) -> bool:
        return not (self.mp.isinf(value) or self.mp.isnan(value))


def make_arithmetic(precision, settings: Settings) -> Arithmetic:
    precision = Precision.parse(precision)
    if precision is Precision.EXTENDED:
        return ExtendedArithmetic(settings.extended_dps)
    return DoubleArithmetic()


@dataclass(frozen=True)
class BracketContext:
    """Immutable evaluation context of the bracket function [u].

    Attributes:
        case: Which of the three bracket functions is in use.
        omega: Periods (omega0, omega1, omega2, omega3); entries that are not
            periods in the chosen case are None.
        quad_coeff: The coefficient a of the e(a u^2) prefactor.
        delta: The shift step.
        eta: Quasi-periodicity constants eta0..eta3 (None where undefined).
        eps: Quasi-periodicity signs eps0..eps3.
        tau: omega2 / omega1 after orientation normalization (elliptic only).
    """
    case: BracketCase
    arith: Arithmetic = field(repr=False)
    omega: Tuple[Optional[ComplexScalar], ...]
    quad_coeff: ComplexScalar
    delta: ComplexScalar
    eta: Tuple[Optional[ComplexScalar], ...]
    eps: Tuple[int, int, int, int]
    tau: Optional[ComplexScalar]
    trunc: int
    tol_sing: float
    settings: Settings = field(repr=False)
    theta_coeffs: Tuple[ComplexScalar, ...] = field(default=(), repr=False)
    theta_bounds: Tuple[float, ...] = field(default=(), repr=False)
    theta_prime: Optional[ComplexScalar] = field(default=None, repr=False)
    gauss: Optional[ComplexScalar] = field(default=None, repr=False)

    @property
    def precision(self) -> Precision:
        return self.arith.precision

    @property
    def is_extended(self) -> bool:
        return self.arith.is_extended

    @property
    def is_elliptic(self) -> bool:
        return self.case is BracketCase.ELLIPTIC

    @property
    def omega1(self):
        return self.omega[1]

    @property
    def omega2(self):
        return self.omega[2]

    @property
    def half_periods(self):
        return tuple(None if w is None else w / 2 for w in self.omega)

    @property
    def zero(self):
        return self.arith.scalar(0)

    @property
    def one(self):
        return self.arith.scalar(1)

    def scalar(self, value) -> ComplexScalar:
        return self.arith.scalar(value)

    def e(self, value) -> ComplexScalar:
        """e(u) = exp(2 pi i u)."""
        return self.arith.exp(2j * self.arith.pi * value)

    def period_indices(self) -> Tuple[int, ...]:
        """Indices r for which omega_r is a period of [u] in this case."""
        if self.case is BracketCase.ELLIPTIC:
            return (0, 1, 2, 3)
        if self.case is BracketCase.TRIGONOMETRIC:
            return (0, 1)
        return (0,)

    def require_period(self, r: int) -> None:
        if r not in (0, 1, 2, 3):
            raise BadIndex(f"half-period index must be 0..3, got {r}")
        if r not in self.period_indices():
            raise WrongCase(f"omega_{r} is not a period in the {self.case.value} case")

    def with_delta(self, delta) -> "BracketContext":
        """The same lattice and backend with another shift step."""
        return replace(self, delta=self.scalar(delta))

    def require_elliptic(self, what: str) -> None:
        if not self.is_elliptic:
            raise WrongCase(f"{what} needs the elliptic case, context is {self.case.value}")


def _theta_series(arith: Arithmetic, tau, trunc: int):
    """Coefficients of theta1(z|tau) = sum_n c_n sin((2n+1) z) and its first and third derivative at 0."""
    coeffs = []
    for n in range(trunc):
        sign = -1 if n % 2 else 1
        coeffs.append(2 * sign * arith.exp(1j * arith.pi * tau * (n + 0.5) ** 2))
    prime = sum((c * (2 * n + 1) for n, c in enumerate(coeffs)), arith.scalar(0))
    third = -sum((c * (2 * n + 1) ** 3 for n, c in enumerate(coeffs)), arith.scalar(0))
    return tuple(coeffs), prime, third


def lattice_distance(ctx: BracketContext, z) -> float:
    """Distance from z to the nearest zero of [u]."""
    z = ctx.scalar(z)
    if ctx.case is BracketCase.RATIONAL:
        return float(abs(z))
    t = z / ctx.omega1
    if ctx.case is BracketCase.TRIGONOMETRIC:
        return float(abs(ctx.omega1) * abs(t - round(float(t.real))))
    n0 = round(float(t.imag) / float(ctx.tau.imag))
    m0 = round(float(t.real) - n0 * float(ctx.tau.real))
    best = math.inf
    for dm in (-1, 0, 1):
        for dn in (-1, 0, 1):
            point = (m0 + dm) * ctx.omega1 + (n0 + dn) * ctx.omega2
            best = min(best, float(abs(z - point)))
    return best


def make_context(
    case="elliptic",
    omega1=1,
    omega2=None,
    quad_coeff=0,
    delta="0.31+0.07i",
    precision="double",
    settings: Optional[Settings] = None,
    tol_sing: Optional[float] = None,
    trunc: Optional[int] = None,
) -> BracketContext:
    """Build a validated bracket context.

    Args:
        case: "rational", "trig" or "elliptic".
        omega1: First period (unused in the rational case).
        omega2: Second period (elliptic case only).
        quad_coeff: Coefficient a of the e(a u^2) prefactor.
        delta: Shift step; must not be commensurate with the lattice.
        precision: "double" or "extended".
        settings: Numerical defaults; the package defaults when omitted.
        tol_sing: Override of the near-singularity floor.
        trunc: Override of the theta truncation bound.

    Raises:
        DegenerateLattice: If the periods are R-linearly dependent.
        DeltaInLattice: If some k*delta, 1 <= k <= lattice_k, lies on the lattice.
        SelfTestFailed: If quasi-periodicity fails at the probe point.
    """
    settings = settings or Settings()
    case = BracketCase.parse(case)
    arith = make_arithmetic(precision, settings)
    trunc = settings.trunc if trunc is None else trunc

    a = arith.scalar(quad_coeff)
    d = arith.scalar(delta)
    if d == 0:
        raise DeltaInLattice("delta must be non-zero")

    tau = None
    coeffs, bounds, prime, gauss = (), (), None, None
    zero = arith.scalar(0)
    if case is BracketCase.RATIONAL:
        omega = (zero, None, None, None)
        eta = (zero, None, None, None)
    elif case is BracketCase.TRIGONOMETRIC:
        w1 = arith.scalar(omega1)
        if w1 == 0:
            raise DegenerateLattice("omega1 must be non-zero")
        omega = (zero, w1, None, None)
        eta = (zero, 2 * a * w1, None, None)
    else:
        if omega2 is None:
            raise DegenerateLattice("the elliptic case needs omega2")
        w1, w2 = arith.scalar(omega1), arith.scalar(omega2)
        if w1 == 0 or w2 == 0:
            raise DegenerateLattice("periods must be non-zero")
        tau = w2 / w1
        if abs(float(tau.imag)) <= settings.self_test_tol * float(abs(tau)):
            raise DegenerateLattice(f"periods {omega1} and {omega2} are R-linearly dependent")
        if float(tau.imag) < 0:
            w1, w2 = w2, w1
            tau = w2 / w1
        coeffs, prime, third = _theta_series(arith, tau, trunc)
        bounds = tuple(float(abs(c)) for c in coeffs)
        gauss = -((arith.pi / w1) ** 2) * third / (6 * prime)
        two_pi_i = 2j * arith.pi
        weier1 = 2 * gauss * w1
        weier2 = 2 * gauss * w2 - two_pi_i / w1
        eta1 = weier1 / two_pi_i + 2 * a * w1
        eta2 = weier2 / two_pi_i + 2 * a * w2
        omega = (zero, w1, w2, -w1 - w2)
        eta = (zero, eta1, eta2, -eta1 - eta2)

    ctx = BracketContext(
        case=case,
        arith=arith,
        omega=omega,
        quad_coeff=a,
        delta=d,
        eta=eta,
        eps=(1, -1, -1, -1),
        tau=tau,
        trunc=trunc,
        tol_sing=settings.tol_sing if tol_sing is None else tol_sing,
        settings=settings,
        theta_coeffs=coeffs,
        theta_bounds=bounds,
        theta_prime=prime,
        gauss=gauss,
    )
    _check_delta(ctx)
    _self_test(ctx)
    logger.info(
        "[Context] %s case, tau=%s, delta=%s, precision=%s", case.value, tau, d, arith.precision.value
    )
    return ctx


def _check_delta(ctx: BracketContext) -> None:
    if ctx.case is BracketCase.RATIONAL:
        return
    floor = ctx.settings.self_test_tol * float(abs(ctx.omega1))
    for k in range(1, ctx.settings.lattice_k + 1):
        if lattice_distance(ctx, k * ctx.delta) <= floor:
            raise DeltaInLattice(f"{k}*delta lies on the period lattice")


def numeric_eta(ctx: BracketContext, r: int):
    """Solve the quasi-periodicity relation of omega_r for eta_r by a central log-difference."""
    w = ctx.omega[r]
    u0 = ctx.scalar(_PROBE) * ctx.omega1
    h = 0.1 * float(abs(ctx.omega1)) / (1.0 + 4.0 * float(abs(ctx.eta[r])) * float(abs(ctx.omega1)))

    def ratio(u):
        return bracket(ctx, u + w) / bracket(ctx, u)

    return ctx.arith.log(ratio(u0 + h) / ratio(u0 - h)) / (2j * ctx.arith.pi * 2 * h)


def _self_test(ctx: BracketContext) -> None:
    tol = ctx.settings.self_test_tol
    probe = ctx.scalar(_PROBE) * (ctx.omega1 if ctx.omega1 is not None else 1)
    for r in ctx.period_indices()[1:]:
        residual = quasi_period_residual(ctx, probe, r).value
        if residual > tol:
            raise SelfTestFailed(f"quasi-periodicity of omega_{r} fails: residual {residual:.3e}")
        solved = numeric_eta(ctx, r)
        gap = float(abs(solved - ctx.eta[r]))
        if gap > tol * max(1.0, float(abs(ctx.eta[r]))):
            raise SelfTestFailed(f"eta_{r} disagrees with its numerical solution by {gap:.3e}")


def _theta1_reduced(ctx: BracketContext, z):
    growth = abs(float(z.imag))
    total = ctx.zero
    for n, coeff in enumerate(ctx.theta_coeffs):
        total += coeff * ctx.arith.sin((2 * n + 1) * z)
        if n >= 1 and ctx.theta_bounds[n] * math.exp((2 * n + 1) * growth) < ctx.arith.eps * float(abs(total)):
            break
    return total


def bracket(ctx: BracketContext, u) -> ComplexScalar:
    """The bracket function [u] of the context's case.

    Raises:
        ScalarOverflow: If the value leaves the representable range.
    """
    u = ctx.scalar(u)
    arith = ctx.arith
    try:
        if ctx.case is BracketCase.RATIONAL:
            value = ctx.e(ctx.quad_coeff * u * u) * u
        elif ctx.case is BracketCase.TRIGONOMETRIC:
            value = ctx.e(ctx.quad_coeff * u * u) * arith.sin(arith.pi * (u / ctx.omega1))
        else:
            pi = arith.pi
            z = pi * (u / ctx.omega1)
            n = round(float(z.imag) / (float(pi) * float(ctx.tau.imag)))
            z1 = z - n * pi * ctx.tau
            m = round(float(z1.real) / float(pi))
            z_red = z1 - m * pi
            log_shift = 1j * pi * (m + n) - 2j * n * z_red - 1j * pi * ctx.tau * n * n
            exponent = 2j * pi * ctx.quad_coeff * u * u + ctx.gauss * u * u + log_shift
            value = arith.exp(exponent) * (ctx.omega1 / pi) * _theta1_reduced(ctx, z_red) / ctx.theta_prime
    except OverflowError as exc:
        raise ScalarOverflow(f"[u] overflows at u={u}: {exc}")
    if not arith.is_finite(value):
        raise ScalarOverflow(f"[u] is not finite at u={u}")
    return value


def sigma_oracle(ctx: BracketContext, u) -> ComplexScalar:
    """Weierstrass product for sigma(u), truncated to |m|, |n| <= trunc.

    Only meant for cross-checking the theta representation near the origin;
    the truncation error grows like |u|^4 / trunc^2.
    """
    ctx.require_elliptic("sigma_oracle")
    u = ctx.scalar(u)
    product = ctx.one
    exponent = ctx.zero
    for m in range(-ctx.trunc, ctx.trunc + 1):
        for n in range(-ctx.trunc, ctx.trunc + 1):
            if m == 0 and n == 0:
                continue
            t = u / (m * ctx.omega1 + n * ctx.omega2)
            product *= 1 - t
            exponent += t + t * t / 2
    return u * product * ctx.arith.exp(exponent)


def bracket_pm(ctx: BracketContext, x, y) -> ComplexScalar:
    """[x +- y] = [x + y][x - y]."""
    x, y = ctx.scalar(x), ctx.scalar(y)
    return bracket(ctx, x + y) * bracket(ctx, x - y)


def shifted_factorial(ctx: BracketContext, u, k: int) -> ComplexScalar:
    """[u]_k = [u][u + delta]...[u + (k-1) delta]."""
    if k < 0:
        raise BadIndex(f"shifted factorial length must be non-negative, got {k}")
    u = ctx.scalar(u)
    value = ctx.one
    for i in range(k):
        value *= bracket(ctx, u + i * ctx.delta)
    return value


def shifted_factorial_pm(ctx: BracketContext, u, v, k: int) -> ComplexScalar:
    """[u +- v]_k = [u + v]_k [u - v]_k."""
    u, v = ctx.scalar(u), ctx.scalar(v)
    return shifted_factorial(ctx, u + v, k) * shifted_factorial(ctx, u - v, k)


def riemann_residual(ctx: BracketContext, x, y, u, v) -> Residual:
    """[x+-u][y+-v] - [x+-v][y+-u] = [x+-y][u+-v]."""
    lhs = Side.of_terms(
        ctx, [bracket_pm(ctx, x, u) * bracket_pm(ctx, y, v), -bracket_pm(ctx, x, v) * bracket_pm(ctx, y, u)]
    )
    rhs = Side.single(bracket_pm(ctx, x, y) * bracket_pm(ctx, u, v))
    return compare(lhs, rhs)


def duplication_residual(ctx: BracketContext, x) -> Residual:
    """[2x] = 2[x] prod_s [x - omega_s/2] / [-omega_s/2]."""
    ctx.require_elliptic("the duplication formula")
    x = ctx.scalar(x)
    rhs = 2 * bracket(ctx, x)
    for s in (1, 2, 3):
        half = ctx.omega[s] / 2
        rhs *= bracket(ctx, x - half) / bracket(ctx, -half)
    return compare(Side.single(bracket(ctx, 2 * x)), Side.single(rhs))


def halfperiod_product_residual(ctx: BracketContext, r: int) -> Residual:
    """prod_{s != r} [(omega_r - omega_s)/2] = eps_r e(eta_r omega_r / 2) prod_{s=1..3} [-omega_s/2]."""
    if r not in (0, 1, 2, 3):
        raise BadIndex(f"half-period index must be 0..3, got {r}")
    ctx.require_elliptic("the half-period product")
    lhs = ctx.one
    for s in range(4):
        if s != r:
            lhs *= bracket(ctx, (ctx.omega[r] - ctx.omega[s]) / 2)
    rhs = ctx.eps[r] * ctx.e(ctx.eta[r] * ctx.omega[r] / 2)
    for s in (1, 2, 3):
        rhs *= bracket(ctx, -ctx.omega[s] / 2)
    return compare(Side.single(lhs), Side.single(rhs))


def quasi_period_residual(ctx: BracketContext, u, r: int) -> Residual:
    """[u + omega_r] = eps_r e(eta_r (u + omega_r/2)) [u]."""
    ctx.require_period(r)
    u = ctx.scalar(u)
    w = ctx.omega[r]
    lhs = bracket(ctx, u + w)
    rhs = ctx.eps[r] * ctx.e(ctx.eta[r] * (u + w / 2)) * bracket(ctx, u)
    return compare(Side.single(lhs), Side.single(rhs))


def separation_residual(ctx: BracketContext, x, y, a, b, r: int) -> Residual:
    """Split [x+-y] / ([a+-x][a+omega_r+-y]) into an x-part and a y-part."""
    ctx.require_period(r)
    x, y, a, b = (ctx.scalar(v) for v in (x, y, a, b))
    w = ctx.omega[r]
    lhs = bracket_pm(ctx, x, y) / (bracket_pm(ctx, a, x) * bracket_pm(ctx, a + w, y))
    factor = ctx.e(-ctx.eta[r] * (2 * a + w))
    ab = bracket_pm(ctx, a, b)
    terms = [
        factor * bracket_pm(ctx, x, b) / (bracket_pm(ctx, a, x) * ab),
        -factor * bracket_pm(ctx, y, b) / (bracket_pm(ctx, a, y) * ab),
    ]
    return compare(Side.single(lhs), Side.of_terms(ctx, terms))
