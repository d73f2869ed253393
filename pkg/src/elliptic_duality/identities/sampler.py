# identities/sampler.py

import logging
import zlib
from typing import Any, Callable, Dict, List, Optional

import numpy

from ..bracket import BracketCase, BracketContext, lattice_distance, make_context
from ..config import Settings
from ..exceptions import (
    DegenerateLattice,
    DeltaInLattice,
    NearSingularity,
    SamplerExhausted,
    ScalarOverflow,
    SelfTestFailed,
)
from ..models.report import ParamSample

logger = logging.getLogger(__name__)

# shifts k*delta checked against the lattice for every combination of free points
_SHIFT_RANGE = 8

_REJECTED = (DegenerateLattice, DeltaInLattice, SelfTestFailed, NearSingularity, ScalarOverflow)


def trial_rng(seed: int, identity: str, trial: int) -> numpy.random.Generator:
    """Independent stream per (seed, identity, trial), so results do not depend on execution order."""
    return numpy.random.default_rng(numpy.random.SeedSequence([seed, zlib.crc32(identity.encode()), trial]))


class Sampler:
    """Draws a context and the parameters of one identity instance.

    Draw functions call `variables` for the free points the identity is evaluated at
    and `free`, `balanced` or `excess` for parameters. Only variables enter the
    separation screen; parameters carry deliberate coincidences such as a_7 = a_0 + delta.
    """

    def __init__(
        self,
        rng: numpy.random.Generator,
        case: str = "elliptic",
        precision: str = "double",
        settings: Optional[Settings] = None,
        tau: Optional[str] = None,
        delta: Optional[str] = None,
        quad_coeff: Optional[str] = None,
        tol_sing: Optional[float] = None,
    ):
        self.rng = rng
        self.case = BracketCase.parse(case)
        self.precision = precision
        self.settings = settings or Settings()
        self.overrides = {'tau': tau, 'delta': delta, 'quad_coeff': quad_coeff}
        self.tol_sing = tol_sing
        self.ctx: Optional[BracketContext] = None
        self._variables: List[Any] = []
        self._draw: Dict[str, Any] = {}
        self.screened: Any = None

    def _uniform(self, low: float, high: float) -> float:
        return float(self.rng.uniform(low, high))

    def _complex(self, half_width: float) -> complex:
        return complex(self._uniform(-half_width, half_width), self._uniform(-half_width, half_width))

    def _draw_context(self) -> BracketContext:
        s = self.settings
        tau = None
        if self.case is BracketCase.ELLIPTIC:
            tau = self.overrides['tau'] or complex(self._uniform(-s.tau_re, s.tau_re), self._uniform(*s.tau_im))
        delta = self.overrides['delta'] or complex(self._uniform(0.1, 0.4), self._uniform(-0.15, 0.15))
        quad = self.overrides['quad_coeff'] or 0.2 * self._complex(s.param_box)
        self._draw = {'tau': tau, 'delta': delta, 'quad_coeff': quad}
        return make_context(
            case=self.case,
            omega1=1,
            omega2=tau,
            quad_coeff=quad,
            delta=delta,
            precision=self.precision,
            settings=s,
            tol_sing=self.tol_sing,
        )

    def variable(self):
        value = self.ctx.scalar(self._complex(self.settings.param_box))
        self._variables.append(value)
        return value

    def variables(self, n: int) -> List:
        return [self.variable() for _ in range(n)]

    def free(self, n: int) -> List:
        return [self.ctx.scalar(self._complex(self.settings.param_box)) for _ in range(n)]

    def balanced(self, n: int, multiple, offset=0) -> List:
        """n parameters with sum = multiple * delta + offset, the last one solved for."""
        values = self.free(n - 1)
        last = multiple * self.ctx.delta + offset - sum(values, self.ctx.zero)
        return values + [last]

    def excess(self, multiple) -> List:
        """Eight BC parameters with a_7 = a_0 + delta and sum = multiple * delta."""
        head = self.free(6)
        a7 = head[0] + self.ctx.delta
        a6 = multiple * self.ctx.delta - sum(head, self.ctx.zero) - a7
        return head + [a6, a7]

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in low..high inclusive."""
        return int(self.rng.integers(low, high + 1))

    def _separated(self) -> bool:
        ctx = self.ctx
        floor = self.settings.sampler_separation
        points = self._variables
        shifts = [k * ctx.delta for k in range(-_SHIFT_RANGE, _SHIFT_RANGE + 1)]
        for i, p in enumerate(points):
            if any(lattice_distance(ctx, 2 * p + t) < floor for t in shifts):
                return False
            for q in points[i + 1:]:
                for t in shifts:
                    if lattice_distance(ctx, p + q + t) < floor or lattice_distance(ctx, p - q + t) < floor:
                        return False
        return True

    def draw(
        self,
        identity: str,
        draw: Callable[["Sampler", Dict[str, Any]], Dict[str, Any]],
        sizes: Dict[str, Any],
        screen: Optional[Callable[[BracketContext, ParamSample], Any]] = None,
    ):
        """Rejection-sample a ParamSample for one identity.

        When `screen` is given it is evaluated on every candidate that passes the separation
        screen, and a `NearSingularity` from it rejects the candidate like any other. The
        value of the accepted evaluation is kept in `screened`.

        Raises:
            SamplerExhausted: After `sampler_max_rejections` rejected draws.
        """
        for attempt in range(self.settings.sampler_max_rejections):
            self._variables = []
            local_sizes = dict(sizes)
            try:
                self.ctx = self._draw_context()
                values = draw(self, local_sizes)
            except _REJECTED as e:
                logger.debug("[Sampler] %s draw %d rejected: %s", identity, attempt, e)
                continue
            if not self._separated():
                logger.debug("[Sampler] %s draw %d rejected: points too close to the lattice", identity, attempt)
                continue
            sample = ParamSample(
                case=self.case.value,
                precision=self.ctx.precision.value,
                tau=None if self._draw['tau'] is None else self.ctx.scalar(self._draw['tau']),
                delta=self.ctx.delta,
                quad_coeff=self.ctx.quad_coeff,
                values=values,
                sizes=local_sizes,
            )
            if screen is not None:
                try:
                    self.screened = screen(self.ctx, sample)
                except _REJECTED as e:
                    logger.debug("[Sampler] %s draw %d rejected by its evaluation: %s", identity, attempt, e)
                    continue
            return sample
        raise SamplerExhausted(
            f"{identity}: no admissible sample after {self.settings.sampler_max_rejections} draws"
        )
