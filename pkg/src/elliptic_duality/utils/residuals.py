# utils/residuals.py

import math
import statistics
from dataclasses import dataclass, field
from typing import Any, List, Sequence

from ..exceptions import NearSingularity
from .summation import accumulate


def quotient(ctx, numer: Sequence, denom: Sequence, label: str = "quotient"):
    """Product of `numer` over product of `denom`, refusing near-singular denominators.

    A denominator counts as singular when its magnitude is below `ctx.tol_sing`
    times the median magnitude of all non-zero factors involved.

    Raises:
        NearSingularity: If any denominator factor is below the floor.
    """
    magnitudes = [float(abs(f)) for f in numer] + [float(abs(f)) for f in denom]
    nonzero = [mag for mag in magnitudes if mag > 0.0]
    scale = statistics.median(nonzero) if nonzero else 1.0
    floor = ctx.tol_sing * scale
    for factor in denom:
        size = float(abs(factor))
        if size < floor:
            raise NearSingularity(
                f"[{label}] denominator factor {size:.3e} below {floor:.3e}", magnitude=size, scale=scale
            )
    return math.prod(numer) / math.prod(denom)


@dataclass
class Side:
    """One side of an identity: its individual summands and their sum."""
    terms: List[Any]
    value: Any

    @classmethod
    def of_terms(cls, ctx, terms: Sequence) -> "Side":
        terms = list(terms)
        return cls(terms=terms, value=accumulate(ctx, terms))

    @classmethod
    def single(cls, value) -> "Side":
        return cls(terms=[value], value=value)

    def scaled(self, factor) -> "Side":
        return Side(terms=[t * factor for t in self.terms], value=self.value * factor)


@dataclass(frozen=True)
class Residual:
    """Normalized residual |LHS - RHS| / max |summand| of an identity instance."""
    value: float
    scale: float
    lhs: Any = field(default=None, compare=False)
    rhs: Any = field(default=None, compare=False)

    def __float__(self) -> float:
        return self.value


def compare(lhs: Side, rhs: Side) -> Residual:
    """Normalized residual of two sides.

    A shared zero (every summand exactly zero) has residual 0.
    """
    diff = float(abs(lhs.value - rhs.value))
    magnitudes = [float(abs(t)) for t in lhs.terms] + [float(abs(t)) for t in rhs.terms]
    scale = max(magnitudes) if magnitudes else 0.0
    if scale == 0.0:
        value = 0.0 if diff == 0.0 else math.inf
    else:
        value = diff / scale
    return Residual(value=value, scale=scale, lhs=lhs.value, rhs=rhs.value)


def vanishing(side: Side) -> Residual:
    """Residual of a side that must sum to zero."""
    return compare(side, Side(terms=[], value=0))
