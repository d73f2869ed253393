# params.py

from dataclasses import dataclass, replace
from typing import Any, Sequence, Tuple

from ..exceptions import BadIndex, UnbalancedParams


def _balance_check(ctx, values: Sequence, target, label: str) -> None:
    total = sum(values, ctx.zero)
    defect = float(abs(total - target * ctx.delta))
    scale = max([1.0, float(abs(ctx.delta))] + [float(abs(v)) for v in values])
    if defect > ctx.settings.balance_tol * scale:
        raise UnbalancedParams(f"{label}: sum of parameters misses {target}*delta by {defect:.3e}")


@dataclass(frozen=True)
class ParamsBC:
    """Eight parameters a_0..a_7 and four c_0..c_3 of the BC_1 operator."""
    a: Tuple[Any, ...]
    c: Tuple[Any, ...]

    def __post_init__(self):
        if len(self.a) != 8:
            raise BadIndex(f"ParamsBC needs 8 a-parameters, got {len(self.a)}")
        if len(self.c) != 4:
            raise BadIndex(f"ParamsBC needs 4 c-parameters, got {len(self.c)}")

    @classmethod
    def of(cls, ctx, a: Sequence, c: Sequence = None) -> "ParamsBC":
        a = tuple(ctx.scalar(v) for v in a)
        c = tuple(ctx.scalar(v) for v in (c if c is not None else (a[0],) * 4))
        return cls(a=a, c=c)

    def dual(self, ctx) -> "ParamsBC":
        """b_p = delta - a_p with the same c."""
        return replace(self, a=tuple(ctx.delta - v for v in self.a))

    def excess_dual(self, ctx) -> "ParamsBC":
        """b_0 = delta - a_7, b_7 = delta - a_0, b_p = delta - a_p otherwise, with c = (b_0, b_0, b_0, b_0)."""
        a = self.a
        b = (ctx.delta - a[7],) + tuple(ctx.delta - v for v in a[1:7]) + (ctx.delta - a[0],)
        return ParamsBC(a=b, c=(b[0],) * 4)

    def with_constant_c(self, value) -> "ParamsBC":
        return replace(self, c=(value,) * 4)

    def require_balance(self, ctx, target) -> None:
        _balance_check(ctx, self.a, target, "BC balancing condition")


@dataclass(frozen=True)
class ParamsC:
    """Four parameters a_0..a_3 of the C_1 operator."""
    a: Tuple[Any, ...]

    def __post_init__(self):
        if len(self.a) != 4:
            raise BadIndex(f"ParamsC needs 4 a-parameters, got {len(self.a)}")

    @classmethod
    def of(cls, ctx, a: Sequence) -> "ParamsC":
        return cls(a=tuple(ctx.scalar(v) for v in a))

    def dual(self, ctx) -> "ParamsC":
        """b_p = delta/2 - a_p."""
        return ParamsC(a=tuple(ctx.delta / 2 - v for v in self.a))

    def require_balance(self, ctx, target) -> None:
        _balance_check(ctx, self.a, target, "C balancing condition")
