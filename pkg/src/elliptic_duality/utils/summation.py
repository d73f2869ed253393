# utils/summation.py

from typing import Iterable


class CompensatedSum:
    """Incremental Neumaier summation of complex binary64 values.

    Real and imaginary parts are carried separately, each with its own running
    compensation, so cancellation between large alternating terms loses only
    the rounding of the final addition.
    """

    def __init__(self):
        self.re = 0.0
        self.im = 0.0
        self.re_carry = 0.0
        self.im_carry = 0.0

    @staticmethod
    def _step(total: float, carry: float, value: float):
        updated = total + value
        if abs(total) >= abs(value):
            carry += (total - updated) + value
        else:
            carry += (value - updated) + total
        return updated, carry

    def add(self, value) -> None:
        value = complex(value)
        self.re, self.re_carry = self._step(self.re, self.re_carry, value.real)
        self.im, self.im_carry = self._step(self.im, self.im_carry, value.imag)

    def extend(self, values: Iterable) -> None:
        for value in values:
            self.add(value)

    @property
    def value(self) -> complex:
        return complex(self.re + self.re_carry, self.im + self.im_carry)


def accumulate(ctx, terms: Iterable):
    """Sum terms at the context's precision.

    Binary64 contexts use compensated summation; extended contexts use the
    mpmath context's own fsum, which already carries guard digits.
    """
    if ctx.is_extended:
        return ctx.arith.fsum(list(terms))
    total = CompensatedSum()
    total.extend(terms)
    return total.value
