# utils/numbers.py

import re
from typing import Tuple

import mpmath

from ..exceptions import ConfigError

_DECIMAL = re.compile(r"^[+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?$")


def _split_point(body: str) -> int:
    for index in range(len(body) - 1, 0, -1):
        if body[index] in "+-" and body[index - 1] not in "eE":
            return index
    return -1


def split_complex(text: str) -> Tuple[str, str]:
    """Split an `a+bi` token into decimal strings for the real and imaginary parts.

    Accepts `a`, `bi`, `a+bi`, `a-bi`, `i` and `-i`; `j` is accepted in place of `i`.
    No whitespace is allowed inside the token.

    Raises:
        ConfigError: If the token is not a complex literal.
    """
    token = text.strip()
    if not token or any(ch.isspace() for ch in token):
        raise ConfigError(f"not a complex number: {text!r} (expected a+bi)")

    if token[-1] in "ij":
        body = token[:-1]
        cut = _split_point(body)
        real, imag = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
        if imag in ("", "+"):
            imag = "1"
        elif imag == "-":
            imag = "-1"
    else:
        real, imag = token, "0"

    for part in (real, imag):
        if not _DECIMAL.match(part):
            raise ConfigError(f"not a complex number: {text!r} (expected a+bi)")
    return real, imag


def format_real(value, digits: int = 17) -> str:
    if isinstance(value, (float, int)):
        return repr(float(value))
    return mpmath.nstr(value, digits, strip_zeros=True)


def format_complex(value, digits: int = 17) -> str:
    """Render a complex scalar as a single `a+bi` token at full precision."""
    value = complex(value) if isinstance(value, (int, float)) else value
    real = format_real(value.real, digits)
    imag = format_real(value.imag, digits)
    sign = "" if imag.startswith("-") else "+"
    return f"{real}{sign}{imag}i"
