# models/__init__.py

from .indices import MINUS, PLUS, ZERO, MultiIndex, SignPartition, SignSequence
from .params import ParamsBC, ParamsC

__all__ = [
    "MINUS",
    "PLUS",
    "ZERO",
    "MultiIndex",
    "SignPartition",
    "SignSequence",
    "ParamsBC",
    "ParamsC",
]
