# indices.py

from dataclasses import dataclass
from typing import FrozenSet, Iterator, Sequence, Tuple

from ..exceptions import BadIndex, ConfigError

PLUS, ZERO, MINUS = 1, 0, -1
_SYMBOLS = {PLUS: "+", ZERO: "0", MINUS: "-"}


@dataclass(frozen=True)
class MultiIndex:
    """A multi-index alpha in N^m."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 0 for p in self.parts):
            raise BadIndex(f"multi-index parts must be non-negative: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "MultiIndex":
        """Parse a comma separated list such as "2,1"; the empty string is the empty index."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError:
            raise ConfigError(f"not a multi-index: {text!r}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __le__(self, other: "MultiIndex") -> bool:
        return len(self) == len(other) and all(p <= q for p, q in zip(self.parts, other.parts))

    def append(self, part: int) -> "MultiIndex":
        return MultiIndex(self.parts + (part,))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class SignPartition:
    """A decomposition I_+, I_0, I_- of the chosen indices; the rest of range(n) is unchosen."""
    n: int
    plus: FrozenSet[int]
    zero: FrozenSet[int]
    minus: FrozenSet[int]

    def __post_init__(self):
        if self.plus & self.zero or self.plus & self.minus or self.zero & self.minus:
            raise BadIndex("sign partition blocks must be disjoint")
        if any(i < 0 or i >= self.n for i in self.chosen):
            raise BadIndex(f"sign partition indices must lie in range({self.n})")

    @property
    def chosen(self) -> FrozenSet[int]:
        return self.plus | self.zero | self.minus

    @property
    def size(self) -> int:
        return len(self.chosen)

    def sign(self, i: int) -> int:
        if i in self.plus:
            return PLUS
        if i in self.minus:
            return MINUS
        return ZERO

    def signs(self) -> Tuple[int, ...]:
        return tuple(self.sign(i) for i in range(self.n))

    @classmethod
    def from_signs(cls, signs: Sequence[int], chosen: Sequence[int] = None) -> "SignPartition":
        chosen = range(len(signs)) if chosen is None else chosen
        return cls(
            n=len(signs),
            plus=frozenset(i for i in chosen if signs[i] == PLUS),
            zero=frozenset(i for i in chosen if signs[i] == ZERO),
            minus=frozenset(i for i in chosen if signs[i] == MINUS),
        )


def _block_admissible(block: Sequence[int]) -> bool:
    for i in range(len(block) - 1):
        if (block[i], block[i + 1]) in ((PLUS, ZERO), (ZERO, MINUS)):
            return False
        if i + 2 < len(block) and block[i] == PLUS and block[i + 2] == MINUS:
            return False
    return True


@dataclass(frozen=True)
class SignSequence:
    """Per-block sign strings over {+, 0, -} for a multi-index."""
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def admissible(self) -> bool:
        """True when no block contains +0, 0- or +*-."""
        return all(_block_admissible(block) for block in self.blocks)

    def flat(self) -> Tuple[int, ...]:
        return tuple(s for block in self.blocks for s in block)

    def __str__(self) -> str:
        return "|".join("".join(_SYMBOLS[s] for s in block) for block in self.blocks)
