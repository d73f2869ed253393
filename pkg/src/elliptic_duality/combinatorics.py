# combinatorics.py

import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from .config import Settings
from .exceptions import BadIndex, SizeLimit
from .models.indices import MINUS, PLUS, ZERO, MultiIndex, SignPartition, SignSequence

logger = logging.getLogger(__name__)

_SIGNS = (MINUS, ZERO, PLUS)


def _check_size(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise SizeLimit(f"{what} of size {n} exceeds the configured cap {cap}")


def enumerate_partitions3(
    n: int, r: Optional[int] = None, settings: Optional[Settings] = None
) -> Iterator[SignPartition]:
    """Yield every triple (I_+, I_0, I_-) of disjoint subsets of range(n).

    With `r` given only triples whose union has exactly r elements are produced,
    C(n, r) * 3^r of them. Order is lexicographic in (chosen subset, signs).

    Raises:
        SizeLimit: If n exceeds the configured cap.
        BadIndex: If r lies outside 0..n.
    """
    settings = settings or Settings()
    _check_size(n, settings.max_size, "subset enumeration")
    if r is not None and not 0 <= r <= n:
        raise BadIndex(f"subset level r must lie in 0..{n}, got {r}")
    levels = range(n + 1) if r is None else (r,)
    for level in levels:
        for chosen in itertools.combinations(range(n), level):
            for signs in itertools.product(_SIGNS, repeat=level):
                yield SignPartition(
                    n=n,
                    plus=frozenset(i for i, s in zip(chosen, signs) if s == PLUS),
                    zero=frozenset(i for i, s in zip(chosen, signs) if s == ZERO),
                    minus=frozenset(i for i, s in zip(chosen, signs) if s == MINUS),
                )


def enumerate_partitions2(
    n: int, r: Optional[int] = None, settings: Optional[Settings] = None
) -> Iterator[SignPartition]:
    """Like enumerate_partitions3 with I_0 empty: C(n, r) * 2^r pairs (I_+, I_-) at level r."""
    settings = settings or Settings()
    _check_size(n, settings.max_size, "subset enumeration")
    if r is not None and not 0 <= r <= n:
        raise BadIndex(f"subset level r must lie in 0..{n}, got {r}")
    levels = range(n + 1) if r is None else (r,)
    for level in levels:
        for chosen in itertools.combinations(range(n), level):
            for signs in itertools.product((MINUS, PLUS), repeat=level):
                yield SignPartition(
                    n=n,
                    plus=frozenset(i for i, s in zip(chosen, signs) if s == PLUS),
                    zero=frozenset(),
                    minus=frozenset(i for i, s in zip(chosen, signs) if s == MINUS),
                )


def enumerate_full_signs(n: int, settings: Optional[Settings] = None) -> Iterator[Tuple[int, ...]]:
    """All 3^n sign vectors over {-, 0, +}."""
    settings = settings or Settings()
    _check_size(n, settings.max_size, "sign enumeration")
    return itertools.product(_SIGNS, repeat=n)


def gap_sequences(low: int, high: int) -> Iterator[Tuple[int, ...]]:
    """Increasing sequences low < xi_1 < ... < xi_r < high with consecutive gaps >= 2, every r >= 0."""

    def extend(prefix: Tuple[int, ...], start: int) -> Iterator[Tuple[int, ...]]:
        yield prefix
        for xi in range(start, high):
            yield from extend(prefix + (xi,), xi + 2)

    return extend((), low + 1)


def _block_from_parameters(length: int, nu: int, mu: int, xis: Sequence[int]) -> Tuple[int, ...]:
    block = [MINUS] * nu + [ZERO] * (mu - nu) + [PLUS] * (length - mu)
    for xi in xis:
        block[xi - 1], block[xi] = PLUS, MINUS
    return tuple(block)


def _admissible_blocks_direct(length: int) -> List[Tuple[int, ...]]:
    return [
        block
        for block in itertools.product(_SIGNS, repeat=length)
        if SignSequence(blocks=(block,)).admissible
    ]


def _admissible_blocks_parametrized(length: int) -> List[Tuple[int, ...]]:
    blocks = []
    for nu in range(length + 1):
        for mu in range(nu, length + 1):
            for xis in gap_sequences(nu, mu):
                blocks.append(_block_from_parameters(length, nu, mu, xis))
    return blocks


def enumerate_admissible_signs(
    alpha: MultiIndex, method: str = "filter", settings: Optional[Settings] = None
) -> Iterator[SignSequence]:
    """Yield the sign sequences over the blocks of alpha avoiding +0, 0- and +*- inside every block.

    Args:
        alpha: Block lengths.
        method: "filter" tests all 3^|alpha| sequences against the forbidden
            patterns, "parametrized" builds them from 0 <= nu <= mu <= alpha and
            gap-2 positions of the +- pairs.

    Raises:
        SizeLimit: If |alpha| exceeds the configured box cap.
    """
    settings = settings or Settings()
    _check_size(alpha.weight, settings.max_box_weight, "sign sequence enumeration")
    if method == "filter":
        per_block = [_admissible_blocks_direct(length) for length in alpha]
    elif method == "parametrized":
        per_block = [sorted(_admissible_blocks_parametrized(length)) for length in alpha]
    else:
        raise BadIndex(f"unknown enumeration method {method!r}")
    for blocks in itertools.product(*per_block):
        yield SignSequence(blocks=tuple(blocks))


def sign_parameters(block: Sequence[int]) -> Tuple[int, int, Tuple[int, ...]]:
    """Recover (nu, mu, xi) of an admissible block."""
    nu = 0
    while nu < len(block) and block[nu] == MINUS:
        nu += 1
    mu = len(block)
    while mu > nu and block[mu - 1] == PLUS:
        mu -= 1
    xis = tuple(k for k in range(nu + 1, mu) if block[k] == MINUS)
    return nu, mu, xis


def principal_specialize(ctx, x: Sequence, alpha: MultiIndex) -> List:
    """(x)_alpha: the blocks x_i, x_i + delta, ..., x_i + (alpha_i - 1) delta, flattened."""
    if len(x) != len(alpha):
        raise BadIndex(f"principal specialization needs {len(alpha)} base points, got {len(x)}")
    points = []
    for base, length in zip(x, alpha):
        base = ctx.scalar(base)
        points.extend(base + k * ctx.delta for k in range(length))
    return points


def enumerate_box(alpha: MultiIndex, settings: Optional[Settings] = None) -> Iterator[MultiIndex]:
    """All mu with 0 <= mu <= alpha, lexicographically."""
    settings = settings or Settings()
    _check_size(alpha.weight, settings.max_box_weight, "box enumeration")
    for parts in itertools.product(*(range(a + 1) for a in alpha)):
        yield MultiIndex(parts)


def enumerate_nested_box(
    alpha: MultiIndex, settings: Optional[Settings] = None
) -> Iterator[Tuple[MultiIndex, MultiIndex]]:
    """All pairs (nu, mu) with 0 <= nu <= mu <= alpha, lexicographically in (nu, mu)."""
    for nu in enumerate_box(alpha, settings):
        for parts in itertools.product(*(range(n, a + 1) for n, a in zip(nu, alpha))):
            yield nu, MultiIndex(parts)
