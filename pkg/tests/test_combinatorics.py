import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from elliptic_duality.combinatorics import (
    enumerate_admissible_signs,
    enumerate_box,
    enumerate_full_signs,
    enumerate_nested_box,
    enumerate_partitions2,
    enumerate_partitions3,
    gap_sequences,
    principal_specialize,
    sign_parameters,
)
from elliptic_duality.config import Settings
from elliptic_duality.exceptions import BadIndex, ConfigError, SizeLimit
from elliptic_duality.models.indices import MINUS, PLUS, ZERO, MultiIndex, SignPartition, SignSequence


@pytest.mark.parametrize("n", [0, 1, 3, 5])
def test_partition_counts_per_level(n):
    for r in range(n + 1):
        assert len(list(enumerate_partitions3(n, r))) == math.comb(n, r) * 3 ** r
        assert len(list(enumerate_partitions2(n, r))) == math.comb(n, r) * 2 ** r


def test_partitions_cover_every_sign_vector():
    # every index is unchosen, +, 0 or -
    triples = {(p.plus, p.zero, p.minus) for p in enumerate_partitions3(4)}
    assert len(triples) == 4 ** 4


def test_partitions_are_disjoint():
    for p in enumerate_partitions3(3, 2):
        assert p.size == 2
        assert not (p.plus & p.minus or p.plus & p.zero or p.zero & p.minus)


def test_partition_limits():
    with pytest.raises(SizeLimit):
        list(enumerate_partitions3(5, settings=Settings(max_size=4)))
    with pytest.raises(BadIndex):
        list(enumerate_partitions2(3, 4))


def test_sign_partition_validation():
    with pytest.raises(BadIndex):
        SignPartition(n=3, plus=frozenset({0}), zero=frozenset({0}), minus=frozenset())
    with pytest.raises(BadIndex):
        SignPartition(n=2, plus=frozenset({2}), zero=frozenset(), minus=frozenset())
    part = SignPartition.from_signs((PLUS, ZERO, MINUS), chosen=(0, 2))
    assert part.signs() == (PLUS, ZERO, MINUS)
    assert part.chosen == frozenset({0, 2})


def test_full_signs():
    assert len(list(enumerate_full_signs(4))) == 81
    with pytest.raises(SizeLimit):
        enumerate_full_signs(13)


def test_gap_sequences():
    assert list(gap_sequences(0, 1)) == [()]
    assert sorted(gap_sequences(0, 5)) == sorted([(), (1,), (2,), (3,), (4,), (1, 3), (1, 4), (2, 4)])


@pytest.mark.parametrize("alpha", [(1,), (3,), (2, 1), (4,), (2, 2)])
def test_admissible_signs_two_ways(alpha):
    alpha = MultiIndex(alpha)
    by_filter = [s.blocks for s in enumerate_admissible_signs(alpha, "filter")]
    by_parameters = [s.blocks for s in enumerate_admissible_signs(alpha, "parametrized")]
    assert len(by_filter) == len(set(by_filter))
    assert sorted(by_filter) == sorted(by_parameters)


def test_admissible_patterns():
    assert SignSequence(blocks=((MINUS, ZERO, PLUS),)).admissible
    assert SignSequence(blocks=((PLUS, MINUS),)).admissible
    assert not SignSequence(blocks=((PLUS, ZERO),)).admissible
    assert not SignSequence(blocks=((ZERO, MINUS),)).admissible
    assert not SignSequence(blocks=((PLUS, PLUS, MINUS),)).admissible
    assert str(SignSequence(blocks=((MINUS, PLUS), (ZERO,)))) == "-+|0"


def test_admissible_signs_rejects_bad_method():
    with pytest.raises(BadIndex):
        list(enumerate_admissible_signs(MultiIndex((2,)), "guess"))
    with pytest.raises(SizeLimit):
        list(enumerate_admissible_signs(MultiIndex((6, 5))))


def test_sign_parameters_recover_the_block():
    for s in enumerate_admissible_signs(MultiIndex((5,)), "filter"):
        block = s.blocks[0]
        nu, mu, xis = sign_parameters(block)
        assert 0 <= nu <= mu <= 5
        rebuilt = [MINUS] * nu + [ZERO] * (mu - nu) + [PLUS] * (5 - mu)
        for xi in xis:
            rebuilt[xi - 1], rebuilt[xi] = PLUS, MINUS
        assert tuple(rebuilt) == block


def test_principal_specialize(elliptic_ctx):
    d = elliptic_ctx.delta
    points = principal_specialize(elliptic_ctx, [0.1, 0.2j], MultiIndex((2, 1)))
    assert points == [0.1, 0.1 + d, 0.2j]
    assert principal_specialize(elliptic_ctx, [0.1], MultiIndex((0,))) == []
    with pytest.raises(BadIndex):
        principal_specialize(elliptic_ctx, [0.1], MultiIndex((1, 1)))


@given(st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=3))
def test_box_counts(parts):
    alpha = MultiIndex(tuple(parts))
    assert len(list(enumerate_box(alpha))) == math.prod(a + 1 for a in parts)
    nested = list(enumerate_nested_box(alpha))
    assert len(nested) == math.prod((a + 1) * (a + 2) // 2 for a in parts)
    assert all(nu <= mu and mu <= alpha for nu, mu in nested)


def test_multi_index():
    alpha = MultiIndex.parse("2,0,1")
    assert alpha.weight == 3
    assert str(alpha) == "2,0,1"
    assert MultiIndex.parse("") == MultiIndex(())
    assert alpha.append(4) == MultiIndex((2, 0, 1, 4))
    assert MultiIndex((1, 0, 1)) <= alpha
    assert not MultiIndex((1, 0)) <= alpha
    with pytest.raises(BadIndex):
        MultiIndex((1, -1))
    with pytest.raises(ConfigError):
        MultiIndex.parse("1,x")
