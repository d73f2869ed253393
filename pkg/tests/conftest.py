"""
Configuration file for pytest: context fixtures and the integration marker hook.

Tests whose node id contains `_int_` run whole identities through the sampler and
are tagged `integration`; deselect them with `-m "not integration"`.
"""

from __future__ import annotations

from typing import List

import pytest
from _pytest.nodes import Item

from elliptic_duality.bracket import make_context

TAU = "0.1+1.1i"
DELTA = "0.31+0.07i"
QUAD = "0.03-0.02i"


def pytest_collection_modifyitems(items: list[Item]):
    for item in items:
        if "_int_" in item.nodeid:
            item.add_marker(pytest.mark.integration)


@pytest.fixture(scope="session")
def elliptic_ctx():
    return make_context("elliptic", omega1=1, omega2=TAU, quad_coeff=QUAD, delta=DELTA)


@pytest.fixture(scope="session")
def extended_ctx():
    return make_context("elliptic", omega1=1, omega2=TAU, quad_coeff=QUAD, delta=DELTA, precision="extended")


@pytest.fixture(scope="session")
def trig_ctx():
    return make_context("trig", omega1=1, quad_coeff="0.05", delta=DELTA)


@pytest.fixture(scope="session")
def rational_ctx():
    return make_context("rational", quad_coeff="0.02+0.01i", delta=DELTA)


@pytest.fixture(params=["rational", "trig", "elliptic"])
def any_ctx(request, rational_ctx, trig_ctx, elliptic_ctx):
    return {"rational": rational_ctx, "trig": trig_ctx, "elliptic": elliptic_ctx}[request.param]


def balance(ctx, free: List, multiple, offset=0) -> List:
    """Append the parameter that makes sum(values) = multiple * delta + offset."""
    values = [ctx.scalar(v) for v in free]
    return values + [multiple * ctx.delta + offset - sum(values, ctx.zero)]


def excess(ctx, head: List, multiple) -> List:
    """Eight BC parameters with a_7 = a_0 + delta and sum = multiple * delta."""
    head = [ctx.scalar(v) for v in head]
    a7 = head[0] + ctx.delta
    return head + [multiple * ctx.delta - sum(head, ctx.zero) - a7, a7]


# generic points, pairwise well separated from each other and from the lattice
POINTS = [
    "0.137+0.071i",
    "-0.221+0.043i",
    "0.289-0.118i",
    "-0.064-0.197i",
    "0.353+0.162i",
    "-0.318+0.231i",
    "0.041+0.274i",
    "0.197-0.262i",
]

PARAMS = [
    "0.112-0.083i",
    "-0.173+0.151i",
    "0.246+0.027i",
    "-0.091-0.219i",
    "0.318+0.204i",
    "-0.257-0.066i",
    "0.059+0.338i",
    "-0.142+0.281i",
]
