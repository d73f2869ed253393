import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import DELTA, POINTS, TAU
from elliptic_duality.bracket import (
    BracketCase,
    Precision,
    bracket,
    bracket_pm,
    duplication_residual,
    halfperiod_product_residual,
    lattice_distance,
    make_context,
    quasi_period_residual,
    riemann_residual,
    separation_residual,
    shifted_factorial,
    shifted_factorial_pm,
    sigma_oracle,
)
from elliptic_duality.exceptions import BadIndex, DegenerateLattice, DeltaInLattice, WrongCase

coordinate = st.floats(min_value=-0.5, max_value=0.5, allow_nan=False)
point = st.builds(complex, coordinate, coordinate)


def test_case_and_precision_parsing():
    assert BracketCase.parse("trigonometric") is BracketCase.TRIGONOMETRIC
    assert BracketCase.parse("elliptic") is BracketCase.ELLIPTIC
    assert Precision.parse("extended") is Precision.EXTENDED
    with pytest.raises(ValueError):
        BracketCase.parse("hyperbolic")


def test_bracket_is_odd(any_ctx):
    for u in POINTS[:4]:
        u = any_ctx.scalar(u)
        assert abs(bracket(any_ctx, u) + bracket(any_ctx, -u)) < 1e-12


def test_bracket_vanishes_on_the_lattice(elliptic_ctx):
    tau = elliptic_ctx.scalar(TAU)
    for z in (1, tau, 1 + tau, 2 - tau):
        assert abs(bracket(elliptic_ctx, z)) < 1e-10


def test_bracket_is_normalized_at_the_origin(any_ctx):
    h = 1e-6
    # sin(pi u / omega1) has slope pi / omega1 at the origin
    slope = math.pi / any_ctx.omega1 if any_ctx.case is BracketCase.TRIGONOMETRIC else 1
    assert abs(bracket(any_ctx, h) / h - slope) < 1e-6 * abs(slope)


def test_rational_bracket(rational_ctx):
    u = rational_ctx.scalar("0.3+0.2i")
    assert abs(bracket(rational_ctx, u) - rational_ctx.e(rational_ctx.quad_coeff * u * u) * u) < 1e-15


def test_sigma_oracle_agrees_near_the_origin():
    ctx = make_context("elliptic", omega1=1, omega2=TAU, quad_coeff=0, delta=DELTA)
    u = ctx.scalar("0.1+0.05i")
    assert abs(sigma_oracle(ctx, u) / bracket(ctx, u) - 1) < 1e-6


def test_sigma_oracle_is_elliptic_only(trig_ctx):
    with pytest.raises(WrongCase):
        sigma_oracle(trig_ctx, 0.1)


def test_extended_matches_double(elliptic_ctx, extended_ctx):
    for u in POINTS:
        assert abs(complex(bracket(extended_ctx, u)) - bracket(elliptic_ctx, u)) < 1e-12


def test_degenerate_lattice():
    with pytest.raises(DegenerateLattice):
        make_context("elliptic", omega1=1, omega2=2)
    with pytest.raises(DegenerateLattice):
        make_context("elliptic", omega1=1)


def test_delta_on_the_lattice():
    with pytest.raises(DeltaInLattice):
        make_context("elliptic", omega1=1, omega2=TAU, delta="0.5")
    with pytest.raises(DeltaInLattice):
        make_context("trig", omega1=1, delta="0.25")
    with pytest.raises(DeltaInLattice):
        make_context("rational", delta=0)


def test_orientation_is_normalized():
    ctx = make_context("elliptic", omega1=1, omega2="0.1-1.1i", delta=DELTA)
    assert ctx.tau.imag > 0


def test_lattice_distance(elliptic_ctx, trig_ctx):
    tau = elliptic_ctx.scalar(TAU)
    assert lattice_distance(elliptic_ctx, 2 + tau + 0.01) == pytest.approx(0.01)
    assert lattice_distance(trig_ctx, 3.02) == pytest.approx(0.02)


def test_bracket_pm(any_ctx):
    x, y = any_ctx.scalar(POINTS[0]), any_ctx.scalar(POINTS[1])
    value = bracket_pm(any_ctx, x, y)
    assert abs(bracket_pm(any_ctx, x, x)) < 1e-15
    assert abs(bracket_pm(any_ctx, x, -y) - value) < 1e-12 * abs(value)
    assert abs(bracket_pm(any_ctx, y, x) + value) < 1e-12 * abs(value)


def test_shifted_factorial(elliptic_ctx):
    u = elliptic_ctx.scalar(POINTS[0])
    assert shifted_factorial(elliptic_ctx, u, 0) == 1
    expected = bracket(elliptic_ctx, u) * bracket(elliptic_ctx, u + elliptic_ctx.delta)
    assert abs(shifted_factorial(elliptic_ctx, u, 2) - expected) < 1e-14
    pm = shifted_factorial(elliptic_ctx, u + 0.1, 2) * shifted_factorial(elliptic_ctx, u - 0.1, 2)
    assert abs(shifted_factorial_pm(elliptic_ctx, u, 0.1, 2) - pm) < 1e-14
    with pytest.raises(BadIndex):
        shifted_factorial(elliptic_ctx, u, -1)


def test_riemann_relation(any_ctx):
    assert riemann_residual(any_ctx, *POINTS[:4]).value < 1e-10


@settings(max_examples=40, deadline=None)
@given(point, point, point, point)
def test_riemann_relation_at_random_points(x, y, u, v):
    ctx = make_context("elliptic", omega1=1, omega2=TAU, quad_coeff="0.03-0.02i", delta=DELTA)
    assert riemann_residual(ctx, x, y, u, v).value < 1e-10


def test_riemann_relation_extended(extended_ctx):
    assert riemann_residual(extended_ctx, *POINTS[:4]).value < 1e-35


def test_duplication(elliptic_ctx):
    for u in POINTS[:4]:
        assert duplication_residual(elliptic_ctx, u).value < 1e-10


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_halfperiod_product(elliptic_ctx, r):
    assert halfperiod_product_residual(elliptic_ctx, r).value < 1e-10


def test_halfperiod_product_bad_index(elliptic_ctx, trig_ctx):
    with pytest.raises(BadIndex):
        halfperiod_product_residual(elliptic_ctx, 4)
    with pytest.raises(WrongCase):
        halfperiod_product_residual(trig_ctx, 1)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_quasi_period_elliptic(elliptic_ctx, r):
    assert quasi_period_residual(elliptic_ctx, POINTS[2], r).value < 1e-10


def test_quasi_period_degenerate_cases(trig_ctx, rational_ctx):
    assert quasi_period_residual(trig_ctx, POINTS[2], 1).value < 1e-12
    with pytest.raises(WrongCase):
        quasi_period_residual(trig_ctx, POINTS[2], 2)
    with pytest.raises(WrongCase):
        quasi_period_residual(rational_ctx, POINTS[2], 1)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_separation(elliptic_ctx, r):
    assert separation_residual(elliptic_ctx, *POINTS[:4], r).value < 1e-10


def test_separation_trig(trig_ctx):
    assert separation_residual(trig_ctx, *POINTS[:4], 1).value < 1e-10
