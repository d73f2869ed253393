import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from elliptic_duality.config import Settings, load_settings
from elliptic_duality.exceptions import ConfigError
from elliptic_duality.utils.numbers import format_complex, split_complex
from elliptic_duality.utils.summation import CompensatedSum


def test_default_settings():
    settings = load_settings({})
    assert settings == Settings()
    assert settings.max_size == 12
    assert settings.tol_sing == 1e-8
    assert settings.tau_im == (0.8, 1.5)


def test_env_overrides():
    settings = load_settings({"EHS_MAX_SIZE": "5", "EHS_LOG_LEVEL": "debug", "EHS_EXTENDED_DPS": "40"})
    assert settings.max_size == 5
    assert settings.log_level == "DEBUG"
    assert settings.extended_dps == 40


def test_blank_env_value_is_ignored():
    assert load_settings({"EHS_MAX_SIZE": "  "}).max_size == 12


@pytest.mark.parametrize("env", [{"EHS_MAX_SIZE": "many"}, {"EHS_MAX_SIZE": "-1"}, {"EHS_EXTENDED_DPS": "20"}])
def test_bad_env_values(env):
    with pytest.raises(ConfigError):
        load_settings(env)


@pytest.mark.parametrize(
    "token, expected",
    [
        ("0.3+0.1i", ("0.3", "+0.1")),
        ("0.3-0.1i", ("0.3", "-0.1")),
        ("-2", ("-2", "0")),
        ("1.5i", ("0", "1.5")),
        ("i", ("0", "1")),
        ("-i", ("0", "-1")),
        ("1e-3+2E+1j", ("1e-3", "+2E+1")),
    ],
)
def test_split_complex(token, expected):
    assert split_complex(token) == expected


@pytest.mark.parametrize("token", ["", "0.3 + 0.1i", "abc", "1+2", "0.3+0.1k", "1..2"])
def test_split_complex_rejects(token):
    with pytest.raises(ConfigError):
        split_complex(token)


def test_format_complex_double():
    assert format_complex(complex(0.25, -1.5)) == "0.25-1.5i"
    assert format_complex(1) == "1.0+0.0i"


def test_format_complex_extended_keeps_digits():
    mp = mpmath.MPContext()
    mp.dps = 40
    value = mp.mpc(mp.mpf(1) / 3, mp.mpf(-2) / 7)
    text = format_complex(value, 45)
    real, imag = split_complex(text)
    assert abs(mp.mpf(real) - value.real) < mp.mpf(10) ** -38
    assert abs(mp.mpf(imag) - value.imag) < mp.mpf(10) ** -38


@given(st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False))
def test_format_then_split_recovers_double(value):
    real, imag = split_complex(format_complex(value))
    assert complex(float(real), float(imag)) == value


def test_compensated_sum_survives_cancellation():
    total = CompensatedSum()
    total.extend([1e16, 1.0, -1e16, 1j * 1e16, 1j, -1j * 1e16])
    assert total.value == complex(1.0, 1.0)
    assert math.fsum([1e16, 1.0, -1e16]) == total.value.real
