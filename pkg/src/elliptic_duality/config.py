# config.py

import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional, Tuple

from .exceptions import ConfigError

ENV_MAX_SIZE = "EHS_MAX_SIZE"
ENV_LOG_LEVEL = "EHS_LOG_LEVEL"
ENV_EXTENDED_DPS = "EHS_EXTENDED_DPS"


@dataclass(frozen=True)
class Settings:
    """Process-wide numerical defaults.

    Attributes:
        max_size: Cap on the number of variables in subset enumerations.
        max_box_weight: Cap on |alpha| for box and sign enumerations.
        lattice_k: Number of multiples of delta checked against the lattice.
        tol_sing: Relative floor below which a denominator counts as singular.
        balance_tol: Relative tolerance on balancing conditions.
        witness_tol: Absolute tolerance for the V-series termination witness.
        self_test_tol: Tolerance of the context construction self-test.
        extended_dps: Decimal digits of the extended-precision backend.
        trunc: Upper bound on theta terms and the oracle lattice radius.
        sampler_max_rejections: Rejection budget of the parameter sampler.
        sampler_separation: Minimum lattice distance of sampled combinations.
        tau_im: Range of Im(tau) drawn by the sampler.
        tau_re: Bound on |Re(tau)| drawn by the sampler.
        param_box: Half-width of the box free parameters are drawn from.
    """
    max_size: int = 12
    max_box_weight: int = 10
    lattice_k: int = 64
    tol_sing: float = 1e-8
    balance_tol: float = 1e-12
    witness_tol: float = 1e-10
    self_test_tol: float = 1e-9
    extended_dps: int = 50
    trunc: int = 40
    sampler_max_rejections: int = 10000
    sampler_separation: float = 1e-3
    tau_im: Tuple[float, float] = (0.8, 1.5)
    tau_re: float = 0.5
    param_box: float = 0.5
    log_level: str = "WARNING"


def _int_from_env(environ: Mapping[str, str], name: str) -> Optional[int]:
    raw = environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 0:
        raise ConfigError(f"{name} must be non-negative, got {value}")
    return value


def load_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """Build Settings from defaults and EHS_* environment overrides."""
    environ = os.environ if environ is None else environ
    settings = Settings()

    max_size = _int_from_env(environ, ENV_MAX_SIZE)
    if max_size is not None:
        settings = replace(settings, max_size=max_size)

    dps = _int_from_env(environ, ENV_EXTENDED_DPS)
    if dps is not None:
        if dps < 30:
            raise ConfigError(f"{ENV_EXTENDED_DPS} must be at least 30, got {dps}")
        settings = replace(settings, extended_dps=dps)

    level = environ.get(ENV_LOG_LEVEL)
    if level:
        settings = replace(settings, log_level=level.upper())
    return settings
