# __init__.py

from .bracket import BracketCase, BracketContext, Precision, bracket, make_context, shifted_factorial
from .config import Settings, load_settings
from .exceptions import EllipticDualityError
from .identities.catalog import CATALOG, IdentitySpec
from .identities.runner import replay_fixture, run_suite, run_trials
from .models.indices import MultiIndex
from .models.params import ParamsBC, ParamsC
from .models.report import IdentityReport, ParamSample, TrialConfig
from .series import PhiSpec, phi_alpha, v_series

__all__ = [
    "BracketCase",
    "BracketContext",
    "Precision",
    "bracket",
    "make_context",
    "shifted_factorial",
    "Settings",
    "load_settings",
    "EllipticDualityError",
    "CATALOG",
    "IdentitySpec",
    "replay_fixture",
    "run_suite",
    "run_trials",
    "MultiIndex",
    "ParamsBC",
    "ParamsC",
    "IdentityReport",
    "ParamSample",
    "TrialConfig",
    "PhiSpec",
    "phi_alpha",
    "v_series",
]

__version__ = "0.1.0"
