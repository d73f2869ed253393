# identities/__init__.py

from .catalog import CATALOG, IdentitySpec, get, ids
from .runner import replay_fixture, run_suite, run_trials
from .sampler import Sampler, trial_rng

__all__ = [
    "CATALOG",
    "IdentitySpec",
    "get",
    "ids",
    "replay_fixture",
    "run_suite",
    "run_trials",
    "Sampler",
    "trial_rng",
]
