# identities/runner.py

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional

from ..config import Settings
from ..exceptions import NearSingularity, UnbalancedParams
from ..models.report import IdentityReport, ParamSample, TrialConfig, TrialRecord
from . import catalog
from .sampler import Sampler, trial_rng

logger = logging.getLogger(__name__)


def _run_trial(
    identity: str, config: TrialConfig, sizes: Dict[str, Any], settings: Settings, index: int
) -> TrialRecord:
    spec = catalog.get(identity)
    record = TrialRecord(index=index)
    record.mark_started()
    sampler = Sampler(
        trial_rng(config.seed, identity, index),
        case=config.case,
        precision=config.precision,
        settings=settings,
        tau=config.tau,
        delta=config.delta,
        quad_coeff=config.quad_coeff,
        tol_sing=config.tol_sing,
    )
    # a candidate whose own denominators fall below the floor is redrawn, not reported
    sample = sampler.draw(identity, spec.draw, sizes, screen=spec.evaluate)
    residual = sampler.screened
    # plain strings, so the record crosses process boundaries and replays at any precision
    frozen = ParamSample.from_dict(sample.to_dict(settings))
    record.mark_completed(float(residual), float(residual.scale), frozen)
    logger.debug("[Runner] %s trial %d residual %.3e", identity, index, record.residual)
    return record


def _run_trial_job(args) -> TrialRecord:
    return _run_trial(*args)


def run_trials(identity: str, config: TrialConfig, settings: Optional[Settings] = None) -> IdentityReport:
    """Evaluate `config.trials` independently sampled instances of one identity.

    Trials run in a process pool when `config.workers > 1`; records are reduced in
    trial order, so the report does not depend on the worker count.

    Raises:
        ConfigError: For an unknown id, an unsupported case or unknown size keys.
        SamplerExhausted: If no admissible sample is found within the rejection budget.
    """
    settings = settings or Settings()
    spec = catalog.get(identity)
    spec.require_case(config.case)
    sizes = spec.resolve_sizes(config.sizes)
    report = IdentityReport(
        identity=identity,
        sizes=sizes,
        seed=config.seed,
        trials=config.trials,
        precision=config.precision,
        case=config.case,
        tolerance=config.tolerance or spec.tolerance_for(config.precision),
    )
    logger.info("[Runner] %s: %d trials, sizes %s, %s precision", identity, config.trials, sizes, config.precision)
    started = time.perf_counter()
    jobs = [(identity, config, sizes, settings, index) for index in range(config.trials)]
    if config.workers > 1 and config.trials > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(_run_trial_job, jobs))
    else:
        records = [_run_trial_job(job) for job in jobs]
    for record in records:
        report.add(record, settings)
    report.wall_ms = (time.perf_counter() - started) * 1000.0
    logger.info(
        "[Runner] %s: max residual %.3e, tolerance %.1e, %s",
        identity, report.max_residual, report.tolerance, "pass" if report.passed else "FAIL",
    )
    return report


def run_suite(config: TrialConfig, settings: Optional[Settings] = None, identities: Optional[List[str]] = None):
    """Run every catalog identity available in the configured case at its default sizes.

    Identities run one after another; `config.workers` parallelizes the trials within each
    identity only. Fanning out across identities would also be valid, since every trial draws
    from its own (seed, identity, trial) stream, but is not done here.
    """
    reports = []
    for identity in identities or catalog.ids():
        spec = catalog.get(identity)
        if not spec.supports(config.case):
            logger.info("[Runner] skipping %s in the %s case", identity, config.case)
            continue
        local = TrialConfig(
            seed=config.seed,
            trials=config.trials,
            tolerance=config.tolerance,
            precision=config.precision,
            case=config.case,
            tol_sing=config.tol_sing,
            tau=config.tau,
            delta=config.delta,
            quad_coeff=config.quad_coeff,
            workers=config.workers,
        )
        reports.append(run_trials(identity, local, settings))
    return reports


def replay_fixture(fixture: Dict[str, Any], settings: Optional[Settings] = None, tolerance: Optional[float] = None):
    """Re-evaluate a stored failure; an unbalanced or singular sample counts as a failed trial."""
    settings = settings or Settings()
    spec = catalog.get(fixture['identity'])
    sample = ParamSample.from_dict(fixture['sample'])
    report = IdentityReport(
        identity=spec.id,
        sizes=dict(sample.sizes),
        seed=0,
        trials=1,
        precision=sample.precision,
        case=sample.case,
        tolerance=tolerance or spec.tolerance_for(sample.precision),
    )
    started = time.perf_counter()
    record = TrialRecord(index=0)
    record.mark_started()
    try:
        ctx = sample.context(settings)
        residual = spec.evaluate(ctx, sample)
        record.mark_completed(float(residual), float(residual.scale), sample)
    except (UnbalancedParams, NearSingularity) as e:
        logger.warning("[Runner] fixture for %s rejected: %s", spec.id, e)
        record.mark_completed(math.inf, 0.0, sample, error=str(e))
    report.add(record, settings)
    report.wall_ms = (time.perf_counter() - started) * 1000.0
    return report
