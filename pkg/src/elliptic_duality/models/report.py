# report.py

import hashlib
import logging
import math
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

from ..bracket import BracketCase, BracketContext, Precision, make_context
from ..config import Settings
from ..exceptions import ConfigError, ReportFormatError
from ..utils.file_ops import atomic_read_yaml, atomic_write_yaml, dump_yaml
from ..utils.locking import report_lock
from ..utils.numbers import format_complex, format_real

logger = logging.getLogger(__name__)

REPORT_VERSION = 1


def _digits(precision: str, settings: Settings) -> int:
    return settings.extended_dps + 5 if precision == Precision.EXTENDED.value else 17


def _encode(value, digits: int):
    if isinstance(value, (list, tuple)):
        return [_encode(v, digits) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return format_complex(value, digits)


def _plain_sizes(sizes: Dict[str, Any]) -> Dict[str, Any]:
    return {key: list(value) if isinstance(value, (list, tuple)) else int(value) for key, value in sizes.items()}


@dataclass
class ParamSample:
    """One sampled point: the context draw, named parameter values and the discrete sizes."""
    case: str
    precision: str
    delta: Any
    quad_coeff: Any
    tau: Optional[Any] = None
    values: Dict[str, Any] = field(default_factory=dict)
    sizes: Dict[str, Any] = field(default_factory=dict)

    def context(self, settings: Optional[Settings] = None, tol_sing: Optional[float] = None) -> BracketContext:
        """Rebuild the bracket context this sample was drawn in."""
        return make_context(
            case=self.case,
            omega1=1,
            omega2=self.tau,
            quad_coeff=self.quad_coeff,
            delta=self.delta,
            precision=self.precision,
            settings=settings,
            tol_sing=tol_sing,
        )

    def to_dict(self, settings: Optional[Settings] = None) -> Dict[str, Any]:
        digits = _digits(self.precision, settings or Settings())
        return {
            'case': self.case,
            'precision': self.precision,
            'tau': _encode(self.tau, digits),
            'delta': _encode(self.delta, digits),
            'quad_coeff': _encode(self.quad_coeff, digits),
            'values': {key: _encode(value, digits) for key, value in self.values.items()},
            'sizes': _plain_sizes(self.sizes),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ParamSample":
        """Values come back as decimal strings; every consumer converts them with ctx.scalar."""
        try:
            return cls(
                case=BracketCase.parse(data['case']).value,
                precision=Precision.parse(data['precision']).value,
                delta=str(data['delta']),
                quad_coeff=str(data['quad_coeff']),
                tau=None if data.get('tau') is None else str(data['tau']),
                values=dict(data.get('values') or {}),
                sizes=dict(data.get('sizes') or {}),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ReportFormatError(f"malformed sample: {e}")

    def digest(self) -> str:
        return hashlib.sha1(dump_yaml(self.to_dict()).encode()).hexdigest()[:12]


@dataclass
class TrialConfig:
    """How one identity is exercised: sampling seed, trial count, sizes and precision."""
    seed: int = 0
    trials: int = 25
    sizes: Dict[str, Any] = field(default_factory=dict)
    tolerance: Optional[float] = None
    precision: str = "double"
    case: str = "elliptic"
    tol_sing: Optional[float] = None
    tau: Optional[str] = None
    delta: Optional[str] = None
    quad_coeff: Optional[str] = None
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ConfigError(f"trials must be at least 1, got {self.trials}")
        if self.tolerance is not None and not self.tolerance > 0:
            raise ConfigError(f"tolerance must be positive, got {self.tolerance}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        try:
            self.precision = Precision.parse(self.precision).value
            self.case = BracketCase.parse(self.case).value
        except ValueError as e:
            raise ConfigError(str(e))


@dataclass
class TrialRecord:
    """Life cycle of a single sampled evaluation."""
    index: int
    residual: Optional[float] = None
    normalization: Optional[float] = None
    sample: Optional[ParamSample] = None
    error: Optional[str] = None
    started_at: Optional[datetime] = None
    duration_seconds: float = 0.0

    def mark_started(self):
        self.started_at = datetime.now()

    def mark_completed(self, residual: float, normalization: float, sample: ParamSample, error: Optional[str] = None):
        self.residual = residual
        self.normalization = normalization
        self.sample = sample
        self.error = error
        try:
            self.duration_seconds = (datetime.now() - self.started_at).total_seconds()
        except TypeError:
            self.duration_seconds = 0.0


@dataclass
class IdentityReport:
    """Outcome of run_trials for one identity; passed iff max_residual < tolerance."""
    identity: str
    sizes: Dict[str, Any]
    seed: int
    trials: int
    precision: str
    case: str
    tolerance: float
    residuals: List[float] = field(default_factory=list)
    normalizations: List[float] = field(default_factory=list)
    failures: List[Dict[str, Any]] = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def max_residual(self) -> float:
        return max(self.residuals) if self.residuals else 0.0

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tolerance

    def add(self, record: TrialRecord, settings: Optional[Settings] = None) -> None:
        self.residuals.append(record.residual)
        self.normalizations.append(record.normalization)
        if not record.residual < self.tolerance:
            logger.warning("[Report] %s trial %d failed: residual %.3e", self.identity, record.index, record.residual)
            self.failures.append(self.fixture(record.sample, record.residual, settings))

    def fixture(self, sample: ParamSample, residual: float, settings: Optional[Settings] = None) -> Dict[str, Any]:
        """A replayable failure entry."""
        return {
            'identity': self.identity,
            'precision': sample.precision,
            'case': sample.case,
            'sizes': _plain_sizes(sample.sizes),
            'residual': format_real(residual),
            'sample': sample.to_dict(settings),
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            'version': REPORT_VERSION,
            'identity': self.identity,
            'sizes': _plain_sizes(self.sizes),
            'seed': self.seed,
            'trials': self.trials,
            'precision': self.precision,
            'case': self.case,
            'tolerance': self.tolerance,
            'max_residual': self.max_residual,
            'residuals': list(self.residuals),
            'normalizations': list(self.normalizations),
            'pass': self.passed,
            'wall_ms': self.wall_ms,
            'failures': list(self.failures),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "IdentityReport":
        if data.get('version') != REPORT_VERSION:
            raise ReportFormatError(f"unsupported report version {data.get('version')!r}")
        try:
            report = cls(
                identity=data['identity'],
                sizes=dict(data['sizes']),
                seed=int(data['seed']),
                trials=int(data['trials']),
                precision=data['precision'],
                case=data['case'],
                tolerance=float(data['tolerance']),
                residuals=[float(r) for r in data['residuals']],
                normalizations=[float(n) for n in data['normalizations']],
                failures=list(data.get('failures') or []),
                wall_ms=float(data['wall_ms']),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ReportFormatError(f"malformed report: {e}")
        if report.passed != bool(data.get('pass')) and not math.isnan(report.max_residual):
            raise ReportFormatError(f"report for {report.identity} has an inconsistent pass flag")
        return report

    def save(self, path: str) -> None:
        """Write the report as YAML under a file lock next to the target."""
        with report_lock(path):
            atomic_write_yaml(path, self.to_dict())
        logger.info("[Report] wrote %s", path)

    @classmethod
    def from_file(cls, path: str) -> "IdentityReport":
        return cls.from_dict(atomic_read_yaml(path))


def suite_document(reports: List[IdentityReport]) -> Dict[str, Any]:
    return {'version': REPORT_VERSION, 'reports': [r.to_dict() for r in reports]}


def save_suite(path: str, reports: List[IdentityReport]) -> None:
    with report_lock(path):
        atomic_write_yaml(path, suite_document(reports))
    logger.info("[Report] wrote suite of %d reports to %s", len(reports), path)


def load_fixtures(path: str) -> List[Dict[str, Any]]:
    """Fixtures from a file holding one fixture, a saved report, or a suite document."""
    data = atomic_read_yaml(path)
    if 'sample' in data:
        return [data]
    if 'reports' in data:
        return [f for report in data['reports'] for f in report.get('failures') or []]
    if 'failures' in data:
        return list(data['failures'] or [])
    raise ReportFormatError(f"{path} holds neither a fixture nor a report")
