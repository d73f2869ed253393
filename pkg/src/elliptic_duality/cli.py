# cli.py

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from . import __version__
from .bracket import BracketCase, Precision, bracket, make_context, sigma_oracle
from .config import Settings, load_settings
from .exceptions import ConfigError, EllipticDualityError, NearSingularity, SamplerExhausted
from .identities import catalog
from .identities.runner import replay_fixture, run_suite, run_trials
from .models.indices import MultiIndex
from .models.params import ParamsBC
from .models.report import IdentityReport, TrialConfig, load_fixtures, save_suite, suite_document
from .operators import c_sigma_rec
from .series import PhiSpec, phi_alpha, v_series
from .utils.file_ops import dump_yaml
from .utils.numbers import format_complex

logger = logging.getLogger(__name__)

EXPRESSIONS = ("bracket", "sigma", "phi", "v", "c-sigma")

# eval needs a second period in the elliptic case
DEFAULT_TAU = "0.1+1.1i"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass
class CliConfig:
    """Parsed command line."""
    command: str
    identity: Optional[str] = None
    sizes: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    trials: int = 25
    tolerance: Optional[float] = None
    precision: str = "double"
    case: str = "elliptic"
    tau: Optional[str] = None
    delta: Optional[str] = None
    quad_coeff: Optional[str] = None
    tol_sing: Optional[float] = None
    workers: int = 1
    out: Optional[str] = None
    format: str = "human"
    fixture: Optional[str] = None
    expr: Optional[str] = None
    points: Dict[str, List[str]] = field(default_factory=dict)
    allow_truncation: bool = False
    log_level: Optional[str] = None

    def trial_config(self) -> TrialConfig:
        return TrialConfig(
            seed=self.seed,
            trials=self.trials,
            sizes=dict(self.sizes),
            tolerance=self.tolerance,
            precision=self.precision,
            case=self.case,
            tol_sing=self.tol_sing,
            tau=self.tau,
            delta=self.delta,
            quad_coeff=self.quad_coeff,
            workers=self.workers,
        )


def _complex_list(text: str) -> List[str]:
    return [token for token in text.split(",") if token]


def _signed(option: str, text: str) -> str:
    # a token such as -0.3+0.1i after a space is taken for an option
    return f"{text}; write --{option}=-0.3+0.1i when the value starts with a minus"


def _size_pair(text: str):
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {text!r}")
    return key, value


def _add_context_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--precision", choices=[m.value for m in Precision], default="double")
    p.add_argument("--case", choices=[m.value for m in BracketCase], default="elliptic")
    p.add_argument("--tau", help=_signed("tau", "second period over the first, a+bi"))
    p.add_argument("--delta", help=_signed("delta", "shift step, a+bi"))
    p.add_argument(
        "--quad-coeff", dest="quad_coeff", help=_signed("quad-coeff", "coefficient of the e(a u^2) prefactor, a+bi")
    )


def _add_run_options(p: argparse.ArgumentParser) -> None:
    _add_context_options(p)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, help="overrides the identity's default tolerance")
    p.add_argument("--tol-sing", dest="tol_sing", type=float, help="relative near-singularity floor")
    p.add_argument("--workers", type=int, default=1, help="processes used for the trials")
    p.add_argument("--out", help="write the machine report to this path")
    p.add_argument("--format", choices=["human", "machine"], default="human")


def _add_size_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", help="multi-index, e.g. 2,1")
    p.add_argument("--beta", help="multi-index, e.g. 1,1,1")
    for key in ("N", "M", "r", "s", "m"):
        p.add_argument(f"--{key}", type=int, dest=f"size_{key}")
    p.add_argument("--size", action="append", type=_size_pair, default=[], metavar="KEY=VALUE",
                   help="any other size, e.g. --size sigma=6 or --size L=1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elliptic-duality",
        description="Numerical checks of elliptic hypergeometric duality identities.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", dest="log_level", help="logging level (default WARNING or EHS_LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("list", help="list the identity catalog")
    p.add_argument("--format", choices=["human", "machine"], default="human")

    p = commands.add_parser("check", help="run one identity, or replay a fixture")
    p.add_argument("--identity", choices=catalog.ids(), metavar="ID")
    p.add_argument("--fixture", help="replay a stored fixture or every failure of a saved report")
    _add_size_options(p)
    _add_run_options(p)

    p = commands.add_parser("suite", help="run the whole catalog at default sizes")
    _add_run_options(p)

    p = commands.add_parser("eval", help="evaluate a single expression")
    p.add_argument("--expr", choices=EXPRESSIONS, required=True)
    p.add_argument("--x", type=_complex_list, help=_signed("x", "point(s), comma separated a+bi tokens"))
    p.add_argument("--u", type=_complex_list, help=_signed("u", "upper arguments of phi or v"))
    p.add_argument("--a", type=_complex_list, help=_signed("a", "the eight BC parameters for c-sigma"))
    p.add_argument("--c", type=_complex_list, help=_signed("c", "the four c-parameters for c-sigma"))
    p.add_argument("--sigma", type=int, default=1, help="length of the C_sigma band")
    p.add_argument("--allow-truncation", dest="allow_truncation", action="store_true")
    _add_size_options(p)
    _add_context_options(p)
    return parser


def _collect_sizes(ns: argparse.Namespace) -> Dict[str, Any]:
    sizes: Dict[str, Any] = {}
    for key in ("alpha", "beta"):
        text = getattr(ns, key, None)
        if text is not None:
            sizes[key] = MultiIndex.parse(text).parts
    for key in ("N", "M", "r", "s", "m"):
        value = getattr(ns, f"size_{key}", None)
        if value is not None:
            sizes[key] = value
    for key, value in getattr(ns, "size", []):
        sizes[key] = MultiIndex.parse(value).parts if "," in value or key in ("mu", "nu") else int(value)
    return sizes


def parse_args(argv: Optional[List[str]] = None) -> CliConfig:
    """Parse the command line; usage errors exit with code 2."""
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        sizes = _collect_sizes(ns) if ns.command in ("check", "eval") else {}
    except (ConfigError, ValueError) as e:
        parser.error(str(e))
    if ns.command == "check" and not (ns.identity or ns.fixture):
        parser.error("check needs --identity or --fixture")
    config = CliConfig(command=ns.command, sizes=sizes, log_level=ns.log_level)
    for name in ("identity", "seed", "trials", "tolerance", "precision", "case", "tau", "delta", "quad_coeff",
                 "tol_sing", "workers", "out", "format", "fixture", "expr", "allow_truncation"):
        if hasattr(ns, name):
            setattr(config, name, getattr(ns, name))
    for name in ("x", "u", "a", "c"):
        if getattr(ns, name, None) is not None:
            config.points[name] = getattr(ns, name)
    if ns.command == "eval":
        config.sizes.setdefault("sigma", ns.sigma)
    return config


# --- output ----------------------------------------------------------------------------------


def _print_table(reports: List[IdentityReport]) -> None:
    print(f"{'identity':<26} {'trials':>6} {'max residual':>13} {'tolerance':>10} {'pass':>5} {'ms':>9}")
    for r in reports:
        print(
            f"{r.identity:<26} {r.trials:>6} {r.max_residual:>13.3e} {r.tolerance:>10.1e} "
            f"{'yes' if r.passed else 'NO':>5} {r.wall_ms:>9.1f}"
        )


def _emit(config: CliConfig, reports: List[IdentityReport], single: bool) -> None:
    if config.out:
        if single and len(reports) == 1:
            reports[0].save(config.out)
        else:
            save_suite(config.out, reports)
    if config.format == "machine":
        document = reports[0].to_dict() if single and len(reports) == 1 else suite_document(reports)
        sys.stdout.write(dump_yaml(document))
    else:
        _print_table(reports)


def _run_list(config: CliConfig) -> int:
    specs = list(catalog.CATALOG.values())
    if config.format == "machine":
        sys.stdout.write(dump_yaml({'identities': [spec.describe() for spec in specs]}))
        return EXIT_OK
    for spec in specs:
        sizes = " ".join(
            f"{k}={','.join(map(str, v)) if isinstance(v, tuple) else v}" for k, v in spec.sizes.items()
        )
        print(f"{spec.id:<26} {'/'.join(spec.cases):<22} {sizes:<28} {spec.description}")
    return EXIT_OK


def _run_check(config: CliConfig, settings: Settings) -> int:
    if config.fixture:
        reports = [replay_fixture(f, settings, config.tolerance) for f in load_fixtures(config.fixture)]
        if not reports:
            raise ConfigError(f"{config.fixture} holds no failures to replay")
    else:
        reports = [run_trials(config.identity, config.trial_config(), settings)]
    _emit(config, reports, single=True)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _run_suite(config: CliConfig, settings: Settings) -> int:
    reports = run_suite(config.trial_config(), settings)
    _emit(config, reports, single=False)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _one(config: CliConfig, name: str):
    values = config.points.get(name) or []
    if len(values) != 1:
        raise ConfigError(f"--expr {config.expr} needs exactly one value for --{name}")
    return values[0]


def _run_eval(config: CliConfig, settings: Settings) -> int:
    case = BracketCase.parse(config.case)
    ctx = make_context(
        case=case,
        omega1=1,
        omega2=(config.tau or DEFAULT_TAU) if case is BracketCase.ELLIPTIC else None,
        quad_coeff=config.quad_coeff or 0,
        delta=config.delta or "0.31+0.07i",
        precision=config.precision,
        settings=settings,
    )
    expr = config.expr
    if expr == "bracket":
        value = bracket(ctx, _one(config, "x"))
    elif expr == "sigma":
        value = sigma_oracle(ctx, _one(config, "x"))
    elif expr == "phi":
        alpha = MultiIndex(config.sizes.get("alpha", ()))
        spec = PhiSpec(alpha=alpha, x=tuple(config.points.get("x", [])), u=tuple(config.points.get("u", [])))
        value = phi_alpha(ctx, spec)
    elif expr == "v":
        if "N" not in config.sizes:
            raise ConfigError("--expr v needs --N, the number of terms minus one")
        value = v_series(ctx, _one(config, "x"), config.points.get("u", []), config.sizes["N"],
                         allow_truncation=config.allow_truncation)
    else:
        params = ParamsBC.of(ctx, config.points.get("a", []), config.points.get("c"))
        value = c_sigma_rec(ctx, params, _one(config, "x"), config.sizes["sigma"])
    digits = settings.extended_dps if ctx.is_extended else 17
    print(format_complex(value, digits))
    return EXIT_OK


def run(config: CliConfig, settings: Optional[Settings] = None) -> int:
    """Execute a parsed command: 0 when everything passes, 1 on a failed check, 2 on bad configuration."""
    try:
        settings = settings or load_settings()
        if config.command == "list":
            return _run_list(config)
        if config.command == "check":
            return _run_check(config, settings)
        if config.command == "suite":
            return _run_suite(config, settings)
        return _run_eval(config, settings)
    except (NearSingularity, SamplerExhausted) as e:
        logger.error("[CLI] %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except EllipticDualityError as e:
        logger.error("[CLI] %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def _configure_logging(config: CliConfig) -> None:
    try:
        level = config.log_level or load_settings().log_level
    except ConfigError:
        level = "WARNING"
    logging.basicConfig(level=getattr(logging, str(level).upper(), logging.WARNING),
                        format="%(asctime)s %(levelname)s %(name)s %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _configure_logging(config)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
