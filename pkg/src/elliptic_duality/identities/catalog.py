# identities/catalog.py

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple

from ..bracket import (
    BracketCase,
    BracketContext,
    Precision,
    duplication_residual,
    halfperiod_product_residual,
    quasi_period_residual,
    riemann_residual,
    separation_residual,
)
from ..exceptions import ConfigError
from ..models.indices import MultiIndex
from ..models.params import ParamsBC, ParamsC
from ..models.report import ParamSample
from ..operators import (
    constant_residual_bc1,
    constant_residual_c1,
    kernel_residual_bc1,
    kernel_residual_c1,
    lemma_general_residual,
    partial_fraction_residual,
    superfluous_c_residual,
)
from ..utils.residuals import Residual
from . import subsets, type_bc, type_c
from .sampler import Sampler

ALL_CASES = ("rational", "trig", "elliptic")
PERIODIC = ("trig", "elliptic")
ELLIPTIC = ("elliptic",)

Draw = Callable[[Sampler, Dict[str, Any]], Dict[str, Any]]
Evaluate = Callable[[BracketContext, ParamSample], Residual]


@dataclass(frozen=True)
class IdentitySpec:
    """A checkable identity: default sizes, supported cases, tolerances and its draw/evaluate pair."""
    id: str
    description: str
    draw: Draw = field(repr=False)
    evaluate: Evaluate = field(repr=False)
    sizes: Dict[str, Any] = field(default_factory=dict)
    cases: Tuple[str, ...] = ALL_CASES
    tolerance: float = 1e-8
    extended_tolerance: float = 1e-20

    def tolerance_for(self, precision) -> float:
        if Precision.parse(precision) is Precision.EXTENDED:
            return self.extended_tolerance
        return self.tolerance

    def supports(self, case) -> bool:
        return BracketCase.parse(case).value in self.cases

    def require_case(self, case) -> None:
        if not self.supports(case):
            raise ConfigError(f"{self.id} is not available in the {BracketCase.parse(case).value} case")

    def resolve_sizes(self, overrides: Dict[str, Any]) -> Dict[str, Any]:
        """Defaults updated by the overrides, whose keys must belong to this identity.

        Raises:
            ConfigError: On a size key the identity does not take.
        """
        unknown = sorted(set(overrides) - set(self.sizes) - _OPTIONAL_SIZES.get(self.id, set()))
        if unknown:
            raise ConfigError(f"{self.id} takes sizes {sorted(self.sizes) or 'none'}, not {unknown}")
        sizes = dict(self.sizes)
        for key, value in overrides.items():
            sizes[key] = tuple(int(v) for v in value) if isinstance(value, (list, tuple)) else int(value)
        return sizes

    def describe(self) -> Dict[str, Any]:
        return {
            'id': self.id,
            'description': self.description,
            'sizes': {k: list(v) if isinstance(v, tuple) else v for k, v in self.sizes.items()},
            'cases': list(self.cases),
            'tolerance': {'double': self.tolerance, 'extended': self.extended_tolerance},
        }


# sizes drawn per trial unless given
_OPTIONAL_SIZES = {'f-mu-nu-specialization': {'mu', 'nu'}}


def _scalar(ctx: BracketContext, sample: ParamSample, key: str):
    return ctx.scalar(sample.values[key])


def _list(ctx: BracketContext, sample: ParamSample, key: str) -> List:
    return [ctx.scalar(v) for v in sample.values[key]]


def _index(sample: ParamSample, key: str) -> MultiIndex:
    return MultiIndex(tuple(int(v) for v in sample.sizes[key]))


def _params_bc(ctx: BracketContext, sample: ParamSample) -> ParamsBC:
    c = sample.values.get('c')
    return ParamsBC.of(ctx, sample.values['a'], c)


def _params_c(ctx: BracketContext, sample: ParamSample) -> ParamsC:
    return ParamsC.of(ctx, sample.values['a'])


def _weight(sizes: Dict[str, Any], key: str) -> int:
    return sum(sizes[key])


# --- draw functions ------------------------------------------------------------------------------


def _draw_points(*names: str) -> Draw:
    def draw(s: Sampler, sizes):
        return {name: s.variable() for name in names}

    return draw


def _draw_nothing(s: Sampler, sizes):
    return {}


def _draw_superfluous(s: Sampler, sizes):
    return {'a': s.free(8), 'x': s.variable(), 'c_first': s.free(1)[0], 'c_second': s.free(1)[0]}


def _draw_kernel_bc1(s: Sampler, sizes):
    return {'a': s.balanced(8, 4), 'c': s.free(4), 'x': s.variable(), 'y': s.variable()}


def _draw_constant_bc1(s: Sampler, sizes):
    return {'a': s.balanced(8, 2), 'x': s.variable()}


def _draw_c1(multiple: int, two_points: bool) -> Draw:
    def draw(s: Sampler, sizes):
        values = {'a': s.balanced(4, multiple), 'x': s.variable()}
        if two_points:
            values['y'] = s.variable()
        return values

    return draw


def _draw_partial_fraction(s: Sampler, sizes):
    return {'z': s.variable(), 'xs': s.variables(sizes['N']), 'ys': s.variables(sizes['N'])}


def _draw_lemma(s: Sampler, sizes):
    d = s.free(sizes['m'])
    offset = sum(d, s.ctx.zero)
    return {'a': s.balanced(sizes['m'] + 4, 2, offset), 'd': d, 'x': s.variable(), 'y': s.variable()}


def _draw_c_sigma(s: Sampler, sizes):
    return {'a': s.free(8), 'c': s.free(4), 'z': s.variable()}


def _draw_cauchy(s: Sampler, sizes):
    return {'z': s.variables(sizes['N']), 'w': s.variables(sizes['N'])}


def _draw_bc_subset(s: Sampler, sizes):
    return {'a': s.balanced(8, 4), 'c': s.free(4), 'z': s.variables(sizes['N']), 'w': s.variables(sizes['N'])}


def _draw_c_subset(s: Sampler, sizes):
    return {'a': s.balanced(4, 1), 'z': s.variables(sizes['N']), 'w': s.variables(sizes['N'])}


def _draw_c_subset_mn(s: Sampler, sizes):
    m, n = sizes['M'], sizes['N']
    return {'a': s.balanced(4, n - m + 1), 'z': s.variables(m), 'w': s.variables(n)}


def _c_multi(multiple: Callable[[int, int], int], with_params: bool = True) -> Draw:
    """Draw for identities over alpha, beta with sum(a) = multiple(M, N) delta."""

    def draw(s: Sampler, sizes):
        m = _weight(sizes, 'alpha')
        n = _weight(sizes, 'beta') if 'beta' in sizes else 0
        values = {'x': s.variables(len(sizes['alpha']))}
        if 'beta' in sizes:
            values['y'] = s.variables(len(sizes['beta']))
        if with_params:
            values['a'] = s.balanced(4, multiple(m, n))
        return values

    return draw


def _draw_c_dual_n1(s: Sampler, sizes):
    m, n = _weight(sizes, 'alpha'), sizes['N']
    return {'a': s.balanced(4, n - m + 1), 'x': s.variables(len(sizes['alpha'])), 'y': s.variable()}


def _draw_v12_11(s: Sampler, sizes):
    return {'a': s.balanced(4, sizes['N'] - sizes['M'] + 1), 'x': s.variable(), 'y': s.variable()}


def _draw_c_vanishing(s: Sampler, sizes):
    values = {'x': s.variables(len(sizes['alpha'])), 'y': s.variables(len(sizes['beta']))}
    values['a1'], values['a3'] = s.free(2)
    return values


def _draw_km(s: Sampler, sizes):
    values = {'x': s.variables(len(sizes['alpha']))}
    if 'beta' in sizes:
        values['y'] = s.variables(len(sizes['beta']))
    values['u'], values['v'] = s.variables(2)
    return values


def _draw_phi_v(s: Sampler, sizes):
    return {'x': s.variable(), 'u': s.free(sizes['n'])}


def _draw_bc_multi(s: Sampler, sizes):
    return {
        'a': s.balanced(8, 4),
        'c': s.free(4),
        'x': s.variables(len(sizes['alpha'])),
        'y': s.variables(len(sizes['beta'])),
    }


def _draw_f_mu_nu(s: Sampler, sizes):
    alpha = sizes['alpha']
    if 'nu' not in sizes or 'mu' not in sizes:
        nu = tuple(s.integer(0, a) for a in alpha)
        sizes['nu'] = nu
        sizes['mu'] = tuple(s.integer(n, a) for n, a in zip(nu, alpha))
    return _draw_bc_multi(s, sizes)


def _draw_bc_subset_mn(s: Sampler, sizes):
    m, n = sizes['M'], sizes['N']
    return {'a': s.excess(4 - 2 * m + 2 * n), 'z': s.variables(m), 'w': s.variables(n)}


def _draw_bc_subset_sum(s: Sampler, sizes):
    m = sizes['M']
    return {'a': s.excess(4 - 2 * m), 'z': s.variables(m)}


def _draw_bc_dual_mn(s: Sampler, sizes):
    m, n = _weight(sizes, 'alpha'), _weight(sizes, 'beta')
    return {
        'a': s.excess(4 - 2 * m + 2 * n),
        'x': s.variables(len(sizes['alpha'])),
        'y': s.variables(len(sizes['beta'])),
    }


def _draw_bc_sum(s: Sampler, sizes):
    return {'a': s.excess(4 - 2 * _weight(sizes, 'alpha')), 'x': s.variables(len(sizes['alpha']))}


# --- evaluate functions --------------------------------------------------------------------------


def _eval_riemann(ctx, sample):
    v = sample.values
    return riemann_residual(ctx, *(ctx.scalar(v[k]) for k in ('x', 'y', 'u', 'v')))


def _eval_separation(ctx, sample):
    v = sample.values
    return separation_residual(ctx, *(ctx.scalar(v[k]) for k in ('x', 'y', 'a', 'b')), sample.sizes['r'])


def _eval_superfluous(ctx, sample):
    return superfluous_c_residual(
        ctx,
        ParamsBC.of(ctx, sample.values['a']),
        _scalar(ctx, sample, 'x'),
        _scalar(ctx, sample, 'c_first'),
        _scalar(ctx, sample, 'c_second'),
        sample.sizes['r'],
    )


def _eval_kernel_bc1(ctx, sample):
    return kernel_residual_bc1(ctx, _params_bc(ctx, sample), _scalar(ctx, sample, 'x'), _scalar(ctx, sample, 'y'))


def _eval_kernel_c1(ctx, sample):
    return kernel_residual_c1(ctx, _params_c(ctx, sample), _scalar(ctx, sample, 'x'), _scalar(ctx, sample, 'y'))


def _eval_c_sigma(ctx, sample):
    return type_bc.c_sigma_forms_residual(
        ctx, _params_bc(ctx, sample), _scalar(ctx, sample, 'z'), sample.sizes['sigma']
    )


def _eval_lemma(ctx, sample):
    return lemma_general_residual(
        ctx, _list(ctx, sample, 'a'), _list(ctx, sample, 'd'), _scalar(ctx, sample, 'x'), _scalar(ctx, sample, 'y')
    )


def _eval_c_multi(function) -> Evaluate:
    def evaluate(ctx, sample):
        return function(
            ctx,
            _params_c(ctx, sample),
            _index(sample, 'alpha'),
            _index(sample, 'beta'),
            _list(ctx, sample, 'x'),
            _list(ctx, sample, 'y'),
        )

    return evaluate


def _eval_bc_multi(function) -> Evaluate:
    def evaluate(ctx, sample):
        return function(
            ctx,
            _params_bc(ctx, sample),
            _index(sample, 'alpha'),
            _index(sample, 'beta'),
            _list(ctx, sample, 'x'),
            _list(ctx, sample, 'y'),
        )

    return evaluate


def _eval_subset_r(function, params) -> Evaluate:
    def evaluate(ctx, sample):
        return function(
            ctx, params(ctx, sample), _list(ctx, sample, 'z'), _list(ctx, sample, 'w'), sample.sizes['r']
        )

    return evaluate


def _eval_c_dual_n1(ctx, sample):
    return type_c.c_dual_n1_residual(
        ctx,
        _params_c(ctx, sample),
        _index(sample, 'alpha'),
        sample.sizes['N'],
        _list(ctx, sample, 'x'),
        _scalar(ctx, sample, 'y'),
    )


def _eval_v12_11(ctx, sample):
    return type_c.v12_11_residual(
        ctx,
        _params_c(ctx, sample),
        sample.sizes['M'],
        sample.sizes['N'],
        _scalar(ctx, sample, 'x'),
        _scalar(ctx, sample, 'y'),
    )


def _eval_zero_formula(ctx, sample):
    return type_c.zero_formula_residual(
        ctx, _index(sample, 'alpha'), _index(sample, 'beta'), _list(ctx, sample, 'x'), _list(ctx, sample, 'y')
    )


def _eval_c_vanishing(ctx, sample):
    return type_c.c_vanishing_residual(
        ctx,
        _scalar(ctx, sample, 'a1'),
        _scalar(ctx, sample, 'a3'),
        sample.sizes['L'],
        _index(sample, 'alpha'),
        _index(sample, 'beta'),
        _list(ctx, sample, 'x'),
        _list(ctx, sample, 'y'),
    )


def _eval_km_transform(ctx, sample):
    return type_c.km_transform_residual(
        ctx,
        _index(sample, 'alpha'),
        _index(sample, 'beta'),
        sample.sizes['r'],
        sample.sizes['s'],
        _list(ctx, sample, 'x'),
        _list(ctx, sample, 'y'),
        _scalar(ctx, sample, 'u'),
        _scalar(ctx, sample, 'v'),
    )


def _eval_km_v_transform(ctx, sample):
    return type_c.km_v_transform_residual(
        ctx,
        _index(sample, 'alpha'),
        sample.sizes['r'],
        sample.sizes['s'],
        _list(ctx, sample, 'x'),
        _scalar(ctx, sample, 'u'),
        _scalar(ctx, sample, 'v'),
    )


def _eval_km_v_sum(ctx, sample):
    return type_c.km_v_sum_residual(
        ctx, _index(sample, 'alpha'), _list(ctx, sample, 'x'), _scalar(ctx, sample, 'u'), _scalar(ctx, sample, 'v')
    )


def _eval_f_mu_nu(ctx, sample):
    return type_bc.f_mu_nu_specialization_residual(
        ctx,
        _params_bc(ctx, sample),
        _index(sample, 'alpha'),
        _index(sample, 'beta'),
        _list(ctx, sample, 'x'),
        _list(ctx, sample, 'y'),
        _index(sample, 'mu'),
        _index(sample, 'nu'),
    )


_SPECS = [
    IdentitySpec(
        'riemann', "Riemann relation [x+-u][y+-v] - [x+-v][y+-u] = [x+-y][u+-v]",
        _draw_points('x', 'y', 'u', 'v'), _eval_riemann, tolerance=1e-10, extended_tolerance=1e-30,
    ),
    IdentitySpec(
        'duplication', "duplication formula of [2x]",
        _draw_points('x'), lambda ctx, s: duplication_residual(ctx, _scalar(ctx, s, 'x')),
        cases=ELLIPTIC, tolerance=1e-10, extended_tolerance=1e-30,
    ),
    IdentitySpec(
        'half-period-product', "product of [(omega_r - omega_s)/2] over s != r",
        _draw_nothing, lambda ctx, s: halfperiod_product_residual(ctx, s.sizes['r']),
        sizes={'r': 1}, cases=ELLIPTIC, tolerance=1e-10, extended_tolerance=1e-30,
    ),
    IdentitySpec(
        'quasi-period', "quasi-periodicity [u + omega_r] = eps_r e(eta_r (u + omega_r/2)) [u]",
        _draw_points('u'), lambda ctx, s: quasi_period_residual(ctx, _scalar(ctx, s, 'u'), s.sizes['r']),
        sizes={'r': 1}, cases=PERIODIC, tolerance=1e-10,
    ),
    IdentitySpec(
        'separation', "separation of [x+-y]/([a+-x][a+omega_r+-y]) into x- and y-parts",
        _draw_points('x', 'y', 'a', 'b'), _eval_separation, sizes={'r': 1}, cases=PERIODIC,
    ),
    IdentitySpec(
        'superfluous-c', "A0_r(x; a|c) - A0_r(x; a|c') = A0_r(c'; a|c)",
        _draw_superfluous, _eval_superfluous, sizes={'r': 0}, cases=ELLIPTIC,
    ),
    IdentitySpec(
        'kernel-bc1', "BC1 kernel identity L(x; a|c) = L(y; b|c) on 1/[x+-y]",
        _draw_kernel_bc1, _eval_kernel_bc1, cases=ELLIPTIC,
    ),
    IdentitySpec(
        'constant-bc1', "BC1 operator on constants under sum(a) = 2 delta",
        _draw_constant_bc1, lambda ctx, s: constant_residual_bc1(ctx, _params_bc(ctx, s), _scalar(ctx, s, 'x')),
        cases=ELLIPTIC,
    ),
    IdentitySpec(
        'kernel-c1', "C1 kernel identity R(x; a) = R(y; b) on 1/[x+-y]",
        _draw_c1(1, True), _eval_kernel_c1,
    ),
    IdentitySpec(
        'constant-c1', "C1 operator on constants under sum(a) = 0",
        _draw_c1(0, False), lambda ctx, s: constant_residual_c1(ctx, _params_c(ctx, s), _scalar(ctx, s, 'x')),
    ),
    IdentitySpec(
        'partial-fraction', "partial fraction expansion of [c] prod [z - y_j]/[z - x_j]",
        _draw_partial_fraction,
        lambda ctx, s: partial_fraction_residual(ctx, _scalar(ctx, s, 'z'), _list(ctx, s, 'xs'), _list(ctx, s, 'ys')),
        sizes={'N': 3}, tolerance=1e-9,
    ),
    IdentitySpec(
        'kernel-lemma', "general five-group kernel identity with m + 4 parameters a and m parameters d",
        _draw_lemma, _eval_lemma, sizes={'m': 2}, tolerance=1e-9,
    ),
    IdentitySpec(
        'c-sigma-forms', "C_sigma as gap-sequence sum, tridiagonal determinant and recurrence",
        _draw_c_sigma, _eval_c_sigma, sizes={'sigma': 6}, cases=ELLIPTIC, tolerance=1e-10,
    ),
    IdentitySpec(
        'cauchy-det', "Cauchy determinant det(1/[z_i+-w_j])",
        _draw_cauchy,
        lambda ctx, s: subsets.cauchy_det_residual(ctx, _list(ctx, s, 'z'), _list(ctx, s, 'w')),
        sizes={'N': 4}, tolerance=1e-9,
    ),
    IdentitySpec(
        'bc-subset', "BC duality on subsets at level r",
        _draw_bc_subset, _eval_subset_r(subsets.bc_subset_residual, _params_bc),
        sizes={'N': 3, 'r': 2}, cases=ELLIPTIC,
    ),
    IdentitySpec(
        'c-subset', "C duality on subsets at level r",
        _draw_c_subset, _eval_subset_r(subsets.c_subset_residual, _params_c), sizes={'N': 3, 'r': 3},
    ),
    IdentitySpec(
        'c-subset-from-bc', "C subset sum as the specialized BC subset sum at half the step",
        _draw_c_subset, _eval_subset_r(subsets.c_subset_from_bc_residual, _params_c),
        sizes={'N': 3, 'r': 2}, cases=ELLIPTIC,
    ),
    IdentitySpec(
        'c-dual-equal', "C duality for |alpha| = |beta|",
        _c_multi(lambda m, n: 1), _eval_c_multi(type_c.c_dual_equal_residual),
        sizes={'alpha': (2, 1), 'beta': (3,)},
    ),
    IdentitySpec(
        'c-dual', "C duality for general |alpha| = M, |beta| = N",
        _c_multi(lambda m, n: n - m + 1), _eval_c_multi(type_c.c_dual_residual),
        sizes={'alpha': (2, 2), 'beta': (1, 1)},
    ),
    IdentitySpec(
        'c-dual-excess', "C duality for M >= N in the excess form",
        _c_multi(lambda m, n: n - m + 1), _eval_c_multi(type_c.c_dual_excess_residual),
        sizes={'alpha': (2, 2), 'beta': (1, 1)},
    ),
    IdentitySpec(
        'c-dual-specialization', "C duality side as the principal specialization of the subset sum",
        _c_multi(lambda m, n: 1), _eval_c_multi(type_c.c_dual_specialization_residual),
        sizes={'alpha': (2, 1), 'beta': (1, 2)},
    ),
    IdentitySpec(
        'c-subset-mn', "full-level C subset duality for |z| = M, |w| = N",
        _draw_c_subset_mn,
        lambda ctx, s: subsets.c_subset_mn_residual(ctx, _params_c(ctx, s), _list(ctx, s, 'z'), _list(ctx, s, 'w')),
        sizes={'M': 3, 'N': 1},
    ),
    IdentitySpec(
        'c-sum', "C summation Phi_alpha(x | delta/2 - a) in closed form",
        _c_multi(lambda m, n: 1 - m),
        lambda ctx, s: type_c.c_sum_residual(ctx, _params_c(ctx, s), _index(s, 'alpha'), _list(ctx, s, 'x')),
        sizes={'alpha': (2, 1)},
    ),
    IdentitySpec(
        'c-dual-n1', "C duality with one dual block as a very-well-poised series",
        _draw_c_dual_n1, _eval_c_dual_n1, sizes={'alpha': (1, 2), 'N': 2},
    ),
    IdentitySpec(
        'v12-11', "transformation between two terminating 12V11 series",
        _draw_v12_11, _eval_v12_11, sizes={'M': 3, 'N': 2},
    ),
    IdentitySpec(
        'zero-formula', "Phi_alpha vanishes for |alpha| = |beta| + 1",
        _c_multi(lambda m, n: 1, with_params=False), _eval_zero_formula,
        sizes={'alpha': (2, 1), 'beta': (1, 1)}, tolerance=1e-7, extended_tolerance=1e-18,
    ),
    IdentitySpec(
        'c-vanishing', "Phi_alpha vanishes for M > N with two free parameter pairs",
        _draw_c_vanishing, _eval_c_vanishing,
        sizes={'alpha': (2, 1), 'beta': (1,), 'L': 0}, tolerance=1e-7, extended_tolerance=1e-18,
    ),
    IdentitySpec(
        'km-transform', "multiple Karlsson-Minton type transformation",
        _draw_km, _eval_km_transform, sizes={'alpha': (2, 1), 'beta': (1,), 'r': 1, 's': 1},
    ),
    IdentitySpec(
        'km-v-transform', "Karlsson-Minton type transformation between very-well-poised series",
        _draw_km, _eval_km_v_transform, sizes={'alpha': (1, 1), 'r': 1, 's': 1},
    ),
    IdentitySpec(
        'km-v-sum', "Karlsson-Minton type summation",
        _draw_km, _eval_km_v_sum, sizes={'alpha': (2, 1)},
    ),
    IdentitySpec(
        'phi-v-bridge', "Phi_(N)(x | u) as a terminating very-well-poised series",
        _draw_phi_v,
        lambda ctx, s: type_c.phi_v_bridge_residual(ctx, s.sizes['N'], _scalar(ctx, s, 'x'), _list(ctx, s, 'u')),
        sizes={'N': 3, 'n': 4},
    ),
    IdentitySpec(
        'f-mu-nu-specialization', "F^alpha_{mu nu} as the principally specialized subset summand",
        _draw_f_mu_nu, _eval_f_mu_nu, sizes={'alpha': (2, 1), 'beta': (1, 2)}, cases=ELLIPTIC,
    ),
    IdentitySpec(
        'bc-dual', "BC duality for |alpha| = |beta|",
        _draw_bc_multi, _eval_bc_multi(type_bc.bc_dual_residual),
        sizes={'alpha': (2, 1), 'beta': (1, 1, 1)}, cases=ELLIPTIC, tolerance=1e-7, extended_tolerance=1e-18,
    ),
    IdentitySpec(
        'bc-dual-specialization', "BC duality side as the principal specialization of the subset sum",
        _draw_bc_multi, _eval_bc_multi(type_bc.bc_dual_specialization_residual),
        sizes={'alpha': (2, 1), 'beta': (1, 2)}, cases=ELLIPTIC, tolerance=1e-7, extended_tolerance=1e-18,
    ),
    IdentitySpec(
        'bc-subset-mn', "full-level BC subset duality for |z| = M >= |w| = N",
        _draw_bc_subset_mn,
        lambda ctx, s: subsets.bc_subset_mn_residual(
            ctx, ParamsBC.of(ctx, s.values['a']), _list(ctx, s, 'z'), _list(ctx, s, 'w')
        ),
        sizes={'M': 3, 'N': 1}, cases=ELLIPTIC, tolerance=1e-7, extended_tolerance=1e-18,
    ),
    IdentitySpec(
        'bc-subset-sum', "BC summation on subsets",
        _draw_bc_subset_sum,
        lambda ctx, s: subsets.bc_subset_sum_residual(ctx, ParamsBC.of(ctx, s.values['a']), _list(ctx, s, 'z')),
        sizes={'M': 3}, cases=ELLIPTIC, tolerance=1e-7, extended_tolerance=1e-18,
    ),
    IdentitySpec(
        'bc-dual-mn', "BC duality for |alpha| = M >= |beta| = N",
        _draw_bc_dual_mn,
        lambda ctx, s: type_bc.bc_dual_mn_residual(
            ctx,
            ParamsBC.of(ctx, s.values['a']),
            _index(s, 'alpha'),
            _index(s, 'beta'),
            _list(ctx, s, 'x'),
            _list(ctx, s, 'y'),
        ),
        sizes={'alpha': (2,), 'beta': (1,)}, cases=ELLIPTIC, tolerance=1e-7, extended_tolerance=1e-18,
    ),
    IdentitySpec(
        'bc-sum', "BC summation over a multi-index",
        _draw_bc_sum,
        lambda ctx, s: type_bc.bc_sum_residual(
            ctx, ParamsBC.of(ctx, s.values['a']), _index(s, 'alpha'), _list(ctx, s, 'x')
        ),
        sizes={'alpha': (2, 1)}, cases=ELLIPTIC, tolerance=1e-7, extended_tolerance=1e-18,
    ),
]

CATALOG: Dict[str, IdentitySpec] = {spec.id: spec for spec in _SPECS}


def get(identity: str) -> IdentitySpec:
    """Look up an identity by id.

    Raises:
        ConfigError: For an unknown id.
    """
    try:
        return CATALOG[identity]
    except KeyError:
        raise ConfigError(f"unknown identity {identity!r}; see the list command")


def ids() -> List[str]:
    return list(CATALOG)
