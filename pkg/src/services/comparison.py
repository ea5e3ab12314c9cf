"""Comparison of the asymptotic formulas against the oracle"""

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Tuple

import structlog
from scipy.special import logsumexp

from src.models.params import MeixnerParams, PrecisionConfig
from src.models.results import ConvergenceFit
from src.models.sweep import CompareRow, SweepSpec
from src.services.asymptotics import in_band, pi_n_asym, turning_points, zero_spacing
from src.services.convergence import fit_order
from src.services.meixner_exact import OracleService
from src.utils.errors import DomainError, SingularPointError

logger = structlog.get_logger()

SINGULAR = "singular"

# Real points per envelope window, and the window width in zero spacings
ENVELOPE_POINTS = 32
ENVELOPE_SPACINGS = 2

Task = Tuple[float, float, int, complex, Optional[float], bool, PrecisionConfig]


def _singular_row(params: MeixnerParams, z: complex) -> CompareRow:
    nan = math.nan
    return CompareRow(
        n=params.n,
        c=params.c,
        beta=params.beta,
        re_z=z.real,
        im_z=z.imag,
        formula_used=SINGULAR,
        log_abs_exact=nan,
        log_abs_asym=nan,
        phase_exact=nan,
        phase_asym=nan,
        rel_err=nan,
    )


def _run_task(task: Task) -> CompareRow:
    """Process-pool entry point; each worker keeps its own oracle"""
    c, beta, n, z, delta, refined, precision = task
    service = ComparisonService(OracleService(precision))
    return service.compare_point(MeixnerParams(c=c, beta=beta, n=n), z, delta, refined)


class ComparisonService:
    """
    Compares pi_n_asym with the extended-precision oracle

    Rows come out param-major, then n-major, then in grid order, no
    matter how many workers evaluate them.
    """

    def __init__(self, oracle: Optional[OracleService] = None):
        self.oracle = oracle or OracleService()

    def compare_point(
        self,
        params: MeixnerParams,
        z: complex,
        delta: Optional[float] = None,
        refined: bool = False,
    ) -> CompareRow:
        z = complex(z)
        try:
            result = pi_n_asym(z, params, delta=delta, refined=refined)
        except SingularPointError as e:
            logger.info("singular_point_marked", n=params.n, z=str(z), reason=str(e))
            return _singular_row(params, z)

        exact = self.oracle.scaled_monic(params, z).scaled()
        asym = result.value
        return CompareRow(
            n=params.n,
            c=params.c,
            beta=params.beta,
            re_z=z.real,
            im_z=z.imag,
            formula_used=result.formula.value,
            log_abs_exact=exact.log_mag,
            log_abs_asym=asym.log_mag,
            phase_exact=exact.phase,
            phase_asym=asym.phase,
            rel_err=asym.rel_err(exact),
        )

    def tasks(self, spec: SweepSpec) -> List[Task]:
        return [
            (c, beta, n, z, spec.delta, spec.refined, spec.precision)
            for c in spec.c_list
            for beta in spec.beta_list
            for n in spec.n_list
            for z in spec.points
        ]

    def run(self, spec: SweepSpec, jobs: int = 1) -> List[CompareRow]:
        """Evaluate every (params, n, z) of the sweep"""
        tasks = self.tasks(spec)
        logger.info("sweep_started", rows=len(tasks), jobs=jobs)
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                rows = list(pool.map(_run_task, tasks))
        else:
            rows = [
                self.compare_point(MeixnerParams(c=c, beta=beta, n=n), z, delta, refined)
                for c, beta, n, z, delta, refined, _ in tasks
            ]
        logger.info("sweep_finished", rows=len(rows))
        return rows

    def convergence(
        self,
        c: float,
        beta: float,
        z: complex,
        n_list: Iterable[int],
        delta: Optional[float] = None,
    ) -> ConvergenceFit:
        """
        Errors over n_list at one point, with their fitted order

        Real points inside (a, b) use envelope_error; everywhere else the
        pointwise relative error is used.
        """
        n_values = list(n_list)
        z = complex(z)
        if in_band(z, turning_points(c)):
            errors = [
                self.envelope_error(MeixnerParams(c=c, beta=beta, n=n), z.real, delta)
                for n in n_values
            ]
            label = f"c={c},beta={beta},x={z.real},envelope"
        else:
            errors = [
                self.compare_point(MeixnerParams(c=c, beta=beta, n=n), z, delta).rel_err
                for n in n_values
            ]
            label = f"c={c},beta={beta},z={z}"
        return fit_order(n_values, errors, label=label)

    def envelope_error(
        self,
        params: MeixnerParams,
        x: float,
        delta: Optional[float] = None,
        points: int = ENVELOPE_POINTS,
    ) -> float:
        """
        RMS of |asym - exact| over a window of real points centred on x,
        relative to the RMS of the local Airy envelope

        Pointwise relative errors are meaningless near the real zeros of
        pi_n; the window spans ENVELOPE_SPACINGS zero spacings, so the
        oscillation of the error in x and in n averages out.

        Raises:
            DomainError: the window leaves the oscillatory band
        """
        tp = turning_points(params.c)
        h = ENVELOPE_SPACINGS * zero_spacing(x, tp, params.n) / points
        window = [x + (k - (points - 1) / 2) * h for k in range(points)]
        if not (in_band(window[0], tp) and in_band(window[-1], tp)):
            raise DomainError(f"envelope window around {x} leaves (a, b) at n = {params.n}")

        diffs, envelopes = [], []
        for z in window:
            result = pi_n_asym(z, params, delta=delta)
            if result.log_envelope is None:
                raise DomainError(f"no Airy envelope at {z}")
            exact = self.oracle.scaled_monic(params, z).scaled()
            diff = result.value.sub(exact)
            if not diff.is_zero:
                diffs.append(2.0 * diff.log_mag)
            envelopes.append(2.0 * result.log_envelope)
        if not diffs:
            return 0.0
        err = math.exp(0.5 * (float(logsumexp(diffs)) - float(logsumexp(envelopes))))
        logger.debug("envelope_error", n=params.n, x=x, points=points, err=err)
        return err


def fit_rows(rows: List[CompareRow]) -> List[ConvergenceFit]:
    """One order fit per (c, beta, z) group of a sweep, in first-seen order"""
    groups: Dict[Tuple[float, float, float, float], List[CompareRow]] = {}
    for row in rows:
        groups.setdefault((row.c, row.beta, row.re_z, row.im_z), []).append(row)

    fits = []
    for (c, beta, re, im), members in groups.items():
        usable = [r for r in members if r.formula_used != SINGULAR and r.rel_err > 0]
        if len(usable) < 2:
            continue
        label = f"c={c},beta={beta},z={complex(re, im)}"
        try:
            fit = fit_order([r.n for r in usable], [r.rel_err for r in usable], label=label)
        except DomainError as e:
            logger.warning("order_fit_skipped", label=label, reason=str(e))
            continue
        logger.info("order_fitted", label=label, order=fit.order, residual=fit.residual)
        fits.append(fit)
    return fits
