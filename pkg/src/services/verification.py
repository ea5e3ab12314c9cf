"""
Verification suites

Each suite evaluates a family of identities and rates and reports every
check with its residual and tolerance. A failing check never raises;
errors inside a check are recorded as failures.
"""

import cmath
import math
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np
import structlog

from src.models.params import MeixnerParams, PrecisionConfig, Side
from src.models.results import CheckResult, SuiteReport
from src.services import asymptotics as asym
from src.services import parametrix as para
from src.services import special_kernel as kernel
from src.services.comparison import ComparisonService
from src.services.convergence import doubling_ratios, fit_order
from src.services.meixner_exact import (
    OracleService,
    connection_residual,
    gamma_n_sq,
    meixner_eval,
    meixner_hyp2f1,
    meixner_orthogonality_residual,
    meixner_sum,
    monic_eval,
    orthogonality_residual,
    scaled_monic_eval,
    weight,
)
from src.utils.config import settings
from src.utils.errors import MeixnerError

logger = structlog.get_logger()

SUITES = ("airy", "phi", "parametrix", "factors", "oracle", "convergence", "boundary")

CONVERGENCE_N = (32, 64, 128, 256)


def _rel(a: complex, b: complex) -> float:
    scale = abs(b)
    return abs(a - b) / scale if scale else abs(a)


class VerificationService:
    """
    Runs the named suites with a fixed seed

    Defaults follow the parameter set used throughout the checks
    (c = 0.5, beta = 1.5).
    """

    def __init__(
        self,
        seed: Optional[int] = None,
        precision: Optional[PrecisionConfig] = None,
        c: float = 0.5,
        beta: float = 1.5,
    ):
        self.seed = settings.RANDOM_SEED if seed is None else seed
        self.precision = precision or PrecisionConfig(
            bits=settings.ORACLE_BITS,
            max_bits=settings.ORACLE_MAX_BITS,
            rel_tol=settings.ORACLE_REL_TOL,
        )
        self.c = c
        self.beta = beta
        self.tp = asym.turning_points(c)
        self.delta = asym.resolve_delta(self.tp)
        self.comparison = ComparisonService(OracleService(self.precision))
        self._suites: Dict[str, Callable[[], List[CheckResult]]] = {
            "airy": self.suite_airy,
            "phi": self.suite_phi,
            "parametrix": self.suite_parametrix,
            "factors": self.suite_factors,
            "oracle": self.suite_oracle,
            "convergence": self.suite_convergence,
            "boundary": self.suite_boundary,
        }

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    # Plumbing

    def run(self, suite: str) -> SuiteReport:
        names = SUITES if suite == "all" else (suite,)
        for name in names:
            if name not in self._suites:
                raise ValueError(f"unknown suite {name!r}")
        checks: List[CheckResult] = []
        for name in names:
            logger.info("suite_started", suite=name)
            results = self._suites[name]()
            failed = [c.name for c in results if not c.passed]
            logger.info("suite_finished", suite=name, checks=len(results), failed=len(failed))
            for check in results:
                if not check.passed:
                    logger.warning("check_failed", suite=name, check=check.name,
                                   residual=check.residual, tolerance=check.tolerance)
            checks.extend(results)
        return SuiteReport(suite=suite, passed=all(c.passed for c in checks), checks=checks)

    @staticmethod
    def _check(name: str, residual: float, tolerance: float, **detail) -> CheckResult:
        residual = float(residual)
        passed = math.isfinite(residual) and residual <= tolerance
        return CheckResult(name=name, passed=passed, residual=residual, tolerance=tolerance, detail=detail)

    @staticmethod
    def _guard(name: str, fn: Callable[[], CheckResult]) -> CheckResult:
        try:
            return fn()
        except (MeixnerError, ValueError, ArithmeticError) as e:
            logger.error("check_errored", check=name, error=str(e))
            return CheckResult(name=name, passed=False, residual=math.inf, tolerance=0.0,
                               detail={"error": f"{type(e).__name__}: {e}"})

    def _order_check(self, name: str, n_values, errors, min_order: float, last_max: float) -> CheckResult:
        fit = fit_order(n_values, errors, label=name)
        passed = fit.order >= min_order and errors[-1] <= last_max
        return CheckResult(
            name=name,
            passed=passed,
            residual=errors[-1],
            tolerance=last_max,
            detail={"order": fit.order, "min_order": min_order, "fit_residual": fit.residual,
                    "errors": list(errors), "n": list(n_values)},
        )

    # Suites

    def suite_airy(self) -> List[CheckResult]:
        checks = []
        g23 = math.gamma(2.0 / 3.0)
        ai0, _, bi0, _ = kernel.airy_quartet(0)
        checks.append(self._check("ai_at_zero", _rel(ai0, 3 ** (-2 / 3) / g23), 1e-12))
        checks.append(self._check("bi_at_zero", _rel(bi0, 3 ** (-1 / 6) / g23), 1e-12))

        rng = self.rng()
        radius = 10 * np.sqrt(rng.uniform(0, 1, 100))
        angle = rng.uniform(-math.pi, math.pi, 100)
        grid = [complex(r * math.cos(t), r * math.sin(t)) for r, t in zip(radius, angle)]

        wronskian = connection = sum_rule = 0.0
        w = kernel.OMEGA
        for z in grid:
            ai, aip, bi, bip = kernel.airy_quartet(z)
            terms = abs(ai * bip) + abs(aip * bi) + 1 / math.pi
            wronskian = max(wronskian, abs(ai * bip - aip * bi - 1 / math.pi) / terms)
            a1 = kernel.airy_quartet(w * z)[0]
            a2 = kernel.airy_quartet(w * w * z)[0]
            lhs, rhs = 2 * w * a1, -ai + 1j * bi
            connection = max(connection, abs(lhs - rhs) / (abs(lhs) + abs(ai) + abs(bi)))
            parts = (ai, w * a1, w * w * a2)
            sum_rule = max(sum_rule, abs(sum(parts)) / max(abs(p) for p in parts))
        checks.append(self._check("wronskian", wronskian, 1e-10, points=len(grid)))
        checks.append(self._check("connection_formula", connection, 1e-10, points=len(grid)))
        checks.append(self._check("sum_rule", sum_rule, 1e-12, points=len(grid)))

        table = kernel.airy_coeffs(12)
        checks.append(self._check("u1", abs(float(table.u[1] - Fraction(5, 72))), 0.0))
        checks.append(self._check("v1", abs(float(table.v[1] + Fraction(7, 72))), 0.0))
        ctx = kernel.mp_context(128)
        worst = 0.0
        for s in range(11):
            closed = ctx.gamma(3 * s + ctx.mpf(1) / 2) / (
                ctx.mpf(54) ** s * ctx.factorial(s) * ctx.gamma(s + ctx.mpf(1) / 2))
            exact = ctx.mpf(table.u[s].numerator) / table.u[s].denominator
            worst = max(worst, float(abs(exact / closed - 1)))
        checks.append(self._check("u_gamma_ratio", worst, 1e-30))

        u5, v5 = abs(float(table.u[5])), abs(float(table.v[5]))
        worst = 0.0
        for r in (20, 40, 80):
            for t in (0, math.pi / 4, -math.pi / 4, 2 * math.pi / 3, -2 * math.pi / 3):
                z = cmath.rect(r, t)
                zeta = abs(kernel.airy_zeta(z))
                ai, aip, _, _ = kernel.airy_quartet(z)
                sa, sap = kernel.airy_asymptotic(z, terms=5)
                worst = max(
                    worst,
                    _rel(sa, ai) / (10 * u5 / zeta ** 5 + 1e-12),
                    _rel(sap, aip) / (10 * v5 / zeta ** 5 + 1e-12),
                )
        checks.append(self._check("asymptotic_consistency", worst, 1.0))

        z = complex(20, 5)
        ai, aip, _, _ = kernel.airy_quartet(z)
        sa, sap = kernel.airy_asymptotic(z)
        checks.append(self._check("optimal_truncation", max(_rel(sa, ai), _rel(sap, aip)), 1e-12))

        lead = 100 ** -0.25 / (2 * math.sqrt(math.pi))
        checks.append(self._check("scaled_large_real", _rel(kernel.airy_scaled(100)[0], lead), 2e-3))
        z = complex(5, 5)
        zeta = kernel.airy_zeta(z)
        scaled = kernel.airy_scaled(z)
        plain = kernel.airy_quartet(z)
        unscaled = (scaled[0] * cmath.exp(-zeta), scaled[1] * cmath.exp(-zeta),
                    scaled[2] * cmath.exp(zeta), scaled[3] * cmath.exp(zeta))
        checks.append(self._check("scaled_consistency", max(_rel(u, p) for u, p in zip(unscaled, plain)), 1e-10))

        worst = 0.0
        for z in (0.5, complex(2, 3), complex(-4, 1), complex(5, 5)):
            double = kernel.airy_quartet(z)
            extended = kernel.airy_quartet_mp(z, 128)
            worst = max(worst, max(_rel(d, complex(e)) for d, e in zip(double, extended)))
        checks.append(self._check("double_vs_extended_airy", worst, 1e-12))

        worst = 0.0
        for w in (0.5, 5, complex(3, 4), complex(-2.5, 1), complex(0.1, -7)):
            d = kernel.log_gamma(w)
            e = complex(kernel.log_gamma(w, bits=128))
            worst = max(worst, abs(d - e) / max(1.0, abs(e)))
        checks.append(self._check("double_vs_extended_log_gamma", worst, 1e-12))
        checks.append(self._check("log_gamma_half", abs(kernel.log_gamma(0.5) - 0.5 * math.log(math.pi)), 1e-14))
        return checks

    def suite_phi(self) -> List[CheckResult]:
        tp = self.tp
        checks = []
        a, b = asym.rational_turning_points(Fraction(1, 4))
        checks.append(self._check("ab_rational", abs(float(a * b - 1)), 0.0, a=str(a), b=str(b)))
        checks.append(self._check("ab_float", abs(tp.a * tp.b - 1), 1e-15))
        checks.append(self._check("phi_at_b", abs(asym.phi(tp.b + 1e-12, tp)), 1e-10))
        checks.append(self._check("phi_tilde_at_a", abs(asym.phi_tilde(tp.a - 1e-12, tp)), 1e-10))
        checks.append(self._check(
            "phi_tilde_at_zero",
            abs(asym.phi_tilde(1e-12j, tp) - 0.5 * math.log(self.c)), 1e-10))

        rng = self.rng()
        worst = 0.0
        for sign in (1, -1):
            xs = rng.uniform(-3, 9, 200)
            ys = rng.uniform(0.01, 3, 200)
            for x, y in zip(xs, ys):
                z = complex(x, sign * y)
                scale = max(1.0, abs(asym.phi(z, tp)))
                worst = max(worst, asym.phase_identity_residual(z, tp) / scale)
        checks.append(self._check("phase_identity", worst, 1e-12, points=400))

        worst = 0.0
        for z in (complex(0.5, 0.05), complex(3, -0.2), complex(-1, 0.5), complex(7, 1)):
            worst = max(worst, asym.exponential_relation_residual(z, 10, tp, self.beta))
        checks.append(self._check("exponential_relation", worst, 1e-10))

        def large(z: complex) -> float:
            return abs(-asym.phi(z, tp) + asym.v_func(z, self.c) / 2 + asym.l_const(tp) / 2 - cmath.log(z))

        for t in (0.0, math.pi / 4):
            r3, r4 = large(cmath.rect(1e3, t)), large(cmath.rect(1e4, t))
            checks.append(self._check(f"large_z_small_arg_{t:.3f}", r3, 1e-1, at_1e3=r3))
            checks.append(self._check(f"large_z_decay_arg_{t:.3f}", 5 * r4 / max(r3, 1e-300), 1.0,
                                      at_1e3=r3, at_1e4=r4))

        tq = asym.turning_points(0.25)
        for z in (5.0, complex(4, 1)):
            checks.append(self._check(
                f"quadrature_{z}", abs(asym.phi(z, tq) - asym.phi_by_quadrature(z, tq)), 1e-10))

        for x in (1.0, 3.0, 7.0, tp.a / 2):
            for side in (Side.UPPER, Side.LOWER):
                actual, estimate = asym.re_phi_estimate(x, tp, 1e-3, side)
                checks.append(self._check(
                    f"re_phi_estimate_{x:.4f}_{side.value}", abs(actual - estimate) / abs(estimate), 0.1,
                    actual=actual, estimate=estimate))

        ok = True
        for z, side in ((complex(0.5, 0.05), None), (complex(3, 0.05), None), (complex(3, -0.05), None),
                        (complex(2, 1), None), (complex(0.1, 0.5), None), (7.0, Side.UPPER),
                        (-1.0, Side.UPPER), (-1.0, Side.LOWER), (0.5, Side.UPPER)):
            ok = asym.airy_log_args(z, 100, tp, side, self.delta)[2] and ok
        checks.append(self._check("airy_arg_ranges", 0.0 if ok else 1.0, 0.0))

        F, _ = asym.airy_args(7.0, 100, tp)
        checks.append(self._check("F_real_positive_beyond_b", abs(cmath.phase(F)), 1e-12))
        F_up, _ = asym.airy_args(3.0, 100, tp, Side.UPPER)
        checks.append(self._check("F_upper_on_band", abs(abs(cmath.phase(F_up)) - math.pi), 1e-9))
        return checks

    def suite_parametrix(self) -> List[CheckResult]:
        tp, beta = self.tp, self.beta
        checks = []
        xs = [tp.a + (tp.b - tp.a) * (k + 0.5) / 50 for k in range(50)]
        checks.append(self._check("n_jump", max(para.n_jump_residual(x, tp, beta) for x in xs), 1e-6, points=50))

        x = 0.5 * (tp.a + tp.b)
        upper = para.n_matrix(complex(x, 1e-8), tp, beta)
        lower = para.n_matrix(complex(x, -1e-8), tp, beta)
        d = abs(x - 1)
        jump = para.Matrix2C.from_rows([[0, -d ** (beta - 1)], [d ** (1 - beta), 0]])
        checks.append(self._check("n_jump_offset", para._rel_mismatch(upper, lower.matmul(jump)), 1e-6))

        far = para.n_matrix(cmath.rect(1e4, 0.7), tp, beta)
        checks.append(self._check("n_at_infinity", far.sub(para.Matrix2C.identity()).max_abs(), 1e-3))

        worst = abs(para.n_matrix(2j, tp, 1.0).det() - 1)
        for z in (complex(-1, 0.3), complex(3, 2), complex(8, -1), complex(0.5, -0.2)):
            worst = max(worst, abs(para.n_matrix(z, tp, beta).det() - 1))
        checks.append(self._check("n_determinant", worst, 1e-12))

        ys = [-5 + 10 * (k + 0.5) / 50 for k in range(50)]
        checks.append(self._check("a_jump", max(para.a_jump_residual(y) for y in ys), 1e-10, points=50))
        worst = 0.0
        for z in (complex(1, 1), complex(-3, 0.5), complex(2, -4)):
            worst = max(worst, abs(para.a_matrix(z).det() * 2 * math.pi - 1))
        checks.append(self._check("a_determinant", worst, 1e-10))

        r50 = para.a_asymptotic_residual(cmath.rect(50, math.pi / 4))
        r100 = para.a_asymptotic_residual(cmath.rect(100, math.pi / 4))
        checks.append(self._check("a_large_z", r50, 1e-2))
        checks.append(self._check("a_large_z_rate", abs(r50 / r100 / 2 ** 1.5 - 1), 0.3))

        for sign in (1, -1):
            angle = sign * 2 * math.pi / 3
            s50 = para.a_sector_check(cmath.rect(50, angle), sign)
            s100 = para.a_sector_check(cmath.rect(100, angle), sign)
            checks.append(self._check(f"a_sector_{sign:+d}", s50, 1e-2))
            checks.append(self._check(f"a_sector_rate_{sign:+d}", abs(s50 / s100 / 2 ** 1.5 - 1), 0.3))

        xs = [1 + (tp.b - 1) * (k + 0.5) / 20 for k in range(20)]
        checks.append(self._check(
            "composite_no_jump",
            max(para.composite_jump_residual(x, tp, beta, 100) for x in xs), 1e-6, points=20))
        return checks

    def suite_factors(self) -> List[CheckResult]:
        beta = self.beta
        ns = (50, 100, 200, 400)
        checks = []
        d_err = [abs(asym.d_factor(2, n, beta).to_complex() - 1) for n in ns]
        w_err = [abs(asym.w_factor(2, n, beta) - 1) for n in ns]
        dw_err = [abs(asym.dw_combination(2, n, beta)) for n in ns]
        checks.append(self._check(
            "d_halves", max(abs(r / 2 - 1) for r in doubling_ratios(d_err)), 0.3, errors=d_err))
        checks.append(self._check(
            "w_first_order", max(0.0, 1.4 - min(doubling_ratios(w_err))), 0.0, errors=w_err))
        checks.append(self._check(
            "dw_first_order", max(0.0, 1.4 - min(doubling_ratios(dw_err))), 0.0, errors=dw_err))
        checks.append(self._check("d_at_200", abs(asym.d_factor(2, 200, 1.5).to_complex() - 1), 0.01))
        checks.append(self._check("w_at_100", abs(asym.w_factor(1, 100, 1.5) - 1), 0.01))
        checks.append(self._check("w_beta_one", abs(asym.w_factor(complex(0.3, 2), 17, 1.0) - 1), 0.0))
        d1 = asym.d_factor(1, 1, 1.0).to_complex()
        closed = math.e * math.gamma(1.5) / math.sqrt(2 * math.pi)
        checks.append(self._check("d_closed_form", _rel(d1, closed), 1e-12))

        eps = 1e-6
        for y, n, b in ((0.5, 4, 1.0), (0.1, 4, 1.0), (-0.1, 4, 1.0), (0.3, 3, 1.5)):
            left = asym.d_factor(complex(-eps, y), n, b)
            right = asym.d_factor(complex(eps, y), n, b)
            u = n * complex(0, y)
            sgn = 1 if y > 0 else -1
            expected = 1 - cmath.exp(sgn * 2j * math.pi * (u - b / 2))
            checks.append(self._check(f"d_jump_{y}_{n}_{b}", _rel(left.div(right).to_complex(), expected), 1e-4))
        return checks

    def suite_oracle(self) -> List[CheckResult]:
        prec = self.precision
        checks = []
        cases = (
            ("meixner_n1", meixner_eval(MeixnerParams(c=0.5, beta=1.5, n=1), 2, prec), -0.5),
            ("meixner_n2", meixner_eval(MeixnerParams(c=0.5, beta=1.0, n=2), 3, prec), -4.0),
            ("monic_n1", monic_eval(MeixnerParams(c=0.5, beta=1.5, n=1), 2, prec), 0.5),
            ("monic_n2", monic_eval(MeixnerParams(c=0.5, beta=1.0, n=2), 3, prec), -4.0),
            ("monic_n0", monic_eval(MeixnerParams(c=0.5, beta=1.0, n=0), complex(3, 1), prec), 1.0),
        )
        for name, value, expected in cases:
            checks.append(self._check(name, _rel(complex(value.value), expected), 1e-30))

        p1 = MeixnerParams(c=0.5, beta=1.0, n=0)
        p15 = MeixnerParams(c=0.5, beta=1.5, n=0)
        checks.append(self._check("weight_k3", _rel(float(weight(3, p1)), 0.125), 1e-30))
        checks.append(self._check("weight_beta", _rel(float(weight(0, p15)), math.sqrt(math.pi) / 2), 1e-15))
        checks.append(self._check("gamma_sq_n0", _rel(float(gamma_n_sq(p1)), 0.5), 1e-30))
        checks.append(self._check(
            "gamma_sq_n1", _rel(float(gamma_n_sq(p1.model_copy(update={"n": 1}))), 0.25), 1e-30))

        rng = self.rng()
        worst = 0.0
        for _ in range(20):
            x = Fraction(int(rng.integers(-200, 200)), int(rng.integers(1, 50)))
            worst = max(worst, connection_residual(5, Fraction(3, 2), Fraction(1, 2), x, 256))
        checks.append(self._check("connection_formula", worst, 1e-30, points=20))

        worst = 0.0
        for x in (0.3, 2.5, complex(1, 2), -4.25):
            s = meixner_sum(6, 1.5, 0.5, x, 256)
            h = meixner_hyp2f1(6, 1.5, 0.5, x, 256)
            worst = max(worst, float(abs(s - h) / abs(h)))
        checks.append(self._check("hyp2f1_agreement", worst, 1e-60))

        params = MeixnerParams(c=0.5, beta=1.5, n=0)
        bad = []
        for n in range(5):
            for m in range(5):
                report = orthogonality_residual(n, m, params, 400)
                if not (report.within_bound and report.certified):
                    bad.append((n, m))
        checks.append(self._check("orthogonality", float(len(bad)), 0.0, failures=str(bad)))

        geometric = orthogonality_residual(0, 0, MeixnerParams(c=0.5, beta=1.0, n=0), 200)
        checks.append(self._check("orthogonality_geometric", geometric.residual, 2.0 ** -199))

        bad = []
        for n, m in ((0, 0), (1, 2), (3, 3)):
            report = meixner_orthogonality_residual(n, m, params, 400)
            if not report.within_bound:
                bad.append((n, m))
        checks.append(self._check("orthogonality_non_monic", float(len(bad)), 0.0, failures=str(bad)))

        value = scaled_monic_eval(MeixnerParams(c=0.5, beta=1.5, n=256), 3, prec)
        checks.append(self._check("escalation_agreement", value.achieved_rel_err, 1e-20, bits=value.bits_used))

        real = monic_eval(MeixnerParams(c=0.5, beta=1.5, n=7), 2.3, prec).value
        checks.append(self._check("real_on_real_axis", float(abs(kernel.mp_context(64).im(real))), 0.0))

        p = MeixnerParams(c=0.5, beta=1.5, n=7)
        z = complex(1.3, 0.7)
        up = monic_eval(p, z, prec).value
        down = monic_eval(p, z.conjugate(), prec).value
        checks.append(self._check("conjugate_symmetry", float(abs(down - up.conjugate()) / abs(up)), 1e-100))

        worst = 0.0
        for n in range(1, 7):
            pn = MeixnerParams(c=0.5, beta=1.5, n=n)
            diff = sum((-1) ** (n - j) * math.comb(n, j) * monic_eval(pn, j, prec).value for j in range(n + 1))
            worst = max(worst, float(abs(diff / math.factorial(n) - 1)))
        checks.append(self._check("monic_leading_coefficient", worst, 1e-30))
        return checks

    def suite_convergence(self) -> List[CheckResult]:
        checks = []
        for beta in (1.0, 1.5):
            for z in (7.0, 3.0, 0.5, -1.0):
                name = f"order_beta_{beta}_z_{z}"

                def run(z=z, beta=beta, name=name) -> CheckResult:
                    fit = self.comparison.convergence(self.c, beta, z, CONVERGENCE_N, self.delta)
                    return self._order_check(name, fit.n_values, fit.errors, 0.8, 0.02)

                checks.append(self._guard(name, run))
        return checks

    def _window_agreement(self, params: MeixnerParams, x: float) -> float:
        h = asym.zero_spacing(x, self.tp, params.n) / 4
        diffs, sizes = [], []
        for k in range(4):
            z = x + k * h
            outer = asym.asym_outside(z, params, delta=self.delta).value
            inner = asym.asym_inside(z, params, delta=self.delta).value
            sizes.append(max(outer.log_mag, inner.log_mag))
            diffs.append(outer.sub(inner))
        top = max(sizes)
        return max(math.exp(d.log_mag - top) if not d.is_zero else 0.0 for d in diffs)

    def suite_boundary(self) -> List[CheckResult]:
        n = 200
        params = MeixnerParams(c=self.c, beta=self.beta, n=n)
        tol = 10 / n
        checks = []
        for x in (1.02, 0.98, 1.0):
            checks.append(self._guard(
                f"overlap_real_{x}",
                lambda x=x: self._check(f"overlap_real_{x}", self._window_agreement(params, x), tol)))
        for sy in (1, -1):
            for dy in (0.02, -0.02):
                z = complex(0.5, sy * (self.delta + dy))

                def run(z=z) -> CheckResult:
                    outer = asym.asym_outside(z, params, delta=self.delta).value
                    inner = asym.asym_inside(z, params, delta=self.delta).value
                    return self._check(f"overlap_{z}", outer.rel_err(inner), tol)

                checks.append(self._guard(f"overlap_{z}", run))

        def at_one() -> CheckResult:
            inner = asym.pi_n_asym(1.0, params, self.delta)
            outer = asym.pi_n_asym(1.0, params, self.delta, boundary_formula=asym.Formula.EXTERIOR)
            tagged = all(r.region.kind is asym.RegionKind.BOUNDARY and r.z == 1.0 for r in (inner, outer))
            moved = max(abs(inner.z_evaluated.real - 1), abs(outer.z_evaluated.real - 1))
            residual = moved if tagged else math.inf
            return self._check("boundary_point_one", residual, 2 * settings.BOUNDARY_NUDGE,
                               formulas=[inner.formula.value, outer.formula.value])

        checks.append(self._guard("boundary_point_one", at_one))

        def two_sided() -> CheckResult:
            up = asym.asym_outside(-1.0, params, Side.UPPER, self.delta).value
            down = asym.asym_outside(-1.0, params, Side.LOWER, self.delta).value
            return self._check("negative_axis_two_sided", up.rel_err(down), tol)

        checks.append(self._guard("negative_axis_two_sided", two_sided))

        def offset_two_sided() -> CheckResult:
            up = asym.asym_outside(complex(-1, 1e-8), params, delta=self.delta).value
            down = asym.asym_outside(complex(-1, -1e-8), params, delta=self.delta).value
            return self._check("negative_axis_offset", up.rel_err(down), tol)

        checks.append(self._guard("negative_axis_offset", offset_two_sided))

        def reflection() -> CheckResult:
            z = complex(2, 0.5)
            up = asym.asym_outside(z, params, delta=self.delta).value
            down = asym.asym_outside(z.conjugate(), params, delta=self.delta).value
            return self._check("schwarz_reflection", up.rel_err(down.conj()), 1e-10)

        checks.append(self._guard("schwarz_reflection", reflection))
        return checks
