"""Convergence-order estimation"""

from typing import List, Optional, Sequence

import numpy as np
import structlog

from src.models.results import ConvergenceFit
from src.utils.errors import DomainError

logger = structlog.get_logger()


def fit_order(
    n_values: Sequence[int], errors: Sequence[float], label: Optional[str] = None
) -> ConvergenceFit:
    """
    Least-squares fit of log(err) = intercept - order * log(n)

    The residual is the root-mean-square deviation of the fitted line in
    log space.
    """
    if len(n_values) != len(errors):
        raise DomainError("n_values and errors differ in length")
    if len(n_values) < 2:
        raise DomainError("an order fit needs at least two points")
    err = np.asarray(errors, dtype=float)
    if np.any(~np.isfinite(err)) or np.any(err <= 0):
        raise DomainError("errors must be finite and positive")

    log_n = np.log(np.asarray(n_values, dtype=float))
    design = np.column_stack([log_n, np.ones_like(log_n)])
    (slope, intercept), *_ = np.linalg.lstsq(design, np.log(err), rcond=None)
    residual = float(np.sqrt(np.mean((design @ np.array([slope, intercept]) - np.log(err)) ** 2)))

    fit = ConvergenceFit(
        order=float(-slope),
        intercept=float(intercept),
        residual=residual,
        n_values=[int(n) for n in n_values],
        errors=[float(e) for e in errors],
        label=label,
    )
    logger.debug("order_fitted", label=label, order=fit.order, residual=residual)
    return fit


def doubling_ratios(errors: Sequence[float]) -> List[float]:
    """err[k] / err[k+1] for consecutive entries of a doubling sequence"""
    return [a / b for a, b in zip(errors, errors[1:])]
