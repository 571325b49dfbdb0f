"""Finite-difference gradient oracle and comparison harness.

The oracle perturbs one parameter at a time and takes the central difference
of the single-sample loss, so it is completely independent of the analytic
gradient formulas it is used to validate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import Sample
from .neurons import (
    DEFAULT_ACTIVATION,
    Neuron,
    SigmoidActivation,
    neuron_from_vector,
    parameter_names,
    parameters_to_vector,
)
from .training import analytic_gradient, sample_loss

DEFAULT_STEP = 1e-6
DEFAULT_TOL_REL = 1e-6
DEFAULT_TOL_ABS = 1e-9

# Floor for the relative-error denominator, to avoid 0/0.
_REL_FLOOR = 1e-12


def finite_difference_gradient(
    neuron: Neuron,
    sample: Sample,
    act: SigmoidActivation = DEFAULT_ACTIVATION,
    h: float = DEFAULT_STEP,
) -> np.ndarray:
    """Central-difference gradient of the single-sample loss, one parameter at a time."""
    if not h > 0:
        raise ValueError(f"step h must be positive, got {h}")
    params = parameters_to_vector(neuron)
    grad = np.zeros_like(params)
    for i in range(params.size):
        bumped = params.copy()
        bumped[i] = params[i] + h
        plus = sample_loss(neuron_from_vector(neuron, bumped), sample, act)
        bumped[i] = params[i] - h
        minus = sample_loss(neuron_from_vector(neuron, bumped), sample, act)
        grad[i] = (plus - minus) / (2.0 * h)
    return grad


@dataclass(frozen=True)
class ParameterCheck:
    """Analytic-vs-numeric comparison for one parameter."""

    name: str
    analytic: float
    numeric: float
    abs_error: float
    rel_error: float
    passed: bool


@dataclass(frozen=True)
class GradCheckReport:
    """Per-parameter comparison results plus the worst-case summary."""

    per_parameter: tuple[ParameterCheck, ...]
    max_relative_error: float
    max_absolute_error: float
    worst_parameter: str
    passed: bool

    def failures(self) -> tuple[ParameterCheck, ...]:
        return tuple(check for check in self.per_parameter if not check.passed)


def gradient_check(
    neuron: Neuron,
    sample: Sample,
    act: SigmoidActivation = DEFAULT_ACTIVATION,
    h: float = DEFAULT_STEP,
    tol_rel: float = DEFAULT_TOL_REL,
    tol_abs: float = DEFAULT_TOL_ABS,
    gradient_fn=None,
) -> GradCheckReport:
    """Compare an analytic gradient against the finite-difference oracle.

    A parameter passes when its relative error (denominator floored at 1e-12)
    is within tol_rel or its absolute error is within tol_abs.  Failure is
    reported as data, never raised.  gradient_fn overrides the analytic
    gradient under test; the default checks the built-in formulas.
    """
    if gradient_fn is None:
        gradient_fn = analytic_gradient
    analytic = np.asarray(gradient_fn(neuron, sample, act), dtype=np.float64)
    numeric = finite_difference_gradient(neuron, sample, act, h)
    names = parameter_names(neuron)
    checks = []
    for name, a, n in zip(names, analytic, numeric):
        abs_err = abs(a - n)
        rel_err = abs_err / max(abs(a), abs(n), _REL_FLOOR)
        checks.append(
            ParameterCheck(
                name=name,
                analytic=float(a),
                numeric=float(n),
                abs_error=float(abs_err),
                rel_error=float(rel_err),
                passed=bool(rel_err <= tol_rel or abs_err <= tol_abs),
            )
        )
    worst = max(checks, key=lambda check: check.rel_error)
    return GradCheckReport(
        per_parameter=tuple(checks),
        max_relative_error=max(check.rel_error for check in checks),
        max_absolute_error=max(check.abs_error for check in checks),
        worst_parameter=worst.name,
        passed=all(check.passed for check in checks),
    )
