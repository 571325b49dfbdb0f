"""Squared-error loss, analytic gradients, and the gradient-descent loop.

The objective over a dataset is ``E = 1/2 * sum_k (h(x_k) - y_k)^2`` with
``h = sigmoid(preactivation(x))``.  Per-sample gradients share the common
factor ``(h - y) * sigmoid'(f)``; the remaining factor is the partial of the
preactivation with respect to each parameter.  In batch mode one iteration
applies the sum of per-sample gradients (the exact gradient of E); in
per-sample mode one iteration is a pass over the samples in dataset order,
updating after each.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import Dataset, Sample
from .neurons import (
    DEFAULT_ACTIVATION,
    FactoredQuadraticNeuron,
    GeneralQuadraticNeuron,
    LinearNeuron,
    Neuron,
    SigmoidActivation,
    forward,
    neuron_from_vector,
    parameters_to_vector,
    preactivation,
    sigmoid,
    triangle_indices,
)


class DivergenceError(RuntimeError):
    """Raised when training produces non-finite loss or parameters."""

    def __init__(self, iteration: int, detail: str):
        super().__init__(f"training diverged at iteration {iteration}: {detail}")
        self.iteration = iteration


@dataclass(frozen=True)
class TrainingConfig:
    """Gradient-descent settings.

    eta is the step size (sensible values lie between zero and one),
    max_iters the iteration budget, and loss_tol an early-stop threshold:
    iteration stops as soon as the dataset loss drops below it.  The default
    loss_tol of 0 runs the full budget.  mode selects batch updates or
    per-sample updates.
    """

    eta: float = 0.5
    max_iters: int = 10000
    loss_tol: float = 0.0
    mode: str = "batch"
    beta: float = 1.0

    def __post_init__(self):
        if not self.eta > 0:
            raise ValueError(f"eta must be positive, got {self.eta}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.loss_tol < 0:
            raise ValueError(f"loss_tol must be >= 0, got {self.loss_tol}")
        if self.mode not in ("batch", "sample"):
            raise ValueError(f"mode must be 'batch' or 'sample', got {self.mode!r}")
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")

    @property
    def activation(self) -> SigmoidActivation:
        return SigmoidActivation(self.beta)


@dataclass(frozen=True)
class TrainReport:
    """Outcome of a training run.

    loss_history holds the dataset loss after each completed iteration, so
    its length equals iterations_run; final_loss is its last entry, or the
    initial loss if no iteration ran.
    """

    iterations_run: int
    final_loss: float
    loss_history: tuple[float, ...]
    final_neuron: Neuron

    def __post_init__(self):
        object.__setattr__(self, "loss_history", tuple(self.loss_history))


def sample_loss(neuron: Neuron, sample: Sample, act: SigmoidActivation = DEFAULT_ACTIVATION) -> float:
    """Single-sample objective ``1/2 (h(x) - y)^2``."""
    h = forward(neuron, sample.x, act)
    return 0.5 * float(h - sample.y) ** 2


def dataset_loss(neuron: Neuron, dataset: Dataset, act: SigmoidActivation = DEFAULT_ACTIVATION) -> float:
    """``1/2 * sum_k (h(x_k) - y_k)^2`` over the whole dataset."""
    if len(dataset) == 0:
        raise ValueError("dataset_loss needs a non-empty dataset")
    h = forward(neuron, dataset.X, act)
    residual = h - dataset.y
    return 0.5 * float(residual @ residual)


def _residual_factor(neuron, x, y, act):
    """Common gradient factor ``(h - y) * beta * h * (1 - h)`` per sample."""
    f = preactivation(neuron, x)
    h = sigmoid(f, act)
    return (h - y) * act.beta * h * (1.0 - h)


def grad_linear(neuron: LinearNeuron, sample: Sample, act: SigmoidActivation = DEFAULT_ACTIVATION) -> np.ndarray:
    """Per-sample partials for the affine unit, in parameter order (w, b)."""
    coef = _residual_factor(neuron, sample.x, sample.y, act)
    return np.concatenate([coef * sample.x, [coef]])


def grad_factored(
    neuron: FactoredQuadraticNeuron, sample: Sample, act: SigmoidActivation = DEFAULT_ACTIVATION
) -> np.ndarray:
    """Per-sample partials for the factored form.

    With e = h - y and d = sigmoid'(f): the w_r partials are e*d*x_i*(w_g.x + b2),
    the w_g partials e*d*x_i*(w_r.x + b1), the w_b partials e*d*x_i^2, and the
    b1, b2, c partials e*d*(w_g.x + b2), e*d*(w_r.x + b1), e*d.
    """
    x = sample.x
    coef = _residual_factor(neuron, x, sample.y, act)
    r = float(x @ neuron.w_r) + neuron.b1
    g = float(x @ neuron.w_g) + neuron.b2
    return np.concatenate(
        [
            coef * x * g,
            coef * x * r,
            coef * x * x,
            [coef * g, coef * r, coef],
        ]
    )


def grad_general(
    neuron: GeneralQuadraticNeuron, sample: Sample, act: SigmoidActivation = DEFAULT_ACTIVATION
) -> np.ndarray:
    """Per-sample partials for the general form.

    With e, d as above: the cross-term partials are e*d*x_i*x_j (the stored
    coefficient covers the unordered pair), the diagonal partials e*d*x_i^2,
    the linear partials e*d*x_k, and the constant partial e*d.
    """
    x = sample.x
    coef = _residual_factor(neuron, x, sample.y, act)
    tri = np.array([x[i] * x[j] for i, j in triangle_indices(neuron.n)])
    return np.concatenate([coef * tri, coef * x, [coef]])


def analytic_gradient(neuron: Neuron, sample: Sample, act: SigmoidActivation = DEFAULT_ACTIVATION) -> np.ndarray:
    """Dispatch to the per-sample gradient of the given neuron kind."""
    if isinstance(neuron, LinearNeuron):
        return grad_linear(neuron, sample, act)
    if isinstance(neuron, FactoredQuadraticNeuron):
        return grad_factored(neuron, sample, act)
    if isinstance(neuron, GeneralQuadraticNeuron):
        return grad_general(neuron, sample, act)
    raise TypeError(f"unsupported neuron type: {type(neuron).__name__}")


def dataset_gradient(neuron: Neuron, dataset: Dataset, act: SigmoidActivation = DEFAULT_ACTIVATION) -> np.ndarray:
    """Batch gradient: the sum of per-sample gradients, computed vectorized."""
    X = dataset.X
    coef = _residual_factor(neuron, X, dataset.y, act)
    if isinstance(neuron, LinearNeuron):
        return np.concatenate([X.T @ coef, [coef.sum()]])
    if isinstance(neuron, FactoredQuadraticNeuron):
        r = X @ neuron.w_r + neuron.b1
        g = X @ neuron.w_g + neuron.b2
        return np.concatenate(
            [
                X.T @ (coef * g),
                X.T @ (coef * r),
                (X * X).T @ coef,
                [(coef * g).sum(), (coef * r).sum(), coef.sum()],
            ]
        )
    if isinstance(neuron, GeneralQuadraticNeuron):
        pair_products = np.column_stack(
            [X[:, i] * X[:, j] for i, j in triangle_indices(neuron.n)]
        )
        return np.concatenate([pair_products.T @ coef, X.T @ coef, [coef.sum()]])
    raise TypeError(f"unsupported neuron type: {type(neuron).__name__}")


def apply_update(neuron: Neuron, gradient: np.ndarray, eta: float) -> Neuron:
    """One step of ``param <- param - eta * gradient``; returns a new neuron."""
    if not eta > 0:
        raise ValueError(f"eta must be positive, got {eta}")
    params = parameters_to_vector(neuron)
    gradient = np.asarray(gradient, dtype=np.float64)
    if gradient.shape != params.shape:
        raise ValueError(
            f"gradient shape {gradient.shape} does not match parameter shape {params.shape}"
        )
    return neuron_from_vector(neuron, params - eta * gradient)


def train(neuron: Neuron, dataset: Dataset, config: TrainingConfig = TrainingConfig()) -> TrainReport:
    """Run gradient descent until the loss drops below loss_tol or the budget ends.

    Fully deterministic: identical inputs produce an identical report,
    loss history included.  Raises DivergenceError if the loss or any
    parameter stops being finite, naming the iteration.
    """
    act = config.activation
    current = neuron
    loss = dataset_loss(current, dataset, act)
    history: list[float] = []
    iterations = 0
    while iterations < config.max_iters and loss >= config.loss_tol:
        if config.mode == "batch":
            step = dataset_gradient(current, dataset, act)
            current = _checked_update(current, step, config.eta, iterations + 1)
        else:
            for sample in dataset:
                step = analytic_gradient(current, sample, act)
                current = _checked_update(current, step, config.eta, iterations + 1)
        iterations += 1
        loss = dataset_loss(current, dataset, act)
        if not np.isfinite(loss):
            raise DivergenceError(iterations, f"loss became {loss}")
        history.append(loss)
    return TrainReport(
        iterations_run=iterations,
        final_loss=history[-1] if history else loss,
        loss_history=tuple(history),
        final_neuron=current,
    )


def _checked_update(neuron, gradient, eta, iteration):
    try:
        return apply_update(neuron, gradient, eta)
    except ValueError as exc:
        raise DivergenceError(iteration, str(exc)) from None
