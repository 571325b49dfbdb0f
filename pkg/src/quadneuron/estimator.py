"""scikit-learn compatible wrapper around a single trainable neuron."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .data import Dataset, SplitMix64
from .neurons import (
    FactoredQuadraticNeuron,
    GeneralQuadraticNeuron,
    LinearNeuron,
    classify,
    forward,
    neuron_from_vector,
    parameters_to_vector,
    preactivation,
)
from .training import TrainingConfig, train

_FORMS = {
    "linear": LinearNeuron,
    "factored": FactoredQuadraticNeuron,
    "general": GeneralQuadraticNeuron,
}


class QuadraticNeuronClassifier(BaseEstimator, ClassifierMixin):
    """Binary classifier backed by one quadratic (or affine) neuron.

    The neuron is trained by full-gradient descent on the squared error of
    its sigmoid output against targets in [0, 1]; predictions threshold the
    output.  Training is deterministic: the starting point is either all
    zeros, a splitmix64-seeded uniform draw in [-0.5, 0.5], or an explicit
    neuron passed as ``init``.

    Parameters
    ----------
    form : {'factored', 'general', 'linear'}
        Neuron parameterization to fit (ignored when ``init`` is a neuron).
    eta : float
        Gradient-descent step size.
    max_iters : int
        Iteration budget.
    loss_tol : float
        Early-stop threshold on the dataset loss (0 runs the full budget).
    mode : {'batch', 'sample'}
        Batch updates, or one update per sample per iteration.
    beta : float
        Sigmoid steepness.
    threshold : float
        Classification threshold on the neuron output.
    init : 'zeros', 'uniform', or a neuron instance
        Starting parameters.
    random_state : int
        Seed for the 'uniform' init; unused otherwise.

    Attributes
    ----------
    neuron_ : the trained neuron
    activation_ : the sigmoid activation used
    train_report_ : loss history and iteration count of the fit
    classes_ : fixed at [0, 1]
    """

    def __init__(
        self,
        form: str = "factored",
        eta: float = 0.5,
        max_iters: int = 10000,
        loss_tol: float = 0.0,
        mode: str = "batch",
        beta: float = 1.0,
        threshold: float = 0.5,
        init="zeros",
        random_state: int = 0,
    ):
        self.form = form
        self.eta = eta
        self.max_iters = max_iters
        self.loss_tol = loss_tol
        self.mode = mode
        self.beta = beta
        self.threshold = threshold
        self.init = init
        self.random_state = random_state

    def _initial_neuron(self, n: int):
        if isinstance(self.init, tuple(_FORMS.values())):
            if self.init.n != n:
                raise ValueError(
                    f"init neuron has {self.init.n} inputs but X has {n} features"
                )
            return self.init
        if self.form not in _FORMS:
            raise ValueError(
                f"form must be one of {sorted(_FORMS)}, got {self.form!r}"
            )
        zero = _FORMS[self.form].zeros(n)
        if self.init == "zeros":
            return zero
        if self.init == "uniform":
            rng = SplitMix64(self.random_state)
            size = parameters_to_vector(zero).size
            vec = np.array([rng.uniform(-0.5, 0.5) for _ in range(size)])
            return neuron_from_vector(zero, vec)
        raise ValueError(f"init must be 'zeros', 'uniform', or a neuron, got {self.init!r}")

    def fit(self, X, y):
        """Train the neuron on targets in [0, 1] (fuzzy labels allowed)."""
        X, y = check_X_y(X, y, dtype=np.float64, y_numeric=True)
        if np.any(y < 0.0) or np.any(y > 1.0):
            raise ValueError("targets must lie in [0, 1]")
        dataset = Dataset(X, y)
        config = TrainingConfig(
            eta=self.eta,
            max_iters=self.max_iters,
            loss_tol=self.loss_tol,
            mode=self.mode,
            beta=self.beta,
        )
        report = train(self._initial_neuron(dataset.n), dataset, config)
        self.neuron_ = report.final_neuron
        self.activation_ = config.activation
        self.train_report_ = report
        self.classes_ = np.array([0, 1])
        self.n_features_in_ = dataset.n
        return self

    def _validate_for_predict(self, X) -> np.ndarray:
        check_is_fitted(self, "neuron_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features but the fit used {self.n_features_in_}"
            )
        return X

    def decision_function(self, X) -> np.ndarray:
        """Preactivation values; the decision boundary is the zero level set."""
        X = self._validate_for_predict(X)
        return np.asarray(preactivation(self.neuron_, X))

    def predict_proba(self, X) -> np.ndarray:
        """Column-stacked (P(class 0), P(class 1)) from the sigmoid output."""
        X = self._validate_for_predict(X)
        p = np.asarray(forward(self.neuron_, X, self.activation_))
        return np.column_stack([1.0 - p, p])

    def predict(self, X) -> np.ndarray:
        """Class bits at the configured threshold (ties go to class 0)."""
        X = self._validate_for_predict(X)
        return classify(forward(self.neuron_, X, self.activation_), self.threshold)
