"""Neuron parameterizations, preactivations, and the sigmoid activation.

Three neuron kinds are supported:

* ``LinearNeuron`` -- the classic affine unit ``f(x) = w.x + b``.
* ``FactoredQuadraticNeuron`` -- a product of two affine forms plus a
  weighted sum of squared inputs plus a constant (3n + 3 parameters).
* ``GeneralQuadraticNeuron`` -- a full quadratic polynomial in the inputs,
  stored as the upper triangle of a symmetric coefficient matrix
  (n(n+1)/2 + n + 1 parameters).

All types are immutable after construction and every operation here is a
pure function, so everything is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit


def _param_vector(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must have at least one entry")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    arr.flags.writeable = False
    return arr


def _finite_scalar(value, name: str) -> float:
    value = float(value)
    if not np.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value}")
    return value


def _check_dimension(expected: int, x: np.ndarray, kind: str) -> None:
    if x.shape[-1] != expected:
        raise ValueError(
            f"{kind} expects inputs of dimension {expected}, got {x.shape[-1]}"
        )


def _prepare_inputs(x) -> tuple[np.ndarray, bool]:
    """Normalize ``x`` to a 2-D (m, n) array; remember if it was a single vector."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 1:
        return arr[np.newaxis, :], True
    if arr.ndim == 2:
        return arr, False
    raise ValueError(f"inputs must be a vector or a 2-D array, got shape {arr.shape}")


@dataclass(frozen=True)
class SigmoidActivation:
    """Logistic activation ``t -> 1 / (1 + exp(-beta * t))``, beta > 0."""

    beta: float = 1.0

    def __post_init__(self):
        beta = _finite_scalar(self.beta, "beta")
        if beta <= 0:
            raise ValueError(f"beta must be strictly positive, got {beta}")
        object.__setattr__(self, "beta", beta)


DEFAULT_ACTIVATION = SigmoidActivation()


@dataclass(frozen=True)
class LinearNeuron:
    """Affine unit: ``f(x) = sum_i w_i x_i + b``."""

    w: np.ndarray
    b: float

    def __post_init__(self):
        object.__setattr__(self, "w", _param_vector(self.w, "w"))
        object.__setattr__(self, "b", _finite_scalar(self.b, "b"))

    @property
    def n(self) -> int:
        return self.w.size

    @classmethod
    def zeros(cls, n: int) -> "LinearNeuron":
        return cls(w=np.zeros(n), b=0.0)


@dataclass(frozen=True)
class FactoredQuadraticNeuron:
    """Quadratic unit built from two affine factors and a square term.

    ``f(x) = (w_r.x + b1) * (w_g.x + b2) + w_b.x^2 + c``
    """

    w_r: np.ndarray
    w_g: np.ndarray
    w_b: np.ndarray
    b1: float
    b2: float
    c: float

    def __post_init__(self):
        object.__setattr__(self, "w_r", _param_vector(self.w_r, "w_r"))
        object.__setattr__(self, "w_g", _param_vector(self.w_g, "w_g"))
        object.__setattr__(self, "w_b", _param_vector(self.w_b, "w_b"))
        if not (self.w_r.size == self.w_g.size == self.w_b.size):
            raise ValueError(
                "w_r, w_g, w_b must share one dimension, got "
                f"{self.w_r.size}, {self.w_g.size}, {self.w_b.size}"
            )
        object.__setattr__(self, "b1", _finite_scalar(self.b1, "b1"))
        object.__setattr__(self, "b2", _finite_scalar(self.b2, "b2"))
        object.__setattr__(self, "c", _finite_scalar(self.c, "c"))

    @property
    def n(self) -> int:
        return self.w_r.size

    @classmethod
    def zeros(cls, n: int) -> "FactoredQuadraticNeuron":
        z = np.zeros(n)
        return cls(w_r=z, w_g=z, w_b=z, b1=0.0, b2=0.0, c=0.0)


def triangle_size(n: int) -> int:
    """Number of entries in the upper triangle (diagonal included) of n x n."""
    return n * (n + 1) // 2


def triangle_index(i: int, j: int, n: int) -> int:
    """Flat index of entry (i, j), i <= j, in the row-major upper triangle."""
    if not 0 <= i <= j < n:
        raise ValueError(f"need 0 <= i <= j < n, got i={i}, j={j}, n={n}")
    return i * n - i * (i - 1) // 2 + (j - i)


def triangle_indices(n: int) -> list[tuple[int, int]]:
    """(i, j) pairs, i <= j, in row-major order."""
    return [(i, j) for i in range(n) for j in range(i, n)]


@dataclass(frozen=True)
class GeneralQuadraticNeuron:
    """Full quadratic unit: ``f(x) = sum_{i<=j} a_ij x_i x_j + b.x + c``.

    ``a`` holds the upper triangle (diagonal included) of the quadratic
    coefficient matrix in row-major order.  An off-diagonal entry a_ij is
    the single stored coefficient of the unordered cross term x_i * x_j,
    i.e. the sum of the two symmetric matrix entries; a diagonal entry
    a_ii multiplies x_i squared.
    """

    a: np.ndarray
    b: np.ndarray
    c: float

    def __post_init__(self):
        object.__setattr__(self, "b", _param_vector(self.b, "b"))
        object.__setattr__(self, "a", _param_vector(self.a, "a"))
        n = self.b.size
        if self.a.size != triangle_size(n):
            raise ValueError(
                f"a must hold the upper triangle for n={n} "
                f"({triangle_size(n)} entries), got {self.a.size}"
            )
        object.__setattr__(self, "c", _finite_scalar(self.c, "c"))

    @property
    def n(self) -> int:
        return self.b.size

    @classmethod
    def zeros(cls, n: int) -> "GeneralQuadraticNeuron":
        return cls(a=np.zeros(triangle_size(n)), b=np.zeros(n), c=0.0)

    def coefficient(self, i: int, j: int) -> float:
        """Stored coefficient of x_i * x_j (order of i, j irrelevant)."""
        if i > j:
            i, j = j, i
        return float(self.a[triangle_index(i, j, self.n)])

    def quadratic_matrix(self) -> np.ndarray:
        """The coefficients as an upper-triangular n x n matrix."""
        n = self.n
        q = np.zeros((n, n))
        for idx, (i, j) in enumerate(triangle_indices(n)):
            q[i, j] = self.a[idx]
        return q


Neuron = LinearNeuron | FactoredQuadraticNeuron | GeneralQuadraticNeuron


def linear_preactivation(neuron: LinearNeuron, x):
    """``w.x + b`` for one input vector or a stack of them."""
    xs, single = _prepare_inputs(x)
    _check_dimension(neuron.n, xs, "LinearNeuron")
    out = xs @ neuron.w + neuron.b
    return float(out[0]) if single else out


def factored_preactivation(neuron: FactoredQuadraticNeuron, x):
    """``(w_r.x + b1)(w_g.x + b2) + w_b.x^2 + c``."""
    xs, single = _prepare_inputs(x)
    _check_dimension(neuron.n, xs, "FactoredQuadraticNeuron")
    r = xs @ neuron.w_r + neuron.b1
    g = xs @ neuron.w_g + neuron.b2
    square = (xs * xs) @ neuron.w_b
    out = r * g + square + neuron.c
    return float(out[0]) if single else out


def general_preactivation(neuron: GeneralQuadraticNeuron, x):
    """``sum_{i<=j} a_ij x_i x_j + b.x + c``."""
    xs, single = _prepare_inputs(x)
    _check_dimension(neuron.n, xs, "GeneralQuadraticNeuron")
    q = neuron.quadratic_matrix()
    cross = np.einsum("ki,kj,ij->k", xs, xs, q)
    out = cross + xs @ neuron.b + neuron.c
    return float(out[0]) if single else out


def preactivation(neuron: Neuron, x):
    """Dispatch to the preactivation of the given neuron kind."""
    if isinstance(neuron, LinearNeuron):
        return linear_preactivation(neuron, x)
    if isinstance(neuron, FactoredQuadraticNeuron):
        return factored_preactivation(neuron, x)
    if isinstance(neuron, GeneralQuadraticNeuron):
        return general_preactivation(neuron, x)
    raise TypeError(f"unsupported neuron type: {type(neuron).__name__}")


def sigmoid(t, act: SigmoidActivation = DEFAULT_ACTIVATION):
    """``1 / (1 + exp(-beta * t))``; saturates gracefully at the float limits."""
    return expit(act.beta * np.asarray(t, dtype=np.float64))


def sigmoid_derivative(t, act: SigmoidActivation = DEFAULT_ACTIVATION):
    """``beta * sigmoid(t) * (1 - sigmoid(t))``."""
    s = sigmoid(t, act)
    return act.beta * s * (1.0 - s)


def forward(neuron: Neuron, x, act: SigmoidActivation = DEFAULT_ACTIVATION):
    """Neuron output ``sigmoid(preactivation(x))``, in (0, 1)."""
    return sigmoid(preactivation(neuron, x), act)


def classify(output, threshold: float = 0.5):
    """Map outputs to bits: 1 where output > threshold, else 0.

    The boundary case (output exactly equal to the threshold) maps to 0.
    """
    arr = np.asarray(output)
    bits = (arr > threshold).astype(np.int64)
    return int(bits) if arr.ndim == 0 else bits


def linear_to_factored(neuron: LinearNeuron) -> FactoredQuadraticNeuron:
    """Embed an affine unit as a quadratic one with identical outputs."""
    n = neuron.n
    return FactoredQuadraticNeuron(
        w_r=neuron.w,
        w_g=np.zeros(n),
        w_b=np.zeros(n),
        b1=neuron.b,
        b2=1.0,
        c=0.0,
    )


def factored_to_general(neuron: FactoredQuadraticNeuron) -> GeneralQuadraticNeuron:
    """Expand the factored form into the general quadratic form, exactly.

    For i < j the stored cross coefficient is ``w_ir w_jg + w_jr w_ig``; the
    diagonal is ``w_ir w_ig + w_ib``; the linear part is ``b2 w_r + b1 w_g``;
    the constant is ``b1 b2 + c``.
    """
    n = neuron.n
    a = np.zeros(triangle_size(n))
    for idx, (i, j) in enumerate(triangle_indices(n)):
        if i == j:
            a[idx] = neuron.w_r[i] * neuron.w_g[i] + neuron.w_b[i]
        else:
            a[idx] = neuron.w_r[i] * neuron.w_g[j] + neuron.w_r[j] * neuron.w_g[i]
    b = neuron.b2 * neuron.w_r + neuron.b1 * neuron.w_g
    c = neuron.b1 * neuron.b2 + neuron.c
    return GeneralQuadraticNeuron(a=a, b=b, c=c)


def parameter_names(neuron: Neuron) -> list[str]:
    """Stable names for the entries of the flat parameter vector."""
    if isinstance(neuron, LinearNeuron):
        return [f"w[{i}]" for i in range(neuron.n)] + ["b"]
    if isinstance(neuron, FactoredQuadraticNeuron):
        n = neuron.n
        return (
            [f"w_r[{i}]" for i in range(n)]
            + [f"w_g[{i}]" for i in range(n)]
            + [f"w_b[{i}]" for i in range(n)]
            + ["b1", "b2", "c"]
        )
    if isinstance(neuron, GeneralQuadraticNeuron):
        return (
            [f"a[{i},{j}]" for i, j in triangle_indices(neuron.n)]
            + [f"b[{k}]" for k in range(neuron.n)]
            + ["c"]
        )
    raise TypeError(f"unsupported neuron type: {type(neuron).__name__}")


def parameters_to_vector(neuron: Neuron) -> np.ndarray:
    """Flatten a neuron's parameters in the canonical order of parameter_names."""
    if isinstance(neuron, LinearNeuron):
        return np.concatenate([neuron.w, [neuron.b]])
    if isinstance(neuron, FactoredQuadraticNeuron):
        return np.concatenate(
            [neuron.w_r, neuron.w_g, neuron.w_b, [neuron.b1, neuron.b2, neuron.c]]
        )
    if isinstance(neuron, GeneralQuadraticNeuron):
        return np.concatenate([neuron.a, neuron.b, [neuron.c]])
    raise TypeError(f"unsupported neuron type: {type(neuron).__name__}")


def neuron_from_vector(like: Neuron, vector: np.ndarray) -> Neuron:
    """Rebuild a neuron of the same kind and dimension from a flat vector."""
    vec = np.asarray(vector, dtype=np.float64)
    expected = parameters_to_vector(like).size
    if vec.shape != (expected,):
        raise ValueError(
            f"parameter vector must have shape ({expected},), got {vec.shape}"
        )
    n = like.n
    if isinstance(like, LinearNeuron):
        return LinearNeuron(w=vec[:n], b=vec[n])
    if isinstance(like, FactoredQuadraticNeuron):
        return FactoredQuadraticNeuron(
            w_r=vec[:n],
            w_g=vec[n : 2 * n],
            w_b=vec[2 * n : 3 * n],
            b1=vec[3 * n],
            b2=vec[3 * n + 1],
            c=vec[3 * n + 2],
        )
    if isinstance(like, GeneralQuadraticNeuron):
        t = triangle_size(n)
        return GeneralQuadraticNeuron(a=vec[:t], b=vec[t : t + n], c=vec[t + n])
    raise TypeError(f"unsupported neuron type: {type(like).__name__}")
