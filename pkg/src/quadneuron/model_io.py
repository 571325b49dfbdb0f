"""Text serialization of neurons.

A model file is a fixed sequence of ``name=value`` lines: the kind tag, the
input dimension, the activation's beta, then one line per parameter group
with comma-separated values.  Numbers are written with 17 significant
digits, so save followed by load reproduces the neuron exactly.

Example::

    kind=factored
    n=2
    beta=1
    w_r=-0.40000000000000002,-0.40000000000000002
    w_g=0.20000000000000001,1
    w_b=0,0
    b1=-0.90949999999999998
    b2=-0.64259999999999995
    c=0
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .neurons import (
    FactoredQuadraticNeuron,
    GeneralQuadraticNeuron,
    LinearNeuron,
    Neuron,
    SigmoidActivation,
    triangle_size,
)

_KIND_TAGS = {
    LinearNeuron: "linear",
    FactoredQuadraticNeuron: "factored",
    GeneralQuadraticNeuron: "general",
}

# Parameter-group lines per kind, with expected arity as a function of n.
_GROUPS = {
    "linear": (("w", lambda n: n), ("b", lambda n: 1)),
    "factored": (
        ("w_r", lambda n: n),
        ("w_g", lambda n: n),
        ("w_b", lambda n: n),
        ("b1", lambda n: 1),
        ("b2", lambda n: 1),
        ("c", lambda n: 1),
    ),
    "general": (
        ("a", lambda n: triangle_size(n)),
        ("b", lambda n: n),
        ("c", lambda n: 1),
    ),
}


def _fmt(values) -> str:
    return ",".join(f"{float(v):.17g}" for v in np.atleast_1d(values))


def save_model(neuron: Neuron, act: SigmoidActivation, path) -> None:
    """Write a neuron and its activation as a model file."""
    kind = _KIND_TAGS.get(type(neuron))
    if kind is None:
        raise TypeError(f"unsupported neuron type: {type(neuron).__name__}")
    lines = [f"kind={kind}", f"n={neuron.n}", f"beta={act.beta:.17g}"]
    if kind == "linear":
        lines += [f"w={_fmt(neuron.w)}", f"b={_fmt(neuron.b)}"]
    elif kind == "factored":
        lines += [
            f"w_r={_fmt(neuron.w_r)}",
            f"w_g={_fmt(neuron.w_g)}",
            f"w_b={_fmt(neuron.w_b)}",
            f"b1={_fmt(neuron.b1)}",
            f"b2={_fmt(neuron.b2)}",
            f"c={_fmt(neuron.c)}",
        ]
    else:
        lines += [f"a={_fmt(neuron.a)}", f"b={_fmt(neuron.b)}", f"c={_fmt(neuron.c)}"]
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii", newline="\n")


class _LineReader:
    def __init__(self, path, lines):
        self.path = path
        self.lines = lines
        self.pos = 0

    def take(self, expected_name: str) -> str:
        lineno = self.pos + 1
        if self.pos >= len(self.lines):
            raise ValueError(f"{self.path}: line {lineno}: missing '{expected_name}=...' line")
        line = self.lines[self.pos]
        self.pos += 1
        name, sep, value = line.partition("=")
        if not sep or name != expected_name:
            raise ValueError(
                f"{self.path}: line {lineno}: expected '{expected_name}=...', got {line!r}"
            )
        return value

    def take_floats(self, name: str, arity: int) -> np.ndarray:
        lineno = self.pos + 1
        raw = self.take(name)
        fields = raw.split(",")
        if len(fields) != arity:
            raise ValueError(
                f"{self.path}: line {lineno}: {name} expects {arity} value(s), got {len(fields)}"
            )
        try:
            return np.array([float(f) for f in fields])
        except ValueError:
            raise ValueError(
                f"{self.path}: line {lineno}: non-numeric value in {raw!r}"
            ) from None


def load_model(path) -> tuple[Neuron, SigmoidActivation]:
    """Read a model file back into a neuron and its activation."""
    text = Path(path).read_text(encoding="ascii")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    reader = _LineReader(path, lines)
    kind = reader.take("kind")
    if kind not in _GROUPS:
        raise ValueError(
            f"{path}: line 1: unknown kind {kind!r}; expected one of {sorted(_GROUPS)}"
        )
    raw_n = reader.take("n")
    try:
        n = int(raw_n)
    except ValueError:
        raise ValueError(f"{path}: line 2: n must be an integer, got {raw_n!r}") from None
    if n < 1:
        raise ValueError(f"{path}: line 2: n must be >= 1, got {n}")
    beta = float(reader.take_floats("beta", 1)[0])
    groups = {
        name: reader.take_floats(name, arity_fn(n)) for name, arity_fn in _GROUPS[kind]
    }
    if reader.pos != len(lines):
        raise ValueError(f"{path}: line {reader.pos + 1}: unexpected trailing content")
    act = SigmoidActivation(beta)
    if kind == "linear":
        return LinearNeuron(w=groups["w"], b=groups["b"][0]), act
    if kind == "factored":
        return (
            FactoredQuadraticNeuron(
                w_r=groups["w_r"],
                w_g=groups["w_g"],
                w_b=groups["w_b"],
                b1=groups["b1"][0],
                b2=groups["b2"][0],
                c=groups["c"][0],
            ),
            act,
        )
    return GeneralQuadraticNeuron(a=groups["a"], b=groups["b"], c=groups["c"][0]), act
