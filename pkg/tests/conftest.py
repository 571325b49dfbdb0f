"""Shared helpers: seeded random neurons and samples for property sweeps."""

import numpy as np

from quadneuron import (
    FactoredQuadraticNeuron,
    GeneralQuadraticNeuron,
    LinearNeuron,
    Sample,
    neuron_from_vector,
    parameters_to_vector,
)

KINDS = {
    "linear": LinearNeuron,
    "factored": FactoredQuadraticNeuron,
    "general": GeneralQuadraticNeuron,
}


def random_neuron(rng, kind, n, scale=2.0):
    """Neuron of the given kind with parameters uniform in [-scale, scale]."""
    zero = KINDS[kind].zeros(n)
    size = parameters_to_vector(zero).size
    return neuron_from_vector(zero, rng.uniform(-scale, scale, size))


def random_sample(rng, n, scale=2.0):
    """Sample with inputs uniform in [-scale, scale] and a fuzzy label."""
    return Sample(x=rng.uniform(-scale, scale, n), y=rng.uniform(0.0, 1.0))


def random_inputs(rng, count, n, scale=2.0):
    return rng.uniform(-scale, scale, (count, n))
