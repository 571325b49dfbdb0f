"""The bundled classification experiments and the harness that runs them.

Each experiment pairs a fixed initial neuron with a deterministic dataset
recipe and a training config.  Running one trains the neuron, measures the
training accuracy at threshold 0.5, rasterizes the decision surface, and
writes four artifacts into the output directory: the trained model file,
the raster as CSV and PGM, and a plain-text summary.  Runs are
deterministic end to end, so repeated runs produce byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable

import numpy as np

from .data import (
    CloudSpec,
    Dataset,
    RingSpec,
    concentric_rings,
    fuzzy_gate_cloud,
    gate_truth_table,
)
from .model_io import save_model
from .neurons import (
    FactoredQuadraticNeuron,
    GeneralQuadraticNeuron,
    Neuron,
    SigmoidActivation,
    classify,
    forward,
)
from .raster import (
    DEFAULT_RESOLUTION,
    GATE_BOUNDS,
    RING_BOUNDS,
    Bounds,
    export_raster_csv,
    export_raster_pgm,
    grid_raster,
)
from .training import TrainingConfig, TrainReport, train


def evaluate_accuracy(
    neuron: Neuron,
    act: SigmoidActivation,
    dataset: Dataset,
    threshold: float = 0.5,
) -> float:
    """Fraction of samples classified correctly at the given threshold.

    Fuzzy labels are thresholded at 0.5 first, with the same boundary
    convention as classify (exactly 0.5 maps to class 0).
    """
    if len(dataset) == 0:
        raise ValueError("evaluate_accuracy needs a non-empty dataset")
    predicted = classify(forward(neuron, dataset.X, act), threshold)
    target = classify(dataset.y)
    return float(np.mean(predicted == target))


@dataclass(frozen=True)
class ExperimentSpec:
    """A named experiment: published starting point, dataset recipe, config."""

    name: str
    description: str
    initial_neuron: Neuron
    make_dataset: Callable[[], Dataset]
    config: TrainingConfig
    bounds: Bounds
    reference_iterations: int | None = None


_EXPERIMENT_CONFIG = TrainingConfig(eta=0.5, max_iters=10000, loss_tol=1e-3, mode="batch")

# The batch gradient is a sum over samples, so the workable step size shrinks
# as the dataset grows; the two 100+-sample experiments need a smaller eta.
_LARGE_DATASET_CONFIG = replace(_EXPERIMENT_CONFIG, eta=0.2)


def _experiment_list() -> tuple[ExperimentSpec, ...]:
    return (
        ExperimentSpec(
            name="xor",
            description="XOR truth table, factored quadratic neuron",
            initial_neuron=FactoredQuadraticNeuron(
                w_r=[-0.4, -0.4], w_g=[0.2, 1.0], w_b=[0.0, 0.0],
                b1=-0.9095, b2=-0.6426, c=0.0,
            ),
            make_dataset=lambda: gate_truth_table("XOR"),
            config=_EXPERIMENT_CONFIG,
            bounds=GATE_BOUNDS,
            reference_iterations=180,
        ),
        ExperimentSpec(
            name="xor-like",
            description="jittered XOR corner clouds, factored quadratic neuron",
            initial_neuron=FactoredQuadraticNeuron(
                w_r=[0.07994, -0.2119], w_g=[0.06049, -0.144], w_b=[0.0, 0.0],
                b1=-0.9095, b2=-0.6426, c=0.0,
            ),
            make_dataset=lambda: fuzzy_gate_cloud(CloudSpec()),
            config=_LARGE_DATASET_CONFIG,
            bounds=GATE_BOUNDS,
            reference_iterations=100,
        ),
        ExperimentSpec(
            name="nand",
            description="NAND truth table, factored quadratic neuron",
            initial_neuron=FactoredQuadraticNeuron(
                w_r=[0.4, -0.1], w_g=[0.3, 0.1], w_b=[0.0, 0.0],
                b1=0.0, b2=0.0, c=1.3,
            ),
            make_dataset=lambda: gate_truth_table("NAND"),
            config=_EXPERIMENT_CONFIG,
            bounds=GATE_BOUNDS,
            reference_iterations=300,
        ),
        ExperimentSpec(
            name="nor",
            description="NOR truth table, factored quadratic neuron",
            initial_neuron=FactoredQuadraticNeuron(
                w_r=[-1.0, 1.0], w_g=[1.0, -2.0], w_b=[0.0, 0.0],
                b1=-0.5, b2=1.0, c=0.0,
            ),
            make_dataset=lambda: gate_truth_table("NOR"),
            config=_EXPERIMENT_CONFIG,
            bounds=GATE_BOUNDS,
            reference_iterations=100,
        ),
        ExperimentSpec(
            name="rings",
            description="two concentric rings, factored quadratic neuron",
            initial_neuron=FactoredQuadraticNeuron(
                w_r=[0.04, 0.01], w_g=[0.03, -0.01], w_b=[0.0, 0.4],
                b1=0.1, b2=0.2, c=1.3,
            ),
            make_dataset=lambda: concentric_rings(RingSpec()),
            config=_LARGE_DATASET_CONFIG,
            bounds=RING_BOUNDS,
        ),
        ExperimentSpec(
            name="or-general",
            description="OR truth table, general quadratic neuron",
            initial_neuron=GeneralQuadraticNeuron(
                a=[0.1, 0.1, 0.1], b=[1.0, 1.0], c=0.1,
            ),
            make_dataset=lambda: gate_truth_table("OR"),
            config=_EXPERIMENT_CONFIG,
            bounds=GATE_BOUNDS,
        ),
    )


EXPERIMENTS: dict[str, ExperimentSpec] = {spec.name: spec for spec in _experiment_list()}


def get_experiment(name: str) -> ExperimentSpec:
    spec = EXPERIMENTS.get(name)
    if spec is None:
        raise ValueError(f"unknown experiment {name!r}; expected one of {sorted(EXPERIMENTS)}")
    return spec


@dataclass(frozen=True)
class ExperimentResult:
    """What an experiment run produced, plus where the artifacts went."""

    name: str
    report: TrainReport
    accuracy: float
    passed: bool
    model_path: Path
    raster_csv_path: Path
    raster_pgm_path: Path
    summary_path: Path


def _summary_lines(spec, config, dataset, report, act, accuracy, passed) -> list[str]:
    lines = [
        f"experiment: {spec.name}",
        f"description: {spec.description}",
        f"samples: {len(dataset)}",
        f"eta: {config.eta:.17g}",
        f"mode: {config.mode}",
        f"beta: {config.beta:.17g}",
        f"loss_tol: {config.loss_tol:.17g}",
        f"max_iters: {config.max_iters}",
        f"iterations_run: {report.iterations_run}",
    ]
    if spec.reference_iterations is not None:
        lines.append(f"reference_iterations: {spec.reference_iterations}")
    lines += [
        f"final_loss: {report.final_loss:.17g}",
        f"accuracy: {accuracy:.17g}",
        f"passed: {str(passed).lower()}",
    ]
    neuron = report.final_neuron
    if len(dataset) == 4 and dataset.n == 2:
        lines.append("corner_outputs:")
        for x, y in zip(dataset.X, dataset.y):
            out = forward(neuron, x, act)
            lines.append(
                f"  [{x[0]:g}, {x[1]:g}] -> {out:.17g} "
                f"(class {classify(out)}, target {classify(y)})"
            )
    else:
        lines.append("per_class_correct:")
        predicted = classify(forward(neuron, dataset.X, act))
        target = classify(dataset.y)
        for cls in (0, 1):
            mask = target == cls
            correct = int(np.sum(predicted[mask] == cls))
            lines.append(f"  class {cls}: {correct}/{int(np.sum(mask))}")
    return lines


def run_experiment(
    name_or_spec: str | ExperimentSpec,
    out_dir,
    *,
    eta: float | None = None,
    max_iters: int | None = None,
    loss_tol: float | None = None,
    mode: str | None = None,
    beta: float | None = None,
    resolution: int = DEFAULT_RESOLUTION,
) -> ExperimentResult:
    """Train an experiment from its published starting point and write artifacts.

    Keyword overrides replace individual training-config fields.  The result's
    passed flag is the experiment's acceptance predicate: every training
    sample classified correctly at threshold 0.5.
    """
    spec = get_experiment(name_or_spec) if isinstance(name_or_spec, str) else name_or_spec
    overrides = {
        key: value
        for key, value in (
            ("eta", eta), ("max_iters", max_iters), ("loss_tol", loss_tol),
            ("mode", mode), ("beta", beta),
        )
        if value is not None
    }
    config = replace(spec.config, **overrides) if overrides else spec.config
    act = config.activation
    dataset = spec.make_dataset()
    report = train(spec.initial_neuron, dataset, config)
    accuracy = evaluate_accuracy(report.final_neuron, act, dataset)
    passed = accuracy == 1.0

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    model_path = out_dir / f"{spec.name}_model.txt"
    raster_csv_path = out_dir / f"{spec.name}_raster.csv"
    raster_pgm_path = out_dir / f"{spec.name}_raster.pgm"
    summary_path = out_dir / f"{spec.name}_summary.txt"

    save_model(report.final_neuron, act, model_path)
    raster = grid_raster(report.final_neuron, act, spec.bounds, resolution)
    export_raster_csv(raster, raster_csv_path)
    export_raster_pgm(raster, raster_pgm_path)
    summary = _summary_lines(spec, config, dataset, report, act, accuracy, passed)
    summary_path.write_text("\n".join(summary) + "\n", encoding="ascii", newline="\n")

    return ExperimentResult(
        name=spec.name,
        report=report,
        accuracy=accuracy,
        passed=passed,
        model_path=model_path,
        raster_csv_path=raster_csv_path,
        raster_pgm_path=raster_pgm_path,
        summary_path=summary_path,
    )
