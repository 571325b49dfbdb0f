"""Command-line interface.

Subcommands: train, eval, grid, gradcheck, experiment.  Exit codes: 0 for
success (or a passing check/experiment), 1 when an acceptance predicate or
gradient check fails or training diverges, 2 for usage and I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .data import Sample, SplitMix64, load_csv
from .experiments import EXPERIMENTS, evaluate_accuracy, run_experiment
from .gradcheck import DEFAULT_STEP, DEFAULT_TOL_ABS, DEFAULT_TOL_REL, gradient_check
from .model_io import load_model, save_model
from .neurons import (
    FactoredQuadraticNeuron,
    GeneralQuadraticNeuron,
    LinearNeuron,
    SigmoidActivation,
    neuron_from_vector,
    parameters_to_vector,
)
from .raster import DEFAULT_RESOLUTION, export_raster_csv, export_raster_pgm, grid_raster
from .training import DivergenceError, TrainingConfig, dataset_loss, train

_FORMS = {
    "linear": LinearNeuron,
    "factored": FactoredQuadraticNeuron,
    "general": GeneralQuadraticNeuron,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadneuron",
        description="Train, evaluate, and inspect single quadratic neurons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="fit a neuron on a CSV dataset")
    p_train.add_argument("--data", required=True, help="dataset CSV (features then label)")
    p_train.add_argument("--neuron", choices=sorted(_FORMS), default="factored",
                         help="neuron form when initializing from zeros")
    p_train.add_argument("--init", default="zeros",
                         help="'zeros' or a model file to start from")
    p_train.add_argument("--eta", type=float, default=0.5)
    p_train.add_argument("--iters", type=int, default=10000)
    p_train.add_argument("--tol", type=float, default=0.0)
    p_train.add_argument("--mode", choices=["batch", "sample"], default="batch")
    p_train.add_argument("--beta", type=float, default=None,
                         help="sigmoid steepness (default: 1, or the init file's value)")
    p_train.add_argument("--out", required=True, help="path for the trained model file")

    p_eval = sub.add_parser("eval", help="accuracy and loss of a model on a dataset")
    p_eval.add_argument("--model", required=True)
    p_eval.add_argument("--data", required=True)
    p_eval.add_argument("--threshold", type=float, default=0.5)

    p_grid = sub.add_parser("grid", help="rasterize a model's decision surface")
    p_grid.add_argument("--model", required=True)
    p_grid.add_argument("--bounds", default="-0.5,1.5,-0.5,1.5",
                        help="xmin,xmax,ymin,ymax")
    p_grid.add_argument("--res", type=int, default=DEFAULT_RESOLUTION)
    p_grid.add_argument("--format", choices=["csv", "pgm"], default="csv")
    p_grid.add_argument("--out", required=True)

    p_check = sub.add_parser("gradcheck", help="validate analytic gradients numerically")
    p_check.add_argument("--neuron", choices=sorted(_FORMS), default="factored")
    p_check.add_argument("--n", type=int, default=2, help="input dimension")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--trials", type=int, default=100)
    p_check.add_argument("--step", type=float, default=DEFAULT_STEP)
    p_check.add_argument("--tol-rel", type=float, default=DEFAULT_TOL_REL)
    p_check.add_argument("--tol-abs", type=float, default=DEFAULT_TOL_ABS)

    p_exp = sub.add_parser("experiment", help="run a bundled experiment")
    p_exp.add_argument("name", choices=sorted(EXPERIMENTS))
    p_exp.add_argument("--outdir", default=".")
    p_exp.add_argument("--eta", type=float, default=None)
    p_exp.add_argument("--iters", type=int, default=None)
    p_exp.add_argument("--tol", type=float, default=None)
    p_exp.add_argument("--mode", choices=["batch", "sample"], default=None)
    p_exp.add_argument("--beta", type=float, default=None)
    p_exp.add_argument("--res", type=int, default=DEFAULT_RESOLUTION)

    return parser


def _cmd_train(args) -> int:
    dataset = load_csv(args.data)
    if args.init == "zeros":
        neuron = _FORMS[args.neuron].zeros(dataset.n)
        beta = 1.0 if args.beta is None else args.beta
    else:
        neuron, act = load_model(args.init)
        beta = act.beta if args.beta is None else args.beta
    config = TrainingConfig(eta=args.eta, max_iters=args.iters, loss_tol=args.tol,
                            mode=args.mode, beta=beta)
    report = train(neuron, dataset, config)
    save_model(report.final_neuron, config.activation, args.out)
    accuracy = evaluate_accuracy(report.final_neuron, config.activation, dataset)
    print(f"iterations: {report.iterations_run}")
    print(f"final loss: {report.final_loss:.17g}")
    print(f"training accuracy: {accuracy:.17g}")
    print(f"model written to {args.out}")
    return 0


def _cmd_eval(args) -> int:
    neuron, act = load_model(args.model)
    dataset = load_csv(args.data)
    accuracy = evaluate_accuracy(neuron, act, dataset, args.threshold)
    loss = dataset_loss(neuron, dataset, act)
    print(f"samples: {len(dataset)}")
    print(f"accuracy: {accuracy:.17g}")
    print(f"loss: {loss:.17g}")
    return 0


def _cmd_grid(args) -> int:
    neuron, act = load_model(args.model)
    parts = args.bounds.split(",")
    if len(parts) != 4:
        raise ValueError(f"--bounds expects xmin,xmax,ymin,ymax, got {args.bounds!r}")
    bounds = tuple(float(p) for p in parts)
    raster = grid_raster(neuron, act, bounds, args.res)
    if args.format == "csv":
        export_raster_csv(raster, args.out)
    else:
        export_raster_pgm(raster, args.out)
    print(f"{args.res}x{args.res} raster written to {args.out}")
    return 0


def _cmd_gradcheck(args) -> int:
    if args.n < 1:
        raise ValueError(f"--n must be >= 1, got {args.n}")
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    rng = SplitMix64(args.seed)
    template = _FORMS[args.neuron].zeros(args.n)
    size = parameters_to_vector(template).size
    act = SigmoidActivation()
    worst_rel = 0.0
    worst_abs = 0.0
    worst_name = ""
    failures = 0
    for _ in range(args.trials):
        params = [rng.uniform(-2.0, 2.0) for _ in range(size)]
        neuron = neuron_from_vector(template, params)
        x = [rng.uniform(-2.0, 2.0) for _ in range(args.n)]
        sample = Sample(x=x, y=rng.next_float())
        report = gradient_check(neuron, sample, act, h=args.step,
                                tol_rel=args.tol_rel, tol_abs=args.tol_abs)
        if not report.passed:
            failures += 1
        if report.max_relative_error > worst_rel:
            worst_rel = report.max_relative_error
            worst_name = report.worst_parameter
        worst_abs = max(worst_abs, report.max_absolute_error)
    print(f"trials: {args.trials}")
    print(f"max relative error: {worst_rel:.3e} (parameter {worst_name})")
    print(f"max absolute error: {worst_abs:.3e}")
    print(f"failures: {failures}")
    print("gradient check PASSED" if failures == 0 else "gradient check FAILED")
    return 0 if failures == 0 else 1


def _cmd_experiment(args) -> int:
    result = run_experiment(
        args.name,
        args.outdir,
        eta=args.eta,
        max_iters=args.iters,
        loss_tol=args.tol,
        mode=args.mode,
        beta=args.beta,
        resolution=args.res,
    )
    print(f"experiment: {result.name}")
    print(f"iterations: {result.report.iterations_run}")
    print(f"final loss: {result.report.final_loss:.17g}")
    print(f"accuracy: {result.accuracy:.17g}")
    print(f"artifacts in {Path(args.outdir)}")
    print("PASSED" if result.passed else "FAILED")
    return 0 if result.passed else 1


_COMMANDS = {
    "train": _cmd_train,
    "eval": _cmd_eval,
    "grid": _cmd_grid,
    "gradcheck": _cmd_gradcheck,
    "experiment": _cmd_experiment,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
