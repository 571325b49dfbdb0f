"""Single quadratic (second-order) neurons for small classification tasks.

A quadratic neuron feeds a degree-2 polynomial of its inputs through a
sigmoid, which lets one unit carve conic decision boundaries (line pairs,
parabolas, ellipses, hyperbolas) that no single affine unit can.  The
package bundles the neuron forms and their exact conversions, squared-error
gradient-descent training with analytic gradients, a finite-difference
gradient checker, deterministic dataset generators, decision-surface
rasterization, a scikit-learn compatible classifier, and a CLI.
"""

from .data import (
    CORNERS,
    CloudSpec,
    Dataset,
    RingSpec,
    Sample,
    SplitMix64,
    concentric_rings,
    fuzzy_gate_cloud,
    gate_labels,
    gate_truth_table,
    load_csv,
    save_csv,
)
from .estimator import QuadraticNeuronClassifier
from .experiments import (
    EXPERIMENTS,
    ExperimentResult,
    ExperimentSpec,
    evaluate_accuracy,
    get_experiment,
    run_experiment,
)
from .gradcheck import (
    GradCheckReport,
    ParameterCheck,
    finite_difference_gradient,
    gradient_check,
)
from .model_io import load_model, save_model
from .neurons import (
    DEFAULT_ACTIVATION,
    FactoredQuadraticNeuron,
    GeneralQuadraticNeuron,
    LinearNeuron,
    SigmoidActivation,
    classify,
    factored_preactivation,
    factored_to_general,
    forward,
    general_preactivation,
    linear_preactivation,
    linear_to_factored,
    parameter_names,
    parameters_to_vector,
    neuron_from_vector,
    preactivation,
    sigmoid,
    sigmoid_derivative,
    triangle_index,
    triangle_indices,
    triangle_size,
)
from .raster import (
    DEFAULT_RESOLUTION,
    GATE_BOUNDS,
    RING_BOUNDS,
    GridRaster,
    export_raster_csv,
    export_raster_pgm,
    grid_raster,
    pgm_pixel,
)
from .training import (
    DivergenceError,
    TrainReport,
    TrainingConfig,
    analytic_gradient,
    apply_update,
    dataset_gradient,
    dataset_loss,
    grad_factored,
    grad_general,
    grad_linear,
    sample_loss,
    train,
)

__version__ = "0.1.0"

__all__ = [
    "CORNERS",
    "CloudSpec",
    "Dataset",
    "DEFAULT_ACTIVATION",
    "DEFAULT_RESOLUTION",
    "DivergenceError",
    "EXPERIMENTS",
    "ExperimentResult",
    "ExperimentSpec",
    "FactoredQuadraticNeuron",
    "GATE_BOUNDS",
    "GeneralQuadraticNeuron",
    "GradCheckReport",
    "GridRaster",
    "LinearNeuron",
    "ParameterCheck",
    "QuadraticNeuronClassifier",
    "RING_BOUNDS",
    "RingSpec",
    "Sample",
    "SigmoidActivation",
    "SplitMix64",
    "TrainReport",
    "TrainingConfig",
    "analytic_gradient",
    "apply_update",
    "classify",
    "concentric_rings",
    "dataset_gradient",
    "dataset_loss",
    "evaluate_accuracy",
    "export_raster_csv",
    "export_raster_pgm",
    "factored_preactivation",
    "factored_to_general",
    "finite_difference_gradient",
    "forward",
    "fuzzy_gate_cloud",
    "gate_labels",
    "gate_truth_table",
    "general_preactivation",
    "get_experiment",
    "grad_factored",
    "grad_general",
    "grad_linear",
    "gradient_check",
    "grid_raster",
    "linear_preactivation",
    "linear_to_factored",
    "load_csv",
    "load_model",
    "neuron_from_vector",
    "parameter_names",
    "parameters_to_vector",
    "pgm_pixel",
    "preactivation",
    "run_experiment",
    "sample_loss",
    "save_csv",
    "save_model",
    "sigmoid",
    "sigmoid_derivative",
    "train",
    "triangle_index",
    "triangle_indices",
    "triangle_size",
]
