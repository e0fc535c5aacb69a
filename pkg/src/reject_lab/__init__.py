"""Binary Bayes and mutual-information classifiers with a reject option on exact class models."""

from .bayes_rule import (
    CostMatrix,
    OutcomeReport,
    bayes_classify,
    bayes_regions,
    costs_from_thresholds,
    crossover_points,
    demonstrate_redundancy,
    evaluate,
    gaussian_boundaries,
    imbalance_sweep,
    rejection_scenario,
    thresholds_from_costs,
)
from .cost_analysis import degenerate_risk_targets, equivalence_class, independent_parameter_count, validate_costs
from .distributions import ClassPrior, GaussianClassModel, OverlapCase, UniformClassModel
from .errors import (
    ConstraintViolation,
    DegenerateTarget,
    DegenerateThresholds,
    InconsistentInput,
    InconsistentPair,
    RejectLabError,
    ZeroMixtureDensity,
)
from .info_bounds import binary_entropy, bounds, bounds_scatter, modified_lower_bound
from .information import AugmentedConfusionMatrix, JointDistribution, entropy_prior, ni
from .mc_oracle import empirical_outcome, sample
from .mi_classifier import MISolution, equivalent_thresholds, mi_imbalance_sweep, mi_optimize
from .regions import Decision, DecisionRegions, RejectThresholds

__all__ = [
    "AugmentedConfusionMatrix",
    "ClassPrior",
    "ConstraintViolation",
    "CostMatrix",
    "Decision",
    "DecisionRegions",
    "DegenerateTarget",
    "DegenerateThresholds",
    "GaussianClassModel",
    "InconsistentInput",
    "InconsistentPair",
    "JointDistribution",
    "MISolution",
    "OutcomeReport",
    "OverlapCase",
    "RejectLabError",
    "RejectThresholds",
    "UniformClassModel",
    "ZeroMixtureDensity",
    "bayes_classify",
    "bayes_regions",
    "binary_entropy",
    "bounds",
    "bounds_scatter",
    "costs_from_thresholds",
    "crossover_points",
    "degenerate_risk_targets",
    "demonstrate_redundancy",
    "empirical_outcome",
    "entropy_prior",
    "equivalence_class",
    "equivalent_thresholds",
    "evaluate",
    "gaussian_boundaries",
    "imbalance_sweep",
    "independent_parameter_count",
    "mi_imbalance_sweep",
    "mi_optimize",
    "modified_lower_bound",
    "ni",
    "rejection_scenario",
    "sample",
    "thresholds_from_costs",
    "validate_costs",
]
