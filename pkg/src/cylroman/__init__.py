"""[k]-Roman domination on cylindrical grids C_m x P_n."""
from .bounds import (
    all_upper_bounds,
    asymptotic_slope,
    best_bound,
    crossover_threshold,
    lower_bound,
    region_grid,
    threshold_report,
    upper_bound,
)
from .constructions import construct, pattern_block, raw_labeling, unreduced_labeling
from .efficient import (
    EfficientDominatingSet,
    admits_efficient_characterization,
    exists_constant_sum_krdf,
    find_efficient_dominating_set,
)
from .errors import BudgetExceeded, ConstructionError, CylromanError, InputError, PreconditionError
from .exact import ExactResult, gamma, gamma_brute, gamma_profile_dp
from .grid import CylinderGrid
from .ids import CONSTRUCTION_IDS, BoundId, ConstructionId
from .labeling import Labeling, Violation, ViolationReport, is_valid_krdf, violations, weight
from .packing import PackingSet, is_packing, max_packing, packing_formula, packing_pattern

__all__ = [
    "BoundId", "BudgetExceeded", "CONSTRUCTION_IDS", "ConstructionError", "ConstructionId",
    "CylinderGrid", "CylromanError", "EfficientDominatingSet", "ExactResult", "InputError",
    "Labeling", "PackingSet", "PreconditionError", "Violation", "ViolationReport",
    "admits_efficient_characterization", "all_upper_bounds", "asymptotic_slope", "best_bound",
    "construct", "crossover_threshold", "exists_constant_sum_krdf",
    "find_efficient_dominating_set", "gamma", "gamma_brute", "gamma_profile_dp", "is_packing",
    "is_valid_krdf", "lower_bound", "max_packing", "packing_formula", "packing_pattern",
    "pattern_block", "raw_labeling", "region_grid", "threshold_report", "unreduced_labeling",
    "upper_bound", "violations", "weight",
]
