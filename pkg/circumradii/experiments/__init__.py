"""Experiments init."""

from .base import BaseExperiment, BaseExperimentConfig
from .bezout import Bezout, BezoutConfig, experiment_bezout
from .curve_cases import CurveCases, CurveCasesConfig, experiment_curve_cases
from .gap_cases import GapCases, GapCasesConfig, experiment_gap_cases
from .generators import (
    GeneratorConfig,
    LatticeGenerator,
    ParabolaGenerator,
    generate_instance,
)
from .records import ExperimentRecord
from .search import ExtremalSearch, SearchConfig, SearchResult, search_extremal
from .small_cases import SmallCases, SmallCasesConfig, experiment_small_cases

__all__ = [
    "BaseExperiment",
    "BaseExperimentConfig",
    "Bezout",
    "BezoutConfig",
    "CurveCases",
    "CurveCasesConfig",
    "ExperimentRecord",
    "ExtremalSearch",
    "GapCases",
    "GapCasesConfig",
    "GeneratorConfig",
    "LatticeGenerator",
    "ParabolaGenerator",
    "SearchConfig",
    "SearchResult",
    "SmallCases",
    "SmallCasesConfig",
    "experiment_bezout",
    "experiment_curve_cases",
    "experiment_gap_cases",
    "experiment_small_cases",
    "generate_instance",
    "search_extremal",
]
