"""Benchmark use cases."""

from .bench_usecase_factory import BenchUseCaseFactory
from .measure_execution_time_usecase import MeasureExecutionTimeUseCase
from .normalize_and_rank_usecase import (
	NormalizeAndRankUseCase,
	competition_ranks,
	min_max_normalize,
)
from .pareto_front_usecase import ParetoFrontUseCase
from .run_benchmark_usecase import RunBenchmarkUseCase, run_key
from .run_complexity_analysis_usecase import RunComplexityAnalysisUseCase
from .save_runs_usecase import SaveRunsUseCase

__all__ = [
	"BenchUseCaseFactory",
	"MeasureExecutionTimeUseCase",
	"NormalizeAndRankUseCase",
	"ParetoFrontUseCase",
	"RunBenchmarkUseCase",
	"RunComplexityAnalysisUseCase",
	"SaveRunsUseCase",
	"competition_ranks",
	"min_max_normalize",
	"run_key",
]
